#pragma once

#include <cstddef>
#include <cstdint>

#include "lce/reductions.hpp"
#include "lce/signed_graph.hpp"

namespace lce::gen {

/// Each pair is positive with probability p_pos, negative with p_neg, absent otherwise.
SignedGraph random_signed_graph(std::size_t n, double p_pos, double p_neg, std::uint64_t seed);

/// Complete signed graph whose positive part is the intersection graph of unit
/// intervals with left ends drawn uniformly from [0, span), labelled by a random
/// permutation. Always feasible.
SignedGraph planted_complete(std::size_t n, double span, std::uint64_t seed);

/// Default span giving an expected positive degree of about 16.
double default_span(std::size_t n) noexcept;

/// Clauses of three distinct variables with independent random signs.
CnfFormula random_cnf(std::size_t num_vars, std::size_t num_clauses, std::uint64_t seed);

}  // namespace lce::gen
