#pragma once

// Line-oriented text formats. Lines starting with 'c' are comments; ids are
// 1-based in files and 0-based in memory.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lce/proper_interval.hpp"
#include "lce/reductions.hpp"
#include "lce/signed_graph.hpp"

namespace lce::io {

enum class InstanceKind { signed_graph, cnf, set_system, digraph };

/// Kind named by the first `p` header; throws ParseError when there is none.
InstanceKind detect_kind(std::string_view text);
const char* to_string(InstanceKind kind) noexcept;

SignedGraph parse_signed_graph(std::istream& in);
void write_signed_graph(std::ostream& out, const SignedGraph& g);

CnfFormula parse_cnf(std::istream& in);
void write_cnf(std::ostream& out, const CnfFormula& formula);

SetSystem parse_set_system(std::istream& in);
void write_set_system(std::ostream& out, const SetSystem& system);

Digraph parse_digraph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& digraph);

/// `o v1 ... vn`, or `o INFEASIBLE` (returned as nullopt).
std::optional<Ordering> parse_ordering(std::istream& in, std::size_t n);
void write_ordering(std::ostream& out, const std::optional<Ordering>& ord);

IntervalModel parse_interval_model(std::istream& in, std::size_t n);
void write_interval_model(std::ostream& out, const IntervalModel& model);

/// `part 1 ...` and `part 2 ...`, or `part INFEASIBLE`.
std::optional<Partition> parse_partition(std::istream& in, std::size_t n);
void write_partition(std::ostream& out, const std::optional<Partition>& partition);

/// `x e1 ... ek`, or `x INFEASIBLE`.
std::optional<SplitterSolution> parse_splitter(std::istream& in, std::size_t universe);
void write_splitter(std::ostream& out, const std::optional<SplitterSolution>& x);

/// DIMACS `v` lines ending in 0, or `s UNSATISFIABLE`.
std::optional<Assignment> parse_assignment(std::istream& in, std::size_t num_vars);
void write_assignment(std::ostream& out, const std::optional<Assignment>& assignment);

/// One `p map` section per stage.
std::vector<ReductionMapping> parse_mappings(std::istream& in);
void write_mapping(std::ostream& out, const ReductionMapping& mapping);

std::string signed_graph_text(const SignedGraph& g);
SignedGraph signed_graph_from_text(std::string_view text);

}  // namespace lce::io
