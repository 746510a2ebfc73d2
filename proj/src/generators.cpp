#include "lce/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lce::gen {

namespace {

// mt19937_64 and these conversions are fully specified, so output is identical on
// every platform for a given seed.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

SignedGraph random_signed_graph(std::size_t n, double p_pos, double p_neg, std::uint64_t seed) {
  check_probability(p_pos, "p+");
  check_probability(p_neg, "p-");
  if (p_pos + p_neg > 1.0) throw std::invalid_argument("p+ + p- must not exceed 1");
  std::mt19937_64 rng(seed);
  std::vector<VertexPair> pos;
  std::vector<VertexPair> neg;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double draw = unit(rng);
      if (draw < p_pos) {
        pos.emplace_back(u, v);
      } else if (draw < p_pos + p_neg) {
        neg.emplace_back(u, v);
      }
    }
  }
  return SignedGraph(n, pos, neg);
}

double default_span(std::size_t n) noexcept {
  return std::max(1.0, static_cast<double>(n) / 8.0);
}

SignedGraph planted_complete(std::size_t n, double span, std::uint64_t seed) {
  if (!(span > 0.0)) throw std::invalid_argument("span must be positive");
  std::mt19937_64 rng(seed);
  std::vector<double> left(n);
  for (auto& x : left) x = unit(rng) * span;
  std::sort(left.begin(), left.end());
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(label[i - 1], label[below(rng, i)]);

  std::vector<VertexPair> pos;
  std::vector<VertexPair> neg;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (left[j] - left[i] < 1.0) {
        pos.emplace_back(label[i], label[j]);
      } else {
        neg.emplace_back(label[i], label[j]);
      }
    }
  }
  return SignedGraph(n, pos, neg);
}

CnfFormula random_cnf(std::size_t num_vars, std::size_t num_clauses, std::uint64_t seed) {
  if (num_clauses > 0 && num_vars < 3) {
    throw std::invalid_argument("three-literal clauses need at least 3 variables");
  }
  std::mt19937_64 rng(seed);
  CnfFormula formula;
  formula.num_vars = num_vars;
  for (std::size_t c = 0; c < num_clauses; ++c) {
    std::vector<Literal> clause;
    while (clause.size() < 3) {
      const auto var = static_cast<Literal>(1 + below(rng, num_vars));
      const bool taken = std::any_of(clause.begin(), clause.end(),
                                     [&](Literal lit) { return lit == var || lit == -var; });
      if (taken) continue;
      clause.push_back((rng() & 1) ? var : -var);
    }
    formula.clauses.push_back(std::move(clause));
  }
  return formula;
}

}  // namespace lce::gen
