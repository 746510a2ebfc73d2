#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lce/signed_graph.hpp"

namespace lce {

/// Exact rational number kept in lowest terms with a positive denominator.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct Interval {
  Fraction left;
  Fraction right;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// One closed interval per vertex, indexed by vertex id.
struct IntervalModel {
  std::vector<Interval> intervals;

  std::size_t size() const noexcept { return intervals.size(); }
  friend bool operator==(const IntervalModel&, const IntervalModel&) = default;
};

/// First and last vertex of each closed positive neighbourhood under an ordering.
struct NeighborhoodExtremes {
  std::vector<Vertex> first;
  std::vector<Vertex> last;
};

NeighborhoodExtremes neighborhood_extremes(const SignedGraph& g, const Ordering& ord);

/// Interval I_v = [p(v), p(last(v)) + p(v)/(n+1)] with 1-based ranks p.
/// Requires a complete graph and a feasible ordering; the result is checked to be a
/// proper model whose intersection graph is exactly the positive part.
IntervalModel ordering_to_model(const SignedGraph& g, const Ordering& ord);

/// Throws ErrorKind::invalid_model unless every interval has nonempty interior, all
/// endpoints are pairwise distinct and no interval contains another.
void validate_model(const IntervalModel& model);

/// True iff two intervals meet exactly when the corresponding vertices are adjacent.
bool model_represents(const IntervalModel& model, const Graph& graph);

/// Orders vertices by left endpoint after validating the model.
Ordering model_to_ordering(const IntervalModel& model);

/// Every closed neighbourhood occupies a consecutive block of the ordering.
bool is_umbrella_ordering(const Graph& graph, const Ordering& ord);

/// Lexicographic BFS with stable partition refinement. Ties go to the vertex that
/// comes first in `initial`.
std::vector<Vertex> lex_bfs(const Graph& graph, const std::vector<Vertex>& initial);

/// Returns an umbrella ordering when the graph is a proper interval graph.
/// Three LexBFS sweeps, each later sweep breaking ties by the previous one; the result
/// is returned only after it passes is_umbrella_ordering.
std::optional<Ordering> recognize_proper_interval(const Graph& graph);

/// Complete signed graphs only (ErrorKind::incomplete otherwise). A feasible
/// ordering exists iff the positive part is a proper interval graph.
std::optional<Ordering> solve_complete(const SignedGraph& g);

}  // namespace lce
