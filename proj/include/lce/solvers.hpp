#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lce/kernels.hpp"
#include "lce/signed_graph.hpp"

namespace lce {

/// Goodness of v for X, evaluated literally from the adjacency bitsets:
///  (a) no negative neighbour of v inside X has a positive neighbour outside X + v;
///  (b) no negative neighbour of v outside X + v has a positive neighbour inside X.
/// Throws ErrorKind::membership if v is in X.
bool is_good(const SignedGraph& g, Vertex v, SubsetMask x);

struct BruteForceOptions {
  std::size_t max_vertices = 10;
};

/// Lexicographically first feasible ordering. Orderings are enumerated in
/// lexicographic order; a prefix is abandoned as soon as it already holds a
/// violating triple, which leaves the result unchanged.
std::optional<Ordering> solve_bruteforce(const SignedGraph& g, const BruteForceOptions& options = {});

/// Hard limit: half tables grow as 2^(n/2), the reachability table as 2^n bytes.
inline constexpr std::size_t kDpHardCap = kernels::kMaxTableVertices;

struct DpOptions {
  std::size_t max_vertices = 30;
  /// Kernel instruction set; defaults to the best one available.
  std::optional<kernels::Isa> isa;
};

/// Reachability of every vertex subset from the empty set through good extensions.
class ReachabilityTable {
 public:
  ReachabilityTable() = default;
  ReachabilityTable(std::size_t vertex_count, std::vector<std::uint8_t> tags);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  bool reachable(SubsetMask x) const { return tags_[x] != 0; }
  /// Vertex whose addition reached x; empty for the empty set and unreachable sets.
  std::optional<Vertex> chosen(SubsetMask x) const;
  /// Walks chosen vertices back from the full set and emits them front to back. The
  /// walk is a good prefix order read backwards, which is feasible since reversal
  /// preserves feasibility. With the smallest chosen vertex kept, the result is the
  /// lexicographically first feasible ordering.
  std::optional<Ordering> reconstruct() const;

  static constexpr std::uint8_t kUnreached = 0;
  static constexpr std::uint8_t kRoot = 0xFF;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::uint8_t> tags_;
};

/// Fills the table in increasing subset order (every predecessor X \ {v} is
/// numerically smaller than X). When several vertices reach a set, the smallest one
/// is kept.
ReachabilityTable build_reachability_table(const SignedGraph& g, const DpOptions& options = {});

/// Exact O*(2^n) decision with a witness ordering, verified before it is returned.
std::optional<Ordering> solve_subset_dp(const SignedGraph& g, const DpOptions& options = {});

}  // namespace lce
