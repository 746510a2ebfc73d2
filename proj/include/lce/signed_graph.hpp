#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lce {

/// Vertices are dense 0-based identifiers; files use 1-based ids.
using Vertex = std::uint32_t;
using VertexPair = std::pair<Vertex, Vertex>;

/// Vertex subset of a graph with at most 64 vertices, bit v set iff v is in it.
using SubsetMask = std::uint64_t;

inline constexpr std::size_t kMaskVertices = 64;

/// Plain undirected simple graph in compressed adjacency form.
class Graph {
 public:
  Graph() = default;

  /// Edges must already be normalized (u < v), sorted and unique.
  Graph(std::size_t n, std::vector<VertexPair> edges);

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<VertexPair>& edges() const noexcept { return edges_; }

  /// Sorted neighbour list of v.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

 private:
  std::size_t n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Build a plain graph from an arbitrary pair list, applying the same checks
/// as signed graphs (range, loop, duplicate).
Graph build_graph(std::size_t n, std::span<const VertexPair> edges);

enum class Sign { none, positive, negative };

/// The triple (V, E+, E-) with disjoint positive and negative edge sets.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Validates and normalizes; throws lce::Error on overlap, range, loop or
  /// duplicate pairs.
  SignedGraph(std::size_t n, std::span<const VertexPair> positive,
              std::span<const VertexPair> negative);

  std::size_t size() const noexcept { return positive_.size(); }
  const Graph& positive() const noexcept { return positive_; }
  const Graph& negative() const noexcept { return negative_; }
  const std::vector<VertexPair>& positive_edges() const noexcept { return positive_.edges(); }
  const std::vector<VertexPair>& negative_edges() const noexcept { return negative_.edges(); }

  Sign sign(Vertex u, Vertex v) const;

  /// Adjacency bitsets, available when size() <= 64.
  bool has_masks() const noexcept { return !positive_masks_.empty() || size() == 0; }
  SubsetMask positive_mask(Vertex v) const { return positive_masks_[v]; }
  SubsetMask negative_mask(Vertex v) const { return negative_masks_[v]; }
  std::span<const SubsetMask> positive_masks() const noexcept { return positive_masks_; }
  std::span<const SubsetMask> negative_masks() const noexcept { return negative_masks_; }

  /// Mask with the low size() bits set. Requires size() <= 64.
  SubsetMask full_mask() const noexcept;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.size() == b.size() && a.positive_edges() == b.positive_edges() &&
           a.negative_edges() == b.negative_edges();
  }

 private:
  Graph positive_;
  Graph negative_;
  std::vector<SubsetMask> positive_masks_;
  std::vector<SubsetMask> negative_masks_;
};

SignedGraph build_signed_graph(std::size_t n, std::span<const VertexPair> positive,
                               std::span<const VertexPair> negative);

/// A bijection between vertices and ranks 0..n-1.
class Ordering {
 public:
  Ordering() = default;

  static Ordering identity(std::size_t n);
  /// Throws ErrorKind::bijection unless sequence is a permutation of 0..n-1.
  static Ordering from_sequence(std::vector<Vertex> sequence);

  std::size_t size() const noexcept { return sequence_.size(); }
  Vertex at(std::size_t rank) const { return sequence_[rank]; }
  std::size_t position(Vertex v) const { return position_[v]; }
  std::span<const Vertex> sequence() const noexcept { return sequence_; }
  bool before(Vertex u, Vertex v) const { return position_[u] < position_[v]; }

  Ordering reversed() const;

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  std::vector<Vertex> sequence_;
  std::vector<std::size_t> position_;
};

enum class Side { left, right };

/// Witness for a broken condition: u1 and u2 on the same side of u, u2 between,
/// u1u positive and u2u negative.
struct Violation {
  Vertex u1 = 0;
  Vertex u2 = 0;
  Vertex u = 0;
  Side side = Side::left;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationResult {
  std::optional<Violation> violation;

  bool valid() const noexcept { return !violation.has_value(); }
};

/// Linear-time feasibility check. Reports the first violation ordered by u,
/// then left before right, then u2, then u1 (all by vertex id).
VerificationResult verify_embedding(const SignedGraph& g, const Ordering& ord);

bool is_complete(const SignedGraph& g) noexcept;

inline const Graph& positive_part(const SignedGraph& g) noexcept { return g.positive(); }

/// Relabel vertices: vertex v of g becomes perm[v].
SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> perm);

}  // namespace lce
