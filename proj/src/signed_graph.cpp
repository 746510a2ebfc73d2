#include "lce/signed_graph.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <string>

#include "lce/error.hpp"

namespace lce {

namespace {

std::string pair_text(const VertexPair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::vector<VertexPair> normalize_pairs(std::size_t n, std::span<const VertexPair> pairs,
                                        const char* label) {
  std::vector<VertexPair> out;
  out.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u >= n || v >= n) {
      throw Error(ErrorKind::range, std::string(label) + " pair " + pair_text({u, v}) +
                                        " has an endpoint outside 0.." +
                                        std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      throw Error(ErrorKind::loop, std::string(label) + " pair " + pair_text({u, v}) +
                                       " is a loop");
    }
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  if (auto it = std::adjacent_find(out.begin(), out.end()); it != out.end()) {
    throw Error(ErrorKind::duplicate,
                std::string(label) + " pair " + pair_text(*it) + " appears twice");
  }
  return out;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<VertexPair> edges) : n_(n), edges_(std::move(edges)) {
  offsets_.assign(n_ + 1, 0);
  for (auto [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (std::size_t x = 0; x < n_; ++x) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[x]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[x + 1]));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

Graph build_graph(std::size_t n, std::span<const VertexPair> edges) {
  return Graph(n, normalize_pairs(n, edges, "edge"));
}

SignedGraph::SignedGraph(std::size_t n, std::span<const VertexPair> positive,
                         std::span<const VertexPair> negative) {
  auto pos = normalize_pairs(n, positive, "positive");
  auto neg = normalize_pairs(n, negative, "negative");
  std::vector<VertexPair> common;
  std::set_intersection(pos.begin(), pos.end(), neg.begin(), neg.end(),
                        std::back_inserter(common));
  if (!common.empty()) {
    throw Error(ErrorKind::overlap,
                "pair " + pair_text(common.front()) + " is both positive and negative");
  }
  positive_ = Graph(n, std::move(pos));
  negative_ = Graph(n, std::move(neg));
  if (n <= kMaskVertices) {
    positive_masks_.assign(n, 0);
    negative_masks_.assign(n, 0);
    for (auto [u, v] : positive_.edges()) {
      positive_masks_[u] |= SubsetMask{1} << v;
      positive_masks_[v] |= SubsetMask{1} << u;
    }
    for (auto [u, v] : negative_.edges()) {
      negative_masks_[u] |= SubsetMask{1} << v;
      negative_masks_[v] |= SubsetMask{1} << u;
    }
  }
}

Sign SignedGraph::sign(Vertex u, Vertex v) const {
  if (positive_.adjacent(u, v)) return Sign::positive;
  if (negative_.adjacent(u, v)) return Sign::negative;
  return Sign::none;
}

SubsetMask SignedGraph::full_mask() const noexcept {
  return size() >= kMaskVertices ? ~SubsetMask{0} : (SubsetMask{1} << size()) - 1;
}

SignedGraph build_signed_graph(std::size_t n, std::span<const VertexPair> positive,
                               std::span<const VertexPair> negative) {
  return SignedGraph(n, positive, negative);
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<Vertex> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = static_cast<Vertex>(i);
  return from_sequence(std::move(seq));
}

Ordering Ordering::from_sequence(std::vector<Vertex> sequence) {
  Ordering ord;
  const std::size_t n = sequence.size();
  ord.position_.assign(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t rank = 0; rank < n; ++rank) {
    Vertex v = sequence[rank];
    if (v >= n) {
      throw Error(ErrorKind::bijection, "ordering entry " + std::to_string(v) +
                                            " is outside 0.." + std::to_string(n - 1));
    }
    if (ord.position_[v] != std::numeric_limits<std::size_t>::max()) {
      throw Error(ErrorKind::bijection, "vertex " + std::to_string(v) + " occurs twice");
    }
    ord.position_[v] = rank;
  }
  ord.sequence_ = std::move(sequence);
  return ord;
}

Ordering Ordering::reversed() const {
  std::vector<Vertex> seq(sequence_.rbegin(), sequence_.rend());
  return from_sequence(std::move(seq));
}

VerificationResult verify_embedding(const SignedGraph& g, const Ordering& ord) {
  if (ord.size() != g.size()) {
    throw Error(ErrorKind::bijection, "ordering has " + std::to_string(ord.size()) +
                                          " entries, graph has " +
                                          std::to_string(g.size()) + " vertices");
  }
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  for (Vertex u = 0; u < g.size(); ++u) {
    const std::size_t pu = ord.position(u);
    auto pos = g.positive().neighbors(u);
    auto neg = g.negative().neighbors(u);
    if (neg.empty() || pos.empty()) continue;

    std::size_t leftmost = none;
    std::size_t rightmost = none;
    for (Vertex w : pos) {
      std::size_t pw = ord.position(w);
      if (pw < pu && (leftmost == none || pw < leftmost)) leftmost = pw;
      if (pw > pu && (rightmost == none || pw > rightmost)) rightmost = pw;
    }

    if (leftmost != none) {
      for (Vertex u2 : neg) {
        std::size_t p2 = ord.position(u2);
        if (p2 > leftmost && p2 < pu) {
          for (Vertex u1 : pos) {
            if (ord.position(u1) < p2) return {Violation{u1, u2, u, Side::left}};
          }
        }
      }
    }
    if (rightmost != none) {
      for (Vertex u2 : neg) {
        std::size_t p2 = ord.position(u2);
        if (p2 < rightmost && p2 > pu) {
          for (Vertex u1 : pos) {
            if (ord.position(u1) > p2) return {Violation{u1, u2, u, Side::right}};
          }
        }
      }
    }
  }
  return {};
}

bool is_complete(const SignedGraph& g) noexcept {
  const std::size_t n = g.size();
  return g.positive().edge_count() + g.negative().edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> perm) {
  auto map = [&](const std::vector<VertexPair>& edges) {
    std::vector<VertexPair> out;
    out.reserve(edges.size());
    for (auto [u, v] : edges) out.emplace_back(perm[u], perm[v]);
    return out;
  };
  auto pos = map(g.positive_edges());
  auto neg = map(g.negative_edges());
  return SignedGraph(g.size(), pos, neg);
}

}  // namespace lce
