#include "lce/solvers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "lce/error.hpp"

namespace lce {

namespace {

void require_masks(const SignedGraph& g) {
  if (!g.has_masks()) {
    throw Error(ErrorKind::cap_exceeded,
                "subset operations need at most 64 vertices, got " + std::to_string(g.size()));
  }
}

class PrefixSearch {
 public:
  explicit PrefixSearch(const SignedGraph& g) : g_(g), rank_(g.size(), kUnplaced) {}

  bool run() { return extend(); }
  std::vector<Vertex> take() { return std::move(sequence_); }

 private:
  static constexpr std::size_t kUnplaced = static_cast<std::size_t>(-1);

  bool placed(Vertex v) const { return rank_[v] != kUnplaced; }

  // z was placed last, so it is the rightmost vertex of any new triple.
  bool consistent(Vertex z) const {
    std::size_t first_pos = kUnplaced;
    for (Vertex w : g_.positive().neighbors(z)) {
      if (placed(w)) first_pos = std::min(first_pos, rank_[w]);
    }
    if (first_pos != kUnplaced) {
      for (Vertex w : g_.negative().neighbors(z)) {
        if (placed(w) && rank_[w] > first_pos) return false;
      }
    }
    for (Vertex u : g_.positive().neighbors(z)) {
      if (!placed(u)) continue;
      for (Vertex w : g_.negative().neighbors(u)) {
        if (placed(w) && rank_[w] > rank_[u]) return false;
      }
    }
    return true;
  }

  bool extend() {
    if (sequence_.size() == g_.size()) return true;
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (placed(v)) continue;
      rank_[v] = sequence_.size();
      sequence_.push_back(v);
      if (consistent(v) && extend()) return true;
      sequence_.pop_back();
      rank_[v] = kUnplaced;
    }
    return false;
  }

  const SignedGraph& g_;
  std::vector<std::size_t> rank_;
  std::vector<Vertex> sequence_;
};

}  // namespace

bool is_good(const SignedGraph& g, Vertex v, SubsetMask x) {
  require_masks(g);
  const SubsetMask bit = SubsetMask{1} << v;
  if (x & bit) {
    throw Error(ErrorKind::membership, "vertex " + std::to_string(v) + " belongs to the set");
  }
  const SubsetMask rest = g.full_mask() & ~x & ~bit;
  for (SubsetMask enemies = g.negative_mask(v); enemies != 0; enemies &= enemies - 1) {
    const auto w = static_cast<Vertex>(std::countr_zero(enemies));
    const SubsetMask friends = g.positive_mask(w);
    if ((x >> w) & 1) {
      if (friends & rest) return false;
    } else {
      if (friends & x) return false;
    }
  }
  return true;
}

std::optional<Ordering> solve_bruteforce(const SignedGraph& g, const BruteForceOptions& options) {
  if (g.size() > options.max_vertices) {
    throw Error(ErrorKind::cap_exceeded, "brute force is capped at " +
                                             std::to_string(options.max_vertices) +
                                             " vertices, got " + std::to_string(g.size()));
  }
  PrefixSearch search(g);
  if (!search.run()) return std::nullopt;
  return Ordering::from_sequence(search.take());
}

ReachabilityTable::ReachabilityTable(std::size_t vertex_count, std::vector<std::uint8_t> tags)
    : vertex_count_(vertex_count), tags_(std::move(tags)) {}

std::optional<Vertex> ReachabilityTable::chosen(SubsetMask x) const {
  const std::uint8_t tag = tags_[x];
  if (tag == kUnreached || tag == kRoot) return std::nullopt;
  return static_cast<Vertex>(tag - 1);
}

std::optional<Ordering> ReachabilityTable::reconstruct() const {
  const SubsetMask full =
      vertex_count_ >= kMaskVertices ? ~SubsetMask{0} : (SubsetMask{1} << vertex_count_) - 1;
  if (!reachable(full)) return std::nullopt;
  std::vector<Vertex> sequence;
  sequence.reserve(vertex_count_);
  for (SubsetMask x = full; x != 0;) {
    const Vertex v = *chosen(x);
    sequence.push_back(v);
    x &= ~(SubsetMask{1} << v);
  }
  return Ordering::from_sequence(std::move(sequence));
}

ReachabilityTable build_reachability_table(const SignedGraph& g, const DpOptions& options) {
  const std::size_t n = g.size();
  const std::size_t cap = std::min(options.max_vertices, kDpHardCap);
  if (n > cap) {
    throw Error(ErrorKind::cap_exceeded, "subset dynamic program is capped at " +
                                             std::to_string(cap) + " vertices, got " +
                                             std::to_string(n));
  }
  const kernels::Isa isa = options.isa.value_or(kernels::best_isa());
  if (!kernels::isa_available(isa)) {
    throw std::invalid_argument(std::string("instruction set not available: ") +
                                kernels::to_string(isa));
  }
  const auto tables = kernels::make_goodness_tables(g);

  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::uint8_t> tags(subsets, ReachabilityTable::kUnreached);
  tags[0] = ReachabilityTable::kRoot;

  constexpr std::size_t kBlock = 64;
  std::array<SubsetMask, kBlock> good{};
  for (std::size_t base = 0; base < subsets; base += kBlock) {
    const std::size_t count = std::min(kBlock, subsets - base);
    // Entries of a block are only written from earlier subsets, so a block with no
    // reachable entry at this point stays unreachable.
    if (kernels::nonzero_mask(isa, tags.data() + base, count) == 0) continue;
    kernels::good_sets(isa, tables, base, count, good.data());
    for (std::size_t i = 0; i < count; ++i) {
      if (tags[base + i] == ReachabilityTable::kUnreached) continue;
      const SubsetMask x = base + i;
      // The last writer of a set comes from its largest predecessor, so the smallest
      // vertex is kept.
      for (SubsetMask next = good[i]; next != 0; next &= next - 1) {
        const auto v = static_cast<unsigned>(std::countr_zero(next));
        tags[x | (SubsetMask{1} << v)] = static_cast<std::uint8_t>(v + 1);
      }
    }
  }
  return ReachabilityTable(n, std::move(tags));
}

std::optional<Ordering> solve_subset_dp(const SignedGraph& g, const DpOptions& options) {
  auto table = build_reachability_table(g, options);
  auto ord = table.reconstruct();
  if (ord && !verify_embedding(g, *ord).valid()) {
    throw std::logic_error("subset dynamic program produced an infeasible ordering");
  }
  return ord;
}

}  // namespace lce
