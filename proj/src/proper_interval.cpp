#include "lce/proper_interval.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lce/error.hpp"

namespace lce {

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

std::string Fraction::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

NeighborhoodExtremes neighborhood_extremes(const SignedGraph& g, const Ordering& ord) {
  const std::size_t n = g.size();
  if (ord.size() != n) throw Error(ErrorKind::bijection, "ordering size does not match graph");
  NeighborhoodExtremes ext;
  ext.first.resize(n);
  ext.last.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex first = v;
    Vertex last = v;
    for (Vertex w : g.positive().neighbors(v)) {
      if (ord.before(w, first)) first = w;
      if (ord.before(last, w)) last = w;
    }
    ext.first[v] = first;
    ext.last[v] = last;
  }
  return ext;
}

void validate_model(const IntervalModel& model) {
  const std::size_t n = model.size();
  std::vector<Fraction> endpoints;
  endpoints.reserve(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& iv = model.intervals[v];
    if (!(iv.left < iv.right)) {
      throw Error(ErrorKind::invalid_model,
                  "interval of vertex " + std::to_string(v) + " has empty interior");
    }
    endpoints.push_back(iv.left);
    endpoints.push_back(iv.right);
  }
  std::sort(endpoints.begin(), endpoints.end());
  if (auto it = std::adjacent_find(endpoints.begin(), endpoints.end()); it != endpoints.end()) {
    throw Error(ErrorKind::invalid_model, "endpoint " + it->str() + " is shared");
  }
  std::vector<Vertex> by_left(n);
  std::iota(by_left.begin(), by_left.end(), Vertex{0});
  std::sort(by_left.begin(), by_left.end(), [&](Vertex a, Vertex b) {
    return model.intervals[a].left < model.intervals[b].left;
  });
  for (std::size_t i = 1; i < n; ++i) {
    if (model.intervals[by_left[i]].right < model.intervals[by_left[i - 1]].right) {
      throw Error(ErrorKind::invalid_model, "interval of vertex " +
                                                std::to_string(by_left[i]) +
                                                " lies inside interval of vertex " +
                                                std::to_string(by_left[i - 1]));
    }
  }
}

bool model_represents(const IntervalModel& model, const Graph& graph) {
  const std::size_t n = model.size();
  if (graph.size() != n) return false;
  std::vector<Vertex> by_left(n);
  std::iota(by_left.begin(), by_left.end(), Vertex{0});
  std::sort(by_left.begin(), by_left.end(), [&](Vertex a, Vertex b) {
    return model.intervals[a].left < model.intervals[b].left;
  });
  std::size_t meeting = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = model.intervals[by_left[i]];
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& b = model.intervals[by_left[j]];
      if (a.right < b.left) continue;
      if (!graph.adjacent(by_left[i], by_left[j])) return false;
      ++meeting;
    }
  }
  return meeting == graph.edge_count();
}

IntervalModel ordering_to_model(const SignedGraph& g, const Ordering& ord) {
  if (!is_complete(g)) throw Error(ErrorKind::incomplete, "signed graph is not complete");
  if (auto check = verify_embedding(g, ord); !check.valid()) {
    const auto& w = *check.violation;
    throw Error(ErrorKind::infeasible_ordering,
                "ordering violates the condition on vertex " + std::to_string(w.u));
  }
  const auto n = static_cast<std::int64_t>(g.size());
  const auto ext = neighborhood_extremes(g, ord);
  IntervalModel model;
  model.intervals.resize(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    auto rank = static_cast<std::int64_t>(ord.position(v)) + 1;
    auto last_rank = static_cast<std::int64_t>(ord.position(ext.last[v])) + 1;
    model.intervals[v] = {Fraction(rank, 1), Fraction(last_rank * (n + 1) + rank, n + 1)};
  }
  validate_model(model);
  if (!model_represents(model, g.positive())) {
    throw std::logic_error("interval model does not represent the positive part");
  }
  return model;
}

Ordering model_to_ordering(const IntervalModel& model) {
  validate_model(model);
  std::vector<Vertex> seq(model.size());
  std::iota(seq.begin(), seq.end(), Vertex{0});
  std::sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) {
    return model.intervals[a].left < model.intervals[b].left;
  });
  return Ordering::from_sequence(std::move(seq));
}

bool is_umbrella_ordering(const Graph& graph, const Ordering& ord) {
  if (ord.size() != graph.size()) return false;
  for (Vertex v = 0; v < graph.size(); ++v) {
    std::size_t lo = ord.position(v);
    std::size_t hi = lo;
    for (Vertex w : graph.neighbors(v)) {
      lo = std::min(lo, ord.position(w));
      hi = std::max(hi, ord.position(w));
    }
    if (hi - lo != graph.degree(v)) return false;
  }
  return true;
}

std::vector<Vertex> lex_bfs(const Graph& graph, const std::vector<Vertex>& initial) {
  const std::size_t n = graph.size();
  std::vector<Vertex> order = initial;
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  // Classes are contiguous ranges of `order`; the unvisited suffix is covered by
  // classes listed in left-to-right order.
  struct Range {
    std::size_t begin;
    std::size_t end;
  };
  std::vector<Range> classes;
  std::vector<std::size_t> class_of(n, 0);
  if (n > 0) classes.push_back({0, n});

  std::vector<char> marked(n, 0);
  std::vector<std::size_t> touched;
  std::vector<std::size_t> touched_at;
  std::vector<Vertex> scratch;

  for (std::size_t cur = 0; cur < n; ++cur) {
    Vertex pivot = order[cur];
    ++classes[class_of[pivot]].begin;

    touched.clear();
    for (Vertex w : graph.neighbors(pivot)) {
      if (pos[w] <= cur) continue;
      marked[w] = 1;
      std::size_t c = class_of[w];
      if (touched_at.size() <= c) touched_at.resize(classes.size(), 0);
      if (touched_at[c] != cur + 1) {
        touched_at[c] = cur + 1;
        touched.push_back(c);
      }
    }
    for (std::size_t c : touched) {
      Range r = classes[c];
      scratch.clear();
      for (std::size_t i = r.begin; i < r.end; ++i) {
        if (marked[order[i]]) scratch.push_back(order[i]);
      }
      const std::size_t split = r.begin + scratch.size();
      for (std::size_t i = r.begin; i < r.end; ++i) {
        if (!marked[order[i]]) scratch.push_back(order[i]);
      }
      for (std::size_t i = 0; i < scratch.size(); ++i) {
        order[r.begin + i] = scratch[i];
        pos[scratch[i]] = r.begin + i;
        marked[scratch[i]] = 0;
      }
      if (split == r.end) continue;
      std::size_t fresh = classes.size();
      classes.push_back({r.begin, split});
      classes[c].begin = split;
      for (std::size_t i = r.begin; i < split; ++i) class_of[order[i]] = fresh;
    }
  }
  return order;
}

std::optional<Ordering> recognize_proper_interval(const Graph& graph) {
  const std::size_t n = graph.size();
  std::vector<Vertex> sweep(n);
  std::iota(sweep.begin(), sweep.end(), Vertex{0});
  sweep = lex_bfs(graph, sweep);
  for (int round = 0; round < 2; ++round) {
    std::reverse(sweep.begin(), sweep.end());
    sweep = lex_bfs(graph, sweep);
  }
  auto ord = Ordering::from_sequence(std::move(sweep));
  if (!is_umbrella_ordering(graph, ord)) return std::nullopt;
  return ord;
}

std::optional<Ordering> solve_complete(const SignedGraph& g) {
  if (!is_complete(g)) throw Error(ErrorKind::incomplete, "signed graph is not complete");
  auto ord = recognize_proper_interval(g.positive());
  if (!ord) return std::nullopt;
  if (!verify_embedding(g, *ord).valid()) {
    throw std::logic_error("umbrella ordering failed embedding verification");
  }
  return ord;
}

}  // namespace lce
