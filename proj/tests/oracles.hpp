#pragma once

// Slow reference implementations used as test oracles. They share no code with
// the library beyond the plain data types.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "lce/reductions.hpp"
#include "lce/signed_graph.hpp"

namespace oracle {

using lce::Vertex;
using lce::VertexPair;

/// Dense sign matrix: 0 none, +1 positive, -1 negative.
struct SignMatrix {
  std::size_t n = 0;
  std::vector<int> sign;

  explicit SignMatrix(const lce::SignedGraph& g) : n(g.size()), sign(n * n, 0) {
    for (auto [u, v] : g.positive_edges()) sign[u * n + v] = sign[v * n + u] = 1;
    for (auto [u, v] : g.negative_edges()) sign[u * n + v] = sign[v * n + u] = -1;
  }
  int operator()(std::size_t u, std::size_t v) const { return sign[u * n + v]; }
};

struct Triple {
  Vertex u1, u2, u;
  bool left;
};

/// Every violating triple, ordered by u, left before right, u2, u1.
inline std::vector<Triple> violations(const lce::SignedGraph& g, const std::vector<Vertex>& seq) {
  const SignMatrix s(g);
  const std::size_t n = seq.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[seq[i]] = i;
  std::vector<Triple> out;
  for (Vertex u = 0; u < n; ++u) {
    for (int left = 1; left >= 0; --left) {
      for (Vertex u2 = 0; u2 < n; ++u2) {
        for (Vertex u1 = 0; u1 < n; ++u1) {
          if (u1 == u || u2 == u || u1 == u2) continue;
          if (s(u1, u) != 1 || s(u2, u) != -1) continue;
          const bool between = left ? pos[u1] < pos[u2] && pos[u2] < pos[u]
                                    : pos[u] < pos[u2] && pos[u2] < pos[u1];
          if (between) out.push_back({u1, u2, u, left == 1});
        }
      }
    }
  }
  return out;
}

inline bool feasible_ordering(const lce::SignedGraph& g, const std::vector<Vertex>& seq) {
  return violations(g, seq).empty();
}

/// Lexicographically first feasible ordering over all n! permutations.
inline std::optional<std::vector<Vertex>> first_feasible(const lce::SignedGraph& g) {
  std::vector<Vertex> seq(g.size());
  std::iota(seq.begin(), seq.end(), Vertex{0});
  do {
    if (feasible_ordering(g, seq)) return seq;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return std::nullopt;
}

/// Umbrella property: for positions i < j < k, an edge between ranks i and k forces
/// edges i-j and j-k.
inline bool umbrella(const lce::Graph& graph, const std::vector<Vertex>& seq) {
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 2; k < n; ++k) {
      if (!graph.adjacent(seq[i], seq[k])) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!graph.adjacent(seq[i], seq[j]) || !graph.adjacent(seq[j], seq[k])) return false;
      }
    }
  }
  return true;
}

inline bool has_umbrella_ordering(const lce::Graph& graph) {
  std::vector<Vertex> seq(graph.size());
  std::iota(seq.begin(), seq.end(), Vertex{0});
  do {
    if (umbrella(graph, seq)) return true;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return false;
}

inline lce::SignedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p_pos,
                                     double p_neg) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<VertexPair> pos;
  std::vector<VertexPair> neg;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double d = unit(rng);
      if (d < p_pos) {
        pos.emplace_back(u, v);
      } else if (d < p_pos + p_neg) {
        neg.emplace_back(u, v);
      }
    }
  }
  return lce::SignedGraph(n, pos, neg);
}

/// Complete signed graph with each pair positive with probability p_pos.
inline lce::SignedGraph random_complete(std::mt19937_64& rng, std::size_t n, double p_pos) {
  return random_graph(rng, n, p_pos, 1.0 - p_pos);
}

/// Signed graph from a base-3 code over the pairs (u < v) in lexicographic order:
/// digit 0 none, 1 positive, 2 negative.
inline lce::SignedGraph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<VertexPair> pos;
  std::vector<VertexPair> neg;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto digit = code % 3;
      code /= 3;
      if (digit == 1) pos.emplace_back(u, v);
      if (digit == 2) neg.emplace_back(u, v);
    }
  }
  return lce::SignedGraph(n, pos, neg);
}

inline std::uint64_t pattern_count(std::size_t n) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) count *= 3;
  return count;
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  std::shuffle(seq.begin(), seq.end(), rng);
  return seq;
}

inline bool satisfiable(const lce::CnfFormula& f) {
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.num_vars); ++bits) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool any = false;
      for (auto lit : clause) {
        const bool value = (bits >> (std::abs(lit) - 1)) & 1;
        if (value == (lit > 0)) any = true;
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

inline bool splittable(const lce::SetSystem& system) {
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << system.universe_size); ++bits) {
    bool all = true;
    for (const auto& set : system.sets) {
      bool in = false;
      bool out = false;
      for (auto e : set) ((bits >> e) & 1 ? in : out) = true;
      if (!in || !out) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

/// Cycle search by repeated DFS on the subgraph induced by `inside`.
inline bool has_cycle(const lce::Digraph& d, const std::vector<char>& inside) {
  std::vector<int> state(d.n, 0);
  std::vector<std::vector<Vertex>> out(d.n);
  for (auto [u, v] : d.arcs) {
    if (inside[u] && inside[v]) out[u].push_back(v);
  }
  auto visit = [&](auto&& self, Vertex u) -> bool {
    state[u] = 1;
    for (Vertex v : out[u]) {
      if (state[v] == 1) return true;
      if (state[v] == 0 && self(self, v)) return true;
    }
    state[u] = 2;
    return false;
  };
  for (Vertex v = 0; v < d.n; ++v) {
    if (inside[v] && state[v] == 0 && visit(visit, v)) return true;
  }
  return false;
}

inline bool partition_ok(const lce::Digraph& d, std::uint64_t part1_bits) {
  std::vector<char> one(d.n);
  std::vector<char> two(d.n);
  for (Vertex v = 0; v < d.n; ++v) {
    one[v] = (part1_bits >> v) & 1;
    two[v] = !one[v];
  }
  return !has_cycle(d, one) && !has_cycle(d, two);
}

inline bool adp_feasible(const lce::Digraph& d) {
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d.n); ++bits) {
    if (partition_ok(d, bits)) return true;
  }
  return false;
}

inline lce::CnfFormula random_cnf(std::mt19937_64& rng, std::size_t vars, std::size_t clauses,
                                  std::size_t width) {
  lce::CnfFormula f;
  f.num_vars = vars;
  for (std::size_t c = 0; c < clauses; ++c) {
    std::vector<int> pool(vars);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<lce::Literal> clause;
    for (std::size_t i = 0; i < std::min(width, vars); ++i) {
      clause.push_back(rng() & 1 ? pool[i] : -pool[i]);
    }
    f.clauses.push_back(clause);
  }
  return f;
}

}  // namespace oracle
