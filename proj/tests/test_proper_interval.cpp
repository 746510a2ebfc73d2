#include <doctest.h>

#include <random>

#include "lce/error.hpp"
#include "lce/proper_interval.hpp"
#include "lce/solvers.hpp"
#include "oracles.hpp"

using namespace lce;

namespace {

SignedGraph complete_from_positive(std::size_t n, const std::vector<VertexPair>& pos) {
  std::vector<VertexPair> neg;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (std::find(pos.begin(), pos.end(), VertexPair{u, v}) == pos.end()) neg.emplace_back(u, v);
    }
  }
  return SignedGraph(n, pos, neg);
}

SignedGraph p3() { return complete_from_positive(3, {{0, 1}, {1, 2}}); }
SignedGraph claw() { return complete_from_positive(4, {{0, 1}, {0, 2}, {0, 3}}); }
SignedGraph c4() { return complete_from_positive(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

// Independent exact comparison a/b < c/d for positive denominators.
int cmp(const Fraction& x, const Fraction& y) {
  const __int128 l = static_cast<__int128>(x.num()) * y.den();
  const __int128 r = static_cast<__int128>(y.num()) * x.den();
  return l < r ? -1 : (l > r ? 1 : 0);
}

/// Checks properness, distinct endpoints and that intersections are exactly the
/// positive edges.
bool model_ok(const IntervalModel& m, const SignedGraph& g) {
  std::vector<Fraction> ends;
  for (const auto& iv : m.intervals) {
    if (cmp(iv.left, iv.right) >= 0) return false;
    ends.push_back(iv.left);
    ends.push_back(iv.right);
  }
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (cmp(ends[i], ends[j]) == 0) return false;
    }
  }
  for (Vertex u = 0; u < m.size(); ++u) {
    for (Vertex v = 0; v < m.size(); ++v) {
      if (u == v) continue;
      const auto& a = m.intervals[u];
      const auto& b = m.intervals[v];
      if (cmp(b.left, a.left) <= 0 && cmp(a.right, b.right) <= 0) return false;
      const bool meet = cmp(a.left, b.right) <= 0 && cmp(b.left, a.right) <= 0;
      if (meet != (g.sign(u, v) == Sign::positive)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("fractions are reduced and ordered exactly") {
  CHECK(Fraction(6, 8) == Fraction(3, 4));
  CHECK(Fraction(3, -6) == Fraction(-1, 2));
  CHECK(Fraction(9, 4).str() == "9/4");
  CHECK(Fraction(1, 3) < Fraction(34, 100));
  CHECK_THROWS(Fraction(1, 0));
}

TEST_CASE("neighbourhood extremes") {
  const auto g = p3();
  const auto ext = neighborhood_extremes(g, Ordering::identity(3));
  CHECK(ext.first == std::vector<Vertex>{0, 0, 1});
  CHECK(ext.last == std::vector<Vertex>{1, 2, 2});

  const SignedGraph isolated(3, {}, std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}});
  const auto iso = neighborhood_extremes(isolated, Ordering::from_sequence({2, 0, 1}));
  CHECK(iso.first == std::vector<Vertex>{0, 1, 2});
  CHECK(iso.last == std::vector<Vertex>{0, 1, 2});

  const auto clique = complete_from_positive(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto ord = Ordering::from_sequence({3, 1, 0, 2});
  const auto all = neighborhood_extremes(clique, ord);
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(all.first[v] == 3);
    CHECK(all.last[v] == 2);
  }
}

TEST_CASE("interval model of the path instance") {
  const auto model = ordering_to_model(p3(), Ordering::identity(3));
  REQUIRE(model.size() == 3);
  CHECK(model.intervals[0] == Interval{Fraction(1, 1), Fraction(9, 4)});
  CHECK(model.intervals[1] == Interval{Fraction(2, 1), Fraction(7, 2)});
  CHECK(model.intervals[2] == Interval{Fraction(3, 1), Fraction(15, 4)});
  CHECK(model_ok(model, p3()));
  CHECK(model_to_ordering(model) == Ordering::identity(3));
}

TEST_CASE("interval model of small special cases") {
  const SignedGraph single(1, {}, {});
  const auto one = ordering_to_model(single, Ordering::identity(1));
  CHECK(one.intervals[0] == Interval{Fraction(1, 1), Fraction(3, 2)});

  const auto clique = complete_from_positive(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto model = ordering_to_model(clique, Ordering::identity(3));
  CHECK(model.intervals[0] == Interval{Fraction(1, 1), Fraction(13, 4)});
  CHECK(model.intervals[1] == Interval{Fraction(2, 1), Fraction(14, 4)});
  CHECK(model.intervals[2] == Interval{Fraction(3, 1), Fraction(15, 4)});
  CHECK(model_ok(model, clique));
}

TEST_CASE("ordering_to_model rejects bad input") {
  const SignedGraph partial(3, std::vector<VertexPair>{{0, 1}}, {});
  CHECK_THROWS_AS(ordering_to_model(partial, Ordering::identity(3)), Error);
  try {
    ordering_to_model(p3(), Ordering::from_sequence({1, 0, 2}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::infeasible_ordering);
  }
}

TEST_CASE("model validation") {
  IntervalModel nested{{{Fraction(1, 1), Fraction(4, 1)}, {Fraction(2, 1), Fraction(3, 1)}}};
  CHECK_THROWS_AS(validate_model(nested), Error);
  CHECK_THROWS_AS(model_to_ordering(nested), Error);
  IntervalModel shared{{{Fraction(1, 1), Fraction(2, 1)}, {Fraction(2, 1), Fraction(3, 1)}}};
  CHECK_THROWS_AS(validate_model(shared), Error);
  IntervalModel empty{{{Fraction(2, 1), Fraction(2, 1)}}};
  CHECK_THROWS_AS(validate_model(empty), Error);
  IntervalModel fine{{{Fraction(1, 1), Fraction(9, 4)}, {Fraction(2, 1), Fraction(7, 2)}}};
  CHECK_NOTHROW(validate_model(fine));
}

TEST_CASE("umbrella predicate and recognition") {
  const auto path = positive_part(p3());
  CHECK(is_umbrella_ordering(path, Ordering::identity(3)));
  CHECK(is_umbrella_ordering(path, Ordering::identity(3).reversed()));
  CHECK_FALSE(is_umbrella_ordering(path, Ordering::from_sequence({1, 0, 2})));
  CHECK(recognize_proper_interval(path).has_value());

  CHECK_FALSE(recognize_proper_interval(positive_part(claw())).has_value());
  CHECK_FALSE(oracle::has_umbrella_ordering(positive_part(claw())));
  CHECK_FALSE(recognize_proper_interval(positive_part(c4())).has_value());

  const auto edgeless = positive_part(SignedGraph(4, {}, {}));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    CHECK(is_umbrella_ordering(edgeless,
                               Ordering::from_sequence(oracle::random_permutation(rng, 4))));
  }
}

TEST_CASE("solve_complete on the named instances") {
  const auto ord = solve_complete(p3());
  REQUIRE(ord.has_value());
  CHECK(verify_embedding(p3(), *ord).valid());
  CHECK_FALSE(solve_complete(claw()).has_value());
  CHECK_FALSE(solve_complete(c4()).has_value());
  const SignedGraph partial(3, std::vector<VertexPair>{{0, 1}}, {});
  CHECK_THROWS_AS(solve_complete(partial), Error);
}

TEST_CASE("recognition matches the permutation oracle on all graphs up to 6 vertices") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
      std::vector<VertexPair> edges;
      std::size_t k = 0;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++k) {
          if ((bits >> k) & 1) edges.emplace_back(u, v);
        }
      }
      const auto graph = build_graph(n, edges);
      const auto got = recognize_proper_interval(graph);
      if (n <= 5) REQUIRE(got.has_value() == oracle::has_umbrella_ordering(graph));
      if (got) {
        std::vector<Vertex> seq(got->sequence().begin(), got->sequence().end());
        REQUIRE(oracle::umbrella(graph, seq));
      }
    }
  }
}

TEST_CASE("complete instances: solve_complete agrees with brute force and models round-trip") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 4 + t % 4;
    const auto g = oracle::random_complete(rng, n, density(rng));
    const auto fast = solve_complete(g);
    const auto slow = oracle::first_feasible(g);
    REQUIRE(fast.has_value() == slow.has_value());
    if (!fast) continue;
    REQUIRE(verify_embedding(g, *fast).valid());
    const auto model = ordering_to_model(g, *fast);
    REQUIRE(model_ok(model, g));
    REQUIRE(model_to_ordering(model) == *fast);
  }
}
