#include <doctest.h>

#include <random>

#include "lce/kernels.hpp"
#include "lce/solvers.hpp"
#include "oracles.hpp"

using namespace lce;
using namespace lce::kernels;

TEST_CASE("isa names") {
  CHECK(parse_isa("scalar") == Isa::scalar);
  CHECK(parse_isa("avx2") == Isa::avx2);
  CHECK_FALSE(parse_isa("neon").has_value());
  CHECK(isa_available(Isa::scalar));
  CHECK(isa_available(best_isa()));
}

TEST_CASE("subset union matches a direct fold") {
  std::mt19937_64 rng(41);
  for (std::size_t n : {0u, 1u, 2u, 5u, 9u, 16u, 33u}) {
    std::vector<SubsetMask> masks(n);
    for (auto& m : masks) m = rng();
    const SubsetUnion u(masks);
    for (int t = 0; t < 200; ++t) {
      const SubsetMask s = n == 0 ? 0 : rng() & ((n == 64 ? 0 : (SubsetMask{1} << n)) - 1);
      SubsetMask expected = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if ((s >> v) & 1) expected |= masks[v];
      }
      REQUIRE(u(s) == expected);
    }
  }
}

TEST_CASE("good_sets agrees with is_good") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 10;
    const auto g = oracle::random_graph(rng, n, 0.3, 0.3);
    const auto tables = make_goodness_tables(g);
    const std::size_t count = std::size_t{1} << n;
    std::vector<SubsetMask> out(count);
    good_sets_scalar(tables, 0, count, out.data());
    for (SubsetMask x = 0; x < count; ++x) {
      for (Vertex v = 0; v < n; ++v) {
        if ((x >> v) & 1) {
          REQUIRE(((out[x] >> v) & 1) == 0);
        } else {
          REQUIRE(((out[x] >> v) & 1) == is_good(g, v, x));
        }
      }
    }
  }
}

TEST_CASE("vector kernels match the scalar reference") {
  if (!isa_available(Isa::avx2)) return;
  std::mt19937_64 rng(47);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 14;
    const auto g = oracle::random_graph(rng, n, 0.3, 0.3);
    const auto tables = make_goodness_tables(g);
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t first : {std::size_t{0}, std::size_t{3}, total / 2}) {
      for (std::size_t count : {std::size_t{1}, std::size_t{3}, std::size_t{4}, std::size_t{7},
                                std::size_t{64}}) {
        if (first + count > total) continue;
        std::vector<SubsetMask> a(count);
        std::vector<SubsetMask> b(count);
        good_sets_scalar(tables, first, count, a.data());
        good_sets_avx2(tables, first, count, b.data());
        REQUIRE(a == b);
      }
    }
  }
  for (int t = 0; t < 2000; ++t) {
    const std::size_t count = t % 65;
    std::vector<std::uint8_t> bytes(64);
    for (auto& b : bytes) b = (rng() % 3 == 0) ? static_cast<std::uint8_t>(rng()) : 0;
    REQUIRE(nonzero_mask_scalar(bytes.data(), count) == nonzero_mask_avx2(bytes.data(), count));
  }
}

TEST_CASE("reachability tables are identical across instruction sets") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 14;
    const auto g = oracle::random_graph(rng, n, 0.2, 0.2);
    DpOptions scalar;
    scalar.isa = Isa::scalar;
    DpOptions best;
    best.isa = best_isa();
    const auto a = build_reachability_table(g, scalar);
    const auto b = build_reachability_table(g, best);
    for (SubsetMask x = 0; x <= g.full_mask(); ++x) {
      REQUIRE(a.chosen(x) == b.chosen(x));
      REQUIRE(a.reachable(x) == b.reachable(x));
    }
  }
}
