#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "lce/kernels.hpp"

namespace lce::bench {

struct BenchOptions {
  std::size_t n_min = 14;
  std::size_t n_max = 20;
  std::size_t instances = 5;
  std::uint64_t seed = 1;
  /// Sparse negative edges keep most instances feasible, so most subsets are reached.
  double p_pos = 0.10;
  double p_neg = 0.03;
  std::optional<kernels::Isa> isa;
  /// Passes over every (n, instance) pair; each instance keeps its fastest run.
  std::size_t rounds = 10;
};

struct BenchRow {
  std::size_t n = 0;
  double median_seconds = 0.0;
  /// Slowest instance at this n.
  double max_seconds = 0.0;
  std::size_t feasible = 0;
  std::size_t instances = 0;
  /// median_seconds(n) / median_seconds(n - 1), absent on the first row.
  std::optional<double> ratio;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  /// Median of the doubling ratios; absent with fewer than two rows.
  std::optional<double> median_ratio() const;
};

/// Times solve_subset_dp on random signed graphs for every n in range. Each round
/// solves every instance once, so slow stretches on the host hit all n alike.
/// Throws std::invalid_argument on an empty range, zero instances or zero rounds,
/// and lce::Error on a cap overrun.
BenchReport run_bench(const BenchOptions& options);

void write_report(std::ostream& out, const BenchReport& report);

}  // namespace lce::bench
