#include "lce/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "lce/error.hpp"
#include "lce/generators.hpp"
#include "lce/solvers.hpp"

namespace lce::bench {

namespace {

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

std::optional<double> BenchReport::median_ratio() const {
  std::vector<double> ratios;
  for (const auto& row : rows) {
    if (row.ratio) ratios.push_back(*row.ratio);
  }
  if (ratios.empty()) return std::nullopt;
  return median(std::move(ratios));
}

BenchReport run_bench(const BenchOptions& options) {
  if (options.n_min > options.n_max) throw std::invalid_argument("empty vertex-count range");
  if (options.instances == 0) throw std::invalid_argument("need at least one instance per n");
  if (options.rounds == 0) throw std::invalid_argument("need at least one round");
  if (options.n_max > kDpHardCap) {
    throw Error(ErrorKind::cap_exceeded,
                "benchmark range exceeds the dynamic program cap of " + std::to_string(kDpHardCap));
  }
  DpOptions dp;
  dp.max_vertices = kDpHardCap;
  dp.isa = options.isa;

  const std::size_t rows = options.n_max - options.n_min + 1;
  std::vector<std::vector<SignedGraph>> graphs(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t n = options.n_min + r;
    for (std::size_t i = 0; i < options.instances; ++i) {
      graphs[r].push_back(gen::random_signed_graph(n, options.p_pos, options.p_neg,
                                                   options.seed + 1000 * n + i));
    }
  }

  using clock = std::chrono::steady_clock;
  std::vector<std::vector<double>> best(
      rows, std::vector<double>(options.instances, std::numeric_limits<double>::infinity()));
  std::vector<std::vector<bool>> feasible(rows, std::vector<bool>(options.instances, false));
  for (std::size_t round = 0; round < options.rounds; ++round) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t i = 0; i < options.instances; ++i) {
        const auto begin = clock::now();
        feasible[r][i] = solve_subset_dp(graphs[r][i], dp).has_value();
        const double t = std::chrono::duration<double>(clock::now() - begin).count();
        best[r][i] = std::min(best[r][i], t);
      }
    }
  }

  BenchReport report;
  for (std::size_t r = 0; r < rows; ++r) {
    BenchRow row;
    row.n = options.n_min + r;
    row.instances = options.instances;
    row.feasible = static_cast<std::size_t>(std::count(feasible[r].begin(), feasible[r].end(), true));
    row.max_seconds = *std::max_element(best[r].begin(), best[r].end());
    row.median_seconds = median(best[r]);
    if (!report.rows.empty() && report.rows.back().median_seconds > 0.0) {
      row.ratio = row.median_seconds / report.rows.back().median_seconds;
    }
    report.rows.push_back(row);
  }
  return report;
}

void write_report(std::ostream& out, const BenchReport& report) {
  char line[128];
  out << "     n   median_ms  feasible   ratio\n";
  for (const auto& row : report.rows) {
    std::snprintf(line, sizeof line, "%6zu %11.4f %5zu/%-3zu ", row.n, row.median_seconds * 1e3,
                  row.feasible, row.instances);
    out << line;
    if (row.ratio) {
      std::snprintf(line, sizeof line, "%7.3f", *row.ratio);
      out << line;
    } else {
      out << "      -";
    }
    out << '\n';
  }
  if (auto ratio = report.median_ratio()) {
    std::snprintf(line, sizeof line, "median doubling ratio: %.3f\n", *ratio);
    out << line;
  }
}

}  // namespace lce::bench
