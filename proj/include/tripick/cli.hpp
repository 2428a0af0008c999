#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tripick/analytic.hpp"
#include "tripick/montecarlo.hpp"
#include "tripick/oracle.hpp"
#include "tripick/output.hpp"
#include "tripick/verify.hpp"

// Command bodies behind the `tripick` executable. Each returns a Document
// that the caller renders as CSV or JSON.
namespace tripick::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Raised for invalid command arguments; maps to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ExitCode : int { Success = 0, VerificationFailed = 1, Usage = 2 };

inline output::Document make_document(std::string command, std::uint64_t seed = 0) {
  output::Document doc;
  doc.command = std::move(command);
  doc.seed = seed;
  doc.version = kVersion;
  return doc;
}

/// Exact moments E[Q^n] for n = 1..max_n.
inline output::Document cmd_moments(std::int64_t max_n) {
  if (max_n < 1) throw UsageError("moments: --max-n must be at least 1");
  auto doc = make_document("moments");
  output::Table table;
  table.columns = {"n", "numerator", "denominator", "reduced", "decimal"};
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const ExactRational mu = moment(n);
    table.add_row({n, sequence_a279055(n).str(), moment_normalizer(n).str(),
                   boost::multiprecision::numerator(mu).str() + "/" +
                       boost::multiprecision::denominator(mu).str(),
                   static_cast<double>(mu)});
  }
  doc.tables.push_back(std::move(table));
  return doc;
}

enum class DistColumns { Cdf, Pdf, Both };

inline DistColumns parse_dist_columns(const std::string& which) {
  if (which == "cdf") return DistColumns::Cdf;
  if (which == "pdf") return DistColumns::Pdf;
  if (which == "both") return DistColumns::Both;
  throw UsageError("dist: --which must be cdf, pdf or both");
}

/// Uniform grid i / grid_points, i = 1..grid_points, with c = 1/4 always present.
inline std::vector<double> dist_grid(std::size_t grid_points) {
  std::vector<double> grid;
  grid.reserve(grid_points + 1);
  for (std::size_t i = 1; i <= grid_points; ++i) {
    grid.push_back(static_cast<double>(i) / static_cast<double>(grid_points));
  }
  if (!std::binary_search(grid.begin(), grid.end(), kBreakpoint)) {
    grid.insert(std::upper_bound(grid.begin(), grid.end(), kBreakpoint), kBreakpoint);
  }
  return grid;
}

inline output::Document cmd_dist(std::size_t grid_points, DistColumns which) {
  if (grid_points < 2) throw UsageError("dist: --grid must be at least 2");
  auto doc = make_document("dist");
  output::Table table;
  table.columns = {"c"};
  if (which != DistColumns::Pdf) table.columns.push_back("cdf");
  if (which != DistColumns::Cdf) table.columns.push_back("pdf");
  for (double c : dist_grid(grid_points)) {
    std::vector<output::Cell> row{c};
    if (which != DistColumns::Pdf) row.emplace_back(cdf(c));
    if (which != DistColumns::Cdf) row.emplace_back(pdf(c));
    table.add_row(std::move(row));
  }
  doc.tables.push_back(std::move(table));
  return doc;
}

/*
 * Points (r, s, t) on the level surface Q = c: (s, t) sweeps the midpoints of
 * a grid_points^2 lattice, r comes from slice_r, and points with r outside
 * [0, 1] are dropped. Visualization aid only.
 */
inline output::Document cmd_levelset(std::size_t grid_points, double c) {
  if (grid_points < 2) throw UsageError("dist: --grid must be at least 2");
  if (!(c >= 0.0 && c <= 1.0)) throw UsageError("dist: --levelset must lie in [0, 1]");
  auto doc = make_document("dist");
  output::Table table;
  table.columns = {"r", "s", "t"};
  const double h = 1.0 / static_cast<double>(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double s = (static_cast<double>(i) + 0.5) * h;
    for (std::size_t j = 0; j < grid_points; ++j) {
      const double t = (static_cast<double>(j) + 0.5) * h;
      if (s + t == 1.0) continue;
      const double r = oracle::slice_r(s, t, c);
      if (r >= 0.0 && r <= 1.0) table.add_row({r, s, t});
    }
  }
  doc.tables.push_back(std::move(table));
  return doc;
}

/// Histogram of Q against the bin-averaged closed-form density, plus a summary.
inline output::Document cmd_simulate(const SimConfig& config, std::size_t bins) {
  if (config.sample_size < 1 || config.workers < 1) {
    throw UsageError("simulate: -n and --workers must be positive");
  }
  if (bins < 2) throw UsageError("simulate: --bins must be at least 2");
  auto doc = make_document("simulate", config.seed);

  const Histogram histogram = empirical_pdf(config, bins);
  output::Table rows;
  rows.columns = {"bin_lo", "bin_hi", "count", "empirical_density", "analytic_bin_avg_density"};
  for (std::size_t i = 0; i < histogram.bin_count(); ++i) {
    rows.add_row({histogram.bin_lo(i), histogram.bin_hi(i),
                  static_cast<std::int64_t>(histogram.counts()[i]), histogram.density(i),
                  histogram.analytic_density(i)});
  }
  doc.tables.push_back(std::move(rows));

  const double mean = estimate_mean(config);
  double ks = std::numeric_limits<double>::quiet_NaN();
  if (config.sample_size >= 100) ks = ks_statistic(config);
  output::Table summary;
  summary.name = "summary";
  summary.columns = {"n", "mean", "ks_statistic", "ks_scaled"};
  summary.add_row({static_cast<std::int64_t>(config.sample_size), mean, ks,
                   ks * std::sqrt(static_cast<double>(config.sample_size))});
  doc.tables.push_back(std::move(summary));
  return doc;
}

inline std::vector<std::size_t> default_table3_sizes() {
  return {100, 1000, 10000, 100000, 1000000};
}

inline output::Document cmd_table3(const std::vector<std::size_t>& sizes, std::size_t trials,
                                   std::uint64_t seed, std::size_t workers) {
  if (sizes.empty()) throw UsageError("table3: --sizes must not be empty");
  if (std::find(sizes.begin(), sizes.end(), std::size_t{0}) != sizes.end()) {
    throw UsageError("table3: sample sizes must be positive");
  }
  if (trials < 1 || workers < 1) throw UsageError("table3: --trials and --workers must be positive");
  auto doc = make_document("table3", seed);
  const auto report = error_scaling_experiment(sizes, trials, seed, workers);
  output::Table table;
  table.columns = {"n", "observed_mean_abs_err", "theoretical", "ratio"};
  for (const auto& row : report.rows) {
    table.add_row({static_cast<std::int64_t>(row.n), row.observed_mean_abs_err, row.theoretical,
                   row.ratio()});
  }
  doc.tables.push_back(std::move(table));
  return doc;
}

inline output::Document verification_document(const VerificationReport& report) {
  auto doc = make_document("verify");
  output::Table table;
  table.columns = {"check", "max_abs_deviation", "tolerance", "measure", "worst_at", "pass"};
  for (const auto& check : report.checks) {
    table.add_row({check.name, check.max_abs_deviation, check.tolerance, check.measure,
                   check.worst_at, std::int64_t{check.passed() ? 1 : 0}});
  }
  doc.tables.push_back(std::move(table));
  return doc;
}

}  // namespace tripick::cli
