#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "tripick/analytic.hpp"
#include "tripick/oracle.hpp"

namespace tripick {

struct CheckResult {
  std::string name;
  double max_abs_deviation = 0.0;
  double tolerance = 0.0;
  /// "abs" or "rel": how max_abs_deviation is compared against tolerance.
  std::string measure = "abs";
  double worst_at = 0.0;

  bool passed() const { return max_abs_deviation < tolerance; }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed(); });
  }
};

/// Evaluation grids shared by the verification suite and the acceptance tests.
namespace grids {

inline std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = count == 1 ? lo
                        : lo + (hi - lo) * static_cast<double>(i) /
                                   static_cast<double>(count - 1);
  }
  return out;
}

/// Ten points in (1/4, 1) away from the cone.
inline std::vector<double> upper_oracle_points() { return linspace(0.27, 0.99, 10); }

/// Ten points in (0, 1/4) away from the cone.
inline std::vector<double> lower_oracle_points() { return linspace(0.01, 0.235, 10); }

/// Fifty points in [0.01, 0.99] outside (0.24, 0.26).
inline std::vector<double> derivative_points() {
  auto lower = linspace(0.01, 0.24, 25);
  auto upper = linspace(0.26, 0.99, 25);
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

/// 1000 points in (0.2501, 1].
inline std::vector<double> machin_points() {
  std::vector<double> out(1000);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = 0.2501 + (1.0 - 0.2501) * static_cast<double>(i + 1) / 1000.0;
  }
  return out;
}

}  // namespace grids

namespace detail {

template <class Fn>
CheckResult sweep(std::string name, const std::vector<double>& points, double tolerance,
                  std::string measure, Fn&& deviation) {
  CheckResult check{std::move(name), 0.0, tolerance, std::move(measure), 0.0};
  for (double x : points) {
    const double d = deviation(x);
    if (!(d <= check.max_abs_deviation)) {
      check.max_abs_deviation = d;
      check.worst_at = x;
    }
  }
  return check;
}

}  // namespace detail

/*
 * Cross-checks a candidate CDF against the numerical oracles, plus the
 * closed-form identities that do not depend on it. `candidate_cdf` is the
 * analytic CDF in production; tests substitute a corrupted one.
 */
inline VerificationReport run_verification(const std::function<double(double)>& candidate_cdf) {
  using oracle::Method;
  using oracle::QuadratureSpec;
  VerificationReport report;

  const QuadratureSpec nested(Method::NestedAdaptive, 200, 1e-8);
  report.checks.push_back(detail::sweep(
      "oracle_nested_upper", grids::upper_oracle_points(), 1e-6, "abs", [&](double c) {
        return std::abs(oracle::cdf_quadrature(c, nested).value - candidate_cdf(c));
      }));

  const QuadratureSpec grid(Method::BooleGrid, 400, 1e-8);
  report.checks.push_back(detail::sweep(
      "oracle_grid_lower", grids::lower_oracle_points(), 5e-3, "abs", [&](double c) {
        return std::abs(oracle::cdf_quadrature(c, grid).value - candidate_cdf(c));
      }));

  report.checks.push_back(detail::sweep(
      "pdf_finite_difference", grids::derivative_points(), 1e-6, "rel", [&](double c) {
        const double exact = pdf(c);
        return std::abs(oracle::pdf_fd(c, 1e-6, candidate_cdf) - exact) / exact;
      }));

  std::vector<double> orders;
  for (int n = 0; n <= 7; ++n) orders.push_back(n);
  const QuadratureSpec moments(Method::NestedAdaptive, 500, 1e-10);
  report.checks.push_back(
      detail::sweep("moment_bridge", orders, 1e-7, "abs", [&](double n) {
        const auto k = static_cast<std::int64_t>(n);
        return std::abs(oracle::moment_quadrature(k, moments).value -
                        static_cast<double>(moment(k)));
      }));

  report.checks.push_back(detail::sweep("machin_gap", grids::machin_points(), 1e-12, "abs",
                                        [](double c) { return std::abs(machin_gap(c)); }));

  const double eps = 1e-8;
  report.checks.push_back(detail::sweep(
      "branch_continuity", {kBreakpoint - eps, kBreakpoint + eps}, 1e-6, "abs",
      [&](double c) { return std::abs(candidate_cdf(c) - kCdfAtBreakpoint); }));

  return report;
}

inline VerificationReport run_verification() {
  return run_verification([](double c) { return cdf(c); });
}

}  // namespace tripick
