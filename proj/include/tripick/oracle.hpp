#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "tripick/analytic.hpp"
#include "tripick/quadrature.hpp"

// Brute-force numerical routes to the distribution of Q, independent of the
// closed-form CDF: volume integrals over the unit cube and 1-D quadrature.
namespace tripick::oracle {

enum class Method { NestedAdaptive, BooleGrid };

struct QuadratureSpec {
  Method method = Method::NestedAdaptive;
  /// Lattice points per axis (BooleGrid) or maximum panels per 1-D integral (NestedAdaptive).
  std::size_t resolution = 200;
  double abs_tol = 1e-8;

  QuadratureSpec() = default;
  QuadratureSpec(Method method_, std::size_t resolution_, double abs_tol_)
      : method(method_), resolution(resolution_), abs_tol(abs_tol_) {
    if (resolution < 16) {
      throw std::invalid_argument("QuadratureSpec: resolution must be at least 16");
    }
    if (!(abs_tol > 0.0)) {
      throw std::invalid_argument("QuadratureSpec: abs_tol must be positive");
    }
  }
};

struct QuadratureEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  /// |c - 1/4| < 0.01; both routes lose accuracy near the cone.
  bool near_breakpoint = false;
};

/// r on the level surface Q(r, s, t) = c, solving the linear-in-r equation.
inline double slice_r(double s, double t, double c) {
  const double denominator = s + t - 1.0;
  if (denominator == 0.0) {
    throw std::domain_error("slice_r: the level surface has a pole on s + t = 1");
  }
  return (c - 1.0 - s * t + s + t) / denominator;
}

namespace detail {

/*
 * For c > 1/4 the set {Q > c} is two congruent caps, one at each of the
 * corners (0,0,0) and (1,1,1). The upper cap is {r > r(s,t,c), st > c}, so
 *   CDF(c) = 1 - 2 int_c^1 int_{c/t}^1 (1 - r(s,t,c)) ds dt.
 */
inline QuadratureEstimate nested_complement(double c, const QuadratureSpec& spec) {
  if (!(c > kBreakpoint)) {
    throw std::domain_error("cdf_quadrature: nested adaptive route needs c > 1/4");
  }
  const double outer_tol = spec.abs_tol / 2.0;
  const double inner_tol = outer_tol / 10.0;
  double inner_error = 0.0;
  auto outer = [&](double t) {
    auto inner = [&](double s) { return 1.0 - slice_r(s, t, c); };
    const auto result = integrate_adaptive(inner, c / t, 1.0, inner_tol, spec.resolution);
    inner_error = std::max(inner_error, result.abs_error);
    return result.value;
  };
  const auto cap = integrate_adaptive(outer, c, 1.0, outer_tol, spec.resolution);
  QuadratureEstimate estimate;
  estimate.value = 1.0 - 2.0 * cap.value;
  estimate.error_bound = 2.0 * (cap.abs_error + (1.0 - c) * inner_error);
  return estimate;
}

// Midpoint-lattice volume of {Q <= c}.
inline QuadratureEstimate boole_grid(double c, const QuadratureSpec& spec) {
  const std::size_t n = spec.resolution;
  const double h = 1.0 / static_cast<double>(n);
  std::uint64_t inside = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (static_cast<double>(i) + 0.5) * h;
    for (std::size_t j = 0; j < n; ++j) {
      const double s = (static_cast<double>(j) + 0.5) * h;
      const double rs = r * s;
      const double rs_bar = (1.0 - r) * (1.0 - s);
      for (std::size_t k = 0; k < n; ++k) {
        const double t = (static_cast<double>(k) + 0.5) * h;
        inside += (rs * t + rs_bar * (1.0 - t) <= c) ? 1 : 0;
      }
    }
  }
  QuadratureEstimate estimate;
  estimate.value = static_cast<double>(inside) * h * h * h;
  estimate.error_bound = 2.0 * h;
  return estimate;
}

}  // namespace detail

/*
 * Numerical CDF by volume integration over the unit cube.
 *
 * NestedAdaptive integrates the complement caps (c > 1/4 only) to abs_tol.
 * BooleGrid counts midpoints of a resolution^3 lattice inside {Q <= c}; it
 * works for any c and its error is O(1 / resolution), reported as 2/resolution.
 */
inline QuadratureEstimate cdf_quadrature(double c, const QuadratureSpec& spec) {
  if (!(c > 0.0 && c < 1.0)) {
    throw std::domain_error("cdf_quadrature: c must lie in (0, 1)");
  }
  QuadratureEstimate estimate = spec.method == Method::NestedAdaptive
                                    ? detail::nested_complement(c, spec)
                                    : detail::boole_grid(c, spec);
  estimate.near_breakpoint = std::abs(c - kBreakpoint) < 0.01;
  return estimate;
}

/// Centered difference (F(c+h) - F(c-h)) / 2h of a CDF; the stencil must stay
/// inside (0, 1) and on one side of the breakpoint.
template <class Cdf>
double pdf_fd(double c, double h, Cdf&& model_cdf) {
  if (!(h > 0.0)) {
    throw std::domain_error("pdf_fd: step must be positive");
  }
  if (!(c - h > 0.0 && c + h < 1.0)) {
    throw std::domain_error("pdf_fd: stencil leaves (0, 1)");
  }
  if (c - h <= kBreakpoint && c + h >= kBreakpoint) {
    throw std::domain_error("pdf_fd: stencil straddles c = 1/4");
  }
  return (model_cdf(c + h) - model_cdf(c - h)) / (2.0 * h);
}

inline double pdf_fd(double c, double h) {
  return pdf_fd(c, h, [](double x) { return cdf(x); });
}

/*
 * int_0^1 c^n PDF(c) dc by adaptive quadrature on (0, 1/4) and (1/4, 1).
 * spec.resolution caps the panels per half and spec.abs_tol is split evenly.
 * For n > 20 the mass sits too close to the endpoints for this to be useful.
 */
inline QuadratureEstimate moment_quadrature(std::int64_t n, const QuadratureSpec& spec) {
  if (n < 0 || n > 20) {
    throw std::domain_error("moment_quadrature: n must lie in [0, 20]");
  }
  const auto power = static_cast<int>(n);
  auto integrand = [power](double c) { return std::pow(c, power) * pdf(c); };
  const auto lower = integrate_adaptive(integrand, 0.0, kBreakpoint, spec.abs_tol / 2.0,
                                        spec.resolution);
  const auto upper = integrate_adaptive(integrand, kBreakpoint, 1.0, spec.abs_tol / 2.0,
                                        spec.resolution);
  QuadratureEstimate estimate;
  estimate.value = lower.value + upper.value;
  estimate.error_bound = lower.abs_error + upper.abs_error;
  return estimate;
}

}  // namespace tripick::oracle
