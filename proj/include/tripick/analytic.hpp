#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tripick/geometry.hpp"

namespace tripick {

using BigInt = boost::multiprecision::cpp_int;
/// Always kept in lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

/// A value of the area ratio |RST| / |ABC|, restricted to [0, 1].
class AreaQuotient {
 public:
  AreaQuotient(double c) : c_(c) {  // NOLINT(google-explicit-constructor)
    if (!(c >= 0.0 && c <= 1.0)) {
      throw std::domain_error("AreaQuotient: value must lie in [0, 1]");
    }
  }

  double value() const { return c_; }
  operator double() const { return c_; }  // NOLINT(google-explicit-constructor)

 private:
  double c_;
};

/// Quadric type of the level surface Q = c inside the unit cube.
enum class Regime { OneSheet, DoubleCone, TwoSheets };

inline std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::OneSheet:
      return "one_sheet";
    case Regime::DoubleCone:
      return "double_cone";
    case Regime::TwoSheets:
      return "two_sheets";
  }
  return "unknown";
}

inline constexpr double kBreakpoint = 0.25;
/// CDF(1/4) = (1 + ln 4) / 4.
inline constexpr double kCdfAtBreakpoint = 0.25 * (1.0 + 2.0 * std::numbers::ln2);
/// PDF(1/4) = 3 ln 4.
inline constexpr double kPdfAtBreakpoint = 6.0 * std::numbers::ln2;

inline double area_quotient(const SampleTriple& u) {
  return u.r * u.s * u.t + (1.0 - u.r) * (1.0 - u.s) * (1.0 - u.t);
}

/// a(n) = sum_{k=0}^{n} (n-k)!^2 k!^2 (OEIS A279055).
inline BigInt sequence_a279055(std::int64_t n) {
  if (n < 0) {
    throw std::domain_error("sequence_a279055: n must be nonnegative");
  }
  std::vector<BigInt> factorial(static_cast<std::size_t>(n) + 1);
  factorial[0] = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    factorial[k] = factorial[k - 1] * k;
  }
  BigInt sum = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    const BigInt term = factorial[n - k] * factorial[k];
    sum += term * term;
  }
  return sum;
}

/// (n+1) * (n+1)!^2, the unreduced moment denominator.
inline BigInt moment_normalizer(std::int64_t n) {
  if (n < 0) {
    throw std::domain_error("moment_normalizer: n must be nonnegative");
  }
  BigInt factorial = 1;
  for (std::int64_t k = 2; k <= n + 1; ++k) {
    factorial *= k;
  }
  return BigInt(n + 1) * factorial * factorial;
}

/// E[Q^n] as an exact rational.
inline ExactRational moment(std::int64_t n) {
  if (n < 0) {
    throw std::domain_error("moment: n must be nonnegative");
  }
  return ExactRational(sequence_a279055(n), moment_normalizer(n));
}

inline Regime regime(AreaQuotient c) {
  if (c.value() < kBreakpoint) return Regime::OneSheet;
  if (c.value() == kBreakpoint) return Regime::DoubleCone;
  return Regime::TwoSheets;
}

namespace detail {

// log1p(x) - x without cancellation for small |x|.
inline double log1p_minus_x(double x) {
  if (std::abs(x) > 0.1) {
    return std::log1p(x) - x;
  }
  double power = x * x;
  double sum = 0.0;
  for (int k = 2; k < 40; ++k) {
    const double term = power / k;
    sum += (k % 2 == 0) ? -term : term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    power *= x;
  }
  return sum;
}

// atan(v) - pi/3, exact to a few ulps even as v -> sqrt(3) (c -> 1).
inline double atan_minus_third_pi(double c, double v) {
  constexpr double sqrt3 = std::numbers::sqrt3;
  const double v_minus_sqrt3 = -4.0 * (1.0 - c) / (v + sqrt3);
  return std::atan(v_minus_sqrt3 / (1.0 + sqrt3 * v));
}

/*
 * Lower branch, 0 < c < 1/4, with w = sqrt(1 - 4c):
 *   c - (3c - 1/2) ln c + w^3 atanh(w)
 * Using atanh(w) = ln(1 + w) - ln 2 - (1/2) ln c and 1 - w = 4c / (1 + w),
 * the divergent ln c pieces cancel exactly and the sum is rewritten as
 *   c d (5 - 6d + 2d^2) / (1 + w) + w^3 (log1p(x) - x) - 4c^2 (1 + 2w) / (1 + w)^2 ln c
 * with d = 1 - w and x = -2c / (1 + w). Every term is O(c^2 ln c).
 */
inline double cdf_lower(double c) {
  const double w = std::sqrt(1.0 - 4.0 * c);
  const double one_plus_w = 1.0 + w;
  const double d = 4.0 * c / one_plus_w;
  const double x = -2.0 * c / one_plus_w;
  const double polynomial = c * d * (5.0 - 6.0 * d + 2.0 * d * d) / one_plus_w;
  const double log_part = w * w * w * log1p_minus_x(x);
  const double ln_c_coeff = -4.0 * c * c * (1.0 + 2.0 * w) / (one_plus_w * one_plus_w);
  return polynomial + log_part + ln_c_coeff * std::log(c);
}

// -3 ln c - 6 w atanh(w) = -12c/(1+w) ln c - 6 w log1p(-2c/(1+w)).
inline double pdf_lower(double c) {
  const double w = std::sqrt(1.0 - 4.0 * c);
  const double one_plus_w = 1.0 + w;
  return -12.0 * c / one_plus_w * std::log(c) - 6.0 * w * std::log1p(-2.0 * c / one_plus_w);
}

// c - (3c - 1/2) ln c + v^3 (atan v - pi/3), v = sqrt(4c - 1).
inline double cdf_upper(double c) {
  const double v = std::sqrt(4.0 * c - 1.0);
  const double tail = (0.5 - 3.0 * c) * std::log(c) + v * v * v * atan_minus_third_pi(c, v);
  return c + tail;
}

// -3 ln c + 2v (3 atan v - pi) = -3 ln c + 6v (atan v - pi/3).
inline double pdf_upper(double c) {
  const double v = std::sqrt(4.0 * c - 1.0);
  return -3.0 * std::log(c) + 6.0 * v * atan_minus_third_pi(c, v);
}

}  // namespace detail

/// Closed-form CDF of the area quotient.
inline double cdf(AreaQuotient q) {
  const double c = q.value();
  if (c == 0.0) return 0.0;
  if (c == kBreakpoint) return kCdfAtBreakpoint;
  if (c == 1.0) return 1.0;
  return c < kBreakpoint ? detail::cdf_lower(c) : detail::cdf_upper(c);
}

/*
 * Closed-form density. The domain is (0, 1]; the density tends to zero like
 * -6 c ln c as c -> 0+, but the closed form itself contains ln c and is not
 * evaluated at the origin.
 */
inline double pdf(AreaQuotient q) {
  const double c = q.value();
  if (c <= 0.0) {
    throw std::domain_error("pdf: c must be positive");
  }
  if (c == kBreakpoint) return kPdfAtBreakpoint;
  if (c == 1.0) return 0.0;
  return c < kBreakpoint ? detail::pdf_lower(c) : detail::pdf_upper(c);
}

/// Left side minus right side of the arctangent identity
///   atan(1/v) - atan((2c-1)/v) = pi - 3 atan(v),  v = sqrt(4c - 1),  c > 1/4.
inline double machin_gap(double c) {
  if (!(c > kBreakpoint) || !std::isfinite(c)) {
    throw std::domain_error("machin_gap: c must exceed 1/4");
  }
  const double v = std::sqrt(4.0 * c - 1.0);
  const double lhs = std::atan(1.0 / v) - std::atan((2.0 * c - 1.0) / v);
  const double rhs = std::numbers::pi - 3.0 * std::atan(v);
  return lhs - rhs;
}

/*
 * Quantile function by bisection on the monotone CDF, run until the bracket
 * is two adjacent doubles. Returns the upper end of the final bracket, so the
 * map p -> c is monotone whenever the computed CDF is.
 */
inline AreaQuotient inverse_cdf(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("inverse_cdf: p must lie in [0, 1]");
  }
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (;;) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

}  // namespace tripick
