#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <vector>

namespace tripick {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct IntegrationResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t subdivisions = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for kKronrodNodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_15(F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double f_center = f(center);
  double kronrod = f_center * kKronrodWeights[7];
  double gauss = f_center * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) {
      gauss += kGaussWeights[i / 2] * pair;
    }
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/*
 * Globally adaptive Gauss-Kronrod (7/15) quadrature on [lo, hi].
 *
 * The panel with the largest error estimate is bisected until the summed
 * estimate drops to abs_tol or max_subdivisions panels exist. The integrand
 * is never evaluated at the endpoints.
 */
template <class F>
IntegrationResult integrate_adaptive(F&& f, double lo, double hi, double abs_tol,
                                     std::size_t max_subdivisions = 200) {
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("integrate_adaptive: abs_tol must be positive");
  }
  if (max_subdivisions == 0) {
    throw std::invalid_argument("integrate_adaptive: max_subdivisions must be positive");
  }
  IntegrationResult result;
  if (lo == hi) {
    result.converged = true;
    return result;
  }

  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gauss_kronrod_15(f, lo, hi));
  double total_error = panels.top().error;

  while (total_error > abs_tol && panels.size() < max_subdivisions) {
    const detail::Panel worst = panels.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) break;
    panels.pop();
    const auto left = detail::gauss_kronrod_15(f, worst.lo, mid);
    const auto right = detail::gauss_kronrod_15(f, mid, worst.hi);
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  CompensatedSum value;
  CompensatedSum error;
  result.subdivisions = panels.size();
  while (!panels.empty()) {
    value += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  result.value = value.value();
  result.abs_error = error.value();
  result.converged = result.abs_error <= abs_tol;
  return result;
}

}  // namespace tripick
