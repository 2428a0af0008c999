// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tripick/analytic.hpp"
#include "tripick/cli.hpp"
#include "tripick/geometry.hpp"
#include "tripick/montecarlo.hpp"
#include "tripick/oracle.hpp"
#include "tripick/verify.hpp"

namespace {

using namespace tripick;

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_seconds;
  std::function<Outcome()> run;
};

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

constexpr double kSigma = 0.25 / std::numbers::sqrt3;

Outcome exact_moments() {
  std::ostringstream csv;
  output::write(csv, cli::cmd_moments(7), output::Format::Csv);
  const std::string expected =
      "n,numerator,denominator,reduced,decimal\n"
      "1,2,8,1/4,0.25\n"
      "2,9,108,1/12,";
  const char* numerators[] = {"2", "9", "80", "1240", "30240", "1071504", "51996672"};
  const ExactRational reduced[] = {{1, 4},   {1, 12},          {5, 144},        {31, 1800},
                                   {7, 720}, {1063, 176400},   {403, 100800}};
  bool ok = csv.str().rfind(expected, 0) == 0;
  for (int n = 1; n <= 7; ++n) {
    ok = ok && sequence_a279055(n).str() == numerators[n - 1];
    ok = ok && moment(n) == reduced[n - 1];
    ok = ok && ExactRational(sequence_a279055(n), moment_normalizer(n)) == reduced[n - 1];
  }
  return {ok, "a(1..7) and reduced moments match exactly"};
}

Outcome breakpoint_values() {
  const double cdf_expected = (1.0 + std::log(4.0)) / 4.0;
  const double pdf_expected = 3.0 * std::log(4.0);
  const double cdf_err = std::abs(cdf(0.25) - cdf_expected) / cdf_expected;
  const double pdf_err = std::abs(pdf(0.25) - pdf_expected) / pdf_expected;
  return {cdf_err <= 1e-15 && pdf_err <= 1e-15,
          fmt("rel err cdf %.2e, pdf %.2e (tol 1e-15)", cdf_err, pdf_err)};
}

Outcome oracle_equivalence() {
  const oracle::QuadratureSpec nested(oracle::Method::NestedAdaptive, 200, 1e-8);
  const oracle::QuadratureSpec grid(oracle::Method::BooleGrid, 400, 1e-8);
  double upper = 0.0, lower = 0.0;
  for (double c : grids::upper_oracle_points()) {
    upper = std::max(upper, std::abs(oracle::cdf_quadrature(c, nested).value - cdf(c)));
  }
  for (double c : grids::lower_oracle_points()) {
    lower = std::max(lower, std::abs(oracle::cdf_quadrature(c, grid).value - cdf(c)));
  }
  return {upper <= 1e-6 && lower <= 5e-3,
          fmt("nested max %.2e (tol 1e-6), grid max %.2e (tol 5e-3)", upper, lower)};
}

Outcome derivative_consistency() {
  double worst = 0.0;
  const auto points = grids::derivative_points();
  for (double c : points) {
    worst = std::max(worst, std::abs(oracle::pdf_fd(c, 1e-6) - pdf(c)) / pdf(c));
  }
  return {points.size() == 50 && worst < 1e-6,
          fmt("%zu points, max rel err %.2e (tol 1e-6)", points.size(), worst)};
}

Outcome moment_bridge() {
  const oracle::QuadratureSpec spec(oracle::Method::NestedAdaptive, 500, 1e-10);
  double worst = 0.0;
  for (int n = 0; n <= 7; ++n) {
    worst = std::max(worst, std::abs(oracle::moment_quadrature(n, spec).value -
                                     static_cast<double>(moment(n))));
  }
  return {worst <= 1e-7, fmt("n=0..7 max abs err %.2e (tol 1e-7)", worst)};
}

Outcome machin_identity() {
  double worst = 0.0;
  for (double c : grids::machin_points()) worst = std::max(worst, std::abs(machin_gap(c)));
  return {worst < 1e-12, fmt("1000 points, max |gap| %.2e (tol 1e-12)", worst)};
}

Outcome table3_reproduction() {
  const std::vector<std::size_t> sizes{100, 1000, 10000, 100000, 1000000};
  const auto report = error_scaling_experiment(sizes, 50, 0, 4);
  bool ok = true;
  std::string detail = "ratios";
  for (const auto& row : report.rows) {
    ok = ok && row.ratio() >= 0.7 && row.ratio() <= 1.4;
    detail += fmt(" %.3f", row.ratio());
  }
  detail += "; 100x decay/10";
  for (std::size_t i = 0; i + 2 < report.rows.size(); ++i) {
    const double decay =
        report.rows[i].observed_mean_abs_err / report.rows[i + 2].observed_mean_abs_err / 10.0;
    ok = ok && decay >= 0.7 && decay <= 1.4;
    detail += fmt(" %.3f", decay);
  }
  return {ok, detail + " (band [0.7, 1.4])"};
}

Outcome distributional_fit() {
  const std::size_t n = 100000;
  int accepted = 0;
  std::string detail = "Dn*sqrt(n):";
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const double scaled = ks_statistic({seed, n, 1, 4}) * std::sqrt(static_cast<double>(n));
    accepted += scaled < 1.95 ? 1 : 0;
    detail += fmt(" %.3f", scaled);
  }
  return {accepted >= 9, detail + fmt(" (%d/10 below 1.95, need 9)", accepted)};
}

Outcome geometry_equivalence() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_ratio = 0.0, worst_bottema = 0.0;
  int made = 0;
  while (made < 1000) {
    const Point2 a(coord(rng), coord(rng)), b(coord(rng), coord(rng)), c(coord(rng), coord(rng));
    const double area = signed_area(a, b, c);
    const double diam = std::max({std::hypot(a.x - b.x, a.y - b.y), std::hypot(b.x - c.x, b.y - c.y),
                                  std::hypot(c.x - a.x, c.y - a.y)});
    if (std::abs(area) < 0.05 * diam * diam) continue;  // skip slivers
    ++made;
    const Triangle tri(a, b, c);
    const SampleTriple u(unit(rng), unit(rng), unit(rng));
    const double ratio = std::abs(signed_area(inscribe(tri, u))) / std::abs(area);
    worst_ratio = std::max(worst_ratio, std::abs(ratio - area_quotient(u)));

    const BarycentricCoords p1(0, u.r, 1 - u.r), p2(1 - u.s, 0, u.s), p3(u.t, 1 - u.t, 0);
    const double mapped = signed_area(point_from_barycentric(p1, tri), point_from_barycentric(p2, tri),
                                      point_from_barycentric(p3, tri));
    worst_bottema = std::max(worst_bottema,
                             std::abs(bottema_ratio(p1, p2, p3) * area - mapped) / std::abs(area));
  }
  return {worst_ratio <= 1e-12 && worst_bottema <= 1e-12,
          fmt("inscribe vs Q %.2e, Bottema vs shoelace %.2e (tol 1e-12)", worst_ratio,
              worst_bottema)};
}

Outcome mean_area() {
  const std::size_t n = 1000000;
  const double mean = estimate_mean({0, n, 1, 4});
  const double bound = 5.0 * kSigma / std::sqrt(static_cast<double>(n));
  return {std::abs(mean - 0.25) <= bound,
          fmt("mean %.6f, |mean-1/4| %.2e (bound %.2e)", mean, std::abs(mean - 0.25), bound)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact moments", 1.0, exact_moments},
      {2, "breakpoint CDF/PDF values", 1.0, breakpoint_values},
      {3, "oracle equivalence of the CDF", 120.0, oracle_equivalence},
      {4, "PDF vs finite-difference CDF", 1.0, derivative_consistency},
      {5, "moment bridge", 5.0, moment_bridge},
      {6, "arctangent identity", 1.0, machin_identity},
      {7, "error scaling (n <= 1e6)", 120.0, table3_reproduction},
      {8, "KS distributional fit", 30.0, distributional_fit},
      {9, "geometry equivalence", 1.0, geometry_equivalence},
      {10, "mean area 1/4", 5.0, mean_area},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < criterion.time_limit_seconds;
    const bool passed = outcome.passed && in_time;
    failures += passed ? 0 : 1;
    std::printf("[%s] AC%-2d %-36s %s; %.2fs (limit %.0fs)\n", passed ? "PASS" : "FAIL",
                criterion.id, criterion.title.c_str(), outcome.detail.c_str(), seconds,
                criterion.time_limit_seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
