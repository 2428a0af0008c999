#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tripick {

/// A point in the plane. Coordinates must be finite.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw std::invalid_argument("Point2: coordinates must be finite");
    }
  }

  friend bool operator==(const Point2&, const Point2&) = default;
};

namespace detail {

inline double cross(const Point2& o, const Point2& p, const Point2& q) {
  return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

inline double distance(const Point2& p, const Point2& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

}  // namespace detail

/*
 * A triangle given by its three vertices.
 *
 * The public constructor rejects coincident vertices and zero signed area.
 * Triangles produced by `inscribe` may be degenerate, since the inner
 * triangle collapses on the Q = 0 level set; those are built through
 * `possibly_degenerate` and report it via `is_degenerate()`.
 */
class Triangle {
 public:
  Triangle(Point2 a, Point2 b, Point2 c) : a_(a), b_(b), c_(c) {
    if (a_ == b_ || b_ == c_ || c_ == a_) {
      throw std::invalid_argument("Triangle: vertices must be pairwise distinct");
    }
    if (detail::cross(a_, b_, c_) == 0.0) {
      throw std::invalid_argument("Triangle: vertices are collinear");
    }
  }

  static Triangle possibly_degenerate(Point2 a, Point2 b, Point2 c) {
    return Triangle(a, b, c, Unchecked{});
  }

  const Point2& a() const { return a_; }
  const Point2& b() const { return b_; }
  const Point2& c() const { return c_; }

  bool is_degenerate() const { return detail::cross(a_, b_, c_) == 0.0; }

  double diameter() const {
    return std::max({detail::distance(a_, b_), detail::distance(b_, c_),
                     detail::distance(c_, a_)});
  }

 private:
  struct Unchecked {};
  Triangle(Point2 a, Point2 b, Point2 c, Unchecked) : a_(a), b_(b), c_(c) {}

  Point2 a_;
  Point2 b_;
  Point2 c_;
};

/*
 * Normalized barycentric coordinates (alpha, beta, gamma).
 *
 * Homogeneous input is accepted and divided by its sum, so the stored
 * components always sum to one up to rounding.
 */
class BarycentricCoords {
 public:
  BarycentricCoords(double alpha, double beta, double gamma) {
    const double sum = alpha + beta + gamma;
    if (!std::isfinite(sum) || sum == 0.0) {
      throw std::invalid_argument(
          "BarycentricCoords: components must be finite with nonzero sum");
    }
    alpha_ = alpha / sum;
    beta_ = beta / sum;
    gamma_ = gamma / sum;
  }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

  std::array<double, 3> row() const { return {alpha_, beta_, gamma_}; }

 private:
  double alpha_;
  double beta_;
  double gamma_;
};

/// Side parameters (r, s, t) of an inscribed triangle, each in [0, 1].
struct SampleTriple {
  double r = 0.0;
  double s = 0.0;
  double t = 0.0;

  SampleTriple() = default;
  SampleTriple(double r_, double s_, double t_) : r(r_), s(s_), t(t_) {
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in_unit(r) || !in_unit(s) || !in_unit(t)) {
      throw std::invalid_argument("SampleTriple: components must lie in [0, 1]");
    }
  }
};

/// Shoelace area, positive for counter-clockwise vertex order.
inline double signed_area(const Point2& a, const Point2& b, const Point2& c) {
  return 0.5 * detail::cross(a, b, c);
}

inline double signed_area(const Triangle& tri) {
  return signed_area(tri.a(), tri.b(), tri.c());
}

inline Point2 point_from_barycentric(const BarycentricCoords& coords,
                                     const Triangle& tri) {
  return Point2(
      coords.alpha() * tri.a().x + coords.beta() * tri.b().x + coords.gamma() * tri.c().x,
      coords.alpha() * tri.a().y + coords.beta() * tri.b().y + coords.gamma() * tri.c().y);
}

/// Area-ratio inversion. Points outside the triangle get negative components.
inline BarycentricCoords barycentric_of(const Point2& p, const Triangle& tri) {
  const double whole = signed_area(tri);
  if (whole == 0.0) {
    throw std::invalid_argument("barycentric_of: degenerate triangle");
  }
  const double alpha = signed_area(p, tri.b(), tri.c()) / whole;
  const double beta = signed_area(tri.a(), p, tri.c()) / whole;
  const double gamma = signed_area(tri.a(), tri.b(), p) / whole;
  return BarycentricCoords(alpha, beta, gamma);
}

/*
 * Bottema's determinant: the signed area of the triangle whose vertices have
 * barycentric rows p1, p2, p3, as a multiple of the reference triangle's
 * signed area.
 */
inline double bottema_ratio(const BarycentricCoords& p1, const BarycentricCoords& p2,
                            const BarycentricCoords& p3) {
  const auto [x1, y1, z1] = p1.row();
  const auto [x2, y2, z2] = p2.row();
  const auto [x3, y3, z3] = p3.row();
  return x1 * (y2 * z3 - z2 * y3) - y1 * (x2 * z3 - z2 * x3) +
         z1 * (x2 * y3 - y2 * x3);
}

/*
 * Inner triangle RST with
 *   R = B + r (C - B),  S = C + s (A - C),  T = A + t (B - A).
 */
inline Triangle inscribe(const Triangle& tri, const SampleTriple& sample) {
  auto lerp = [](const Point2& from, const Point2& to, double u) {
    return Point2(from.x + u * (to.x - from.x), from.y + u * (to.y - from.y));
  };
  return Triangle::possibly_degenerate(lerp(tri.b(), tri.c(), sample.r),
                                       lerp(tri.c(), tri.a(), sample.s),
                                       lerp(tri.a(), tri.b(), sample.t));
}

}  // namespace tripick
