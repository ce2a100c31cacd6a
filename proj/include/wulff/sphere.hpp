#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "wulff/numeric.hpp"
#include "wulff/vec.hpp"

namespace wulff {

/// Unit vector on S^{D-1}, renormalized on construction.
template <std::size_t D>
class SpherePoint {
 public:
  explicit SpherePoint(const Vec<D>& v) : v_(v.normalized()) {
    if (!v_.all_finite())
      throw std::invalid_argument("SpherePoint: non-finite coordinates");
  }

  /// S^1 points from/to the angle parametrization in [0, 2pi).
  static SpherePoint from_angle(double theta)
    requires(D == 2)
  {
    return SpherePoint(Vec2{std::cos(theta), std::sin(theta)});
  }
  double angle() const
    requires(D == 2)
  {
    return wrap_angle(std::atan2(v_[1], v_[0]));
  }

  const Vec<D>& vec() const { return v_; }
  double operator[](std::size_t i) const { return v_[i]; }

  SpherePoint antipode() const { return SpherePoint(-v_, unchecked{}); }

  friend double dot(const SpherePoint& a, const SpherePoint& b) {
    return dot(a.v_, b.v_);
  }

 private:
  struct unchecked {};
  SpherePoint(const Vec<D>& v, unchecked) : v_(v) {}
  Vec<D> v_;
};

using Sphere1Point = SpherePoint<2>;  // S^1 in R^2
using Sphere2Point = SpherePoint<3>;  // S^2 in R^3
using Sphere3Point = SpherePoint<4>;  // S^3 in R^4

/// Polar plot expression (theta, r) of a point of R^D minus the origin.
template <std::size_t D>
struct PolarPoint {
  SpherePoint<D> direction;
  double radius;

  PolarPoint(const SpherePoint<D>& dir, double r) : direction(dir), radius(r) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw std::invalid_argument("PolarPoint: radius must be positive");
  }

  Vec<D> cartesian() const { return radius * direction.vec(); }

  static PolarPoint from_cartesian(const Vec<D>& x) {
    const double r = x.norm();
    return PolarPoint(SpherePoint<D>(x), r);
  }
};

/// inv(theta, r) = (-theta, 1/r).
template <std::size_t D>
inline PolarPoint<D> inversion(const PolarPoint<D>& p) {
  return PolarPoint<D>(p.direction.antipode(), 1.0 / p.radius);
}

/// Orthonormal tangent frame at a point of S^{D-1}.
template <std::size_t D>
struct Chart {
  SpherePoint<D> center;
  std::array<Vec<D>, D - 1> frame;
};

/// Deterministic tangent frame: Gram-Schmidt over the coordinate axes,
/// skipping the axis most parallel to the center.
template <std::size_t D>
inline Chart<D> tangent_frame(const SpherePoint<D>& center) {
  std::size_t skip = 0;
  for (std::size_t i = 1; i < D; ++i)
    if (std::fabs(center[i]) > std::fabs(center[skip])) skip = i;
  Chart<D> chart{center, {}};
  std::size_t out = 0;
  for (std::size_t i = 0; i < D; ++i) {
    if (i == skip) continue;
    Vec<D> v = Vec<D>::axis(i);
    v -= dot(v, center.vec()) * center.vec();
    for (std::size_t j = 0; j < out; ++j) v -= dot(v, chart.frame[j]) * chart.frame[j];
    chart.frame[out++] = v.normalized();
  }
  return chart;
}

/// arccos of the clamped dot product, in [0, pi].
template <std::size_t D>
inline double geodesic_distance(const SpherePoint<D>& p, const SpherePoint<D>& q) {
  return std::acos(clamp_unit(dot(p, q)));
}

/// Point of the minimizing arc PQ at normalized parameter t in [0, 1].
template <std::size_t D>
inline SpherePoint<D> arc_point(const SpherePoint<D>& p, const SpherePoint<D>& q,
                                double t) {
  if ((p.vec() + q.vec()).norm() < 1e-9)
    throw std::invalid_argument("arc_point: antipodal pair");
  const Vec<D> m = (1.0 - t) * p.vec() + t * q.vec();
  return SpherePoint<D>(m);
}

namespace detail {
template <std::size_t D>
inline SpherePoint<D> north_pole() {
  return SpherePoint<D>(Vec<D>::axis(D - 1));
}
}  // namespace detail

inline constexpr double kPoleGuard = 1e-12;

/// Central projection alpha_N: open northern hemisphere of S^{D-1} to the
/// affine plane {x_D = 1}. Returns the full D-vector with last component 1.
template <std::size_t D>
inline Vec<D> central_project(const SpherePoint<D>& p) {
  const double h = p[D - 1];
  if (!(h > kPoleGuard))
    throw std::domain_error("central_project: point not in the open northern hemisphere");
  Vec<D> r;
  for (std::size_t i = 0; i < D; ++i) r[i] = p[i] / h;
  r[D - 1] = 1.0;
  return r;
}

/// Inverse of the central projection: x in R^{D-1} to (x, 1)/|(x, 1)|.
template <std::size_t D>
inline SpherePoint<D + 1> central_lift(const Vec<D>& x) {
  Vec<D + 1> v;
  for (std::size_t i = 0; i < D; ++i) v[i] = x[i];
  v[D] = 1.0;
  return SpherePoint<D + 1>(v);
}

/// Spherical blow-up relative to the north pole:
///   Psi_N(P) = (N - (N.P) P) / sqrt(1 - (N.P)^2),  P != +-N.
template <std::size_t D>
inline SpherePoint<D> spherical_blowup(const SpherePoint<D>& p) {
  const double c = p[D - 1];  // N . P
  if (std::fabs(c) >= 1.0 - kPoleGuard)
    throw std::domain_error("spherical_blowup: point too close to +-N");
  const Vec<D> n = Vec<D>::axis(D - 1);
  return SpherePoint<D>((n - c * p.vec()) / std::sqrt(1.0 - c * c));
}

/// Conjugate of the blow-up through the central projection,
///   Id^{-1} o alpha_N o Psi_N o alpha_N^{-1} o Id,
/// which equals the inversion on R^D minus the origin.
template <std::size_t D>
inline PolarPoint<D> blowup_conjugate(const PolarPoint<D>& p) {
  const SpherePoint<D + 1> lifted = central_lift<D>(p.cartesian());
  const Vec<D + 1> back = central_project(spherical_blowup(lifted));
  Vec<D> y;
  for (std::size_t i = 0; i < D; ++i) y[i] = back[i];
  return PolarPoint<D>::from_cartesian(y);
}

}  // namespace wulff
