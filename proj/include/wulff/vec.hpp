#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>

namespace wulff {

/// Fixed-size Euclidean vector. All library geometry runs on D in {2, 3, 4}.
template <std::size_t D>
struct Vec {
  std::array<double, D> c{};

  constexpr Vec() = default;
  constexpr Vec(std::initializer_list<double> xs) {
    std::size_t i = 0;
    for (double x : xs) {
      if (i >= D) throw std::invalid_argument("Vec: too many initializers");
      c[i++] = x;
    }
    if (i != D) throw std::invalid_argument("Vec: too few initializers");
  }

  static constexpr std::size_t size() { return D; }
  constexpr double& operator[](std::size_t i) { return c[i]; }
  constexpr double operator[](std::size_t i) const { return c[i]; }

  static constexpr Vec zero() { return Vec{}; }
  static constexpr Vec axis(std::size_t i) {
    Vec v{};
    v.c[i] = 1.0;
    return v;
  }

  Vec& operator+=(const Vec& o) {
    for (std::size_t i = 0; i < D; ++i) c[i] += o.c[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (std::size_t i = 0; i < D; ++i) c[i] -= o.c[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (std::size_t i = 0; i < D; ++i) c[i] *= s;
    return *this;
  }
  Vec& operator/=(double s) { return (*this) *= (1.0 / s); }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator/(Vec a, double s) { return a /= s; }
  friend Vec operator-(const Vec& a) {
    Vec r;
    for (std::size_t i = 0; i < D; ++i) r.c[i] = -a.c[i];
    return r;
  }

  friend double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < D; ++i) s += a.c[i] * b.c[i];
    return s;
  }

  double norm2() const { return dot(*this, *this); }
  double norm() const { return std::sqrt(norm2()); }

  bool all_finite() const {
    for (double x : c)
      if (!std::isfinite(x)) return false;
    return true;
  }

  Vec normalized() const {
    const double n = norm();
    if (!(n > 0.0) || !std::isfinite(n))
      throw std::invalid_argument("Vec::normalized: zero or non-finite vector");
    return *this / n;
  }

  friend std::ostream& operator<<(std::ostream& os, const Vec& v) {
    os << "(";
    for (std::size_t i = 0; i < D; ++i) os << (i ? ", " : "") << v.c[i];
    return os << ")";
  }
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;
using Vec4 = Vec<4>;

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
              a[0] * b[1] - a[1] * b[0]};
}

/// Vector orthogonal to three vectors in R^4 (cofactor expansion of the
/// formal determinant with unit vectors in the first row).
inline Vec4 cross(const Vec4& a, const Vec4& b, const Vec4& c) {
  auto det3 = [](double m00, double m01, double m02, double m10, double m11,
                 double m12, double m20, double m21, double m22) {
    return m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
           m02 * (m10 * m21 - m11 * m20);
  };
  Vec4 r;
  r[0] = det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
  r[1] = -det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
  r[2] = det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
  r[3] = -det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
  return r;
}

/// Dense square matrix, row-major. Used for ambient Hessian forms (D <= 4)
/// and small chart Hessians.
template <std::size_t D>
struct Mat {
  std::array<double, D * D> a{};

  constexpr double& operator()(std::size_t i, std::size_t j) { return a[i * D + j]; }
  constexpr double operator()(std::size_t i, std::size_t j) const { return a[i * D + j]; }

  static Mat zero() { return Mat{}; }
  static Mat identity() {
    Mat m{};
    for (std::size_t i = 0; i < D; ++i) m(i, i) = 1.0;
    return m;
  }
  static Mat outer(const Vec<D>& u, const Vec<D>& v) {
    Mat m;
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) m(i, j) = u[i] * v[j];
    return m;
  }

  Mat& operator+=(const Mat& o) {
    for (std::size_t i = 0; i < D * D; ++i) a[i] += o.a[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (std::size_t i = 0; i < D * D; ++i) a[i] -= o.a[i];
    return *this;
  }
  Mat& operator*=(double s) {
    for (std::size_t i = 0; i < D * D; ++i) a[i] *= s;
    return *this;
  }
  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  friend Mat operator*(Mat x, double s) { return x *= s; }
  friend Mat operator*(double s, Mat x) { return x *= s; }

  friend Vec<D> operator*(const Mat& m, const Vec<D>& v) {
    Vec<D> r;
    for (std::size_t i = 0; i < D; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < D; ++j) s += m(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }
};

/// Bilinear form u^T M v.
template <std::size_t D>
inline double quad_form(const Mat<D>& m, const Vec<D>& u, const Vec<D>& v) {
  return dot(u, m * v);
}

/// Eigenvalues of a symmetric 2x2 matrix, ascending.
inline std::array<double, 2> sym_eigenvalues(const Mat<2>& m) {
  const double tr = m(0, 0) + m(1, 1);
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  double disc = tr * tr / 4.0 - det;
  if (disc < 0.0) disc = 0.0;  // symmetric input: negative only by roundoff
  const double s = std::sqrt(disc);
  return {tr / 2.0 - s, tr / 2.0 + s};
}

}  // namespace wulff
