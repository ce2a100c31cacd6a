#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace wulff {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

inline double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

/// In-place radix-2 complex FFT (size must be a power of two).
inline void fft(std::vector<std::complex<double>>& a, bool inverse = false) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft: size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 1.0 : -1.0) * kTwoPi / double(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto u = a[i + k];
        const auto v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= double(n);
}

/// Fourier coefficients (a0, ak, bk) of samples of a real 2pi-periodic
/// function on the uniform grid theta_j = 2pi j / n.
struct FourierFit {
  double a0 = 0.0;
  std::vector<double> ak, bk;  // k = 1 .. n/2 (last bk dropped at Nyquist)
};

inline FourierFit fourier_fit(const std::vector<double>& samples) {
  const std::size_t n = samples.size();
  std::vector<std::complex<double>> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = samples[i];
  fft(a);
  FourierFit f;
  f.a0 = a[0].real() / double(n);
  const std::size_t kmax = n / 2;
  f.ak.resize(kmax);
  f.bk.resize(kmax);
  for (std::size_t k = 1; k <= kmax; ++k) {
    const double scale = (k == n - k) ? 1.0 / double(n) : 2.0 / double(n);
    f.ak[k - 1] = a[k].real() * scale;
    f.bk[k - 1] = -a[k].imag() * scale;
  }
  if (kmax >= 1) f.bk[kmax - 1] = 0.0;  // Nyquist sine is not resolvable
  return f;
}

/// Golden-section minimization of f on [lo, hi].
inline double golden_min(const std::function<double(double)>& f, double lo,
                         double hi, double xtol, int max_iter = 200) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  return (f1 < f2) ? x1 : x2;
}

/// Root of f on [lo, hi] with f(lo), f(hi) of opposite sign.
inline double bisect_root(const std::function<double(double)>& f, double lo,
                          double hi, double xtol, int max_iter = 200) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::invalid_argument("bisect_root: no sign change on bracket");
  for (int it = 0; it < max_iter && (hi - lo) > xtol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Solve the SPD system A x = b in place via Cholesky; A is n x n row-major.
inline std::vector<double> cholesky_solve(std::vector<double> A,
                                          std::vector<double> b) {
  const std::size_t n = b.size();
  if (A.size() != n * n) throw std::invalid_argument("cholesky_solve: shape");
  for (std::size_t j = 0; j < n; ++j) {
    double d = A[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= A[j * n + k] * A[j * n + k];
    if (!(d > 0.0)) throw std::runtime_error("cholesky_solve: not SPD");
    d = std::sqrt(d);
    A[j * n + j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = A[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= A[i * n + k] * A[j * n + k];
      A[i * n + j] = s / d;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= A[i * n + k] * b[k];
    b[i] = s / A[i * n + i];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= A[k * n + ii] * b[k];
    b[ii] = s / A[ii * n + ii];
  }
  return b;
}

/// C-infinity step: 0 for u <= 0, 1 for u >= 1, strictly increasing between.
inline double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double e1 = std::exp(-1.0 / u);
  const double e2 = std::exp(-1.0 / (1.0 - u));
  return e1 / (e1 + e2);
}

/// C-infinity plateau: 1 on [-inner, inner], 0 outside [-outer, outer].
inline double smooth_plateau(double x, double inner, double outer) {
  const double ax = std::fabs(x);
  if (ax <= inner) return 1.0;
  if (ax >= outer) return 0.0;
  return smooth_step((outer - ax) / (outer - inner));
}

/// Run fn(i) for i in [0, n) on a few threads. Falls back to serial for
/// small n.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                         std::size_t grain = 256) {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (hw == 1 || n <= grain) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min(hw, (n + grain - 1) / grain);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace wulff
