#pragma once

// Reference computations used only by tests. Nothing here calls the
// eigensolver or exponential under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "adiawalk/linalg.hpp"

namespace oracle {

using adiawalk::Complex;
using adiawalk::Matrix;
using adiawalk::Vector;

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ull + salt); }

inline Matrix random_hermitian(std::mt19937_64& g, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> d(0.0, 1.0);
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Complex(d(g), i == j ? 0.0 : d(g));
  Matrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * scale * (a(i, j) + std::conj(a(j, i)));
  return h;
}

inline Vector random_state(std::mt19937_64& g, std::size_t n) {
  std::normal_distribution<double> d(0.0, 1.0);
  Vector v(n);
  double s = 0.0;
  for (auto& x : v) {
    x = Complex(d(g), d(g));
    s += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(s);
  return v;
}

inline Matrix mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.dim();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

inline Matrix add(const Matrix& a, const Matrix& b, Complex cb = 1.0) {
  Matrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + cb * b(i, j);
  return c;
}

inline Matrix scale(const Matrix& a, Complex s) {
  Matrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = s * a(i, j);
  return c;
}

inline Matrix eye(std::size_t n) {
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 1.0;
  return c;
}

inline double frobenius(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

inline double max_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

// Spectral norm by power iteration on A^dag A.
inline double spectral_norm(const Matrix& a, int iters = 100000) {
  const std::size_t n = a.dim();
  Matrix ah(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ah(i, j) = std::conj(a(j, i));
  const Matrix m = mul(ah, a);
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex(1.0 + 0.1 * double(i), 0.3 - 0.05 * double(i));
  double lambda = 0.0;
  for (int it = 0; it < iters; ++it) {
    Vector w(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += m(i, j) * v[j];
    double s = 0.0;
    for (auto& x : w) s += std::norm(x);
    s = std::sqrt(s);
    if (s == 0.0) return 0.0;
    for (auto& x : w) x /= s;
    const bool settled = std::abs(s - lambda) <= 1e-16 * s;
    lambda = s;
    v = w;
    if (settled && it > 50) break;
  }
  return std::sqrt(lambda);
}

inline Matrix commutator(const Matrix& a, const Matrix& b) { return add(mul(a, b), mul(b, a), -1.0); }

// Characteristic polynomial coefficients c_0..c_n (monic, c_n = 1) by Faddeev-LeVerrier.
inline std::vector<Complex> characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.dim();
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  Matrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = add(mul(a, m), eye(n), c[n - k + 1]);
    const Matrix am = mul(a, m);
    Complex tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / double(k);
  }
  return c;
}

// All roots of a monic polynomial by Durand-Kerner iteration.
inline std::vector<Complex> polynomial_roots(const std::vector<Complex>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<Complex> z(n);
  const Complex seed(0.4, 0.9);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::pow(seed, double(k)) * (1.0 + 0.5 * std::abs(c[0]));
  auto eval = [&](Complex x) {
    Complex v = c[n];
    for (std::size_t k = n; k-- > 0;) v = v * x + c[k];
    return v;
  };
  for (int it = 0; it < 2000; ++it) {
    double delta = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex den = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) den *= z[k] - z[j];
      const Complex step = eval(z[k]) / den;
      z[k] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-15) break;
  }
  // Polish each root with Newton on the polynomial.
  for (auto& x : z)
    for (int it = 0; it < 5; ++it) {
      Complex p = c[n], dp = 0.0;
      for (std::size_t k = n; k-- > 0;) {
        dp = dp * x + p;
        p = p * x + c[k];
      }
      if (std::abs(dp) > 0.0) x -= p / dp;
    }
  return z;
}

inline std::vector<double> sorted_real_roots(const Matrix& a) {
  std::vector<double> out;
  for (auto z : polynomial_roots(characteristic_polynomial(a))) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

// exp(A) by scaling and squaring with a degree-24 Taylor series.
inline Matrix expm(const Matrix& a) {
  const double nrm = frobenius(a);
  int squarings = 0;
  double scaled = nrm;
  while (scaled > 0.25) {
    scaled *= 0.5;
    ++squarings;
  }
  const Matrix x = scale(a, std::ldexp(1.0, -squarings));
  Matrix term = eye(a.dim()), sum = eye(a.dim());
  for (int k = 1; k <= 24; ++k) {
    term = scale(mul(term, x), 1.0 / double(k));
    sum = add(sum, term);
  }
  for (int k = 0; k < squarings; ++k) sum = mul(sum, sum);
  return sum;
}

// exp(-i t H)
inline Matrix expm_i(const Matrix& h, double t) { return expm(scale(h, Complex(0.0, -t))); }

// Time-ordered propagator of i dU/dt = H(t) U over [t0, t1] by the exponential
// midpoint rule, Richardson-extrapolated and refined until two successive
// estimates agree to tol.
inline Matrix time_ordered(const std::function<Matrix(double)>& hamiltonian, double t0, double t1,
                           double tol = 1e-13, int max_level = 14) {
  auto midpoint = [&](int pieces) {
    const double dt = (t1 - t0) / pieces;
    Matrix u = eye(hamiltonian(t0).dim());
    for (int k = 0; k < pieces; ++k) u = mul(expm_i(hamiltonian(t0 + (k + 0.5) * dt), dt), u);
    return u;
  };
  Matrix coarse = midpoint(1);
  Matrix prev_extrap;
  for (int level = 1; level <= max_level; ++level) {
    const Matrix fine = midpoint(1 << level);
    const Matrix extrap = add(scale(fine, 4.0 / 3.0), coarse, -1.0 / 3.0);
    if (level > 1 && max_diff(extrap, prev_extrap) < tol) return extrap;
    prev_extrap = extrap;
    coarse = fine;
  }
  return prev_extrap;
}

// Smallest arc between the lowest eigenphase and the others, with phases
// taken from the characteristic polynomial roots.
inline double ground_phase_gap(const Matrix& u) {
  std::vector<double> ph;
  for (auto z : polynomial_roots(characteristic_polynomial(u))) ph.push_back(-std::arg(z));
  std::sort(ph.begin(), ph.end());
  const double two_pi = 2.0 * std::acos(-1.0);
  double g = two_pi;
  for (std::size_t k = 1; k < ph.size(); ++k) {
    double d = std::fmod(std::abs(ph[k] - ph[0]), two_pi);
    g = std::min(g, std::min(d, two_pi - d));
  }
  return g;
}

inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Composite trapezoid rule with n panels.
inline double trapezoid(const std::function<double(double)>& f, double a, double b, std::size_t n) {
  const double h = (b - a) / double(n);
  double s = 0.5 * (f(a) + f(b));
  for (std::size_t k = 1; k < n; ++k) s += f(a + h * double(k));
  return s * h;
}

}  // namespace oracle
