#include "adiawalk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "adiawalk/errors.hpp"

namespace adiawalk {

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::diagonal(std::span<const Complex> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  Matrix m(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw InputError("matrix must be square");
    std::size_t j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  for (std::size_t i = 0; i < dim_; ++i) (*this)(i, j) = v[i];
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

bool Matrix::is_finite() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](Complex x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

Matrix& Matrix::operator+=(const Matrix& b) {
  if (b.dim_ != dim_) throw InputError("dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
  if (b.dim_ != dim_) throw InputError("dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex c) {
  for (auto& x : a_) x *= c;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, Complex c) { return a *= c; }
Matrix operator*(Complex c, Matrix a) { return a *= c; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.dim();
  if (b.dim() != n) throw InputError("dimension mismatch");
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Vector operator*(const Matrix& a, const Vector& x) {
  const std::size_t n = a.dim();
  if (x.size() != n) throw InputError("dimension mismatch");
  Vector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix outer(const Vector& a, const Vector& b) {
  Matrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

Complex inner(const Vector& a, const Vector& b) {
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm(const Vector& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

HermitianOperator::HermitianOperator(const Matrix& m, double tol) {
  if (!m.is_finite()) throw InputError("non-finite matrix entry");
  const std::size_t n = m.dim();
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) asym = std::max(asym, std::abs(m(i, j) - std::conj(m(j, i))));
  if (asym > tol) throw InputError("matrix is not Hermitian (deviation " + std::to_string(asym) + ")");
  m_ = Matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    m_(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      m_(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m_(j, i) = std::conj(m_(i, j));
    }
  }
}

UnitaryOperator::UnitaryOperator(Matrix m, double tol) : m_(std::move(m)) {
  if (!m_.is_finite()) throw InputError("non-finite matrix entry");
  const double dev = max_abs_diff(m_.adjoint() * m_, Matrix::identity(m_.dim()));
  if (dev > tol) throw InputError("matrix is not unitary (deviation " + std::to_string(dev) + ")");
}

Matrix NormalEigenDecomposition::reconstruct() const {
  const std::size_t n = dim();
  Matrix r(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eigenvectors(i, k) * eigenvalues[k];
      for (std::size_t j = 0; j < n; ++j) r(i, j) += vik * std::conj(eigenvectors(j, k));
    }
  return r;
}

namespace {

constexpr int kMaxSweeps = 100;

// Largest-magnitude component made real positive.
void fix_gauge(Matrix& v) {
  const std::size_t n = v.dim();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t imax = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(v(i, k)) > std::abs(v(imax, k)) * (1.0 + 1e-12)) imax = i;
    const double mag = std::abs(v(imax, k));
    if (mag == 0.0) continue;
    const Complex ph = std::conj(v(imax, k)) / mag;
    for (std::size_t i = 0; i < n; ++i) v(i, k) *= ph;
  }
}

// Cyclic complex Jacobi on a Hermitian matrix. Returns unsorted diagonal and rotations.
void jacobi_hermitian(Matrix a, std::vector<double>& evals, Matrix& v) {
  const std::size_t n = a.dim();
  v = Matrix::identity(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n * n; ++i) scale += std::norm(a.data()[i]);
  scale = std::sqrt(scale);
  const double threshold = 1e-15 * scale;

  bool converged = (n <= 1 || scale == 0.0);
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    double offmax = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) offmax = std::max(offmax, std::abs(a(p, q)));
    if (offmax <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag < 1e-300) continue;
        const Complex ph = a(p, q) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex gqp = -s * std::conj(ph);
        const Complex gqq = c * std::conj(ph);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * c + akq * gqp;
          a(k, q) = akp * s + akq * gqq;
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * c + vkq * gqp;
          v(k, q) = vkp * s + vkq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + std::conj(gqp) * aqk;
          a(q, k) = s * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged) {
    double offmax = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) offmax = std::max(offmax, std::abs(a(p, q)));
    if (offmax > threshold)
      throw ConvergenceError("Jacobi iteration did not converge", offmax);
  }
  evals.resize(n);
  for (std::size_t i = 0; i < n; ++i) evals[i] = a(i, i).real();
}

NormalEigenDecomposition sorted_hermitian(const Matrix& h) {
  std::vector<double> ev;
  Matrix v;
  jacobi_hermitian(h, ev, v);
  const std::size_t n = ev.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return ev[i] < ev[j]; });
  NormalEigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = ev[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  fix_gauge(out.eigenvectors);
  return out;
}

}  // namespace

NormalEigenDecomposition hermitian_eig(const HermitianOperator& h) {
  return sorted_hermitian(h.matrix());
}

NormalEigenDecomposition normal_eig(const Matrix& a, double cluster_tol) {
  const std::size_t n = a.dim();
  if (!a.is_finite()) throw InputError("non-finite matrix entry");
  const Matrix ad = a.adjoint();
  const double scale = std::max(1.0, a.max_abs());
  if (max_abs_diff(a * ad, ad * a) > 1e-8 * scale * scale)
    throw InputError("matrix is not normal");

  Matrix re(n), im(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      re(i, j) = 0.5 * (a(i, j) + ad(i, j));
      im(i, j) = (a(i, j) - ad(i, j)) / Complex(0.0, 2.0);
    }
  auto first = sorted_hermitian(re);
  Matrix v = first.eigenvectors;

  const double tol = cluster_tol * scale;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && first.eigenvalues[end].real() - first.eigenvalues[end - 1].real() <= tol) ++end;
    const std::size_t k = end - start;
    if (k > 1) {
      Matrix bc(k);
      std::vector<Vector> cols(k);
      for (std::size_t c = 0; c < k; ++c) cols[c] = v.column(start + c);
      std::vector<Vector> bcols(k);
      for (std::size_t c = 0; c < k; ++c) bcols[c] = im * cols[c];
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) bc(r, c) = inner(cols[r], bcols[c]);
      bc = HermitianOperator(bc, 1e-8 * scale).matrix();
      const auto second = sorted_hermitian(bc);
      for (std::size_t c = 0; c < k; ++c) {
        Vector nv(n);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t i = 0; i < n; ++i) nv[i] += cols[r][i] * second.eigenvectors(r, c);
        v.set_column(start + c, nv);
      }
    }
    start = end;
  }

  NormalEigenDecomposition out;
  out.eigenvalues.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vector col = v.column(k);
    out.eigenvalues[k] = inner(col, a * col);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t i) {
    const Complex z = out.eigenvalues[i];
    return std::abs(z) == 0.0 ? -10.0 : eigenphase(z / std::abs(z));
  };
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return key(i) < key(j); });
  NormalEigenDecomposition sorted;
  sorted.eigenvalues.resize(n);
  sorted.eigenvectors = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    sorted.eigenvalues[k] = out.eigenvalues[order[k]];
    for (std::size_t i = 0; i < n; ++i) sorted.eigenvectors(i, k) = v(i, order[k]);
  }
  fix_gauge(sorted.eigenvectors);
  return sorted;
}

NormalEigenDecomposition normal_eig(const UnitaryOperator& u) {
  auto d = normal_eig(u.matrix());
  for (auto& z : d.eigenvalues) z /= std::abs(z);
  return d;
}

UnitaryOperator expm_i_hermitian(const HermitianOperator& h, double scale) {
  if (!std::isfinite(scale)) throw InputError("scale must be finite");
  const auto d = hermitian_eig(h);
  const std::size_t n = h.dim();
  std::vector<Complex> ph(n);
  for (std::size_t k = 0; k < n; ++k) ph[k] = std::polar(1.0, -scale * d.eigenvalues[k].real());
  NormalEigenDecomposition e{ph, d.eigenvectors};
  return UnitaryOperator(e.reconstruct());
}

UnitaryLog logm_unitary(const UnitaryOperator& u) {
  const auto d = normal_eig(u);
  UnitaryLog out;
  NormalEigenDecomposition e{d.eigenvalues, d.eigenvectors};
  for (auto& z : e.eigenvalues) {
    if (std::abs(z + 1.0) <= 1e-12) out.branch_cut_warning = true;
    double th = std::arg(z);
    if (th <= -std::numbers::pi) th = std::numbers::pi;
    z = th;
  }
  out.theta = HermitianOperator(e.reconstruct());
  return out;
}

double operator_norm(const Matrix& a) {
  if (a.dim() == 0) return 0.0;
  const auto d = hermitian_eig(HermitianOperator(a.adjoint() * a, 1e-8 * std::max(1.0, a.max_abs() * a.max_abs())));
  return std::sqrt(std::max(0.0, d.eigenvalues.back().real()));
}

double angular_distance(Complex z1, Complex z2) {
  if (std::abs(std::abs(z1) - 1.0) > 1e-8 || std::abs(std::abs(z2) - 1.0) > 1e-8)
    throw InputError("angular_distance needs unit-modulus arguments");
  return 2.0 * std::asin(std::min(1.0, 0.5 * std::abs(z1 - z2)));
}

double eigenphase(Complex z) {
  double phi = -std::arg(z);
  if (phi <= -std::numbers::pi) phi = std::numbers::pi;
  return phi + 0.0;
}

}  // namespace adiawalk
