#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace adiawalk {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const double> d);
  static Matrix diagonal(std::span<const Complex> d);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  Complex* data() { return a_.data(); }
  const Complex* data() const { return a_.data(); }

  Matrix adjoint() const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);
  double max_abs() const;
  bool is_finite() const;

  Matrix& operator+=(const Matrix& b);
  Matrix& operator-=(const Matrix& b);
  Matrix& operator*=(Complex c);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Matrix a, Complex c);
Matrix operator*(Complex c, Matrix a);
Vector operator*(const Matrix& a, const Vector& x);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix outer(const Vector& a, const Vector& b);  // |a><b|
Complex inner(const Vector& a, const Vector& b);  // <a|b>
double norm(const Vector& v);
double max_abs_diff(const Matrix& a, const Matrix& b);

class HermitianOperator {
 public:
  HermitianOperator() = default;
  // Throws InputError when ||A - A^dag||_max exceeds tol; stores the symmetrized matrix.
  explicit HermitianOperator(const Matrix& m, double tol = 1e-12);
  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }

 private:
  Matrix m_;
};

class UnitaryOperator {
 public:
  UnitaryOperator() = default;
  explicit UnitaryOperator(Matrix m, double tol = 1e-10);
  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }

 private:
  Matrix m_;
};

struct NormalEigenDecomposition {
  std::vector<Complex> eigenvalues;
  Matrix eigenvectors;  // columns

  std::size_t dim() const { return eigenvalues.size(); }
  Vector vector(std::size_t k) const { return eigenvectors.column(k); }
  Matrix reconstruct() const;
};

// Real eigenvalues ascending.
NormalEigenDecomposition hermitian_eig(const HermitianOperator& h);
// Eigenvalues sorted by eigenphase ascending.
NormalEigenDecomposition normal_eig(const UnitaryOperator& u);
NormalEigenDecomposition normal_eig(const Matrix& a, double cluster_tol = 1e-9);

// e^{-i scale H}
UnitaryOperator expm_i_hermitian(const HermitianOperator& h, double scale);

struct UnitaryLog {
  HermitianOperator theta;  // U = e^{i theta}
  bool branch_cut_warning = false;
};
UnitaryLog logm_unitary(const UnitaryOperator& u);

double operator_norm(const Matrix& a);
double angular_distance(Complex z1, Complex z2);
// Phase with the i*log convention: e^{-i phi} = z, phi in (-pi, pi].
double eigenphase(Complex z);

}  // namespace adiawalk
