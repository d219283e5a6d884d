#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace jsrlab {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense d x d complex matrix, row-major, binary64 entries.
///
/// The universal value type of the library. All arithmetic uses a fixed
/// row-major accumulation order, so results are reproducible run to run.
/// Equality is always tolerance-based (approx_equal), never bitwise.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int dim);  // zero matrix
  CMatrix(int dim, std::vector<Complex> entries);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(int dim);
  static CMatrix zero(int dim) { return CMatrix(dim); }
  static CMatrix diagonal(const CVector& d);

  int dim() const { return dim_; }

  Complex& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Complex& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
  }

  std::span<const Complex> entries() const { return entries_; }

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(Complex s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  Complex trace() const;
  CMatrix adjoint() const;    // conjugate transpose
  CMatrix transpose() const;

  double max_abs_entry() const;     // entry-sup matrix norm
  double max_abs_row_sum() const;   // operator norm induced by the vector sup norm
  double frobenius_norm() const;

  bool is_finite() const;
  bool is_zero(double scale = 0.0) const;  // entrywise negligible at given scale

  std::string to_string(int precision = 6) const;

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

/// Exact d^3 multiply-accumulate with row-major accumulation order.
CMatrix mat_mul(const CMatrix& a, const CMatrix& b);

CMatrix mat_pow(const CMatrix& a, int n);

CVector mat_vec(const CMatrix& a, std::span<const Complex> v);

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol);

double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Inverse by Gaussian elimination with partial pivoting.
/// Throws SingularMatrixError when a pivot is negligible.
CMatrix inverse(const CMatrix& a);

/// Ordered finite list of same-dimension matrices.
class MatrixSet {
 public:
  MatrixSet() = default;
  explicit MatrixSet(std::vector<CMatrix> members);
  MatrixSet(std::initializer_list<CMatrix> members);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  const CMatrix& operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }
  const std::vector<CMatrix>& members() const { return members_; }

  MatrixSet conjugated(const CMatrix& s, const CMatrix& s_inv) const;
  MatrixSet scaled(Complex t) const;

 private:
  int dim_ = 0;
  std::vector<CMatrix> members_;
};

}  // namespace jsrlab
