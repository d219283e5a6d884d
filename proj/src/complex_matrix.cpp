#include "jsrlab/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "jsrlab/config.hpp"
#include "jsrlab/errors.hpp"

namespace jsrlab {

Config& config() {
  static Config cfg;
  return cfg;
}

CMatrix::CMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("CMatrix: dimension must be >= 1");
  if (dim > config().max_dim) throw std::invalid_argument("CMatrix: dimension exceeds cap");
  entries_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

CMatrix::CMatrix(int dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
  if (dim < 1) throw std::invalid_argument("CMatrix: dimension must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(dim) * dim)
    throw std::invalid_argument("CMatrix: entry count does not match dimension");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  dim_ = static_cast<int>(rows.size());
  if (dim_ < 1) throw std::invalid_argument("CMatrix: dimension must be >= 1");
  entries_.reserve(static_cast<std::size_t>(dim_) * dim_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_)
      throw std::invalid_argument("CMatrix: ragged row in initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(int dim) {
  CMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const CVector& d) {
  CMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("CMatrix: dimension mismatch in +");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("CMatrix: dimension mismatch in -");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) { return mat_mul(a, b); }

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("mat_mul: dimension mismatch");
  const int d = a.dim();
  CMatrix c(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < d; ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  }
  return c;
}

CMatrix mat_pow(const CMatrix& a, int n) {
  if (n < 1) throw std::invalid_argument("mat_pow: exponent must be >= 1");
  CMatrix p = a;
  for (int i = 1; i < n; ++i) p = mat_mul(p, a);
  return p;
}

CVector mat_vec(const CMatrix& a, std::span<const Complex> v) {
  if (static_cast<int>(v.size()) != a.dim())
    throw std::invalid_argument("mat_vec: dimension mismatch");
  const int d = a.dim();
  CVector out(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < d; ++j) acc += a(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

Complex CMatrix::trace() const {
  Complex t(0.0, 0.0);
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(j, i);
  return m;
}

double CMatrix::max_abs_entry() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double CMatrix::max_abs_row_sum() const {
  double m = 0.0;
  for (int i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (int j = 0; j < dim_; ++j) s += std::abs((*this)(i, j));
    m = std::max(m, s);
  }
  return m;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

bool CMatrix::is_finite() const {
  for (const auto& e : entries_)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

bool CMatrix::is_zero(double scale) const {
  for (const auto& e : entries_)
    if (!negligible(std::abs(e), scale)) return false;
  return true;
}

std::string CMatrix::to_string(int precision) const {
  std::ostringstream os;
  os.precision(precision);
  for (int i = 0; i < dim_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < dim_; ++j) {
      const Complex& e = (*this)(i, j);
      os << "(" << e.real() << (e.imag() < 0 ? "" : "+") << e.imag() << "i)";
      if (j + 1 < dim_) os << " ";
    }
    os << (i + 1 < dim_ ? "\n" : "]");
  }
  return os.str();
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.dim() != b.dim()) return false;
  return max_abs_diff(a, b) <= tol;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

CMatrix inverse(const CMatrix& a) {
  const int d = a.dim();
  CMatrix work = a;
  CMatrix inv = CMatrix::identity(d);
  const double scale = std::max(a.max_abs_entry(), 1e-300);

  for (int col = 0; col < d; ++col) {
    int pivot = col;
    double best = std::abs(work(col, col));
    for (int r = col + 1; r < d; ++r) {
      double v = std::abs(work(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best <= 1e-14 * scale) {
      throw SingularMatrixError("inverse: matrix is numerically singular",
                                best > 0.0 ? scale / best : std::numeric_limits<double>::infinity());
    }
    if (pivot != col) {
      for (int j = 0; j < d; ++j) {
        std::swap(work(col, j), work(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const Complex p = work(col, col);
    for (int j = 0; j < d; ++j) {
      work(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const Complex f = work(r, col);
      if (f == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < d; ++j) {
        work(r, j) -= f * work(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

MatrixSet::MatrixSet(std::vector<CMatrix> members) : members_(std::move(members)) {
  if (!members_.empty()) {
    dim_ = members_.front().dim();
    for (const auto& m : members_)
      if (m.dim() != dim_) throw std::invalid_argument("MatrixSet: mixed dimensions");
  }
}

MatrixSet::MatrixSet(std::initializer_list<CMatrix> members)
    : MatrixSet(std::vector<CMatrix>(members)) {}

MatrixSet MatrixSet::conjugated(const CMatrix& s, const CMatrix& s_inv) const {
  std::vector<CMatrix> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(mat_mul(mat_mul(s, m), s_inv));
  return MatrixSet(std::move(out));
}

MatrixSet MatrixSet::scaled(Complex t) const {
  std::vector<CMatrix> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m * t);
  return MatrixSet(std::move(out));
}

}  // namespace jsrlab
