#include "jsrlab/ensemble.hpp"

#include <cmath>
#include <stdexcept>

#include "jsrlab/matcore.hpp"
#include "jsrlab/norms.hpp"

namespace jsrlab {

CMatrix random_matrix(Rng& rng, int dim) {
  CMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = rng.cnormal();
  return m;
}

CMatrix random_unitary(Rng& rng, int dim) {
  CMatrix g = random_matrix(rng, dim);
  // modified Gram-Schmidt on columns, two passes
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < dim; ++j) {
      for (int p = 0; p < j; ++p) {
        Complex proj(0.0, 0.0);
        for (int i = 0; i < dim; ++i) proj += std::conj(g(i, p)) * g(i, j);
        for (int i = 0; i < dim; ++i) g(i, j) -= proj * g(i, p);
      }
      double norm = 0.0;
      for (int i = 0; i < dim; ++i) norm += std::norm(g(i, j));
      norm = std::sqrt(norm);
      if (norm == 0.0) {
        // astronomically unlikely; restart with fresh noise
        g = random_matrix(rng, dim);
        pass = -1;
        break;
      }
      for (int i = 0; i < dim; ++i) g(i, j) /= norm;
    }
  }
  return g;
}

CMatrix random_conditioned(Rng& rng, int dim, double cond) {
  if (cond < 1.0) throw std::invalid_argument("random_conditioned: cond must be >= 1");
  const CMatrix u = random_unitary(rng, dim);
  const CMatrix v = random_unitary(rng, dim);
  CVector s(static_cast<std::size_t>(dim));
  const double hi = std::sqrt(cond);
  for (int i = 0; i < dim; ++i) {
    const double t = (dim == 1) ? 0.0 : static_cast<double>(i) / (dim - 1);
    s[static_cast<std::size_t>(i)] = hi * std::pow(cond, -t);  // hi down to 1/hi
  }
  return mat_mul(mat_mul(u, CMatrix::diagonal(s)), v.adjoint());
}

CMatrix random_positive_diagonal(Rng& rng, int dim, double scale) {
  if (scale < 1.0) throw std::invalid_argument("random_positive_diagonal: scale must be >= 1");
  CVector d(static_cast<std::size_t>(dim));
  const double lo = std::log(1.0 / scale);
  const double hi = std::log(scale);
  for (auto& x : d) x = std::exp(rng.uniform(lo, hi));
  return CMatrix::diagonal(d);
}

CMatrix random_strictly_upper(Rng& rng, int dim) {
  CMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) m(i, j) = rng.cnormal();
  return m;
}

MatrixSet random_set(Rng& rng, int dim, int count, bool normalize_set_norm) {
  std::vector<CMatrix> members;
  members.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) members.push_back(random_matrix(rng, dim));
  MatrixSet sigma(std::move(members));
  if (normalize_set_norm) {
    const double norm = set_norm(NormSpec::euclidean(), sigma);
    if (norm > 0.0) sigma = sigma.scaled(Complex(1.0 / norm, 0.0));
  }
  return sigma;
}

}  // namespace jsrlab
