#pragma once

// Test-side oracles, deliberately independent of the library's own
// implementation paths so the two can cross-check.

#include <cmath>
#include <complex>
#include <vector>

#include "jsrlab/complex_matrix.hpp"
#include "jsrlab/rng.hpp"

namespace jsrlab::testing {

// Matrix product with k-outer accumulation order (the library accumulates
// k-inner), so agreement is a real cross-check of the arithmetic.
inline CMatrix mat_mul_oracle(const CMatrix& a, const CMatrix& b) {
  const int d = a.dim();
  CMatrix c(d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

// Durand-Kerner simultaneous root iteration for a monic polynomial given by
// coefficients c[0..n-1] of z^{n-1}..z^0 (i.e. p(z) = z^n + c0 z^{n-1} + ...).
inline std::vector<Complex> polynomial_roots_oracle(const std::vector<Complex>& coeffs,
                                                    int iterations = 200) {
  const int n = static_cast<int>(coeffs.size());
  auto eval = [&](Complex z) {
    Complex acc(1.0, 0.0);
    for (const auto& c : coeffs) acc = acc * z + c;
    return acc;
  };
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  // standard staggered initial guesses on a non-real ray
  Complex seed(0.4, 0.9);
  Complex p(1.0, 0.0);
  for (auto& r : roots) {
    p *= seed;
    r = p;
  }
  for (int it = 0; it < iterations; ++it) {
    for (int i = 0; i < n; ++i) {
      Complex denom(1.0, 0.0);
      for (int j = 0; j < n; ++j) {
        if (j != i) denom *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
      }
      roots[static_cast<std::size_t>(i)] -= eval(roots[static_cast<std::size_t>(i)]) / denom;
    }
  }
  return roots;
}

// Euclidean operator norm via power iteration on A^H A.
inline double power_iteration_norm2(const CMatrix& a, int iterations = 500,
                                    std::uint64_t seed = 1234) {
  const int d = a.dim();
  const CMatrix m = mat_mul(a.adjoint(), a);
  Rng rng(seed);
  CVector v(static_cast<std::size_t>(d));
  for (auto& x : v) x = rng.cnormal();
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    CVector w = mat_vec(m, v);
    double norm = 0.0;
    for (const auto& x : w) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    for (auto& x : w) x /= norm;
    lambda = norm;
    v = std::move(w);
  }
  return std::sqrt(lambda);
}

// Permutation sign by inversion counting.
inline int permutation_sign_oracle(const std::vector<int>& image) {
  int inversions = 0;
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i + 1; j < image.size(); ++j)
      if (image[i] > image[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace jsrlab::testing
