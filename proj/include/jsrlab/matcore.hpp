#pragma once

#include <vector>

#include "jsrlab/complex_matrix.hpp"

namespace jsrlab {

/// Characteristic polynomial coefficients, stored as the elementary symmetric
/// functions s[0..d-1] = (sigma_1, ..., sigma_d) of the eigenvalues, so that
///   p(z) = z^d - sigma_1 z^{d-1} + sigma_2 z^{d-2} - ... + (-1)^d sigma_d.
struct CharPoly {
  std::vector<Complex> sigma;

  int degree() const { return static_cast<int>(sigma.size()); }
};

/// Eigenvalues with multiplicity plus their maximum modulus.
/// Values are sorted by decreasing modulus (ties by real part, then imaginary),
/// so reports are deterministic.
struct Spectrum {
  std::vector<Complex> eigenvalues;
  double radius = 0.0;
};

struct EigenOptions {
  double tolerance = 1e-12;
  int max_iterations_per_eigenvalue = 60;
};

/// Coefficients by the Faddeev-LeVerrier recursion. Independent of the
/// eigenvalue solver, so the two can cross-check each other.
CharPoly char_poly(const CMatrix& a);

/// All d eigenvalues. d <= 2 uses the closed quadratic form; d >= 3 balances,
/// reduces to Hessenberg form and runs explicitly shifted QR iterations.
/// Throws ConvergenceError if an eigenvalue fails to deflate within the cap.
Spectrum eigenvalues(const CMatrix& a, const EigenOptions& opts = {});

double spectral_radius(const CMatrix& a, const EigenOptions& opts = {});

/// Singular values in nonincreasing order, by one-sided Jacobi sweeps.
/// The largest one is the Euclidean operator norm.
std::vector<double> singular_values(const CMatrix& a);

/// Largest singular value = operator norm induced by the Euclidean vector norm.
double euclidean_operator_norm(const CMatrix& a);

/// Spectral condition number sigma_max / sigma_min (infinity when singular).
double condition_number(const CMatrix& a);

/// Entrywise max of |p(A)| normalized by (1 + ||A||_2)^d; expected ~ 0.
double cayley_hamilton_residual(const CMatrix& a);

/// Evaluate the characteristic polynomial at a matrix argument (Horner).
CMatrix char_poly_at(const CharPoly& p, const CMatrix& a);

/// Evaluate the characteristic polynomial at a scalar argument.
Complex char_poly_at(const CharPoly& p, Complex z);

/// Elementary symmetric functions e_1..e_n of the given values.
std::vector<Complex> elementary_symmetric(const std::vector<Complex>& values);

}  // namespace jsrlab
