#pragma once

#include <cstdint>

#include "jsrlab/complex_matrix.hpp"
#include "jsrlab/rng.hpp"

namespace jsrlab {

/// Matrix with i.i.d. standard complex normal entries.
CMatrix random_matrix(Rng& rng, int dim);

/// Haar-ish random unitary: Gram-Schmidt of a complex Gaussian matrix
/// (two passes, so columns are orthonormal to machine precision).
CMatrix random_unitary(Rng& rng, int dim);

/// Random matrix with prescribed 2-norm condition number: U diag(s) V^H with
/// singular values filling [1/sqrt(cond), sqrt(cond)] geometrically.
CMatrix random_conditioned(Rng& rng, int dim, double cond);

/// Diagonal matrix with positive entries log-uniform in [1/scale, scale].
CMatrix random_positive_diagonal(Rng& rng, int dim, double scale);

/// Strictly upper triangular random matrix (nilpotent by construction).
CMatrix random_strictly_upper(Rng& rng, int dim);

/// Set of `count` i.i.d. complex Gaussian matrices, optionally rescaled so
/// the Euclidean set norm is 1.
MatrixSet random_set(Rng& rng, int dim, int count, bool normalize_set_norm);

}  // namespace jsrlab
