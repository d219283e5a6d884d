#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "jsrlab/complex_matrix.hpp"

namespace jsrlab {

/// Declarative description of a vector norm family and its induced operator
/// norm. Five kinds:
///   Euclidean    ||v||_2                  -> operator norm = largest singular value
///   VectorSup    max_i |v_i|              -> operator norm = max absolute row sum
///   EntrySup     (matrix-only) max |a_ij| -> NOT induced by any vector norm
///   Ellipsoidal  ||W v||_2, W invertible  -> sigma_max(W A W^-1)
///   Transported  base(S v), S invertible  -> base operator norm of S A S^-1
class NormSpec {
 public:
  enum class Kind { Euclidean, VectorSup, EntrySup, Ellipsoidal, Transported };

  static NormSpec euclidean();
  static NormSpec vector_sup();
  static NormSpec entry_sup();
  /// Throws SingularMatrixError if W is singular or cond(W) exceeds the cap.
  static NormSpec ellipsoidal(const CMatrix& w);
  static NormSpec transported(const CMatrix& s, const NormSpec& base);

  Kind kind() const { return kind_; }
  /// 0 means dimension-agnostic (Euclidean / VectorSup / EntrySup).
  int dim() const { return dim_; }
  bool induced() const { return kind_ != Kind::EntrySup; }
  bool vector_capable() const { return kind_ != Kind::EntrySup; }

  const CMatrix& factor() const;          // W or S
  const CMatrix& factor_inverse() const;  // cached at construction
  double factor_condition() const { return condition_; }
  const NormSpec& base() const;

  std::string describe() const;

 private:
  NormSpec(Kind k) : kind_(k) {}

  Kind kind_;
  int dim_ = 0;
  std::shared_ptr<const CMatrix> factor_;
  std::shared_ptr<const CMatrix> factor_inv_;
  std::shared_ptr<const NormSpec> base_;
  double condition_ = 1.0;
  int transport_depth_ = 0;
};

/// Norm of a vector. EntrySup is rejected (matrix-only norm).
double vector_norm(const NormSpec& spec, std::span<const Complex> v);

/// Operator norm of a matrix under the spec (exact closed forms throughout).
double operator_norm(const NormSpec& spec, const CMatrix& a);

/// sup over members of the operator norm. Empty sets are rejected.
double set_norm(const NormSpec& spec, const MatrixSet& sigma);

/// sup over members of the spectral radius. Empty sets are rejected.
double set_spectral_radius(const MatrixSet& sigma);

struct DescentResult {
  CMatrix w;           // best ellipsoidal factor found
  double upper = 0.0;  // achieved set norm: a certified upper bound for the JSR
  std::uint64_t evaluations = 0;
};

/// Derivative-free descent over ellipsoidal norms: W is a lower-triangular
/// factor with positive diagonal, perturbed one axis at a time, accepted only
/// on strict improvement (step shrinks 0.9x on failure). Monotone in budget
/// for a fixed seed. The returned value is always a valid upper bound.
DescentResult ellipsoidal_descent(const MatrixSet& sigma, std::uint64_t budget,
                                  std::uint64_t seed);

struct DistortionResult {
  CMatrix s;                // transport matrix, scaled so ||S v||_2 <= ||v||_1 on samples
  double distortion = 1.0;  // smallest C found with C^-1 ||v||_1 <= ||S v||_2 <= ||v||_1
  int samples = 0;
  double lemma_bound = 0.0;  // 2^d - 1
  bool within_lemma_bound = false;
};

/// Empirical two-norm transport search: minimizes over S the spread of
/// ||S v||_2 / ||v||_1 on a fixed set of sampled unit vectors. When both
/// norms are Euclidean up to a linear change of variables the exact
/// transport is used as a starting point and the distortion is ~1.
DistortionResult distortion_search(const NormSpec& spec1, const NormSpec& spec2, int dim,
                                   std::uint64_t budget, std::uint64_t seed,
                                   int samples_per_eval = 4096);

}  // namespace jsrlab
