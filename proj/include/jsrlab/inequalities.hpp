#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jsrlab/complex_matrix.hpp"
#include "jsrlab/norms.hpp"

namespace jsrlab {

/// Aggregated outcome of an inequality checked over an ensemble.
/// For inequalities with an explicit constant, `bound` holds it and
/// `violations` must stay 0; for existence-only constants the report carries
/// the empirical maximum and `bound_is_explicit` is false.
struct IneqReport {
  std::string name;
  std::uint64_t trials = 0;
  double max_ratio = 0.0;
  std::string max_ratio_witness;
  double bound = 0.0;
  bool bound_is_explicit = false;
  std::uint64_t violations = 0;
  std::uint64_t skipped = 0;
  std::uint64_t degenerate = 0;
  std::vector<std::pair<std::string, double>> extras;

  bool passed() const { return violations == 0; }
};

struct PowerIneqCheck {
  enum class Branch { Ratio, Nilpotent, ZeroMatrix };
  Branch branch = Branch::Ratio;
  double ratio = 0.0;  // ||A^d|| / (rho(A) ||A||^{d-1}), Ratio branch only
  double bound = 0.0;  // 2^d - 1
  bool ok = false;
};

/// ||A^d|| <= (2^d - 1) rho(A) ||A||^{d-1} for induced operator norms.
/// rho ~ 0 switches to the nilpotent branch (A^d must vanish); the zero
/// matrix is flagged vacuous.
PowerIneqCheck check_power_inequality(const CMatrix& a, const NormSpec& spec, double tol = 1e-8);

struct WeakerLemmaCheck {
  double ratio = 0.0;
  double bound = 0.0;  // d^{d-1} in strict mode; 0 (empirical) otherwise
  bool strict_mode = true;
  bool ok = false;
};

/// ||S Sigma^d S^-1||_0 <= d^{d-1} ||Sigma||_0 ||S Sigma S^-1||_0^{d-1} for
/// positive diagonal S under the entry-sup norm (strict mode, hard bound).
/// With strict_diagonal=false, general S under the Euclidean norm: the ratio
/// is reported but no constant is asserted.
WeakerLemmaCheck check_weaker_lemma(const MatrixSet& sigma, const CMatrix& s,
                                    bool strict_diagonal = true, double tol = 1e-8);

struct SEstimate {
  double value = 0.0;
  NormSpec norm_witness = NormSpec::euclidean();
  std::uint64_t budget_used = 0;
};

/// Lower estimate of sup over norms of ||Sigma^d|| / ||Sigma||^{d-1}, by
/// sampling ellipsoidal norms (the Euclidean norm is always a candidate).
/// The all-zero set gives 0 by definition.
SEstimate estimate_S(const MatrixSet& sigma, std::uint64_t budget, std::uint64_t seed);

struct TheoremBCheck {
  int k = 0;
  double q = 0.0;             // max_{1<=j<=k} rho(Sigma^j)^{1/j}
  double q_restricted = 0.0;  // same max over k/2 < j <= k
  double upper = 0.0;         // certified upper bound at the requested depth
  double ratio = 0.0;         // upper / q: an empirical constant witness
  bool ratio_finite = false;
  bool restricted_matches = false;  // q_restricted == q within tol
  bool suspicious = false;          // q ~ 0 while upper is clearly positive
};

/// Spectral-radius lower data against the certified upper bound; k defaults
/// to 2^d - 1 (k_override > 0 replaces it, reported but never asserted).
TheoremBCheck check_theoremB(const MatrixSet& sigma, int depth, int k_override = 0,
                             double tol = 1e-9);

struct D2TheoremBCheck {
  double rho2_root = 0.0;  // rho(Sigma^2)^{1/2}
  double upper = 0.0;
  double ratio = 0.0;
  bool ratio_finite = false;
  std::vector<double> even_roots;  // rho(Sigma^{2n})^{1/2n} for n = 1..depth/2
  bool monotone = false;           // nondecreasing within tol
  bool suspicious = false;
};

/// d = 2 specialization: ratio against rho(Sigma^2)^{1/2} alone, plus the
/// convergence check on the even-power subsequence.
D2TheoremBCheck check_d2_theoremB(const MatrixSet& sigma, int depth, double tol = 1e-9);

struct OtherIneqCheck {
  enum class Branch { Ratio, Degenerate };
  Branch branch = Branch::Ratio;
  double p_norm = 0.0;      // ||P(A_1..A_d)||
  double denom = 0.0;       // ||Sigma||^{d-1} max_{1<=j<=d} rho(Sigma^j)^{1/j}
  double ratio = 0.0;       // Ratio branch only
  double rho_max = 0.0;     // max_{1<=j<=d} rho(Sigma^j), unrooted
  double sigma_norm = 0.0;  // ||Sigma|| under the chosen spec
  bool ok = false;          // Degenerate branch: ||P|| <= tol ||Sigma||^d
};

/// ||P(A_1,...,A_d)|| vs ||Sigma||^{d-1} max_{1<=j<=d} rho(Sigma^j)^{1/j}.
/// When every rho(Sigma^j) vanishes, P itself must vanish (all trace factors
/// of the identity are zero); that degenerate branch is asserted.
OtherIneqCheck check_other_inequality(const std::vector<CMatrix>& tuple, const NormSpec& spec,
                                      double tol = 1e-9);

struct C1Instance {
  double ratio = 0.0;            // worst over specs of ||Sigma^d|| / (lb * ||Sigma||^{d-1})
  double certified_ratio = 0.0;  // same against the upper bound, when the gap is <= 1%
  bool has_certified = false;
  bool skipped = false;  // lower bound vanished while ||Sigma^d|| did not
  double gap_rel = 0.0;
};

/// One Theorem-A data point for a concrete set and a list of norm specs.
C1Instance theorem_a_instance(const MatrixSet& sigma, const std::vector<NormSpec>& specs,
                              int depth);

/// Knobs shared by the ensemble drivers below. Per-trial randomness comes
/// from counter-split substreams of `seed`, so results do not depend on the
/// number of threads.
struct EnsembleOptions {
  int dim = 2;
  int set_size = 2;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  int depth = 8;
  double tol = 1e-8;
  int threads = 1;
};

IneqReport power_inequality_ensemble(const EnsembleOptions& opts, const NormSpec& spec);
IneqReport weaker_lemma_ensemble(const EnsembleOptions& opts);
IneqReport trace_identity_ensemble(const EnsembleOptions& opts);
/// Conjugation invariance, homogeneity of tau, and trace cyclicity.
IneqReport procesi_ensemble(const EnsembleOptions& opts);
/// Empirical Theorem-A constant: max over trials and norm specs of
/// ||Sigma^d|| / (lower bound * ||Sigma||^{d-1}).
IneqReport estimate_C1(const EnsembleOptions& opts);
IneqReport theorem_b_ensemble(const EnsembleOptions& opts);
IneqReport other_inequality_ensemble(const EnsembleOptions& opts);

}  // namespace jsrlab
