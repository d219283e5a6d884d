#pragma once

#include <vector>

#include "jsrlab/complex_matrix.hpp"

namespace jsrlab {

/// Bijection on {0..s-1} stored as an image array: sigma maps i to image[i].
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int s);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }

  /// (-1)^(s - #cycles)
  int sign() const;

 private:
  std::vector<int> image_;
};

/// Disjoint cycles covering {0..s-1}, fixed points included as 1-cycles.
/// Canonical form: each cycle starts at its minimum, cycles sorted by first
/// element.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
};

CycleDecomposition cycle_decompose(const Permutation& sigma);

/// Enumerate all permutations of {0..s-1} in lexicographic image order.
std::vector<Permutation> all_permutations(int s);

/// Product over cycles of sigma of the trace of the cycle-ordered product:
/// for sigma = (i1..ik)(j1..jh)..., tr(A_i1...A_ik) tr(A_j1...A_jh) ...
Complex phi_sigma(const Permutation& sigma, const std::vector<CMatrix>& tuple);

/// Signed permutation sum of phi_sigma; the empty tuple gives 1.
Complex antisymmetrized_trace_form(const std::vector<CMatrix>& tuple);

/// Symmetrized product: sum over sigma of A_{sigma(1)} ... A_{sigma(s)};
/// the empty tuple gives the identity. dim is needed only for s = 0.
CMatrix symmetrized_product(const std::vector<CMatrix>& tuple, int dim);

/// Entrywise-max modulus of the fundamental trace identity's left-hand side
///   sum_{s=0..d} sum_{partitions} (-1)^s F(A_i..) P(A_j..),
/// normalized by (1 + ||Sigma||_2)^d. Expected ~ 0 for every d-tuple of
/// d x d matrices. Throws if the tuple length differs from the dimension.
double trace_identity_residual(const std::vector<CMatrix>& tuple);

/// Same sum, unnormalized, for tests that want the matrix itself.
CMatrix trace_identity_sum(const std::vector<CMatrix>& tuple);

/// Vector of all trace words tr(A_{i1} ... A_{ij}) for 1 <= j <= k = 2^d - 1,
/// lexicographic by (length, letters). Entry count N = l + l^2 + ... + l^k.
struct TraceVector {
  struct Entry {
    std::vector<int> word;
    Complex value;
  };
  std::vector<Entry> entries;
  int dim = 0;        // d
  int alphabet = 0;   // l = tuple size
  int max_length = 0; // k = 2^d - 1

  const Entry& at(const std::vector<int>& word) const;
};

TraceVector procesi_map(const std::vector<CMatrix>& tuple);

/// max over entries of |value|^(1/word length); 1-homogeneous under scaling
/// of the tuple. Values below 1e-100 are treated as exact zeros.
double tau(const TraceVector& tv);

struct TauRhoCheck {
  double tau_value = 0.0;
  double bound = 0.0;  // d * max_{1<=j<=k} rho(Sigma^j)^{1/j}
  bool holds = false;
  bool degenerate = false;  // tau underflowed to the zero branch
};

/// Verifies tau(pi(x)) <= d * max_{1<=j<=k} rho(Sigma^j)^{1/j} with Sigma the
/// set of tuple members.
TauRhoCheck tau_rho_bound(const std::vector<CMatrix>& tuple, double tol = 1e-9);

}  // namespace jsrlab
