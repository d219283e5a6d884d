#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jsrlab/complex_matrix.hpp"
#include "jsrlab/norms.hpp"

namespace jsrlab {

/// Index sequence into a MatrixSet; identifies one product in Sigma^n.
struct Word {
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  std::string to_string() const;
};

struct EnumStats {
  std::uint64_t nodes_visited = 0;
  bool complete = true;
};

/// Visit all |Sigma|^n products of length n in lexicographic depth-first
/// order. Each tree node costs exactly one multiplication; the visitor sees
/// only the depth-n leaves. Stops early (complete=false) if the node budget
/// runs out.
EnumStats enumerate_products(const MatrixSet& sigma, int n,
                             const std::function<void(const Word&, const CMatrix&)>& visit,
                             std::uint64_t node_budget = 10'000'000);

/// Collecting variant. Throws BudgetExceededError when the budget is hit.
std::vector<std::pair<Word, CMatrix>> collect_products(const MatrixSet& sigma, int n,
                                                       std::uint64_t node_budget = 10'000'000);

/// ||Sigma^n||^{1/n}: an upper bound on the joint spectral radius for every n.
double upper_bound_at(const MatrixSet& sigma, const NormSpec& spec, int n,
                      std::uint64_t node_budget = 10'000'000);

/// max_{1<=j<=n} rho(Sigma^j)^{1/j}: a lower bound on the joint spectral radius.
double lower_bound_at(const MatrixSet& sigma, int n, std::uint64_t node_budget = 10'000'000);

struct DepthRecord {
  int n = 0;
  double upper_n = 0.0;  // max norm at this depth ^ (1/n); certified only when exact
  double lower_n = 0.0;  // running max of rho^(1/j), j <= n
  std::uint64_t nodes_visited = 0;
  std::uint64_t nodes_pruned = 0;
  bool exact = true;  // no subtree feeding this depth was cut
};

struct BoundsReport {
  std::vector<DepthRecord> depths;

  bool best_upper_valid = false;
  double best_upper = 0.0;  // min over exact depths of upper_n
  int best_upper_depth = 0;
  Word best_upper_word;

  double best_lower = 0.0;  // max over all visited products of rho^(1/j)
  int best_lower_depth = 0;
  Word best_lower_word;

  double gap() const { return best_upper_valid ? best_upper - best_lower : 0.0; }

  bool complete = true;  // node budget not exhausted
  double prune_margin = 0.0;
  std::uint64_t total_nodes = 0;
  std::uint64_t total_pruned = 0;
};

struct BoundsOptions {
  int max_depth = 8;
  std::uint64_t node_budget = 10'000'000;
  // A node with norm nu at depth j is cut when nu <= (best_lower*(1-margin))^j.
  // Margin 0 keeps certified upper bounds on depths that remain exact;
  // positive margins cut more and are flagged in the report.
  double prune_margin = 0.0;
};

/// Depth-first two-sided JSR bounds with incumbent-based pruning.
/// Depths whose enumeration was affected by pruning are flagged exact=false
/// and never contribute to best_upper.
BoundsReport jsr_bounds(const MatrixSet& sigma, const NormSpec& spec,
                        const BoundsOptions& opts = {});

struct GapPoint {
  int depth = 0;
  double upper = 0.0;
  double lower = 0.0;
  double gap = 0.0;
};

/// Per-depth gap upper_bound_at - lower_bound_at; the gap at depth m*n never
/// exceeds the gap at depth n.
std::vector<GapPoint> berger_wang_gap(const MatrixSet& sigma, const NormSpec& spec,
                                      const std::vector<int>& depths,
                                      std::uint64_t node_budget = 10'000'000);

/// rho(Sigma^j) for j = 1..depth, one full enumeration.
std::vector<double> spectral_radius_table(const MatrixSet& sigma, int depth,
                                          std::uint64_t node_budget = 10'000'000);

struct MonotonicityCheck {
  double coarse = 0.0;  // rho(Sigma^n)^{1/n}
  double fine = 0.0;    // rho(Sigma^{mn})^{1/mn}
  bool holds = false;   // fine >= coarse - tol
};

/// Verifies rho(Sigma^{mn})^{1/mn} >= rho(Sigma^n)^{1/n} - tol.
MonotonicityCheck rho_power_monotonicity(const MatrixSet& sigma, int n, int m,
                                         double tol = 1e-9);

}  // namespace jsrlab
