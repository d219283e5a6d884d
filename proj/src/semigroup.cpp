#include "jsrlab/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "jsrlab/config.hpp"
#include "jsrlab/errors.hpp"
#include "jsrlab/matcore.hpp"

namespace jsrlab {

std::string Word::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << '.';
    os << letters[i];
  }
  return os.str();
}

namespace {

// Iterative lexicographic DFS over the product tree. The product stack keeps
// one matrix per level, so memory is O(depth), and each node costs a single
// multiplication. visit_node is called for every node (every depth 1..n);
// its return value decides whether to descend.
struct DfsDriver {
  const MatrixSet& sigma;
  int max_depth;
  std::uint64_t node_budget;
  std::uint64_t nodes = 0;
  bool complete = true;

  // visit(word, product) -> descend?
  template <typename Visit>
  void run(Visit&& visit) {
    const int k = sigma.size();
    std::vector<int> word;
    std::vector<CMatrix> stack;  // stack[j] = product of word[0..j]
    word.reserve(static_cast<std::size_t>(max_depth));
    stack.reserve(static_cast<std::size_t>(max_depth));

    word.push_back(0);
    while (!word.empty()) {
      if (nodes >= node_budget) {
        complete = false;
        return;
      }
      const int depth = static_cast<int>(word.size());
      const int letter = word.back();
      if (static_cast<int>(stack.size()) < depth) stack.resize(static_cast<std::size_t>(depth));
      if (depth == 1) {
        stack[0] = sigma[letter];
      } else {
        stack[static_cast<std::size_t>(depth - 1)] =
            mat_mul(stack[static_cast<std::size_t>(depth - 2)], sigma[letter]);
      }
      const CMatrix& prod = stack[static_cast<std::size_t>(depth - 1)];
      ++nodes;

      const bool descend = visit(word, prod) && depth < max_depth;
      if (descend) {
        word.push_back(0);
        continue;
      }
      // advance to the lexicographic successor
      while (!word.empty() && word.back() == k - 1) word.pop_back();
      if (!word.empty()) ++word.back();
    }
  }
};

}  // namespace

EnumStats enumerate_products(const MatrixSet& sigma, int n,
                             const std::function<void(const Word&, const CMatrix&)>& visit,
                             std::uint64_t node_budget) {
  if (sigma.empty()) throw std::invalid_argument("enumerate_products: empty set");
  if (n < 1) throw std::invalid_argument("enumerate_products: depth must be >= 1");

  DfsDriver dfs{sigma, n, node_budget};
  Word w;
  dfs.run([&](const std::vector<int>& word, const CMatrix& prod) {
    if (static_cast<int>(word.size()) == n) {
      w.letters = word;
      visit(w, prod);
      return false;
    }
    return true;
  });
  return {dfs.nodes, dfs.complete};
}

std::vector<std::pair<Word, CMatrix>> collect_products(const MatrixSet& sigma, int n,
                                                       std::uint64_t node_budget) {
  std::vector<std::pair<Word, CMatrix>> out;
  const EnumStats st = enumerate_products(
      sigma, n, [&](const Word& w, const CMatrix& p) { out.emplace_back(w, p); }, node_budget);
  if (!st.complete)
    throw BudgetExceededError("collect_products: node budget exhausted", st.nodes_visited);
  return out;
}

double upper_bound_at(const MatrixSet& sigma, const NormSpec& spec, int n,
                      std::uint64_t node_budget) {
  double max_norm = 0.0;
  const EnumStats st = enumerate_products(
      sigma, n,
      [&](const Word&, const CMatrix& p) { max_norm = std::max(max_norm, operator_norm(spec, p)); },
      node_budget);
  if (!st.complete)
    throw BudgetExceededError("upper_bound_at: node budget exhausted", st.nodes_visited);
  return std::pow(max_norm, 1.0 / n);
}

double lower_bound_at(const MatrixSet& sigma, int n, std::uint64_t node_budget) {
  if (sigma.empty()) throw std::invalid_argument("lower_bound_at: empty set");
  if (n < 1) throw std::invalid_argument("lower_bound_at: depth must be >= 1");
  double best = 0.0;
  DfsDriver dfs{sigma, n, node_budget};
  dfs.run([&](const std::vector<int>& word, const CMatrix& prod) {
    const int j = static_cast<int>(word.size());
    best = std::max(best, std::pow(spectral_radius(prod), 1.0 / j));
    return true;
  });
  if (!dfs.complete)
    throw BudgetExceededError("lower_bound_at: node budget exhausted", dfs.nodes);
  return best;
}

BoundsReport jsr_bounds(const MatrixSet& sigma, const NormSpec& spec,
                        const BoundsOptions& opts) {
  if (sigma.empty()) throw std::invalid_argument("jsr_bounds: empty set");
  if (opts.max_depth < 1) throw std::invalid_argument("jsr_bounds: max_depth must be >= 1");

  BoundsReport report;
  report.prune_margin = opts.prune_margin;
  report.depths.resize(static_cast<std::size_t>(opts.max_depth));
  for (int n = 1; n <= opts.max_depth; ++n) {
    report.depths[static_cast<std::size_t>(n - 1)].n = n;
  }

  // All-zero sets have JSR 0 and the search below would prune everything.
  const double set_scale = set_norm(NormSpec::euclidean(), sigma);
  if (set_scale == 0.0) {
    for (auto& rec : report.depths) {
      rec.upper_n = 0.0;
      rec.lower_n = 0.0;
      rec.exact = true;
    }
    report.best_upper_valid = true;
    report.best_upper = 0.0;
    report.best_upper_depth = 1;
    report.best_upper_word = Word{{0}};
    report.best_lower = 0.0;
    report.best_lower_depth = 1;
    report.best_lower_word = Word{{0}};
    report.total_nodes = static_cast<std::uint64_t>(sigma.size());
    return report;
  }

  struct DepthState {
    double max_norm = 0.0;
    Word arg_norm;
    double max_rho = 0.0;
    Word arg_rho;
  };
  std::vector<DepthState> per_depth(static_cast<std::size_t>(opts.max_depth));

  double best_lower = 0.0;
  Word best_lower_word;
  int best_lower_depth = 0;
  int exact_below = opts.max_depth;  // depths <= exact_below are fully enumerated

  DfsDriver dfs{sigma, opts.max_depth, opts.node_budget};
  dfs.run([&](const std::vector<int>& word, const CMatrix& prod) {
    const int j = static_cast<int>(word.size());
    DepthState& st = per_depth[static_cast<std::size_t>(j - 1)];
    auto& rec = report.depths[static_cast<std::size_t>(j - 1)];
    ++rec.nodes_visited;

    const double nu = operator_norm(spec, prod);
    if (nu > st.max_norm) {
      st.max_norm = nu;
      st.arg_norm.letters = word;
    }
    const double rho = spectral_radius(prod);
    if (rho > st.max_rho) {
      st.max_rho = rho;
      st.arg_rho.letters = word;
    }
    const double rooted = std::pow(rho, 1.0 / j);
    if (rooted > best_lower) {
      best_lower = rooted;
      best_lower_word.letters = word;
      best_lower_depth = j;
    }

    // Incumbent-based cut: a product this small cannot influence the upper
    // bound at deeper levels beyond what best_lower already certifies.
    if (j < opts.max_depth) {
      const double threshold = std::pow(best_lower * (1.0 - opts.prune_margin), j);
      if (nu <= threshold) {
        ++rec.nodes_pruned;
        ++report.total_pruned;
        exact_below = std::min(exact_below, j);
        return false;
      }
    }
    return true;
  });

  report.complete = dfs.complete;
  report.total_nodes = dfs.nodes;
  if (!dfs.complete) exact_below = 0;

  double running_lower = 0.0;
  for (int n = 1; n <= opts.max_depth; ++n) {
    auto& rec = report.depths[static_cast<std::size_t>(n - 1)];
    const DepthState& st = per_depth[static_cast<std::size_t>(n - 1)];
    rec.upper_n = std::pow(st.max_norm, 1.0 / n);
    running_lower = std::max(running_lower, std::pow(st.max_rho, 1.0 / n));
    rec.lower_n = running_lower;
    rec.exact = n <= exact_below;
    if (rec.exact && (!report.best_upper_valid || rec.upper_n < report.best_upper)) {
      report.best_upper_valid = true;
      report.best_upper = rec.upper_n;
      report.best_upper_depth = n;
      report.best_upper_word = st.arg_norm;
    }
  }
  report.best_lower = best_lower;
  report.best_lower_depth = best_lower_depth;
  report.best_lower_word = best_lower_word;
  return report;
}

std::vector<GapPoint> berger_wang_gap(const MatrixSet& sigma, const NormSpec& spec,
                                      const std::vector<int>& depths,
                                      std::uint64_t node_budget) {
  if (sigma.empty()) throw std::invalid_argument("berger_wang_gap: empty set");
  if (depths.empty()) return {};
  const int max_depth = *std::max_element(depths.begin(), depths.end());
  if (max_depth < 1) throw std::invalid_argument("berger_wang_gap: depths must be >= 1");

  std::vector<double> max_norm(static_cast<std::size_t>(max_depth), 0.0);
  std::vector<double> max_rho(static_cast<std::size_t>(max_depth), 0.0);

  DfsDriver dfs{sigma, max_depth, node_budget};
  dfs.run([&](const std::vector<int>& word, const CMatrix& prod) {
    const std::size_t j = word.size() - 1;
    max_norm[j] = std::max(max_norm[j], operator_norm(spec, prod));
    max_rho[j] = std::max(max_rho[j], spectral_radius(prod));
    return true;
  });
  if (!dfs.complete)
    throw BudgetExceededError("berger_wang_gap: node budget exhausted", dfs.nodes);

  std::vector<double> lower(static_cast<std::size_t>(max_depth), 0.0);
  double run = 0.0;
  for (int n = 1; n <= max_depth; ++n) {
    run = std::max(run, std::pow(max_rho[static_cast<std::size_t>(n - 1)], 1.0 / n));
    lower[static_cast<std::size_t>(n - 1)] = run;
  }

  std::vector<GapPoint> out;
  out.reserve(depths.size());
  for (int n : depths) {
    GapPoint g;
    g.depth = n;
    g.upper = std::pow(max_norm[static_cast<std::size_t>(n - 1)], 1.0 / n);
    g.lower = lower[static_cast<std::size_t>(n - 1)];
    g.gap = g.upper - g.lower;
    out.push_back(g);
  }
  return out;
}

std::vector<double> spectral_radius_table(const MatrixSet& sigma, int depth,
                                          std::uint64_t node_budget) {
  if (sigma.empty()) throw std::invalid_argument("spectral_radius_table: empty set");
  if (depth < 1) throw std::invalid_argument("spectral_radius_table: depth must be >= 1");
  std::vector<double> table(static_cast<std::size_t>(depth), 0.0);
  DfsDriver dfs{sigma, depth, node_budget};
  dfs.run([&](const std::vector<int>& word, const CMatrix& prod) {
    auto& slot = table[word.size() - 1];
    slot = std::max(slot, spectral_radius(prod));
    return true;
  });
  if (!dfs.complete)
    throw BudgetExceededError("spectral_radius_table: node budget exhausted", dfs.nodes);
  return table;
}

MonotonicityCheck rho_power_monotonicity(const MatrixSet& sigma, int n, int m, double tol) {
  if (n < 1 || m < 1) throw std::invalid_argument("rho_power_monotonicity: n, m must be >= 1");
  MonotonicityCheck check;

  double rho_n = 0.0, rho_mn = 0.0;
  const int depth = n * m;
  DfsDriver dfs{sigma, depth, 100'000'000};
  dfs.run([&](const std::vector<int>& word, const CMatrix& prod) {
    const int j = static_cast<int>(word.size());
    if (j == n) rho_n = std::max(rho_n, spectral_radius(prod));
    if (j == depth) rho_mn = std::max(rho_mn, spectral_radius(prod));
    return true;
  });
  if (!dfs.complete)
    throw BudgetExceededError("rho_power_monotonicity: node budget exhausted", dfs.nodes);

  check.coarse = std::pow(rho_n, 1.0 / n);
  check.fine = std::pow(rho_mn, 1.0 / depth);
  check.holds = check.fine >= check.coarse - tol;
  return check;
}

}  // namespace jsrlab
