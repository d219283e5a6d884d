#include "jsrlab/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "jsrlab/config.hpp"
#include "jsrlab/matcore.hpp"
#include "jsrlab/semigroup.hpp"

namespace jsrlab {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int s = static_cast<int>(image_.size());
  std::vector<bool> seen(static_cast<std::size_t>(s), false);
  for (int v : image_) {
    if (v < 0 || v >= s || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Permutation: image is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int s) {
  std::vector<int> img(static_cast<std::size_t>(s));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

int Permutation::sign() const {
  const auto cycles = cycle_decompose(*this).cycles;
  const int s = size();
  return ((s - static_cast<int>(cycles.size())) % 2 == 0) ? 1 : -1;
}

CycleDecomposition cycle_decompose(const Permutation& sigma) {
  const int s = sigma.size();
  std::vector<bool> seen(static_cast<std::size_t>(s), false);
  CycleDecomposition out;
  for (int start = 0; start < s; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int i = start;
    do {
      cycle.push_back(i);
      seen[static_cast<std::size_t>(i)] = true;
      i = sigma(i);
    } while (i != start);
    out.cycles.push_back(std::move(cycle));
  }
  // starting each cycle at its smallest unvisited element and scanning starts
  // in increasing order already yields the canonical form
  return out;
}

std::vector<Permutation> all_permutations(int s) {
  std::vector<int> img(static_cast<std::size_t>(s));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Complex phi_sigma(const Permutation& sigma, const std::vector<CMatrix>& tuple) {
  if (sigma.size() != static_cast<int>(tuple.size()))
    throw std::invalid_argument("phi_sigma: permutation/tuple size mismatch");
  const auto decomposition = cycle_decompose(sigma);
  Complex product(1.0, 0.0);
  for (const auto& cycle : decomposition.cycles) {
    CMatrix m = tuple[static_cast<std::size_t>(cycle.front())];
    for (std::size_t t = 1; t < cycle.size(); ++t)
      m = mat_mul(m, tuple[static_cast<std::size_t>(cycle[t])]);
    product *= m.trace();
  }
  return product;
}

Complex antisymmetrized_trace_form(const std::vector<CMatrix>& tuple) {
  const int s = static_cast<int>(tuple.size());
  if (s == 0) return Complex(1.0, 0.0);
  Complex sum(0.0, 0.0);
  for (const auto& sigma : all_permutations(s)) {
    sum += static_cast<double>(sigma.sign()) * phi_sigma(sigma, tuple);
  }
  return sum;
}

CMatrix symmetrized_product(const std::vector<CMatrix>& tuple, int dim) {
  const int s = static_cast<int>(tuple.size());
  if (s == 0) return CMatrix::identity(dim);
  CMatrix sum(tuple.front().dim());
  for (const auto& sigma : all_permutations(s)) {
    CMatrix m = tuple[static_cast<std::size_t>(sigma(0))];
    for (int t = 1; t < s; ++t) m = mat_mul(m, tuple[static_cast<std::size_t>(sigma(t))]);
    sum += m;
  }
  return sum;
}

namespace {

// All partitions of {0..d-1} into (subset, complement), subsets in increasing
// binary-mask order so the traversal is deterministic.
void split_by_mask(int d, unsigned mask, std::vector<int>& in, std::vector<int>& out) {
  in.clear();
  out.clear();
  for (int i = 0; i < d; ++i) {
    if (mask & (1u << i))
      in.push_back(i);
    else
      out.push_back(i);
  }
}

}  // namespace

CMatrix trace_identity_sum(const std::vector<CMatrix>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("trace_identity_sum: empty tuple");
  const int d = tuple.front().dim();
  if (static_cast<int>(tuple.size()) != d)
    throw std::invalid_argument("trace_identity_sum: need exactly d matrices of dimension d");
  for (const auto& a : tuple)
    if (a.dim() != d) throw std::invalid_argument("trace_identity_sum: mixed dimensions");

  CMatrix total(d);
  std::vector<int> subset, complement;
  std::vector<CMatrix> left, right;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    split_by_mask(d, mask, subset, complement);
    left.clear();
    right.clear();
    for (int i : subset) left.push_back(tuple[static_cast<std::size_t>(i)]);
    for (int i : complement) right.push_back(tuple[static_cast<std::size_t>(i)]);

    const Complex f = antisymmetrized_trace_form(left);
    CMatrix p = symmetrized_product(right, d);
    const double sgn = (subset.size() % 2 == 0) ? 1.0 : -1.0;
    p *= sgn * f;
    total += p;
  }
  return total;
}

double trace_identity_residual(const std::vector<CMatrix>& tuple) {
  const CMatrix total = trace_identity_sum(tuple);
  const int d = tuple.front().dim();
  double scale = 0.0;
  for (const auto& a : tuple) scale = std::max(scale, euclidean_operator_norm(a));
  return total.max_abs_entry() / std::pow(1.0 + scale, d);
}

TraceVector procesi_map(const std::vector<CMatrix>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("procesi_map: empty tuple");
  const int l = static_cast<int>(tuple.size());
  const int d = tuple.front().dim();
  for (const auto& a : tuple)
    if (a.dim() != d) throw std::invalid_argument("procesi_map: mixed dimensions");
  if (l > 6 || d > 4)
    throw std::invalid_argument("procesi_map: tuple length capped at 6, dimension at 4");

  const int k = (1 << d) - 1;
  TraceVector tv;
  tv.dim = d;
  tv.alphabet = l;
  tv.max_length = k;

  double count = 0.0;
  for (int j = 1; j <= k; ++j) count += std::pow(static_cast<double>(l), j);
  if (count > 2e6) throw std::invalid_argument("procesi_map: word count exceeds budget");
  tv.entries.reserve(static_cast<std::size_t>(count));

  // Incremental-product DFS visits words of mixed lengths; entries are
  // sorted into (length, letters) order afterwards.
  std::vector<int> word;
  std::vector<CMatrix> stack;
  word.push_back(0);
  while (!word.empty()) {
    const int depth = static_cast<int>(word.size());
    const int letter = word.back();
    if (static_cast<int>(stack.size()) < depth) stack.resize(static_cast<std::size_t>(depth));
    if (depth == 1)
      stack[0] = tuple[static_cast<std::size_t>(letter)];
    else
      stack[static_cast<std::size_t>(depth - 1)] =
          mat_mul(stack[static_cast<std::size_t>(depth - 2)], tuple[static_cast<std::size_t>(letter)]);

    tv.entries.push_back({word, stack[static_cast<std::size_t>(depth - 1)].trace()});

    if (depth < k) {
      word.push_back(0);
      continue;
    }
    while (!word.empty() && word.back() == l - 1) word.pop_back();
    if (!word.empty()) ++word.back();
  }

  std::sort(tv.entries.begin(), tv.entries.end(), [](const auto& a, const auto& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return tv;
}

const TraceVector::Entry& TraceVector::at(const std::vector<int>& word) const {
  for (const auto& e : entries)
    if (e.word == word) return e;
  throw std::out_of_range("TraceVector::at: word not present");
}

double tau(const TraceVector& tv) {
  double best = 0.0;
  for (const auto& e : tv.entries) {
    const double v = std::abs(e.value);
    if (v < 1e-100) continue;  // underflow cutoff: treated as the zero branch
    best = std::max(best, std::pow(v, 1.0 / static_cast<double>(e.word.size())));
  }
  return best;
}

TauRhoCheck tau_rho_bound(const std::vector<CMatrix>& tuple, double tol) {
  const TraceVector tv = procesi_map(tuple);
  TauRhoCheck check;
  check.tau_value = tau(tv);
  if (check.tau_value < 1e-100) {
    check.degenerate = true;
  }
  const int d = tuple.front().dim();
  const int k = (1 << d) - 1;
  MatrixSet sigma{std::vector<CMatrix>(tuple)};
  check.bound = d * lower_bound_at(sigma, k);
  check.holds = check.tau_value <= check.bound + tol;
  return check;
}

}  // namespace jsrlab
