#include "jsrlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "jsrlab/config.hpp"
#include "jsrlab/errors.hpp"
#include "jsrlab/matcore.hpp"
#include "jsrlab/rng.hpp"

namespace jsrlab {

NormSpec NormSpec::euclidean() { return NormSpec(Kind::Euclidean); }
NormSpec NormSpec::vector_sup() { return NormSpec(Kind::VectorSup); }
NormSpec NormSpec::entry_sup() { return NormSpec(Kind::EntrySup); }

NormSpec NormSpec::ellipsoidal(const CMatrix& w) {
  NormSpec spec(Kind::Ellipsoidal);
  const double cond = condition_number(w);
  if (!(cond <= config().condition_cap)) {
    throw SingularMatrixError("NormSpec::ellipsoidal: factor too ill-conditioned", cond);
  }
  spec.dim_ = w.dim();
  spec.factor_ = std::make_shared<CMatrix>(w);
  spec.factor_inv_ = std::make_shared<CMatrix>(inverse(w));
  spec.condition_ = cond;
  return spec;
}

NormSpec NormSpec::transported(const CMatrix& s, const NormSpec& base) {
  if (base.dim_ != 0 && base.dim_ != s.dim())
    throw std::invalid_argument("NormSpec::transported: base dimension mismatch");
  if (!base.vector_capable())
    throw std::invalid_argument("NormSpec::transported: base must be a vector norm");
  if (base.transport_depth_ + 1 > config().max_transport_depth)
    throw std::invalid_argument("NormSpec::transported: nesting too deep");
  NormSpec spec(Kind::Transported);
  const double cond = condition_number(s);
  if (!(cond <= config().condition_cap)) {
    throw SingularMatrixError("NormSpec::transported: factor too ill-conditioned", cond);
  }
  spec.dim_ = s.dim();
  spec.factor_ = std::make_shared<CMatrix>(s);
  spec.factor_inv_ = std::make_shared<CMatrix>(inverse(s));
  spec.base_ = std::make_shared<NormSpec>(base);
  spec.condition_ = cond;
  spec.transport_depth_ = base.transport_depth_ + 1;
  return spec;
}

const CMatrix& NormSpec::factor() const {
  if (!factor_) throw std::logic_error("NormSpec: no factor for this kind");
  return *factor_;
}

const CMatrix& NormSpec::factor_inverse() const {
  if (!factor_inv_) throw std::logic_error("NormSpec: no factor for this kind");
  return *factor_inv_;
}

const NormSpec& NormSpec::base() const {
  if (!base_) throw std::logic_error("NormSpec: no base for this kind");
  return *base_;
}

std::string NormSpec::describe() const {
  switch (kind_) {
    case Kind::Euclidean: return "euclidean";
    case Kind::VectorSup: return "sup";
    case Kind::EntrySup: return "entry-sup";
    case Kind::Ellipsoidal: return "ellipsoidal";
    case Kind::Transported: return "transported(" + base().describe() + ")";
  }
  return "?";
}

namespace {

void check_dim(const NormSpec& spec, int d, const char* who) {
  if (spec.dim() != 0 && spec.dim() != d)
    throw std::invalid_argument(std::string(who) + ": norm/operand dimension mismatch");
}

double euclidean_vector_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double sup_vector_norm(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double vector_norm(const NormSpec& spec, std::span<const Complex> v) {
  check_dim(spec, static_cast<int>(v.size()), "vector_norm");
  switch (spec.kind()) {
    case NormSpec::Kind::Euclidean:
      return euclidean_vector_norm(v);
    case NormSpec::Kind::VectorSup:
      return sup_vector_norm(v);
    case NormSpec::Kind::EntrySup:
      throw std::invalid_argument("vector_norm: entry-sup is a matrix norm only");
    case NormSpec::Kind::Ellipsoidal:
      return euclidean_vector_norm(mat_vec(spec.factor(), v));
    case NormSpec::Kind::Transported:
      return vector_norm(spec.base(), mat_vec(spec.factor(), v));
  }
  throw std::logic_error("vector_norm: unreachable");
}

double operator_norm(const NormSpec& spec, const CMatrix& a) {
  check_dim(spec, a.dim(), "operator_norm");
  switch (spec.kind()) {
    case NormSpec::Kind::Euclidean:
      return euclidean_operator_norm(a);
    case NormSpec::Kind::VectorSup:
      return a.max_abs_row_sum();
    case NormSpec::Kind::EntrySup:
      // max entry modulus; a matrix norm (not induced, not submultiplicative
      // without the dimension factor)
      return a.max_abs_entry();
    case NormSpec::Kind::Ellipsoidal:
      return euclidean_operator_norm(
          mat_mul(mat_mul(spec.factor(), a), spec.factor_inverse()));
    case NormSpec::Kind::Transported:
      return operator_norm(spec.base(),
                           mat_mul(mat_mul(spec.factor(), a), spec.factor_inverse()));
  }
  throw std::logic_error("operator_norm: unreachable");
}

double set_norm(const NormSpec& spec, const MatrixSet& sigma) {
  if (sigma.empty()) throw std::invalid_argument("set_norm: empty set");
  double m = 0.0;
  for (const auto& a : sigma.members()) m = std::max(m, operator_norm(spec, a));
  return m;
}

double set_spectral_radius(const MatrixSet& sigma) {
  if (sigma.empty()) throw std::invalid_argument("set_spectral_radius: empty set");
  double m = 0.0;
  for (const auto& a : sigma.members()) m = std::max(m, spectral_radius(a));
  return m;
}

namespace {

// Objective for the descent: set norm under the ellipsoidal norm with the
// given lower-triangular factor. Returns +inf for unusable candidates.
double descent_objective(const CMatrix& l, const MatrixSet& sigma) {
  const double cond = condition_number(l);
  if (!(cond <= config().condition_cap)) return std::numeric_limits<double>::infinity();
  CMatrix linv;
  try {
    linv = inverse(l);
  } catch (const SingularMatrixError&) {
    return std::numeric_limits<double>::infinity();
  }
  double m = 0.0;
  for (const auto& a : sigma.members())
    m = std::max(m, euclidean_operator_norm(mat_mul(mat_mul(l, a), linv)));
  return m;
}

}  // namespace

DescentResult ellipsoidal_descent(const MatrixSet& sigma, std::uint64_t budget,
                                  std::uint64_t seed) {
  if (sigma.empty()) throw std::invalid_argument("ellipsoidal_descent: empty set");
  if (budget < 1) throw std::invalid_argument("ellipsoidal_descent: budget must be >= 1");
  const int d = sigma.dim();

  Rng rng(seed);
  CMatrix best = CMatrix::identity(d);
  double best_val = descent_objective(best, sigma);
  DescentResult result{best, best_val, 1};

  double step = 0.5;
  const double min_step = 1e-12;
  for (std::uint64_t it = 1; it < budget; ++it) {
    // one random axis of the lower-triangular parametrization
    const int i = rng.uniform_int(d);
    const int j = rng.uniform_int(i + 1);
    CMatrix cand = best;
    if (i == j) {
      // diagonal stays positive: multiplicative bump, never through zero
      cand(i, i) *= (1.0 + step * rng.uniform(-0.9, 0.9));
    } else {
      const double scale = 0.5 * (std::abs(best(i, i)) + std::abs(best(j, j)));
      cand(i, j) += step * scale * Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
    const double val = descent_objective(cand, sigma);
    ++result.evaluations;
    if (val < best_val) {
      best = cand;
      best_val = val;
    } else {
      step *= 0.9;
      if (step < min_step) step = min_step;
    }
  }
  result.w = best;
  result.upper = best_val;
  return result;
}

namespace {

// The linear map F with norm(v) = ||F v||_2 when the spec is Euclidean after
// a change of variables; empty optional for sup-type norms.
std::optional<CMatrix> euclidean_factor(const NormSpec& spec, int dim) {
  switch (spec.kind()) {
    case NormSpec::Kind::Euclidean:
      return CMatrix::identity(dim);
    case NormSpec::Kind::Ellipsoidal:
      return spec.factor();
    case NormSpec::Kind::Transported: {
      auto basef = euclidean_factor(spec.base(), dim);
      if (!basef) return std::nullopt;
      return mat_mul(*basef, spec.factor());
    }
    default:
      return std::nullopt;
  }
}

struct DistortionObjective {
  const NormSpec* norm2;
  std::vector<CVector> samples;  // unit vectors in norm1

  // spread of ||S v||_2 over the samples; +inf for unusable S
  double operator()(const CMatrix& s) const {
    const double cond = condition_number(s);
    if (!(cond <= config().condition_cap)) return std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& v : samples) {
      const double r = vector_norm(*norm2, mat_vec(s, v));
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
    return hi / lo;
  }
};

}  // namespace

DistortionResult distortion_search(const NormSpec& spec1, const NormSpec& spec2, int dim,
                                   std::uint64_t budget, std::uint64_t seed,
                                   int samples_per_eval) {
  if (!spec1.vector_capable() || !spec2.vector_capable())
    throw std::invalid_argument("distortion_search: both norms must be vector-capable");
  if (spec1.dim() != 0 && spec1.dim() != dim)
    throw std::invalid_argument("distortion_search: spec1 dimension mismatch");
  if (spec2.dim() != 0 && spec2.dim() != dim)
    throw std::invalid_argument("distortion_search: spec2 dimension mismatch");
  if (dim < 1) throw std::invalid_argument("distortion_search: dim must be >= 1");

  Rng rng(seed);
  DistortionObjective objective;
  objective.norm2 = &spec2;
  objective.samples.reserve(static_cast<std::size_t>(samples_per_eval) + static_cast<std::size_t>(dim));
  // basis directions first, then quasi-uniform directions on the unit sphere
  for (int i = 0; i < dim; ++i) {
    CVector e(static_cast<std::size_t>(dim), Complex(0.0, 0.0));
    e[static_cast<std::size_t>(i)] = 1.0;
    const double n1 = vector_norm(spec1, e);
    for (auto& x : e) x /= n1;
    objective.samples.push_back(std::move(e));
  }
  for (int k = 0; k < samples_per_eval; ++k) {
    CVector v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = rng.cnormal();
    const double n1 = vector_norm(spec1, v);
    if (!(n1 > 0.0)) {
      --k;
      continue;
    }
    for (auto& x : v) x /= n1;
    objective.samples.push_back(std::move(v));
  }

  CMatrix best = CMatrix::identity(dim);
  double best_val = objective(best);

  // When both norms are Euclidean in disguise, the exact transport
  // S = F2^-1 F1 achieves distortion 1; use it as a second starting point.
  const auto f1 = euclidean_factor(spec1, dim);
  const auto f2 = euclidean_factor(spec2, dim);
  if (f1 && f2) {
    try {
      const CMatrix transport = mat_mul(inverse(*f2), *f1);
      const double val = objective(transport);
      if (val < best_val) {
        best = transport;
        best_val = val;
      }
    } catch (const SingularMatrixError&) {
      // fall back to the identity start
    }
  }

  double step = 0.5;
  const double min_step = 1e-12;
  for (std::uint64_t it = 1; it < budget; ++it) {
    CMatrix cand = best;
    const int i = rng.uniform_int(dim);
    const int j = rng.uniform_int(dim);
    const double scale = std::max(cand.max_abs_entry(), 1e-8);
    cand(i, j) += step * scale * Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const double val = objective(cand);
    if (val < best_val) {
      best = cand;
      best_val = val;
    } else {
      step *= 0.9;
      if (step < min_step) step = min_step;
    }
  }

  // Rescale so the upper inequality ||S v||_2 <= ||v||_1 is tight on samples.
  double hi = 0.0;
  for (const auto& v : objective.samples)
    hi = std::max(hi, vector_norm(spec2, mat_vec(best, v)));
  if (hi > 0.0) best *= Complex(1.0 / hi, 0.0);

  DistortionResult out;
  out.s = best;
  out.distortion = std::max(1.0, best_val);
  out.samples = static_cast<int>(objective.samples.size());
  out.lemma_bound = std::pow(2.0, dim) - 1.0;
  out.within_lemma_bound = out.distortion <= out.lemma_bound + 1e-9;
  return out;
}

}  // namespace jsrlab
