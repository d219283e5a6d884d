#include "jsrlab/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "jsrlab/config.hpp"
#include "jsrlab/ensemble.hpp"
#include "jsrlab/invariants.hpp"
#include "jsrlab/matcore.hpp"
#include "jsrlab/rng.hpp"
#include "jsrlab/semigroup.hpp"

namespace jsrlab {

PowerIneqCheck check_power_inequality(const CMatrix& a, const NormSpec& spec, double tol) {
  if (!spec.induced())
    throw std::invalid_argument("check_power_inequality: spec must be an induced norm");
  const int d = a.dim();
  PowerIneqCheck out;
  out.bound = std::pow(2.0, d) - 1.0;

  const double anorm = operator_norm(spec, a);
  if (anorm == 0.0) {
    out.branch = PowerIneqCheck::Branch::ZeroMatrix;
    out.ok = true;  // vacuous
    return out;
  }
  const double rho = spectral_radius(a);
  const double pow_norm = operator_norm(spec, mat_pow(a, d));
  if (rho <= 1e-12 * anorm) {
    // Cayley-Hamilton forces A^d = 0 when the spectrum vanishes.
    out.branch = PowerIneqCheck::Branch::Nilpotent;
    out.ok = pow_norm <= tol * std::pow(anorm, d) * out.bound;
    return out;
  }
  out.branch = PowerIneqCheck::Branch::Ratio;
  out.ratio = pow_norm / (rho * std::pow(anorm, d - 1));
  out.ok = out.ratio <= out.bound + tol;
  return out;
}

WeakerLemmaCheck check_weaker_lemma(const MatrixSet& sigma, const CMatrix& s,
                                    bool strict_diagonal, double tol) {
  if (sigma.empty()) throw std::invalid_argument("check_weaker_lemma: empty set");
  const int d = sigma.dim();
  if (s.dim() != d) throw std::invalid_argument("check_weaker_lemma: S dimension mismatch");

  WeakerLemmaCheck out;
  out.strict_mode = strict_diagonal;
  if (strict_diagonal) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        if (i == j) {
          if (!(s(i, i).real() > 0.0) || s(i, i).imag() != 0.0)
            throw std::invalid_argument(
                "check_weaker_lemma: strict mode needs positive diagonal S");
        } else if (s(i, j) != Complex(0.0, 0.0)) {
          throw std::invalid_argument("check_weaker_lemma: strict mode needs diagonal S");
        }
      }
    }
  }
  const CMatrix s_inv = inverse(s);
  const NormSpec norm = strict_diagonal ? NormSpec::entry_sup() : NormSpec::euclidean();

  double num = 0.0;
  enumerate_products(sigma, d, [&](const Word&, const CMatrix& p) {
    num = std::max(num, operator_norm(norm, mat_mul(mat_mul(s, p), s_inv)));
  });
  const double sigma_norm = set_norm(norm, sigma);
  const double conj_norm = set_norm(norm, sigma.conjugated(s, s_inv));

  out.bound = strict_diagonal ? std::pow(static_cast<double>(d), d - 1) : 0.0;
  const double den = sigma_norm * std::pow(conj_norm, d - 1);
  if (den == 0.0) {
    // all-zero set: numerator vanishes too
    out.ratio = 0.0;
    out.ok = true;
    return out;
  }
  out.ratio = num / den;
  out.ok = strict_diagonal ? (out.ratio <= out.bound + tol) : true;
  return out;
}

SEstimate estimate_S(const MatrixSet& sigma, std::uint64_t budget, std::uint64_t seed) {
  if (sigma.empty()) throw std::invalid_argument("estimate_S: empty set");
  const int d = sigma.dim();

  SEstimate out;
  bool all_zero = true;
  for (const auto& m : sigma.members()) all_zero = all_zero && m.is_zero();
  if (all_zero) return out;  // S({0}) = 0 by definition

  const auto powers = collect_products(sigma, d);
  auto evaluate = [&](const NormSpec& spec) -> double {
    const double den = set_norm(spec, sigma);
    if (den == 0.0) return 0.0;
    double num = 0.0;
    for (const auto& [w, p] : powers) num = std::max(num, operator_norm(spec, p));
    return num / std::pow(den, d - 1);
  };

  out.norm_witness = NormSpec::euclidean();
  out.value = evaluate(out.norm_witness);
  out.budget_used = 1;

  Rng rng(seed);
  for (std::uint64_t it = 1; it < budget; ++it) {
    const double cond = std::exp(rng.uniform(0.0, std::log(100.0)));
    NormSpec cand = NormSpec::ellipsoidal(random_conditioned(rng, d, cond));
    ++out.budget_used;
    const double val = evaluate(cand);
    if (val > out.value) {
      out.value = val;
      out.norm_witness = cand;
    }
  }
  return out;
}

TheoremBCheck check_theoremB(const MatrixSet& sigma, int depth, int k_override, double tol) {
  if (sigma.empty()) throw std::invalid_argument("check_theoremB: empty set");
  const int d = sigma.dim();
  TheoremBCheck out;
  out.k = k_override > 0 ? k_override : (1 << d) - 1;

  const auto rho_table = spectral_radius_table(sigma, out.k);
  double q = 0.0, q_restricted = 0.0;
  for (int j = 1; j <= out.k; ++j) {
    const double v = std::pow(rho_table[static_cast<std::size_t>(j - 1)], 1.0 / j);
    q = std::max(q, v);
    if (2 * j > out.k) q_restricted = std::max(q_restricted, v);
  }
  out.q = q;
  out.q_restricted = q_restricted;
  out.restricted_matches = std::abs(q - q_restricted) <= tol;

  BoundsOptions bopts;
  bopts.max_depth = depth;
  const BoundsReport bounds = jsr_bounds(sigma, NormSpec::euclidean(), bopts);
  out.upper = bounds.best_upper_valid ? bounds.best_upper : std::numeric_limits<double>::quiet_NaN();

  if (q > tol) {
    out.ratio = out.upper / q;
    out.ratio_finite = std::isfinite(out.ratio);
  } else if (bounds.best_upper_valid && out.upper > tol) {
    // a vanishing q with a clearly positive JSR would contradict the bound;
    // this is a bug or an insufficient depth, never silently passed
    out.suspicious = true;
  }
  return out;
}

D2TheoremBCheck check_d2_theoremB(const MatrixSet& sigma, int depth, double tol) {
  if (sigma.empty()) throw std::invalid_argument("check_d2_theoremB: empty set");
  if (sigma.dim() != 2) throw std::invalid_argument("check_d2_theoremB: needs 2x2 matrices");

  D2TheoremBCheck out;
  const int max_even = std::max(2, depth - depth % 2);
  const auto rho_table = spectral_radius_table(sigma, max_even);
  out.rho2_root = std::sqrt(rho_table[1]);
  for (int n = 1; 2 * n <= max_even; ++n) {
    out.even_roots.push_back(std::pow(rho_table[static_cast<std::size_t>(2 * n - 1)],
                                      1.0 / (2.0 * n)));
  }
  out.monotone = true;
  for (std::size_t i = 1; i < out.even_roots.size(); ++i) {
    if (out.even_roots[i] < out.even_roots[i - 1] - tol) out.monotone = false;
  }

  BoundsOptions bopts;
  bopts.max_depth = depth;
  const BoundsReport bounds = jsr_bounds(sigma, NormSpec::euclidean(), bopts);
  const double upper =
      bounds.best_upper_valid ? bounds.best_upper : std::numeric_limits<double>::quiet_NaN();
  out.upper = upper;
  if (out.rho2_root > tol) {
    out.ratio = upper / out.rho2_root;
    out.ratio_finite = std::isfinite(out.ratio);
  } else if (bounds.best_upper_valid && upper > tol) {
    out.suspicious = true;
  }
  return out;
}

OtherIneqCheck check_other_inequality(const std::vector<CMatrix>& tuple, const NormSpec& spec,
                                      double tol) {
  if (tuple.empty()) throw std::invalid_argument("check_other_inequality: empty tuple");
  const int d = tuple.front().dim();
  if (static_cast<int>(tuple.size()) != d)
    throw std::invalid_argument("check_other_inequality: need exactly d matrices of dimension d");
  if (!spec.induced())
    throw std::invalid_argument("check_other_inequality: spec must be an induced norm");

  MatrixSet sigma{std::vector<CMatrix>(tuple)};
  const double sigma_norm = set_norm(spec, sigma);
  const auto rho_table = spectral_radius_table(sigma, d);

  OtherIneqCheck out;
  const double scale = set_norm(NormSpec::euclidean(), sigma);
  double rho_max_scaled = 0.0;
  double rho_root_max = 0.0;
  for (int j = 1; j <= d; ++j) {
    const double rho_j = rho_table[static_cast<std::size_t>(j - 1)];
    out.rho_max = std::max(out.rho_max, rho_j);
    rho_max_scaled = std::max(rho_max_scaled, rho_j / std::pow(1.0 + scale, j));
    rho_root_max = std::max(rho_root_max, std::pow(rho_j, 1.0 / j));
  }
  out.sigma_norm = sigma_norm;
  out.p_norm = operator_norm(spec, symmetrized_product(tuple, d));
  out.denom = std::pow(sigma_norm, d - 1) * rho_root_max;

  if (rho_max_scaled <= 1e-12) {
    // trace identity: with all rho(Sigma^j) = 0 every F factor vanishes,
    // so the symmetrized product must vanish too
    out.branch = OtherIneqCheck::Branch::Degenerate;
    out.ok = out.p_norm <= tol * std::pow(sigma_norm, d);
    return out;
  }
  out.branch = OtherIneqCheck::Branch::Ratio;
  out.ratio = out.denom > 0.0 ? out.p_norm / out.denom : std::numeric_limits<double>::infinity();
  out.ok = std::isfinite(out.ratio);
  return out;
}

// ---------------------------------------------------------------------------
// Ensemble drivers
// ---------------------------------------------------------------------------

namespace {

struct TrialOutcome {
  double ratio = 0.0;
  bool has_ratio = false;
  bool violation = false;
  bool skipped = false;
  bool degenerate = false;
};

template <typename Fn>
std::vector<TrialOutcome> run_parallel(const EnsembleOptions& opts, Fn&& trial_fn) {
  std::vector<TrialOutcome> outcomes(opts.trials);
  const int threads = std::max(1, opts.threads);
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end; ++t) {
      try {
        Rng rng = Rng::substream(opts.seed, t);
        outcomes[t] = trial_fn(t, rng);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (threads == 1) {
    worker(0, opts.trials);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (opts.trials + threads - 1) / threads;
    for (int i = 0; i < threads; ++i) {
      const std::uint64_t begin = static_cast<std::uint64_t>(i) * chunk;
      const std::uint64_t end = std::min(opts.trials, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return outcomes;
}

IneqReport merge(const std::string& name, const EnsembleOptions& opts,
                 const std::vector<TrialOutcome>& outcomes, double bound, bool explicit_bound) {
  IneqReport report;
  report.name = name;
  report.trials = opts.trials;
  report.bound = bound;
  report.bound_is_explicit = explicit_bound;
  std::uint64_t arg_max = 0;
  for (std::uint64_t t = 0; t < outcomes.size(); ++t) {
    const auto& o = outcomes[t];
    if (o.has_ratio && o.ratio > report.max_ratio) {
      report.max_ratio = o.ratio;
      arg_max = t;
    }
    report.violations += o.violation ? 1 : 0;
    report.skipped += o.skipped ? 1 : 0;
    report.degenerate += o.degenerate ? 1 : 0;
  }
  report.max_ratio_witness =
      "seed=" + std::to_string(opts.seed) + " trial=" + std::to_string(arg_max);
  return report;
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

IneqReport power_inequality_ensemble(const EnsembleOptions& opts, const NormSpec& spec) {
  auto outcomes = run_parallel(opts, [&](std::uint64_t, Rng& rng) {
    TrialOutcome o;
    const CMatrix a = random_matrix(rng, opts.dim);
    const PowerIneqCheck c = check_power_inequality(a, spec, opts.tol);
    if (c.branch == PowerIneqCheck::Branch::Ratio) {
      o.ratio = c.ratio;
      o.has_ratio = true;
    } else {
      o.degenerate = true;
    }
    o.violation = !c.ok;
    return o;
  });
  const double bound = std::pow(2.0, opts.dim) - 1.0;
  return merge("power-ineq(d=" + std::to_string(opts.dim) + "," + spec.describe() + ")", opts,
               outcomes, bound, true);
}

IneqReport weaker_lemma_ensemble(const EnsembleOptions& opts) {
  auto outcomes = run_parallel(opts, [&](std::uint64_t, Rng& rng) {
    TrialOutcome o;
    const MatrixSet sigma = random_set(rng, opts.dim, opts.set_size, false);
    const CMatrix s = random_positive_diagonal(rng, opts.dim, 100.0);
    const WeakerLemmaCheck c = check_weaker_lemma(sigma, s, true, opts.tol);
    o.ratio = c.ratio;
    o.has_ratio = true;
    o.violation = !c.ok;
    return o;
  });
  const double bound = std::pow(static_cast<double>(opts.dim), opts.dim - 1);
  return merge("weaker-lemma(d=" + std::to_string(opts.dim) + ")", opts, outcomes, bound, true);
}

IneqReport trace_identity_ensemble(const EnsembleOptions& opts) {
  const double tol = std::min(opts.tol, 1e-9);
  auto outcomes = run_parallel(opts, [&](std::uint64_t, Rng& rng) {
    TrialOutcome o;
    std::vector<CMatrix> tuple;
    tuple.reserve(static_cast<std::size_t>(opts.dim));
    for (int i = 0; i < opts.dim; ++i) tuple.push_back(random_matrix(rng, opts.dim));
    o.ratio = trace_identity_residual(tuple);
    o.has_ratio = true;
    o.violation = !(o.ratio < tol);
    return o;
  });
  IneqReport report =
      merge("trace-identity(d=" + std::to_string(opts.dim) + ")", opts, outcomes, 0.0, true);
  report.extras.emplace_back("residual_tolerance", tol);
  return report;
}

IneqReport procesi_ensemble(const EnsembleOptions& opts) {
  // tolerances pinned per check: conjugation 1e-8, homogeneity 1e-10,
  // cyclicity 1e-10 (all scale-protected)
  constexpr double kConjTol = 1e-8;
  constexpr double kHomTol = 1e-10;
  constexpr double kCycTol = 1e-10;

  struct Devs {
    double conj = 0.0, hom = 0.0, cyc = 0.0;
  };
  std::vector<Devs> devs(opts.trials);

  auto outcomes = run_parallel(opts, [&](std::uint64_t t, Rng& rng) {
    TrialOutcome o;
    std::vector<CMatrix> tuple;
    for (int i = 0; i < opts.set_size; ++i) tuple.push_back(random_matrix(rng, opts.dim));
    const TraceVector tv = procesi_map(tuple);

    // conjugation invariance, condition(S) <= 1e3
    const double cond = std::exp(rng.uniform(0.0, std::log(1e3)));
    const CMatrix s = random_conditioned(rng, opts.dim, cond);
    const CMatrix s_inv = inverse(s);
    std::vector<CMatrix> conj_tuple;
    for (const auto& a : tuple) conj_tuple.push_back(mat_mul(mat_mul(s, a), s_inv));
    const TraceVector tv_conj = procesi_map(conj_tuple);
    double conj_dev = 0.0;
    for (std::size_t i = 0; i < tv.entries.size(); ++i) {
      const Complex x = tv.entries[i].value;
      const Complex y = tv_conj.entries[i].value;
      conj_dev = std::max(conj_dev, std::abs(x - y) / (1.0 + std::max(std::abs(x), std::abs(y))));
    }

    // homogeneity of tau under t in {2, i, -1/2}
    const double tau0 = tau(tv);
    double hom_dev = 0.0;
    for (const Complex t_scale : {Complex(2.0, 0.0), Complex(0.0, 1.0), Complex(-0.5, 0.0)}) {
      std::vector<CMatrix> scaled;
      for (const auto& a : tuple) scaled.push_back(a * t_scale);
      const double tau_t = tau(procesi_map(scaled));
      const double expected = std::abs(t_scale) * tau0;
      hom_dev = std::max(hom_dev, std::abs(tau_t - expected) / (1.0 + expected));
    }

    // trace cyclicity inside the vector
    double cyc_dev = 0.0;
    for (const auto& e : tv.entries) {
      if (e.word.size() < 2) continue;
      std::vector<int> rotated(e.word.begin() + 1, e.word.end());
      rotated.push_back(e.word.front());
      const Complex other = tv.at(rotated).value;
      cyc_dev = std::max(cyc_dev,
                         std::abs(e.value - other) / (1.0 + std::max(std::abs(e.value), std::abs(other))));
    }

    devs[t] = {conj_dev, hom_dev, cyc_dev};
    o.ratio = conj_dev;
    o.has_ratio = true;
    o.violation = conj_dev > kConjTol || hom_dev > kHomTol || cyc_dev > kCycTol;
    return o;
  });

  IneqReport report = merge("procesi(d=" + std::to_string(opts.dim) +
                                ",l=" + std::to_string(opts.set_size) + ")",
                            opts, outcomes, kConjTol, true);
  double hom = 0.0, cyc = 0.0;
  for (const auto& d : devs) {
    hom = std::max(hom, d.hom);
    cyc = std::max(cyc, d.cyc);
  }
  report.extras.emplace_back("max_homogeneity_dev", hom);
  report.extras.emplace_back("max_cyclicity_dev", cyc);
  return report;
}

C1Instance theorem_a_instance(const MatrixSet& sigma, const std::vector<NormSpec>& specs,
                              int depth) {
  if (sigma.empty()) throw std::invalid_argument("theorem_a_instance: empty set");
  const int d = sigma.dim();

  BoundsOptions bopts;
  bopts.max_depth = depth;
  const BoundsReport bounds = jsr_bounds(sigma, NormSpec::euclidean(), bopts);
  const double lb = bounds.best_lower;
  const double ub =
      bounds.best_upper_valid ? bounds.best_upper : std::numeric_limits<double>::infinity();

  C1Instance out;
  out.gap_rel = ub > 0.0 ? (ub - lb) / ub : 0.0;

  const auto powers = collect_products(sigma, d);
  for (const auto& spec : specs) {
    double num = 0.0;
    for (const auto& [w, p] : powers) num = std::max(num, operator_norm(spec, p));
    const double sig = set_norm(spec, sigma);
    if (lb <= 1e-12 * (1.0 + sig)) {
      if (num > 1e-12 * std::pow(1.0 + sig, d) && out.gap_rel > 0.01) {
        out.skipped = true;  // lower bound too weak to witness a ratio
        return out;
      }
      continue;
    }
    out.ratio = std::max(out.ratio, num / (lb * std::pow(sig, d - 1)));
    if (out.gap_rel <= 0.01 && std::isfinite(ub) && ub > 0.0) {
      const double rc = num / (ub * std::pow(sig, d - 1));
      if (rc > out.certified_ratio) {
        out.certified_ratio = rc;
        out.has_certified = true;
      }
    }
  }
  return out;
}

IneqReport estimate_C1(const EnsembleOptions& opts) {
  struct CertSlot {
    double ratio = 0.0;
    bool has = false;
  };
  std::vector<CertSlot> certified(opts.trials);

  auto outcomes = run_parallel(opts, [&](std::uint64_t t, Rng& rng) {
    TrialOutcome o;
    const MatrixSet sigma = random_set(rng, opts.dim, opts.set_size, true);
    const std::vector<NormSpec> specs = {
        NormSpec::euclidean(), NormSpec::vector_sup(),
        NormSpec::ellipsoidal(random_conditioned(rng, opts.dim, 10.0))};
    const C1Instance inst = theorem_a_instance(sigma, specs, opts.depth);
    if (inst.skipped) {
      o.skipped = true;
      return o;
    }
    if (inst.has_certified) certified[t] = {inst.certified_ratio, true};
    o.ratio = inst.ratio;
    o.has_ratio = inst.ratio > 0.0;
    o.violation = !std::isfinite(inst.ratio);
    return o;
  });

  IneqReport report = merge("theorem-a-C1(d=" + std::to_string(opts.dim) + ")", opts, outcomes,
                            0.0, false);
  double cert_max = 0.0;
  std::uint64_t cert_count = 0;
  for (const auto& c : certified) {
    if (c.has) {
      cert_max = std::max(cert_max, c.ratio);
      ++cert_count;
    }
  }
  report.extras.emplace_back("max_certified_ratio", cert_max);
  report.extras.emplace_back("certified_instances", static_cast<double>(cert_count));
  return report;
}

IneqReport theorem_b_ensemble(const EnsembleOptions& opts) {
  std::vector<double> ratios(opts.trials, std::numeric_limits<double>::quiet_NaN());
  std::vector<double> d2_ratios(opts.trials, std::numeric_limits<double>::quiet_NaN());

  auto outcomes = run_parallel(opts, [&](std::uint64_t t, Rng& rng) {
    TrialOutcome o;
    const MatrixSet sigma = random_set(rng, opts.dim, opts.set_size, true);
    const TheoremBCheck c = check_theoremB(sigma, opts.depth, 0, 1e-9);
    if (c.ratio_finite) {
      o.ratio = c.ratio;
      o.has_ratio = true;
      ratios[t] = c.ratio;
    } else if (!c.suspicious) {
      o.degenerate = true;  // q and upper both ~ 0
    }
    o.violation = c.suspicious || !c.restricted_matches;
    if (opts.dim == 2) {
      const D2TheoremBCheck c2 = check_d2_theoremB(sigma, opts.depth, 1e-9);
      if (!c2.monotone || c2.suspicious) o.violation = true;
      if (c2.ratio_finite) d2_ratios[t] = c2.ratio;
    }
    return o;
  });

  IneqReport report = merge("theorem-b-C2(d=" + std::to_string(opts.dim) + ")", opts, outcomes,
                            0.0, false);
  std::vector<double> finite;
  for (double r : ratios)
    if (std::isfinite(r)) finite.push_back(r);
  report.extras.emplace_back("median_ratio", median_of(finite));
  if (opts.dim == 2) {
    std::vector<double> finite2;
    for (double r : d2_ratios)
      if (std::isfinite(r)) finite2.push_back(r);
    report.extras.emplace_back("median_d2_ratio", median_of(finite2));
  }
  return report;
}

IneqReport other_inequality_ensemble(const EnsembleOptions& opts) {
  const double tol = std::min(opts.tol, 1e-9);
  auto outcomes = run_parallel(opts, [&](std::uint64_t t, Rng& rng) {
    TrialOutcome o;
    std::vector<CMatrix> tuple;
    if (t % 2 == 0) {
      for (int i = 0; i < opts.dim; ++i) tuple.push_back(random_matrix(rng, opts.dim));
    } else {
      // nilpotent family: strictly upper triangular, so every product has an
      // exactly zero spectrum and the degenerate branch is exercised
      for (int i = 0; i < opts.dim; ++i) tuple.push_back(random_strictly_upper(rng, opts.dim));
    }
    const OtherIneqCheck c = check_other_inequality(tuple, NormSpec::euclidean(), tol);
    if (c.branch == OtherIneqCheck::Branch::Ratio) {
      o.ratio = c.ratio;
      o.has_ratio = true;
      o.violation = !c.ok;
    } else {
      o.degenerate = true;
      o.violation = !c.ok;
    }
    return o;
  });
  return merge("other-ineq(d=" + std::to_string(opts.dim) + ")", opts, outcomes, 0.0, false);
}

}  // namespace jsrlab
