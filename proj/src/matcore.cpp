#include "jsrlab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "jsrlab/config.hpp"
#include "jsrlab/errors.hpp"

namespace jsrlab {

namespace {

void require_finite(const CMatrix& a, const char* who) {
  if (!a.is_finite()) throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

// Diagonal similarity scaling (radix 2) equalizing row/column 1-norms,
// after Parlett and Reinsch. Exact in binary64, so it cannot perturb the
// eigenvalues it is meant to stabilize.
void balance(CMatrix& a) {
  const int d = a.dim();
  const double radix = 2.0;
  const double sqrdx = radix * radix;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < d; ++i) {
      double c = 0.0, r = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        const double finv = 1.0 / f;
        for (int j = 0; j < d; ++j) a(i, j) *= finv;
        for (int j = 0; j < d; ++j) a(j, i) *= f;
      }
    }
  }
}

// Unitary (Householder) reduction to upper Hessenberg form, in place.
void to_hessenberg(CMatrix& a) {
  const int d = a.dim();
  std::vector<Complex> v;
  for (int k = 0; k + 2 < d; ++k) {
    double xnorm2 = 0.0;
    for (int i = k + 1; i < d; ++i) xnorm2 += std::norm(a(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;

    const Complex x0 = a(k + 1, k);
    const Complex alpha =
        (std::abs(x0) > 0.0) ? -(x0 / std::abs(x0)) * xnorm : Complex(-xnorm, 0.0);

    v.assign(static_cast<std::size_t>(d - k - 1), Complex(0.0, 0.0));
    for (int i = k + 1; i < d; ++i) v[static_cast<std::size_t>(i - k - 1)] = a(i, k);
    v[0] -= alpha;
    double vnorm2 = 0.0;
    for (const auto& vi : v) vnorm2 += std::norm(vi);
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;

    // A <- P A  with P = I - beta v v^H (P is Hermitian and unitary).
    for (int j = k; j < d; ++j) {
      Complex w(0.0, 0.0);
      for (int i = k + 1; i < d; ++i) w += std::conj(v[static_cast<std::size_t>(i - k - 1)]) * a(i, j);
      w *= beta;
      for (int i = k + 1; i < d; ++i) a(i, j) -= v[static_cast<std::size_t>(i - k - 1)] * w;
    }
    // A <- A P
    for (int i = 0; i < d; ++i) {
      Complex w(0.0, 0.0);
      for (int j = k + 1; j < d; ++j) w += a(i, j) * v[static_cast<std::size_t>(j - k - 1)];
      w *= beta;
      for (int j = k + 1; j < d; ++j) a(i, j) -= w * std::conj(v[static_cast<std::size_t>(j - k - 1)]);
    }
    a(k + 1, k) = alpha;
    for (int i = k + 2; i < d; ++i) a(i, k) = 0.0;
  }
}

// Eigenvalues of [[a, b], [c, e]] by the stable quadratic formula: the larger
// root is formed without cancellation, the other as det / larger.
std::pair<Complex, Complex> eig2x2(Complex a, Complex b, Complex c, Complex e) {
  const Complex t = a + e;
  const Complex det = a * e - b * c;
  Complex disc = std::sqrt(t * t - 4.0 * det);
  if (t.real() * disc.real() + t.imag() * disc.imag() < 0.0) disc = -disc;
  const Complex l1 = 0.5 * (t + disc);
  const Complex l2 = (std::abs(l1) > 0.0) ? det / l1 : 0.5 * (t - disc);
  return {l1, l2};
}

Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex e) {
  auto [l1, l2] = eig2x2(a, b, c, e);
  return (std::abs(l1 - e) <= std::abs(l2 - e)) ? l1 : l2;
}

// Complex Givens pair: [[c, s], [-conj(s), c]] * [f, g]^T = [r, 0]^T, c real.
std::pair<double, Complex> givens(Complex f, Complex g) {
  const double af = std::abs(f);
  const double ag = std::abs(g);
  if (ag == 0.0) return {1.0, Complex(0.0, 0.0)};
  if (af == 0.0) return {0.0, Complex(1.0, 0.0)};
  const double h = std::hypot(af, ag);
  const double c = af / h;
  const Complex s = (f / af) * (std::conj(g) / h);
  return {c, s};
}

// Explicitly shifted QR iteration on an upper Hessenberg matrix, in the style
// of EISPACK's comqr: deflate trailing 1x1 / 2x2 blocks, Wilkinson shift with
// an exceptional shift every 10 stalled iterations.
std::vector<Complex> hessenberg_qr(CMatrix& h, const EigenOptions& opts) {
  const int d = h.dim();
  std::vector<Complex> eig(static_cast<std::size_t>(d));
  double hnorm = h.max_abs_row_sum();
  if (hnorm == 0.0) return eig;  // zero matrix

  std::vector<double> cs(static_cast<std::size_t>(d));
  std::vector<Complex> sn(static_cast<std::size_t>(d));

  int hi = d - 1;
  int its = 0;
  while (hi >= 0) {
    if (hi == 0) {
      eig[0] = h(0, 0);
      break;
    }
    // Locate the active block [lo..hi]: lo is just past the first negligible
    // subdiagonal entry scanning upward from hi.
    int lo = 0;
    for (int m = hi; m >= 1; --m) {
      const double sub = std::abs(h(m, m - 1));
      double ref = std::abs(h(m - 1, m - 1)) + std::abs(h(m, m));
      if (ref == 0.0) ref = hnorm;
      if (sub <= opts.tolerance * ref) {
        h(m, m - 1) = 0.0;
        lo = m;
        break;
      }
    }
    if (lo == hi) {
      eig[static_cast<std::size_t>(hi)] = h(hi, hi);
      --hi;
      its = 0;
      continue;
    }
    if (lo == hi - 1) {
      auto [l1, l2] = eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
      eig[static_cast<std::size_t>(hi)] = l1;
      eig[static_cast<std::size_t>(hi - 1)] = l2;
      hi -= 2;
      its = 0;
      continue;
    }
    if (its >= opts.max_iterations_per_eigenvalue) {
      throw ConvergenceError("eigenvalues: QR iteration did not deflate",
                             std::abs(h(hi, hi - 1)) / hnorm);
    }

    Complex sigma;
    if (its > 0 && its % 10 == 0) {
      // exceptional shift to break symmetric stalls
      sigma = h(hi, hi) +
              Complex(std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2)), 0.0);
    } else {
      sigma = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }
    ++its;

    for (int i = lo; i <= hi; ++i) h(i, i) -= sigma;

    // QR factor by Givens rotations on adjacent rows.
    for (int j = lo; j < hi; ++j) {
      auto [c, s] = givens(h(j, j), h(j + 1, j));
      cs[static_cast<std::size_t>(j)] = c;
      sn[static_cast<std::size_t>(j)] = s;
      for (int col = j; col <= hi; ++col) {
        const Complex t1 = h(j, col);
        const Complex t2 = h(j + 1, col);
        h(j, col) = c * t1 + s * t2;
        h(j + 1, col) = -std::conj(s) * t1 + c * t2;
      }
      h(j + 1, j) = 0.0;
    }
    // Multiply R by Q^H-conjugates from the right to restore Hessenberg form.
    for (int j = lo; j < hi; ++j) {
      const double c = cs[static_cast<std::size_t>(j)];
      const Complex s = sn[static_cast<std::size_t>(j)];
      for (int row = lo; row <= j + 1; ++row) {
        const Complex t1 = h(row, j);
        const Complex t2 = h(row, j + 1);
        h(row, j) = c * t1 + std::conj(s) * t2;
        h(row, j + 1) = -s * t1 + c * t2;
      }
    }
    for (int i = lo; i <= hi; ++i) h(i, i) += sigma;
  }
  return eig;
}

void sort_spectrum(std::vector<Complex>& eig) {
  std::sort(eig.begin(), eig.end(), [](const Complex& a, const Complex& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
}

}  // namespace

CharPoly char_poly(const CMatrix& a) {
  require_finite(a, "char_poly");
  const int d = a.dim();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k)/k,
  // giving p(z) = z^d + c_1 z^{d-1} + ... + c_d and sigma_i = (-1)^i c_i.
  CharPoly out;
  out.sigma.resize(static_cast<std::size_t>(d));
  CMatrix m = CMatrix::identity(d);
  Complex c(0.0, 0.0);
  double sign = -1.0;
  for (int k = 1; k <= d; ++k) {
    if (k > 1) {
      for (int i = 0; i < d; ++i) m(i, i) += c;
      m = mat_mul(a, m);
    } else {
      m = a;
    }
    c = -m.trace() / static_cast<double>(k);
    out.sigma[static_cast<std::size_t>(k - 1)] = sign * c;
    sign = -sign;
  }
  return out;
}

Spectrum eigenvalues(const CMatrix& a, const EigenOptions& opts) {
  require_finite(a, "eigenvalues");
  const int d = a.dim();
  Spectrum sp;
  if (d == 1) {
    sp.eigenvalues = {a(0, 0)};
  } else if (d == 2) {
    auto [l1, l2] = eig2x2(a(0, 0), a(0, 1), a(1, 0), a(1, 1));
    sp.eigenvalues = {l1, l2};
  } else {
    CMatrix h = a;
    balance(h);
    to_hessenberg(h);
    sp.eigenvalues = hessenberg_qr(h, opts);
  }
  sort_spectrum(sp.eigenvalues);
  sp.radius = sp.eigenvalues.empty() ? 0.0 : std::abs(sp.eigenvalues.front());
  return sp;
}

double spectral_radius(const CMatrix& a, const EigenOptions& opts) {
  return eigenvalues(a, opts).radius;
}

std::vector<double> singular_values(const CMatrix& a) {
  require_finite(a, "singular_values");
  const int d = a.dim();
  if (d == 1) return {std::abs(a(0, 0))};

  // One-sided Jacobi on columns: rotate column pairs until mutually
  // orthogonal; the singular values are the final column norms.
  CMatrix b = a;
  const double eps = 1e-15;
  const int max_sweeps = 40;
  double worst = 0.0;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    worst = 0.0;
    for (int p = 0; p < d - 1; ++p) {
      for (int q = p + 1; q < d; ++q) {
        double app = 0.0, aqq = 0.0;
        Complex apq(0.0, 0.0);
        for (int i = 0; i < d; ++i) {
          app += std::norm(b(i, p));
          aqq += std::norm(b(i, q));
          apq += std::conj(b(i, p)) * b(i, q);
        }
        const double mag = std::abs(apq);
        if (app == 0.0 || aqq == 0.0) continue;
        const double rel = mag / std::sqrt(app * aqq);
        worst = std::max(worst, rel);
        if (rel <= eps) continue;

        // Phase-rotate to the real symmetric case, then a classical Jacobi
        // rotation on the 2x2 Gram block.
        const Complex phase = apq / mag;  // e^{i phi}
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cr = 1.0 / std::sqrt(1.0 + t * t);
        const double sr = t * cr;
        const Complex phase_conj = std::conj(phase);
        for (int i = 0; i < d; ++i) {
          const Complex bp = b(i, p);
          const Complex bq = b(i, q);
          b(i, p) = cr * bp - sr * phase_conj * bq;
          b(i, q) = sr * phase * bp + cr * bq;
        }
      }
    }
    if (worst <= eps) break;
  }
  if (worst > 1e-10) {
    throw ConvergenceError("singular_values: Jacobi sweeps did not converge", worst);
  }

  std::vector<double> sv(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += std::norm(b(i, j));
    sv[static_cast<std::size_t>(j)] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

double euclidean_operator_norm(const CMatrix& a) { return singular_values(a).front(); }

double condition_number(const CMatrix& a) {
  const auto sv = singular_values(a);
  const double smin = sv.back();
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return sv.front() / smin;
}

CMatrix char_poly_at(const CharPoly& p, const CMatrix& a) {
  const int d = a.dim();
  if (p.degree() != d) throw std::invalid_argument("char_poly_at: degree/dimension mismatch");
  // Horner: coefficients of z^{d-i} are (-1)^i sigma_i, leading coefficient 1.
  CMatrix acc = a;
  double sign = -1.0;
  for (int i = 1; i <= d; ++i) {
    const Complex coeff = sign * p.sigma[static_cast<std::size_t>(i - 1)];
    for (int r = 0; r < d; ++r) acc(r, r) += coeff;
    if (i < d) acc = mat_mul(acc, a);
    sign = -sign;
  }
  return acc;
}

Complex char_poly_at(const CharPoly& p, Complex z) {
  Complex acc(1.0, 0.0);
  double sign = -1.0;
  for (int i = 1; i <= p.degree(); ++i) {
    acc = acc * z + sign * p.sigma[static_cast<std::size_t>(i - 1)];
    sign = -sign;
  }
  return acc;
}

double cayley_hamilton_residual(const CMatrix& a) {
  require_finite(a, "cayley_hamilton_residual");
  if (a.is_zero()) return 0.0;
  const CharPoly p = char_poly(a);
  const CMatrix pa = char_poly_at(p, a);
  const double denom = std::pow(1.0 + euclidean_operator_norm(a), a.dim());
  return pa.max_abs_entry() / denom;
}

std::vector<Complex> elementary_symmetric(const std::vector<Complex>& values) {
  const std::size_t n = values.size();
  std::vector<Complex> e(n + 1, Complex(0.0, 0.0));
  e[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = std::min(i + 1, n); j >= 1; --j) {
      e[j] += values[i] * e[j - 1];
    }
  }
  return std::vector<Complex>(e.begin() + 1, e.end());
}

}  // namespace jsrlab
