#include "jsrlab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "jsrlab/complex_matrix.hpp"
#include "jsrlab/ensemble.hpp"
#include "jsrlab/errors.hpp"
#include "jsrlab/rng.hpp"
#include "oracles.hpp"

using namespace jsrlab;

namespace {

// sorted copies for order-insensitive spectrum comparison
std::vector<Complex> sorted_by_parts(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

}  // namespace

TEST_CASE("char_poly diagonal and nilpotent") {
  const CharPoly p = char_poly(CMatrix{{1, 0}, {0, 2}});
  CHECK(std::abs(p.sigma[0] - Complex(3, 0)) < 1e-14);
  CHECK(std::abs(p.sigma[1] - Complex(2, 0)) < 1e-14);

  const CharPoly q = char_poly(CMatrix{{0, 1}, {0, 0}});
  CHECK(std::abs(q.sigma[0]) < 1e-14);
  CHECK(std::abs(q.sigma[1]) < 1e-14);
}

TEST_CASE("char_poly matches elementary symmetric functions of eigenvalues") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix a = random_matrix(rng, 3);
    const CharPoly p = char_poly(a);
    const Spectrum sp = eigenvalues(a);
    const auto e = elementary_symmetric(sp.eigenvalues);
    const double scale = 1.0 + sp.radius;
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(p.sigma[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(i)]) <=
            1e-9 * std::pow(scale, i + 1));
    }
  }
}

TEST_CASE("eigenvalues of simple matrices") {
  SUBCASE("diagonal") {
    const Spectrum sp = eigenvalues(CMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    const auto v = sorted_by_parts(sp.eigenvalues);
    CHECK(std::abs(v[0] - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(v[1] - Complex(2, 0)) < 1e-12);
    CHECK(std::abs(v[2] - Complex(3, 0)) < 1e-12);
    CHECK(sp.radius == doctest::Approx(3.0));
  }
  SUBCASE("rotation has +-i") {
    const Spectrum sp = eigenvalues(CMatrix{{0, -1}, {1, 0}});
    const auto v = sorted_by_parts(sp.eigenvalues);
    CHECK(std::abs(v[0] - Complex(0, -1)) < 1e-14);
    CHECK(std::abs(v[1] - Complex(0, 1)) < 1e-14);
  }
}

TEST_CASE("eigenvalues of companion matrix vs root-finding oracle") {
  // companion of z^3 - 6z^2 + 11z - 6 = (z-1)(z-2)(z-3)
  const CMatrix companion{{0, 0, 6}, {1, 0, -11}, {0, 1, 6}};
  const Spectrum sp = eigenvalues(companion);
  const auto oracle = sorted_by_parts(
      testing::polynomial_roots_oracle({Complex(-6, 0), Complex(11, 0), Complex(-6, 0)}));
  const auto got = sorted_by_parts(sp.eigenvalues);
  REQUIRE(got.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(got[static_cast<std::size_t>(i)] - oracle[static_cast<std::size_t>(i)]) < 1e-9);
    CHECK(std::abs(got[static_cast<std::size_t>(i)] - Complex(i + 1, 0)) < 1e-9);
  }
}

TEST_CASE("eigenvalue sum and product match trace and determinant-ish oracle") {
  Rng rng(31);
  for (int d = 2; d <= 6; ++d) {
    const CMatrix a = random_matrix(rng, d);
    const Spectrum sp = eigenvalues(a);
    Complex sum(0, 0);
    for (const auto& l : sp.eigenvalues) sum += l;
    CHECK(std::abs(sum - a.trace()) < 1e-9 * (1.0 + sp.radius));
    // product of eigenvalues = sigma_d
    Complex prod(1, 0);
    for (const auto& l : sp.eigenvalues) prod *= l;
    const CharPoly p = char_poly(a);
    CHECK(std::abs(prod - p.sigma.back()) < 1e-8 * std::pow(1.0 + sp.radius, d));
  }
}

TEST_CASE("spectral radius") {
  CHECK(spectral_radius(CMatrix::identity(3)) == doctest::Approx(1.0));
  CHECK(spectral_radius(CMatrix{{0, 1}, {0, 0}}) == doctest::Approx(0.0));
  CHECK(spectral_radius(CMatrix{{0, 2}, {3, 0}}) == doctest::Approx(std::sqrt(6.0)));
  CHECK(spectral_radius(CMatrix::zero(4)) == doctest::Approx(0.0));
}

TEST_CASE("spectral radius power identity") {
  Rng rng(41);
  for (int d = 2; d <= 4; ++d) {
    const CMatrix a = random_matrix(rng, d);
    const double r = spectral_radius(a);
    for (int n = 2; n <= 6; ++n) {
      const double rn = spectral_radius(mat_pow(a, n));
      CHECK(rn == doctest::Approx(std::pow(r, n)).epsilon(1e-8));
    }
  }
}

TEST_CASE("trace bounded by dimension times spectral radius") {
  Rng rng(43);
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 40; ++trial) {
      const CMatrix a = random_matrix(rng, d);
      CHECK(std::abs(a.trace()) <= d * spectral_radius(a) + 1e-9);
    }
  }
}

TEST_CASE("singular values of known matrices") {
  SUBCASE("diagonal") {
    const auto sv = singular_values(CMatrix{{1, 0}, {0, 3}});
    CHECK(sv[0] == doctest::Approx(3.0));
    CHECK(sv[1] == doctest::Approx(1.0));
  }
  SUBCASE("hand case via A^H A") {
    // A = [[0,2],[3,0]]: A^H A = diag(9,4), singular values (3,2)
    const auto sv = singular_values(CMatrix{{0, 2}, {3, 0}});
    CHECK(sv[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(sv[1] == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("unitary has all ones") {
    Rng rng(51);
    for (int d = 2; d <= 5; ++d) {
      const auto sv = singular_values(random_unitary(rng, d));
      for (double s : sv) CHECK(s == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("largest singular value matches power iteration oracle") {
  Rng rng(61);
  for (int d = 2; d <= 6; ++d) {
    const CMatrix a = random_matrix(rng, d);
    const double direct = singular_values(a).front();
    const double oracle = testing::power_iteration_norm2(a);
    CHECK(direct == doctest::Approx(oracle).epsilon(1e-8));
  }
}

TEST_CASE("cayley hamilton residual") {
  CHECK(cayley_hamilton_residual(CMatrix{{1, 0}, {0, 2}}) < 1e-12);
  CHECK(cayley_hamilton_residual(CMatrix::zero(3)) == doctest::Approx(0.0));
  Rng rng(71);
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 40; ++trial) {
      CHECK(cayley_hamilton_residual(random_matrix(rng, d)) < 1e-9);
    }
  }
}

TEST_CASE("eigenvalues reject non-finite input") {
  CMatrix a = CMatrix::identity(2);
  a(0, 1) = Complex(std::numeric_limits<double>::infinity(), 0.0);
  CHECK_THROWS_AS(eigenvalues(a), std::invalid_argument);
}
