#include "jsrlab/complex_matrix.hpp"

#include <stdexcept>

#include "doctest.h"
#include "jsrlab/ensemble.hpp"
#include "jsrlab/rng.hpp"
#include "oracles.hpp"

using namespace jsrlab;

TEST_CASE("mat_mul identity") {
  const CMatrix a{{Complex(1, 2), Complex(3, -1)}, {Complex(0, 0), Complex(2, 2)}};
  CHECK(approx_equal(mat_mul(CMatrix::identity(2), a), a, 0.0));
  CHECK(approx_equal(mat_mul(a, CMatrix::identity(2)), a, 0.0));
}

TEST_CASE("mat_mul shift matrices") {
  const CMatrix up{{0, 1}, {0, 0}};
  const CMatrix down{{0, 0}, {1, 0}};
  const CMatrix e11{{1, 0}, {0, 0}};
  CHECK(approx_equal(mat_mul(up, down), e11, 0.0));
  CHECK(mat_mul(up, up).is_zero());
  CHECK(approx_equal(mat_mul(up, down), testing::mat_mul_oracle(up, down), 0.0));
}

TEST_CASE("mat_mul agrees with independent loop order on random input") {
  Rng rng(7);
  for (int d = 1; d <= 5; ++d) {
    const CMatrix a = random_matrix(rng, d);
    const CMatrix b = random_matrix(rng, d);
    CHECK(max_abs_diff(mat_mul(a, b), testing::mat_mul_oracle(a, b)) < 1e-13);
  }
}

TEST_CASE("mat_mul rejects dimension mismatch") {
  CHECK_THROWS_AS(mat_mul(CMatrix::identity(2), CMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("trace adjoint and norms") {
  const CMatrix a{{Complex(1, 1), Complex(-5, 0)}, {Complex(2, 0), Complex(0, -3)}};
  CHECK(a.trace() == Complex(1, -2));
  CHECK(a.max_abs_entry() == doctest::Approx(5.0));
  CHECK(a.max_abs_row_sum() == doctest::Approx(std::sqrt(2.0) + 5.0));
  const CMatrix ah = a.adjoint();
  CHECK(ah(0, 1) == Complex(2, 0));
  CHECK(ah(1, 0) == Complex(-5, 0));
}

TEST_CASE("inverse round trip") {
  Rng rng(11);
  for (int d = 1; d <= 5; ++d) {
    const CMatrix a = random_matrix(rng, d);
    const CMatrix ainv = inverse(a);
    CHECK(max_abs_diff(mat_mul(a, ainv), CMatrix::identity(d)) < 1e-10);
  }
  CHECK_THROWS(inverse(CMatrix::zero(3)));
}

TEST_CASE("matrix set validates dimensions") {
  CHECK_THROWS_AS(MatrixSet({CMatrix::identity(2), CMatrix::identity(3)}), std::invalid_argument);
  const MatrixSet sigma{CMatrix::identity(2), CMatrix::zero(2)};
  CHECK(sigma.size() == 2);
  CHECK(sigma.dim() == 2);
}

TEST_CASE("mat_pow") {
  const CMatrix a{{2, 0}, {0, 3}};
  const CMatrix a3 = mat_pow(a, 3);
  CHECK(a3(0, 0) == Complex(8, 0));
  CHECK(a3(1, 1) == Complex(27, 0));
}
