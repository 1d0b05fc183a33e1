#include "doctest.h"

#include <cmath>

#include "colhopf/matrix.hpp"
#include "colhopf/qarith.hpp"
#include "colhopf/verifier.hpp"

using namespace colhopf;

namespace {

ComplexMatrix random_matrix(Rng& rng, int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return m;
}

// Entries from power-of-two grids multiply without rounding, so structural
// identities can be asserted bit-exactly.
ComplexMatrix random_pow2_matrix(Rng& rng, int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = Complex(rng.sign() * std::ldexp(1.0, static_cast<int>(rng.next() % 3) - 1),
                        rng.sign() * std::ldexp(1.0, static_cast<int>(rng.next() % 3) - 1));
  return m;
}

}  // namespace

TEST_CASE("kron identities and examples") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(kron(i2, i2).exactly_equal(ComplexMatrix::identity(4)));

  const ComplexMatrix j3 = ComplexMatrix::diagonal({0.5, -0.5});
  const ComplexMatrix expected = ComplexMatrix::diagonal({0.25, -0.25, -0.25, 0.25});
  CHECK(kron(j3, j3).exactly_equal(expected));
}

TEST_CASE("kron mixed product and associativity") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 2);
    const ComplexMatrix c = random_matrix(rng, 2), d = random_matrix(rng, 2);
    CHECK(rel_residual(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
  }
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_pow2_matrix(rng, 2), b = random_pow2_matrix(rng, 3);
    const ComplexMatrix c = random_pow2_matrix(rng, 2);
    CHECK(kron(kron(a, b), c).exactly_equal(kron(a, kron(b, c))));
  }
}

TEST_CASE("embed basic cases") {
  Rng rng(12);
  const ComplexMatrix r = random_matrix(rng, 4);
  CHECK(embed(r, {1, 2}, {2, 2, 2}).exactly_equal(kron(r, ComplexMatrix::identity(2))));
  CHECK(embed(ComplexMatrix::identity(4), {1, 3}, {2, 2, 2})
            .exactly_equal(ComplexMatrix::identity(8)));
}

TEST_CASE("embed on legs (1,3) against the index-formula oracle") {
  Rng rng(13);
  const ComplexMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 2);
  const ComplexMatrix m = embed(kron(a, b), {1, 3}, {2, 2, 2});
  // Oracle: M[(i,j,k),(i',j',k')] = A[i,i'] delta[j,j'] B[k,k']
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int ip = 0; ip < 2; ++ip)
          for (int jp = 0; jp < 2; ++jp)
            for (int kp = 0; kp < 2; ++kp) {
              const Complex expected = (j == jp) ? a(i, ip) * b(k, kp) : Complex(0.0);
              CHECK(std::abs(m(4 * i + 2 * j + k, 4 * ip + 2 * jp + kp) - expected) == 0.0);
            }
}

TEST_CASE("embed rejects bad legs") {
  const ComplexMatrix i4 = ComplexMatrix::identity(4);
  CHECK_THROWS_AS(embed(i4, {1, 1}, {2, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(embed(i4, {2, 4}, {2, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(embed(i4, {1}, {2, 2, 2}), std::invalid_argument);  // 4 != 2
}

TEST_CASE("embed with uneven leg dimensions") {
  Rng rng(18);
  ComplexMatrix a(2, 2), c(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c(i, j) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  // op on legs (1,3) of dims (2,3,4) equals A (x) I_3 (x) C
  const ComplexMatrix m = embed(kron(a, c), {1, 3}, {2, 3, 4});
  CHECK(m.exactly_equal(kron(a, kron(ComplexMatrix::identity(3), c))));
}

TEST_CASE("embed over disjoint legs commutes") {
  Rng rng(14);
  const ComplexMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 3);
  const ComplexMatrix ea = embed(a, {1}, {2, 3});
  const ComplexMatrix eb = embed(b, {2}, {2, 3});
  CHECK(rel_residual(ea * eb, eb * ea) == 0.0);
}

TEST_CASE("flip is the twist permutation") {
  const ComplexMatrix p = flip(2, 2);
  CHECK((p * p).exactly_equal(ComplexMatrix::identity(4)));
  CHECK(flip(1, 5).exactly_equal(ComplexMatrix::identity(5)));

  // exactly one 1 in every row and column
  for (int i = 0; i < 4; ++i) {
    int row_ones = 0, col_ones = 0;
    for (int j = 0; j < 4; ++j) {
      if (p(i, j) == Complex(1.0)) ++row_ones;
      if (p(j, i) == Complex(1.0)) ++col_ones;
      CHECK((p(i, j) == Complex(0.0) || p(i, j) == Complex(1.0)));
    }
    CHECK(row_ones == 1);
    CHECK(col_ones == 1);
  }

  Rng rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 2);
    CHECK(rel_residual(p * kron(a, b) * p, kron(b, a)) < 1e-12);
  }
}

TEST_CASE("partial transpose acts on one leg") {
  Rng rng(16);
  const ComplexMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 3);
  const ComplexMatrix m = kron(a, b);
  CHECK(partial_transpose(m, 1, {2, 3}).exactly_equal(kron(a.transpose(), b)));
  CHECK(partial_transpose(m, 2, {2, 3}).exactly_equal(kron(a, b.transpose())));

  const ComplexMatrix c = random_matrix(rng, 2);
  CHECK(partial_transpose(kron(kron(a, b), c), 2, {2, 3, 2})
            .exactly_equal(kron(kron(a, b.transpose()), c)));
}

TEST_CASE("inverse") {
  Rng rng(17);
  const ComplexMatrix a = random_matrix(rng, 4) + 2.0 * ComplexMatrix::identity(4);
  CHECK(rel_residual(a * inverse(a), ComplexMatrix::identity(4)) < 1e-12);
  CHECK_THROWS(inverse(ComplexMatrix(3, 3)));
}

TEST_CASE("analytic_apply terminating cases") {
  CHECK(analytic_apply(Series::Exp, ComplexMatrix(3, 3)).exactly_equal(ComplexMatrix::identity(3)));

  const Complex t(0.7, 0.2);
  const ComplexMatrix nil = ComplexMatrix::unit(2, 0, 1, t);
  const ComplexMatrix expected = ComplexMatrix::identity(2) + ComplexMatrix::unit(2, 0, 1, t);
  CHECK(analytic_apply(Series::Exp, nil).exactly_equal(expected));

  CHECK(analytic_apply(Series::ArcsinhOverX, ComplexMatrix(4, 4))
            .exactly_equal(ComplexMatrix::identity(4)));
  CHECK(analytic_apply(Series::InvSqrt1p4x2, ComplexMatrix(2, 2))
            .exactly_equal(ComplexMatrix::identity(2)));
}

TEST_CASE("analytic series coefficients match the scalar functions") {
  // Evaluate the series on 1x1 matrices and compare with closed forms.
  for (double x : {0.05, 0.15, -0.12}) {
    ComplexMatrix m(1, 1);
    m(0, 0) = x;
    CHECK(std::abs(analytic_apply(Series::Exp, m)(0, 0) - std::exp(x)) < 1e-14);
    CHECK(std::abs(analytic_apply(Series::ArcsinhOverX, m)(0, 0) - std::asinh(x) / x) < 1e-14);
    CHECK(std::abs(analytic_apply(Series::InvSqrt1p4x2, m)(0, 0) -
                   1.0 / std::sqrt(1.0 + 4.0 * x * x)) < 1e-14);
  }
}

TEST_CASE("exp of commuting sum factorizes") {
  // M and N of the oscillator representation commute.
  const ComplexMatrix m = ComplexMatrix::unit(3, 0, 2, Complex(0.4, 0.1));
  const ComplexMatrix n = ComplexMatrix::unit(3, 1, 1, Complex(-0.3, 0.2));
  CHECK(rel_residual(m * n, n * m) == 0.0);
  CHECK(rel_residual(analytic_apply(Series::Exp, m + n),
                     analytic_apply(Series::Exp, m) * analytic_apply(Series::Exp, n)) < 1e-12);
}

TEST_CASE("analytic_apply reports non-convergence") {
  CHECK_THROWS_AS(analytic_apply(Series::Exp, ComplexMatrix::diagonal({Complex(80.0)})),
                  std::runtime_error);
}

TEST_CASE("q-numbers and q-factorials") {
  const Complex q(2.0, 0.0);
  CHECK(std::abs(q_number(0.0, q)) == 0.0);
  CHECK(std::abs(q_number(1.0, q) - 1.0) < 1e-15);
  CHECK(std::abs(q_factorial(0, q) - 1.0) == 0.0);
  CHECK(std::abs(q_number(2.0, q) - 2.5) < 1e-14);            // (4 - 1/4)/(2 - 1/2)
  CHECK(std::abs(q_factorial(3, q) - 13.125) < 1e-12);        // 5.25 * 2.5 * 1
  CHECK_THROWS_AS(q_number(2.0, Complex(1.0)), std::domain_error);
  CHECK_THROWS_AS(q_number(2.0, Complex(-1.0)), std::domain_error);

  // q -> 1 limit: |[n]_{1+eps} - n| <= 100 eps for n <= 5
  const double eps = 1e-6;
  for (int n = 1; n <= 5; ++n)
    CHECK(std::abs(q_number(Complex(n), Complex(1.0 + eps)) - Complex(n)) <= 100.0 * eps);

  // eta-parameterized arithmetic agrees with the principal-branch form
  const Complex eta(0.41, 0.13);
  CHECK(std::abs(q_number_eta(2.0, eta) - q_number(2.0, std::exp(eta))) < 1e-13);
  CHECK(std::abs(q_factorial_eta(3, eta) - q_factorial(3, std::exp(eta))) < 1e-13);
}

TEST_CASE("q-exponential coefficients") {
  // E_x with x = q^-2 must reproduce q^(n(n-1)/2)/[n]_q!
  const Complex eta(0.35, 0.1);
  for (int n = 0; n < 4; ++n) {
    const Complex expected = std::exp(eta * (n * (n - 1) / 2.0)) / q_factorial_eta(n, eta);
    CHECK(std::abs(q_exponential_coefficient(n, -2.0 * eta) - expected) < 1e-13);
  }
}

TEST_CASE("approx_eq thresholds") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  const ResidualReport ok = approx_eq(i2, i2, 1e-9);
  CHECK(ok.pass);
  CHECK(ok.rel == 0.0);

  const ComplexMatrix perturbed = i2 + ComplexMatrix::unit(2, 0, 1, 1e-3);
  const ResidualReport bad = approx_eq(i2, perturbed, 1e-9);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_abs == 1e-3);

  // pass/fail transitions as the perturbation crosses tol * scale
  for (double mag : {1e-12, 1e-10, 1e-8, 1e-6}) {
    const ComplexMatrix p = i2 + ComplexMatrix::unit(2, 0, 1, mag);
    const double scale = std::max({1.0, i2.frobenius_norm(), p.frobenius_norm()});
    CHECK(approx_eq(i2, p, 1e-9).pass == (mag / scale <= 1e-9));
  }
  CHECK_THROWS_AS(approx_eq(i2, ComplexMatrix::identity(3), 1e-9), std::invalid_argument);
}
