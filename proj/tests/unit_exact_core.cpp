#include "doctest.h"
#include "swrt/poly.hpp"
#include "swrt/rational.hpp"

using swrt::BivariatePoly;
using swrt::Rational;

namespace {

// P_2 and P_3 as displayed in the source material; reused across tests.
BivariatePoly make_p2() {
  BivariatePoly p;
  p.add_term(2, 2, Rational(-1, 2));
  p.add_term(2, 1, Rational(1));
  p.add_term(2, 0, Rational(-1, 3));
  p.add_term(0, 0, Rational(1, 3));
  return p;
}

BivariatePoly make_p3() {
  BivariatePoly p;
  p.add_term(3, 3, Rational(-1, 6));
  p.add_term(3, 2, Rational(1, 2));
  p.add_term(3, 1, Rational(-1, 3));
  p.add_term(1, 1, Rational(1, 2));
  p.add_term(1, 0, Rational(-1, 2));
  return p;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(1, 2).den() == 2);
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(3, 4) * Rational(2, 3)) == Rational(1, 2));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK(Rational::from_string("-6/4").str() == "-3/2");
}

TEST_CASE("bernoulli values and recurrence") {
  CHECK(swrt::bernoulli(0) == Rational(1));
  CHECK(swrt::bernoulli(2) == Rational(1, 6));
  CHECK(swrt::bernoulli(4) == Rational(-1, 30));
  CHECK(swrt::bernoulli(12) == Rational(-691, 2730));
  CHECK_THROWS_AS(swrt::bernoulli(3), std::invalid_argument);
  CHECK_THROWS_AS(swrt::bernoulli(-2), std::invalid_argument);

  // defining recurrence: sum_{j=0}^{m} binom(m+1,j) B_j = 0, B_1 = -1/2
  for (int m = 2; m <= 16; m += 2) {
    Rational acc(0);
    for (int j = 0; j <= m; ++j) {
      Rational bj = (j == 1) ? Rational(-1, 2)
                             : (j % 2 != 0 ? Rational(0) : swrt::bernoulli(j));
      acc += Rational(swrt::binomial(m + 1, j), mpz_class(1)) * bj;
    }
    CHECK(acc == Rational(0));
  }
}

TEST_CASE("faulhaber matches brute-force power sums") {
  CHECK(swrt::eval_poly(swrt::faulhaber(0), Rational(7)) == Rational(7));
  CHECK(swrt::eval_poly(swrt::faulhaber(1), Rational(10)) == Rational(55));
  // Q_3(l) = l^2 (l+1)^2 / 4
  for (long l = 0; l <= 20; ++l)
    CHECK(swrt::eval_poly(swrt::faulhaber(3), Rational(l)) ==
          Rational(l * l * (l + 1) * (l + 1), 4));

  for (long p = 0; p <= 10; ++p) {
    const auto q = swrt::faulhaber(p);
    CHECK(q.size() == static_cast<std::size_t>(p + 2));
    CHECK(q[0] == Rational(0));
    Rational brute(0);
    for (long l = 0; l <= 50; ++l) {
      if (l > 0) brute += Rational(l).pow(p);
      CHECK(swrt::eval_poly(q, Rational(l)) == brute);
    }
  }
}

TEST_CASE("parity split on the displayed polynomials") {
  const BivariatePoly p2 = make_p2();
  auto [plus, minus] = p2.parity_split();
  BivariatePoly expect_plus;
  expect_plus.add_term(2, 2, Rational(-1, 2));
  expect_plus.add_term(2, 0, Rational(-1, 3));
  expect_plus.add_term(0, 0, Rational(1, 3));
  BivariatePoly expect_minus;
  expect_minus.add_term(2, 1, Rational(1));
  CHECK(plus == expect_plus);
  CHECK(minus == expect_minus);
  CHECK((plus + minus) == p2);

  auto [zp, zm] = BivariatePoly().parity_split();
  CHECK(zp.is_zero());
  CHECK(zm.is_zero());

  BivariatePoly p1;
  p1.add_term(1, 0, Rational(1));
  p1.add_term(1, 1, Rational(-1));
  auto [p1p, p1m] = p1.parity_split();
  CHECK(p1p == BivariatePoly::monomial(1, 0, Rational(1)));
  CHECK(p1m == BivariatePoly::monomial(1, 1, Rational(-1)));
}

TEST_CASE("parity split is linear and idempotent") {
  const BivariatePoly p = make_p3() + make_p2().scaled(Rational(5, 7));
  auto [plus, minus] = p.parity_split();
  CHECK((plus + minus) == p);
  auto [pp, pm] = plus.parity_split();
  CHECK(pp == plus);
  CHECK(pm.is_zero());
}

TEST_CASE("poly arithmetic examples") {
  const BivariatePoly p3 = make_p3();
  CHECK(p3.eval(Rational(4), Rational(1, 4)) == Rational(-5));

  CHECK(BivariatePoly::monomial(0, 0, Rational(7)).dx().is_zero());

  const BivariatePoly p2 = make_p2();
  const BivariatePoly def = p2.integrate_x(Rational(0), Rational(2));
  // k^2 part cancels; the constant integrates to 2/3
  CHECK(def == BivariatePoly::monomial(0, 0, Rational(2, 3)));

  // substitute and evaluate agree
  CHECK(p3.subst_x(Rational(1, 4)).eval(Rational(4), Rational(0)) == Rational(-5));

  // product degree bookkeeping
  const BivariatePoly prod = p2 * p3;
  CHECK(prod.max_k_degree() == 5);
  CHECK(prod.max_x_degree() == 5);
  CHECK(prod.eval(Rational(2), Rational(3)) ==
        p2.eval(Rational(2), Rational(3)) * p3.eval(Rational(2), Rational(3)));
}
