#include <cmath>
#include <complex>

#include "doctest.h"
#include "swrt/xi.hpp"

using swrt::BivariatePoly;
using swrt::GridFunction;
using swrt::Rational;

namespace {

double grid_max_diff(const GridFunction& a, const GridFunction& b) {
  double m = 0;
  for (std::size_t j = 0; j < a.values.size(); ++j)
    m = std::max(m, std::abs(a.values[j] - b.values[j]));
  return m;
}

BivariatePoly expected_p1() {
  BivariatePoly p;
  p.add_term(1, 0, Rational(1));
  p.add_term(1, 1, Rational(-1));
  return p;
}

BivariatePoly expected_p2() {
  BivariatePoly p;
  p.add_term(2, 2, Rational(-1, 2));
  p.add_term(2, 1, Rational(1));
  p.add_term(2, 0, Rational(-1, 3));
  p.add_term(0, 0, Rational(1, 3));
  return p;
}

BivariatePoly expected_p3() {
  BivariatePoly p;
  p.add_term(3, 3, Rational(-1, 6));
  p.add_term(3, 2, Rational(1, 2));
  p.add_term(3, 1, Rational(-1, 3));
  p.add_term(1, 1, Rational(1, 2));
  p.add_term(1, 0, Rational(-1, 2));
  return p;
}

}  // namespace

TEST_CASE("xi_direct small values") {
  // m = 0: Xi_0(x) = 2k delta(x) - 1 - (-1)^{kx}
  const GridFunction xi0 = swrt::xi_direct(0, 3);
  CHECK(xi0.at(0).real() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(xi0.at(1).real() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(xi0.at(2).real() == doctest::Approx(-2.0).epsilon(1e-12));

  // m = 1, k = 2, x = 1/2: two-term sum equals 2
  const GridFunction xi1 = swrt::xi_direct(1, 2);
  CHECK(xi1.at(1).real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(xi1.at(1).imag()) < 1e-12);

  // m = 2, k = 2, x = 1
  const GridFunction xi2 = swrt::xi_direct(2, 2);
  CHECK(xi2.at(2).real() == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(swrt::xi_direct(1, 1), std::invalid_argument);
}

TEST_CASE("grid operators") {
  const int k = 5;
  // T u_y = u_{y+1}
  const GridFunction u2 = swrt::basis_u(k, 2);
  const GridFunction u_shift = swrt::basis_u(k, 2 + k);
  CHECK(grid_max_diff(swrt::apply_T(u2), u_shift) < 1e-13);

  // Delta(constant) = 0
  GridFunction ones(k);
  for (auto& v : ones.values) v = 1.0;
  GridFunction dz = swrt::apply_Delta(ones);
  for (const auto& v : dz.values) CHECK(std::abs(v) < 1e-15);

  // L u_y = e^{i pi y} u_y
  const GridFunction u3 = swrt::basis_u(k, 3);
  const GridFunction lu = swrt::apply_L(u3);
  const std::complex<double> phase = std::exp(std::complex<double>(0, M_PI * 3.0 / k));
  for (std::size_t j = 0; j < lu.values.size(); ++j)
    CHECK(std::abs(lu.values[j] - phase * u3.values[j]) < 1e-13);

  // L^{-1} inverts L
  CHECK(grid_max_diff(swrt::apply_L_inv(swrt::apply_L(u3)), u3) < 1e-14);
}

TEST_CASE("dft of xi equals the negative sine power") {
  for (int m = 0; m <= 4; ++m) {
    for (int k : {3, 7}) {
      const GridFunction xim = swrt::xi_direct(m, k);
      const GridFunction f = swrt::dft(xim);
      CHECK(std::abs(f.at(0)) < 1e-10);
      CHECK(std::abs(f.at(k)) < 1e-10);
      for (int j = 1; j < 2 * k; ++j) {
        if (j == k) continue;
        const std::complex<double> expect =
            std::pow(std::complex<double>(0, std::sin(M_PI * j / k)), -m);
        CHECK(std::abs(f.at(j) - expect) < 1e-9);
      }
    }
  }
}

TEST_CASE("dft intertwines T and Delta") {
  const int k = 6;
  const GridFunction xi3 = swrt::xi_direct(3, k);
  // F(T f)(y) = F(f)(y - 1); y - 1 is k grid indices below y
  const GridFunction lhs = swrt::dft(swrt::apply_T(xi3));
  const GridFunction rhs = swrt::dft(xi3);
  double m = 0;
  for (int j = 0; j < 2 * k; ++j) m = std::max(m, std::abs(lhs.at(j) - rhs.at(j - k)));
  CHECK(m < 1e-9);
}

TEST_CASE("T and Delta relations on xi") {
  for (int m = 1; m <= 5; ++m) {
    for (int k : {4, 9}) {
      const GridFunction xim = swrt::xi_direct(m, k);
      const double scale = std::pow(k, m + 1);

      // T Xi_m = (-1)^m Xi_m
      const GridFunction t = swrt::apply_T(xim);
      double dev = 0;
      for (int j = 0; j < 2 * k; ++j)
        dev = std::max(dev, std::abs(t.at(j) - (m % 2 ? -1.0 : 1.0) * xim.at(j)));
      CHECK(dev < 1e-9 * scale);

      // Delta Xi_{m+1} = Xi_m
      const GridFunction next = swrt::xi_direct(m + 1, k);
      CHECK(grid_max_diff(swrt::apply_Delta(next), xim) < 1e-9 * scale);
    }
  }
}

TEST_CASE("pm_inductive reproduces the displayed polynomials") {
  CHECK(swrt::pm_inductive(1).poly == expected_p1());
  CHECK(swrt::pm_inductive(2).poly == expected_p2());
  CHECK(swrt::pm_inductive(3).poly == expected_p3());
}

TEST_CASE("pm_recurrence agrees with pm_inductive exactly") {
  CHECK(swrt::pm_recurrence(2).poly == expected_p2());
  CHECK(swrt::pm_recurrence(3).poly == expected_p3());
  for (int m = 2; m <= 9; ++m)
    CHECK(swrt::pm_recurrence(m).poly == swrt::pm_inductive(m).poly);

  // singular-part leading coefficient of P_4^-: k^4 x^3 carries 1/3!
  CHECK(swrt::pm_recurrence(4).singular_part.coeff(4, 3) == Rational(1, 6));

  CHECK_THROWS_AS(
      swrt::pm_recurrence_from(swrt::pm_inductive(1), 3), std::logic_error);
}

TEST_CASE("P_m reflection and parity identities") {
  for (int m = 1; m <= 7; ++m) {
    const BivariatePoly& pm = swrt::pm_inductive(m).poly;

    // P_m(k, 2-x) = (-1)^m P_m(k, x) checked on enough sample points to pin
    // the polynomial identity (degrees are <= m in each variable).
    for (long kk = 1; kk <= m + 2; ++kk)
      for (long xx = 0; xx <= m + 2; ++xx) {
        const Rational x(xx, 3);
        const Rational lhs = pm.eval(Rational(kk), Rational(2) - x);
        const Rational rhs = pm.eval(Rational(kk), x);
        CHECK(lhs == (m % 2 ? -rhs : rhs));
      }

    // P_m(-k, x) = (-1)^m P_m(k, x) is exact by the par_k exponent pattern
    for (const auto& [key, c] : pm.terms()) CHECK((key.first - m) % 2 == 0);

    // (1/2)(P_m(k,x) - P_m(k,2+x)) equals the singular part
    const BivariatePoly& sing = swrt::pm_inductive(m).singular_part;
    for (long kk = 1; kk <= m + 2; ++kk)
      for (long xx = 0; xx <= m + 2; ++xx) {
        const Rational x(xx, 3);
        const Rational lhs =
            (pm.eval(Rational(kk), x) - pm.eval(Rational(kk), Rational(2) + x)) /
            Rational(2);
        CHECK(lhs == sing.eval(Rational(kk), x));
      }
  }
}

TEST_CASE("verify_dev_part on sample levels") {
  const auto r1 = swrt::verify_dev_part(1, 2);
  CHECK(r1.pass);
  CHECK(r1.max_deviation < 1e-12);

  const auto r5 = swrt::verify_dev_part(5, 7);
  CHECK(r5.pass);
  CHECK(r5.max_deviation < 1e-10 * r5.scale);

  // even m, odd kx + m: the grid value vanishes exactly in the identity
  const GridFunction xi2 = swrt::xi_direct(2, 5);
  CHECK(std::abs(xi2.at(3)) < 1e-10);
}
