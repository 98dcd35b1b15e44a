#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "doctest.h"
#include "swrt/moduli.hpp"

using swrt::Component;
using swrt::ComponentClass;
using swrt::Rational;
using swrt::SeifertData;

namespace {

int count_class(const std::vector<Component>& comps, ComponentClass c) {
  int n = 0;
  for (const auto& x : comps)
    if (x.cls == c) ++n;
  return n;
}

}  // namespace

TEST_CASE("component enumeration counts") {
  const auto c53 = swrt::enumerate_components(SeifertData(2, 5, 3));
  CHECK(count_class(c53, ComponentClass::X1) == 1);
  CHECK(count_class(c53, ComponentClass::X2) == 4);
  CHECK(count_class(c53, ComponentClass::X3) == 1);
  CHECK(count_class(c53, ComponentClass::X4) == 1);

  const auto c32 = swrt::enumerate_components(SeifertData(2, 3, 2));
  CHECK(count_class(c32, ComponentClass::X1) == 0);
  CHECK(count_class(c32, ComponentClass::X2) == 2);
  CHECK(count_class(c32, ComponentClass::X3) == 2);
  CHECK(count_class(c32, ComponentClass::X4) == 0);

  const auto c11 = swrt::enumerate_components(SeifertData(2, 1, 1));
  CHECK(count_class(c11, ComponentClass::X1) == 0);
  CHECK(count_class(c11, ComponentClass::X2) == 0);
  CHECK(count_class(c11, ComponentClass::X3) == 1);
  CHECK(count_class(c11, ComponentClass::X4) == 1);

  // p_3 when a is even
  const auto c21 = swrt::enumerate_components(SeifertData(3, 2, 1));
  CHECK(count_class(c21, ComponentClass::X4) == 1);
  for (const auto& x : c21)
    if (x.cls == ComponentClass::X4) CHECK(x.point_tag == 3);
}

TEST_CASE("component count equals the brute-force r-scan") {
  for (long long a : {1, 2, 3, 5, -3, -4, 7})
    for (long long b : {1, 2, 3, 4, 5, 7}) {
      if (std::gcd(std::llabs(a), b) != 1) continue;
      const SeifertData s(2, a, b);
      const auto comps = swrt::enumerate_components(s);
      // scan r = j / (2|a|b) over [0, 1/2]
      const long long den = 2 * std::llabs(a) * b;
      std::set<Rational> hits;
      for (long long j = 0; 2 * j <= den; ++j) {
        const Rational r(j, den);
        const bool on_a1 = (r * Rational(b)).is_integer();
        const bool on_a2 = (Rational(2) * r * Rational(a)).is_integer();
        if (on_a1 || on_a2) hits.insert(r);
      }
      CHECK(hits.size() == comps.size());
    }
}

TEST_CASE("angle pattern per class") {
  for (auto [a, b] : {std::pair<long long, long long>{5, 3}, {3, 2}, {1, 1},
                      {2, 1}, {7, 4}, {-5, 3}}) {
    const SeifertData s(2, a, b);
    for (const auto& x : swrt::enumerate_components(s)) {
      CHECK(x.angle_p >= 0.0);
      CHECK(x.angle_p <= M_PI + 1e-12);
      CHECK(x.angle_q >= 0.0);
      CHECK(x.angle_q <= M_PI + 1e-12);
      const bool p_degenerate =
          x.angle_p_frac == Rational(0) || x.angle_p_frac == Rational(1, 2);
      const bool q_degenerate =
          x.angle_q_frac == Rational(0) || x.angle_q_frac == Rational(1, 2);
      switch (x.cls) {
        case ComponentClass::X1:
          CHECK(x.angle_q_frac == Rational(0));
          CHECK(!p_degenerate);
          break;
        case ComponentClass::X2:
          CHECK(p_degenerate);
          CHECK(!q_degenerate);
          break;
        default:
          CHECK(p_degenerate);
          CHECK(q_degenerate);
      }
    }
  }
}

TEST_CASE("angle map is injective on components") {
  for (auto [a, b] : {std::pair<long long, long long>{5, 3}, {4, 3}, {7, 2},
                      {-6, 5}, {9, 8}}) {
    const SeifertData s(2, a, b);
    std::set<std::tuple<std::string, std::string, int>> seen;
    for (const auto& x : swrt::enumerate_components(s)) {
      auto key = std::make_tuple(x.angle_p_frac.str(), x.angle_q_frac.str(),
                                 static_cast<int>(x.cls));
      CHECK(seen.insert(key).second);
    }
  }
}

TEST_CASE("chern-simons transport") {
  const SeifertData s(2, 5, 3);
  // p_1 has CS = 0 exactly
  CHECK(swrt::chern_simons_frac(s, Rational(0)) == Rational(0));

  // X1 at r = j/b: the reduction gives CS/(2pi) = -a b r^2 mod 1
  for (auto [a, b] : {std::pair<long long, long long>{5, 3}, {7, 4}, {-4, 3},
                      {11, 6}}) {
    const SeifertData sd(2, a, b);
    for (long long j = 1; 2 * j <= b - 1; ++j) {
      const Rational r(j, b);
      Rational expect = -Rational(a) * Rational(b) * r * r;
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), expect.num().get_mpz_t(), expect.den().get_mpz_t());
      expect -= Rational(fl);
      CHECK(swrt::chern_simons_frac(sd, r) == expect);
    }
  }

  // off-A points are rejected
  CHECK_THROWS_AS(swrt::chern_simons_frac(s, Rational(1, 7)), std::logic_error);
}

TEST_CASE("X1 and X2 amplitudes never vanish") {
  // gcd(a,b) = 1 and ac + bd = 1 keep the sine factors away from zero
  for (auto [a, b] : {std::pair<long long, long long>{5, 3}, {3, 2}, {7, 4},
                      {-5, 3}, {11, 6}, {4, 9}}) {
    for (int g : {2, 3}) {
      const auto pe = swrt::predicted_expansion(SeifertData(g, a, b));
      for (const auto& x : pe.components)
        if (x.cls == ComponentClass::X1 || x.cls == ComponentClass::X2)
          CHECK(std::abs(x.a0) > 1e-12);
    }
  }
}

TEST_CASE("predicted expansion data") {
  const auto pe = swrt::predicted_expansion(SeifertData(2, 5, 3));
  for (const auto& x : pe.components) {
    switch (x.cls) {
      case ComponentClass::X1: CHECK(x.exponent_n == doctest::Approx(1.5)); break;
      case ComponentClass::X2: CHECK(x.exponent_n == doctest::Approx(4.0)); break;
      default: CHECK(x.exponent_n == doctest::Approx(3.0));
    }
    if (x.cls == ComponentClass::X1 || x.cls == ComponentClass::X2)
      CHECK(std::abs(x.a0) > 1e-12);
    if (x.cls == ComponentClass::X3) {
      CHECK(x.has_b0);
      CHECK(x.exponent_m == doctest::Approx(2.5));
      // |b0| = b^{g-3/2} a^{-g} pi^{-g+1} sqrt(2) (g-1)!/(2(g-1))!
      const double expect = std::pow(3.0, 0.5) * std::pow(5.0, -2.0) / M_PI *
                            std::sqrt(2.0) * 1.0 / 2.0;
      CHECK(std::abs(x.b0) == doctest::Approx(expect).epsilon(1e-12));
    }
  }

  // X2 amplitude modulus at (2,5,3), r = 1/10: t = beta/pi = 0.6
  for (const auto& x : pe.components) {
    if (x.cls != ComponentClass::X2 || x.r != Rational(1, 10)) continue;
    const double t = 0.6;
    const double v = 4.0 * std::pow(M_PI, 4) / 3.0 * t * (t - 1.0) * (t - 2.0);
    const double expect = v / std::sqrt(5.0) * std::abs(std::sin(2.0 * 0.6 * M_PI));
    CHECK(std::abs(x.a0) == doctest::Approx(expect).epsilon(1e-10));
  }

  // X3/X4 amplitudes from the volume derivative, g = 2
  for (const auto& x : pe.components) {
    const double pi4 = std::pow(M_PI, 4);
    if (x.cls == ComponentClass::X3)
      CHECK(std::abs(x.a0) ==
            doctest::Approx((8 * pi4 / 3) / (4 * M_PI * std::pow(5.0, 1.5)))
                .epsilon(1e-12));
    if (x.cls == ComponentClass::X4)
      CHECK(std::abs(x.a0) ==
            doctest::Approx((4 * pi4 / 3) / (4 * M_PI * std::pow(5.0, 1.5)))
                .epsilon(1e-12));
  }

  CHECK_THROWS_AS(SeifertData(1, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(SeifertData(2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(SeifertData(2, 2, 4), std::invalid_argument);
}
