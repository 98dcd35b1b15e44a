#include "swrt/moduli.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "swrt/tqft.hpp"
#include "swrt/verlinde.hpp"

namespace swrt {

namespace {

// Fold t to its distance from the nearest integer, in [0, 1/2]: the exact
// value of arccos(cos(2 pi t)) / (2 pi).
Rational fold_half(const Rational& t) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.num().get_mpz_t(), t.den().get_mpz_t());
  Rational frac = t - Rational(fl);
  return frac <= Rational(1, 2) ? frac : Rational(1) - frac;
}

Rational mod_one(const Rational& t) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.num().get_mpz_t(), t.den().get_mpz_t());
  return t - Rational(fl);
}

Component make_component(const SeifertData& s, ComponentClass cls, int tag,
                         const Rational& r) {
  Component x;
  x.cls = cls;
  x.point_tag = tag;
  x.r = r;
  x.angle_p_frac = fold_half(r * Rational(s.a));
  x.angle_q_frac = fold_half(r * Rational(s.b));
  x.angle_p = 2.0 * M_PI * x.angle_p_frac.to_double();
  x.angle_q = 2.0 * M_PI * x.angle_q_frac.to_double();
  x.cs_frac = chern_simons_frac(s, r);
  x.cs_phase = 2.0 * M_PI * x.cs_frac.to_double();
  return x;
}

}  // namespace

SeifertData::SeifertData(int genus, long long a_coef, long long b_coef)
    : g(genus), a(a_coef), b(b_coef) {
  if (g < 2) throw std::invalid_argument("SeifertData: g must be >= 2");
  if (a == 0) throw std::invalid_argument("SeifertData: a must be nonzero");
  if (b < 1) throw std::invalid_argument("SeifertData: b must be >= 1");
  if (std::gcd(std::llabs(a), b) != 1)
    throw std::invalid_argument("SeifertData: a and b must be coprime");
  const auto cd = choose_cd(a, b);
  c = cd.first;
  d = cd.second;
}

const char* class_name(ComponentClass c) {
  switch (c) {
    case ComponentClass::X1: return "X1";
    case ComponentClass::X2: return "X2";
    case ComponentClass::X3: return "X3";
    default: return "X4";
  }
}

std::vector<Component> enumerate_components(const SeifertData& s) {
  std::vector<Component> out;
  const long long babs = s.b;
  const long long aabs = std::llabs(s.a);
  // X1: r = j/b, j = 1..E((b-1)/2)
  for (long long j = 1; 2 * j <= babs - 1; ++j)
    out.push_back(make_component(s, ComponentClass::X1, 0, Rational(j, babs)));
  // X2: r = j/(2|a|), j = 1..|a|-1
  for (long long j = 1; j <= aabs - 1; ++j)
    out.push_back(make_component(s, ComponentClass::X2, 0, Rational(j, 2 * aabs)));
  // X3: p_1 always; p_2 iff b even
  out.push_back(make_component(s, ComponentClass::X3, 1, Rational(0)));
  if (babs % 2 == 0)
    out.push_back(make_component(s, ComponentClass::X3, 2, Rational(1, 2)));
  // X4 at r = 1/2: p_3 iff a even, p_4 iff a and b odd, empty iff b even
  if (aabs % 2 == 0)
    out.push_back(make_component(s, ComponentClass::X4, 3, Rational(1, 2)));
  else if (babs % 2 == 1)
    out.push_back(make_component(s, ComponentClass::X4, 4, Rational(1, 2)));
  return out;
}

Rational chern_simons_frac(const SeifertData& s, const Rational& r) {
  // Lift z = r nu = (ra) mu + (rb) lambda; move to the base point of the A
  // branch through z by the lattice vector gamma, picking up the Heisenberg
  // phase e^{i omega(gamma, z0)/2}; omega(mu, lambda) = 4 pi.
  const Rational zp = r * Rational(s.a);
  const Rational zq = r * Rational(s.b);
  Rational base_p, base_q, phase_frac;  // phase of Theta_A at the base point
  if (zq.is_integer()) {
    base_p = zp;
    base_q = Rational(0);
    phase_frac = Rational(0);
  } else if (zp.is_integer()) {
    base_p = Rational(0);
    base_q = zq;
    phase_frac = Rational(0);
  } else if ((zp - Rational(1, 2)).is_integer()) {
    base_p = Rational(1, 2);
    base_q = zq;
    phase_frac = zq / Rational(2);  // Theta_A(mu/2 + q lambda) = e^{i pi q}
  } else {
    throw std::logic_error("chern_simons_frac: point not on A");
  }
  const Rational gamma_p = zp - base_p;
  const Rational gamma_q = zq - base_q;
  if (!gamma_p.is_integer() || !gamma_q.is_integer())
    throw std::logic_error("chern_simons_frac: reduction vector not in lattice");
  // omega(gamma, z0)/2 = 2 pi (gamma_p base_q - gamma_q base_p)
  const Rational cocycle = gamma_p * base_q - gamma_q * base_p;
  return mod_one(cocycle + phase_frac);
}

PredictedExpansion predicted_expansion(const SeifertData& s) {
  PredictedExpansion out;
  out.s = s;
  out.components = enumerate_components(s);
  const int g = s.g;
  const double aabs = static_cast<double>(std::llabs(s.a));
  const double b = static_cast<double>(s.b);
  for (Component& x : out.components) {
    switch (x.cls) {
      case ComponentClass::X1: {
        x.exponent_n = g - 0.5;
        const double sa = std::sin(x.angle_p);
        x.a0 = 2.0 * std::pow(M_PI, g - 0.5) / std::sqrt(b) *
               std::pow(sa, -2 * g + 1) *
               std::sin(static_cast<double>(s.c) * x.angle_p);
        break;
      }
      case ComponentClass::X2: {
        x.exponent_n = 3 * g - 2;
        x.a0 = volume_vg(g, x.angle_q / M_PI) / std::sqrt(aabs) *
               std::sin(static_cast<double>(s.d) * x.angle_q);
        break;
      }
      case ComponentClass::X3: {
        x.exponent_n = 3 * g - 3;
        x.a0 = volume_vg_derivative(g, 0.0) / (4.0 * M_PI * std::pow(aabs, 1.5));
        x.has_b0 = true;
        x.exponent_m = 2 * g - 1.5;
        // e^{i pi/4} i^g b^{g-3/2} a^{-g} pi^{-g+1} sqrt(2) (g-1)!/(2(g-1))!
        const double mag = std::pow(b, g - 1.5) * std::pow(aabs, -g) *
                           std::pow(M_PI, -g + 1) * std::sqrt(2.0) *
                           factorial(g - 1).get_d() /
                           factorial(2 * (g - 1)).get_d();
        x.b0 = std::polar(mag, M_PI / 4 + g * M_PI / 2);
        break;
      }
      case ComponentClass::X4: {
        x.exponent_n = 3 * g - 3;
        x.a0 = volume_vg_derivative(g, 1.0) / (4.0 * M_PI * std::pow(aabs, 1.5));
        break;
      }
    }
  }
  return out;
}

}  // namespace swrt
