#pragma once

#include <stdexcept>
#include <vector>

#include "swrt/rational.hpp"

namespace swrt {

/// Numerical-integrity failure: a quantity that must be an exact integer (or
/// satisfy a structural identity) missed its certification threshold.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// S_{m,p} = (2/k)^{1/2} sin(pi m p / k)
double s_entry(int m, int p, int k);

/// Admissibility of the color triple (a, b, c) at level k:
/// a+b+c odd, |a-b| < c < a+b, a+b+c <= 2k-1.
bool fusion_admissible(int k, int a, int b, int c);

/// N_l^{g,k} by the Verlinde sum, evaluated in extended-precision floating
/// point and rounded; throws IntegrityError when the pre-rounding residual
/// exceeds 1e-6.
long long verlinde_number(int g, int k, int ell);

/// N_l^{g,k} by counting admissible colorings of a fixed trivalent graph:
/// a chain of g one-holed tori with the marked leg on the first junction.
/// Pure enumeration; feasible only for small g and k.
long long fusion_count_oracle(int g, int k, int ell);

/// N_l^{g,k} as 2 C_g k^{g-1} P_{2g-1}(k, l/k) with C_g = (-1)^{g-1} 2^{-g},
/// evaluated exactly in rationals; throws IntegrityError if the result is not
/// an integer. Requires odd l with 1 <= l <= k-1.
mpz_class counting_via_pm(int g, int k, int ell);

/// The polynomial family P_{g,m}, m = 0..g-1, with
///   N_l^{g,k} = (k/2pi)^{3g-2} sum_m k^{-2m} P_{g,m}(l/k)   (odd l).
/// Every member carries the common prefactor (2pi)^{two_pi_exponent}; the
/// stored coefficients are the exact rational parts.
struct VerlindeFamily {
  int g = 0;
  int two_pi_exponent = 0;                   // = 3g - 2
  std::vector<std::vector<Rational>> polys;  // polys[m][i] = coeff of x^i
  std::vector<Rational> lambda;              // rational part of lambda_{g,m}
};

/// Extracts the family from P_{2g-1} and checks its structure: degrees
/// 2(g-m)-1, even part a single monomial, and the closed form for lambda_{g,0}.
const VerlindeFamily& build_family(int g);

/// Symplectic volume v_g(t) = P_{g,0}(t) evaluated in floating point,
/// including the (2pi)-power prefactor. Requires 0 < t < 1 and a positive
/// result.
double volume_vg(int g, double t);

/// d/dt P_{g,0}(t), defined for all real t (used at the endpoints 0 and 1).
double volume_vg_derivative(int g, double t);

}  // namespace swrt
