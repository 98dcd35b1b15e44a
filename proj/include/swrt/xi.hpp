#pragma once

#include <complex>
#include <vector>

#include "swrt/poly.hpp"

namespace swrt {

/// A complex-valued function on the 2k-point grid R_k = (1/k)Z / 2Z.
/// Entry j holds the value at x = j/k, j = 0..2k-1.
struct GridFunction {
  int k = 0;
  std::vector<std::complex<double>> values;

  GridFunction() = default;
  explicit GridFunction(int level)
      : k(level), values(static_cast<std::size_t>(2 * level), {0.0, 0.0}) {}
  std::complex<double>& at(int j) { return values[index(j)]; }
  const std::complex<double>& at(int j) const { return values[index(j)]; }
  std::size_t index(int j) const {
    int m = j % (2 * k);
    if (m < 0) m += 2 * k;
    return static_cast<std::size_t>(m);
  }
};

/// Direct evaluation of the discrete Fourier transform of sin(pi y)^{-m}:
/// x -> i^{-m} sum_{y in R_k, y != 0,1} sin(pi y)^{-m} e^{ik pi y x}.
GridFunction xi_direct(int m, int k);

/// (Tf)(x) = (-1)^{kx} f(x)
GridFunction apply_T(const GridFunction& f);
/// (Lf)(x) = f(x + 1/k)
GridFunction apply_L(const GridFunction& f);
GridFunction apply_L_inv(const GridFunction& f);
/// Delta = (L - L^{-1}) / 2
GridFunction apply_Delta(const GridFunction& f);

/// Character u_y with y = j/k: u_y(x) = e^{ik pi y x}.
GridFunction basis_u(int k, int j);

/// F(f)(y) = <f, u_y> with <f,g> = (1/2k) sum f(x) conj(g(x)); entry j of the
/// result is F(f) at y = j/k.
GridFunction dft(const GridFunction& f);

enum class PmMethod { inductive, recurrence };

/// The polynomial P_m with Xi_{m,k}(x) = (1 + (-1)^{kx+m}) P_m(k, x), together
/// with its singular part (P_m^- for even m, P_m^+ for odd m).
struct PmCertificate {
  int m = 0;
  BivariatePoly poly;
  PmMethod method = PmMethod::inductive;
  BivariatePoly singular_part;
};

/// P_m built by iterating the grid inversion of Delta from Xi_0, closing the
/// cumulative sums with power-sum polynomials. Memoized; exact.
const PmCertificate& pm_inductive(int m);

/// P_m built degree-by-degree from the odd-Taylor difference relation, with
/// the k-only part fixed by the Bernoulli integral identity (even m) or the
/// endpoint identity P_m(k, 1/k) = P_{m-1}(k, 0) (odd m). Memoized; exact.
const PmCertificate& pm_recurrence(int m);

/// Same construction from an explicitly supplied predecessor.
PmCertificate pm_recurrence_from(const PmCertificate& prev, int m);

/// Structural checks: exponent pattern of Prop. par_k and the leading
/// singular coefficient 1/(m-1)!. Throws std::logic_error on violation.
void validate_certificate(const PmCertificate& cert);

struct DevPartReport {
  int m = 0;
  int k = 0;
  double max_deviation = 0;  // max |direct - (1 + (-1)^{j+m}) P_m(k, j/k)|
  double scale = 1;          // k^{m+1}
  double tolerance = 0;
  bool pass = false;
};

/// Grid-by-grid comparison of xi_direct against the P_m identity.
/// tol_scale defaults to 1e-9; the absolute tolerance is tol_scale * k^{m+1}.
DevPartReport verify_dev_part(int m, int k, double tol_scale = 1e-9);

}  // namespace swrt
