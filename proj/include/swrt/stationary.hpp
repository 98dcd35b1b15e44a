#pragma once

#include <complex>
#include <vector>

namespace swrt {

/// Truncated Taylor-series (jet) arithmetic in double precision; coefficient i
/// of a Series holds the i-th Taylor coefficient (derivative / i!).
namespace jets {
using Series = std::vector<double>;
Series seed(double x0, int order);      // the identity function at x0
Series constant(double c, int order);
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series div(const Series& a, const Series& b);
Series exp(const Series& a);
Series pow_int(const Series& a, int p);
}  // namespace jets

struct Jet {
  bool odd = false;      // f(x) = lambda x^{2n} + ... or lambda x^{2n+1} + ...
  int n = 0;
  double lambda = 0;
};

/// A bump-modulated monomial lambda (x - center)^p b((x - center)/s) with
/// b(u) = exp(1 - 1/(1 - u^2)); smooth, supported in [center - s, center + s].
/// The analytic jet at the origin is available when center == 0.
class TestAmplitude {
 public:
  TestAmplitude(int power, double lambda, double support, double center = 0.0);

  double operator()(double x) const;
  /// Taylor coefficients at x0 up to the given order.
  jets::Series jet_at(double x0, int order) const;
  double support_min() const { return center_ - support_; }
  double support_max() const { return center_ + support_; }
  bool has_origin_jet() const { return center_ == 0.0; }
  Jet jet() const;

  /// Finite-difference probe of the declared jet at 0 (relative tolerance).
  bool jet_consistent(double tol = 1e-6) const;

 private:
  int power_ = 0;
  double lambda_ = 1;
  double support_ = 1;
  double center_ = 0;
};

enum class SumSign { plus, minus };

/// S_k(f) = f(0)/2 + sum_{l>=1} s^l e^{i(alpha l^2 / 2k - beta l)} f(l/k)
/// with s = +1 or -1.
struct OscSumSpec {
  double alpha = 1;
  double beta = 0;
  SumSign sign = SumSign::plus;
};

std::complex<double> eval_sum(const OscSumSpec& spec, const TestAmplitude& f,
                              double k);

enum class LeadingKind {
  ladder,         // exponent and c0 both predicted
  exponent_only,  // exponent predicted, c0 not determined
  rapid_decay     // O(k^{-infinity})
};

struct LeadingPrediction {
  LeadingKind kind = LeadingKind::ladder;
  double exponent = 0;
  std::complex<double> c0;
};

/// The leading term per case: plus/even gives (1/2 - n,
/// (pi/2|alpha|)^{1/2} e^{i pi sgn(alpha)/4} (i/2alpha)^n (2n)!/n! lambda);
/// plus/odd gives (-n, (2i/alpha)^{n+1} n!/2 lambda); minus/even decays
/// rapidly; minus/odd and the off-stationary beta case fix the exponent only.
LeadingPrediction predict_leading(const OscSumSpec& spec, const Jet& jet);

struct ExpansionReport {
  LeadingPrediction prediction;
  std::vector<double> ks;
  std::vector<std::complex<double>> values;
  double measured_exponent = 0;
  std::complex<double> measured_c0;
  double exponent_deviation = 0;  // measured - predicted
  double c0_rel_deviation = 0;    // |measured - predicted| / |predicted|
  double tail_max_abs = 0;        // for the rapid-decay case
  bool pass = false;
  double exponent_tol = 0.02;
  double c0_tol = 0.01;
};

/// Evaluates the sum over the ladder, fits the decay exponent on the tail and
/// Richardson-extrapolates S_k / k^{exponent} (order 3, geometric ladders).
ExpansionReport verify_expansion(const OscSumSpec& spec, const TestAmplitude& f,
                                 const std::vector<double>& k_list);

/// Defect of the summation-by-parts identity
///   St(sigma (delta - 1)) + St(delta (e^D - 1) sigma) + sigma(0) = 0
/// with the symbol (e^D - 1) truncated at `orders` terms; O(tau^{-orders})
/// when supp sigma avoids the stationary set beta/alpha + 2 pi Z.
std::complex<double> eq1_defect(const TestAmplitude& sigma, double alpha,
                                double beta, double tau, int orders = 8);

/// Defect of the sine summation-by-parts relation
///   S_t(sin(alpha .) sigma) = (i/2) sigma(0)
///     + i e^{-i alpha/2t} (S_t(sinh(D) sigma) + (cosh(D) sigma)(0) / 2).
std::complex<double> sum_part_defect(const TestAmplitude& sigma, double alpha,
                                     double tau, int orders = 8);

}  // namespace swrt
