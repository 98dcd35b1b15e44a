#include "swrt/verlinde.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>

#include "swrt/xi.hpp"

namespace swrt {

namespace {
constexpr long double kPiL = 3.14159265358979323846264338327950288L;
using quad_float = boost::multiprecision::cpp_bin_float_quad;
}

double s_entry(int m, int p, int k) {
  if (k < 2) throw std::invalid_argument("s_entry: k must be >= 2");
  if (m < 1 || m > k - 1 || p < 1 || p > k - 1)
    throw std::invalid_argument("s_entry: indices must lie in 1..k-1");
  return static_cast<double>(
      std::sqrt(2.0L / k) * std::sin(kPiL * m * p / k));
}

bool fusion_admissible(int k, int a, int b, int c) {
  if (a < 1 || a > k - 1 || b < 1 || b > k - 1 || c < 1 || c > k - 1)
    return false;
  if ((a + b + c) % 2 == 0) return false;
  if (!(std::abs(a - b) < c && c < a + b)) return false;
  return a + b + c <= 2 * k - 1;
}

namespace {

// The Verlinde sum in 113-bit floats, for instances whose endpoint terms
// (~ k^{2g-3/2} in size) exhaust the 80-bit certification budget.
long double verlinde_sum_quad(int g, int k, int ell) {
  const quad_float pi = boost::math::constants::pi<quad_float>();
  const quad_float front = sqrt(quad_float(2) / k);
  quad_float sum = 0;
  for (int m = 1; m <= k - 1; ++m) {
    const quad_float s1 = front * sin(pi * m / k);
    const quad_float sl = front * sin(pi * ((static_cast<long>(m) * ell) % (2 * k)) / k);
    sum += pow(s1, 1 - 2 * g) * sl;
  }
  return static_cast<long double>(sum);
}

}  // namespace

long long verlinde_number(int g, int k, int ell) {
  if (g < 1) throw std::invalid_argument("verlinde_number: g must be >= 1");
  if (k < 2) throw std::invalid_argument("verlinde_number: k must be >= 2");
  if (ell < 1 || ell > k - 1)
    throw std::invalid_argument("verlinde_number: ell must lie in 1..k-1");
  // Kahan-compensated sum in extended precision; the endpoint terms grow
  // like k^{2g-3/2} so plain double loses integrality certification early.
  long double sum = 0.0L, comp = 0.0L;
  for (int m = 1; m <= k - 1; ++m) {
    const long double s1 = std::sqrt(2.0L / k) * std::sin(kPiL * m / k);
    const long double sl =
        std::sqrt(2.0L / k) *
        std::sin(kPiL * ((static_cast<long>(m) * ell) % (2 * k)) / k);
    const long double term = std::pow(s1, static_cast<long double>(1 - 2 * g)) * sl;
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  long double rounded = std::floor(sum + 0.5L);
  if (std::fabs(sum - rounded) >= 1e-6L) {
    sum = verlinde_sum_quad(g, k, ell);
    rounded = std::floor(sum + 0.5L);
  }
  if (std::fabs(sum - rounded) >= 1e-6L)
    throw IntegrityError("verlinde_number: residual above threshold at g=" +
                         std::to_string(g) + " k=" + std::to_string(k) +
                         " ell=" + std::to_string(ell));
  return static_cast<long long>(rounded);
}

namespace {

// Colorings of the chain graph: loops L_i = (a_i, a_i, s_i); junctions
// J_1 = (s_1, ell, t_1), J_i = (t_{i-1}, s_i, t_i) for 2 <= i <= g-1, with
// t_{g-1} serving as the stem of the last loop.
long long count_chain(int g, int k, int ell, int stage, int chain_in) {
  if (stage == g) {
    long long total = 0;
    for (int a = 1; a <= k - 1; ++a)
      if (fusion_admissible(k, a, a, chain_in)) ++total;
    return total;
  }
  long long total = 0;
  if (stage == 1) {
    for (int t = 1; t <= k - 1; ++t)
      if (fusion_admissible(k, chain_in, ell, t))
        total += count_chain(g, k, ell, 2, t);
  } else {
    for (int s = 1; s <= k - 1; ++s) {
      long long loop_count = 0;
      for (int a = 1; a <= k - 1; ++a)
        if (fusion_admissible(k, a, a, s)) ++loop_count;
      if (loop_count == 0) continue;
      for (int t = 1; t <= k - 1; ++t)
        if (fusion_admissible(k, chain_in, s, t))
          total += loop_count * count_chain(g, k, ell, stage + 1, t);
    }
  }
  return total;
}

}  // namespace

long long fusion_count_oracle(int g, int k, int ell) {
  if (g < 1) throw std::invalid_argument("fusion_count_oracle: g must be >= 1");
  if (k < 2) throw std::invalid_argument("fusion_count_oracle: k must be >= 2");
  if (ell < 1 || ell > k - 1)
    throw std::invalid_argument("fusion_count_oracle: ell must lie in 1..k-1");
  if (g == 1) {
    long long total = 0;
    for (int a = 1; a <= k - 1; ++a)
      if (fusion_admissible(k, a, a, ell)) ++total;
    return total;
  }
  long long total = 0;
  for (int s1 = 1; s1 <= k - 1; ++s1) {
    long long loop_count = 0;
    for (int a = 1; a <= k - 1; ++a)
      if (fusion_admissible(k, a, a, s1)) ++loop_count;
    if (loop_count == 0) continue;
    total += loop_count * count_chain(g, k, ell, 1, s1);
  }
  return total;
}

mpz_class counting_via_pm(int g, int k, int ell) {
  if (g < 1) throw std::invalid_argument("counting_via_pm: g must be >= 1");
  if (k < 2) throw std::invalid_argument("counting_via_pm: k must be >= 2");
  if (ell < 1 || ell > k - 1 || ell % 2 == 0)
    throw std::invalid_argument("counting_via_pm: ell must be odd in 1..k-1");
  const PmCertificate& cert = pm_inductive(2 * g - 1);
  // 2 C_g k^{g-1} P_{2g-1}(k, ell/k), C_g = (-1)^{g-1} 2^{-g}
  Rational cg = Rational(1, 2).pow(g);
  if (g % 2 == 0) cg = -cg;
  const Rational value = Rational(2) * cg * Rational(k).pow(g - 1) *
                         cert.poly.eval(Rational(k), Rational(ell, k));
  if (!value.is_integer())
    throw IntegrityError("counting_via_pm: non-integral result at g=" +
                         std::to_string(g) + " k=" + std::to_string(k) +
                         " ell=" + std::to_string(ell));
  return value.num();
}

const VerlindeFamily& build_family(int g) {
  if (g < 1) throw std::invalid_argument("build_family: g must be >= 1");
  static std::map<int, VerlindeFamily> memo;
  static std::mutex mutex;
  const PmCertificate& cert = pm_inductive(2 * g - 1);  // before taking the lock
  std::lock_guard<std::mutex> lock(mutex);
  auto it = memo.find(g);
  if (it != memo.end()) return it->second;

  VerlindeFamily fam;
  fam.g = g;
  fam.two_pi_exponent = 3 * g - 2;
  Rational cg = Rational(1, 2).pow(g);
  if (g % 2 == 0) cg = -cg;
  const Rational front = Rational(2) * cg;

  for (int m = 0; m <= g - 1; ++m) {
    const int q = 2 * g - 1 - 2 * m;
    std::vector<Rational> coeffs = cert.poly.coeff_of_k(q);
    for (auto& c : coeffs) c *= front;
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg != 2 * (g - m) - 1 || coeffs.empty() || coeffs.back().is_zero())
      throw IntegrityError("build_family: deg P_{g,m} != 2(g-m)-1");
    // even part must be the single monomial lambda_{g,m} x^{2(g-m-1)}
    Rational lam(0);
    for (int i = 0; i <= deg; i += 2) {
      if (i == 2 * (g - m - 1)) {
        lam = coeffs[static_cast<std::size_t>(i)];
      } else if (!coeffs[static_cast<std::size_t>(i)].is_zero()) {
        throw IntegrityError("build_family: even part not a single monomial");
      }
    }
    fam.polys.push_back(std::move(coeffs));
    fam.lambda.push_back(lam);
  }
  if (fam.lambda[0] != front / Rational(factorial(2 * (g - 1)), mpz_class(1)))
    throw IntegrityError("build_family: lambda_{g,0} != 2 C_g / (2(g-1))!");
  return memo.emplace(g, std::move(fam)).first->second;
}

double volume_vg(int g, double t) {
  if (!(t > 0.0 && t < 1.0))
    throw std::invalid_argument("volume_vg: t must lie in (0,1)");
  const VerlindeFamily& fam = build_family(g);
  const double scale = std::pow(2.0 * M_PI, fam.two_pi_exponent);
  const double value = scale * eval_poly(fam.polys[0], t);
  if (!(value > 0.0))
    throw IntegrityError("volume_vg: nonpositive volume at t=" + std::to_string(t));
  return value;
}

double volume_vg_derivative(int g, double t) {
  const VerlindeFamily& fam = build_family(g);
  const auto& c = fam.polys[0];
  double acc = 0;
  for (std::size_t i = c.size(); i-- > 1;)
    acc = acc * t + static_cast<double>(i) * c[i].to_double();
  return std::pow(2.0 * M_PI, fam.two_pi_exponent) * acc;
}

}  // namespace swrt
