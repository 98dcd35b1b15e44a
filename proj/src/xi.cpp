#include "swrt/xi.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "swrt/precision.hpp"

namespace swrt {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;

std::complex<long double> i_pow(int e) {
  // i^e for any integer e
  int r = e % 4;
  if (r < 0) r += 4;
  switch (r) {
    case 0: return {1.0L, 0.0L};
    case 1: return {0.0L, 1.0L};
    case 2: return {-1.0L, 0.0L};
    default: return {0.0L, -1.0L};
  }
}

}  // namespace

GridFunction xi_direct(int m, int k) {
  if (k < 2) throw std::invalid_argument("xi_direct: k must be >= 2");
  if (m < 0) throw std::invalid_argument("xi_direct: m must be >= 0");
  const int n = 2 * k;
  // sin(pi j'/k)^{-m} for j' = 0..2k-1, with the convention 0^{-m} = 0
  std::vector<long double> w(static_cast<std::size_t>(n), 0.0L);
  for (int j = 1; j < n; ++j) {
    if (j == k) continue;
    const long double s = std::sin(kPiL * j / k);
    w[static_cast<std::size_t>(j)] = std::pow(s, static_cast<long double>(-m));
  }
  const std::complex<long double> front = i_pow(-m);
  GridFunction out(k);
  for (int j = 0; j < n; ++j) {
    std::complex<long double> acc{0.0L, 0.0L};
    for (int jp = 1; jp < n; ++jp) {
      if (jp == k || w[static_cast<std::size_t>(jp)] == 0.0L) continue;
      // e^{ik pi (j'/k)(j/k)} = e^{i pi j j' / k}
      const long double phase = kPiL * ((static_cast<long long>(j) * jp) % n) / k;
      acc += w[static_cast<std::size_t>(jp)] *
             std::complex<long double>(std::cos(phase), std::sin(phase));
    }
    acc *= front;
    out.values[static_cast<std::size_t>(j)] = {static_cast<double>(acc.real()),
                                               static_cast<double>(acc.imag())};
  }
  return out;
}

GridFunction apply_T(const GridFunction& f) {
  GridFunction out(f.k);
  for (int j = 0; j < 2 * f.k; ++j)
    out.values[static_cast<std::size_t>(j)] =
        (j % 2 == 0 ? 1.0 : -1.0) * f.values[static_cast<std::size_t>(j)];
  return out;
}

GridFunction apply_L(const GridFunction& f) {
  GridFunction out(f.k);
  for (int j = 0; j < 2 * f.k; ++j) out.values[static_cast<std::size_t>(j)] = f.at(j + 1);
  return out;
}

GridFunction apply_L_inv(const GridFunction& f) {
  GridFunction out(f.k);
  for (int j = 0; j < 2 * f.k; ++j) out.values[static_cast<std::size_t>(j)] = f.at(j - 1);
  return out;
}

GridFunction apply_Delta(const GridFunction& f) {
  GridFunction out(f.k);
  for (int j = 0; j < 2 * f.k; ++j)
    out.values[static_cast<std::size_t>(j)] = 0.5 * (f.at(j + 1) - f.at(j - 1));
  return out;
}

GridFunction basis_u(int k, int j) {
  GridFunction out(k);
  const int n = 2 * k;
  for (int x = 0; x < n; ++x) {
    const long double phase = kPiL * ((static_cast<long long>(x) * j) % n) / k;
    out.values[static_cast<std::size_t>(x)] = {static_cast<double>(std::cos(phase)),
                                               static_cast<double>(std::sin(phase))};
  }
  return out;
}

GridFunction dft(const GridFunction& f) {
  const int n = 2 * f.k;
  GridFunction out(f.k);
  for (int j = 0; j < n; ++j) {
    std::complex<long double> acc{0.0L, 0.0L};
    for (int x = 0; x < n; ++x) {
      const long double phase = -kPiL * ((static_cast<long long>(x) * j) % n) / f.k;
      const auto& v = f.values[static_cast<std::size_t>(x)];
      acc += std::complex<long double>(v.real(), v.imag()) *
             std::complex<long double>(std::cos(phase), std::sin(phase));
    }
    acc /= static_cast<long double>(n);
    out.values[static_cast<std::size_t>(j)] = {static_cast<double>(acc.real()),
                                               static_cast<double>(acc.imag())};
  }
  return out;
}

// --- symbolic pipeline -----------------------------------------------------
//
// Polynomials in (k, l) reuse BivariatePoly with the second variable read as
// the integer grid index l in S_k = {1..k}.

namespace {

// l^p -> Q_p(l), coefficientwise in k: the cumulative-sum operator.
BivariatePoly apply_power_sums(const BivariatePoly& f) {
  BivariatePoly out;
  for (const auto& [key, c] : f.terms()) {
    const auto q = faulhaber(key.second);
    for (std::size_t i = 0; i < q.size(); ++i)
      out.add_term(key.first, static_cast<int>(i), c * q[i]);
  }
  return out;
}

// The averaged cumulative-sum operator:
// (L f)(l) = 2 (Lt f)(l) - (2/k) sum_{l=1}^{k} (Lt f)(l)
// where Lt is the plain cumulative sum. Input and output are polynomials in
// (k, l); the correction term is divisible by k because the inner power-sum
// polynomials vanish at 0.
BivariatePoly op_L_from_cumsum(const BivariatePoly& cumsum) {
  // total = sum over S_k of cumsum: substitute l := k in its power sums
  BivariatePoly total_poly = apply_power_sums(cumsum);
  BivariatePoly total;  // in k only
  for (const auto& [key, c] : total_poly.terms())
    total.add_term(key.first + key.second, 0, c);
  BivariatePoly out = cumsum.scaled(Rational(2));
  for (const auto& [key, c] : total.terms()) {
    if (key.first < 1)
      throw std::logic_error("op_L: correction term not divisible by k");
    out.add_term(key.first - 1, 0, c * Rational(-2));
  }
  return out;
}

BivariatePoly op_L(const BivariatePoly& f) {
  // integrity: the input must have vanishing average over S_k
  BivariatePoly avg_poly = apply_power_sums(f);
  BivariatePoly avg;
  for (const auto& [key, c] : avg_poly.terms())
    avg.add_term(key.first + key.second, 0, c);
  if (!avg.is_zero())
    throw std::logic_error("op_L: input has nonvanishing average over S_k");
  return op_L_from_cumsum(apply_power_sums(f));
}

// x := (c1*l + c0)/k. Requires p <= q for every monomial k^q x^p.
BivariatePoly subst_x_to_grid(const BivariatePoly& poly, long c1, long c0) {
  BivariatePoly out;
  for (const auto& [key, c] : poly.terms()) {
    const int q = key.first, p = key.second;
    if (p > q) throw std::logic_error("subst_x_to_grid: x-degree exceeds k-degree");
    for (int j = 0; j <= p; ++j) {
      const Rational coef = c * Rational(binomial(p, j), mpz_class(1)) *
                            Rational(c1).pow(j) * Rational(c0).pow(p - j);
      out.add_term(q - p, j, coef);
    }
  }
  return out;
}

// l := (k*x + e)/2 with e in {0, 1}
BivariatePoly subst_grid_to_x(const BivariatePoly& poly, long e) {
  BivariatePoly out;
  for (const auto& [key, c] : poly.terms()) {
    const int a = key.first, b = key.second;
    const Rational half_pow = Rational(1, 2).pow(b);
    for (int j = 0; j <= b; ++j) {
      const Rational coef = c * half_pow * Rational(binomial(b, j), mpz_class(1)) *
                            Rational(e).pow(b - j);
      out.add_term(a + j, j, coef);
    }
  }
  return out;
}

BivariatePoly singular_part_of(int m, const BivariatePoly& poly) {
  auto [even, odd] = poly.parity_split();
  return m % 2 == 0 ? odd : even;
}

PmCertificate make_certificate(int m, BivariatePoly poly, PmMethod method) {
  PmCertificate cert;
  cert.m = m;
  cert.singular_part = singular_part_of(m, poly);
  cert.poly = std::move(poly);
  cert.method = method;
  validate_certificate(cert);
  return cert;
}

// One inversion step: from P_m to P_{m+1} through the grid identifications.
BivariatePoly pm_step(int m, const BivariatePoly& pm) {
  if (m % 2 == 0) {
    // even m: values live at x = 2(l-1)/k, output at x = (2l-1)/k
    BivariatePoly f = subst_x_to_grid(pm, 2, -2).scaled(Rational(2));
    return subst_grid_to_x(op_L(f), 1).scaled(Rational(1, 2));
  }
  // odd m: values at x = (2l-1)/k, output at x = 2l/k
  BivariatePoly f = subst_x_to_grid(pm, 2, -1).scaled(Rational(2));
  return subst_grid_to_x(op_L(f), 0).scaled(Rational(1, 2));
}

// P_1 from the Xi_0 profile (2k delta - 2 on the even grid): the cumulative
// sum of that profile is 2k - 2l, which seeds the averaged inversion.
BivariatePoly pm_base() {
  BivariatePoly cumsum;
  cumsum.add_term(1, 0, Rational(2));
  cumsum.add_term(0, 1, Rational(-2));
  BivariatePoly lf = op_L_from_cumsum(cumsum);
  return subst_grid_to_x(lf, 1).scaled(Rational(1, 2));
}

}  // namespace

const PmCertificate& pm_inductive(int m) {
  if (m < 1) throw std::invalid_argument("pm_inductive: m must be >= 1");
  static std::map<int, PmCertificate> memo;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  int have = memo.empty() ? 0 : memo.rbegin()->first;
  if (have == 0) {
    memo.emplace(1, make_certificate(1, pm_base(), PmMethod::inductive));
    have = 1;
  }
  for (int i = have; i < m; ++i) {
    const BivariatePoly next = pm_step(i, memo.at(i).poly);
    memo.emplace(i + 1, make_certificate(i + 1, next, PmMethod::inductive));
  }
  return memo.at(m);
}

PmCertificate pm_recurrence_from(const PmCertificate& prev, int m) {
  if (m < 2) throw std::invalid_argument("pm_recurrence: m must be >= 2");
  if (prev.m != m - 1)
    throw std::logic_error("pm_recurrence: predecessor certificate missing");

  // Triangular solve of
  //   sum_{j>=1} k^{-2j+1}/(2j-1)! D^{2j-1} P_m = P_{m-1}
  // for the x-derivatives of the k-coefficients Q_q, q = m, m-2, ...
  std::map<int, std::vector<Rational>> q_coeffs;  // q -> Q_q as poly in x
  const int lowest_qp = (m % 2 == 0) ? -1 : 0;
  for (int qp = m - 1; qp >= lowest_qp; qp -= 2) {
    BivariatePoly rhs;
    if (qp >= 0) {
      const auto b = prev.poly.coeff_of_k(qp);
      for (std::size_t i = 0; i < b.size(); ++i)
        rhs.add_term(0, static_cast<int>(i), b[i]);
    }
    for (int j = 2; qp + 2 * j - 1 <= m; ++j) {
      auto itq = q_coeffs.find(qp + 2 * j - 1);
      if (itq == q_coeffs.end()) continue;
      BivariatePoly dq;
      for (std::size_t i = 0; i < itq->second.size(); ++i)
        dq.add_term(0, static_cast<int>(i), itq->second[i]);
      for (int d = 0; d < 2 * j - 1; ++d) dq = dq.dx();
      rhs -= dq.scaled(Rational(mpz_class(1), factorial(2 * j - 1)));
    }
    const BivariatePoly anti = rhs.integrate_x();
    q_coeffs[qp + 1] = anti.coeff_of_k(0);
  }

  BivariatePoly particular;
  for (const auto& [q, coeffs] : q_coeffs)
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      particular.add_term(q, static_cast<int>(i), coeffs[i]);

  // Fix the k-only part.
  BivariatePoly diff;  // in k alone
  if (m % 2 == 1) {
    // P_m(k, 1/k) = P_{m-1}(k, 0)
    BivariatePoly lhs;
    for (const auto& [key, c] : particular.terms()) {
      if (key.second > key.first)
        throw std::logic_error("pm_recurrence: negative k-power at x = 1/k");
      lhs.add_term(key.first - key.second, 0, c);
    }
    diff = prev.poly.subst_x(Rational(0)) - lhs;
  } else {
    // k int_0^2 P_m dx = 4 sum_{j>=1} B_{2j}/(2j)! (2/k)^{2j-1} D^{2j-1}P_m^-(k,0)
    const BivariatePoly pm_minus = particular.parity_split().second;
    BivariatePoly rhs;
    for (int j = 1; 2 * j - 1 <= pm_minus.max_x_degree(); ++j) {
      // D^{2j-1} P^- at x = 0 picks (2j-1)! times the x^{2j-1} k-profile
      for (const auto& [key, c] : pm_minus.terms()) {
        if (key.second != 2 * j - 1) continue;
        Rational coef = c * Rational(factorial(2 * j - 1), mpz_class(1));
        coef *= bernoulli(2 * j) / Rational(factorial(2 * j), mpz_class(1));
        coef *= Rational(2).pow(2 * j - 1) * Rational(4);
        const int kpow = key.first - (2 * j - 1);
        if (kpow < 0)
          throw std::logic_error("pm_recurrence: negative k-power in Bernoulli sum");
        rhs.add_term(kpow, 0, coef);
      }
    }
    const BivariatePoly integral = particular.integrate_x(Rational(0), Rational(2));
    BivariatePoly lhs;  // k * int_0^2 particular dx
    for (const auto& [key, c] : integral.terms()) lhs.add_term(key.first + 1, 0, c);
    diff = rhs - lhs;  // residue equals sum_q 2 c_q k^{q+1}
  }

  BivariatePoly result = particular;
  const int shift = (m % 2 == 1) ? 0 : 1;  // constants sit at k^{q+shift} in diff
  for (const auto& [key, c] : diff.terms()) {
    const int q = key.first - shift;
    const bool valid = q >= 0 && q <= m && (q % 2 == m % 2);
    if (!valid)
      throw std::logic_error("pm_recurrence: inconsistent initialization system");
    result.add_term(q, 0, (m % 2 == 1) ? c : c / Rational(2));
  }
  return make_certificate(m, std::move(result), PmMethod::recurrence);
}

const PmCertificate& pm_recurrence(int m) {
  if (m < 2) throw std::invalid_argument("pm_recurrence: m must be >= 2");
  PmCertificate root = pm_inductive(1);  // shared root of both constructions
  static std::map<int, PmCertificate> memo;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  PmCertificate prev = std::move(root);
  int have = 1;
  if (!memo.empty()) {
    have = memo.rbegin()->first;
    prev = memo.rbegin()->second;
  }
  for (int i = have + 1; i <= m; ++i) {
    memo.emplace(i, pm_recurrence_from(prev, i));
    prev = memo.at(i);
  }
  return memo.at(m);
}

void validate_certificate(const PmCertificate& cert) {
  const int m = cert.m;
  for (const auto& [key, c] : cert.poly.terms()) {
    const int q = key.first, p = key.second;
    if (!(0 <= p && p <= q && q <= m))
      throw std::logic_error("PmCertificate: exponent outside 0 <= p <= q <= m");
    if ((q - m) % 2 != 0)
      throw std::logic_error("PmCertificate: k-degree parity violates par_k");
  }
  // singular part must be spanned by k^{m-2l} x^{m-2l-1}
  for (const auto& [key, c] : cert.singular_part.terms()) {
    if (key.second != key.first - 1)
      throw std::logic_error("PmCertificate: singular part not of shape k^q x^{q-1}");
  }
  if (m >= 1) {
    const Rational lead = cert.singular_part.coeff(m, m - 1);
    if (lead != Rational(mpz_class(1), factorial(m - 1)))
      throw std::logic_error("PmCertificate: singular leading coefficient != 1/(m-1)!");
  }
}

DevPartReport verify_dev_part(int m, int k, double tol_scale) {
  if (m < 1) throw std::invalid_argument("verify_dev_part: m must be >= 1");
  if (k < 2) throw std::invalid_argument("verify_dev_part: k must be >= 2");
  const GridFunction direct = xi_direct(m, k);
  const PmCertificate& cert = pm_inductive(m);
  DevPartReport rep;
  rep.m = m;
  rep.k = k;
  rep.scale = std::pow(static_cast<double>(k), m + 1);
  rep.tolerance = tol_scale * rep.scale;
  for (int j = 0; j <= 2 * k; ++j) {
    const int parity = ((j + m) % 2 == 0) ? 2 : 0;
    double expect = 0;
    if (parity != 0) {
      const Rational val = cert.poly.eval(Rational(k), Rational(j, k));
      expect = parity == 2 ? 2.0 * val.to_double() : 0.0;
    }
    const std::complex<double> got = direct.at(j);
    const double dev = std::abs(got - std::complex<double>(expect, 0.0));
    if (dev > rep.max_deviation) rep.max_deviation = dev;
  }
  rep.pass = rep.max_deviation < rep.tolerance;
  return rep;
}

}  // namespace swrt
