#include "swrt/stationary.hpp"

#include <cmath>
#include <stdexcept>

namespace swrt {

namespace jets {

Series seed(double x0, int order) {
  Series s(static_cast<std::size_t>(order) + 1, 0.0);
  s[0] = x0;
  if (order >= 1) s[1] = 1.0;
  return s;
}

Series constant(double c, int order) {
  Series s(static_cast<std::size_t>(order) + 1, 0.0);
  s[0] = c;
  return s;
}

Series add(const Series& a, const Series& b) {
  Series r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Series sub(const Series& a, const Series& b) {
  Series r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Series mul(const Series& a, const Series& b) {
  Series r(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Series div(const Series& a, const Series& b) {
  if (b[0] == 0.0) throw std::invalid_argument("jets::div: zero constant term");
  Series r(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double acc = a[i];
    for (std::size_t j = 1; j <= i; ++j) acc -= b[j] * r[i - j];
    r[i] = acc / b[0];
  }
  return r;
}

Series exp(const Series& a) {
  Series r(a.size(), 0.0);
  r[0] = std::exp(a[0]);
  for (std::size_t n = 1; n < a.size(); ++n) {
    double acc = 0;
    for (std::size_t j = 1; j <= n; ++j)
      acc += static_cast<double>(j) * a[j] * r[n - j];
    r[n] = acc / static_cast<double>(n);
  }
  return r;
}

Series pow_int(const Series& a, int p) {
  Series r = constant(1.0, static_cast<int>(a.size()) - 1);
  for (int i = 0; i < p; ++i) r = mul(r, a);
  return r;
}

}  // namespace jets

TestAmplitude::TestAmplitude(int power, double lambda, double support,
                             double center)
    : power_(power), lambda_(lambda), support_(support), center_(center) {
  if (power < 0) throw std::invalid_argument("TestAmplitude: power must be >= 0");
  if (support <= 0) throw std::invalid_argument("TestAmplitude: support must be > 0");
}

double TestAmplitude::operator()(double x) const {
  const double u = (x - center_) / support_;
  if (std::abs(u) >= 1.0) return 0.0;
  const double w = 1.0 - u * u;
  return lambda_ * std::pow(x - center_, power_) * std::exp(1.0 - 1.0 / w);
}

jets::Series TestAmplitude::jet_at(double x0, int order) const {
  const double u0 = (x0 - center_) / support_;
  if (std::abs(u0) >= 1.0 - 1e-12) return jets::constant(0.0, order);
  const jets::Series x = jets::seed(x0 - center_, order);
  const jets::Series u = jets::mul(x, jets::constant(1.0 / support_, order));
  const jets::Series w = jets::sub(jets::constant(1.0, order), jets::mul(u, u));
  const jets::Series arg =
      jets::sub(jets::constant(1.0, order),
                jets::div(jets::constant(1.0, order), w));
  jets::Series bump = jets::exp(arg);
  jets::Series mono = jets::pow_int(x, power_);
  jets::Series out = jets::mul(mono, bump);
  for (auto& c : out) c *= lambda_;
  return out;
}

Jet TestAmplitude::jet() const {
  if (!has_origin_jet())
    throw std::logic_error("TestAmplitude: off-center amplitude has no origin jet");
  Jet j;
  j.odd = power_ % 2 == 1;
  j.n = power_ / 2;
  j.lambda = lambda_ * std::exp(0.0);  // bump(0) = 1
  return j;
}

bool TestAmplitude::jet_consistent(double tol) const {
  if (!has_origin_jet()) return false;
  const Jet j = jet();
  // probe f(h) / h^power -> lambda as h -> 0
  const double h = 1e-3 * support_;
  const double probe = (*this)(h) / std::pow(h, power_);
  return std::abs(probe - j.lambda) <= tol * std::abs(j.lambda) + tol;
}

std::complex<double> eval_sum(const OscSumSpec& spec, const TestAmplitude& f,
                              double k) {
  if (k < 1) throw std::invalid_argument("eval_sum: k must be >= 1");
  const long lmax = static_cast<long>(std::ceil(f.support_max() * k)) + 1;
  std::complex<long double> acc = 0.5L * static_cast<long double>(f(0.0));
  for (long ell = 1; ell <= lmax; ++ell) {
    const double x = static_cast<double>(ell) / k;
    const double fx = f(x);
    if (fx == 0.0) continue;
    long double phase = 0.5L * spec.alpha * ell * ell / k - spec.beta * ell;
    std::complex<long double> term =
        std::complex<long double>(std::cos(phase), std::sin(phase)) *
        static_cast<long double>(fx);
    if (spec.sign == SumSign::minus && (ell % 2) != 0) term = -term;
    acc += term;
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

LeadingPrediction predict_leading(const OscSumSpec& spec, const Jet& jet) {
  if (spec.alpha == 0) throw std::invalid_argument("predict_leading: alpha = 0");
  LeadingPrediction p;
  const double alpha = spec.alpha;
  if (spec.beta != 0) {
    // off-stationary case: exponent from the vanishing order alone
    p.kind = LeadingKind::exponent_only;
    p.exponent = -(jet.odd ? 2 * jet.n + 1 : 2 * jet.n);
    return p;
  }
  if (spec.sign == SumSign::plus) {
    if (!jet.odd) {
      p.exponent = 0.5 - jet.n;
      double fact = 1.0;  // (2n)!/n!
      for (int i = jet.n + 1; i <= 2 * jet.n; ++i) fact *= i;
      const std::complex<double> in_2a =
          std::pow(std::complex<double>(0, 1) / (2 * alpha), jet.n);
      p.c0 = std::sqrt(M_PI / (2 * std::abs(alpha))) *
             std::polar(1.0, (alpha > 0 ? 1 : -1) * M_PI / 4) * in_2a * fact *
             jet.lambda;
    } else {
      p.exponent = -jet.n;
      double fact = 1.0;  // n!
      for (int i = 2; i <= jet.n; ++i) fact *= i;
      p.c0 = std::pow(std::complex<double>(0, 2) / alpha, jet.n + 1) *
             (fact / 2.0) * jet.lambda;
    }
    return p;
  }
  if (!jet.odd) {
    p.kind = LeadingKind::rapid_decay;
    p.exponent = -std::numeric_limits<double>::infinity();
  } else {
    p.kind = LeadingKind::exponent_only;
    p.exponent = -(2 * jet.n + 1);
  }
  return p;
}

ExpansionReport verify_expansion(const OscSumSpec& spec, const TestAmplitude& f,
                                 const std::vector<double>& k_list) {
  if (k_list.size() < 6)
    throw std::invalid_argument("verify_expansion: need at least 6 ladder points");
  for (std::size_t i = 1; i < k_list.size(); ++i)
    if (k_list[i] <= k_list[i - 1])
      throw std::invalid_argument("verify_expansion: ladder must increase");

  ExpansionReport rep;
  rep.prediction = predict_leading(spec, f.jet());
  rep.ks = k_list;
  rep.values.reserve(k_list.size());
  for (double k : k_list) rep.values.push_back(eval_sum(spec, f, k));

  const std::size_t n = k_list.size();
  for (std::size_t i = n - std::min<std::size_t>(3, n); i < n; ++i)
    rep.tail_max_abs = std::max(rep.tail_max_abs, std::abs(rep.values[i]));

  if (rep.prediction.kind == LeadingKind::rapid_decay) {
    rep.pass = rep.tail_max_abs < 1e-6;
    rep.measured_exponent = -std::numeric_limits<double>::infinity();
    return rep;
  }

  // decay exponent: least squares on the tail half of the ladder
  {
    const std::size_t start = n / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t cnt = 0;
    for (std::size_t i = start; i < n; ++i) {
      const double mag = std::abs(rep.values[i]);
      if (mag <= 0) continue;
      const double x = std::log(k_list[i]), y = std::log(mag);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++cnt;
    }
    if (cnt >= 2) {
      const double nn = static_cast<double>(cnt);
      rep.measured_exponent = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
    }
    rep.exponent_deviation = rep.measured_exponent - rep.prediction.exponent;
  }

  if (rep.prediction.kind == LeadingKind::exponent_only) {
    // only the decay order is asserted (at least as fast as predicted)
    rep.pass = rep.measured_exponent <= rep.prediction.exponent + 0.15;
    return rep;
  }

  // Richardson extrapolation (order 3) of S_k / k^{exponent} on the ladder tail
  {
    std::vector<std::complex<double>> r;
    for (std::size_t i = 0; i < n; ++i)
      r.push_back(rep.values[i] /
                  std::pow(k_list[i], rep.prediction.exponent));
    const int order = 3;
    std::vector<std::vector<std::complex<double>>> table;
    table.push_back(r);
    for (int j = 1; j <= order; ++j) {
      const double w = std::pow(2.0, j);
      std::vector<std::complex<double>> next;
      const auto& prev = table.back();
      for (std::size_t i = 1; i < prev.size(); ++i)
        next.push_back((w * prev[i] - prev[i - 1]) / (w - 1.0));
      table.push_back(next);
    }
    rep.measured_c0 = table.back().back();
    rep.c0_rel_deviation = std::abs(rep.measured_c0 - rep.prediction.c0) /
                           std::abs(rep.prediction.c0);
  }
  rep.pass = std::abs(rep.exponent_deviation) <= rep.exponent_tol &&
             rep.c0_rel_deviation <= rep.c0_tol;
  return rep;
}

namespace {

// (e^D - 1) or sinh(D)/cosh(D) symbol values from the jet at x, truncated.
std::complex<double> symbol_exp_minus_one(const jets::Series& jet, double tau,
                                          int orders) {
  // jet[j] = f^{(j)} / j!, and the symbol term is f^{(j)} / (j! tau^j)
  std::complex<double> acc = 0;
  for (int j = 1; j <= orders && j < static_cast<int>(jet.size()); ++j)
    acc += jet[static_cast<std::size_t>(j)] * std::pow(tau, -j);
  return acc;
}

double symbol_partial(const jets::Series& jet, double tau, int orders,
                      bool odd_terms) {
  double acc = 0;
  for (int j = 1; j <= orders && j < static_cast<int>(jet.size()); ++j) {
    if ((j % 2 == 1) != odd_terms) continue;
    acc += jet[static_cast<std::size_t>(j)] * std::pow(tau, -j);
  }
  return acc;
}

}  // namespace

std::complex<double> eq1_defect(const TestAmplitude& sigma, double alpha,
                                double beta, double tau, int orders) {
  const long lmax = static_cast<long>(std::ceil(sigma.support_max() * tau)) + 1;
  std::complex<double> total = sigma(0.0);
  for (long ell = 0; ell <= lmax; ++ell) {
    const double x = static_cast<double>(ell) / tau;
    const double phase = 0.5 * alpha * ell * ell / tau - beta * ell;
    const std::complex<double> osc = std::polar(1.0, phase);
    const std::complex<double> delta =
        std::polar(1.0, alpha * x - beta + 0.5 * alpha / tau);
    const double sx = sigma(x);
    if (sx != 0.0) total += osc * sx * (delta - 1.0);
    if (x > sigma.support_min() - 1.0 / tau && x < sigma.support_max()) {
      const jets::Series jet = sigma.jet_at(x, orders);
      total += osc * delta * symbol_exp_minus_one(jet, tau, orders);
    }
  }
  return total;
}

std::complex<double> sum_part_defect(const TestAmplitude& sigma, double alpha,
                                     double tau, int orders) {
  const long lmax = static_cast<long>(std::ceil(sigma.support_max() * tau)) + 1;
  const std::complex<double> i_unit(0, 1);
  // S_t(sin(alpha .) sigma)
  std::complex<double> lhs = 0;  // sin(0) sigma(0) / 2 = 0
  // S_t(sinh(D) sigma)
  std::complex<double> sinh_sum = 0.5 * symbol_partial(sigma.jet_at(0.0, orders),
                                                       tau, orders, true);
  for (long ell = 1; ell <= lmax; ++ell) {
    const double x = static_cast<double>(ell) / tau;
    const std::complex<double> osc =
        std::polar(1.0, 0.5 * alpha * ell * ell / tau);
    const double sx = sigma(x);
    if (sx != 0.0) lhs += osc * std::sin(alpha * x) * sx;
    if (x > sigma.support_min() - 1.0 / tau && x < sigma.support_max())
      sinh_sum += osc * symbol_partial(sigma.jet_at(x, orders), tau, orders, true);
  }
  const double cosh0 =
      sigma(0.0) + symbol_partial(sigma.jet_at(0.0, orders), tau, orders, false);
  const std::complex<double> rhs =
      0.5 * i_unit * sigma(0.0) +
      i_unit * std::polar(1.0, -0.5 * alpha / tau) * (sinh_sum + 0.5 * cosh0);
  return lhs - rhs;
}

}  // namespace swrt
