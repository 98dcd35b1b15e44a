#include "swrt/rational.hpp"

#include <mutex>

namespace swrt {

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::invalid_argument("Rational: 0 to negative power");
    return Rational(0);
  }
  mpz_class n = num(), d = den();
  const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class np, dp;
  mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), a);
  mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), a);
  return e > 0 ? Rational(np, dp) : Rational(dp, np);
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

namespace {

// Full Bernoulli table (odd entries kept internally so the recurrence closes).
std::vector<Rational>& bernoulli_table() {
  static std::vector<Rational> table = {Rational(1)};
  return table;
}
std::mutex& bernoulli_mutex() {
  static std::mutex m;
  return m;
}

void extend_bernoulli(std::size_t upto) {
  auto& table = bernoulli_table();
  while (table.size() <= upto) {
    const std::size_t m = table.size();
    // sum_{j=0}^{m} binom(m+1, j) B_j = 0
    Rational acc(0);
    for (std::size_t j = 0; j < m; ++j)
      acc += Rational(binomial(m + 1, j), mpz_class(1)) * table[j];
    table.push_back(-acc / Rational(binomial(m + 1, m), mpz_class(1)));
  }
}

}  // namespace

Rational bernoulli(long n) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("bernoulli: index must be even and >= 0");
  std::lock_guard<std::mutex> lock(bernoulli_mutex());
  extend_bernoulli(static_cast<std::size_t>(n));
  return bernoulli_table()[static_cast<std::size_t>(n)];
}

std::vector<Rational> faulhaber(long p) {
  if (p < 0) throw std::invalid_argument("faulhaber: p must be >= 0");
  // Q_p(l) = 1/(p+1) sum_{j=0}^{p} binom(p+1, j) B_j^+ l^{p+1-j}, B_1^+ = +1/2
  std::vector<Rational> coeffs(static_cast<std::size_t>(p) + 2, Rational(0));
  for (long j = 0; j <= p; ++j) {
    Rational bj = (j == 1) ? Rational(1, 2)
                           : (j % 2 != 0 ? Rational(0) : bernoulli(j));
    if (bj.is_zero()) continue;
    Rational c = Rational(binomial(p + 1, j), mpz_class(1)) * bj /
                 Rational(p + 1);
    coeffs[static_cast<std::size_t>(p + 1 - j)] += c;
  }
  return coeffs;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double eval_poly(const std::vector<Rational>& coeffs, double x) {
  double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + it->to_double();
  return acc;
}

}  // namespace swrt
