#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace swrt {

/// Exact rational arithmetic backed by GMP. Values are always canonical:
/// lowest terms, denominator > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational from_string(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return Rational(q);
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }
  long double to_long_double() const {
    // get_d truncates to double; split to keep long-double accuracy
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v_.get_num().get_mpz_t(),
                v_.get_den().get_mpz_t());
    mpq_class frac(r, v_.get_den());
    frac.canonicalize();
    return static_cast<long double>(q.get_d()) +
           static_cast<long double>(frac.get_d());
  }

  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational pow(long e) const;

 private:
  mpq_class v_;
};

mpz_class binomial(unsigned long n, unsigned long k);
mpz_class factorial(unsigned long n);

/// Bernoulli number B_n for even n >= 0 (B_0 = 1, B_2 = 1/6, B_4 = -1/30, ...).
/// Computed by the defining recurrence sum_{j=0}^{m} binom(m+1,j) B_j = 0 and
/// memoized. Odd or negative n is an argument error.
Rational bernoulli(long n);

/// Coefficients of the power-sum polynomial Q_p with Q_p(l) = sum_{m=1}^{l} m^p.
/// Index i holds the coefficient of l^i; degree p+1; Q_p(0) = 0.
std::vector<Rational> faulhaber(long p);

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x);
double eval_poly(const std::vector<Rational>& coeffs, double x);

}  // namespace swrt
