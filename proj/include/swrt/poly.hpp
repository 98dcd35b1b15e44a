#pragma once

#include <map>
#include <utility>
#include <vector>

#include "swrt/rational.hpp"

namespace swrt {

/// Sparse bivariate polynomial over Q. The first variable is written k and the
/// second x throughout; a stored key (q, p) is the monomial k^q x^p. Zero
/// coefficients are never stored.
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;  // (q = k-degree, p = x-degree)

  BivariatePoly() = default;

  static BivariatePoly monomial(int q, int p, const Rational& c) {
    BivariatePoly r;
    r.add_term(q, p, c);
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  std::size_t term_count() const { return c_.size(); }
  const std::map<Key, Rational>& terms() const { return c_; }

  Rational coeff(int q, int p) const {
    auto it = c_.find({q, p});
    return it == c_.end() ? Rational(0) : it->second;
  }

  void add_term(int q, int p, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.emplace(Key{q, p}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  BivariatePoly operator-() const {
    BivariatePoly r;
    for (const auto& [key, c] : c_) r.c_.emplace(key, -c);
    return r;
  }
  BivariatePoly& operator+=(const BivariatePoly& o) {
    for (const auto& [key, c] : o.c_) add_term(key.first, key.second, c);
    return *this;
  }
  BivariatePoly& operator-=(const BivariatePoly& o) {
    for (const auto& [key, c] : o.c_) add_term(key.first, key.second, -c);
    return *this;
  }
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r;
    for (const auto& [ka, ca] : a.c_)
      for (const auto& [kb, cb] : b.c_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  BivariatePoly scaled(const Rational& s) const {
    BivariatePoly r;
    if (s.is_zero()) return r;
    for (const auto& [key, c] : c_) r.c_.emplace(key, c * s);
    return r;
  }
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.c_ == b.c_;
  }

  /// d/dx
  BivariatePoly dx() const {
    BivariatePoly r;
    for (const auto& [key, c] : c_)
      if (key.second > 0)
        r.add_term(key.first, key.second - 1, c * Rational(key.second));
    return r;
  }

  /// Antiderivative in x with zero constant term.
  BivariatePoly integrate_x() const {
    BivariatePoly r;
    for (const auto& [key, c] : c_)
      r.add_term(key.first, key.second + 1, c / Rational(key.second + 1));
    return r;
  }

  /// Definite integral over x in [a, b]; result is a polynomial in k alone.
  BivariatePoly integrate_x(const Rational& a, const Rational& b) const {
    BivariatePoly anti = integrate_x();
    BivariatePoly r;
    for (const auto& [key, c] : anti.c_)
      r.add_term(key.first, 0, c * (b.pow(key.second) - a.pow(key.second)));
    return r;
  }

  Rational eval(const Rational& k, const Rational& x) const {
    Rational acc(0);
    for (const auto& [key, c] : c_)
      acc += c * k.pow(key.first) * x.pow(key.second);
    return acc;
  }
  double eval_double(double k, double x) const;

  /// Substitute a rational value for x; the result lives in k alone.
  BivariatePoly subst_x(const Rational& x) const {
    BivariatePoly r;
    for (const auto& [key, c] : c_)
      r.add_term(key.first, 0, c * x.pow(key.second));
    return r;
  }

  /// Coefficient of k^q as a dense univariate polynomial in x.
  std::vector<Rational> coeff_of_k(int q) const {
    int deg = -1;
    for (const auto& [key, c] : c_)
      if (key.first == q && key.second > deg) deg = key.second;
    std::vector<Rational> out(static_cast<std::size_t>(deg + 1), Rational(0));
    for (const auto& [key, c] : c_)
      if (key.first == q) out[static_cast<std::size_t>(key.second)] = c;
    return out;
  }

  int max_k_degree() const;
  int max_x_degree() const;

  /// Split into (even x-degree part, odd x-degree part).
  std::pair<BivariatePoly, BivariatePoly> parity_split() const {
    BivariatePoly even, odd;
    for (const auto& [key, c] : c_)
      (key.second % 2 == 0 ? even : odd).c_.emplace(key, c);
    return {even, odd};
  }

 private:
  std::map<Key, Rational> c_;
};

}  // namespace swrt
