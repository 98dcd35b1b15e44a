#include "swrt/tqft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "swrt/verlinde.hpp"

namespace swrt {

namespace {
constexpr long double kPiL = 3.14159265358979323846264338327950288L;
}

BlockVector BlockVector::basis(int level, int ell) {
  if (level < 2) throw std::invalid_argument("BlockVector: k must be >= 2");
  if (ell < 1 || ell > level - 1)
    throw std::invalid_argument("BlockVector: color out of range");
  BlockVector v(level);
  v.coeffs[static_cast<std::size_t>(ell - 1)] = 1.0;
  return v;
}

double BlockVector::norm() const {
  double acc = 0;
  for (const auto& c : coeffs) acc += std::norm(c);
  return std::sqrt(acc);
}

std::complex<double> inner(const BlockVector& u, const BlockVector& v) {
  if (u.k != v.k) throw std::invalid_argument("inner: mismatched levels");
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < u.coeffs.size(); ++i)
    acc += u.coeffs[i] * std::conj(v.coeffs[i]);
  return acc;
}

BlockVector rho_T_apply(const BlockVector& v, long n) {
  BlockVector out(v.k);
  const long mod = 4L * v.k;
  for (int ell = 1; ell <= v.k - 1; ++ell) {
    // exponent pi n (l^2 - 1) / 2k, reduced mod 4k before the float step
    long e = ((static_cast<long>(ell) * ell - 1) % mod) * (n % mod) % mod;
    if (e < 0) e += mod;
    const long double phase = kPiL * e / (2.0L * v.k);
    out.coeffs[static_cast<std::size_t>(ell - 1)] =
        v.coeffs[static_cast<std::size_t>(ell - 1)] *
        std::complex<double>(static_cast<double>(std::cos(phase)),
                             static_cast<double>(std::sin(phase)));
  }
  return out;
}

BlockVector rho_S_apply_dense(const BlockVector& v) {
  const int k = v.k;
  BlockVector out(k);
  const long double front = std::sqrt(2.0L / k);
  for (int lp = 1; lp <= k - 1; ++lp) {
    std::complex<long double> acc = 0;
    for (int ell = 1; ell <= k - 1; ++ell) {
      const long double s = std::sin(kPiL * ((static_cast<long>(ell) * lp) % (2 * k)) / k);
      const auto& c = v.coeffs[static_cast<std::size_t>(ell - 1)];
      acc += std::complex<long double>(c.real(), c.imag()) * s;
    }
    acc *= front;
    out.coeffs[static_cast<std::size_t>(lp - 1)] = {
        static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  return out;
}

namespace {

// FFTW RODFT00 of length k-1 computes Y_j = 2 sum_i X_i sin(pi i j / k);
// plans are cached per level and shared (new-array execution).
fftw_plan dst_plan(int n) {
  static std::map<int, fftw_plan> plans;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = plans.find(n);
  if (it != plans.end()) return it->second;
  double* buf = fftw_alloc_real(static_cast<std::size_t>(n));
  fftw_plan p = fftw_plan_r2r_1d(n, buf, buf, FFTW_RODFT00, FFTW_ESTIMATE);
  fftw_free(buf);
  return plans.emplace(n, p).first->second;
}

}  // namespace

BlockVector rho_S_apply_fast(const BlockVector& v) {
  const int k = v.k;
  const int n = k - 1;
  fftw_plan plan = dst_plan(n);
  double* buf = fftw_alloc_real(static_cast<std::size_t>(n));
  BlockVector out(k);
  const double front = std::sqrt(2.0 / k) / 2.0;
  for (int part = 0; part < 2; ++part) {
    for (int i = 0; i < n; ++i)
      buf[i] = part == 0 ? v.coeffs[static_cast<std::size_t>(i)].real()
                         : v.coeffs[static_cast<std::size_t>(i)].imag();
    fftw_execute_r2r(plan, buf, buf);
    for (int i = 0; i < n; ++i) {
      auto& c = out.coeffs[static_cast<std::size_t>(i)];
      if (part == 0)
        c.real(front * buf[i]);
      else
        c.imag(front * buf[i]);
    }
  }
  fftw_free(buf);
  return out;
}

BlockVector rho_S_apply(const BlockVector& v) {
  return v.k >= 24 ? rho_S_apply_fast(v) : rho_S_apply_dense(v);
}

std::pair<long long, long long> choose_cd(long long a, long long b) {
  if (a == 0 && b == 0) throw std::invalid_argument("choose_cd: (0,0) invalid");
  if (std::gcd(std::llabs(a), std::llabs(b)) != 1)
    throw std::invalid_argument("choose_cd: a and b must be coprime");
  if (b == 0) return {a > 0 ? 1 : -1, 0};  // ac = 1
  const long long babs = std::llabs(b);
  // c == a^{-1} mod |b|, then the representative of minimal |c| (tie: c >= 0)
  long long t0 = 0, t1 = 1;
  long long r0 = babs, r1 = ((a % babs) + babs) % babs;
  while (r1 != 0) {
    const long long q = r0 / r1;
    const long long r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const long long t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  const long long inv = ((t0 % babs) + babs) % babs;  // in [0, |b|)
  const long long c = (2 * inv <= babs) ? inv : inv - babs;
  const long long d = (1 - a * c) / b;
  return {c, d};
}

GluingWord decompose_gluing(long long a, long long b) {
  const auto [c, d] = choose_cd(a, b);
  GluingWord word;
  word.source = Mat2{a, -d, b, c};
  // reduce R to a T-power by left-multiplying with S^{-1} T^{-n}
  Mat2 r = word.source;
  while (r.c != 0) {
    const long long alpha = r.a, beta = r.c;
    long long n = alpha / beta;  // round to nearest, deterministic at ties
    const long long rem = alpha - n * beta;
    if (2 * std::llabs(rem) > std::llabs(beta))
      n += (rem > 0) == (beta > 0) ? 1 : -1;
    else if (2 * std::llabs(rem) == std::llabs(beta) && ((rem > 0) == (beta > 0)))
      n += 1;
    if (n != 0) word.tokens.push_back({false, static_cast<long>(n)});
    word.tokens.push_back({true, 0});
    // r := S^{-1} T^{-n} r
    const Mat2 tn{1, -n, 0, 1};
    const Mat2 sinv{0, 1, -1, 0};
    r = sinv * (tn * r);
    ++word.euclid_steps;
  }
  if (r.a == -1) {
    word.tokens.push_back({true, 0});
    word.tokens.push_back({true, 0});
    r = Mat2{1, -r.b, 0, 1};  // S^2 = -I absorbed
  }
  if (r.b != 0) word.tokens.push_back({false, static_cast<long>(r.b)});
  if (!(word_matrix(word) == word.source))
    throw std::logic_error("decompose_gluing: word product mismatch");
  return word;
}

Mat2 word_matrix(const GluingWord& word) {
  Mat2 acc;
  for (const auto& t : word.tokens) {
    if (t.is_S)
      acc = acc * Mat2{0, -1, 1, 0};
    else
      acc = acc * Mat2{1, t.n, 0, 1};
  }
  return acc;
}

BlockVector apply_gluing(const GluingWord& word, const BlockVector& v) {
  BlockVector acc = v;
  for (auto it = word.tokens.rbegin(); it != word.tokens.rend(); ++it)
    acc = it->is_S ? rho_S_apply(acc) : rho_T_apply(acc, it->n);
  return acc;
}

BlockVector sigma_s1_state(int g, int k) {
  if (g < 1) throw std::invalid_argument("sigma_s1_state: g must be >= 1");
  if (k < 2) throw std::invalid_argument("sigma_s1_state: k must be >= 2");
  BlockVector out(k);
  for (int ell = 1; ell <= k - 1; ell += 2)
    out.coeffs[static_cast<std::size_t>(ell - 1)] =
        counting_via_pm(g, k, ell).get_d();
  return out;
}

std::complex<double> z_k(int g, long long a, long long b, int k) {
  if (g < 1) throw std::invalid_argument("z_k: g must be >= 1");
  if (k < 2) throw std::invalid_argument("z_k: k must be >= 2");
  if (a == 0) throw std::invalid_argument("z_k: a must be nonzero");
  if (b < 1) throw std::invalid_argument("z_k: b must be >= 1");
  if (std::gcd(std::llabs(a), b) != 1)
    throw std::invalid_argument("z_k: a and b must be coprime");
  const GluingWord word = decompose_gluing(a, b);
  const BlockVector filled = apply_gluing(word, BlockVector::basis(k, 1));
  return inner(sigma_s1_state(g, k), filled);
}

ExtendedState embed_alternating(const BlockVector& v) {
  ExtendedState out(v.k);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int ell = 1; ell <= v.k - 1; ++ell) {
    const auto c = v.coeffs[static_cast<std::size_t>(ell - 1)] * inv_sqrt2;
    out.coeffs[static_cast<std::size_t>(ell)] = c;
    out.coeffs[static_cast<std::size_t>(2 * v.k - ell)] = -c;
  }
  return out;
}

ExtendedState phi_transform(const ExtendedState& s) {
  const int n = 2 * s.k;
  ExtendedState out(s.k);
  const long double front = 1.0L / std::sqrt(static_cast<long double>(n));
  for (int m = 0; m < n; ++m) {
    std::complex<long double> acc = 0;
    for (int ell = 0; ell < n; ++ell) {
      const long double phase = -kPiL * ((static_cast<long>(m) * ell) % n) / s.k;
      const auto& c = s.coeffs[static_cast<std::size_t>(ell)];
      acc += std::complex<long double>(c.real(), c.imag()) *
             std::complex<long double>(std::cos(phase), std::sin(phase));
    }
    acc *= front;
    out.coeffs[static_cast<std::size_t>(m)] = {static_cast<double>(acc.real()),
                                               static_cast<double>(acc.imag())};
  }
  return out;
}

PhiBasisReport phi_basis_check(int g, int k) {
  const ExtendedState eta = phi_transform(embed_alternating(sigma_s1_state(g, k)));

  // Right-hand side: Z_k(Sigma x S^1) = (1/(i sqrt 2)) sum_{m != 0,k}
  // S_{m,1}^{1-2g} Phi_m. (The displayed prefactor sqrt(k)/2i overshoots by
  // sqrt(k/2); the constant here follows from the sine-power expansion of the
  // state and makes the identity exact.)
  const int n = 2 * k;
  std::vector<std::complex<double>> rhs(static_cast<std::size_t>(n), 0.0);
  const std::complex<double> front = 1.0 / (std::complex<double>(0, 1) * std::sqrt(2.0));
  double rhs_norm2 = 0;
  for (int m = 1; m < n; ++m) {
    if (m == k) continue;
    const double s = std::sqrt(2.0 / k) * static_cast<double>(std::sin(kPiL * m / k));
    rhs[static_cast<std::size_t>(m)] = front * std::pow(s, 1 - 2 * g);
    rhs_norm2 += std::norm(rhs[static_cast<std::size_t>(m)]);
  }

  std::complex<double> overlap = 0;
  for (int m = 0; m < n; ++m)
    overlap += eta.coeffs[static_cast<std::size_t>(m)] *
               std::conj(rhs[static_cast<std::size_t>(m)]);
  const std::complex<double> phase =
      std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;

  PhiBasisReport rep;
  rep.g = g;
  rep.k = k;
  rep.fitted_phase = std::arg(phase);
  rep.modulus_ratio = std::abs(overlap) / rhs_norm2;
  double scale = 0;
  for (const auto& c : rhs) scale = std::max(scale, std::abs(c));
  rep.endpoints_vanish =
      std::abs(eta.coeffs[0]) < 1e-10 * scale &&
      std::abs(eta.coeffs[static_cast<std::size_t>(k)]) < 1e-10 * scale;
  double dev = 0;
  for (int m = 0; m < n; ++m)
    dev = std::max(dev, std::abs(eta.coeffs[static_cast<std::size_t>(m)] -
                                 phase * rhs[static_cast<std::size_t>(m)]));
  rep.deviation = dev / scale;  // relative to the largest coefficient
  return rep;
}

}  // namespace swrt
