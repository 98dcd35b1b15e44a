#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace swrt {

/// A vector of the level-k torus block space in the Verlinde basis e_1..e_{k-1};
/// coeffs[i] is the coefficient of e_{i+1}.
struct BlockVector {
  int k = 0;
  std::vector<std::complex<double>> coeffs;

  BlockVector() = default;
  explicit BlockVector(int level)
      : k(level), coeffs(static_cast<std::size_t>(level - 1), {0.0, 0.0}) {}
  static BlockVector basis(int level, int ell);
  double norm() const;
};

/// <u, v> = sum u_l conj(v_l): linear in the first slot, conjugate in the second.
std::complex<double> inner(const BlockVector& u, const BlockVector& v);

/// rho_k(T)^n: diagonal phases e^{i pi n (l^2 - 1) / 2k}.
BlockVector rho_T_apply(const BlockVector& v, long n = 1);

/// rho_k(S): the sine kernel sqrt(2/k) sin(pi l l'/k), dense O(k^2) product.
BlockVector rho_S_apply_dense(const BlockVector& v);
/// Same operator through a fast type-I discrete sine transform, O(k log k).
BlockVector rho_S_apply_fast(const BlockVector& v);
/// Dispatches on size; both paths agree to 1e-10.
BlockVector rho_S_apply(const BlockVector& v);

/// One factor of a gluing word: S, or T^n.
struct GluingToken {
  bool is_S = true;
  long n = 0;  // exponent when the token is T^n
};

struct Mat2 {
  long long a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

/// Factorisation of the surgery matrix (first column (a,b), determinant +1)
/// into S / T^n generators; the token product equals source exactly.
struct GluingWord {
  Mat2 source;
  std::vector<GluingToken> tokens;
  int euclid_steps = 0;
};

/// The canonical completion (c, d) of coprime (a, b): ac + bd = 1 with
/// minimal |c|, ties broken by c >= 0.
std::pair<long long, long long> choose_cd(long long a, long long b);

/// Continued-fraction decomposition of the completed matrix [[a, -d], [b, c]].
GluingWord decompose_gluing(long long a, long long b);

Mat2 word_matrix(const GluingWord& word);

/// Applies the represented word to a block vector (rightmost factor first).
BlockVector apply_gluing(const GluingWord& word, const BlockVector& v);

/// Z_k(Sigma_g x S^1) in the Verlinde basis: coefficients are the Verlinde
/// numbers, evaluated by the exact polynomial route so large levels stay
/// integral (equal to verlinde_number on its certified range).
BlockVector sigma_s1_state(int g, int k);

/// Z_k of the Seifert manifold (g; (a,b)) as the surgery pairing
/// <Z_k(Sigma x S^1), rho_k(phi) e_1>.
std::complex<double> z_k(int g, long long a, long long b, int k);

/// A vector of the extended 2k-dimensional space, basis Psi_l, l in Z/2kZ.
struct ExtendedState {
  int k = 0;
  std::vector<std::complex<double>> coeffs;  // index l in 0..2k-1

  ExtendedState() = default;
  explicit ExtendedState(int level)
      : k(level), coeffs(static_cast<std::size_t>(2 * level), {0.0, 0.0}) {}
};

/// e_l -> (Psi_l - Psi_{-l}) / sqrt(2)
ExtendedState embed_alternating(const BlockVector& v);

/// Coefficients in the basis Phi_m = (2k)^{-1/2} sum_n e^{i pi m n / k} Psi_n.
ExtendedState phi_transform(const ExtendedState& s);

struct PhiBasisReport {
  int g = 0, k = 0;
  double deviation = 0;       // max coefficient deviation after the phase fit,
                              // relative to the largest coefficient
  double fitted_phase = 0;    // argument of the fitted unit scalar
  double modulus_ratio = 1;   // |<eta, rhs>| / ||rhs||^2, 1 when exact
  bool endpoints_vanish = false;
};

/// Coefficientwise check of the Phi-basis expression of Z_k(Sigma x S^1)
/// against the sine-power vector, with a single fitted unit phase.
PhiBasisReport phi_basis_check(int g, int k);

}  // namespace swrt
