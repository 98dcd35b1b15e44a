#pragma once

#include <complex>
#include <vector>

#include "swrt/rational.hpp"

namespace swrt {

/// Surgery data of the Seifert manifold (g; (a,b)) together with the
/// canonical completion ac + bd = 1 of minimal |c|.
struct SeifertData {
  int g = 2;
  long long a = 1, b = 1;
  long long c = 0, d = 1;

  SeifertData() = default;
  SeifertData(int genus, long long a_coef, long long b_coef);
};

enum class ComponentClass { X1, X2, X3, X4 };

const char* class_name(ComponentClass c);

/// One connected component of the character variety of the Seifert manifold,
/// located at [r nu] with nu = a mu + b lambda, together with its invariants
/// and the predicted leading expansion data.
struct Component {
  ComponentClass cls = ComponentClass::X1;
  int point_tag = 0;          // 1..4 when the component sits at p_1..p_4
  Rational r;                 // position in [0, 1/2]
  Rational angle_p_frac;      // angle_p / (2 pi), folded into [0, 1/2]
  Rational angle_q_frac;      // angle_q / (2 pi)
  double angle_p = 0;         // arccos(cos(2 pi r a)) in [0, pi]
  double angle_q = 0;         // arccos(cos(2 pi r b))
  Rational cs_frac;           // CS / (2 pi) in [0, 1)
  double cs_phase = 0;        // CS in [0, 2 pi)
  double exponent_n = 0;      // n(x)
  std::complex<double> a0;    // predicted leading amplitude (sign open)
  bool has_b0 = false;        // singular components carry a second ladder
  double exponent_m = 0;      // m(x) = 2g - 3/2
  std::complex<double> b0;
};

/// All components of the character variety, ordered X1, X2, X3, X4; angle and
/// Chern-Simons data are exact rationals (times 2 pi).
std::vector<Component> enumerate_components(const SeifertData& s);

/// CS/(2 pi) at [r nu] by parallel transport in the prequantum bundle:
/// reduce the lift (r nu, 1) to the base point of its branch of A by a lattice
/// vector, picking up the Heisenberg cocycle phase. Throws std::logic_error
/// when [r nu] does not lie on A.
Rational chern_simons_frac(const SeifertData& s, const Rational& r);

/// Components with the predicted per-class expansion data filled in
/// (exponents and leading amplitudes).
struct PredictedExpansion {
  SeifertData s;
  std::vector<Component> components;
};

PredictedExpansion predicted_expansion(const SeifertData& s);

}  // namespace swrt
