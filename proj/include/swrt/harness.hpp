#pragma once

#include <complex>
#include <string>
#include <vector>

#include "swrt/moduli.hpp"
#include "swrt/tqft.hpp"

namespace swrt {

/// A computed WRT series: one complex value per level, with the surgery data
/// and the gluing word that produced it.
struct SeriesSample {
  SeifertData s;
  GluingWord word;
  std::vector<int> ks;
  std::vector<std::complex<double>> z;
};

/// Deterministic evaluation of z_k over k = k_min, k_min+stride, ..., <= k_max.
SeriesSample compute_series(const SeifertData& s, int k_min, int k_max,
                            int stride = 1);

struct ComponentFit {
  Component component;
  std::complex<double> amplitude;  // fitted leading coefficient A_x
  double amplitude_ratio = 0;      // |A_x| / |a0(x)|
  bool phase_checked = false;      // refined only for the dominant class
  double phase_refined = 0;        // refined per-component phase, radians
  double phase_deviation = 0;      // wrapped phi_hat - CS(x)
  std::complex<double> b_amplitude;  // fitted B_x (X3 only)
  double b_ratio = 0;                // |B_x| / |b0(x)|
};

struct FitReport {
  SeifertData s;
  int k_min = 0, k_max = 0;
  double theta1 = 0;       // fitted 1/k phase slope (tau_k-type ambiguity)
  double theta0 = 0;       // phase offset of the dominant amplitude vs prediction
  double rel_residual = 0; // |model - data| / |data| over all samples
  double condition_number = 0;
  bool ill_conditioned = false;
  double dominant_exponent_measured = 0;
  double dominant_exponent_predicted = 0;
  // slope of the residual after subtracting every integer-ladder layer;
  // the singular components leave the half-integer exponent 2g - 3/2
  double residual_exponent_after_integer_layer = 0;
  double residual_exponent_target = 0;
  // decrease of the growth exponent after subtracting the fitted leading layer
  double leading_subtraction_drop = 0;
  // |data - model| per sample and its tail growth exponent; near the floor of
  // the modelled orders when the component list is right
  std::vector<double> residual_magnitudes;
  double residual_exponent = 0;
  std::vector<ComponentFit> components;
};

struct FitOptions {
  double tail_fraction = 1.0 / 3;  // exponent fits use the top third in k
  int theta1_grid = 4001;          // theta1 scan resolution over the range
  double theta1_range = 40.0;      // theta1 in [-range, range]
  double phase_window = 0.3;       // per-component phase refinement window, rad
  int phase_grid = 1024;           // scan step 2 pi / phase_grid
  int rms_windows = 6;             // windows for slope estimation
};

/// Least-squares fit of the computed series against the predicted multi-phase
/// expansion. Model: after removing a fitted global e^{i theta1 / k},
///   Z_k = sum_x e^{ik CS(x)} (k/2pi)^{n(x)} (A_x + A'_x/k + ...)
///       + sum_{x in X3} e^{ik CS(x)} k^{m(x)} (B_x + B'_x/k),
/// with per-component correction depth chosen so that unmodelled layers sit
/// below the half-integer ladder.
FitReport fit_expansion(const SeriesSample& sample, const PredictedExpansion& pe,
                        const FitOptions& opt = {});

struct CriterionResult {
  std::string name;
  bool pass = false;
  double value = 0;
  double target = 0;
  std::string detail;
};

/// The per-manifold main-theorem checks: dominant exponent (0.1), X1/X2
/// amplitudes (5%), dominant-class phases (0.05 rad), half-integer residual
/// exponent (0.15), X3 |B| vs |b0| (10%).
std::vector<CriterionResult> evaluate_main_theorem_checks(const FitReport& rep);

}  // namespace swrt
