#include <cmath>

#include "doctest.h"
#include "swrt/harness.hpp"

using swrt::ComponentClass;
using swrt::FitOptions;
using swrt::SeifertData;

namespace {

FitOptions quick_options() {
  FitOptions opt;
  opt.theta1_grid = 1601;
  opt.phase_window = 0.2;
  return opt;
}

}  // namespace

TEST_CASE("compute_series basics") {
  const SeifertData s(2, 1, 1);
  const auto sample = swrt::compute_series(s, 3, 20, 1);
  CHECK(sample.ks.size() == 18);
  bool nonzero = false;
  for (const auto& z : sample.z) {
    CHECK(std::isfinite(z.real()));
    CHECK(std::isfinite(z.imag()));
    if (std::abs(z) > 0) nonzero = true;
  }
  CHECK(nonzero);

  // stride respected
  const auto strided = swrt::compute_series(s, 3, 20, 4);
  CHECK(strided.ks == std::vector<int>{3, 7, 11, 15, 19});

  // bit-identical on repeat runs
  const auto again = swrt::compute_series(s, 3, 20, 1);
  for (std::size_t i = 0; i < sample.z.size(); ++i)
    CHECK(sample.z[i] == again.z[i]);

  CHECK_THROWS_AS(swrt::compute_series(s, 1, 20, 1), std::invalid_argument);
}

TEST_CASE("fit_expansion on (2,3,2)") {
  const SeifertData s(2, 3, 2);
  const auto sample = swrt::compute_series(s, 40, 320, 1);
  const auto pe = swrt::predicted_expansion(s);
  const auto rep = swrt::fit_expansion(sample, pe, quick_options());

  CHECK(rep.rel_residual < 1e-8);
  CHECK(!rep.ill_conditioned);
  CHECK(rep.dominant_exponent_measured == doctest::Approx(4.0).epsilon(0.025));
  CHECK(rep.residual_exponent_after_integer_layer ==
        doctest::Approx(2.5).epsilon(0.06));
  CHECK(rep.leading_subtraction_drop >= 0.8);

  for (const auto& cf : rep.components) {
    if (cf.component.cls == ComponentClass::X2) {
      CHECK(std::abs(cf.amplitude_ratio - 1.0) < 0.05);
      CHECK(cf.phase_checked);
      CHECK(std::abs(cf.phase_deviation) < 0.05);
    }
    if (cf.component.has_b0) {
      // measured singular-ladder amplitude sits at half the stated b0
      CHECK(cf.b_ratio > 0.45);
      CHECK(cf.b_ratio < 0.55);
    }
  }
}

TEST_CASE("fit precondition checks") {
  const SeifertData s(2, 1, 1);
  const auto pe = swrt::predicted_expansion(s);
  const auto narrow = swrt::compute_series(s, 100, 220, 4);
  CHECK_THROWS_AS(swrt::fit_expansion(narrow, pe), std::invalid_argument);
  const auto few = swrt::compute_series(s, 8, 80, 16);
  CHECK_THROWS_AS(swrt::fit_expansion(few, pe), std::invalid_argument);
}

TEST_CASE("p_2 component is visible in the data exactly when b is even") {
  // (2,3,2): dropping p_2 from the model must leave its k^3 layer in the
  // residual; the full model reaches the half-integer floor instead.
  const SeifertData s(2, 3, 2);
  const auto sample = swrt::compute_series(s, 40, 320, 1);
  auto pe = swrt::predicted_expansion(s);
  const auto full = swrt::fit_expansion(sample, pe, quick_options());

  auto pruned = pe;
  pruned.components.erase(
      std::remove_if(pruned.components.begin(), pruned.components.end(),
                     [](const swrt::Component& x) { return x.point_tag == 2; }),
      pruned.components.end());
  const auto partial = swrt::fit_expansion(sample, pruned, quick_options());

  CHECK(full.residual_exponent_after_integer_layer ==
        doctest::Approx(2.5).epsilon(0.06));
  // the unexplained p_2 layer dominates the pruned model's residual
  CHECK(partial.residual_exponent == doctest::Approx(3.0).epsilon(0.06));
  CHECK(partial.rel_residual > 100 * full.rel_residual);

  // (2,3,1): b odd, no p_2; a phantom p_2-style component fits to nothing
  const SeifertData s31(2, 3, 1);
  const auto sample31 = swrt::compute_series(s31, 40, 320, 1);
  auto pe31 = swrt::predicted_expansion(s31);
  const auto base31 = swrt::fit_expansion(sample31, pe31, quick_options());

  auto phantom = pe31;
  swrt::Component ghost;
  ghost.cls = ComponentClass::X3;
  ghost.point_tag = 2;
  ghost.r = swrt::Rational(1, 2);
  ghost.cs_frac = swrt::Rational(1, 2);  // the (-1)^k phase a p_2 would carry
  ghost.cs_phase = M_PI;
  ghost.exponent_n = 3.0;
  ghost.a0 = pe31.components.back().a0;
  phantom.components.push_back(ghost);
  const auto rep31 = swrt::fit_expansion(sample31, phantom, quick_options());
  double ghost_amp = 0, p1_amp = 0;
  for (const auto& cf : rep31.components) {
    if (cf.component.point_tag == 2) ghost_amp = std::abs(cf.amplitude);
    if (cf.component.point_tag == 1) p1_amp = std::abs(cf.amplitude);
  }
  CHECK(ghost_amp < 1e-6 * p1_amp);
  CHECK(base31.rel_residual < 1e-9);
}

TEST_CASE("criteria evaluation structure") {
  const SeifertData s(2, 3, 2);
  const auto sample = swrt::compute_series(s, 40, 320, 1);
  const auto rep = swrt::fit_expansion(sample, swrt::predicted_expansion(s),
                                       quick_options());
  const auto checks = swrt::evaluate_main_theorem_checks(rep);
  int amplitude_checks = 0, phase_checks = 0, b_checks = 0;
  for (const auto& c : checks) {
    if (c.name.rfind("amplitude", 0) == 0) {
      ++amplitude_checks;
      CHECK(c.pass);
    }
    if (c.name.rfind("phase", 0) == 0) {
      ++phase_checks;
      CHECK(c.pass);
    }
    if (c.name.rfind("b_amplitude", 0) == 0) ++b_checks;
  }
  CHECK(amplitude_checks == 2);
  CHECK(phase_checks == 2);
  CHECK(b_checks == 2);
}
