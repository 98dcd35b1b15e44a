#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <vector>

#include "swrt/harness.hpp"
#include "swrt/moduli.hpp"
#include "swrt/stationary.hpp"
#include "swrt/tqft.hpp"
#include "swrt/verlinde.hpp"
#include "swrt/xi.hpp"

namespace py = pybind11;

namespace {

py::object big_int(const mpz_class& z) {
  return py::module_::import("builtins").attr("int")(z.get_str());
}

py::dict rational_dict(const swrt::Rational& r) {
  py::dict d;
  d["num"] = big_int(r.num());
  d["den"] = big_int(r.den());
  return d;
}

py::list poly_monomials(const swrt::BivariatePoly& p) {
  py::list out;
  for (const auto& [key, c] : p.terms()) {
    py::dict m;
    m["q"] = key.first;
    m["p"] = key.second;
    m["num"] = big_int(c.num());
    m["den"] = big_int(c.den());
    out.append(m);
  }
  return out;
}

py::dict component_dict(const swrt::Component& x) {
  py::dict d;
  d["cls"] = swrt::class_name(x.cls);
  d["point"] = x.point_tag;
  d["r"] = rational_dict(x.r);
  d["angle_p"] = x.angle_p;
  d["angle_q"] = x.angle_q;
  d["cs_over_2pi"] = rational_dict(x.cs_frac);
  d["cs_phase"] = x.cs_phase;
  d["n"] = x.exponent_n;
  d["a0"] = x.a0;
  if (x.has_b0) {
    d["m"] = x.exponent_m;
    d["b0"] = x.b0;
  }
  return d;
}

std::vector<std::complex<double>> block_values(const swrt::BlockVector& v) {
  return v.coeffs;
}

swrt::BlockVector block_from(int k, const std::vector<std::complex<double>>& c) {
  if (static_cast<int>(c.size()) != k - 1)
    throw std::invalid_argument("expected k-1 coefficients");
  swrt::BlockVector v(k);
  v.coeffs = c;
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "WRT invariants of Seifert manifolds: exact polynomial families, "
            "the modular representation, and asymptotic verification";

  // exact core
  m.def("bernoulli", [](long n) { return rational_dict(swrt::bernoulli(n)); },
        py::arg("n"), "Bernoulli number B_n for even n, as an exact fraction");
  m.def("faulhaber",
        [](long p) {
          py::list out;
          for (const auto& c : swrt::faulhaber(p)) out.append(rational_dict(c));
          return out;
        },
        py::arg("p"), "coefficients of the power-sum polynomial Q_p");

  // xi transform
  m.def("xi_direct",
        [](int mm, int k) { return swrt::xi_direct(mm, k).values; },
        py::arg("m"), py::arg("k"),
        "grid values of the discrete Fourier transform of sin^{-m}");
  m.def("pm",
        [](int mm, const std::string& method) {
          if (method == "recurrence")
            return poly_monomials(swrt::pm_recurrence(mm).poly);
          return poly_monomials(swrt::pm_inductive(mm).poly);
        },
        py::arg("m"), py::arg("method") = "inductive",
        "monomials of P_m as dicts {q, p, num, den}");
  m.def("verify_dev_part",
        [](int mm, int k) {
          const auto rep = swrt::verify_dev_part(mm, k);
          py::dict d;
          d["max_deviation"] = rep.max_deviation;
          d["scale"] = rep.scale;
          d["tolerance"] = rep.tolerance;
          d["pass"] = rep.pass;
          return d;
        },
        py::arg("m"), py::arg("k"));

  // verlinde
  m.def("s_entry", &swrt::s_entry, py::arg("m"), py::arg("p"), py::arg("k"));
  m.def("verlinde_number", &swrt::verlinde_number, py::arg("g"), py::arg("k"),
        py::arg("l"));
  m.def("fusion_count_oracle", &swrt::fusion_count_oracle, py::arg("g"),
        py::arg("k"), py::arg("l"));
  m.def("counting_via_pm",
        [](int g, int k, int l) { return big_int(swrt::counting_via_pm(g, k, l)); },
        py::arg("g"), py::arg("k"), py::arg("l"));
  m.def("volume_vg", &swrt::volume_vg, py::arg("g"), py::arg("t"));
  m.def("volume_vg_derivative", &swrt::volume_vg_derivative, py::arg("g"),
        py::arg("t"));
  m.def("build_family",
        [](int g) {
          const auto& fam = swrt::build_family(g);
          py::dict d;
          d["g"] = fam.g;
          d["two_pi_exponent"] = fam.two_pi_exponent;
          py::list polys, lambdas;
          for (const auto& poly : fam.polys) {
            py::list coeffs;
            for (const auto& c : poly) coeffs.append(rational_dict(c));
            polys.append(coeffs);
          }
          for (const auto& l : fam.lambda) lambdas.append(rational_dict(l));
          d["polys"] = polys;
          d["lambda"] = lambdas;
          return d;
        },
        py::arg("g"));

  // tqft states
  m.def("rho_t_apply",
        [](int k, const std::vector<std::complex<double>>& v, long n) {
          return block_values(swrt::rho_T_apply(block_from(k, v), n));
        },
        py::arg("k"), py::arg("coeffs"), py::arg("n") = 1);
  m.def("rho_s_apply",
        [](int k, const std::vector<std::complex<double>>& v) {
          return block_values(swrt::rho_S_apply(block_from(k, v)));
        },
        py::arg("k"), py::arg("coeffs"));
  m.def("decompose_gluing",
        [](long long a, long long b) {
          const auto w = swrt::decompose_gluing(a, b);
          py::dict d;
          d["matrix"] = py::make_tuple(w.source.a, w.source.b, w.source.c,
                                       w.source.d);
          py::list tokens;
          for (const auto& t : w.tokens) {
            if (t.is_S)
              tokens.append(py::str("S"));
            else
              tokens.append(py::make_tuple("T", t.n));
          }
          d["tokens"] = tokens;
          d["euclid_steps"] = w.euclid_steps;
          return d;
        },
        py::arg("a"), py::arg("b"));
  m.def("sigma_s1_state",
        [](int g, int k) { return block_values(swrt::sigma_s1_state(g, k)); },
        py::arg("g"), py::arg("k"));
  m.def("z_k", &swrt::z_k, py::arg("g"), py::arg("a"), py::arg("b"),
        py::arg("k"));
  m.def("phi_basis_check",
        [](int g, int k) {
          const auto rep = swrt::phi_basis_check(g, k);
          py::dict d;
          d["deviation"] = rep.deviation;
          d["fitted_phase"] = rep.fitted_phase;
          d["modulus_ratio"] = rep.modulus_ratio;
          d["endpoints_vanish"] = rep.endpoints_vanish;
          return d;
        },
        py::arg("g"), py::arg("k"));

  // moduli
  m.def("components",
        [](int g, long long a, long long b) {
          const auto pe = swrt::predicted_expansion(swrt::SeifertData(g, a, b));
          py::list out;
          for (const auto& x : pe.components) out.append(component_dict(x));
          return out;
        },
        py::arg("g"), py::arg("a"), py::arg("b"));

  // harness
  m.def("compute_series",
        [](int g, long long a, long long b, int kmin, int kmax, int stride) {
          const auto sample = swrt::compute_series(swrt::SeifertData(g, a, b),
                                                   kmin, kmax, stride);
          return py::make_tuple(sample.ks, sample.z);
        },
        py::arg("g"), py::arg("a"), py::arg("b"), py::arg("k_min"),
        py::arg("k_max"), py::arg("stride") = 1);
  m.def("verify_seifert",
        [](int g, long long a, long long b, int kmax) {
          const swrt::SeifertData s(g, a, b);
          const auto sample =
              swrt::compute_series(s, std::max(8, kmax / 8), kmax, 1);
          const auto rep =
              swrt::fit_expansion(sample, swrt::predicted_expansion(s));
          py::dict d;
          d["theta1"] = rep.theta1;
          d["rel_residual"] = rep.rel_residual;
          d["dominant_exponent_measured"] = rep.dominant_exponent_measured;
          d["dominant_exponent_predicted"] = rep.dominant_exponent_predicted;
          d["residual_exponent_after_integer_layer"] =
              rep.residual_exponent_after_integer_layer;
          d["residual_exponent_target"] = rep.residual_exponent_target;
          py::list comps;
          for (const auto& cf : rep.components) {
            py::dict c = component_dict(cf.component);
            c["amplitude"] = cf.amplitude;
            c["amplitude_ratio"] = cf.amplitude_ratio;
            if (cf.phase_checked) c["phase_deviation"] = cf.phase_deviation;
            if (cf.component.has_b0) c["b_ratio"] = cf.b_ratio;
            comps.append(c);
          }
          d["components"] = comps;
          py::list checks;
          bool all_pass = true;
          for (const auto& c : swrt::evaluate_main_theorem_checks(rep)) {
            py::dict cd;
            cd["name"] = c.name;
            cd["value"] = c.value;
            cd["target"] = c.target;
            cd["pass"] = c.pass;
            checks.append(cd);
            all_pass = all_pass && c.pass;
          }
          d["checks"] = checks;
          d["pass"] = all_pass;
          return d;
        },
        py::arg("g"), py::arg("a"), py::arg("b"), py::arg("k_max") = 256);

  // stationary phase
  m.def("sphase_verify",
        [](double alpha, const std::string& parity, int n,
           const std::string& sign, double kmax) {
          swrt::OscSumSpec spec;
          spec.alpha = alpha;
          spec.sign = sign == "-" ? swrt::SumSign::minus : swrt::SumSign::plus;
          const double cap =
              (spec.sign == swrt::SumSign::plus ? 2 * M_PI : M_PI) /
              std::abs(alpha);
          const int power = 2 * n + (parity == "odd" ? 1 : 0);
          const swrt::TestAmplitude f(power, 1.0, 0.85 * cap);
          std::vector<double> ks;
          for (double k = kmax; k >= kmax / 100; k /= 2) ks.push_back(k);
          std::sort(ks.begin(), ks.end());
          const auto rep = swrt::verify_expansion(spec, f, ks);
          py::dict d;
          d["predicted_exponent"] = rep.prediction.exponent;
          d["measured_exponent"] = rep.measured_exponent;
          d["measured_c0"] = rep.measured_c0;
          d["predicted_c0"] = rep.prediction.c0;
          d["c0_rel_deviation"] = rep.c0_rel_deviation;
          d["tail_max_abs"] = rep.tail_max_abs;
          d["pass"] = rep.pass;
          return d;
        },
        py::arg("alpha"), py::arg("parity") = "even", py::arg("n") = 0,
        py::arg("sign") = "+", py::arg("k_max") = 10000.0);
}
