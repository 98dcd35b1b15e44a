#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "swrt/harness.hpp"
#include "swrt/moduli.hpp"
#include "swrt/precision.hpp"
#include "swrt/stationary.hpp"
#include "swrt/tqft.hpp"
#include "swrt/verlinde.hpp"
#include "swrt/xi.hpp"

namespace {

using json = nlohmann::ordered_json;
constexpr int kSchemaVersion = 1;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json rational_json(const swrt::Rational& r) {
  return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

void emit(const json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open output file " + path);
    std::fputs(text.c_str(), f);
    std::fclose(f);
  }
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open output file " + path);
    std::fputs(text.c_str(), f);
    std::fclose(f);
  }
}

struct KRange {
  int lo = 0, hi = 0, stride = 1;
};

KRange parse_k_range(const std::string& s) {
  KRange r;
  const auto c1 = s.find(':');
  if (c1 == std::string::npos)
    throw CLI::ValidationError("--k-range", "expected lo:hi[:stride]");
  r.lo = std::stoi(s.substr(0, c1));
  const auto rest = s.substr(c1 + 1);
  const auto c2 = rest.find(':');
  if (c2 == std::string::npos) {
    r.hi = std::stoi(rest);
  } else {
    r.hi = std::stoi(rest.substr(0, c2));
    r.stride = std::stoi(rest.substr(c2 + 1));
  }
  if (r.lo < 2 || r.hi < r.lo || r.stride < 1)
    throw CLI::ValidationError("--k-range", "bad range");
  return r;
}

json component_json(const swrt::Component& x) {
  json j;
  j["class"] = swrt::class_name(x.cls);
  if (x.point_tag) j["point"] = "p" + std::to_string(x.point_tag);
  j["r"] = rational_json(x.r);
  j["angle_p"] = x.angle_p;
  j["angle_q"] = x.angle_q;
  j["cs_over_2pi"] = rational_json(x.cs_frac);
  j["cs_phase"] = x.cs_phase;
  j["n"] = x.exponent_n;
  j["a0_abs"] = std::abs(x.a0);
  if (x.has_b0) {
    j["m"] = x.exponent_m;
    j["b0_abs"] = std::abs(x.b0);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"WRT invariants of Seifert manifolds and their asymptotics"};
  app.require_subcommand(1);
  app.fallthrough();  // accept -o after the subcommand as well
  std::string out_path;
  app.add_option("-o,--output", out_path, "write the artifact to a file");

  // verlinde g k l
  int vg = 1, vk = 2, vl = 1;
  auto* cmd_verlinde = app.add_subcommand("verlinde", "Verlinde number N_l^{g,k}");
  cmd_verlinde->add_option("g", vg)->required();
  cmd_verlinde->add_option("k", vk)->required();
  cmd_verlinde->add_option("l", vl)->required();

  // pm m
  int pm_m = 1;
  auto* cmd_pm = app.add_subcommand("pm", "the polynomial P_m as a JSON monomial list");
  cmd_pm->add_option("m", pm_m)->required();

  // pgm g
  int pgm_g = 1;
  auto* cmd_pgm = app.add_subcommand("pgm", "the family P_{g,m} with its 2pi exponent");
  cmd_pgm->add_option("g", pgm_g)->required();

  // xi m k
  int xi_m = 0, xi_k = 2;
  auto* cmd_xi = app.add_subcommand("xi", "grid values of Xi_{m,k} as CSV");
  cmd_xi->add_option("m", xi_m)->required();
  cmd_xi->add_option("k", xi_k)->required();

  // zk g a b --k-range lo:hi[:stride]
  int zg = 2;
  long long za = 1, zb = 1;
  std::string zrange = "3:40";
  auto* cmd_zk = app.add_subcommand("zk", "the WRT series as CSV (k, Re, Im)");
  cmd_zk->add_option("g", zg)->required();
  cmd_zk->add_option("a", za)->required();
  cmd_zk->add_option("b", zb)->required();
  cmd_zk->add_option("--k-range", zrange, "lo:hi[:stride]");

  // components g a b
  int cg = 2;
  long long ca = 1, cb = 1;
  auto* cmd_comp = app.add_subcommand("components", "character-variety components");
  cmd_comp->add_option("g", cg)->required();
  cmd_comp->add_option("a", ca)->required();
  cmd_comp->add_option("b", cb)->required();

  // verify g a b --k-max N
  int wg = 2;
  long long wa = 1, wb = 1;
  int wkmax = 256;
  auto* cmd_verify = app.add_subcommand("verify", "fit the series against the prediction");
  cmd_verify->add_option("g", wg)->required();
  cmd_verify->add_option("a", wa)->required();
  cmd_verify->add_option("b", wb)->required();
  cmd_verify->add_option("--k-max", wkmax, "largest level (range is k-max/8 .. k-max)");

  // sphase --alpha A --parity even|odd --n N --sign +|-
  double sp_alpha = 1.0;
  std::string sp_parity = "even", sp_sign = "+";
  int sp_n = 0;
  double sp_kmax = 10000;
  auto* cmd_sphase = app.add_subcommand("sphase", "discrete stationary-phase check");
  cmd_sphase->add_option("--alpha", sp_alpha)->required();
  cmd_sphase->add_option("--parity", sp_parity)->check(CLI::IsMember({"even", "odd"}));
  cmd_sphase->add_option("--n", sp_n);
  cmd_sphase->add_option("--sign", sp_sign)->check(CLI::IsMember({"+", "-"}));
  cmd_sphase->add_option("--k-max", sp_kmax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_verlinde) {
      const long long n = swrt::verlinde_number(vg, vk, vl);
      emit_text(std::to_string(n) + "\n", out_path);
      return 0;
    }

    if (*cmd_pm) {
      const auto& cert = swrt::pm_inductive(pm_m);
      json mono = json::array();
      for (const auto& [key, c] : cert.poly.terms())
        mono.push_back(json{{"q", key.first},
                            {"p", key.second},
                            {"num", c.num().get_str()},
                            {"den", c.den().get_str()}});
      json j{{"schema_version", kSchemaVersion}, {"m", pm_m}, {"monomials", mono}};
      emit(j, out_path);
      return 0;
    }

    if (*cmd_pgm) {
      const auto& fam = swrt::build_family(pgm_g);
      json polys = json::array();
      for (int m = 0; m < pgm_g; ++m) {
        json coeffs = json::array();
        for (const auto& c : fam.polys[static_cast<std::size_t>(m)])
          coeffs.push_back(rational_json(c));
        polys.push_back(json{{"m", m},
                             {"coeffs", coeffs},
                             {"lambda", rational_json(fam.lambda[static_cast<std::size_t>(m)])}});
      }
      json j{{"schema_version", kSchemaVersion},
             {"g", pgm_g},
             {"two_pi_exponent", fam.two_pi_exponent},
             {"polys", polys}};
      emit(j, out_path);
      return 0;
    }

    if (*cmd_xi) {
      const auto grid = swrt::xi_direct(xi_m, xi_k);
      std::string text = "j,x,re,im\n";
      for (int j = 0; j < 2 * xi_k; ++j) {
        const auto v = grid.at(j);
        text += std::to_string(j) + "," +
                fmt17(static_cast<double>(j) / xi_k) + "," + fmt17(v.real()) +
                "," + fmt17(v.imag()) + "\n";
      }
      emit_text(text, out_path);
      return 0;
    }

    if (*cmd_zk) {
      const KRange r = parse_k_range(zrange);
      const swrt::SeifertData s(zg, za, zb);
      const auto sample = swrt::compute_series(s, r.lo, r.hi, r.stride);
      std::string text = "k,re,im\n";
      for (std::size_t i = 0; i < sample.ks.size(); ++i)
        text += std::to_string(sample.ks[i]) + "," + fmt17(sample.z[i].real()) +
                "," + fmt17(sample.z[i].imag()) + "\n";
      emit_text(text, out_path);
      return 0;
    }

    if (*cmd_comp) {
      const swrt::SeifertData s(cg, ca, cb);
      const auto pe = swrt::predicted_expansion(s);
      json comps = json::array();
      for (const auto& x : pe.components) comps.push_back(component_json(x));
      json j{{"schema_version", kSchemaVersion},
             {"g", cg},
             {"a", ca},
             {"b", cb},
             {"c", s.c},
             {"d", s.d},
             {"components", comps}};
      emit(j, out_path);
      return 0;
    }

    if (*cmd_verify) {
      const swrt::SeifertData s(wg, wa, wb);
      const int kmin = std::max(8, wkmax / 8);
      const auto sample = swrt::compute_series(s, kmin, wkmax, 1);
      const auto rep = swrt::fit_expansion(sample, swrt::predicted_expansion(s));
      const auto checks = swrt::evaluate_main_theorem_checks(rep);
      json j{{"schema_version", kSchemaVersion},
             {"g", wg},
             {"a", wa},
             {"b", wb},
             {"k_min", rep.k_min},
             {"k_max", rep.k_max},
             {"theta1", rep.theta1},
             {"theta0", rep.theta0},
             {"rel_residual", rep.rel_residual},
             {"condition_number", rep.condition_number},
             {"dominant_exponent_measured", rep.dominant_exponent_measured},
             {"dominant_exponent_predicted", rep.dominant_exponent_predicted},
             {"residual_exponent_after_integer_layer",
              rep.residual_exponent_after_integer_layer},
             {"residual_exponent_target", rep.residual_exponent_target}};
      json comps = json::array();
      for (const auto& cf : rep.components) {
        json c = component_json(cf.component);
        c["amplitude_abs"] = std::abs(cf.amplitude);
        c["amplitude_ratio"] = cf.amplitude_ratio;
        if (cf.phase_checked) {
          c["phase_refined"] = cf.phase_refined;
          c["phase_deviation"] = cf.phase_deviation;
        }
        if (cf.component.has_b0) {
          c["b_amplitude_abs"] = std::abs(cf.b_amplitude);
          c["b_ratio"] = cf.b_ratio;
        }
        comps.push_back(c);
      }
      j["components"] = comps;
      json checks_json = json::array();
      bool all_pass = true;
      for (const auto& c : checks) {
        checks_json.push_back(json{{"name", c.name},
                                   {"value", c.value},
                                   {"target", c.target},
                                   {"pass", c.pass}});
        all_pass = all_pass && c.pass;
      }
      j["checks"] = checks_json;
      j["pass"] = all_pass;
      emit(j, out_path);
      return all_pass ? 0 : 1;
    }

    if (*cmd_sphase) {
      swrt::OscSumSpec spec;
      spec.alpha = sp_alpha;
      spec.sign = sp_sign == "+" ? swrt::SumSign::plus : swrt::SumSign::minus;
      const double cap = (spec.sign == swrt::SumSign::plus ? 2 * M_PI : M_PI) /
                         std::abs(sp_alpha);
      const int power = 2 * sp_n + (sp_parity == "odd" ? 1 : 0);
      const swrt::TestAmplitude f(power, 1.0, 0.85 * cap);
      std::vector<double> ks;
      for (double k = sp_kmax; k >= sp_kmax / 100; k /= 2) ks.push_back(k);
      std::sort(ks.begin(), ks.end());
      const auto rep = swrt::verify_expansion(spec, f, ks);
      json j{{"schema_version", kSchemaVersion},
             {"alpha", sp_alpha},
             {"parity", sp_parity},
             {"n", sp_n},
             {"sign", sp_sign}};
      switch (rep.prediction.kind) {
        case swrt::LeadingKind::ladder: j["prediction_kind"] = "ladder"; break;
        case swrt::LeadingKind::exponent_only:
          j["prediction_kind"] = "exponent_only";
          break;
        default: j["prediction_kind"] = "rapid_decay";
      }
      j["predicted_exponent"] = rep.prediction.exponent;
      if (rep.prediction.kind == swrt::LeadingKind::ladder) {
        j["predicted_c0_abs"] = std::abs(rep.prediction.c0);
        j["predicted_c0_arg"] = std::arg(rep.prediction.c0);
        j["measured_c0_abs"] = std::abs(rep.measured_c0);
        j["measured_c0_arg"] = std::arg(rep.measured_c0);
        j["c0_rel_deviation"] = rep.c0_rel_deviation;
      }
      j["measured_exponent"] = rep.measured_exponent;
      j["tail_max_abs"] = rep.tail_max_abs;
      j["pass"] = rep.pass;
      emit(j, out_path);
      return rep.pass ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const swrt::IntegrityError& e) {
    std::fprintf(stderr, "integrity error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
