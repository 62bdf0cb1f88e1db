// Command-line front end. Every command prints one JSON record per line
// (or a CSV table with --format csv) and exits with
//   0 ok, 2 parameter rejection or inadmissible function,
//   3 quadrature non-convergence, 4 configuration error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fhardy/fhardy.hpp"
#include "fhardy/io.hpp"

using namespace fhardy;

namespace {

enum ExitCode { kOk = 0, kParameter = 2, kNonConvergence = 3, kConfig = 4 };

struct Common {
  std::string format = "json";
  double tol = 1e-8;
};

struct Outcome {
  Json results;
  // optional table for --format csv
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::non_convergence: return kNonConvergence;
    case ErrorKind::config_error: return kConfig;
    default: return kParameter;
  }
}

QuadConfig config_with(double tol) {
  QuadConfig cfg;
  cfg.rel_tol = tol;
  return cfg;
}

// Runs one command body, prints its record and returns the exit code.
int emit(const std::string& command, const Json& inputs, const Common& common,
         const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Json record{{"command", command}, {"inputs", inputs}};
  int code = kOk;
  Outcome outcome;
  try {
    outcome = body();
    record["results"] = outcome.results;
    record["status"] = "ok";
  } catch (const NonConvergence& e) {
    code = kNonConvergence;
    record["results"] = Json{{"error_kind", to_string(e.kind())},
                             {"message", e.what()},
                             {"best_estimate", to_json(e.best_estimate())}};
    record["status"] = "error";
  } catch (const Error& e) {
    code = exit_code_for(e.kind());
    record["results"] = Json{{"error_kind", to_string(e.kind())}, {"message", e.what()}};
    record["status"] = "error";
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  record["timing_ms"] = ms;

  if (common.format == "csv" && code == kOk) {
    if (outcome.header.empty()) {
      std::cout << "name,value\n";
      for (auto it = outcome.results.begin(); it != outcome.results.end(); ++it)
        if (it.value().is_number()) std::cout << csv_field(it.key()) << "," << dump_json(it.value()) << "\n";
    } else {
      for (std::size_t i = 0; i < outcome.header.size(); ++i)
        std::cout << (i ? "," : "") << csv_field(outcome.header[i]);
      std::cout << "\n";
      for (const auto& row : outcome.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_field(row[i]);
        std::cout << "\n";
      }
    }
  } else {
    std::cout << dump_json(record) << "\n";
  }
  if (code != kOk) std::cerr << record["results"]["message"].get<std::string>() << "\n";
  return code;
}

Json quotient_json(const QuotientReport& q) {
  return Json{{"energy", to_json(q.energy)},
              {"hardy_term", to_json(q.hardy_term)},
              {"quotient", q.quotient},
              {"sharp_constant", q.sharp_constant},
              {"margin", q.margin},
              {"error_budget", q.error_budget}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical checks of the sharp fractional Hardy inequality on the half-space:\n"
      "the Gagliardo p-energy of u with smoothness s bounds D_{N,p,s} times the\n"
      "integral of |u|^p x_N^(-ps), with the sharp constant D, its ground-state\n"
      "remainder, the Euler-Lagrange identity of x_N^(-(1-ps)/p), and sharpness."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Common common;
  int dim = 1;
  double p = 2.0, s = 0.25, x = 1.0, m = 1.0, lambda = 1.0;
  std::string profile_text = "hat";
  std::vector<double> eps_grid{0.4, 0.2, 0.1, 0.05};
  std::vector<double> x_points;
  std::vector<int> n_grid{2, 4, 8};
  std::uint64_t samples = 1'000'000, seed = 1;
  std::string config_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--tol", common.tol, "Relative quadrature tolerance")->capture_default_str();
  };
  auto add_params = [&](CLI::App* sub, bool with_dim) {
    if (with_dim) sub->add_option("--N", dim, "Dimension N >= 1")->capture_default_str();
    sub->add_option("--p", p, "Integrability exponent p >= 1")->capture_default_str();
    sub->add_option("--s", s, "Smoothness s in (0,1), p*s != 1")->capture_default_str();
  };
  auto add_profile = [&](CLI::App* sub) {
    sub->add_option("--profile", profile_text,
                    "Profile: hat[:left,peak,right,height], trapezoid[:plateau_end,end,height],\n"
                    "bump[:center,half_width,height], ground_state[:eps],\n"
                    "piecewise:knots;values[;boundary_power]")
        ->capture_default_str();
  };

  auto* constant = app.add_subcommand(
      "constant", "Sharp constant D_{N,p,s}: Gamma-ratio prefactor times the one-dimensional\n"
                  "integral of |1 - r^((ps-1)/p)|^p (1-r)^(-1-ps) over (0,1)");
  add_params(constant, true);
  add_common(constant);

  auto* cp = app.add_subcommand(
      "cp", "Remainder constant c_p = min over 0 < tau < 1/2 of (1-tau)^p - tau^p + p tau^(p-1), p >= 2");
  cp->add_option("--p", p, "Exponent p >= 2")->capture_default_str();
  add_common(cp);

  auto* quotient = app.add_subcommand(
      "quotient", "Rayleigh quotient of a half-line profile: Gagliardo energy over the Hardy term,\n"
                  "compared with the sharp constant (the Hardy inequality in one dimension)");
  add_params(quotient, false);
  add_profile(quotient);
  quotient->add_option("--lambda", lambda, "Evaluate the dilated profile u(lambda x)")->capture_default_str();
  add_common(quotient);

  auto* gsr = app.add_subcommand(
      "gsr", "Ground-state remainder: E[u] - D H[u] against c_p times the weighted energy of\n"
             "v = x^((1-ps)/p) u (equality for p = 2)");
  add_params(gsr, false);
  add_profile(gsr);
  add_common(gsr);

  auto* el = app.add_subcommand(
      "el", "Euler-Lagrange identity for the virtual ground state x^(-(1-ps)/p): twice the\n"
            "principal value against D x^(-ps) omega(x)^(p-1)");
  add_params(el, false);
  el->add_option("--x", x_points, "Evaluation points (default 1)");
  add_common(el);

  auto* sharp = app.add_subcommand(
      "sharpness", "Optimality of the constant: margins of the ground-state family for N = 1,\n"
                   "Monte Carlo quotients of chi_n(|x'|) phi(x_N) against A times the 1D quotient for N >= 2");
  add_params(sharp, true);
  sharp->add_option("--eps", eps_grid, "Decreasing eps grid (N = 1)")->capture_default_str();
  sharp->add_option("--n", n_grid, "Increasing cutoff scales (N >= 2)")->capture_default_str();
  sharp->add_option("--samples", samples, "Monte Carlo samples per scale")->capture_default_str();
  sharp->add_option("--seed", seed, "Random seed")->capture_default_str();
  add_profile(sharp);
  add_common(sharp);

  auto* reduce = app.add_subcommand(
      "reduce", "Tangential kernel reduction: integral over R^(N-1) of (|y'|^2 + m^2)^(-(N+ps)/2)\n"
                "by radial quadrature against its Gamma-function closed form, N >= 2");
  add_params(reduce, true);
  reduce->add_option("--m", m, "Normal distance m > 0")->capture_default_str();
  add_common(reduce);

  auto* campaign = app.add_subcommand("campaign", "Run a verification campaign described by a JSON file");
  campaign->add_option("--config", config_path, "Campaign file")->required();
  campaign->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParameter;
  }

  if (*constant) {
    Json in{{"N", dim}, {"p", p}, {"s", s}, {"tol", common.tol}};
    return emit("constant", in, common, [&] {
      const HardyParams hp = make_params(dim, p, s);
      QuadConfig cfg = constant_config();
      cfg.rel_tol = std::min(common.tol, cfg.rel_tol);
      const SharpConstant c = hardy_constant(hp, cfg);
      const double a = reduction_factor(hp);
      return Outcome{Json{{"value", c.value},
                          {"prefactor", c.prefactor},
                          {"one_d_integral", c.one_d_integral},
                          {"error_estimate", c.integral_error},
                          {"reduction_factor", a},
                          {"value_1d", 2.0 * c.one_d_integral},
                          {"value_via_reduction", 2.0 * a * c.one_d_integral},
                          {"regime", to_string(hp.regime())}}};
    });
  }
  if (*cp) {
    return emit("cp", Json{{"p", p}}, common, [&] {
      const GsrConstant c = gsr_constant(p);
      return Outcome{Json{{"value", c.value}, {"minimizer_tau", c.minimizer_tau}}};
    });
  }
  if (*quotient) {
    Json in{{"p", p}, {"s", s}, {"profile", profile_text}, {"lambda", lambda}, {"tol", common.tol}};
    return emit("quotient", in, common, [&] {
      const HardyParams hp = make_params(1, p, s);
      Profile1D u = make_profile(parse_profile(profile_text), hp);
      if (lambda != 1.0) u = u.dilated(lambda);
      Json r = quotient_json(rayleigh_quotient(u, hp, config_with(common.tol)));
      r["profile_name"] = u.name();
      return Outcome{r};
    });
  }
  if (*gsr) {
    Json in{{"p", p}, {"s", s}, {"profile", profile_text}, {"tol", common.tol}};
    return emit("gsr", in, common, [&] {
      const HardyParams hp = make_params(1, p, s);
      const Profile1D u = make_profile(parse_profile(profile_text), hp);
      const GsrReport g = gsr_residual(u, hp, config_with(common.tol));
      const bool within = p == 2.0 ? std::abs(g.slack) <= 10.0 * g.error_budget
                                   : g.slack >= -10.0 * g.error_budget;
      return Outcome{Json{{"lhs_gap", g.lhs_gap},
                          {"weighted_energy", to_json(g.weighted_energy)},
                          {"c_p", g.c_p},
                          {"slack", g.slack},
                          {"error_budget", g.error_budget},
                          {"within_budget", within}}};
    });
  }
  if (*el) {
    if (x_points.empty()) x_points = {x};
    Json in{{"p", p}, {"s", s}, {"x", x_points}, {"tol", common.tol}};
    return emit("el", in, common, [&] {
      const HardyParams hp = make_params(1, p, s);
      Outcome out;
      out.header = {"x", "lhs", "rhs", "relative_error", "error_estimate"};
      Json points = Json::array();
      double worst = 0.0;
      for (double xi : x_points) {
        const ElIdentityReport e = el_identity(xi, hp, config_with(common.tol));
        points.push_back(Json{{"x", xi},
                              {"lhs", e.lhs.value},
                              {"rhs", e.rhs},
                              {"relative_error", e.relative_error},
                              {"error_estimate", e.lhs.error_estimate},
                              {"tail_cut", e.tail_cut}});
        out.rows.push_back({num(xi), num(e.lhs.value), num(e.rhs), num(e.relative_error),
                            num(e.lhs.error_estimate)});
        worst = std::max(worst, e.relative_error);
      }
      out.results = Json{{"points", points}, {"relative_error", worst}};
      return out;
    });
  }
  if (*sharp) {
    Json in{{"N", dim}, {"p", p}, {"s", s}, {"tol", common.tol}};
    if (dim == 1) in["eps"] = eps_grid;
    else {
      in["n"] = n_grid;
      in["samples"] = samples;
      in["seed"] = seed;
      in["profile"] = profile_text;
    }
    return emit("sharpness", in, common, [&] {
      const HardyParams hp = make_params(dim, p, s);
      Outcome out;
      Json curve = Json::array();
      if (dim == 1) {
        out.header = {"eps", "quotient", "margin", "error_budget"};
        for (const auto& pt : sharpness_curve_1d(hp, eps_grid, config_with(common.tol))) {
          curve.push_back(Json{{"eps", pt.eps}, {"quotient", pt.quotient}, {"margin", pt.margin},
                               {"error_budget", pt.error_budget}});
          out.rows.push_back({num(pt.eps), num(pt.quotient), num(pt.margin), num(pt.error_budget)});
        }
        out.results = Json{{"sharp_constant", hardy_constant(hp).value}, {"curve", curve}};
      } else {
        const Profile1D u = make_profile(parse_profile(profile_text), hp);
        out.header = {"n", "quotient", "standard_error", "target"};
        const auto pts = sharpness_curve_nd(hp, n_grid, u, samples, seed, config_with(common.tol));
        for (const auto& pt : pts) {
          curve.push_back(Json{{"n", pt.n}, {"quotient", pt.quotient},
                               {"standard_error", pt.standard_error}, {"target", pt.target}});
          out.rows.push_back({std::to_string(pt.n), num(pt.quotient), num(pt.standard_error), num(pt.target)});
        }
        out.results = Json{{"sharp_constant", hardy_constant(hp).value},
                           {"reduction_factor", reduction_factor(hp)},
                           {"curve", curve}};
      }
      return out;
    });
  }
  if (*reduce) {
    Json in{{"N", dim}, {"p", p}, {"s", s}, {"m", m}, {"tol", common.tol}};
    return emit("reduce", in, common, [&] {
      const HardyParams hp = make_params(dim, p, s);
      QuadConfig cfg = config_with(std::min(common.tol, 1e-12));
      cfg.abs_tol = 1e-300;
      const KernelReduction kr = kernel_reduction_integral(hp, m, cfg);
      return Outcome{Json{{"quadrature", to_json(kr.quadrature)},
                          {"closed_form", kr.closed_form},
                          {"relative_error", std::abs(kr.quadrature.value / kr.closed_form - 1.0)},
                          {"reduction_factor", reduction_factor(hp)}}};
    });
  }
  if (*campaign) {
    return emit("campaign", Json{{"config", config_path}}, common, [&] {
      const CampaignSpec spec = load_campaign(config_path);
      const VerificationReport report = run_campaign(spec);
      Outcome out;
      out.results = to_json(report);
      out.header = {"check", "N", "p", "s", "subject", "status", "error_budget", "message"};
      for (const auto& r : report.records)
        out.rows.push_back({to_string(r.check), std::to_string(r.dim), num(r.p), num(r.s), r.subject,
                            r.status, num(r.error_budget), r.message});
      return out;
    });
  }
  return kOk;
}
