#pragma once

// Verification campaigns: parameter sweeps over the inequality, the
// remainder identity, the Euler-Lagrange identity, sharpness curves and the
// kernel reduction, collected into a deterministic report.

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fhardy/constants.hpp"
#include "fhardy/energies.hpp"
#include "fhardy/errors.hpp"
#include "fhardy/monte_carlo.hpp"
#include "fhardy/params.hpp"
#include "fhardy/profiles.hpp"
#include "fhardy/quadrature.hpp"

namespace fhardy {

inline constexpr const char* kVersion = "0.1.0";

/// Shortest %g rendering used in record labels.
inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

enum class CheckKind { inequality, gsr, el, sharpness_1d, sharpness_nd, reduction };

inline const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::inequality: return "INEQUALITY";
    case CheckKind::gsr: return "GSR";
    case CheckKind::el: return "EL";
    case CheckKind::sharpness_1d: return "SHARPNESS_1D";
    case CheckKind::sharpness_nd: return "SHARPNESS_ND";
    case CheckKind::reduction: return "REDUCTION";
  }
  return "UNKNOWN";
}

inline std::optional<CheckKind> parse_check(const std::string& name) {
  for (CheckKind k : {CheckKind::inequality, CheckKind::gsr, CheckKind::el, CheckKind::sharpness_1d,
                      CheckKind::sharpness_nd, CheckKind::reduction})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

/// A profile by catalog name with optional arguments.
///   hat [left, peak, right, height]        default 0, 1, 2, 1
///   trapezoid [plateau_end, end, height]   default 1, 2, 1
///   bump [center, half_width, height]      default 1, 0.5, 1
///   ground_state [eps]                     default 0.2
///   piecewise: knots, values, boundary_power
struct ProfileSpec {
  std::string kind = "hat";
  std::vector<double> args;
  std::vector<double> knots;
  std::vector<double> values;
  std::optional<double> boundary_power;
};

inline Profile1D make_profile(const ProfileSpec& spec, const HardyParams& params) {
  const auto& a = spec.args;
  auto arg = [&](std::size_t i, double fallback) { return i < a.size() ? a[i] : fallback; };
  auto check_count = [&](std::size_t max_args) {
    if (a.size() > max_args)
      throw ParameterError(ErrorKind::invalid_argument, "too many arguments for profile " + spec.kind);
  };
  if (spec.kind == "hat") {
    check_count(4);
    return Profile1D::hat(arg(0, 0.0), arg(1, 1.0), arg(2, 2.0), arg(3, 1.0));
  }
  if (spec.kind == "trapezoid") {
    check_count(3);
    return Profile1D::trapezoid(arg(0, 1.0), arg(1, 2.0), arg(2, 1.0));
  }
  if (spec.kind == "bump") {
    check_count(3);
    return Profile1D::smooth_bump(arg(0, 1.0), arg(1, 0.5), arg(2, 1.0));
  }
  if (spec.kind == "ground_state") {
    check_count(1);
    return Profile1D::ground_state_family(arg(0, 0.2), params);
  }
  if (spec.kind == "piecewise") return Profile1D::custom_piecewise(spec.knots, spec.values, spec.boundary_power);
  if (spec.kind == "zero") return Profile1D::zero();
  throw ParameterError(ErrorKind::invalid_argument, "unknown profile kind: " + spec.kind);
}

/// Random admissible CUSTOM_PIECEWISE profile: 1 to 4 interior knots with
/// gaps in [0.1, 1], values in [-1, 1], and on half of the draws a boundary
/// power b with p b - ps > -1 + 0.1 p. Supercritical draws vanish at 0.
inline Profile1D random_profile(SplitMix64& rng, const HardyParams& params) {
  const int cells = rng.integer(2, 5);
  std::vector<double> knots{0.0}, values;
  for (int i = 0; i < cells; ++i) knots.push_back(knots.back() + rng.uniform(0.1, 1.0));
  const bool super = params.regime() == Regime::supercritical;
  values.push_back(super ? 0.0 : rng.uniform(-1.0, 1.0));
  for (int i = 1; i < cells; ++i) values.push_back(rng.uniform(-1.0, 1.0));
  values.push_back(0.0);
  std::optional<double> power;
  if (rng.uniform() < 0.5) {
    const double lowest = -params.alpha() + 0.1;
    power = rng.uniform(lowest, std::max(lowest, 0.0) + 2.0);
  }
  return Profile1D::custom_piecewise(knots, values, power);
}

struct Thresholds {
  double inequality_rel_slack = 1e-3;
  double identity_safety = 10.0;
  double identity_rel_cap = 1e-3;
  double el_rel_tol = 1e-5;
  double sharpness_contraction = 0.25;
  double nd_target_rel = 0.10;
  double nd_sigmas = 3.0;
  double reduction_rel_tol = 1e-8;
  double scaling_rel_tol = 1e-10;
};

struct SharpnessPoint {
  double eps;
  double quotient;
  double margin;
  double error_budget;
};

/// Quotients of the ground-state family along a decreasing eps grid.
inline std::vector<SharpnessPoint> sharpness_curve_1d(const HardyParams& params,
                                                      const std::vector<double>& eps_grid,
                                                      const QuadConfig& cfg) {
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > 0.0))
      throw ParameterError(ErrorKind::invalid_argument, "eps grid must be positive");
    if (i > 0 && !(eps_grid[i] < eps_grid[i - 1]))
      throw ParameterError(ErrorKind::invalid_argument, "eps grid must be strictly decreasing");
  }
  const HardyParams one = params.with_dim(1);
  std::vector<SharpnessPoint> out;
  for (double eps : eps_grid) {
    const QuotientReport q = rayleigh_quotient(Profile1D::ground_state_family(eps, one), one, cfg);
    out.push_back({eps, q.quotient, q.margin, q.error_budget});
  }
  return out;
}

struct NdSharpnessPoint {
  int n;
  double quotient;
  double standard_error;
  double target;
};

/// Monte Carlo quotients of chi_n(|x'|) phi(x_N) against A times the 1D quotient of phi.
inline std::vector<NdSharpnessPoint> sharpness_curve_nd(const HardyParams& params,
                                                        const std::vector<int>& n_grid,
                                                        const Profile1D& profile,
                                                        std::uint64_t samples, std::uint64_t seed,
                                                        const QuadConfig& cfg = {}) {
  if (params.dim() < 2)
    throw ParameterError(ErrorKind::dimension_out_of_range, "sharpness in N >= 2 needs dim >= 2");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1) throw ParameterError(ErrorKind::invalid_argument, "cutoff scales must be >= 1");
    if (i > 0 && !(n_grid[i] > n_grid[i - 1]))
      throw ParameterError(ErrorKind::invalid_argument, "cutoff scales must increase");
  }
  const double target = reduction_factor(params) * rayleigh_quotient(profile, params, cfg).quotient;
  std::vector<NdSharpnessPoint> out;
  for (int n : n_grid) {
    const ProductFunction f = sharpness_sequence(n, profile, params.dim());
    const EnergyReport energy = monte_carlo_energy(f, params, samples, seed, n + 1.0);
    const EnergyReport hardy = product_hardy_term(f, params, cfg);
    out.push_back({n, energy.value / hardy.value, energy.error_estimate / hardy.value, target});
  }
  return out;
}

struct CampaignSpec {
  std::vector<int> dims{1};
  std::vector<double> ps{2.0};
  std::vector<double> ss{0.25};
  std::vector<ProfileSpec> profiles{ProfileSpec{}};
  int random_profiles = 0;
  std::vector<CheckKind> checks{CheckKind::inequality};
  QuadConfig quadrature{};
  std::uint64_t seed = 1;
  Thresholds thresholds{};
  std::vector<double> eps_grid{0.4, 0.2, 0.1, 0.05};
  std::vector<double> el_points{0.5, 1.0, 2.0};
  std::vector<int> n_grid{2, 4, 8};
  std::uint64_t samples = 1'000'000;
  std::vector<double> m_values{1.0, 2.0};

  void validate() const {
    try {
      quadrature.validate();
    } catch (const ParameterError& e) {
      throw ConfigError(e.what());
    }
    if (random_profiles < 0) throw ConfigError("random_profiles must be nonnegative");
    if (samples == 0) throw ConfigError("samples must be positive");
    for (int n : dims)
      if (n < 1) throw ConfigError("grid dimensions must be >= 1");
  }
};

struct NamedValue {
  std::string name;
  double value;
};

struct CheckRecord {
  CheckKind check;
  int dim;
  double p;
  double s;
  std::string subject;  // profile name, evaluation point, ...
  std::string status;   // PASS, FAIL, SKIPPED, ERROR
  std::string message;
  std::vector<NamedValue> values;
  double error_budget = 0.0;

  bool passed() const { return status == "PASS"; }
};

struct CampaignSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int errors = 0;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  std::vector<std::string> notices;
  CampaignSummary summary;
  std::uint64_t seed = 0;
  QuadConfig quadrature;
  std::string version = kVersion;
};

namespace detail {

inline void finish_record(CheckRecord& r, bool ok) { r.status = ok ? "PASS" : "FAIL"; }

inline void check_inequality(const Profile1D& u, const HardyParams& hp, const CampaignSpec& spec,
                             CheckRecord& r) {
  const Admissibility a = admissibility_check(u, hp);
  if (!a) {
    r.status = "SKIPPED";
    r.message = a.diagnostic;
    return;
  }
  const QuotientReport q = rayleigh_quotient(u, hp, spec.quadrature);
  const double bound = q.sharp_constant * (1.0 - spec.thresholds.inequality_rel_slack);
  r.values = {{"energy", q.energy.value},   {"hardy_term", q.hardy_term.value},
              {"quotient", q.quotient},     {"sharp_constant", q.sharp_constant},
              {"margin", q.margin},         {"lower_bound", bound}};
  r.error_budget = q.error_budget;
  finish_record(r, q.quotient >= bound);
  if (!r.passed()) r.message = "quotient >= D (1 - slack) violated";
}

inline void check_gsr(const Profile1D& u, const HardyParams& hp, const CampaignSpec& spec,
                      CheckRecord& r) {
  if (hp.p() < 2.0) {
    r.status = "SKIPPED";
    r.message = "remainder identity needs p >= 2";
    return;
  }
  const Admissibility a = admissibility_check(u, hp);
  if (!a) {
    r.status = "SKIPPED";
    r.message = a.diagnostic;
    return;
  }
  const GsrReport g = gsr_residual(u, hp, spec.quadrature);
  const EnergyReport energy = gagliardo_energy_1d(u, hp, spec.quadrature);
  r.values = {{"lhs_gap", g.lhs_gap},
              {"weighted_energy", g.weighted_energy.value},
              {"c_p", g.c_p},
              {"slack", g.slack},
              {"energy", energy.value}};
  r.error_budget = g.error_budget;
  const Thresholds& t = spec.thresholds;
  bool ok;
  if (hp.p() == 2.0) {
    ok = std::abs(g.slack) <= t.identity_safety * g.error_budget &&
         std::abs(g.slack) <= t.identity_rel_cap * std::max(energy.value, 1.0);
    if (!ok) r.message = "E - D H = E_w[v] violated";
  } else {
    ok = g.slack >= -t.identity_safety * g.error_budget;
    if (!ok) r.message = "E - D H >= c_p E_w[v] violated";
  }
  finish_record(r, ok);
}

inline void check_el(double x, const HardyParams& hp, const CampaignSpec& spec, CheckRecord& r) {
  const ElIdentityReport e = el_identity(x, hp, spec.quadrature);
  r.values = {{"x", x}, {"lhs", e.lhs.value}, {"rhs", e.rhs}, {"relative_error", e.relative_error}};
  r.error_budget = e.lhs.error_estimate;
  finish_record(r, e.relative_error <= spec.thresholds.el_rel_tol);
  if (!r.passed()) r.message = "Euler-Lagrange identity relative error above tolerance";
}

inline void check_sharpness_1d(const HardyParams& hp, const CampaignSpec& spec, CheckRecord& r) {
  const auto curve = sharpness_curve_1d(hp, spec.eps_grid, spec.quadrature);
  bool positive = true, decreasing = true;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    r.values.push_back({"eps", curve[i].eps});
    r.values.push_back({"quotient", curve[i].quotient});
    r.values.push_back({"margin", curve[i].margin});
    r.error_budget = std::max(r.error_budget, curve[i].error_budget);
    if (!(curve[i].margin > curve[i].error_budget)) positive = false;
    if (i > 0 && !(curve[i].margin < curve[i - 1].margin)) decreasing = false;
  }
  bool contracted = true;
  if (curve.size() >= 2)
    contracted = curve.back().margin <= spec.thresholds.sharpness_contraction * curve.front().margin;
  finish_record(r, positive && decreasing && contracted);
  if (!positive) r.message = "a margin is not positive";
  else if (!decreasing) r.message = "margins are not strictly decreasing";
  else if (!contracted) r.message = "final margin above contraction bound";
}

inline void check_sharpness_nd(const Profile1D& u, const HardyParams& hp, const CampaignSpec& spec,
                               CheckRecord& r) {
  const auto curve = sharpness_curve_nd(hp, spec.n_grid, u, spec.samples, spec.seed, spec.quadrature);
  const double d = hardy_constant(hp).value;
  const double k = spec.thresholds.nd_sigmas;
  bool decreasing = true, above = true;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    r.values.push_back({"n", static_cast<double>(curve[i].n)});
    r.values.push_back({"quotient", curve[i].quotient});
    r.values.push_back({"standard_error", curve[i].standard_error});
    if (curve[i].quotient < d - k * curve[i].standard_error) above = false;
    if (i > 0) {
      const double se = std::hypot(curve[i].standard_error, curve[i - 1].standard_error);
      if (curve[i].quotient > curve[i - 1].quotient + k * se) decreasing = false;
    }
  }
  const double target = curve.empty() ? 0.0 : curve.front().target;
  r.values.push_back({"target", target});
  r.values.push_back({"sharp_constant", d});
  bool close = true;
  if (!curve.empty()) {
    const double rel = std::abs(curve.back().quotient / target - 1.0);
    r.values.push_back({"final_relative_gap", rel});
    close = rel <= spec.thresholds.nd_target_rel;
    r.error_budget = curve.back().standard_error;
  }
  finish_record(r, decreasing && above && close);
  if (!above) r.message = "a quotient lies below D - k stderr";
  else if (!decreasing) r.message = "quotients do not decrease within error bars";
  else if (!close) r.message = "largest-n quotient too far from target";
}

inline void check_reduction(const HardyParams& hp, const CampaignSpec& spec, CheckRecord& r) {
  QuadConfig cfg = spec.quadrature;
  cfg.rel_tol = std::min(cfg.rel_tol, 1e-12);
  cfg.abs_tol = std::min(cfg.abs_tol, 1e-300);
  const KernelReduction unit = kernel_reduction_integral(hp, 1.0, cfg);
  bool ok = true;
  for (double m : spec.m_values) {
    const KernelReduction kr = kernel_reduction_integral(hp, m, cfg);
    const double rel = std::abs(kr.quadrature.value / kr.closed_form - 1.0);
    const double scaling = std::abs(kr.quadrature.value / unit.quadrature.value /
                                        std::pow(m, -1.0 - hp.ps()) - 1.0);
    r.values.push_back({"m", m});
    r.values.push_back({"quadrature", kr.quadrature.value});
    r.values.push_back({"closed_form", kr.closed_form});
    r.values.push_back({"relative_error", rel});
    r.values.push_back({"scaling_error", scaling});
    r.error_budget = std::max(r.error_budget, kr.quadrature.error_estimate);
    if (rel > spec.thresholds.reduction_rel_tol || scaling > spec.thresholds.scaling_rel_tol) ok = false;
  }
  const double a = reduction_factor(hp);
  const double ratio = hardy_constant(hp).value / hardy_constant(hp.with_dim(1)).value;
  const double ratio_error = std::abs(ratio / a - 1.0);
  r.values.push_back({"reduction_factor", a});
  r.values.push_back({"constant_ratio", ratio});
  r.values.push_back({"ratio_error", ratio_error});
  if (ratio_error > spec.thresholds.scaling_rel_tol) ok = false;
  finish_record(r, ok);
  if (!ok) r.message = "kernel reduction or constant ratio outside tolerance";
}

template <class Body>
void guarded(CheckRecord& r, Body&& body) {
  try {
    body();
  } catch (const Error& e) {
    r.status = "ERROR";
    r.message = e.what();
  }
}

}  // namespace detail

/// Runs every requested check over the grid in (N, p, s, check, profile)
/// order. Per-record failures are captured; only spec validation throws
/// (ConfigError), and grid points with p*s = 1 are dropped with a notice.
inline VerificationReport run_campaign(const CampaignSpec& spec) {
  spec.validate();
  VerificationReport report;
  report.seed = spec.seed;
  report.quadrature = spec.quadrature;

  for (int dim : spec.dims) {
    for (double p : spec.ps) {
      for (double s : spec.ss) {
        std::optional<HardyParams> maybe;
        try {
          maybe = make_params(dim, p, s, kDefaultCriticalGuard);
        } catch (const ParameterError& e) {
          if (e.kind() != ErrorKind::critical_case) throw ConfigError(e.what());
          report.notices.push_back("filtered N=" + std::to_string(dim) + " p=" + format_number(p) +
                                   " s=" + format_number(s) + ": critical case p*s = 1");
          continue;
        }
        const HardyParams hp = *maybe;
        // random profiles depend only on (seed, p, s)
        SplitMix64 rng(spec.seed ^ splitmix64_mix(std::bit_cast<std::uint64_t>(p) * 31 +
                                                  std::bit_cast<std::uint64_t>(s)));
        std::vector<Profile1D> randoms;
        for (int i = 0; i < spec.random_profiles; ++i) randoms.push_back(random_profile(rng, hp));

        for (CheckKind check : spec.checks) {
          const bool one_d = check == CheckKind::inequality || check == CheckKind::gsr ||
                             check == CheckKind::el || check == CheckKind::sharpness_1d;
          if (one_d && dim != 1) continue;
          if (!one_d && dim < 2) continue;
          auto base = [&](std::string subject) {
            CheckRecord r{check, dim, p, s, std::move(subject), "ERROR", "", {}, 0.0};
            return r;
          };
          auto each_profile = [&](auto&& fn) {
            for (const ProfileSpec& ps_spec : spec.profiles) {
              CheckRecord r = base(ps_spec.kind);
              detail::guarded(r, [&] {
                const Profile1D u = make_profile(ps_spec, hp);
                r.subject = u.name();
                fn(u, r);
              });
              report.records.push_back(std::move(r));
            }
            for (const Profile1D& u : randoms) {
              CheckRecord r = base(u.name());
              detail::guarded(r, [&] { fn(u, r); });
              report.records.push_back(std::move(r));
            }
          };
          switch (check) {
            case CheckKind::inequality:
              each_profile([&](const Profile1D& u, CheckRecord& r) {
                detail::check_inequality(u, hp, spec, r);
              });
              break;
            case CheckKind::gsr:
              each_profile([&](const Profile1D& u, CheckRecord& r) { detail::check_gsr(u, hp, spec, r); });
              break;
            case CheckKind::el:
              for (double x : spec.el_points) {
                CheckRecord r = base("x=" + format_number(x));
                detail::guarded(r, [&] { detail::check_el(x, hp, spec, r); });
                report.records.push_back(std::move(r));
              }
              break;
            case CheckKind::sharpness_1d: {
              CheckRecord r = base("ground_state_family");
              detail::guarded(r, [&] { detail::check_sharpness_1d(hp, spec, r); });
              report.records.push_back(std::move(r));
              break;
            }
            case CheckKind::sharpness_nd: {
              const ProfileSpec& ps_spec = spec.profiles.empty() ? ProfileSpec{} : spec.profiles.front();
              CheckRecord r = base(ps_spec.kind);
              detail::guarded(r, [&] {
                const Profile1D u = make_profile(ps_spec, hp);
                r.subject = u.name();
                detail::check_sharpness_nd(u, hp, spec, r);
              });
              report.records.push_back(std::move(r));
              break;
            }
            case CheckKind::reduction: {
              CheckRecord r = base("kernel");
              detail::guarded(r, [&] { detail::check_reduction(hp, spec, r); });
              report.records.push_back(std::move(r));
              break;
            }
          }
        }
      }
    }
  }
  for (const auto& r : report.records) {
    ++report.summary.total;
    if (r.status == "PASS") ++report.summary.passed;
    else if (r.status == "FAIL") ++report.summary.failed;
    else if (r.status == "SKIPPED") ++report.summary.skipped;
    else ++report.summary.errors;
  }
  return report;
}

}  // namespace fhardy
