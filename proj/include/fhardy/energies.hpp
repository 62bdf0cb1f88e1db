#pragma once

// Integral functionals of half-line profiles: the Gagliardo energy, the
// Hardy term, the weighted energy of v = x^alpha u, Rayleigh quotients, the
// remainder identity, the Euler-Lagrange principal value, and Monte Carlo
// energies of product functions in N >= 2.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <span>
#include <utility>

#include "fhardy/constants.hpp"
#include "fhardy/errors.hpp"
#include "fhardy/monte_carlo.hpp"
#include "fhardy/params.hpp"
#include "fhardy/profiles.hpp"
#include "fhardy/quadrature.hpp"
#include "fhardy/special.hpp"

namespace fhardy {

struct QuotientReport {
  EnergyReport energy;
  EnergyReport hardy_term;
  double quotient;
  double sharp_constant;
  double margin;  // quotient - sharp_constant
  HardyParams params;
  /// energy and Hardy-term errors propagated to the quotient, plus the constant's error
  double error_budget;
};

struct GsrReport {
  double lhs_gap;  // E[u] - D H[u]
  EnergyReport weighted_energy;
  double c_p;
  double slack;  // lhs_gap - c_p * weighted_energy
  double error_budget;
};

struct ElIdentityReport {
  EnergyReport lhs;  // twice the principal value
  double rhs;        // D x^(-ps) omega(x)^(p-1)
  double relative_error;
  double tail_cut;
};

namespace detail {

inline void require_admissible(const Profile1D& u, const HardyParams& params) {
  const Admissibility a = admissibility_check(u, params);
  if (!a) throw InadmissibleFunction(u.name() + ": " + a.diagnostic);
}

/// D_{1,p,s} at constant_config() accuracy, memoized per (p, s).
inline SharpConstant cached_constant_1d(const HardyParams& params) {
  static std::mutex mutex;
  static std::map<std::pair<double, double>, SharpConstant> cache;
  const HardyParams one = params.with_dim(1);
  const auto key = std::make_pair(one.p(), one.s());
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  SharpConstant c = hardy_constant(one);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, c);
  return c;
}

// exponent of the t-integrand near t = 0 contributed by the boundary layer
inline double boundary_layer_order(const Profile1D& u, double p) {
  const double b = u.boundary_exponent();
  if (u.smooth_at_boundary() || std::isinf(b)) return p;
  return std::min(p, p * b + 1.0);
}

}  // namespace detail

/// Double integral over (0, inf)^2 of |u(x) - u(y)|^p |x - y|^(-1-ps).
inline EnergyReport gagliardo_energy_1d(const Profile1D& u, const HardyParams& params,
                                        const QuadConfig& cfg) {
  detail::require_admissible(u, params);
  if (u.identically_zero()) return {};
  const double p = params.p(), ps = params.ps();
  const double b = u.boundary_exponent(), d = u.decay_exponent();

  HalfLinePairLayout layout;
  layout.support_end = u.support_end();
  layout.knots = u.knots();
  layout.inner_origin_exponent = (b < 0.0) ? p * b : 0.0;
  layout.inner_decay_exponent = p * (d - 1.0);
  layout.outer_origin_exponent = detail::boundary_layer_order(u, p) - 1.0 - ps;
  layout.outer_decay_exponent = std::max(p * d + 1.0, 0.0) - 1.0 - ps;

  auto pair = [&](double x, double t) {
    const double inc = u.increment(x, t);
    if (inc == 0.0) return 0.0;
    return std::pow(std::abs(inc), p) * std::pow(t, -1.0 - ps);
  };
  return integrate_pairs_halfline(pair, layout, cfg);
}

/// Integral over (0, inf) of |u(x)|^p x^(-ps).
inline EnergyReport hardy_term_1d(const Profile1D& u, const HardyParams& params,
                                  const QuadConfig& cfg) {
  detail::require_admissible(u, params);
  if (u.identically_zero()) return {};
  const double p = params.p(), ps = params.ps();
  const double b = u.boundary_exponent();
  const double origin = std::isinf(b) ? 0.0 : p * b - ps;
  auto integrand = [&](double x) {
    const double v = u(x);
    if (v == 0.0) return 0.0;
    return std::pow(std::abs(v), p) * std::pow(x, -ps);
  };
  std::vector<double> breaks = u.knots();
  if (u.bounded_support()) {
    breaks.pop_back();
    return integrate_graded(integrand, 0.0, u.support_end(), {{Endpoint::left, origin}}, cfg, breaks);
  }
  return integrate_graded(integrand, 0.0, kInf,
                          {{Endpoint::left, origin}, {Endpoint::right, p * u.decay_exponent() - ps}},
                          cfg, breaks);
}

/// Double integral of |v(x) - v(y)|^p |x - y|^(-1-ps) (x y)^(-(1-ps)/2) with
/// v = x^alpha u; the right side of the remainder inequality without c_p.
inline EnergyReport weighted_energy_1d(const Profile1D& u, const HardyParams& params,
                                       const QuadConfig& cfg) {
  if (params.p() < 2.0)
    throw ParameterError(ErrorKind::exponent_out_of_range, "weighted energy needs p >= 2");
  detail::require_admissible(u, params);
  if (u.identically_zero()) return {};
  const double p = params.p(), ps = params.ps(), alpha = params.alpha();
  const double half_weight = -0.5 * alpha * p;  // exponent of each weight factor
  const double b = u.boundary_exponent(), d = u.decay_exponent();

  HalfLinePairLayout layout;
  layout.support_end = u.support_end();
  layout.knots = u.knots();
  layout.inner_origin_exponent = half_weight;
  layout.inner_decay_exponent = p * (d - 1.0);
  layout.outer_origin_exponent = (std::isinf(b) ? p : std::min(p, p * b + 1.0)) - 1.0 - ps;
  layout.outer_decay_exponent = std::max(p * d + 1.0, half_weight) - 1.0 - ps;

  auto pair = [&](double x, double t) {
    const double y = x + t;
    const double ux = u(x);
    // v(y) - v(x) = y^alpha (u(y) - u(x)) + u(x) (y^alpha - x^alpha)
    const double inc = std::pow(y, alpha) * u.increment(x, t) + ux * power_increment(x, t, alpha);
    if (inc == 0.0) return 0.0;
    return std::pow(std::abs(inc), p) * std::pow(t, -1.0 - ps) * std::pow(x * y, half_weight);
  };
  return integrate_pairs_halfline(pair, layout, cfg);
}

/// E[u] / H[u] against D_{1,p,s}.
inline QuotientReport rayleigh_quotient(const Profile1D& u, const HardyParams& params,
                                        const QuadConfig& cfg) {
  const EnergyReport energy = gagliardo_energy_1d(u, params, cfg);
  const EnergyReport hardy = hardy_term_1d(u, params, cfg);
  if (!(hardy.value > 0.0)) throw InadmissibleFunction(u.name() + ": Hardy term vanishes");
  const SharpConstant d = detail::cached_constant_1d(params);
  const double q = energy.value / hardy.value;
  const double budget = q * (energy.error_estimate / std::abs(energy.value == 0.0 ? 1.0 : energy.value) +
                             hardy.error_estimate / hardy.value) +
                        d.integral_error;
  return {energy, hardy, q, d.value, q - d.value, params.with_dim(1), budget};
}

inline GsrReport gsr_residual(const Profile1D& u, const HardyParams& params, const QuadConfig& cfg) {
  const GsrConstant cp = gsr_constant(params.p());
  detail::require_admissible(u, params);
  if (u.identically_zero()) return {0.0, {}, cp.value, 0.0, 0.0};
  const EnergyReport energy = gagliardo_energy_1d(u, params, cfg);
  const EnergyReport hardy = hardy_term_1d(u, params, cfg);
  const EnergyReport weighted = weighted_energy_1d(u, params, cfg);
  const SharpConstant d = detail::cached_constant_1d(params);
  const double gap = energy.value - d.value * hardy.value;
  const double budget = energy.error_estimate + d.value * hardy.error_estimate +
                        d.integral_error * hardy.value + cp.value * weighted.error_estimate;
  return {gap, weighted, cp.value, gap - cp.value * weighted.value, budget};
}

/// Both sides of the Euler-Lagrange identity for omega(x) = x^(-alpha) on the
/// half-line: 2 PV int (omega(x) - omega(y)) |omega(x) - omega(y)|^(p-2)
/// |x - y|^(-1-ps) dy against D x^(-ps) omega(x)^(p-1).
inline ElIdentityReport el_identity(double x, const HardyParams& params, const QuadConfig& cfg) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw ParameterError(ErrorKind::invalid_argument, "evaluation point must be positive");
  const double p = params.p(), ps = params.ps(), alpha = params.alpha();
  const double omega_x = std::pow(x, -alpha);
  const SharpConstant d = detail::cached_constant_1d(params);
  const double rhs = d.value * std::pow(x, -ps) * std::pow(omega_x, p - 1.0);

  auto g = [=](double /*y*/, double off) {
    double a;  // omega(x) - omega(x + off)
    if (std::abs(off) < 0.5 * x) a = -omega_x * std::expm1(-alpha * std::log1p(off / x));
    else a = omega_x - std::pow(x + off, -alpha);
    if (a == 0.0) return 0.0;
    const double mag = (p == 1.0) ? 1.0 : std::pow(std::abs(a), p - 1.0);
    return std::copysign(mag, a) * std::pow(std::abs(off), -1.0 - ps);
  };

  const bool sub = params.regime() == Regime::subcritical;
  const double amplitude = std::pow(2.0, 1.0 + ps) * (sub ? std::pow(omega_x, p - 1.0) : 1.0);
  const double decay = sub ? -1.0 - ps : (-ps - 2.0 * p + 1.0) / p;
  const double tail_tol = 1e-3 * cfg.rel_tol * std::abs(rhs);
  const double cut = power_tail_cut(amplitude, decay, tail_tol, 4.0 * x);
  PvShape shape;
  shape.core_exponent = p - 1.0 - ps;
  shape.origin_exponent = sub ? std::min(0.0, -alpha * (p - 1.0)) : 0.0;
  EnergyReport pv = principal_value_halfline(g, x, cut, cfg, shape);
  EnergyReport lhs = scaled(pv, 2.0);
  lhs.error_estimate += 2.0 * tail_tol;
  return {lhs, rhs, std::abs(lhs.value / rhs - 1.0), cut};
}

inline double el_identity_check(double x, const HardyParams& params, const QuadConfig& cfg) {
  return el_identity(x, params, cfg).relative_error;
}

/// Radial proposal for |x - y|: density proportional to r^a below r0 and to
/// r^(-1-ps) above, sampled by inverse CDF.
class RadialProposal {
 public:
  RadialProposal(double near_exponent, double ps, double r0) : a_(near_exponent), ps_(ps), r0_(r0) {
    if (!(a_ > -1.0) || !(ps_ > 0.0) || !(r0_ > 0.0) || !std::isfinite(r0_))
      throw ParameterError(ErrorKind::invalid_argument, "degenerate radial proposal");
    const double inner = 1.0 / (a_ + 1.0), outer = 1.0 / ps_;
    inner_mass_ = inner / (inner + outer);
    norm_ = 1.0 / (r0_ * (inner + outer));
  }
  double sample(double u) const {
    if (u < inner_mass_) return r0_ * std::pow(u / inner_mass_, 1.0 / (a_ + 1.0));
    return r0_ * std::pow((1.0 - u) / (1.0 - inner_mass_), -1.0 / ps_);
  }
  double density(double r) const {
    const double z = r / r0_;
    return norm_ * (z < 1.0 ? std::pow(z, a_) : std::pow(z, -1.0 - ps_));
  }

 private:
  double a_, ps_, r0_;
  double inner_mass_ = 0.0, norm_ = 0.0;
};

/// Monte Carlo estimate of the N-dimensional Gagliardo energy of
/// chi_n(|x'|) phi(x_N) on the half-space. x is uniform on
/// [-h, h]^(N-1) x (0, R] (h = box_half_width, R = support end of phi) and
/// y = x + r theta with theta uniform on the sphere and r from RadialProposal.
/// Pairs with y outside that box count twice, which accounts for the region
/// where only y lies in the support.
inline EnergyReport monte_carlo_energy(const ProductFunction& f, const HardyParams& params,
                                       std::uint64_t samples, std::uint64_t seed,
                                       double box_half_width, const MonteCarloOptions& options = {}) {
  const int dim = f.dim();
  if (dim < 2) throw ParameterError(ErrorKind::dimension_out_of_range, "Monte Carlo energy needs N >= 2");
  const Profile1D& phi = f.profile();
  if (!phi.bounded_support())
    throw InadmissibleFunction(phi.name() + ": Monte Carlo energy needs a profile with bounded support");
  if (!(box_half_width >= f.cutoff_n() + 1.0) || !std::isfinite(box_half_width))
    throw ParameterError(ErrorKind::invalid_argument, "box half-width must cover the cutoff support n + 1");
  const HardyParams pd = params.with_dim(dim);
  detail::require_admissible(phi, pd);
  if (phi.identically_zero()) return {0.0, 0.0, samples};

  const double p = pd.p(), ps = pd.ps();
  const double height = phi.support_end();
  const double h = box_half_width;
  const double volume = std::pow(2.0 * h, dim - 1) * height;
  const double sphere = sphere_area(dim - 1);
  const RadialProposal radial(p - 1.0 - ps, ps, 0.5 * height);
  const int normals = 2 * ((dim + 1) / 2);

  auto in_box = [&](const std::vector<double>& y) {
    if (!(y[dim - 1] > 0.0 && y[dim - 1] <= height)) return false;
    for (int i = 0; i + 1 < dim; ++i)
      if (std::abs(y[i]) > h) return false;
    return true;
  };

  std::vector<Interval> box(static_cast<std::size_t>(dim + 1 + normals), Interval{0.0, 1.0});
  auto sample = [&](std::span<const double> z) {
    thread_local std::vector<double> x, y, dir;
    x.resize(dim);
    y.resize(dim);
    dir.resize(normals);
    for (int i = 0; i + 1 < dim; ++i) x[i] = h * (2.0 * z[i] - 1.0);
    x[dim - 1] = height * z[dim - 1];
    const double r = radial.sample(z[dim]);
    // Box-Muller pairs
    for (int k = 0; k < normals; k += 2) {
      const double rho = std::sqrt(-2.0 * std::log(z[dim + 1 + k]));
      const double angle = 2.0 * std::numbers::pi * z[dim + 2 + k];
      dir[k] = rho * std::cos(angle);
      dir[k + 1] = rho * std::sin(angle);
    }
    double norm2 = 0.0;
    for (int i = 0; i < dim; ++i) norm2 += dir[i] * dir[i];
    const double scale = r / std::sqrt(norm2);
    for (int i = 0; i < dim; ++i) y[i] = x[i] + scale * dir[i];
    if (!(y[dim - 1] > 0.0)) return 0.0;
    const double diff = f(x) - f(y);
    if (diff == 0.0) return 0.0;
    const double multiplicity = in_box(y) ? 1.0 : 2.0;
    return multiplicity * volume * sphere * std::pow(std::abs(diff), p) * std::pow(r, -1.0 - ps) /
           radial.density(r);
  };
  return monte_carlo_integral(sample, box, samples, seed, options);
}

/// Integral over the half-space of |chi_n(|x'|) phi(x_N)|^p x_N^(-ps), exact in x'.
inline EnergyReport product_hardy_term(const ProductFunction& f, const HardyParams& params,
                                       const QuadConfig& cfg) {
  const double factor = cutoff_power_volume(f.cutoff_n(), f.dim() - 1, params.p());
  return scaled(hardy_term_1d(f.profile(), params.with_dim(f.dim()), cfg), factor);
}

}  // namespace fhardy
