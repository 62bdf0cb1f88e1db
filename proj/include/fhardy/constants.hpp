#pragma once

#include <cmath>
#include <numbers>

#include "fhardy/errors.hpp"
#include "fhardy/params.hpp"
#include "fhardy/quadrature.hpp"
#include "fhardy/special.hpp"

namespace fhardy {

/// D_{N,p,s} = prefactor * one_d_integral.
struct SharpConstant {
  double value;
  double one_d_integral;
  double prefactor;
  double integral_error;
  HardyParams params;
};

/// c_p and the tau at which it is attained.
struct GsrConstant {
  double value;
  double minimizer_tau;
};

/// Quadrature used for constants that later serve as reference values.
inline QuadConfig constant_config() {
  QuadConfig cfg;
  cfg.rel_tol = 1e-13;
  cfg.abs_tol = 1e-300;
  return cfg;
}

/// pi^((N-1)/2) Gamma((1+ps)/2) / Gamma((N+ps)/2), evaluated in log space.
inline double gamma_ratio(const HardyParams& params) {
  const double ps = params.ps();
  const int n = params.dim();
  return std::exp(0.5 * (n - 1) * std::log(std::numbers::pi) + log_gamma(0.5 * (1.0 + ps)) -
                  log_gamma(0.5 * (n + ps)));
}

/// Integral over (0,1) of |1 - r^((ps-1)/p)|^p (1-r)^(-1-ps) dr.
inline EnergyReport hardy_integral(const HardyParams& params, const QuadConfig& cfg) {
  const double p = params.p(), ps = params.ps(), alpha = params.alpha();
  const double right_exponent = p - 1.0 - ps;
  // s < 1 gives p - 1 - ps = p(1 - s) - 1 > -1
  if (!(right_exponent > -1.0))
    throw ParameterError(ErrorKind::invalid_argument, "integrand is not integrable at r = 1");
  const double left_exponent = std::min(0.0, ps - 1.0);
  auto integrand = [=](const Abscissa& a) {
    const double log_r = a.x < 0.5 ? std::log(a.x) : std::log1p(-a.to_right);
    const double w = -std::expm1(-alpha * log_r);  // 1 - r^(-alpha)
    return std::pow(std::abs(w), p) * std::pow(a.to_right, -1.0 - ps);
  };
  return integrate_graded(integrand, 0.0, 1.0,
                          {{Endpoint::left, left_exponent}, {Endpoint::right, right_exponent}}, cfg);
}

inline SharpConstant hardy_constant(const HardyParams& params,
                                    const QuadConfig& cfg = constant_config()) {
  const EnergyReport integral = hardy_integral(params, cfg);
  const double prefactor = 2.0 * gamma_ratio(params);
  return {prefactor * integral.value, integral.value, prefactor,
          prefactor * integral.error_estimate, params};
}

/// A = D_{N,p,s} / D_{1,p,s} from the tangential kernel integral; 1 for N = 1.
inline double reduction_factor(const HardyParams& params) {
  const int n = params.dim();
  if (n == 1) return 1.0;
  const double ps = params.ps();
  return 0.5 * sphere_area(n - 2) *
         std::exp(log_gamma(0.5 * (n - 1)) + log_gamma(0.5 * (1.0 + ps)) - log_gamma(0.5 * (n + ps)));
}

/// (1 - tau)^p - tau^p + p tau^(p-1)
inline double gsr_objective(double p, double tau) {
  return std::pow(1.0 - tau, p) - std::pow(tau, p) + p * std::pow(tau, p - 1.0);
}

/// c_p by a uniform grid scan of (0, 1/2) followed by golden-section search
/// in the bracketing cell.
inline GsrConstant gsr_constant(double p) {
  if (!(p >= 2.0) || !std::isfinite(p))
    throw ParameterError(ErrorKind::exponent_out_of_range, "c_p is defined for p >= 2");
  // p = 2: the objective is identically 1 and any tau is a minimizer.
  if (p == 2.0) return {1.0, 0.25};

  constexpr int grid = 10'000;
  const double h = 0.5 / grid;
  int best = 1;
  double best_value = gsr_objective(p, h);
  for (int i = 2; i < grid; ++i) {
    const double v = gsr_objective(p, i * h);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  double lo = (best - 1) * h, hi = (best + 1) * h;
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = gsr_objective(p, x1), f2 = gsr_objective(p, x2);
  while (hi - lo > 1e-12) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = gsr_objective(p, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = gsr_objective(p, x2);
    }
  }
  double tau = 0.5 * (lo + hi);
  double value = gsr_objective(p, tau);
  if (best_value < value) {
    tau = best * h;
    value = best_value;
  }
  return {value, tau};
}

struct KernelReduction {
  EnergyReport quadrature;
  double closed_form;
};

/// Integral over R^(N-1) of (|y'|^2 + m^2)^(-(N+ps)/2) dy', by radial
/// quadrature, next to its Gamma-function closed form.
inline KernelReduction kernel_reduction_integral(const HardyParams& params, double m,
                                                 const QuadConfig& cfg) {
  const int n = params.dim();
  if (n < 2)
    throw ParameterError(ErrorKind::dimension_out_of_range, "kernel reduction needs N >= 2");
  if (!(m > 0.0) || !std::isfinite(m))
    throw ParameterError(ErrorKind::invalid_argument, "distance m must be positive");
  const double ps = params.ps();
  const double power = -0.5 * (n + ps);
  auto radial = [=](double r) {
    return std::pow(r, n - 2) * std::pow(r * r + m * m, power);
  };
  EnergyReport radial_integral =
      integrate_graded(radial, 0.0, kInf, {{Endpoint::right, -2.0 - ps}}, cfg, {m});
  const double area = sphere_area(n - 2);
  const double closed = 0.5 * area * std::pow(m, -1.0 - ps) *
                        std::exp(log_gamma(0.5 * (n - 1)) + log_gamma(0.5 * (1.0 + ps)) -
                                 log_gamma(0.5 * (n + ps)));
  return {scaled(radial_integral, area), closed};
}

}  // namespace fhardy
