#pragma once

#include <cmath>
#include <numbers>

#include "fhardy/errors.hpp"

namespace fhardy {

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw ParameterError(ErrorKind::invalid_argument, "log_gamma requires a finite x > 0");
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);  // reentrant; std::lgamma writes the global signgam
#else
  return std::lgamma(x);
#endif
}

/// Surface measure of the unit sphere S^d in R^(d+1): 2 pi^((d+1)/2) / Gamma((d+1)/2).
inline double sphere_area(int d) {
  if (d < 0) throw ParameterError(ErrorKind::invalid_argument, "sphere_area requires d >= 0");
  const double h = 0.5 * (d + 1);
  return 2.0 * std::exp(h * std::log(std::numbers::pi) - log_gamma(h));
}

}  // namespace fhardy
