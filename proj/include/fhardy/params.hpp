#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "fhardy/errors.hpp"

namespace fhardy {

/// Which side of the critical line p*s = 1 a parameter triple lies on.
/// Subcritical functions may touch the boundary; supercritical ones vanish there.
enum class Regime { subcritical, supercritical };

inline const char* to_string(Regime r) {
  return r == Regime::subcritical ? "SUBCRITICAL" : "SUPERCRITICAL";
}

inline constexpr double kDefaultCriticalGuard = 1e-9;

/// Validated (N, p, s) together with the ground-state exponent
/// alpha = (1 - p s) / p and the regime. Immutable once built.
class HardyParams {
 public:
  int dim() const noexcept { return dim_; }
  double p() const noexcept { return p_; }
  double s() const noexcept { return s_; }
  double ps() const noexcept { return p_ * s_; }
  double alpha() const noexcept { return alpha_; }
  Regime regime() const noexcept { return regime_; }

  /// Same (p, s) in a different dimension.
  HardyParams with_dim(int dim) const;

  friend HardyParams make_params(int dim, double p, double s, double guard);

 private:
  HardyParams(int dim, double p, double s)
      : dim_(dim), p_(p), s_(s), alpha_((1.0 - p * s) / p),
        regime_(p * s < 1.0 ? Regime::subcritical : Regime::supercritical) {}

  int dim_;
  double p_;
  double s_;
  double alpha_;
  Regime regime_;
};

inline HardyParams make_params(int dim, double p, double s,
                               double guard = kDefaultCriticalGuard) {
  auto describe = [&] {
    std::ostringstream os;
    os.precision(17);
    os << "(N=" << dim << ", p=" << p << ", s=" << s << ")";
    return os.str();
  };
  if (dim < 1)
    throw ParameterError(ErrorKind::dimension_out_of_range,
                         "dimension must be at least 1 " + describe());
  if (!std::isfinite(p) || p < 1.0)
    throw ParameterError(ErrorKind::exponent_out_of_range,
                         "integrability exponent p must be finite and >= 1 " + describe());
  if (!(s > 0.0 && s < 1.0))
    throw ParameterError(ErrorKind::smoothness_out_of_range,
                         "smoothness s must lie in (0,1) " + describe());
  if (!(guard >= 0.0) || std::abs(p * s - 1.0) < guard)
    throw ParameterError(ErrorKind::critical_case,
                         "critical case p*s = 1 is excluded " + describe());
  return HardyParams(dim, p, s);
}

inline HardyParams HardyParams::with_dim(int dim) const {
  return make_params(dim, p_, s_, 0.0);
}

/// alpha in omega(t) = t^(-alpha).
inline double ground_state_exponent(const HardyParams& params) { return params.alpha(); }

}  // namespace fhardy
