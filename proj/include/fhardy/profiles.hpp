#pragma once

// Closed-form test functions on the half-line and their product extensions
// to the half-space. Every profile can evaluate u(x + t) - u(x) without
// cancellation, which the energy quadratures rely on for tiny t.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fhardy/errors.hpp"
#include "fhardy/params.hpp"
#include "fhardy/special.hpp"

namespace fhardy {

enum class ProfileKind { hat, smooth_bump, trapezoid, ground_state_family, custom_piecewise };

inline const char* to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::hat: return "HAT";
    case ProfileKind::smooth_bump: return "SMOOTH_BUMP";
    case ProfileKind::trapezoid: return "TRAPEZOID";
    case ProfileKind::ground_state_family: return "GROUND_STATE_FAMILY";
    case ProfileKind::custom_piecewise: return "CUSTOM_PIECEWISE";
  }
  return "UNKNOWN";
}

/// x2^e - x1^e for 0 <= x1, t = x2 - x1 >= 0, accurate for t << x1.
inline double power_increment(double x1, double t, double e) {
  if (t == 0.0 || e == 0.0) return 0.0;
  if (e == 1.0) return t;
  if (x1 == 0.0) return std::pow(t, e);
  return std::pow(x1, e) * std::expm1(e * std::log1p(t / x1));
}

/// u(x) = constant + coeff * x^power on [lo, hi).
struct PowerPiece {
  double lo;
  double hi;
  double constant;
  double coeff;
  double power;

  double value(double x) const {
    if (coeff == 0.0) return constant;
    return constant + coeff * std::pow(x, power);
  }
  double increment(double x, double t) const {
    if (coeff == 0.0) return 0.0;
    return coeff * power_increment(x, t, power);
  }
};

class Profile1D {
 public:
  static Profile1D hat(double left, double peak, double right, double height = 1.0);
  static Profile1D trapezoid(double plateau_end, double support_end, double height = 1.0);
  static Profile1D smooth_bump(double center, double half_width, double height = 1.0);
  static Profile1D ground_state_family(double eps, const HardyParams& params);
  /// Linear interpolation of `values` at `knots` (knots[0] = 0, last value 0),
  /// except on the first cell where u = values[1] * (x / knots[1])^boundary_power
  /// when boundary_power is given.
  static Profile1D custom_piecewise(std::vector<double> knots, std::vector<double> values,
                                    std::optional<double> boundary_power = std::nullopt);
  static Profile1D zero();

  ProfileKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

  double operator()(double x) const;
  double evaluate(double x) const { return (*this)(x); }

  /// u(x + t) - u(x) for x >= 0, t >= 0.
  double increment(double x, double t) const;

  /// Interior points where u is not smooth, including the support end when finite.
  const std::vector<double>& knots() const noexcept { return knots_; }
  double support_end() const noexcept { return support_end_; }
  bool bounded_support() const noexcept { return std::isfinite(support_end_); }

  /// u ~ x^b as x -> 0+; +inf when u vanishes identically near 0.
  double boundary_exponent() const noexcept { return boundary_exponent_; }
  /// u ~ x^d as x -> inf; -inf for bounded support.
  double decay_exponent() const noexcept { return decay_exponent_; }
  /// True when u is a polynomial of degree <= 1 near 0 (no boundary layer).
  bool smooth_at_boundary() const noexcept { return smooth_at_boundary_; }
  /// Global Lipschitz constant, or nullopt when only locally Lipschitz.
  std::optional<double> lipschitz() const noexcept { return lipschitz_; }
  bool identically_zero() const noexcept { return zero_; }

  /// Parameters of the closed form, in construction order.
  const std::vector<double>& parameters() const noexcept { return parameters_; }
  const std::vector<PowerPiece>& pieces() const noexcept { return pieces_; }

  /// u(lambda x); scaling preserves the closed form.
  Profile1D dilated(double lambda) const;

 private:
  Profile1D() = default;
  std::size_t piece_index(double x) const;
  double bump_value(double x) const;
  double bump_increment(double x, double t) const;
  void finish_piecewise();

  ProfileKind kind_ = ProfileKind::custom_piecewise;
  std::string name_;
  std::vector<double> parameters_;
  std::vector<PowerPiece> pieces_;  // piecewise kinds; last piece may extend to +inf
  double bump_center_ = 0.0, bump_half_width_ = 1.0, bump_height_ = 1.0;
  std::vector<double> knots_;
  double support_end_ = kInfinity;
  double boundary_exponent_ = 0.0;
  double decay_exponent_ = -kInfinity;
  bool smooth_at_boundary_ = true;
  std::optional<double> lipschitz_;
  bool zero_ = false;

  static constexpr double kInfinity = std::numeric_limits<double>::infinity();
};

inline std::size_t Profile1D::piece_index(double x) const {
  // first piece with hi > x
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](double v, const PowerPiece& p) { return v < p.hi; });
  if (it == pieces_.end()) return pieces_.size() - 1;
  return static_cast<std::size_t>(it - pieces_.begin());
}

inline double Profile1D::operator()(double x) const {
  if (kind_ == ProfileKind::smooth_bump) return bump_value(x);
  if (x >= support_end_) return 0.0;
  return pieces_[piece_index(x)].value(x);
}

inline double Profile1D::increment(double x, double t) const {
  if (zero_ || t == 0.0) return 0.0;
  if (kind_ == ProfileKind::smooth_bump) return bump_increment(x, t);
  const double y = x + t;
  if (x >= support_end_) return 0.0;
  std::size_t i = piece_index(x);
  const std::size_t j = y >= support_end_ ? pieces_.size() : piece_index(y);
  if (i == j) return pieces_[i].increment(x, t);
  // walk across knots; distances are clamped so their sum stays t
  double covered = std::clamp(pieces_[i].hi - x, 0.0, t);
  double total = pieces_[i].increment(x, covered);
  for (++i; i < j && i < pieces_.size(); ++i) {
    const double width = std::min(pieces_[i].hi - pieces_[i].lo, t - covered);
    total += pieces_[i].increment(pieces_[i].lo, width);
    covered += width;
  }
  if (j < pieces_.size()) {
    total += pieces_[j].increment(pieces_[j].lo, std::max(t - covered, 0.0));
  } else {
    // crossed the support end: value there is 0
    total = -(*this)(x);
  }
  return total;
}

inline double Profile1D::bump_value(double x) const {
  const double z = (x - bump_center_) / bump_half_width_;
  if (std::abs(z) >= 1.0) return 0.0;
  return bump_height_ * std::exp(-1.0 / (1.0 - z * z));
}

inline double Profile1D::bump_increment(double x, double t) const {
  const double z1 = (x - bump_center_) / bump_half_width_;
  const double dz = t / bump_half_width_;
  const double z2 = z1 + dz;
  if (std::abs(z1) >= 1.0 || std::abs(z2) >= 1.0) return bump_value(x + t) - bump_value(x);
  // g(z) = 1/(1 - z^2); g(z2) - g(z1) = dz (z1 + z2) / ((1 - z1^2)(1 - z2^2))
  const double a1 = 1.0 - z1 * z1, a2 = 1.0 - z2 * z2;
  const double dg = dz * (z1 + z2) / (a1 * a2);
  return bump_height_ * std::exp(-1.0 / a1) * std::expm1(-dg);
}

inline void Profile1D::finish_piecewise() {
  knots_.clear();
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) knots_.push_back(pieces_[i].hi);
  if (std::isfinite(support_end_) &&
      (knots_.empty() || knots_.back() != support_end_))
    knots_.push_back(support_end_);
  zero_ = std::all_of(pieces_.begin(), pieces_.end(),
                      [](const PowerPiece& p) { return p.constant == 0.0 && p.coeff == 0.0; });
  const PowerPiece& first = pieces_.front();
  if (zero_) {
    boundary_exponent_ = kInfinity;
    smooth_at_boundary_ = true;
  } else if (first.coeff == 0.0 && first.constant == 0.0) {
    boundary_exponent_ = kInfinity;
    smooth_at_boundary_ = true;
  } else if (first.constant != 0.0) {
    boundary_exponent_ = 0.0;
    smooth_at_boundary_ = first.coeff == 0.0 || first.power == 1.0;
  } else {
    boundary_exponent_ = first.power;
    smooth_at_boundary_ = first.power == 1.0;
  }
  if (std::isfinite(support_end_) || zero_) {
    decay_exponent_ = -kInfinity;
  } else {
    const PowerPiece& last = pieces_.back();
    decay_exponent_ = last.constant != 0.0 ? 0.0 : last.power;
  }
  // Lipschitz constant when every piece is affine
  bool affine = true;
  double lip = 0.0;
  for (const auto& p : pieces_) {
    if (p.coeff == 0.0) continue;
    if (p.power != 1.0) affine = false;
    lip = std::max(lip, std::abs(p.coeff));
  }
  if (affine) lipschitz_ = lip;
  else lipschitz_.reset();
}

inline Profile1D Profile1D::hat(double left, double peak, double right, double height) {
  if (!(left >= 0.0 && left <= peak && peak < right) || !std::isfinite(right))
    throw ParameterError(ErrorKind::invalid_argument, "hat needs 0 <= left <= peak < right");
  Profile1D f;
  f.kind_ = ProfileKind::hat;
  f.parameters_ = {left, peak, right, height};
  std::ostringstream os;
  os << "hat(" << left << "," << peak << "," << right << "," << height << ")";
  f.name_ = os.str();
  if (left > 0.0) f.pieces_.push_back({0.0, left, 0.0, 0.0, 1.0});
  if (peak > left) {
    const double slope = height / (peak - left);
    f.pieces_.push_back({left, peak, -slope * left, slope, 1.0});
  }
  const double down = height / (right - peak);
  f.pieces_.push_back({peak, right, down * right, -down, 1.0});
  f.support_end_ = right;
  f.finish_piecewise();
  return f;
}

inline Profile1D Profile1D::trapezoid(double plateau_end, double support_end, double height) {
  if (!(plateau_end > 0.0 && plateau_end < support_end) || !std::isfinite(support_end))
    throw ParameterError(ErrorKind::invalid_argument, "trapezoid needs 0 < plateau_end < support_end");
  Profile1D f;
  f.kind_ = ProfileKind::trapezoid;
  f.parameters_ = {plateau_end, support_end, height};
  std::ostringstream os;
  os << "trapezoid(" << plateau_end << "," << support_end << "," << height << ")";
  f.name_ = os.str();
  const double down = height / (support_end - plateau_end);
  f.pieces_.push_back({0.0, plateau_end, height, 0.0, 1.0});
  f.pieces_.push_back({plateau_end, support_end, down * support_end, -down, 1.0});
  f.support_end_ = support_end;
  f.finish_piecewise();
  return f;
}

inline Profile1D Profile1D::smooth_bump(double center, double half_width, double height) {
  if (!(half_width > 0.0 && center - half_width >= 0.0) || !std::isfinite(center + half_width))
    throw ParameterError(ErrorKind::invalid_argument, "bump support must lie in [0, inf)");
  Profile1D f;
  f.kind_ = ProfileKind::smooth_bump;
  f.parameters_ = {center, half_width, height};
  std::ostringstream os;
  os << "bump(" << center << "," << half_width << "," << height << ")";
  f.name_ = os.str();
  f.bump_center_ = center;
  f.bump_half_width_ = half_width;
  f.bump_height_ = height;
  f.support_end_ = center + half_width;
  f.knots_ = {center - half_width, center + half_width};
  if (f.knots_.front() == 0.0) f.knots_.erase(f.knots_.begin());
  f.boundary_exponent_ = kInfinity;
  f.decay_exponent_ = -kInfinity;
  f.smooth_at_boundary_ = true;
  f.zero_ = height == 0.0;
  // max |d/dz exp(-1/(1-z^2))| on a fine grid
  double slope = 0.0;
  for (int i = 1; i < 20000; ++i) {
    const double z = -1.0 + i * 1e-4;
    const double a = 1.0 - z * z;
    slope = std::max(slope, std::abs(2.0 * z / (a * a) * std::exp(-1.0 / a)));
  }
  f.lipschitz_ = slope * std::abs(height) / half_width;
  return f;
}

inline Profile1D Profile1D::ground_state_family(double eps, const HardyParams& params) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw ParameterError(ErrorKind::invalid_argument, "ground-state family needs eps > 0");
  const double alpha = params.alpha();
  Profile1D f;
  f.kind_ = ProfileKind::ground_state_family;
  f.parameters_ = {eps, alpha};
  std::ostringstream os;
  os << "ground_state(eps=" << eps << ",alpha=" << alpha << ")";
  f.name_ = os.str();
  // x^(-alpha) min(x^eps, x^(-eps))
  f.pieces_.push_back({0.0, 1.0, 0.0, 1.0, -alpha + eps});
  f.pieces_.push_back({1.0, kInfinity, 0.0, 1.0, -alpha - eps});
  f.support_end_ = kInfinity;
  f.finish_piecewise();
  return f;
}

inline Profile1D Profile1D::custom_piecewise(std::vector<double> knots, std::vector<double> values,
                                             std::optional<double> boundary_power) {
  if (knots.size() < 2 || knots.size() != values.size())
    throw ParameterError(ErrorKind::invalid_argument, "piecewise profile needs matching knots/values");
  if (knots.front() != 0.0)
    throw ParameterError(ErrorKind::invalid_argument, "piecewise profile knots must start at 0");
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i] > knots[i - 1]) || !std::isfinite(knots[i]))
      throw ParameterError(ErrorKind::invalid_argument, "piecewise knots must increase");
  if (values.back() != 0.0)
    throw ParameterError(ErrorKind::invalid_argument, "piecewise profile must vanish at its last knot");
  Profile1D f;
  f.kind_ = ProfileKind::custom_piecewise;
  f.parameters_ = knots;
  f.parameters_.insert(f.parameters_.end(), values.begin(), values.end());
  std::ostringstream os;
  os.precision(6);
  os << "piecewise(";
  for (std::size_t i = 0; i < knots.size(); ++i) os << (i ? ";" : "") << knots[i] << ":" << values[i];
  if (boundary_power) {
    os << ";b=" << *boundary_power;
    f.parameters_.push_back(*boundary_power);
  }
  os << ")";
  f.name_ = os.str();
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double x0 = knots[i], x1 = knots[i + 1];
    if (i == 0 && boundary_power) {
      const double b = *boundary_power;
      f.pieces_.push_back({x0, x1, 0.0, values[1] * std::pow(x1, -b), b});
      continue;
    }
    const double slope = (values[i + 1] - values[i]) / (x1 - x0);
    f.pieces_.push_back({x0, x1, values[i] - slope * x0, slope, 1.0});
  }
  f.support_end_ = knots.back();
  f.finish_piecewise();
  return f;
}

inline Profile1D Profile1D::zero() {
  Profile1D f = custom_piecewise({0.0, 1.0}, {0.0, 0.0});
  f.name_ = "zero";
  return f;
}

inline Profile1D Profile1D::dilated(double lambda) const {
  if (!(lambda > 0.0))
    throw ParameterError(ErrorKind::invalid_argument, "dilation factor must be positive");
  Profile1D f = *this;
  std::ostringstream os;
  os << name_ << "@" << lambda;
  f.name_ = os.str();
  if (kind_ == ProfileKind::smooth_bump) {
    f.bump_center_ = bump_center_ / lambda;
    f.bump_half_width_ = bump_half_width_ / lambda;
    f.support_end_ = support_end_ / lambda;
    for (double& k : f.knots_) k /= lambda;
    if (f.lipschitz_) *f.lipschitz_ *= lambda;
    return f;
  }
  // constant + coeff (lambda x)^e = constant + (coeff lambda^e) x^e
  for (auto& p : f.pieces_) {
    p.lo /= lambda;
    p.hi /= lambda;
    p.coeff *= std::pow(lambda, p.power);
  }
  f.support_end_ = support_end_ / lambda;
  f.finish_piecewise();
  return f;
}

/// chi_n(r): 1 for r <= n, n + 1 - r on (n, n+1), 0 beyond.
inline double cutoff_chi(int n, double r) {
  if (n < 1) throw ParameterError(ErrorKind::invalid_argument, "cutoff scale n must be >= 1");
  if (r <= n) return 1.0;
  if (r >= n + 1.0) return 0.0;
  return n + 1.0 - r;
}

/// Integral over R^(dim) of |chi_n(|x'|)|^p, in closed form.
double cutoff_power_volume(int n, int dim, double p);

/// u_n(x', x_N) = chi_n(|x'|) phi(x_N) on the half-space R^N_+.
class ProductFunction {
 public:
  ProductFunction(int cutoff_n, Profile1D profile, int dim)
      : cutoff_n_(cutoff_n), profile_(std::move(profile)), dim_(dim) {}

  int cutoff_n() const noexcept { return cutoff_n_; }
  const Profile1D& profile() const noexcept { return profile_; }
  int dim() const noexcept { return dim_; }

  /// x holds dim coordinates, the last one being x_N > 0.
  template <class Point>
  double operator()(const Point& x) const {
    double r2 = 0.0;
    for (int i = 0; i + 1 < dim_; ++i) r2 += x[i] * x[i];
    const double xn = x[dim_ - 1];
    if (xn <= 0.0) return 0.0;
    return cutoff_chi(cutoff_n_, std::sqrt(r2)) * profile_(xn);
  }

 private:
  int cutoff_n_;
  Profile1D profile_;
  int dim_;
};

inline ProductFunction sharpness_sequence(int n, const Profile1D& profile, int dim) {
  if (dim < 2) throw ParameterError(ErrorKind::dimension_out_of_range, "product functions need N >= 2");
  if (n < 1) throw ParameterError(ErrorKind::invalid_argument, "cutoff scale n must be >= 1");
  return ProductFunction(n, profile, dim);
}

struct Admissibility {
  bool admissible;
  std::string diagnostic;
  explicit operator bool() const noexcept { return admissible; }
};

/// Both sides of the 1D Hardy inequality are finite for f: boundary
/// condition p b - ps > -1, decay condition p d - ps < -1 for unbounded
/// support, and local regularity above s (every catalog profile is locally
/// Lipschitz away from 0).
inline Admissibility admissibility_check(const Profile1D& f, const HardyParams& params) {
  const double p = params.p(), ps = params.ps();
  if (f.identically_zero()) return {true, "zero function"};
  const double b = f.boundary_exponent();
  if (!(std::isinf(b) || p * b - ps > -1.0)) {
    std::ostringstream os;
    os << "boundary condition p*b - ps > -1 violated: p*b - ps = " << p * b - ps
       << " (Hardy term diverges at x = 0)";
    return {false, os.str()};
  }
  if (!f.bounded_support()) {
    const double d = f.decay_exponent();
    if (!(p * d - ps < -1.0)) {
      std::ostringstream os;
      os << "decay condition p*d - ps < -1 violated: p*d - ps = " << p * d - ps;
      return {false, os.str()};
    }
  }
  return {true, "ok"};
}

inline double cutoff_power_volume(int n, int dim, double p) {
  // |S^(dim-1)| [ n^dim / dim + int_0^1 w^p (n + 1 - w)^(dim-1) dw ]
  if (dim < 1) throw ParameterError(ErrorKind::invalid_argument, "dimension must be >= 1");
  const double area = sphere_area(dim - 1);
  double shell = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= dim - 1; ++k) {
    shell += binom * std::pow(n + 1.0, dim - 1 - k) * ((k % 2) ? -1.0 : 1.0) / (p + k + 1.0);
    binom = binom * (dim - 1 - k) / (k + 1.0);
  }
  return area * (std::pow(static_cast<double>(n), dim) / dim + shell);
}

}  // namespace fhardy
