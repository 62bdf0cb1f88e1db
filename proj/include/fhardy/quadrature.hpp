#pragma once

// Adaptive Gauss-Legendre panel quadrature for integrands with algebraic
// endpoint singularities, principal values on the half-line, and double
// integrals with a singular diagonal.
//
// Every routine returns an EnergyReport whose error_estimate comes from
// comparing two refinement levels (panel vs. its two halves, or a power-law
// tail model vs. one more graded panel plus the next model).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "fhardy/errors.hpp"
#include "fhardy/gauss_legendre.hpp"

namespace fhardy {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct QuadConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  /// Maximum bisection depth of a panel. Graded endpoint tails may be
  /// deepened up to 40 * max_refinements levels.
  int max_refinements = 30;
  double grading_ratio = 0.5;
  int panel_order = 16;
  std::size_t max_evaluations = 20'000'000;

  static QuadConfig one_d() { return {}; }
  static QuadConfig two_d() {
    QuadConfig c;
    c.rel_tol = 1e-4;
    return c;
  }

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
      throw ParameterError(ErrorKind::invalid_argument, "quadrature tolerances must be positive");
    if (max_refinements < 1)
      throw ParameterError(ErrorKind::invalid_argument, "max_refinements must be positive");
    if (!(grading_ratio > 0.0 && grading_ratio < 1.0))
      throw ParameterError(ErrorKind::invalid_argument, "grading_ratio must lie in (0,1)");
    if (panel_order < 1)
      throw ParameterError(ErrorKind::invalid_argument, "panel_order must be positive");
  }
};

struct EnergyReport {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

inline EnergyReport operator+(const EnergyReport& a, const EnergyReport& b) {
  return {a.value + b.value, a.error_estimate + b.error_estimate, a.evaluations + b.evaluations};
}

inline EnergyReport scaled(const EnergyReport& r, double factor) {
  return {r.value * factor, r.error_estimate * std::abs(factor), r.evaluations};
}

/// Raised when the tolerance cannot be met within the refinement limits.
/// Carries the best estimate obtained so far.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, EnergyReport best)
      : Error(ErrorKind::non_convergence, what), best_(best) {}
  const EnergyReport& best_estimate() const noexcept { return best_; }

 private:
  EnergyReport best_;
};

enum class Endpoint { left, right };

/// The integrand behaves like distance^exponent at the given endpoint.
/// At a finite endpoint exponent > -1; at b = +inf "distance" is x itself
/// and the exponent is the decay power, which must be < -1.
struct SingularityDescriptor {
  Endpoint location;
  double exponent;
};

/// A quadrature node together with its distances to both ends of the
/// integration interval. The distance to the nearer anchored end is exact,
/// so integrands can avoid cancellation when forming 1 - x or x - a.
struct Abscissa {
  double x;
  double from_left;
  double to_right;
};

namespace detail {

struct Sample {
  double value = 0.0;
  double nested_error = 0.0;
  std::size_t nested_evaluations = 0;
};

inline Sample to_sample(double v) { return {v, 0.0, 0}; }
inline Sample to_sample(const EnergyReport& r) { return {r.value, r.error_estimate, r.evaluations}; }

template <class F>
Sample call_integrand(F& f, const Abscissa& a) {
  if constexpr (std::is_invocable_v<F&, const Abscissa&>) {
    return to_sample(f(a));
  } else {
    return to_sample(f(a.x));
  }
}

struct PanelQuadrature {
  double value = 0.0;
  double abs_value = 0.0;
  double nested = 0.0;
  std::size_t nested_evaluations = 0;
};

template <class F>
class GradedIntegrator {
 public:
  GradedIntegrator(F& f, double a, double b, const QuadConfig& cfg)
      : f_(f), a_(a), b_(b), length_(b - a), cfg_(cfg), rule_(gauss_legendre(cfg.panel_order)) {}

  /// Panel [lo, hi] in offsets measured from the anchor (from a for left,
  /// towards a from b for right).
  void add_panel(Endpoint anchor, double lo, double hi) {
    if (!(hi > lo)) return;
    Segment seg;
    seg.kind = Kind::panel;
    seg.anchor = anchor;
    seg.lo = lo;
    seg.hi = hi;
    const PanelQuadrature coarse = quad(anchor, lo, hi);
    fill_panel(seg, coarse);
    segments_.push_back(seg);
  }

  /// Graded mesh of `levels` geometric panels on offsets (0, width] plus a
  /// power-law model for the innermost piece.
  void add_graded(Endpoint anchor, double width, double exponent, int levels) {
    double hi = width;
    for (int k = 0; k < levels; ++k) {
      const double lo = hi * cfg_.grading_ratio;
      add_panel(anchor, lo, hi);
      hi = lo;
    }
    segments_.push_back(make_finite_tail(anchor, hi, exponent, 0));
  }

  /// Geometric panels [w, 2w], [2w, 4w], ... beyond offset `start` from a,
  /// then a decay model with the given exponent.
  void add_outward(double start, double exponent, int levels) {
    double lo = start;
    for (int k = 0; k < levels; ++k) {
      add_panel(Endpoint::left, lo, lo / cfg_.grading_ratio);
      lo /= cfg_.grading_ratio;
    }
    segments_.push_back(make_infinite_tail(lo, exponent, 0));
  }

  EnergyReport run() {
    const int tail_cap = 40 * cfg_.max_refinements;
    for (;;) {
      double total = 0.0, error = 0.0, nested = 0.0, floor_error = 0.0;
      for (const auto& s : segments_) {
        total += s.value;
        error += s.error;
        nested += s.nested;
        if (s.saturated) floor_error += s.error;
      }
      const double tol = std::max(cfg_.rel_tol * std::abs(total), cfg_.abs_tol);
      if (!std::isfinite(total))
        throw NonConvergence("integrand produced a non-finite value", report(total, error + nested));
      if (error <= tol) return report(total, error + nested);

      std::ptrdiff_t worst = -1;
      double worst_error = -1.0;
      double capped_error = 0.0;
      bool blocked = false;
      for (std::size_t i = 0; i < segments_.size(); ++i) {
        const auto& s = segments_[i];
        if (s.saturated) continue;
        const bool capped = s.kind == Kind::panel ? s.depth >= cfg_.max_refinements
                                                  : (s.depth >= tail_cap || !tail_can_deepen(s));
        if (capped) {
          if (s.error > 0.0) blocked = true;
          capped_error += s.error;
          continue;
        }
        if (s.error > worst_error) {
          worst_error = s.error;
          worst = static_cast<std::ptrdiff_t>(i);
        }
      }
      // Remaining error is roundoff-level: accept.
      if (error - floor_error <= tol) return report(total, error + nested);
      if (capped_error > tol)
        throw NonConvergence("refinement limit reached before tolerance was met",
                             report(total, error + nested));
      if (worst < 0 || worst_error <= 0.0) {
        if (blocked)
          throw NonConvergence("refinement limit reached before tolerance was met",
                               report(total, error + nested));
        return report(total, error + nested);
      }
      if (evaluations_ > cfg_.max_evaluations)
        throw NonConvergence("evaluation budget exhausted", report(total, error + nested));
      refine(static_cast<std::size_t>(worst));
    }
  }

 private:
  enum class Kind { panel, finite_tail, infinite_tail };

  struct Segment {
    Kind kind = Kind::panel;
    Endpoint anchor = Endpoint::left;
    double lo = 0.0, hi = 0.0;  // panel offsets; finite tail uses hi as width; infinite tail uses lo
    double exponent = 0.0;
    double value = 0.0, error = 0.0, nested = 0.0;
    int depth = 0;
    bool saturated = false;
    PanelQuadrature halves[2];      // panel: quadrature on each half
    // tail look-ahead: the next graded panel and the deeper model
    double next_lo = 0.0, next_hi = 0.0;
    PanelQuadrature next_coarse;
  };

  Abscissa node(Endpoint anchor, double offset) const {
    if (anchor == Endpoint::left) return {a_ + offset, offset, length_ - offset};
    return {b_ - offset, length_ - offset, offset};
  }

  Sample eval(Endpoint anchor, double offset) {
    ++evaluations_;
    Sample s = call_integrand(f_, node(anchor, offset));
    if (!std::isfinite(s.value))
      throw NonConvergence("integrand is not finite at x = " + std::to_string(node(anchor, offset).x),
                           EnergyReport{});
    nested_evaluations_ += s.nested_evaluations;
    return s;
  }

  PanelQuadrature quad(Endpoint anchor, double lo, double hi) {
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    PanelQuadrature q;
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      const Sample s = eval(anchor, mid + half * rule_.nodes[i]);
      const double w = half * rule_.weights[i];
      q.value += w * s.value;
      q.abs_value += w * std::abs(s.value);
      q.nested += w * s.nested_error;
    }
    return q;
  }

  void fill_panel(Segment& seg, const PanelQuadrature& coarse) {
    const double mid = 0.5 * (seg.lo + seg.hi);
    seg.halves[0] = quad(seg.anchor, seg.lo, mid);
    seg.halves[1] = quad(seg.anchor, mid, seg.hi);
    seg.value = seg.halves[0].value + seg.halves[1].value;
    seg.nested = seg.halves[0].nested + seg.halves[1].nested;
    seg.error = std::abs(seg.value - coarse.value);
    const double abs_value = seg.halves[0].abs_value + seg.halves[1].abs_value;
    const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * abs_value;
    if (seg.error <= roundoff) {
      seg.error = roundoff;
      seg.saturated = true;
    }
  }

  double finite_model(Endpoint anchor, double width, double exponent) {
    return eval(anchor, width).value * width / (exponent + 1.0);
  }

  double infinite_model(double start, double exponent) {
    const Sample s = eval(Endpoint::left, start);
    return s.value * (a_ + start) / (-exponent - 1.0);
  }

  Segment make_finite_tail(Endpoint anchor, double width, double exponent, int depth) {
    Segment seg;
    seg.kind = Kind::finite_tail;
    seg.anchor = anchor;
    seg.hi = width;
    seg.exponent = exponent;
    seg.depth = depth;
    const double model = finite_model(anchor, width, exponent);
    seg.next_lo = width * cfg_.grading_ratio;
    seg.next_hi = width;
    seg.next_coarse = quad(anchor, seg.next_lo, seg.next_hi);
    const double deeper = finite_model(anchor, seg.next_lo, exponent);
    seg.value = seg.next_coarse.value + deeper;
    seg.nested = seg.next_coarse.nested;
    seg.error = std::abs(model - seg.value);
    if (!tail_can_deepen(seg) && seg.error <= tail_floor(seg)) seg.saturated = true;
    return seg;
  }

  Segment make_infinite_tail(double start, double exponent, int depth) {
    Segment seg;
    seg.kind = Kind::infinite_tail;
    seg.anchor = Endpoint::left;
    seg.lo = start;
    seg.exponent = exponent;
    seg.depth = depth;
    const double model = infinite_model(start, exponent);
    seg.next_lo = start;
    seg.next_hi = start / cfg_.grading_ratio;
    seg.next_coarse = quad(Endpoint::left, seg.next_lo, seg.next_hi);
    const double deeper = infinite_model(seg.next_hi, exponent);
    seg.value = seg.next_coarse.value + deeper;
    seg.nested = seg.next_coarse.nested;
    seg.error = std::abs(model - seg.value);
    return seg;
  }

  double tail_floor(const Segment& s) const {
    return 64.0 * std::numeric_limits<double>::epsilon() * std::abs(s.value);
  }

  bool tail_can_deepen(const Segment& s) const {
    if (s.kind == Kind::finite_tail) return s.next_lo * cfg_.grading_ratio > 1e-280;
    if (s.kind == Kind::infinite_tail) return s.next_hi / cfg_.grading_ratio < 1e280;
    return true;
  }

  void refine(std::size_t index) {
    Segment seg = segments_[index];
    if (seg.kind == Kind::panel) {
      const double mid = 0.5 * (seg.lo + seg.hi);
      Segment left, right;
      left.kind = right.kind = Kind::panel;
      left.anchor = right.anchor = seg.anchor;
      left.depth = right.depth = seg.depth + 1;
      left.lo = seg.lo;
      left.hi = mid;
      right.lo = mid;
      right.hi = seg.hi;
      fill_panel(left, seg.halves[0]);
      fill_panel(right, seg.halves[1]);
      segments_[index] = left;
      segments_.insert(segments_.begin() + static_cast<std::ptrdiff_t>(index) + 1, right);
      return;
    }
    Segment panel;
    panel.kind = Kind::panel;
    panel.anchor = seg.anchor;
    panel.lo = seg.next_lo;
    panel.hi = seg.next_hi;
    fill_panel(panel, seg.next_coarse);
    Segment tail = seg.kind == Kind::finite_tail
                       ? make_finite_tail(seg.anchor, seg.next_lo, seg.exponent, seg.depth + 1)
                       : make_infinite_tail(seg.next_hi, seg.exponent, seg.depth + 1);
    segments_[index] = tail;
    segments_.push_back(panel);
  }

  EnergyReport report(double total, double error) const {
    return {total, error, evaluations_ + nested_evaluations_};
  }

  F& f_;
  double a_, b_, length_;
  QuadConfig cfg_;
  const GaussLegendreRule& rule_;
  std::vector<Segment> segments_;
  std::size_t evaluations_ = 0;
  std::size_t nested_evaluations_ = 0;
};

inline constexpr int kInitialGradedLevels = 4;

inline std::vector<double> clean_breakpoints(std::vector<double> points, double lo, double hi) {
  std::erase_if(points, [&](double x) { return !(x > lo && x < hi) || !std::isfinite(x); });
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace detail

/// Integral of f over (a, b) with geometric grading towards the declared
/// singular endpoints. b may be +inf if a RIGHT descriptor gives the decay
/// exponent. `breakpoints` are interior points where f is not smooth; they
/// become panel boundaries.
///
/// f may take a double or an Abscissa; it may return a double or an
/// EnergyReport (a nested integral whose error is integrated alongside).
template <class F>
EnergyReport integrate_graded(F&& f, double a, double b,
                              const std::vector<SingularityDescriptor>& singularities,
                              const QuadConfig& cfg, const std::vector<double>& breakpoints = {}) {
  cfg.validate();
  if (!std::isfinite(a) || !(a < b))
    throw ParameterError(ErrorKind::invalid_argument, "integrate_graded requires finite a < b");
  const bool infinite = std::isinf(b);
  bool left_singular = false, right_singular = false;
  double left_exponent = 0.0, right_exponent = 0.0;
  for (const auto& d : singularities) {
    if (d.location == Endpoint::left) {
      if (!(d.exponent > -1.0))
        throw ParameterError(ErrorKind::invalid_argument, "endpoint exponent must exceed -1");
      left_singular = true;
      left_exponent = d.exponent;
    } else if (infinite) {
      if (!(d.exponent < -1.0))
        throw ParameterError(ErrorKind::invalid_argument, "decay exponent at infinity must be below -1");
      right_singular = true;
      right_exponent = d.exponent;
    } else {
      if (!(d.exponent > -1.0))
        throw ParameterError(ErrorKind::invalid_argument, "endpoint exponent must exceed -1");
      right_singular = true;
      right_exponent = d.exponent;
    }
  }
  if (infinite && !right_singular)
    throw ParameterError(ErrorKind::invalid_argument,
                         "an infinite interval needs a declared decay exponent");

  using Fn = std::remove_reference_t<F>;
  detail::GradedIntegrator<Fn> integrator(f, a, b, cfg);
  const double finite_end =
      infinite ? std::max(breakpoints.empty() ? a + 1.0
                                              : *std::max_element(breakpoints.begin(), breakpoints.end()),
                          a + 1.0)
               : b;
  std::vector<double> points = detail::clean_breakpoints(breakpoints, a, finite_end);
  points.insert(points.begin(), a);
  points.push_back(finite_end);
  const int levels = detail::kInitialGradedLevels;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double l = points[i], r = points[i + 1];
    const bool sl = i == 0 && left_singular;
    const bool sr = !infinite && i + 2 == points.size() && right_singular;
    if (sl && sr) {
      const double half = 0.5 * (r - l);
      integrator.add_graded(Endpoint::left, half, left_exponent, levels);
      integrator.add_graded(Endpoint::right, r - l - half, right_exponent, levels);
    } else if (sl) {
      integrator.add_graded(Endpoint::left, r - l, left_exponent, levels);
    } else if (sr) {
      integrator.add_graded(Endpoint::right, r - l, right_exponent, levels);
    } else {
      // geometric split when the subinterval spans several scales
      double lo = l - a;
      const double hi = r - a;
      while (lo > 0.0 && hi > 4.0 * lo) {
        integrator.add_panel(Endpoint::left, lo, 2.0 * lo);
        lo *= 2.0;
      }
      integrator.add_panel(Endpoint::left, lo, hi);
    }
  }
  if (infinite) integrator.add_outward(finite_end - a, right_exponent, levels);
  return integrator.run();
}

/// Smallest X >= start such that amplitude * X^(exponent+1) / (-exponent-1) <= abs_tol,
/// i.e. the tail of a function bounded by amplitude * y^exponent beyond X is below abs_tol.
inline double power_tail_cut(double amplitude, double exponent, double abs_tol, double start) {
  if (!(exponent < -1.0))
    throw ParameterError(ErrorKind::invalid_argument, "tail bound needs a decay exponent below -1");
  if (!(amplitude > 0.0)) return start;
  const double q = -exponent - 1.0;
  const double x = std::pow(amplitude / (q * abs_tol), 1.0 / q);
  return std::max(start, x);
}

/// Exponents of the paired principal-value integrand: `core_exponent` as
/// t -> 0 for g(x0 + t) + g(x0 - t), `origin_exponent` for g(y) as y -> 0.
struct PvShape {
  double core_exponent = 0.0;
  double origin_exponent = 0.0;
};

namespace detail {
template <class G>
double call_pv(G& g, double y, double offset) {
  if constexpr (std::is_invocable_v<G&, double, double>) {
    return g(y, offset);
  } else {
    return g(y);
  }
}
}  // namespace detail

/// Symmetric-excision limit of the integral of g over (0, tail_cut) minus
/// (x0 - eps, x0 + eps). The core (0, 2 x0) is folded onto t = |y - x0| so
/// the odd singular parts cancel before quadrature. g may take (y) or
/// (y, y - x0); the offset is exact near x0.
template <class G>
EnergyReport principal_value_halfline(G&& g, double x0, double tail_cut, const QuadConfig& cfg,
                                      PvShape shape = {}) {
  if (!(x0 > 0.0) || !std::isfinite(x0))
    throw ParameterError(ErrorKind::invalid_argument, "principal value point must be positive");
  auto paired = [&](const Abscissa& a) {
    const double t = a.from_left;
    return detail::call_pv(g, x0 + t, t) + detail::call_pv(g, a.to_right, -t);
  };
  EnergyReport core = integrate_graded(
      paired, 0.0, x0,
      {{Endpoint::left, shape.core_exponent}, {Endpoint::right, shape.origin_exponent}}, cfg);
  if (!(tail_cut > 2.0 * x0)) return core;
  auto far = [&](double u) {
    const double y = std::exp(u);
    return detail::call_pv(g, y, y - x0) * y;
  };
  return core + integrate_graded(far, std::log(2.0 * x0), std::log(tail_cut), {}, cfg);
}

/// Direct evaluation with a finite excision |y - x0| > eps. Diagnostic only:
/// its eps -> 0 limit is what principal_value_halfline computes.
template <class G>
EnergyReport principal_value_excision(G&& g, double x0, double eps, double tail_cut,
                                      const QuadConfig& cfg, double origin_exponent = 0.0) {
  if (!(eps > 0.0 && eps < x0))
    throw ParameterError(ErrorKind::invalid_argument, "excision radius must lie in (0, x0)");
  auto near_side = [&](const Abscissa& a) { return detail::call_pv(g, a.x, -eps - a.to_right); };
  auto far_side = [&](const Abscissa& a) { return detail::call_pv(g, a.x, eps + a.from_left); };
  EnergyReport left = integrate_graded(near_side, 0.0, x0 - eps,
                                       {{Endpoint::left, origin_exponent}}, cfg);
  if (!(tail_cut > x0 + eps)) return left;
  return left + integrate_graded(far_side, x0 + eps, tail_cut, {}, cfg);
}

/// 2 * integral over 0 < x < y < L of a symmetric F, computed in (x, t = y - x)
/// with grading towards the diagonal t = 0. F may take (x, y) or (x, y, t).
template <class F>
EnergyReport integrate_2d_offdiagonal(F&& f, double diag_exponent, double length,
                                      const QuadConfig& cfg) {
  if (!(diag_exponent > -1.0))
    throw ParameterError(ErrorKind::invalid_argument, "diagonal exponent must exceed -1");
  if (!(length > 0.0) || !std::isfinite(length))
    throw ParameterError(ErrorKind::invalid_argument, "side length must be positive and finite");
  QuadConfig inner = cfg;
  inner.rel_tol = cfg.rel_tol * 0.1;
  inner.abs_tol = std::numeric_limits<double>::min();
  auto outer = [&](const Abscissa& ta) {
    const double t = ta.from_left;
    auto row = [&](double x) {
      if constexpr (std::is_invocable_v<F&, double, double, double>) {
        return f(x, x + t, t);
      } else {
        return f(x, x + t);
      }
    };
    return integrate_graded(row, 0.0, ta.to_right, {}, inner);
  };
  return scaled(integrate_graded(outer, 0.0, length, {{Endpoint::left, diag_exponent}}, cfg), 2.0);
}

/// Layout of a pair integrand on (0, inf)^2 written in (x, t = y - x).
struct HalfLinePairLayout {
  double support_end = kInf;      ///< integrand vanishes for x >= support_end
  std::vector<double> knots;      ///< non-smooth lines x = k and x + t = k
  double inner_origin_exponent = 0.0;   ///< x -> 0 at fixed t
  double inner_decay_exponent = -2.0;   ///< x -> inf at fixed t (unbounded support)
  double outer_origin_exponent = 0.0;   ///< t -> 0 after the x integral
  double outer_decay_exponent = -2.0;   ///< t -> inf after the x integral
};

/// 2 * integral over t > 0 and x > 0 of f(x, t), where f(x, t) is the pair
/// integrand at (x, x + t). Used for Gagliardo-type energies on the half-line.
template <class F>
EnergyReport integrate_pairs_halfline(F&& f, const HalfLinePairLayout& layout,
                                      const QuadConfig& cfg) {
  const double support = layout.support_end;
  std::vector<double> knots = layout.knots;
  if (std::isfinite(support)) knots.push_back(support);
  knots = detail::clean_breakpoints(knots, 0.0, kInf);

  std::vector<double> outer_breaks = knots;
  for (double k1 : knots)
    for (double k2 : knots)
      if (k1 > k2) outer_breaks.push_back(k1 - k2);
  outer_breaks = detail::clean_breakpoints(outer_breaks, 0.0, kInf);

  QuadConfig inner = cfg;
  inner.rel_tol = cfg.rel_tol * 0.1;
  inner.abs_tol = std::numeric_limits<double>::min();

  auto outer = [&](const Abscissa& ta) {
    const double t = ta.x;
    std::vector<double> breaks;
    breaks.reserve(2 * knots.size() + 1);
    for (double k : knots) {
      breaks.push_back(k);
      if (k - t > 0.0) breaks.push_back(k - t);
    }
    breaks.push_back(t);
    auto row = [&](double x) { return f(x, t); };
    if (std::isfinite(support)) {
      return integrate_graded(row, 0.0, support, {{Endpoint::left, layout.inner_origin_exponent}},
                              inner, breaks);
    }
    return integrate_graded(row, 0.0, kInf,
                            {{Endpoint::left, layout.inner_origin_exponent},
                             {Endpoint::right, layout.inner_decay_exponent}},
                            inner, breaks);
  };
  EnergyReport r = integrate_graded(outer, 0.0, kInf,
                                    {{Endpoint::left, layout.outer_origin_exponent},
                                     {Endpoint::right, layout.outer_decay_exponent}},
                                    cfg, outer_breaks);
  return scaled(r, 2.0);
}

}  // namespace fhardy
