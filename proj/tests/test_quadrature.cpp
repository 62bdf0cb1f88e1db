#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fhardy/quadrature.hpp"

using namespace fhardy;

namespace {
QuadConfig tight() {
  QuadConfig c;
  c.rel_tol = 1e-12;
  c.abs_tol = 1e-300;
  return c;
}
}  // namespace

TEST(QuadConfig, DefaultsAndValidation) {
  const QuadConfig c = QuadConfig::one_d();
  EXPECT_DOUBLE_EQ(c.rel_tol, 1e-8);
  EXPECT_DOUBLE_EQ(c.abs_tol, 1e-12);
  EXPECT_EQ(c.max_refinements, 30);
  EXPECT_DOUBLE_EQ(c.grading_ratio, 0.5);
  EXPECT_EQ(c.panel_order, 16);
  EXPECT_DOUBLE_EQ(QuadConfig::two_d().rel_tol, 1e-4);
  QuadConfig bad;
  bad.grading_ratio = 1.0;
  EXPECT_THROW(bad.validate(), ParameterError);
  bad = {};
  bad.rel_tol = 0.0;
  EXPECT_THROW(bad.validate(), ParameterError);
}

TEST(GaussLegendre, WeightsSumToTwoAndNodesSymmetric) {
  for (int n : {1, 2, 5, 16, 32}) {
    const auto& r = gauss_legendre(n);
    double sum = 0.0;
    for (double w : r.weights) sum += w;
    EXPECT_NEAR(sum, 2.0, 1e-14);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(r.nodes[i], -r.nodes[n - 1 - i], 1e-15);
  }
}

TEST(IntegrateGraded, InverseSquareRootAtLeft) {
  const EnergyReport r = integrate_graded([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                          {{Endpoint::left, -0.5}}, tight());
  EXPECT_NEAR(r.value, 2.0, 1e-11);
  EXPECT_LE(std::abs(r.value - 2.0), std::max(r.error_estimate, 1e-14));
}

TEST(IntegrateGraded, PowerSingularityAtRightUsesExactDistance) {
  auto f = [](const Abscissa& a) { return std::pow(a.to_right, -0.25); };
  const EnergyReport r = integrate_graded(f, 0.0, 1.0, {{Endpoint::right, -0.25}}, tight());
  EXPECT_NEAR(r.value, 4.0 / 3.0, 1e-11);
}

TEST(IntegrateGraded, LiteralExampleIntegrand) {
  // |1 - r^(-1/8)|^2 (1 - r)^(-3/2): mpmath, 30 digits
  auto f = [](const Abscissa& a) {
    const double w = -std::expm1(0.125 * -std::log(a.x));
    return w * w * std::pow(a.to_right, -1.5);
  };
  const EnergyReport r = integrate_graded(f, 0.0, 1.0, {{Endpoint::left, -0.25}, {Endpoint::right, 0.5}},
                                          tight());
  EXPECT_NEAR(r.value / 0.0609367735540413640321353927769, 1.0, 1e-11);
}

TEST(IntegrateGraded, PolynomialExactnessOnSmoothPanel) {
  // degree 2 * 16 - 1 = 31
  auto f = [](double x) { return std::pow(x, 31) + 3.0 * std::pow(x, 7) - x; };
  QuadConfig c = tight();
  const EnergyReport r = integrate_graded(f, 0.0, 1.0, {}, c);
  const double exact = 1.0 / 32.0 + 3.0 / 8.0 - 0.5;
  EXPECT_NEAR(r.value / exact, 1.0, 1e-13);
}

TEST(IntegrateGraded, InfiniteIntervalWithDecay) {
  auto f = [](double x) { return 1.0 / (1.0 + x * x); };
  const EnergyReport r = integrate_graded(f, 0.0, kInf, {{Endpoint::right, -2.0}}, tight());
  EXPECT_NEAR(r.value, 0.5 * std::numbers::pi, 1e-11);
}

TEST(IntegrateGraded, BreakpointsBecomePanelBoundaries) {
  auto f = [](double x) { return std::abs(x - 0.3) + (x > 0.7 ? 1.0 : 0.0); };
  const EnergyReport r = integrate_graded(f, 0.0, 1.0, {}, tight(), {0.3, 0.7});
  EXPECT_NEAR(r.value, 0.5 * 0.09 + 0.5 * 0.49 + 0.3, 1e-13);
}

TEST(IntegrateGraded, RejectsNonIntegrableExponent) {
  auto f = [](double x) { return 1.0 / x; };
  EXPECT_THROW(integrate_graded(f, 0.0, 1.0, {{Endpoint::left, -1.0}}, tight()), ParameterError);
  EXPECT_THROW(integrate_graded(f, 1.0, kInf, {{Endpoint::right, -1.0}}, tight()), ParameterError);
  EXPECT_THROW(integrate_graded(f, 1.0, 0.0, {}, tight()), ParameterError);
}

TEST(IntegrateGraded, UndeclaredSingularityRaisesNonConvergence) {
  auto f = [](double x) { return std::pow(x, -0.9); };
  try {
    integrate_graded(f, 0.0, 1.0, {}, tight());
    FAIL() << "expected NonConvergence";
  } catch (const NonConvergence& e) {
    EXPECT_GT(e.best_estimate().value, 0.0);
    EXPECT_EQ(e.kind(), ErrorKind::non_convergence);
  }
}

TEST(IntegrateGraded, SuccessiveTolerancesFormCauchySequence) {
  auto f = [](const Abscissa& a) {
    const double w = -std::expm1(-0.25 * std::log(a.x));
    return w * w * std::pow(a.to_right, -1.5);
  };
  double previous = 0.0, previous_tol = 0.0;
  for (double tol : {1e-6, 1e-8, 1e-10, 1e-12}) {
    QuadConfig c = tight();
    c.rel_tol = tol;
    const EnergyReport r =
        integrate_graded(f, 0.0, 1.0, {{Endpoint::left, -0.5}, {Endpoint::right, 0.5}}, c);
    if (previous != 0.0) EXPECT_LE(std::abs(r.value - previous), 10.0 * previous_tol * std::abs(r.value));
    previous = r.value;
    previous_tol = tol;
  }
}

TEST(IntegrateGraded, NestedReportsPropagateError) {
  auto inner = [](double y) {
    return integrate_graded([y](double x) { return x * y; }, 0.0, 1.0, {}, QuadConfig{});
  };
  const EnergyReport r = integrate_graded(inner, 0.0, 1.0, {}, QuadConfig{});
  EXPECT_NEAR(r.value, 0.25, 1e-14);
  EXPECT_GT(r.evaluations, 100u);
}

TEST(PrincipalValue, OddAboutPointVanishes) {
  // PV over (0, 2) of 1/(1 - y)
  auto g = [](double, double off) { return std::abs(off) <= 1.0 ? -1.0 / off : 0.0; };
  const EnergyReport r = principal_value_halfline(g, 1.0, 2.0, tight(), {0.0, 0.0});
  EXPECT_LE(std::abs(r.value), 1e-12);
}

TEST(PrincipalValue, RemovesOddPart) {
  // PV over (0, 2) of y/(1 - y) = -2
  auto g = [](double y, double off) { return std::abs(off) <= 1.0 ? -y / off : 0.0; };
  const EnergyReport r = principal_value_halfline(g, 1.0, 2.0, tight(), {0.0, 0.0});
  EXPECT_NEAR(r.value, -2.0, 1e-12);
}

TEST(PrincipalValue, OddIntegrandWithinAbsTol) {
  auto g = [](double, double off) {
    const double t = std::abs(off);
    return t < 0.5 ? std::copysign(std::pow(t, -1.3) * std::exp(-t), off) : 0.0;
  };
  QuadConfig c;
  c.abs_tol = 1e-12;
  const EnergyReport r = principal_value_halfline(g, 0.5, 1.0, c, {0.0, 0.0});
  EXPECT_LE(std::abs(r.value), c.abs_tol);
}

TEST(PrincipalValue, ExcisionDiagnosticApproachesPairedValue) {
  auto g = [](double y, double off) { return std::abs(off) <= 1.0 ? -y / off : 0.0; };
  const EnergyReport small = principal_value_excision(g, 1.0, 1e-4, 2.0, tight());
  EXPECT_NEAR(small.value, -2.0, 1e-3);
  EXPECT_THROW(principal_value_excision(g, 1.0, 2.0, 2.0, tight()), ParameterError);
}

TEST(PrincipalValue, RejectsNonPositivePoint) {
  auto g = [](double y) { return y; };
  EXPECT_THROW(principal_value_halfline(g, 0.0, 1.0, tight()), ParameterError);
}

TEST(PowerTailCut, BoundBelowTolerance) {
  const double cut = power_tail_cut(2.0, -1.5, 1e-6, 1.0);
  EXPECT_NEAR(2.0 * std::pow(cut, -0.5) / 0.5, 1e-6, 1e-12);
  EXPECT_DOUBLE_EQ(power_tail_cut(1e-20, -3.0, 1e-6, 5.0), 5.0);
  EXPECT_THROW(power_tail_cut(1.0, -1.0, 1e-6, 1.0), ParameterError);
}

TEST(OffDiagonal, ZeroIntegrand) {
  const EnergyReport r = integrate_2d_offdiagonal([](double, double) { return 0.0; }, 0.0, 1.0,
                                                  QuadConfig::two_d());
  EXPECT_EQ(r.value, 0.0);
}

TEST(OffDiagonal, SymmetricKernelAgainstClosedForm) {
  // 2 int_{0<x<y<1} (y - x)^(-1/2) = 2 int_0^1 (1 - t) t^(-1/2) dt = 8/3
  auto f = [](double, double, double t) { return std::pow(t, -0.5); };
  const EnergyReport r = integrate_2d_offdiagonal(f, -0.5, 1.0, QuadConfig{});
  EXPECT_NEAR(r.value, 8.0 / 3.0, 1e-8);
  EXPECT_THROW(integrate_2d_offdiagonal(f, -1.0, 1.0, QuadConfig{}), ParameterError);
}

TEST(OffDiagonal, ScalingLaw) {
  // |u(x) - u(y)|^2 |x - y|^(-3/2) for u = hat on (0, L); energy of u(2 .) = 2^(ps - 1) energy of u
  auto energy = [](double lambda) {
    auto u = [lambda](double x) { return std::max(0.0, 1.0 - std::abs(lambda * x - 1.0)); };
    auto f = [&](double x, double y, double t) {
      const double d = u(y) - u(x);
      return d * d * std::pow(t, -1.5);
    };
    return integrate_2d_offdiagonal(f, 0.5, 2.0 / lambda, QuadConfig{}).value;
  };
  EXPECT_NEAR(energy(2.0) / energy(1.0), std::pow(2.0, 0.5 - 1.0), 1e-6);
}

TEST(PairsHalfline, HatEnergyMatchesOracle) {
  // hat(0,1,2), p = 2, s = 0.25: 64/15 (mpmath nested tanh-sinh)
  auto u = [](double x) { return x <= 0.0 || x >= 2.0 ? 0.0 : (x < 1.0 ? x : 2.0 - x); };
  HalfLinePairLayout layout;
  layout.support_end = 2.0;
  layout.knots = {1.0};
  layout.outer_origin_exponent = 2.0 - 1.5;
  layout.outer_decay_exponent = -1.5;
  auto f = [&](double x, double t) {
    const double d = u(x + t) - u(x);
    return d * d * std::pow(t, -1.5);
  };
  QuadConfig c;
  c.rel_tol = 1e-10;
  const EnergyReport r = integrate_pairs_halfline(f, layout, c);
  EXPECT_NEAR(r.value / (64.0 / 15.0), 1.0, 1e-9);
}
