#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fhardy/profiles.hpp"
#include "fhardy/quadrature.hpp"

using namespace fhardy;

namespace {
double slope(const Profile1D& u, double x1, double x2) {
  return std::log(std::abs(u(x2) / u(x1))) / std::log(x2 / x1);
}
}  // namespace

TEST(Profile, HatValuesAndLinearity) {
  const Profile1D u = Profile1D::hat(0.0, 1.0, 2.0);
  EXPECT_DOUBLE_EQ(u(1.0), 1.0);
  EXPECT_DOUBLE_EQ(u(0.5), 0.5);
  EXPECT_DOUBLE_EQ(u(1.5), 0.5);
  EXPECT_DOUBLE_EQ(u(2.5), 0.0);
  EXPECT_NEAR(u(1.3), 0.5 * (u(1.1) + u(1.5)), 1e-15);
  EXPECT_EQ(u.kind(), ProfileKind::hat);
  EXPECT_EQ(u.knots(), (std::vector<double>{1.0, 2.0}));
}

TEST(Profile, GroundStateFamilyAtOne) {
  const HardyParams hp = make_params(1, 4.0, 0.125);  // alpha = 0.125
  for (double eps : {0.1, 0.3}) EXPECT_DOUBLE_EQ(Profile1D::ground_state_family(eps, hp)(1.0), 1.0);
  const Profile1D u = Profile1D::ground_state_family(0.1, make_params(1, 2.0, 0.25));
  EXPECT_DOUBLE_EQ(u(1.0), 1.0);
  EXPECT_DOUBLE_EQ(u.boundary_exponent(), -0.25 + 0.1);
  EXPECT_DOUBLE_EQ(u.decay_exponent(), -0.25 - 0.1);
  EXPECT_THROW(Profile1D::ground_state_family(0.0, hp), ParameterError);
}

TEST(Profile, IncrementMatchesDifference) {
  const HardyParams hp = make_params(1, 2.0, 0.75);
  std::vector<Profile1D> catalog{
      Profile1D::hat(0.0, 1.0, 2.0),
      Profile1D::hat(0.5, 1.0, 3.0, 2.0),
      Profile1D::trapezoid(1.0, 2.0),
      Profile1D::smooth_bump(1.0, 0.5),
      Profile1D::ground_state_family(0.2, hp),
      Profile1D::custom_piecewise({0.0, 0.5, 1.5, 2.0}, {0.0, 1.0, -0.5, 0.0}, 0.7),
  };
  for (const auto& u : catalog)
    for (double x : {0.01, 0.3, 0.9, 1.2, 1.9})
      for (double t : {1e-3, 0.2, 0.7, 1.5, 4.0})
        EXPECT_NEAR(u.increment(x, t), u(x + t) - u(x), 1e-13) << u.name() << " x=" << x << " t=" << t;
}

TEST(Profile, IncrementIsAccurateForTinySteps) {
  const Profile1D u = Profile1D::ground_state_family(0.2, make_params(1, 2.0, 0.25));
  const double x = 0.5, t = 1e-12;
  const double exact = std::pow(x, -0.05) * std::expm1(-0.05 * std::log1p(t / x));
  EXPECT_NEAR(u.increment(x, t) / exact, 1.0, 1e-12);
}

TEST(Profile, DeclaredExponentsMatchProbes) {
  const HardyParams hp = make_params(1, 2.0, 0.25);
  struct Case {
    Profile1D u;
    bool probe_decay;
  };
  std::vector<Case> cases{
      {Profile1D::hat(0.0, 1.0, 2.0), false},
      {Profile1D::hat(0.0, 0.0, 2.0), false},
      {Profile1D::trapezoid(1.0, 2.0), false},
      {Profile1D::ground_state_family(0.1, hp), true},
      {Profile1D::ground_state_family(0.3, make_params(1, 2.0, 0.75)), true},
      {Profile1D::custom_piecewise({0.0, 1.0, 2.0}, {0.0, 0.5, 0.0}, -0.1), false},
  };
  for (const auto& c : cases) {
    EXPECT_NEAR(slope(c.u, 1e-4, 1e-3), c.u.boundary_exponent(), 0.01) << c.u.name();
    if (c.probe_decay) EXPECT_NEAR(slope(c.u, 1e3, 1e4), c.u.decay_exponent(), 0.01) << c.u.name();
    else EXPECT_TRUE(c.u.bounded_support());
  }
}

TEST(Profile, DilationRescales) {
  const Profile1D u = Profile1D::hat(0.0, 1.0, 2.0);
  const Profile1D v = u.dilated(2.0);
  for (double x : {0.1, 0.4, 0.7, 0.99}) EXPECT_NEAR(v(x), u(2.0 * x), 1e-15);
  EXPECT_DOUBLE_EQ(v.support_end(), 1.0);
  const Profile1D b = Profile1D::smooth_bump(1.0, 0.5).dilated(0.5);
  EXPECT_NEAR(b(2.0), Profile1D::smooth_bump(1.0, 0.5)(1.0), 1e-15);
}

TEST(Profile, ConstructionRejectsBadShapes) {
  EXPECT_THROW(Profile1D::hat(1.0, 0.5, 2.0), ParameterError);
  EXPECT_THROW(Profile1D::trapezoid(2.0, 1.0), ParameterError);
  EXPECT_THROW(Profile1D::smooth_bump(0.2, 0.5), ParameterError);
  EXPECT_THROW(Profile1D::custom_piecewise({0.0, 1.0}, {1.0, 1.0}), ParameterError);
  EXPECT_THROW(Profile1D::custom_piecewise({0.0, 2.0, 1.0}, {1.0, 1.0, 0.0}), ParameterError);
}

TEST(Profile, LipschitzMetadata) {
  EXPECT_DOUBLE_EQ(*Profile1D::hat(0.0, 1.0, 3.0).lipschitz(), 1.0);
  EXPECT_FALSE(Profile1D::ground_state_family(0.1, make_params(1, 2.0, 0.25)).lipschitz().has_value());
  EXPECT_TRUE(Profile1D::zero().identically_zero());
}

TEST(CutoffChi, ValuesAndShape) {
  EXPECT_DOUBLE_EQ(cutoff_chi(3, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(cutoff_chi(3, 3.5), 0.5);
  EXPECT_DOUBLE_EQ(cutoff_chi(3, 7.0), 0.0);
  double last = 1.0;
  for (int i = 0; i <= 300; ++i) {
    const double r = 3.0 + i / 200.0;
    const double v = cutoff_chi(3, r);
    EXPECT_LE(v, last);
    EXPECT_LE(std::abs(v - last), 1.0 / 200.0 + 1e-15);
    last = v;
  }
  EXPECT_THROW(cutoff_chi(0, 1.0), ParameterError);
}

TEST(CutoffChi, PowerVolumeMatchesQuadrature) {
  for (int dim : {1, 2, 3})
    for (double p : {1.0, 2.0, 3.5}) {
      const int n = 4;
      QuadConfig c;
      c.rel_tol = 1e-12;
      const EnergyReport radial = integrate_graded(
          [&](double r) { return std::pow(cutoff_chi(n, r), p) * std::pow(r, dim - 1); }, 0.0, n + 1.0, {}, c,
          {double(n)});
      EXPECT_NEAR(cutoff_power_volume(n, dim, p) / (sphere_area(dim - 1) * radial.value), 1.0, 1e-11);
    }
}

TEST(ProductFunction, EvaluatesAsTensorProduct) {
  const Profile1D phi = Profile1D::hat(0.0, 1.0, 2.0);
  const ProductFunction f = sharpness_sequence(2, phi, 3);
  EXPECT_DOUBLE_EQ(f(std::vector<double>{0.0, 0.0, 0.5}), 0.5);
  EXPECT_DOUBLE_EQ(f(std::vector<double>{4.0, 0.0, 1.0}), 0.0);
  EXPECT_DOUBLE_EQ(f(std::vector<double>{2.5, 0.0, 1.0}), 0.5);
  EXPECT_THROW(sharpness_sequence(2, phi, 1), ParameterError);
}

TEST(ProductFunction, CutoffVolumeGrowsLikeBall) {
  for (int n : {4, 16, 64}) {
    const double ball = std::pow(n + 1.0, 2) * std::numbers::pi;  // |B^2_{n+1}|
    const double v = cutoff_power_volume(n, 2, 2.0);
    EXPECT_LT(v, ball);
    EXPECT_GT(v, std::pow(double(n), 2) * std::numbers::pi);
  }
}

TEST(Admissibility, BoundaryContactDependsOnRegime) {
  const Profile1D touching = Profile1D::hat(0.0, 0.0, 2.0);  // value 1 at 0
  EXPECT_TRUE(admissibility_check(touching, make_params(1, 2.0, 0.25)));
  const Admissibility super = admissibility_check(touching, make_params(1, 2.0, 0.75));
  EXPECT_FALSE(super);
  EXPECT_NE(super.diagnostic.find("boundary"), std::string::npos);
}

TEST(Admissibility, GroundStateFamilyInBothRegimes) {
  for (double s : {0.25, 0.75}) {
    const HardyParams hp = make_params(1, 2.0, s);
    EXPECT_TRUE(admissibility_check(Profile1D::ground_state_family(0.1, hp), hp));
    // near-zero Hardy exponent -1 + p eps
    const Profile1D u = Profile1D::ground_state_family(0.1, hp);
    EXPECT_NEAR(hp.p() * u.boundary_exponent() - hp.ps(), -0.8, 1e-14);
  }
}

TEST(Admissibility, SlowDecayIsRejected) {
  const HardyParams hp = make_params(1, 2.0, 0.25);
  // ground state of different parameters decays too slowly here
  const Profile1D slow = Profile1D::ground_state_family(0.05, make_params(1, 2.0, 0.75));
  const Admissibility a = admissibility_check(slow, hp);
  EXPECT_FALSE(a);
  EXPECT_NE(a.diagnostic.find("decay"), std::string::npos);
}
