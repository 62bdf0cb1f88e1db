#include <gtest/gtest.h>

#include <cmath>

#include "fhardy/energies.hpp"

using namespace fhardy;

namespace {
QuadConfig tight() {
  QuadConfig c;
  c.rel_tol = 1e-10;
  return c;
}
}  // namespace

TEST(Energy, ZeroProfileGivesZero) {
  const HardyParams hp = make_params(1, 2.0, 0.25);
  EXPECT_EQ(gagliardo_energy_1d(Profile1D::zero(), hp, tight()).value, 0.0);
  EXPECT_EQ(hardy_term_1d(Profile1D::zero(), hp, tight()).value, 0.0);
  EXPECT_THROW(rayleigh_quotient(Profile1D::zero(), hp, tight()), InadmissibleFunction);
  const GsrReport g = gsr_residual(Profile1D::zero(), hp, tight());
  EXPECT_EQ(g.lhs_gap, 0.0);
  EXPECT_EQ(g.slack, 0.0);
}

// references from 30-digit mpmath quadrature of the same integrals
TEST(Energy, HatGoldenValues) {
  const Profile1D hat = Profile1D::hat(0.0, 1.0, 2.0);
  EXPECT_NEAR(gagliardo_energy_1d(hat, make_params(1, 2.0, 0.25), tight()).value, 64.0 / 15.0, 1e-8);
  EXPECT_NEAR(gagliardo_energy_1d(hat, make_params(1, 3.0, 0.25), tight()).value,
              2.18803418804517782478818593326, 1e-8);
  EXPECT_NEAR(hardy_term_1d(hat, make_params(1, 2.0, 0.25), tight()).value, 0.700644532791872208220538556628,
              1e-10);
  EXPECT_NEAR(hardy_term_1d(hat, make_params(1, 2.0, 0.75), tight()).value, 0.915055334686986146115320275096,
              1e-10);
}

TEST(Energy, HardyTermOfDecreasingRamp) {
  // int_0^1 (1 - x)^2 x^(-1/2) dx = B(1/2, 3)
  const Profile1D ramp = Profile1D::hat(0.0, 0.0, 1.0);
  EXPECT_NEAR(hardy_term_1d(ramp, make_params(1, 2.0, 0.25), tight()).value, 16.0 / 15.0, 1e-10 * 16.0 / 15.0);
}

TEST(Energy, ScalingLaw) {
  const HardyParams hp = make_params(1, 2.0, 0.25);
  const Profile1D u = Profile1D::hat(0.0, 1.0, 2.0);
  const double e1 = gagliardo_energy_1d(u, hp, tight()).value;
  const double h1 = hardy_term_1d(u, hp, tight()).value;
  const double q1 = rayleigh_quotient(u, hp, tight()).quotient;
  for (double lambda : {0.5, 2.0}) {
    const Profile1D v = u.dilated(lambda);
    const double factor = std::pow(lambda, hp.ps() - 1.0);
    EXPECT_NEAR(gagliardo_energy_1d(v, hp, tight()).value / (factor * e1), 1.0, 1e-6);
    EXPECT_NEAR(hardy_term_1d(v, hp, tight()).value / (factor * h1), 1.0, 1e-6);
    EXPECT_NEAR(rayleigh_quotient(v, hp, tight()).quotient / q1, 1.0, 1e-6);
  }
}

TEST(Energy, QuotientExceedsConstant) {
  for (double p : {1.5, 2.0, 3.0})
    for (double s : {0.25, 0.75}) {
      const QuotientReport q = rayleigh_quotient(Profile1D::hat(0.0, 1.0, 2.0), make_params(1, p, s), tight());
      EXPECT_GT(q.margin, -q.error_budget) << "p=" << p << " s=" << s;
      EXPECT_NEAR(q.quotient, q.energy.value / q.hardy_term.value, 1e-15 * q.quotient);
    }
}

TEST(Energy, LinearCaseEqualityForMonotoneProfiles) {
  for (double s : {0.25, 0.75}) {
    const QuotientReport q = rayleigh_quotient(Profile1D::trapezoid(1.0, 2.0), make_params(1, 1.0, s), tight());
    EXPECT_NEAR(q.quotient / q.sharp_constant, 1.0, 1e-6) << "s=" << s;
    const QuotientReport h = rayleigh_quotient(Profile1D::hat(0.0, 1.0, 2.0), make_params(1, 1.0, s), tight());
    EXPECT_GT(h.margin, 10.0 * h.error_budget) << "s=" << s;
  }
}

TEST(Energy, GroundStateRemainderQuadratic) {
  for (double s : {0.25, 0.75}) {
    const HardyParams hp = make_params(1, 2.0, s);
    for (const Profile1D& u : {Profile1D::hat(0.0, 1.0, 2.0), Profile1D::ground_state_family(0.3, hp)}) {
      const GsrReport g = gsr_residual(u, hp, tight());
      EXPECT_EQ(g.c_p, 1.0);
      EXPECT_LE(std::abs(g.slack), 10.0 * g.error_budget + 1e-12) << u.name() << " s=" << s;
      EXPECT_GT(g.lhs_gap, 0.0);
    }
  }
}

TEST(Energy, GroundStateRemainderCubic) {
  const HardyParams hp = make_params(1, 3.0, 0.25);
  const GsrReport g = gsr_residual(Profile1D::hat(0.0, 1.0, 2.0), hp, tight());
  EXPECT_GE(g.slack, -g.error_budget);
  EXPECT_NEAR(g.c_p, 2.0 - std::sqrt(2.0), 1e-8);
  EXPECT_THROW(weighted_energy_1d(Profile1D::hat(0.0, 1.0, 2.0), make_params(1, 1.5, 0.25), tight()),
               ParameterError);
}

TEST(Energy, EulerLagrangeIdentity) {
  for (auto [p, s] : {std::pair{1.0, 0.5}, {2.0, 0.25}, {2.0, 0.75}, {3.0, 0.25}}) {
    const HardyParams hp = make_params(1, p, s);
    for (double x : {0.5, 1.0, 2.0}) {
      const ElIdentityReport r = el_identity(x, hp, tight());
      EXPECT_LE(r.relative_error, 1e-6) << "p=" << p << " s=" << s << " x=" << x;
      EXPECT_GT(r.tail_cut, x);
    }
  }
  EXPECT_THROW(el_identity(0.0, make_params(1, 2.0, 0.25), tight()), ParameterError);
}

TEST(Energy, InadmissibleInputsRaise) {
  const HardyParams super = make_params(1, 2.0, 0.75);
  const Profile1D touching = Profile1D::hat(0.0, 0.0, 2.0);
  EXPECT_THROW(gagliardo_energy_1d(touching, super, tight()), InadmissibleFunction);
  EXPECT_THROW(hardy_term_1d(touching, super, tight()), InadmissibleFunction);
  EXPECT_THROW(rayleigh_quotient(touching, super, tight()), InadmissibleFunction);
  const Profile1D slow = Profile1D::ground_state_family(0.05, super);
  EXPECT_THROW(hardy_term_1d(slow, make_params(1, 2.0, 0.25), tight()), InadmissibleFunction);
}

TEST(RadialProposalTest, DensityIntegratesToOneAndMatchesSampler) {
  const RadialProposal rp(0.5, 0.5, 1.0);
  QuadConfig c;
  c.rel_tol = 1e-12;
  const EnergyReport mass = integrate_graded([&](double r) { return rp.density(r); }, 0.0, kInf,
                                             {{Endpoint::left, 0.5}, {Endpoint::right, -1.5}}, c, {1.0});
  EXPECT_NEAR(mass.value, 1.0, 1e-10);
  // inverse CDF: P(r < r0) equals the inner mass
  const EnergyReport inner = integrate_graded([&](double r) { return rp.density(r); }, 0.0, 1.0,
                                              {{Endpoint::left, 0.5}}, c, {});
  EXPECT_NEAR(rp.sample(inner.value), 1.0, 1e-9);
  EXPECT_LT(rp.sample(0.5 * inner.value), 1.0);
  EXPECT_GT(rp.sample(0.5 + 0.5 * inner.value), 1.0);
}

TEST(MonteCarloEnergy, SeedsAgreeWithinNoise) {
  const HardyParams hp = make_params(2, 2.0, 0.25);
  const ProductFunction f = sharpness_sequence(2, Profile1D::hat(0.0, 1.0, 2.0), 2);
  MonteCarloOptions opt;
  opt.threads = 4;
  const EnergyReport a = monte_carlo_energy(f, hp, 400000, 1, 3.0, opt);
  const EnergyReport b = monte_carlo_energy(f, hp, 400000, 2, 3.0, opt);
  EXPECT_GT(a.value, 0.0);
  EXPECT_LE(std::abs(a.value - b.value), 3.0 * std::hypot(a.error_estimate, b.error_estimate));
  const EnergyReport again = monte_carlo_energy(f, hp, 400000, 1, 3.0, MonteCarloOptions{});
  EXPECT_EQ(a.value, again.value);
}

TEST(MonteCarloEnergy, ZeroAndInvalidInputs) {
  const HardyParams hp = make_params(2, 2.0, 0.25);
  EXPECT_EQ(monte_carlo_energy(sharpness_sequence(2, Profile1D::zero(), 2), hp, 1000, 1, 3.0).value, 0.0);
  const ProductFunction f = sharpness_sequence(2, Profile1D::hat(0.0, 1.0, 2.0), 2);
  EXPECT_THROW(monte_carlo_energy(f, hp, 1000, 1, 2.5), ParameterError);
  const ProductFunction g = sharpness_sequence(2, Profile1D::ground_state_family(0.2, hp), 2);
  EXPECT_THROW(monte_carlo_energy(g, hp, 1000, 1, 3.0), InadmissibleFunction);
}

TEST(MonteCarloEnergy, ProductHardyTermFactorizes) {
  const HardyParams hp = make_params(3, 2.0, 0.25);
  const Profile1D phi = Profile1D::hat(0.0, 1.0, 2.0);
  const EnergyReport h = product_hardy_term(sharpness_sequence(4, phi, 3), hp, tight());
  EXPECT_NEAR(h.value / (cutoff_power_volume(4, 2, 2.0) * 0.700644532791872208220538556628), 1.0, 1e-10);
}
