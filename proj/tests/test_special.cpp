#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fhardy/special.hpp"

using namespace fhardy;

TEST(LogGamma, KnownValues) {
  EXPECT_NEAR(log_gamma(1.0), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-15);
  EXPECT_NEAR(log_gamma(10.0), std::log(362880.0), 1e-13);
  EXPECT_NEAR(log_gamma(200.0), 857.93366982585743, 1e-10);
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_THROW(log_gamma(0.0), ParameterError);
  EXPECT_THROW(log_gamma(-1.5), ParameterError);
}

TEST(LogGamma, RecursionOnLogGrid) {
  for (int i = 0; i <= 200; ++i) {
    const double x = std::pow(10.0, -2.0 + 4.0 * i / 200.0);
    const double lhs = std::exp(log_gamma(x + 1.0));
    const double rhs = x * std::exp(log_gamma(x));
    EXPECT_NEAR(lhs / rhs, 1.0, 1e-12) << "x = " << x;
  }
}

TEST(SphereArea, SmallDimensions) {
  EXPECT_NEAR(sphere_area(0), 2.0, 1e-15);
  EXPECT_NEAR(sphere_area(1), 2.0 * std::numbers::pi, 1e-14);
  EXPECT_NEAR(sphere_area(2), 4.0 * std::numbers::pi, 1e-14);
  EXPECT_THROW(sphere_area(-1), ParameterError);
}

TEST(SphereArea, Recursion) {
  for (int d = 2; d <= 40; ++d)
    EXPECT_NEAR(sphere_area(d) / (2.0 * std::numbers::pi * sphere_area(d - 2) / (d - 1)), 1.0, 1e-12)
        << "d = " << d;
}
