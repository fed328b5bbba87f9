#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "rbdkit/error.hpp"
#include "rbdkit/maintainability.hpp"
#include "rbdkit/probability.hpp"

namespace rbdkit {
namespace {

TEST(Probability, DefaultIsZero) {
  Probability p;
  EXPECT_EQ(p.value(), 0.0);
  EXPECT_EQ(p.complement(), 1.0);
}

TEST(Probability, RejectsValuesOutsideUnitInterval) {
  EXPECT_THROW(Probability(1.2), ValidationError);
  EXPECT_THROW(Probability(-0.01), ValidationError);
  EXPECT_THROW(Probability(1.0 + 1e-11), ValidationError);
  EXPECT_THROW(Probability(std::numeric_limits<double>::quiet_NaN()),
               ValidationError);
  EXPECT_THROW(Probability(std::numeric_limits<double>::infinity()),
               ValidationError);
}

TEST(Probability, ClampsWithinTolerance) {
  EXPECT_EQ(Probability(1.0 + 5e-13).value(), 1.0);
  EXPECT_EQ(Probability(1.0 + 5e-13).complement(), 0.0);
  EXPECT_EQ(Probability(-5e-13).value(), 0.0);
  EXPECT_EQ(Probability(-5e-13).complement(), 1.0);
}

TEST(Probability, ComplementOfTypedDecimalIsExact) {
  EXPECT_EQ(Probability(0.9999).complement(), 1e-4);
  EXPECT_EQ(Probability(0.99).complement(), 0.01);
  EXPECT_EQ(Probability(0.9).complement(), 0.1);
  EXPECT_EQ(Probability(0.1).complement(), 0.9);
  EXPECT_EQ(Probability(0.999999999).complement(), 1e-9);
  EXPECT_EQ(Probability(0.5).complement(), 0.5);
  EXPECT_EQ(Probability(1.0).complement(), 0.0);
  EXPECT_EQ(Probability(0.0).complement(), 1.0);
  EXPECT_EQ(Probability(5e-324).complement(), 1.0);
}

TEST(Probability, FromComplement) {
  Probability p = Probability::from_complement(1e-4);
  EXPECT_EQ(p.value(), 0.9999);
  EXPECT_EQ(p.complement(), 1e-4);
}

TEST(Probability, DecimalComplementIsCloseToBinaryComplement) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    double x = u(rng);
    if (i % 3 == 0) x = std::pow(x, 8.0);
    if (i % 3 == 1) x = 1.0 - std::pow(x, 8.0);
    double q = decimal_complement(x);
    EXPECT_NEAR(q, 1.0 - x, 2.3e-16) << x;
    EXPECT_GE(q, 0.0);
    EXPECT_LE(q, 1.0);
  }
}

TEST(Probability, UnavailabilityExamples) {
  EXPECT_EQ(unavailability(Probability(0.9999)).value(), 1e-4);
  EXPECT_EQ(unavailability(Probability(1.0)).value(), 0.0);
  EXPECT_EQ(unavailability(Probability(0.5)).value(), 0.5);
}

TEST(Probability, UnavailabilityIsAnExactInvolution) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    double x = u(rng);
    if (i % 2) x = std::ldexp(x, -std::uniform_int_distribution<int>(0, 1000)(rng));
    Probability a(x);
    EXPECT_EQ(unavailability(unavailability(a)), a);
  }
}

TEST(Probability, FromPartsChecksBothSides) {
  EXPECT_NO_THROW(Probability::from_parts(0.3, 0.7));
  EXPECT_THROW(Probability::from_parts(0.3, 1.5), ValidationError);
  EXPECT_THROW(Probability::from_parts(-1.0, 0.5), ValidationError);
}


TEST(Probability, ExactZeroSideForcesCertainty) {
  EXPECT_EQ(Probability::from_parts(0.9999999999999999, 0.0).value(), 1.0);
  EXPECT_EQ(Probability::from_parts(0.0, 0.9999999999999999).complement(), 1.0);
  Probability p = Probability::from_parts(0.25, 0.75);
  EXPECT_EQ(p.value(), 0.25);
  EXPECT_EQ(p.complement(), 0.75);
}

}  // namespace
}  // namespace rbdkit
