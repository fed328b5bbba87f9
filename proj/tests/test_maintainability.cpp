#include <gtest/gtest.h>

#include <random>

#include "rbdkit/error.hpp"
#include "rbdkit/maintainability.hpp"

namespace rbdkit {
namespace {

MaintainabilityParams params(double mttres, double mldt, double madt,
                             double pnrs, double tat) {
  MaintainabilityParams p;
  p.mttres = mttres;
  p.mldt = mldt;
  p.madt = madt;
  p.pnrs = Probability(pnrs);
  p.tat = tat;
  return p;
}

TEST(MeanDownTime, Examples) {
  // 2 + 4 + 1 + (1 - 0.99) * 168 with the 99% stock goal.
  EXPECT_EQ(mean_down_time(params(2, 4, 1, 0.99, 168)), 8.68);
  EXPECT_EQ(mean_down_time(params(0, 0, 0, 1.0, 500)), 0.0);
  EXPECT_EQ(mean_down_time(params(3, 0, 0, 0.0, 24)), 27.0);
}

TEST(MeanDownTime, PerfectStockDropsTurnAround) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> hours(0.0, 1000.0);
  for (int i = 0; i < 1000; ++i) {
    double a = hours(rng), b = hours(rng), c = hours(rng);
    EXPECT_EQ(mean_down_time(params(a, b, c, 1.0, hours(rng))), a + b + c);
  }
}

TEST(MeanDownTime, Monotonicity) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> hours(0.0, 500.0);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    MaintainabilityParams p = params(hours(rng), hours(rng), hours(rng),
                                     prob(rng), hours(rng));
    double base = mean_down_time(p);
    double bump = hours(rng);
    for (double MaintainabilityParams::*field :
         {&MaintainabilityParams::mttres, &MaintainabilityParams::mldt,
          &MaintainabilityParams::madt, &MaintainabilityParams::tat}) {
      MaintainabilityParams q = p;
      q.*field += bump;
      EXPECT_GE(mean_down_time(q), base);
    }
    MaintainabilityParams q = p;
    q.pnrs = Probability(std::min(1.0, p.pnrs.value() + prob(rng)));
    EXPECT_LE(mean_down_time(q), base);
  }
}

TEST(MeanDownTime, RejectsNegativeDurations) {
  EXPECT_THROW(mean_down_time(params(-1, 0, 0, 1, 0)), ValidationError);
  EXPECT_THROW(mean_down_time(params(0, 0, 0, 1, -3)), ValidationError);
}

TEST(AvailabilityFromTimes, Examples) {
  Probability a = availability_from_times(100000, 8.68);
  EXPECT_EQ(a.value(), 100000.0 / 100008.68);
  EXPECT_NEAR(a.value(), 0.99991320753, 1e-11);
  EXPECT_EQ(availability_from_times(1, 0).value(), 1.0);
  EXPECT_EQ(availability_from_times(1, 0).complement(), 0.0);
  EXPECT_EQ(availability_from_times(100, 100).value(), 0.5);
}

TEST(AvailabilityFromTimes, ComplementIsDowntimeFraction) {
  Probability a = availability_from_times(100000, 8.68);
  EXPECT_EQ(a.complement(), 8.68 / 100008.68);
}

TEST(AvailabilityFromTimes, ErrorsNameTheComponent) {
  try {
    availability_from_times(0.0, 1.0, "router");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("router"), std::string::npos);
  }
  EXPECT_THROW(availability_from_times(-5.0, 1.0), ValidationError);
  EXPECT_THROW(availability_from_times(5.0, -1.0), ValidationError);
}

TEST(AvailabilityFromTimes, StrictMonotonicity) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> t(1.0, 1e5);
  for (int i = 0; i < 2000; ++i) {
    double m = t(rng), d = t(rng);
    double a = availability_from_times(m, d).value();
    EXPECT_GT(a, 0.0);
    EXPECT_LE(a, 1.0);
    EXPECT_LT(a, availability_from_times(m * 1.5, d).value());
    EXPECT_GT(a, availability_from_times(m, d * 1.5).value());
  }
}

// Two-state renewal process with exponential up and down times: the long-run
// fraction of time spent up converges to MTBF / (MTBF + MDT).
TEST(AvailabilityFromTimes, MatchesRenewalSimulation) {
  std::mt19937_64 rng(2024);
  for (auto [mtbf, mdt] : {std::pair{100.0, 100.0}, std::pair{1000.0, 8.68},
                           std::pair{50.0, 10.0}}) {
    std::exponential_distribution<double> up(1.0 / mtbf), down(1.0 / mdt);
    double total_up = 0.0, total = 0.0;
    for (int cycle = 0; cycle < 400000; ++cycle) {
      double u = up(rng), d = down(rng);
      total_up += u;
      total += u + d;
    }
    EXPECT_NEAR(total_up / total, availability_from_times(mtbf, mdt).value(),
                3e-3)
        << mtbf << "/" << mdt;
  }
}

TEST(ComponentAvailability, Variants) {
  Component direct{"a", DirectAvailability{Probability(0.9999)}};
  EXPECT_EQ(component_availability(direct).value(), 0.9999);
  EXPECT_EQ(component_mdt(direct), std::nullopt);

  Component derived{"b", DerivedAvailability{100000, params(2, 4, 1, 0.99, 168)}};
  EXPECT_EQ(component_availability(derived).value(), 100000.0 / 100008.68);
  EXPECT_EQ(component_mdt(derived), 8.68);

  Component simple{"c", DerivedSimpleAvailability{50000, 0}};
  EXPECT_EQ(component_availability(simple).value(), 1.0);

  Component broken{"d", DerivedSimpleAvailability{0, 1}};
  EXPECT_THROW(component_availability(broken), ValidationError);
}

TEST(MeanTimes, Validate) {
  MeanTimes t;
  t.mtbf = 10;
  t.mdt = 1;
  t.mttr = 0.5;
  EXPECT_NO_THROW(t.validate());
  t.mut = -1;
  EXPECT_THROW(t.validate(), ValidationError);
}

}  // namespace
}  // namespace rbdkit
