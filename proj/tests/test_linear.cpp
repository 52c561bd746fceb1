#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "hongbound/bench.hpp"
#include "hongbound/linear.hpp"

using hongbound::BoundReport;
using hongbound::Polynomial;
using hongbound::Sign;
using hongbound::TangentState;
using hongbound::TraceAction;
using hongbound::TraceResult;

namespace {

const std::vector<double> kAm1{-1.0, 0.0, 0.0, 4.0, -2.0, 4.0, 0.0, 0.0, 8.0};
const std::vector<double> kAm8{-8.0, 0.0, 0.0, 4.0, -2.0, 4.0, 0.0, 0.0, 8.0};

TangentState line_through(int exponent, double height, double sigma) {
  TangentState state;
  state.sigma = sigma;
  state.t_exponent = exponent;
  state.anchor_exponent = exponent;
  state.anchor_height = height;
  return state;
}

}  // namespace

TEST(PointBelowLine, HandExamples) {
  // Line of slope -2/3 through (5,-2) passes (4,-4/3); the point (4,-1)
  // sits above it.
  EXPECT_FALSE(hongbound::point_below_line({4, -1.0, Sign::negative},
                                           line_through(5, -2.0, -2.0 / 3.0)));
  // Exactly on the line counts as not below.
  EXPECT_FALSE(
      hongbound::point_below_line({4, -1.0, Sign::negative}, line_through(5, -2.0, -1.0)));
  // Same line at x=0 has height 3, so (0,0) is below.
  EXPECT_TRUE(
      hongbound::point_below_line({0, 0.0, Sign::negative}, line_through(5, -2.0, -1.0)));
}

TEST(HongLinear, CounterexampleShape) {
  const BoundReport report = hongbound::hong_linear(Polynomial(kAm1));
  ASSERT_TRUE(report.sigma.has_value());
  EXPECT_EQ(*report.sigma, -2.0 / 3.0);
  EXPECT_NEAR(report.bound, std::cbrt(2.0), 1e-12 * report.bound);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->negative_exponent, 0);
  EXPECT_EQ(report.witness->positive_exponent, 3);
  // One comparison building the hulls, one in the init scan.
  EXPECT_EQ(report.comparisons, 2u);
}

TEST(HongLinear, WitnessShiftsToFarEnd) {
  const BoundReport report = hongbound::hong_linear(Polynomial(kAm8));
  EXPECT_EQ(report.bound, 2.0);
  ASSERT_TRUE(report.sigma.has_value());
  EXPECT_EQ(*report.sigma, 0.0);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->negative_exponent, 0);
  EXPECT_EQ(report.witness->positive_exponent, 8);
}

TEST(HongLinear, MinimalShapes) {
  const BoundReport pair = hongbound::hong_linear(Polynomial({-1.0, 1.0}));
  EXPECT_EQ(pair.bound, 2.0);
  ASSERT_TRUE(pair.sigma.has_value());
  EXPECT_EQ(*pair.sigma, 0.0);

  const BoundReport none = hongbound::hong_linear(Polynomial({1.0, 1.0}));
  EXPECT_EQ(none.bound, 0.0);
  EXPECT_FALSE(none.sigma.has_value());
  EXPECT_FALSE(none.witness.has_value());
  EXPECT_EQ(none.comparisons, 0u);
}

TEST(TraceLinear, CounterexampleEventSequence) {
  const TraceResult trace = hongbound::trace_linear(Polynomial(kAm1));
  EXPECT_EQ(trace.v, (std::vector<int>{3, 3, 3, 8, 5, 8, 8, 8, -1}));
  ASSERT_EQ(trace.events.size(), 9u);

  const std::vector<TraceAction> actions{
      TraceAction::init,         TraceAction::carry, TraceAction::carry,
      TraceAction::reset_t,      TraceAction::ignore_above, TraceAction::reset_t,
      TraceAction::carry,        TraceAction::carry, TraceAction::carry,
  };
  const std::vector<int> tangencies{3, 3, 3, 5, 5, 8, 8, 8, 8};
  for (std::size_t k = 0; k < trace.events.size(); ++k) {
    EXPECT_EQ(trace.events[k].index, static_cast<int>(k));
    EXPECT_EQ(trace.events[k].action, actions[k]) << "index " << k;
    EXPECT_EQ(trace.events[k].t_exponent, tangencies[k]) << "index " << k;
    EXPECT_EQ(trace.events[k].sigma, -2.0 / 3.0);
  }
  EXPECT_EQ(trace.events[0].sign, '-');
  EXPECT_EQ(trace.events[1].sign, '0');
  EXPECT_EQ(trace.events[3].sign, '+');
  EXPECT_EQ(trace.events[4].sign, '-');
  EXPECT_EQ(trace.report.bound, hongbound::hong_linear(Polynomial(kAm1)).bound);
}

TEST(TraceLinear, NoNegativeNoEvents) {
  const TraceResult trace = hongbound::trace_linear(Polynomial({1.0, 1.0}));
  EXPECT_EQ(trace.v, (std::vector<int>{1, -1}));
  EXPECT_TRUE(trace.events.empty());
  EXPECT_EQ(trace.report.bound, 0.0);
}

TEST(TraceLinear, TangencyNeverMovesLeft) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Polynomial p =
        hongbound::random_polynomial(1 + static_cast<int>(seed % 200), seed * 5 + 2, 0.45, 0.10);
    const TraceResult trace = hongbound::trace_linear(p);
    int previous = -1;
    for (const hongbound::TraceEvent& event : trace.events) {
      EXPECT_LE(previous, event.t_exponent) << "seed " << seed << " index " << event.index;
      previous = event.t_exponent;
    }
  }
}

TEST(HongLinear, ComparisonBudgetIsLinear) {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const int degree = 1 + static_cast<int>(seed % 300);
    const Polynomial p = hongbound::random_polynomial(degree, seed * 3 + 1, 0.45, 0.10);
    const BoundReport report = hongbound::hong_linear(p);
    EXPECT_LE(report.comparisons, 4u * static_cast<unsigned>(degree) + 8u) << "seed " << seed;
  }
}

TEST(HongLinear, AgreesWithNaiveOracle) {
  for (std::uint64_t seed = 1; seed <= 600; ++seed) {
    const Polynomial p =
        hongbound::random_polynomial(1 + static_cast<int>(seed % 128), seed * 11 + 4, 0.45, 0.10);
    const BoundReport oracle = hongbound::hong_naive(p);
    const BoundReport linear = hongbound::hong_linear(p);
    if (oracle.bound == 0.0) {
      EXPECT_EQ(linear.bound, 0.0);
      continue;
    }
    EXPECT_NEAR(linear.bound, oracle.bound, 1e-9 * oracle.bound) << "seed " << seed;
    ASSERT_TRUE(oracle.sigma.has_value());
    ASSERT_TRUE(linear.sigma.has_value());
    EXPECT_NEAR(*linear.sigma, *oracle.sigma, 1e-12) << "seed " << seed;
  }
}

TEST(HongLinear, Deterministic) {
  const Polynomial p = hongbound::random_polynomial(150, 77, 0.45, 0.10);
  const BoundReport a = hongbound::hong_linear(p);
  const BoundReport b = hongbound::hong_linear(p);
  EXPECT_EQ(a.bound, b.bound);
  EXPECT_EQ(a.sigma.has_value(), b.sigma.has_value());
  if (a.sigma && b.sigma) {
    EXPECT_EQ(*a.sigma, *b.sigma);
  }
  EXPECT_EQ(a.comparisons, b.comparisons);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(a.witness->negative_exponent, b.witness->negative_exponent);
  EXPECT_EQ(a.witness->positive_exponent, b.witness->positive_exponent);
}
