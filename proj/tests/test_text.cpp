#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hongbound/bench.hpp"
#include "hongbound/hull.hpp"
#include "hongbound/linear.hpp"
#include "hongbound/polynomial.hpp"
#include "hongbound/text.hpp"

namespace {

const std::vector<double> kStranded = {-1.0, 0.0, 0.0, 4.0, -2.0, 4.0, 0.0, 0.0, 8.0};

}  // namespace

TEST(ParsePolynomial, DenseBasics) {
  const hongbound::Polynomial p =
      hongbound::parse_polynomial("  dense: -1 0 0 4 -2 4 0 0 8 \n");
  EXPECT_EQ(p.coeffs(), kStranded);

  const hongbound::Polynomial q = hongbound::parse_polynomial("dense:1 2");
  EXPECT_EQ(q.coeffs(), (std::vector<double>{1.0, 2.0}));

  const hongbound::Polynomial r = hongbound::parse_polynomial("dense: -2.5e-1 1e3");
  EXPECT_EQ(r.coeffs(), (std::vector<double>{-0.25, 1000.0}));
}

TEST(ParsePolynomial, SparseBasics) {
  const hongbound::Polynomial p =
      hongbound::parse_polynomial("sparse: 8:8 3:4 5:4 4:-2 0:-1");
  EXPECT_EQ(p.coeffs(), kStranded);

  const hongbound::Polynomial q = hongbound::parse_polynomial("sparse: 0:-1 1:1");
  EXPECT_EQ(q.coeffs(), (std::vector<double>{-1.0, 1.0}));
}

TEST(ParsePolynomial, RejectsMalformedText) {
  EXPECT_THROW(hongbound::parse_polynomial("sparse: 3:1 3:2 5:1"), hongbound::ParseError);
  EXPECT_THROW(hongbound::parse_polynomial("sparse: -1:3 4:1"), hongbound::ParseError);
  EXPECT_THROW(hongbound::parse_polynomial("sparse: 3 4:1"), hongbound::ParseError);
  EXPECT_THROW(hongbound::parse_polynomial("sparse: 4:abc 5:1"), hongbound::ParseError);
  EXPECT_THROW(hongbound::parse_polynomial("dense: 1 two 3"), hongbound::ParseError);
  EXPECT_THROW(hongbound::parse_polynomial("sparse: "), hongbound::ParseError);
  EXPECT_THROW(hongbound::parse_polynomial("1 2 3"), hongbound::ParseError);
  EXPECT_THROW(hongbound::parse_polynomial("   "), hongbound::ParseError);

  try {
    hongbound::parse_polynomial("sparse: 4:abc 5:1");
    FAIL() << "expected ParseError";
  } catch (const hongbound::ParseError& error) {
    EXPECT_NE(std::string(error.what()).find("4:abc"), std::string::npos);
  }
}

TEST(ParsePolynomial, ForwardsValidationFailures) {
  // "dense:" with no coefficients parses to the empty list, which the
  // Polynomial constructor rejects.
  try {
    hongbound::parse_polynomial("dense:");
    FAIL() << "expected ValidationError";
  } catch (const hongbound::ValidationError& error) {
    EXPECT_EQ(error.issue(), hongbound::ValidationIssue::empty_input);
  }
  try {
    hongbound::parse_polynomial("dense: 1 -1");
    FAIL() << "expected ValidationError";
  } catch (const hongbound::ValidationError& error) {
    EXPECT_EQ(error.issue(), hongbound::ValidationIssue::non_positive_leading_coefficient);
    EXPECT_EQ(error.index(), 1);
  }
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(hongbound::format_double(0.0), "0");
  EXPECT_EQ(hongbound::format_double(2.0), "2");
  EXPECT_EQ(hongbound::format_double(0.1), "0.1");
  EXPECT_EQ(hongbound::format_double(1.0 / 3.0), "0.3333333333333333");

  hongbound::Lcg rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const double value = (rng.u01() - 0.5) * std::exp2(static_cast<double>(rng.next() % 80) - 40.0);
    const std::string text = hongbound::format_double(value);
    double back = 0.0;
    const char* last = text.data() + text.size();
    const std::from_chars_result out = std::from_chars(text.data(), last, back);
    ASSERT_EQ(out.ec, std::errc{});
    ASSERT_EQ(out.ptr, last);
    EXPECT_EQ(back, value);
  }
}

TEST(FormatReport, PinnedLines) {
  const hongbound::Polynomial no_negative({1.0, 1.0});
  EXPECT_EQ(hongbound::format_report(hongbound::hong_naive(no_negative)),
            "H=0 sigma=none witness=none comparisons=0");

  const hongbound::Polynomial simple({-1.0, 1.0});
  EXPECT_EQ(hongbound::format_report(hongbound::hong_linear(simple)),
            "H=2 sigma=0 witness=0,1 comparisons=0");
}

TEST(FormatV, PinnedLine) {
  const hongbound::HullStore store = hongbound::build_hulls(hongbound::Polynomial(kStranded));
  EXPECT_EQ(hongbound::format_v(store.v), "V=[3,3,3,8,5,8,8,8,-1]");
}

TEST(FormatTraceEvent, PinnedLine) {
  const hongbound::TraceResult trace =
      hongbound::trace_linear(hongbound::Polynomial(kStranded));
  ASSERT_EQ(trace.events.size(), 9u);
  EXPECT_EQ(hongbound::format_trace_event(trace.events[4]),
            "i=4 sign=- action=ignore-above sigma=-0.6666666666666666 t=5");
}
