// Copyright 2026 The faqurn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "faqurn/exact_simon.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "faqurn/enumerate.hpp"
#include "faqurn/error.hpp"

namespace faqurn::simon {
namespace {

// Reference values: tests/oracle/reference.py (exact rationals and mpmath).

TEST(SimonParamsTest, RejectsBoundary) {
  EXPECT_THROW(SimonParams(0.0), ValidationError);
  EXPECT_THROW(SimonParams(1.0), ValidationError);
  EXPECT_THROW(SimonParams(NAN), ValidationError);
}

TEST(ColorsPmfTest, SmallCase) {
  const auto d = colors_pmf(3, SimonParams(0.5));
  EXPECT_EQ(d.min_value(), 1);
  EXPECT_EQ(d.max_value(), 3);
  EXPECT_NEAR(d.pmf(1), 0.25, 1e-15);
  EXPECT_NEAR(d.pmf(2), 0.5, 1e-15);
  EXPECT_NEAR(d.pmf(3), 0.25, 1e-15);
  EXPECT_EQ(colors_pmf(1, SimonParams(0.3)).pmf(1), 1.0);
}

TEST(ColorsPmfTest, MeanAndVariance) {
  const SimonParams p(0.3);
  const auto d = colors_pmf(101, p);
  EXPECT_NEAR(d.mean(), 31.0, 1e-10);
  EXPECT_NEAR(d.variance(), 21.0, 1e-9);
  const auto m = colors_moments(101, p);
  EXPECT_DOUBLE_EQ(m.mean, 31.0);
  EXPECT_DOUBLE_EQ(m.variance, 21.0);
}

TEST(ColorsPmfTest, NormalizedOnGrid) {
  for (double p = 0.05; p < 0.96; p += 0.05) {
    for (std::uint64_t n : {2u, 10u, 1000u, 10000u}) {
      const auto d = colors_pmf(n, SimonParams(p));
      ASSERT_NEAR(d.total(), 1.0, 1e-12) << "n=" << n << " p=" << p;
      for (double v : d.probabilities) ASSERT_GE(v, 0.0);
    }
  }
}

TEST(ColorsPmfTest, MatchesEnumeration) {
  const auto e = enumerate_exact(7, TriggerSchedule::constant(0.3), {});
  EXPECT_NEAR(colors_pmf(7, SimonParams(0.3)).pmf(3), 0.324135, 1e-14);
  const auto d = colors_pmf(7, SimonParams(0.3));
  for (int i = 1; i <= 7; ++i) EXPECT_NEAR(d.pmf(i), e.colors.pmf(i), 1e-14);
}

TEST(ProbColorAbsentTest, MatchesReference) {
  EXPECT_NEAR(prob_color_absent(7, 3, SimonParams(0.3)), 0.420175, 1e-14);
  EXPECT_NEAR(prob_color_absent(7, 4, SimonParams(0.3)), 0.74431, 1e-14);
  // Color 2 is absent at time 2 iff the second ball repeats color 1.
  EXPECT_NEAR(prob_color_absent(2, 2, SimonParams(0.3)), 0.7, 1e-15);
  EXPECT_THROW(prob_color_absent(1, 2, SimonParams(0.3)), DomainError);
  EXPECT_THROW(prob_color_absent(5, 1, SimonParams(0.3)), DomainError);
}

TEST(LambdaSeriesTest, FirstTerm) {
  const auto v = lambda_series(2, SimonParams(0.5), Partial{3});
  EXPECT_NEAR(v.value, 0.125 * 2.0 / std::tgamma(3.5), 1e-15);
  EXPECT_EQ(v.terms, 1u);
  EXPECT_EQ(lambda_series(2, SimonParams(0.5), Partial{2}).value, 0.0);
}

TEST(LambdaSeriesTest, LimitWithBound) {
  const auto a = lambda_series(2, SimonParams(0.95), Limit{1e-14});
  EXPECT_NEAR(a.value, 0.00012547740221504633, 1e-15);
  ASSERT_TRUE(a.error_bound.has_value());
  EXPECT_LT(*a.error_bound, 1e-14);
  const auto b = lambda_series(2, SimonParams(0.1), Limit{1e-13});
  EXPECT_NEAR(b.value, 1.2038452446375643, 1e-12);
  EXPECT_LE(std::abs(b.value - 1.2038452446375643), *b.error_bound + 1e-14);
}

TEST(LambdaSeriesTest, PartialConvergesToLimit) {
  const SimonParams p(0.4);
  const auto lim = lambda_series(3, p, Limit{1e-13});
  const auto part = lambda_series(3, p, Partial{2000});
  EXPECT_NEAR(part.value, lim.value, 1e-12);
  EXPECT_THROW(lambda_series(1, p, Limit{}), DomainError);
}

TEST(ExpectedCountTest, MatchesEnumeration) {
  const SimonParams p(0.3);
  EXPECT_NEAR(expected_count(7, 1, p), 4.2337911375, 1e-12);
  EXPECT_NEAR(expected_count(7, 2, p), 1.6162704625, 1e-12);
  EXPECT_NEAR(expected_count(7, 3, p), 0.768847575, 1e-12);
}

TEST(ExpectedCountTest, BoundaryAndDomain) {
  const SimonParams p(0.3);
  EXPECT_DOUBLE_EQ(expected_count(1, 1, p), 1.0);
  EXPECT_DOUBLE_EQ(expected_count(3, 3, p), 0.09);
  EXPECT_THROW(expected_count(2, 3, p), DomainError);
  EXPECT_THROW(expected_count(2, 0, p), DomainError);
}

TEST(ExpectedCountTest, AtFiveHundred) {
  EXPECT_NEAR(expected_count(500, 2, SimonParams(0.95)) / std::pow(500.0, 0.05),
              0.97702167691485467, 1e-12);
  EXPECT_NEAR(expected_count(500, 2, SimonParams(0.1)) / std::pow(500.0, 0.9),
              0.20332847601118374, 1e-12);
}

TEST(ExpectedCountTest, MonotoneInN) {
  for (double pv : {0.1, 0.5, 0.9}) {
    const SimonParams p(pv);
    for (std::uint64_t c = 1; c <= 4; ++c) {
      double prev = 0.0;
      for (std::uint64_t n = c; n < c + 300; ++n) {
        const double v = expected_count(n, c, p);
        ASSERT_GE(v, prev - 1e-12) << "n=" << n << " c=" << c << " p=" << pv;
        prev = v;
      }
    }
  }
}

TEST(ExpectedCountTest, NoOverflowAtLargeN) {
  const double v = expected_count(10'000'000, 3, SimonParams(0.2));
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_GT(v, 0.0);
}

TEST(AsymptoticPrefactorTest, StatedFormula) {
  const auto a = asymptotic_prefactor(2, SimonParams(0.95));
  EXPECT_NEAR(a.value, 0.97706810046847245, 1e-12);
  EXPECT_NEAR(asymptotic_prefactor(2, SimonParams(0.1)).value, 0.20334677151611161, 1e-12);
}

TEST(AsymptoticPrefactorTest, LimitOfExactMean) {
  for (double pv : {0.2, 0.5, 0.8}) {
    const SimonParams p(pv);
    for (std::uint64_t c = 2; c <= 4; ++c) {
      const double ratio = expected_count(100000, c, p) / std::pow(1e5, 1.0 - pv);
      const double pref = asymptotic_prefactor(c, p).value;
      EXPECT_NEAR(ratio / pref, 1.0, 0.02) << "c=" << c << " p=" << pv;
    }
  }
}

TEST(ExpectedCountColor1Test, ExactAndAsymptotic) {
  const SimonParams p(0.3);
  const auto m = expected_count_color1(7, p);
  EXPECT_NEAR(m.exact, 4.2337911375, 1e-12);
  const auto big = expected_count_color1(1'000'000, p);
  EXPECT_LT(big.error_estimate / big.exact, 1e-3);
  EXPECT_NEAR(big.exact, expected_count(1'000'000, 1, p), 1e-9 * big.exact);
}

TEST(DynamicMeanTest, HarmonicTelescopes) {
  for (std::uint64_t n : {1u, 2u, 10u, 1000u, 1'000'000u}) {
    const double v = dynamic_mean_color1([](std::uint64_t i) { return 1.0 / i; }, n);
    EXPECT_NEAR(v, (n + 1) / 2.0, 1e-12 * n) << n;
  }
}

TEST(DynamicMeanTest, IncreasingSequence) {
  const double v =
      dynamic_mean_color1([](std::uint64_t i) { return 1.0 - 1.0 / i; }, 1'000'000);
  EXPECT_NEAR(v, 2.4281873639102923, 1e-10);
}

TEST(DynamicMeanTest, ConstantMatchesClosedForm) {
  const auto s = TriggerSchedule::constant(0.37);
  for (std::uint64_t n : {1u, 5u, 5000u}) {
    const double want = expected_count_color1(n, SimonParams(0.37)).exact;
    EXPECT_NEAR(dynamic_mean_color1(s, n), want, 1e-9 * want);
  }
}

}  // namespace
}  // namespace faqurn::simon
