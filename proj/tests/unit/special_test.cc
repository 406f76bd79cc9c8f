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

#include "faqurn/special.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "faqurn/distribution.hpp"
#include "faqurn/error.hpp"

namespace faqurn {
namespace {

TEST(CompensatedSumTest, RecoversCancelledMass) {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-16);
  s.add(-1.0);
  // A naive sum returns 0 here.
  EXPECT_NEAR(s.value(), 1e-13, 1e-24);
}

TEST(LogBinomialTest, Values) {
  EXPECT_DOUBLE_EQ(log_binomial(5, 2), std::log(10.0));
  EXPECT_EQ(log_binomial(5, 0), 0.0);
  EXPECT_EQ(log_binomial(5, 6), -std::numeric_limits<double>::infinity());
  EXPECT_EQ(log_binomial(5, -1), -std::numeric_limits<double>::infinity());
}

TEST(LogGammaRatioTest, MatchesReference) {
  // mpmath.loggamma(x + a) - mpmath.loggamma(x)
  EXPECT_NEAR(log_gamma_ratio(0.5, 0.3), -0.42030526452486249, 1e-14);
  EXPECT_NEAR(log_gamma_ratio(10.0, -0.7), -1.5498050941023228, 1e-14);
  EXPECT_NEAR(log_gamma_ratio(1e6, 0.05), 0.69077550414821018, 1e-14);
  EXPECT_NEAR(log_gamma_ratio(1e12, 0.9), 24.867919004335649, 1e-13);
}

TEST(NormalCdfTest, Values) {
  EXPECT_DOUBLE_EQ(normal_cdf(0.0), 0.5);
  EXPECT_NEAR(normal_cdf(1.959963984540054), 0.975, 1e-15);
  EXPECT_NEAR(normal_cdf(-1.0), 0.15865525393145705, 1e-15);
}

TEST(LogPoissonPmfTest, Values) {
  EXPECT_NEAR(std::exp(log_poisson_pmf(2.0, 3)), 4.0 / 3.0 * std::exp(-2.0), 1e-15);
  EXPECT_NEAR(log_poisson_pmf(0.0, 0), 0.0, 0.0);
}

TEST(ExactDistributionTest, Moments) {
  const ExactDistribution d(1, {0.25, 0.5, 0.25});
  EXPECT_DOUBLE_EQ(d.total(), 1.0);
  EXPECT_DOUBLE_EQ(d.mean(), 2.0);
  EXPECT_DOUBLE_EQ(d.variance(), 0.5);
  EXPECT_EQ(d.pmf(0), 0.0);
  EXPECT_EQ(d.pmf(4), 0.0);
  EXPECT_NO_THROW(d.validate());
  EXPECT_THROW(ExactDistribution(0, {0.5, 0.4}).validate(), ValidationError);
  EXPECT_THROW(ExactDistribution(0, {1.5, -0.5}).validate(), ValidationError);
  EXPECT_EQ(ExactDistribution::point_mass(3).mean(), 3.0);
}

}  // namespace
}  // namespace faqurn
