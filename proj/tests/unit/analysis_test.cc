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

#include "faqurn/analysis.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "faqurn/error.hpp"

namespace faqurn {
namespace {

using Points = std::vector<std::pair<double, double>>;

TEST(FrequencySpectrumTest, Walkthrough) {
  const std::vector<std::uint64_t> counts = {3, 3, 1};
  const auto s = frequency_spectrum(counts);
  EXPECT_EQ(s.n, 7u);
  EXPECT_EQ(s.num_colors, 3u);
  EXPECT_EQ(s.entries, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {3, 2}}));
  EXPECT_EQ(s.at(2), 0u);
  EXPECT_EQ(s.tail_count(2), 2u);
  const auto q = s.normalized();
  EXPECT_DOUBLE_EQ(q.at(3), 2.0 / 3.0);
}

TEST(FrequencySpectrumTest, AllSingletons) {
  const std::vector<std::uint64_t> counts(9, 1);
  const auto s = frequency_spectrum(counts);
  EXPECT_EQ(s.at(1), 9u);
  EXPECT_EQ(s.normalized().at(1), 1.0);
  EXPECT_THROW(frequency_spectrum(std::vector<std::uint64_t>{2, 0}), ValidationError);
}

TEST(RankCurveTest, SortedWithStableTies) {
  const std::vector<std::uint64_t> counts = {1, 3, 2, 3};
  const auto r = rank_curve(counts);
  EXPECT_EQ(r.frequencies, (std::vector<std::uint64_t>{3, 3, 2, 1}));
  EXPECT_EQ(r.colors, (std::vector<Color>{2, 4, 3, 1}));
  EXPECT_EQ(r.ranks_at_least(3), 2u);
  EXPECT_EQ(r.ranks_at_least(1), 4u);
  EXPECT_EQ(r.ranks_at_least(4), 0u);
  EXPECT_EQ(rank_curve(std::vector<std::uint64_t>{12}).frequencies,
            (std::vector<std::uint64_t>{12}));
}

TEST(LogLogFitTest, ExactPowerLaw) {
  Points pts;
  for (int i = 1; i <= 20; ++i) pts.emplace_back(i, 5.0 * std::pow(i, 0.7));
  const auto f = loglog_fit(pts);
  EXPECT_NEAR(f.slope, 0.7, 1e-12);
  EXPECT_NEAR(f.intercept, std::log10(5.0), 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  EXPECT_EQ(f.points_used, 20u);
  EXPECT_EQ(f.fit_window.x_min, 1.0);
  EXPECT_EQ(f.fit_window.x_max, 20.0);
}

TEST(LogLogFitTest, ShiftMakesCurveExact) {
  Points pts;
  for (int i = 1; i <= 30; ++i) pts.emplace_back(i, std::pow(i + 1.0, -0.538) - 1.0);
  // y + 1 = (x + 1)^-0.538 is not a pure power of x, so regress on x + 1.
  Points shifted;
  for (auto [x, y] : pts) shifted.emplace_back(x + 1.0, y);
  const auto f = loglog_fit(shifted, {}, 1.0);
  EXPECT_NEAR(f.slope, -0.538, 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
}

TEST(LogLogFitTest, WindowAndExclusions) {
  Points pts;
  for (int i = 1; i <= 40; ++i) pts.emplace_back(i, i <= 5 ? 0.0 : 2.0 * i);
  const auto f = loglog_fit(pts, {3.0, 30.0});
  EXPECT_EQ(f.excluded, 3u);
  EXPECT_EQ(f.points_used, 25u);
  EXPECT_NEAR(f.slope, 1.0, 1e-12);
  EXPECT_THROW(loglog_fit(pts, {1.0, 12.0}), EstimationError);
  EXPECT_THROW(loglog_fit(Points(10, {2.0, 3.0})), EstimationError);
}

TEST(LogLogFitTest, RankPointsRespectMinimumFrequency) {
  const auto curve = rank_curve(std::vector<std::uint64_t>{9, 1, 7, 5, 3});
  const auto pts = rank_points(curve, 5);
  EXPECT_EQ(pts, (Points{{1, 9}, {2, 7}, {3, 5}}));
}

TEST(TheoreticalPredictionTest, ConstantP) {
  const auto a = theoretical_prediction(ConstantPScenario{0.3, 1.0, 0.0});
  EXPECT_NEAR(*a.delta, 0.7, 1e-15);
  EXPECT_NEAR(*a.rank_slope, -0.7, 1e-15);
  EXPECT_NEAR(*a.ell, 1.0 / 0.7, 1e-15);
  EXPECT_EQ(*a.colors_slope, 1.0);
  EXPECT_NEAR(*a.alpha * (*a.beta - 1.0), 1.0, 1e-15);
  const auto b = theoretical_prediction(ConstantPScenario{0.3, 1.0, 1.0});
  EXPECT_NEAR(*b.delta, 0.7 / 1.3, 1e-15);
  EXPECT_NEAR(*b.delta, 0.538, 5e-4);
  EXPECT_NEAR(*b.rank_slope, -*b.delta, 1e-15);
  EXPECT_NEAR(*b.alpha, *b.delta, 1e-15);
  EXPECT_EQ(*b.eta, 1.0);
}

TEST(TheoreticalPredictionTest, PowerLawP) {
  const auto c = theoretical_prediction(PowerLawPScenario{0.7, 1.0, 0.0});
  EXPECT_NEAR(*c.colors_slope, 0.7, 1e-15);
  EXPECT_EQ(*c.count_slope, 1.0);
  EXPECT_NEAR(*c.rank_slope, -1.0 / 0.7, 1e-15);
  EXPECT_NEAR(*c.rank_slope, -1.429, 5e-4);
  EXPECT_NEAR(*c.beta, 1.7, 1e-15);
  EXPECT_NEAR(*c.alpha * (*c.beta - 1.0), 1.0, 1e-15);
}

TEST(TheoreticalPredictionTest, UndefinedWhenEllIsZero) {
  const auto h = theoretical_prediction(HarmonicPScenario{});
  EXPECT_FALSE(h.defined());
  EXPECT_EQ(*h.ell, 0.0);
  EXPECT_FALSE(h.reason.empty());
  const auto r = theoretical_prediction(PowerRootScenario{2.0});
  EXPECT_FALSE(r.defined());
  EXPECT_FALSE(r.beta.has_value());
}

TEST(TheoreticalPredictionTest, Validation) {
  EXPECT_THROW(theoretical_prediction(ConstantPScenario{1.0}), ValidationError);
  EXPECT_THROW(theoretical_prediction(ConstantPScenario{0.5, 1.0, -1.0}), ValidationError);
  EXPECT_THROW(theoretical_prediction(PowerLawPScenario{1.2}), ValidationError);
  EXPECT_THROW(theoretical_prediction(PowerLawPScenario{0.5, 0.0}), ValidationError);
  EXPECT_THROW(theoretical_prediction(PowerRootScenario{1.0}), ValidationError);
}

TEST(ScenarioOfTest, MapsFamilies) {
  const auto a = scenario_of(TriggerSchedule::constant(0.3), UpdateFunction::linear(2, 1));
  ASSERT_TRUE(a.has_value());
  const auto &cp = std::get<ConstantPScenario>(*a);
  EXPECT_EQ(cp.p, 0.3);
  EXPECT_EQ(cp.rho, 2.0);
  EXPECT_TRUE(std::holds_alternative<PowerLawPScenario>(
      *scenario_of(TriggerSchedule::power_law(0.7), {})));
  EXPECT_TRUE(std::holds_alternative<HarmonicPScenario>(
      *scenario_of(TriggerSchedule::harmonic(), {})));
  EXPECT_TRUE(std::holds_alternative<PowerRootScenario>(
      *scenario_of(TriggerSchedule::harmonic(), UpdateFunction::power_root(2.0))));
  EXPECT_FALSE(scenario_of(TriggerSchedule::geometric(0.5), {}).has_value());
  EXPECT_FALSE(
      scenario_of(TriggerSchedule::constant(0.3), UpdateFunction::tabulated({1, 4})).has_value());
}

TEST(RegimeClassifierTest, ConstantLinear) {
  const auto r = regime_classifier(TriggerSchedule::constant(0.3), {});
  EXPECT_EQ(r.colors, ColorRegime::kInfinite);
  EXPECT_EQ(r.dominance, DominanceRegime::kAllInfinitelyOften);
  EXPECT_EQ(r.growth_law, "C_n ~ 0.3 n");
  EXPECT_FALSE(r.expected_total_colors.has_value());
}

TEST(RegimeClassifierTest, GeometricIsFinite) {
  const auto r = regime_classifier(TriggerSchedule::geometric(0.5), {});
  EXPECT_EQ(r.colors, ColorRegime::kFinite);
  ASSERT_TRUE(r.expected_total_colors.has_value());
  EXPECT_NEAR(*r.expected_total_colors, 2.0, 1e-15);
}

TEST(RegimeClassifierTest, GrowthLaws) {
  EXPECT_EQ(regime_classifier(TriggerSchedule::power_law(0.5, 2.0), {}).growth_law,
            "C_n ~ 4 n^0.5");
  EXPECT_EQ(regime_classifier(TriggerSchedule::harmonic(), {}).growth_law, "C_n ~ 1 ln n");
  EXPECT_EQ(regime_classifier(TriggerSchedule::harmonic(), UpdateFunction::power_root(2))
                .dominance,
            DominanceRegime::kAllInfinitelyOften);
}

TEST(RegimeClassifierTest, TabulatedGrowth) {
  const auto s = TriggerSchedule::constant(0.2);
  EXPECT_EQ(regime_classifier(s, UpdateFunction::tabulated_power(2.0, 1000)).dominance,
            DominanceRegime::kSingleDominant);
  EXPECT_EQ(regime_classifier(s, UpdateFunction::tabulated_power(1.0, 1000)).dominance,
            DominanceRegime::kAllInfinitelyOften);
  EXPECT_EQ(regime_classifier(s, UpdateFunction::tabulated_power(1.3, 1000)).dominance,
            DominanceRegime::kInapplicable);
}

TEST(RegimeClassifierTest, ExplicitIsInapplicable) {
  const auto r = regime_classifier(TriggerSchedule::explicit_sequence({0.5, 0.5}), {});
  EXPECT_EQ(r.colors, ColorRegime::kUndetermined);
  EXPECT_EQ(r.dominance, DominanceRegime::kInapplicable);
  EXPECT_FALSE(r.explanation.empty());
  EXPECT_EQ(to_string(r.dominance), "inapplicable");
  EXPECT_EQ(to_string(ColorRegime::kFinite), "finite");
}

TEST(DominanceDiagnosticTest, Shares) {
  const auto one = dominance_diagnostic(std::vector<std::uint64_t>{10});
  EXPECT_EQ(one.leading_share, 1.0);
  EXPECT_EQ(one.gini, 0.0);
  const auto d = dominance_diagnostic(std::vector<std::uint64_t>{3, 3, 1});
  EXPECT_DOUBLE_EQ(d.leading_share, 3.0 / 7.0);
  EXPECT_DOUBLE_EQ(d.second_share, 3.0 / 7.0);
  EXPECT_NEAR(d.gini, 2.0 * (1 + 6 + 9) / (3.0 * 7.0) - 4.0 / 3.0, 1e-15);
  EXPECT_EQ(dominance_diagnostic(std::vector<std::uint64_t>{4, 4, 4, 4}).gini, 0.0);
}

TEST(HeapsZipfCheckTest, Product) {
  const auto a = heaps_zipf_check(0.5, 2.0);
  EXPECT_EQ(a.product, 1.0);
  EXPECT_EQ(a.deviation, 0.0);
  const auto b = heaps_zipf_check(0.70, 1.21);
  EXPECT_NEAR(b.product, 0.847, 1e-12);
  EXPECT_THROW(heaps_zipf_check(0.0, 1.0), ValidationError);
}

}  // namespace
}  // namespace faqurn
