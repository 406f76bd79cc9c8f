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

// Randomized invariant checks over seeded parameter draws.

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "faqurn/analysis.hpp"
#include "faqurn/approx.hpp"
#include "faqurn/enumerate.hpp"
#include "faqurn/ingest.hpp"

namespace faqurn {
namespace {

class PropertyTest : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  std::mt19937_64 gen_{GetParam()};
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen_); }

  TriggerSchedule random_schedule() {
    switch (gen_() % 4) {
      case 0:
        return TriggerSchedule::constant(uniform(0.05, 0.95));
      case 1:
        return TriggerSchedule::power_law(uniform(0.1, 0.9), uniform(0.2, 1.0));
      case 2:
        return TriggerSchedule::harmonic(uniform(0.5, 3.0));
      default:
        return TriggerSchedule::geometric(uniform(0.5, 0.99));
    }
  }

  UpdateFunction random_update() {
    switch (gen_() % 3) {
      case 0:
        return UpdateFunction::linear(uniform(0.5, 2.0), uniform(-0.4, 2.0));
      case 1:
        return UpdateFunction::power_root(uniform(1.1, 3.0));
      default:
        return UpdateFunction::tabulated_power(uniform(0.5, 2.5), 50);
    }
  }
};

TEST_P(PropertyTest, TraceSpectrumIdentities) {
  SimulationConfig c;
  c.schedule = random_schedule();
  c.update = random_update();
  c.horizon = 2000 + gen_() % 5000;
  c.seed = gen_();
  const Trace t = simulate(c);
  const auto s = frequency_spectrum(t.final_counts);
  std::uint64_t colors = 0;
  std::uint64_t mass = 0;
  for (const auto &[k, q] : s.entries) {
    colors += q;
    mass += k * q;
  }
  EXPECT_EQ(colors, t.final_counts.size());
  EXPECT_EQ(mass, c.horizon);
  double qsum = 0.0;
  for (const auto &[k, q] : s.normalized()) qsum += q;
  EXPECT_NEAR(qsum, 1.0, 1e-12);

  const auto curve = rank_curve(t.final_counts);
  EXPECT_TRUE(std::is_sorted(curve.frequencies.rbegin(), curve.frequencies.rend()));
  EXPECT_EQ(std::accumulate(curve.frequencies.begin(), curve.frequencies.end(), std::uint64_t{0}),
            c.horizon);
  for (std::uint64_t v = 1; v <= curve.frequencies.front() + 1; v += 1 + v / 8) {
    ASSERT_EQ(curve.ranks_at_least(v), s.tail_count(v)) << "v=" << v;
  }
}

TEST_P(PropertyTest, LogLogFitRecoversPowerLaws) {
  const double slope = uniform(-3.0, 3.0);
  const double scale = uniform(0.1, 100.0);
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < 50; ++i) {
    const double x = std::pow(10.0, uniform(0.0, 5.0));
    pts.emplace_back(x, scale * std::pow(x, slope));
  }
  const auto f = loglog_fit(pts);
  EXPECT_NEAR(f.slope, slope, 1e-10);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-10);
  EXPECT_GE(f.r_squared, 0.0);
  EXPECT_LE(f.r_squared, 1.0);
}

TEST_P(PropertyTest, EnumerationIsNormalized) {
  std::vector<double> ps;
  for (int i = 0; i < 7; ++i) ps.push_back(uniform(0.01, 0.99));
  const auto s = TriggerSchedule::explicit_sequence(ps);
  const auto e = enumerate_exact(7, s, random_update());
  EXPECT_NEAR(e.total_probability, 1.0, 1e-13);
  // C_n is Poisson-binomial whatever F is.
  const auto pb = poisson_binomial_pmf(s, 7);
  for (int j = 0; j <= 7; ++j) EXPECT_NEAR(e.colors.pmf(j), pb.pmf(j), 1e-13);
}

TEST_P(PropertyTest, TvBelowBarbourHolstBound) {
  const auto s = random_schedule();
  const std::uint64_t n = 1 + gen_() % 1000;
  const auto r = barbour_holst_with_exact(s, n);
  EXPECT_LE(r.lambda2, r.lambda1);
  EXPECT_LE(*r.tv_exact, r.tv_bound + 1e-12);
}

TEST_P(PropertyTest, HistoryFromLabelsIsWellFormed) {
  EventStream s;
  const int alphabet = 1 + static_cast<int>(gen_() % 30);
  for (int i = 0; i < 300; ++i) {
    s.records.push_back({i, "L" + std::to_string(gen_() % alphabet)});
  }
  const auto h = to_history(s);
  EXPECT_NO_THROW(validate_history(h.history));
  ASSERT_EQ(h.labels.size(), *std::max_element(h.history.begin(), h.history.end()));
  for (std::size_t i = 0; i < s.records.size(); ++i) {
    ASSERT_EQ(h.labels[h.history[i] - 1], s.records[i].label);
  }
  std::set<std::string> distinct(h.labels.begin(), h.labels.end());
  EXPECT_EQ(distinct.size(), h.labels.size());
}

TEST_P(PropertyTest, IngestRoundTripMatchesSimulator) {
  SimulationConfig c;
  c.schedule = random_schedule();
  c.update = random_update();
  c.horizon = 1000 + gen_() % 20000;
  c.seed = gen_();
  c.record_history = true;
  c.tracked.ids = {1, 2, 3};
  const Trace t = simulate(c);
  TrajectoryOptions opt;
  opt.tracked = c.tracked;
  EXPECT_EQ(empirical_trajectories(*t.history, opt), observation_of(t));
}

INSTANTIATE_TEST_SUITE_P(Seeds, PropertyTest, ::testing::Range<std::uint64_t>(1, 21));

}  // namespace
}  // namespace faqurn
