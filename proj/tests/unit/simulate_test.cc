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

#include <numeric>

#include <gtest/gtest.h>

#include "faqurn/enumerate.hpp"
#include "faqurn/error.hpp"
#include "faqurn/trace.hpp"

namespace faqurn {
namespace {

SimulationConfig small_config(std::uint64_t horizon, std::uint64_t seed) {
  SimulationConfig c;
  c.schedule = TriggerSchedule::constant(0.3);
  c.horizon = horizon;
  c.seed = seed;
  c.record_history = true;
  return c;
}

TEST(CheckpointTest, GeometricAndEndsAtHorizon) {
  const auto t = checkpoint_times(1000, 4);
  EXPECT_EQ(t, (std::vector<std::uint64_t>{1, 2, 3, 6, 10, 18, 32, 56, 100, 178, 316, 562,
                                           1000}));
  EXPECT_EQ(checkpoint_times(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(checkpoint_times(7, 64).back(), 7u);
  const auto dense = checkpoint_times(200000, 64);
  EXPECT_TRUE(std::is_sorted(dense.begin(), dense.end()));
  EXPECT_EQ(std::adjacent_find(dense.begin(), dense.end()), dense.end());
  EXPECT_THROW(checkpoint_times(10, 0), ValidationError);
}

TEST(SimulateTest, HorizonOneIsTrivial) {
  const Trace t = simulate(small_config(1, 5));
  EXPECT_EQ(t.colors, (std::vector<TimePoint>{{1, 1}}));
  EXPECT_EQ(t.final_counts, (std::vector<std::uint64_t>{1}));
  ASSERT_EQ(t.tracked.size(), 1u);
  EXPECT_EQ(t.tracked[0].color, 1u);
  EXPECT_EQ(t.tracked[0].birth, 1u);
}

TEST(SimulateTest, DeterministicInSeed) {
  const Trace a = simulate(small_config(5000, 17));
  const Trace b = simulate(small_config(5000, 17));
  const Trace c = simulate(small_config(5000, 18));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.history, c.history);
}

TEST(SimulateTest, TraceIdentities) {
  const Trace t = simulate(small_config(20000, 2));
  ASSERT_TRUE(t.history.has_value());
  EXPECT_NO_THROW(validate_history(*t.history));
  EXPECT_EQ(std::accumulate(t.final_counts.begin(), t.final_counts.end(), std::uint64_t{0}),
            20000u);
  EXPECT_EQ(t.colors.back(), (TimePoint{20000, t.final_counts.size()}));
  for (std::size_t i = 1; i < t.colors.size(); ++i) {
    EXPECT_LT(t.colors[i - 1].first, t.colors[i].first);
    EXPECT_LE(t.colors[i - 1].second, t.colors[i].second);
  }
  for (const auto &traj : t.tracked) {
    ASSERT_FALSE(traj.points.empty());
    EXPECT_GE(traj.points.front().first, traj.birth);
    EXPECT_EQ(traj.points.back().second, t.final_counts[traj.color - 1]);
  }
}

TEST(SimulateTest, TracksLateColor) {
  const Trace t = simulate(small_config(10000, 4));
  ASSERT_EQ(t.tracked.size(), 3u);
  EXPECT_EQ(t.tracked[0].color, 1u);
  EXPECT_EQ(t.tracked[1].color, 2u);
  EXPECT_GT(t.tracked[2].birth, 1000u);
  // The late color is the first one born after the cutoff.
  const auto &h = *t.history;
  Color before = 0;
  for (std::size_t i = 0; i < 1000; ++i) before = std::max(before, h[i]);
  EXPECT_EQ(t.tracked[2].color, before + 1);
}

TEST(SimulateTest, UnbornColorsAreOmitted) {
  SimulationConfig c = small_config(50, 1);
  c.schedule = TriggerSchedule::geometric(0.01);
  c.tracked.ids = {1, 2, 40};
  c.tracked.track_late_color = false;
  const Trace t = simulate(c);
  for (const auto &traj : t.tracked) EXPECT_LE(traj.color, t.final_counts.size());
  EXPECT_EQ(t.tracked.front().color, 1u);
}

TEST(SimulateTest, ReplicationsIndependentOfThreadCount) {
  SimulationConfig c = small_config(3000, 0);
  c.record_history = false;
  const auto one = simulate_replications(c, 99, 6, 1);
  const auto four = simulate_replications(c, 99, 6, 4);
  EXPECT_EQ(one, four);
  EXPECT_NE(one[0].final_counts, one[1].final_counts);
}

TEST(SimulateTest, ValidationErrors) {
  SimulationConfig c = small_config(0, 0);
  EXPECT_THROW(simulate(c), ValidationError);
  c.horizon = 10;
  c.schedule = TriggerSchedule::explicit_sequence({0.5, 0.5});
  EXPECT_THROW(simulate(c), ValidationError);
  c.horizon = 3;
  EXPECT_NO_THROW(simulate(c));
  c.tracked.late_fraction = 1.5;
  EXPECT_THROW(simulate(c), ValidationError);
}

TEST(SimulateTest, ReplayReproducesCounts) {
  const Trace t = simulate(small_config(4000, 8));
  UrnState urn(t.config.schedule, t.config.update);
  for (Color c : *t.history) urn.advance(c);
  EXPECT_EQ(std::vector<std::uint64_t>(urn.counts().begin(), urn.counts().end()),
            t.final_counts);
}

}  // namespace
}  // namespace faqurn
