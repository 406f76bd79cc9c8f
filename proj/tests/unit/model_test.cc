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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "faqurn/error.hpp"
#include "faqurn/trigger_schedule.hpp"
#include "faqurn/update_function.hpp"

namespace faqurn {
namespace {

TEST(UpdateFunctionTest, LinearValues) {
  const auto f = UpdateFunction::linear(1.0, 0.0);
  EXPECT_EQ(f(1), 1.0);
  EXPECT_EQ(f(7), 7.0);
  const auto g = UpdateFunction::linear(2.0, 1.0);
  EXPECT_EQ(g(1), 3.0);
  EXPECT_EQ(g(5), 11.0);
  EXPECT_DOUBLE_EQ(*g.eta(), 0.5);
  EXPECT_TRUE(g.integral_weights());
}

TEST(UpdateFunctionTest, LinearAllowsNegativeShiftWithPositiveFirstWeight) {
  const auto f = UpdateFunction::linear(1.0, -0.5);
  EXPECT_DOUBLE_EQ(f(1), 0.5);
  EXPECT_FALSE(f.integral_weights());
  EXPECT_THROW(UpdateFunction::linear(1.0, -1.0), ValidationError);
  EXPECT_THROW(UpdateFunction::linear(0.0, 1.0), ValidationError);
  EXPECT_THROW(UpdateFunction::linear(-1.0, 3.0), ValidationError);
}

TEST(UpdateFunctionTest, PowerRoot) {
  const auto f = UpdateFunction::power_root(2.0);
  EXPECT_DOUBLE_EQ(f(9), 3.0);
  EXPECT_DOUBLE_EQ(f(1), 1.0);
  EXPECT_THROW(UpdateFunction::power_root(1.0), ValidationError);
  EXPECT_THROW(UpdateFunction::power_root(0.5), ValidationError);
}

TEST(UpdateFunctionTest, TabulatedExtrapolatesLinearly) {
  const auto f = UpdateFunction::tabulated({1.0, 4.0, 9.0});
  EXPECT_EQ(f(2), 4.0);
  EXPECT_EQ(f(3), 9.0);
  EXPECT_EQ(f(4), 14.0);
  EXPECT_EQ(f(6), 24.0);
}

TEST(UpdateFunctionTest, TabulatedValidation) {
  EXPECT_THROW(UpdateFunction::tabulated({1.0}), ValidationError);
  EXPECT_THROW(UpdateFunction::tabulated({0.0, 1.0}), ValidationError);
  EXPECT_THROW(UpdateFunction::tabulated({1.0, 1.0}), ValidationError);
  EXPECT_THROW(UpdateFunction::tabulated({2.0, 1.0}), ValidationError);
  EXPECT_THROW(UpdateFunction::tabulated({1.0, NAN}), ValidationError);
}

TEST(UpdateFunctionTest, TabulatedPower) {
  const auto f = UpdateFunction::tabulated_power(2.0, 100);
  EXPECT_EQ(f.table().size(), 100u);
  EXPECT_EQ(f(10), 100.0);
  EXPECT_EQ(f(101), 10000.0 + 199.0);
  EXPECT_FALSE(f.rho().has_value());
}

TEST(UpdateFunctionTest, DefaultIsIdentity) {
  const UpdateFunction f;
  EXPECT_EQ(f.kind(), UpdateFunction::Kind::kLinear);
  EXPECT_EQ(f(12), 12.0);
  EXPECT_EQ(f, UpdateFunction::linear(1.0, 0.0));
}

TEST(TriggerScheduleTest, FirstStepAlwaysTriggers) {
  for (const auto &s : {TriggerSchedule::constant(0.3), TriggerSchedule::power_law(0.5),
                        TriggerSchedule::harmonic(), TriggerSchedule::geometric(0.5)}) {
    EXPECT_EQ(s(0), 1.0);
  }
}

TEST(TriggerScheduleTest, Families) {
  EXPECT_EQ(TriggerSchedule::constant(0.3)(17), 0.3);
  EXPECT_DOUBLE_EQ(TriggerSchedule::power_law(0.5)(4), 0.5);
  EXPECT_DOUBLE_EQ(TriggerSchedule::harmonic()(8), 0.125);
  EXPECT_DOUBLE_EQ(TriggerSchedule::geometric(0.5)(3), 0.125);
  EXPECT_DOUBLE_EQ(TriggerSchedule::power_law(0.7, 0.5)(10), 0.5 * std::pow(10.0, -0.3));
}

TEST(TriggerScheduleTest, ClampKeepsProbabilitiesBelowOne) {
  const auto h = TriggerSchedule::harmonic();
  EXPECT_DOUBLE_EQ(h(1), 1.0 - 1e-6);
  const auto big = TriggerSchedule::harmonic(5.0);
  EXPECT_DOUBLE_EQ(big(2), 1.0 - 1e-6);
  EXPECT_DOUBLE_EQ(big(10), 0.5);
  EXPECT_THROW(TriggerSchedule::harmonic(1.0, 1.0), ValidationError);
}

TEST(TriggerScheduleTest, Validation) {
  EXPECT_THROW(TriggerSchedule::constant(0.0), ValidationError);
  EXPECT_THROW(TriggerSchedule::constant(1.0), ValidationError);
  EXPECT_THROW(TriggerSchedule::power_law(1.0), ValidationError);
  EXPECT_THROW(TriggerSchedule::power_law(0.0), ValidationError);
  EXPECT_THROW(TriggerSchedule::geometric(1.5), ValidationError);
  EXPECT_THROW(TriggerSchedule::harmonic(-1.0), ValidationError);
  EXPECT_THROW(TriggerSchedule::explicit_sequence({0.5, 1.0}), ValidationError);
  EXPECT_THROW(TriggerSchedule::explicit_sequence({0.0}), ValidationError);
}

TEST(TriggerScheduleTest, ExplicitSequence) {
  const auto s = TriggerSchedule::explicit_sequence({0.5, 0.25});
  EXPECT_EQ(s(0), 1.0);
  EXPECT_EQ(s(1), 0.5);
  EXPECT_EQ(s(2), 0.25);
  EXPECT_THROW(s(3), CapacityError);
  EXPECT_EQ(s.last_index(), 2u);
  EXPECT_FALSE(TriggerSchedule::constant(0.5).last_index().has_value());
}

TEST(TriggerScheduleTest, Equality) {
  EXPECT_EQ(TriggerSchedule::constant(0.3), TriggerSchedule::constant(0.3));
  EXPECT_NE(TriggerSchedule::constant(0.3), TriggerSchedule::constant(0.4));
  EXPECT_EQ(TriggerSchedule::explicit_sequence({0.1, 0.2}),
            TriggerSchedule::explicit_sequence({0.1, 0.2}));
  EXPECT_NE(TriggerSchedule::harmonic(), TriggerSchedule::power_law(0.5));
}

}  // namespace
}  // namespace faqurn
