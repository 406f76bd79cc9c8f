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

#include "faqurn/urn.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "faqurn/error.hpp"
#include "faqurn/special.hpp"

namespace faqurn {

UrnState::UrnState(TriggerSchedule schedule, UpdateFunction update,
                   std::size_t color_capacity)
    : schedule_(std::move(schedule)),
      update_(std::move(update)),
      capacity_(color_capacity) {}

StepOutcome UrnState::step(double u_trigger, double u_draw) {
  if (counts_.empty() || u_trigger < schedule_(time_)) {
    add_new_color();
    after_step();
    return {StepOutcome::Kind::kNewColor, static_cast<Color>(counts_.size())};
  }
  const std::size_t i = index_.find(u_draw * total_weight_);
  increment(i);
  after_step();
  return {StepOutcome::Kind::kRepeat, static_cast<Color>(i + 1)};
}

StepOutcome UrnState::advance(Color color) {
  if (color == counts_.size() + 1) {
    add_new_color();
    after_step();
    return {StepOutcome::Kind::kNewColor, color};
  }
  if (color == 0 || color > counts_.size()) {
    std::ostringstream os;
    os << "color " << color << " cannot follow a state with " << counts_.size()
       << " colors";
    throw ValidationError(os.str());
  }
  increment(color - 1);
  after_step();
  return {StepOutcome::Kind::kRepeat, color};
}

double UrnState::probability_new() const {
  return counts_.empty() ? 1.0 : schedule_(time_);
}

double UrnState::probability_repeat(Color color) const {
  if (color == 0 || color > counts_.size()) return 0.0;
  return (1.0 - schedule_(time_)) * weights_[color - 1] / total_weight_;
}

void UrnState::add_new_color() {
  if (counts_.size() >= capacity_) {
    std::ostringstream os;
    os << "color capacity " << capacity_ << " exceeded at time " << time_ + 1;
    throw CapacityError(os.str());
  }
  const double w = update_(1);
  counts_.push_back(1);
  weights_.push_back(w);
  index_.push_back(w);
  total_weight_ += w;
}

void UrnState::increment(std::size_t i) {
  const std::uint64_t k = ++counts_[i];
  const double w = update_(k);
  const double delta = w - weights_[i];
  weights_[i] = w;
  index_.add(i, delta);
  total_weight_ += delta;
}

void UrnState::after_step() {
  ++time_;
  if (time_ % kRebuildPeriod == 0) rebuild();
}

void UrnState::rebuild() {
  CompensatedSum exact;
  for (double w : weights_) exact.add(w);
  const double t = exact.value();
  if (std::abs(t - total_weight_) > kDriftTolerance * t) {
    std::ostringstream os;
    os.precision(17);
    os << "total weight drifted: incremental " << total_weight_ << ", exact "
       << t << " at time " << time_;
    throw std::logic_error(os.str());
  }
  total_weight_ = t;
  index_.rebuild(weights_);
}

}  // namespace faqurn
