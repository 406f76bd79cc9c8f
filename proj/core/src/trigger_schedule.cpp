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

#include "faqurn/trigger_schedule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "faqurn/error.hpp"

namespace faqurn {
namespace {

void check_clamp(double clamp_max) {
  if (!(clamp_max > 0.0 && clamp_max < 1.0)) {
    throw ValidationError("clamp_max must lie in (0, 1)");
  }
}

void check_scale(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ValidationError("schedule scale must be positive and finite");
  }
}

}  // namespace

TriggerSchedule TriggerSchedule::constant(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ValidationError("constant trigger probability must lie in (0, 1)");
  }
  return TriggerSchedule(Kind::kConstant, p, 1.0, kDefaultClampMax, nullptr);
}

TriggerSchedule TriggerSchedule::power_law(double theta, double scale,
                                           double clamp_max) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw ValidationError("power-law theta must lie in (0, 1)");
  }
  check_scale(scale);
  check_clamp(clamp_max);
  return TriggerSchedule(Kind::kPowerLaw, theta, scale, clamp_max, nullptr);
}

TriggerSchedule TriggerSchedule::harmonic(double scale, double clamp_max) {
  check_scale(scale);
  check_clamp(clamp_max);
  return TriggerSchedule(Kind::kHarmonic, 0.0, scale, clamp_max, nullptr);
}

TriggerSchedule TriggerSchedule::geometric(double ratio, double scale,
                                           double clamp_max) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw ValidationError("geometric ratio must lie in (0, 1)");
  }
  check_scale(scale);
  check_clamp(clamp_max);
  return TriggerSchedule(Kind::kGeometric, ratio, scale, clamp_max, nullptr);
}

TriggerSchedule TriggerSchedule::explicit_sequence(std::vector<double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0 && values[i] < 1.0)) {
      std::ostringstream os;
      os << "explicit trigger probability p_" << i + 1 << " = " << values[i]
         << " is outside (0, 1)";
      throw ValidationError(os.str());
    }
  }
  return TriggerSchedule(
      Kind::kExplicit, 0.0, 1.0, kDefaultClampMax,
      std::make_shared<const std::vector<double>>(std::move(values)));
}

double TriggerSchedule::operator()(std::uint64_t n) const {
  if (n == 0) return 1.0;
  const auto x = static_cast<double>(n);
  switch (kind_) {
    case Kind::kConstant:
      return param_;
    case Kind::kPowerLaw:
      return std::min(clamp_max_, scale_ * std::pow(x, param_ - 1.0));
    case Kind::kHarmonic:
      return std::min(clamp_max_, scale_ / x);
    case Kind::kGeometric:
      return std::min(clamp_max_, scale_ * std::pow(param_, x));
    case Kind::kExplicit:
      if (n > values_->size()) {
        std::ostringstream os;
        os << "explicit schedule defines p_1..p_" << values_->size()
           << ", p_" << n << " requested";
        throw CapacityError(os.str());
      }
      return (*values_)[n - 1];
  }
  return 0.0;
}

std::span<const double> TriggerSchedule::values() const noexcept {
  if (!values_) return {};
  return *values_;
}

std::optional<std::uint64_t> TriggerSchedule::last_index() const noexcept {
  if (kind_ != Kind::kExplicit) return std::nullopt;
  return values_->size();
}

std::string TriggerSchedule::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::kConstant:
      os << "constant(p=" << param_ << ")";
      break;
    case Kind::kPowerLaw:
      os << "power_law(theta=" << param_ << ", scale=" << scale_ << ")";
      break;
    case Kind::kHarmonic:
      os << "harmonic(scale=" << scale_ << ")";
      break;
    case Kind::kGeometric:
      os << "geometric(ratio=" << param_ << ", scale=" << scale_ << ")";
      break;
    case Kind::kExplicit:
      os << "explicit(length=" << values_->size() << ")";
      break;
  }
  return os.str();
}

bool operator==(const TriggerSchedule &a, const TriggerSchedule &b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == TriggerSchedule::Kind::kExplicit) {
    return a.values_ == b.values_ || *a.values_ == *b.values_;
  }
  return a.param_ == b.param_ && a.scale_ == b.scale_ &&
         a.clamp_max_ == b.clamp_max_;
}

}  // namespace faqurn
