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

#ifndef FAQURN_TRIGGER_SCHEDULE_HPP_
#define FAQURN_TRIGGER_SCHEDULE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace faqurn {

/// Success probabilities p_n of the trigger sequence B_n.
///
/// p_0 = 1 for every schedule: the first step always introduces color 1.
/// For n >= 1 the families are
///   - Constant:   p
///   - PowerLaw:   min(clamp_max, scale * n^(theta - 1))
///   - Harmonic:   min(clamp_max, scale / n)
///   - Geometric:  min(clamp_max, scale * ratio^n)
///   - Explicit:   the stored p_1, ..., p_m (no clamping)
class TriggerSchedule {
 public:
  enum class Kind { kConstant, kPowerLaw, kHarmonic, kGeometric, kExplicit };

  static constexpr double kDefaultClampMax = 1.0 - 1e-6;

  static TriggerSchedule constant(double p);
  static TriggerSchedule power_law(double theta, double scale = 1.0,
                                   double clamp_max = kDefaultClampMax);
  static TriggerSchedule harmonic(double scale = 1.0,
                                  double clamp_max = kDefaultClampMax);
  static TriggerSchedule geometric(double ratio, double scale = 1.0,
                                   double clamp_max = kDefaultClampMax);
  /// `values[i]` is p_{i+1}. Every value must lie in (0, 1).
  static TriggerSchedule explicit_sequence(std::vector<double> values);

  /// p_n. Throws CapacityError past the end of an Explicit sequence.
  double operator()(std::uint64_t n) const;

  Kind kind() const noexcept { return kind_; }
  /// p (Constant), theta (PowerLaw), ratio (Geometric).
  double parameter() const noexcept { return param_; }
  double scale() const noexcept { return scale_; }
  double clamp_max() const noexcept { return clamp_max_; }
  std::span<const double> values() const noexcept;
  /// Largest n with a defined p_n; unset for the unbounded families.
  std::optional<std::uint64_t> last_index() const noexcept;

  std::string describe() const;

  friend bool operator==(const TriggerSchedule &a, const TriggerSchedule &b);

 private:
  TriggerSchedule(Kind kind, double param, double scale, double clamp_max,
                  std::shared_ptr<const std::vector<double>> values)
      : kind_(kind),
        param_(param),
        scale_(scale),
        clamp_max_(clamp_max),
        values_(std::move(values)) {}

  Kind kind_;
  double param_;
  double scale_;
  double clamp_max_;
  std::shared_ptr<const std::vector<double>> values_;
};

}  // namespace faqurn

#endif  // FAQURN_TRIGGER_SCHEDULE_HPP_
