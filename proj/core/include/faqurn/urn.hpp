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

#ifndef FAQURN_URN_HPP_
#define FAQURN_URN_HPP_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "faqurn/trigger_schedule.hpp"
#include "faqurn/update_function.hpp"
#include "faqurn/weight_index.hpp"

namespace faqurn {

/// Colors are labeled 1, 2, ... in order of first appearance.
using Color = std::uint32_t;

struct StepOutcome {
  enum class Kind { kNewColor, kRepeat };
  Kind kind;
  Color color;

  friend bool operator==(const StepOutcome &, const StepOutcome &) = default;
};

/// Live state of a triggered urn: time n, counts K_{n,c}, number of colors
/// C_n and total weight T_n = sum_c F(K_{n,c}).
///
/// Single-threaded: the sampling index is mutated on every step. The update
/// function and schedule are immutable values, shareable between states.
class UrnState {
 public:
  /// Steps between exact recomputations of T_n and the weight index.
  static constexpr std::uint64_t kRebuildPeriod = std::uint64_t{1} << 16;
  /// Relative tolerance for the drift check performed at each rebuild.
  static constexpr double kDriftTolerance = 1e-9;

  explicit UrnState(TriggerSchedule schedule, UpdateFunction update = {},
                    std::size_t color_capacity =
                        std::numeric_limits<Color>::max() - 1);

  /// Advances one step using `u_trigger` for the Bernoulli trigger and
  /// `u_draw` for the weighted draw, both uniforms in [0, 1).
  StepOutcome step(double u_trigger, double u_draw);

  template <typename Rng>
  StepOutcome step(Rng &rng) {
    const double u_trigger = rng.uniform();
    const double u_draw = rng.uniform();
    return step(u_trigger, u_draw);
  }

  /// Forces the next history symbol to be `color` (a repeat of an existing
  /// color, or C_n + 1 for a new one). Used to replay recorded histories.
  StepOutcome advance(Color color);

  /// Probability that the next step introduces a new color (p_n).
  double probability_new() const;
  /// Probability that the next step repeats `color`.
  double probability_repeat(Color color) const;

  std::uint64_t time() const noexcept { return time_; }
  std::size_t num_colors() const noexcept { return counts_.size(); }
  /// counts()[c - 1] = K_{n,c}.
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t count(Color c) const { return counts_.at(c - 1); }
  double weight(Color c) const { return weights_.at(c - 1); }
  double total_weight() const noexcept { return total_weight_; }

  const TriggerSchedule &schedule() const noexcept { return schedule_; }
  const UpdateFunction &update_function() const noexcept { return update_; }

  /// Recomputes T_n and the weight index from the counts. Throws
  /// std::logic_error when the incrementally maintained T_n has drifted by
  /// more than kDriftTolerance * T_n.
  void rebuild();

 private:
  void add_new_color();
  void increment(std::size_t index);
  void after_step();

  TriggerSchedule schedule_;
  UpdateFunction update_;
  std::size_t capacity_;
  std::uint64_t time_ = 0;
  std::vector<std::uint64_t> counts_;
  std::vector<double> weights_;
  WeightIndex index_;
  double total_weight_ = 0.0;
};

}  // namespace faqurn

#endif  // FAQURN_URN_HPP_
