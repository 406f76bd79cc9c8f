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

#ifndef FAQURN_TRACE_HPP_
#define FAQURN_TRACE_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "faqurn/trigger_schedule.hpp"
#include "faqurn/update_function.hpp"
#include "faqurn/urn.hpp"

namespace faqurn {

/// (time n, value) sample of a trajectory.
using TimePoint = std::pair<std::uint64_t, std::uint64_t>;

/// Geometrically spaced checkpoint times round(10^(j / per_decade)) within
/// [1, horizon], deduplicated, always ending at `horizon`.
std::vector<std::uint64_t> checkpoint_times(std::uint64_t horizon,
                                            int per_decade = 64);

/// Which colors get a K_{n,c} trajectory.
struct TrackedColors {
  std::vector<Color> ids = {1, 2};
  /// Also track the first color born strictly after ceil(late_fraction * N).
  bool track_late_color = true;
  double late_fraction = 0.1;

  friend bool operator==(const TrackedColors &, const TrackedColors &) = default;
};

struct SimulationConfig {
  TriggerSchedule schedule = TriggerSchedule::constant(0.5);
  UpdateFunction update = {};
  std::uint64_t horizon = 1;
  std::uint64_t seed = 0;
  TrackedColors tracked = {};
  int checkpoints_per_decade = 64;
  bool record_history = false;
  std::size_t color_capacity = std::numeric_limits<Color>::max() - 1;

  /// Throws ValidationError on out-of-range settings.
  void validate() const;

  friend bool operator==(const SimulationConfig &, const SimulationConfig &) = default;
};

/// K_{n,c} sampled at the checkpoints where color c exists.
struct ColorTrajectory {
  Color color = 0;
  std::uint64_t birth = 0;  // first time the color appears
  std::vector<TimePoint> points;

  friend bool operator==(const ColorTrajectory &, const ColorTrajectory &) = default;
};

/// Materialized output of one simulation run.
struct Trace {
  SimulationConfig config;
  std::vector<TimePoint> colors;  // (n, C_n) at each checkpoint
  std::vector<ColorTrajectory> tracked;
  std::vector<std::uint64_t> final_counts;  // K_{N,c}, c = 1..C_N
  std::optional<std::vector<Color>> history;

  std::uint64_t seed() const noexcept { return config.seed; }
  std::uint64_t horizon() const noexcept { return config.horizon; }

  friend bool operator==(const Trace &, const Trace &) = default;
};

/// Runs the urn to `config.horizon`. Deterministic in (config, seed).
Trace simulate(const SimulationConfig &config);

/// Runs `replications` independent copies of `base`, replication r seeded
/// with stream_seed(master_seed, r). Results are independent of `threads`
/// (0 = hardware concurrency).
std::vector<Trace> simulate_replications(const SimulationConfig &base,
                                         std::uint64_t master_seed,
                                         std::size_t replications,
                                         unsigned threads = 0);

/// Runs `task(r)` for r in [0, count) on up to `threads` workers. The first
/// exception thrown by any task is rethrown after all workers join.
template <typename Task>
void parallel_for(std::size_t count, unsigned threads, Task &&task);

}  // namespace faqurn

#include "faqurn/detail/parallel_for.hpp"

#endif  // FAQURN_TRACE_HPP_
