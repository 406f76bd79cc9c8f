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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "faqurn/error.hpp"
#include "faqurn/rng.hpp"
#include "faqurn/trace.hpp"

namespace faqurn {

std::vector<std::uint64_t> checkpoint_times(std::uint64_t horizon, int per_decade) {
  if (per_decade < 1) throw ValidationError("checkpoints per decade must be >= 1");
  std::vector<std::uint64_t> times;
  if (horizon == 0) return times;
  for (int j = 0;; ++j) {
    const double t = std::round(std::pow(10.0, static_cast<double>(j) / per_decade));
    if (t >= static_cast<double>(horizon)) break;
    const auto n = static_cast<std::uint64_t>(t);
    if (times.empty() || times.back() != n) times.push_back(n);
  }
  times.push_back(horizon);
  return times;
}

void SimulationConfig::validate() const {
  if (horizon < 1) throw ValidationError("horizon must be >= 1");
  if (checkpoints_per_decade < 1) {
    throw ValidationError("checkpoints per decade must be >= 1");
  }
  if (tracked.track_late_color &&
      !(tracked.late_fraction > 0.0 && tracked.late_fraction < 1.0)) {
    throw ValidationError("late-color fraction must lie in (0, 1)");
  }
  for (Color c : tracked.ids) {
    if (c == 0) throw ValidationError("tracked color ids start at 1");
  }
  if (color_capacity == 0) throw ValidationError("color capacity must be positive");
  if (const auto last = schedule.last_index(); last && horizon - 1 > *last) {
    std::ostringstream os;
    os << "explicit schedule covers p_1..p_" << *last << " but horizon " << horizon
       << " needs p_1..p_" << horizon - 1;
    throw ValidationError(os.str());
  }
}

Trace simulate(const SimulationConfig &config) {
  config.validate();

  Trace trace;
  trace.config = config;
  UrnState urn(config.schedule, config.update, config.color_capacity);
  Xoshiro256 rng(config.seed);

  const auto times = checkpoint_times(config.horizon, config.checkpoints_per_decade);
  trace.colors.reserve(times.size());

  // Tracked slots in output order; the late color's id is learned on birth.
  std::vector<ColorTrajectory> slots;
  std::vector<bool> born;
  for (Color c : config.tracked.ids) {
    if (std::any_of(slots.begin(), slots.end(),
                    [c](const ColorTrajectory &t) { return t.color == c; })) {
      continue;
    }
    slots.push_back({c, 0, {}});
    born.push_back(false);
  }
  const auto late_after = static_cast<std::uint64_t>(
      std::ceil(config.tracked.late_fraction * static_cast<double>(config.horizon)));
  bool late_pending = config.tracked.track_late_color;

  if (config.record_history) {
    trace.history.emplace();
    trace.history->reserve(config.horizon);
  }

  std::size_t next_checkpoint = 0;
  while (urn.time() < config.horizon) {
    const StepOutcome out = urn.step(rng);
    const std::uint64_t n = urn.time();
    if (config.record_history) trace.history->push_back(out.color);
    if (out.kind == StepOutcome::Kind::kNewColor) {
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (slots[s].color == out.color) {
          slots[s].birth = n;
          born[s] = true;
        }
      }
      if (late_pending && n > late_after) {
        late_pending = false;
        const bool duplicate = std::any_of(
            slots.begin(), slots.end(),
            [&](const ColorTrajectory &t) { return t.color == out.color; });
        if (!duplicate) {
          slots.push_back({out.color, n, {}});
          born.push_back(true);
        }
      }
    }
    if (next_checkpoint < times.size() && times[next_checkpoint] == n) {
      trace.colors.emplace_back(n, urn.num_colors());
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (born[s]) slots[s].points.emplace_back(n, urn.count(slots[s].color));
      }
      ++next_checkpoint;
    }
  }

  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (born[s]) trace.tracked.push_back(std::move(slots[s]));
  }
  trace.final_counts.assign(urn.counts().begin(), urn.counts().end());
  return trace;
}

std::vector<Trace> simulate_replications(const SimulationConfig &base,
                                         std::uint64_t master_seed,
                                         std::size_t replications, unsigned threads) {
  base.validate();
  std::vector<Trace> traces(replications);
  parallel_for(replications, threads, [&](std::size_t r) {
    SimulationConfig config = base;
    config.seed = stream_seed(master_seed, r);
    traces[r] = simulate(config);
  });
  return traces;
}

}  // namespace faqurn
