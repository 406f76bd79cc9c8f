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

#ifndef FAQURN_TRACE_IO_HPP_
#define FAQURN_TRACE_IO_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "faqurn/trace.hpp"

namespace faqurn {

/// Serialization of traces and their configs.
///
/// JSON layout (one document):
///   { "format": "faqurn.trace", "version": 1,
///     "config": {...}, "colors": [[n, C_n], ...],
///     "tracked": [{"color": c, "birth": n0, "points": [[n, K], ...]}, ...],
///     "final_counts": [...], "history": [...]   (optional) }
/// Output is a pure function of the trace, so equal traces give equal bytes.

std::string schedule_to_json(const TriggerSchedule &schedule);
TriggerSchedule schedule_from_json(std::string_view json);
std::string update_function_to_json(const UpdateFunction &update);
UpdateFunction update_function_from_json(std::string_view json);
std::string config_to_json(const SimulationConfig &config);
SimulationConfig config_from_json(std::string_view json);

std::string trace_to_json(const Trace &trace, int indent = -1);
Trace trace_from_json(std::string_view json);

void write_trace_json(const std::filesystem::path &path, const Trace &trace);
Trace read_trace_json(const std::filesystem::path &path);

/// CSV with header "n,value".
void write_trajectory_csv(const std::filesystem::path &path,
                          std::span<const TimePoint> points);
std::vector<TimePoint> read_trajectory_csv(const std::filesystem::path &path);

/// Writes colors.csv and color_<id>.csv for each tracked color into `dir`.
void write_trace_csvs(const std::filesystem::path &dir, const Trace &trace);

/// One decimal color label per line.
void write_history(const std::filesystem::path &path, std::span<const Color> history);
std::vector<Color> read_history(const std::filesystem::path &path);

}  // namespace faqurn

#endif  // FAQURN_TRACE_IO_HPP_
