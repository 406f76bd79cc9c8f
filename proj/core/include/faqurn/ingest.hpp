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

#ifndef FAQURN_INGEST_HPP_
#define FAQURN_INGEST_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "faqurn/analysis.hpp"
#include "faqurn/trace.hpp"

namespace faqurn {

/// One observed event: a timestamp (epoch or monotone index) and an opaque
/// UTF-8 category label, compared byte for byte.
struct EventRecord {
  std::int64_t timestamp = 0;
  std::string label;

  friend bool operator==(const EventRecord &, const EventRecord &) = default;
};

/// Records sorted nondecreasing by timestamp; ties keep file order.
struct EventStream {
  std::vector<EventRecord> records;

  std::size_t size() const noexcept { return records.size(); }
  bool empty() const noexcept { return records.empty(); }
};

enum class EventFormat {
  kCsv,    // header row, RFC-4180 quoting
  kJsonl,  // one JSON object per line
  kLines,  // one label per line; the timestamp is the line index
};

struct LoadOptions {
  EventFormat format = EventFormat::kCsv;
  char delimiter = ',';
  /// Column (CSV) or field (JSONL) holding the timestamp. Empty means the
  /// record index is used.
  std::string time_column = "timestamp";
  std::string label_column = "label";
};

struct LoadResult {
  EventStream stream;
  /// Records that appeared after a record with a larger timestamp.
  std::size_t reordered = 0;
  std::vector<std::string> warnings;
};

/// Parses and stably sorts an event file. Throws ValidationError naming the
/// line on malformed input or missing columns.
LoadResult load_events(std::istream &in, const LoadOptions &options = {});
LoadResult load_events(const std::filesystem::path &path, const LoadOptions &options = {});

/// Color ids in order of first appearance; labels[c - 1] is color c's label.
struct LabeledHistory {
  std::vector<Color> history;
  std::vector<std::string> labels;
};

/// Throws ValidationError on an empty stream.
LabeledHistory to_history(const EventStream &stream);

struct TrajectoryOptions {
  int checkpoints_per_decade = 64;
  /// Without `tracked`, the top_m most frequent colors get trajectories.
  std::size_t top_m = 20;
  /// Simulator-style selection (fixed ids plus the late color).
  std::optional<TrackedColors> tracked;
};

/// C_n and K_{n,c} at geometric checkpoints, plus final counts. With
/// `options.tracked` equal to a simulation's settings, the result equals
/// observation_of() of that simulation's trace.
Observation empirical_trajectories(std::span<const Color> history,
                                   const TrajectoryOptions &options = {});

}  // namespace faqurn

#endif  // FAQURN_INGEST_HPP_
