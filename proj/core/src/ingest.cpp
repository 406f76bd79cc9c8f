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

#include "faqurn/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_map>

#include "faqurn/enumerate.hpp"
#include "faqurn/error.hpp"
#include "json.hpp"

namespace faqurn {
namespace {

[[noreturn]] void fail_at(std::size_t line, const std::string &what) {
  std::ostringstream os;
  os << "line " << line << ": " << what;
  throw ValidationError(os.str());
}

std::int64_t parse_timestamp(std::string_view text, std::size_t line) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    fail_at(line, "timestamp '" + std::string(text) + "' is not an integer");
  }
  return value;
}

struct CsvRow {
  std::size_t line = 0;  // line on which the row starts
  std::vector<std::string> fields;
};

// RFC-4180 reader: quoted fields may contain delimiters, doubled quotes and
// line breaks. A trailing CR before LF is dropped.
std::vector<CsvRow> read_csv(const std::string &text, char delim) {
  std::vector<CsvRow> rows;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    CsvRow row;
    row.line = line;
    std::string field;
    bool row_done = false;
    while (!row_done) {
      field.clear();
      if (i < n && text[i] == '"') {
        ++i;
        for (;;) {
          if (i >= n) fail_at(row.line, "unterminated quoted field");
          const char ch = text[i++];
          if (ch == '"') {
            if (i < n && text[i] == '"') {
              field.push_back('"');
              ++i;
            } else {
              break;
            }
          } else {
            if (ch == '\n') ++line;
            field.push_back(ch);
          }
        }
        if (i < n && text[i] != delim && text[i] != '\n' && text[i] != '\r') {
          fail_at(line, "unexpected character after closing quote");
        }
      } else {
        while (i < n && text[i] != delim && text[i] != '\n') field.push_back(text[i++]);
        if (!field.empty() && field.back() == '\r') field.pop_back();
      }
      if (i < n && text[i] == '\r') ++i;
      row.fields.push_back(field);
      if (i >= n) {
        row_done = true;
      } else if (text[i] == delim) {
        ++i;
      } else {
        ++i;  // '\n'
        ++line;
        row_done = true;
      }
    }
    const bool blank = row.fields.size() == 1 && row.fields[0].empty();
    if (!blank) rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t column_index(const std::vector<std::string> &header, const std::string &name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) fail_at(1, "missing column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

std::vector<std::pair<std::size_t, EventRecord>> parse_csv(const std::string &text,
                                                           const LoadOptions &opt) {
  std::vector<std::pair<std::size_t, EventRecord>> out;
  const auto rows = read_csv(text, opt.delimiter);
  if (rows.empty()) return out;
  const auto &header = rows.front().fields;
  const std::size_t label_col = column_index(header, opt.label_column);
  const std::optional<std::size_t> time_col =
      opt.time_column.empty() ? std::nullopt
                              : std::optional(column_index(header, opt.time_column));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto &row = rows[r];
    if (row.fields.size() != header.size()) {
      std::ostringstream os;
      os << "expected " << header.size() << " fields, found " << row.fields.size();
      fail_at(row.line, os.str());
    }
    EventRecord rec;
    rec.label = row.fields[label_col];
    rec.timestamp = time_col ? parse_timestamp(row.fields[*time_col], row.line)
                             : static_cast<std::int64_t>(r - 1);
    out.emplace_back(row.line, std::move(rec));
  }
  return out;
}

std::vector<std::pair<std::size_t, EventRecord>> parse_jsonl(std::istream &in,
                                                             const LoadOptions &opt) {
  std::vector<std::pair<std::size_t, EventRecord>> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
      fail_at(line, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) fail_at(line, "expected a JSON object");
    EventRecord rec;
    const auto label = obj.find(opt.label_column);
    if (label == obj.end()) fail_at(line, "missing field '" + opt.label_column + "'");
    if (label->is_string()) {
      rec.label = label->get<std::string>();
    } else if (label->is_number_integer()) {
      rec.label = label->dump();
    } else {
      fail_at(line, "field '" + opt.label_column + "' must be a string or integer");
    }
    if (opt.time_column.empty()) {
      rec.timestamp = static_cast<std::int64_t>(out.size());
    } else {
      const auto t = obj.find(opt.time_column);
      if (t == obj.end()) fail_at(line, "missing field '" + opt.time_column + "'");
      if (t->is_number_integer()) {
        rec.timestamp = t->get<std::int64_t>();
      } else if (t->is_string()) {
        rec.timestamp = parse_timestamp(t->get<std::string>(), line);
      } else {
        fail_at(line, "field '" + opt.time_column + "' must be an integer");
      }
    }
    out.emplace_back(line, std::move(rec));
  }
  return out;
}

std::vector<std::pair<std::size_t, EventRecord>> parse_lines(std::istream &in) {
  std::vector<std::pair<std::size_t, EventRecord>> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    out.emplace_back(line, EventRecord{static_cast<std::int64_t>(out.size()), text});
  }
  return out;
}

}  // namespace

LoadResult load_events(std::istream &in, const LoadOptions &options) {
  if (options.label_column.empty()) throw ValidationError("label column name is empty");
  std::vector<std::pair<std::size_t, EventRecord>> parsed;
  switch (options.format) {
    case EventFormat::kCsv: {
      if (options.delimiter == '"' || options.delimiter == '\n' || options.delimiter == '\r') {
        throw ValidationError("invalid CSV delimiter");
      }
      const std::string text{std::istreambuf_iterator<char>(in), {}};
      parsed = parse_csv(text, options);
      break;
    }
    case EventFormat::kJsonl:
      parsed = parse_jsonl(in, options);
      break;
    case EventFormat::kLines:
      parsed = parse_lines(in);
      break;
  }
  if (in.bad()) throw ValidationError("read error while loading events");

  LoadResult result;
  std::int64_t running_max = std::numeric_limits<std::int64_t>::min();
  for (const auto &[line, rec] : parsed) {
    if (rec.label.empty()) fail_at(line, "empty category label");
    if (rec.timestamp < running_max) ++result.reordered;
    running_max = std::max(running_max, rec.timestamp);
  }
  result.stream.records.reserve(parsed.size());
  for (auto &entry : parsed) result.stream.records.push_back(std::move(entry.second));
  if (result.reordered > 0) {
    std::stable_sort(
        result.stream.records.begin(), result.stream.records.end(),
        [](const EventRecord &a, const EventRecord &b) { return a.timestamp < b.timestamp; });
    std::ostringstream os;
    os << result.reordered << " record(s) were out of timestamp order and have been sorted";
    result.warnings.push_back(os.str());
  }
  return result;
}

LoadResult load_events(const std::filesystem::path &path, const LoadOptions &options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open event file " + path.string());
  return load_events(in, options);
}

LabeledHistory to_history(const EventStream &stream) {
  if (stream.empty()) throw ValidationError("cannot build a history from an empty stream");
  LabeledHistory out;
  out.history.reserve(stream.size());
  std::unordered_map<std::string, Color> ids;
  for (const auto &rec : stream.records) {
    const auto [it, inserted] = ids.try_emplace(rec.label, static_cast<Color>(ids.size() + 1));
    if (inserted) out.labels.push_back(rec.label);
    out.history.push_back(it->second);
  }
  return out;
}

Observation empirical_trajectories(std::span<const Color> history,
                                   const TrajectoryOptions &options) {
  validate_history(history);
  const auto horizon = static_cast<std::uint64_t>(history.size());
  Observation obs;
  obs.horizon = horizon;

  std::vector<std::uint64_t> birth;
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    if (history[n - 1] > birth.size()) birth.push_back(n);
  }

  // Tracked colors in output order, restricted to those that appear.
  std::vector<Color> slots;
  auto add_slot = [&](Color c) {
    if (c >= 1 && c <= birth.size() && std::find(slots.begin(), slots.end(), c) == slots.end()) {
      slots.push_back(c);
    }
  };
  if (options.tracked) {
    const auto &t = *options.tracked;
    for (Color c : t.ids) add_slot(c);
    if (t.track_late_color) {
      const auto late_after = static_cast<std::uint64_t>(
          std::ceil(t.late_fraction * static_cast<double>(horizon)));
      const auto it = std::upper_bound(birth.begin(), birth.end(), late_after);
      if (it != birth.end()) add_slot(static_cast<Color>(it - birth.begin() + 1));
    }
  } else {
    std::vector<std::uint64_t> counts(birth.size(), 0);
    for (Color c : history) ++counts[c - 1];
    const RankCurve curve = rank_curve(counts);
    const std::size_t m = std::min(options.top_m, curve.colors.size());
    for (std::size_t r = 0; r < m; ++r) add_slot(curve.colors[r]);
  }
  for (Color c : slots) obs.tracked.push_back({c, birth[c - 1], {}});

  const auto times = checkpoint_times(horizon, options.checkpoints_per_decade);
  obs.colors.reserve(times.size());
  std::vector<std::uint64_t> counts;
  counts.reserve(birth.size());
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    const Color c = history[n - 1];
    if (c > counts.size()) counts.push_back(0);
    ++counts[c - 1];
    if (next < times.size() && times[next] == n) {
      obs.colors.emplace_back(n, counts.size());
      for (auto &traj : obs.tracked) {
        if (traj.birth <= n) traj.points.emplace_back(n, counts[traj.color - 1]);
      }
      ++next;
    }
  }
  obs.final_counts = std::move(counts);
  return obs;
}

}  // namespace faqurn
