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

#include "faqurn/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "faqurn/error.hpp"
#include "json.hpp"

namespace faqurn {
namespace {

using nlohmann::json;

json schedule_json(const TriggerSchedule &s) {
  json j;
  switch (s.kind()) {
    case TriggerSchedule::Kind::kConstant:
      j = {{"kind", "constant"}, {"p", s.parameter()}};
      break;
    case TriggerSchedule::Kind::kPowerLaw:
      j = {{"kind", "power_law"}, {"theta", s.parameter()}, {"scale", s.scale()},
           {"clamp_max", s.clamp_max()}};
      break;
    case TriggerSchedule::Kind::kHarmonic:
      j = {{"kind", "harmonic"}, {"scale", s.scale()}, {"clamp_max", s.clamp_max()}};
      break;
    case TriggerSchedule::Kind::kGeometric:
      j = {{"kind", "geometric"}, {"ratio", s.parameter()}, {"scale", s.scale()},
           {"clamp_max", s.clamp_max()}};
      break;
    case TriggerSchedule::Kind::kExplicit:
      j = {{"kind", "explicit"},
           {"values", std::vector<double>(s.values().begin(), s.values().end())}};
      break;
  }
  return j;
}

TriggerSchedule schedule_of(const json &j) {
  const auto kind = j.at("kind").get<std::string>();
  const double clamp = j.value("clamp_max", TriggerSchedule::kDefaultClampMax);
  if (kind == "constant") return TriggerSchedule::constant(j.at("p").get<double>());
  if (kind == "power_law") {
    return TriggerSchedule::power_law(j.at("theta").get<double>(),
                                      j.value("scale", 1.0), clamp);
  }
  if (kind == "harmonic") return TriggerSchedule::harmonic(j.value("scale", 1.0), clamp);
  if (kind == "geometric") {
    return TriggerSchedule::geometric(j.at("ratio").get<double>(), j.value("scale", 1.0),
                                      clamp);
  }
  if (kind == "explicit") {
    return TriggerSchedule::explicit_sequence(j.at("values").get<std::vector<double>>());
  }
  throw ValidationError("unknown schedule kind '" + kind + "'");
}

json update_json(const UpdateFunction &f) {
  switch (f.kind()) {
    case UpdateFunction::Kind::kLinear:
      return {{"kind", "linear"}, {"rho", *f.rho()}, {"rho_tilde", *f.rho_tilde()}};
    case UpdateFunction::Kind::kPowerRoot:
      return {{"kind", "power_root"}, {"rho", *f.rho()}};
    case UpdateFunction::Kind::kTabulated:
      return {{"kind", "tabulated"},
              {"values", std::vector<double>(f.table().begin(), f.table().end())}};
  }
  return {};
}

UpdateFunction update_of(const json &j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "linear") {
    return UpdateFunction::linear(j.at("rho").get<double>(), j.value("rho_tilde", 0.0));
  }
  if (kind == "power_root") return UpdateFunction::power_root(j.at("rho").get<double>());
  if (kind == "tabulated") {
    return UpdateFunction::tabulated(j.at("values").get<std::vector<double>>());
  }
  throw ValidationError("unknown update function kind '" + kind + "'");
}

json config_json(const SimulationConfig &c) {
  return {{"schedule", schedule_json(c.schedule)},
          {"update", update_json(c.update)},
          {"horizon", c.horizon},
          {"seed", c.seed},
          {"tracked",
           {{"ids", c.tracked.ids},
            {"track_late_color", c.tracked.track_late_color},
            {"late_fraction", c.tracked.late_fraction}}},
          {"checkpoints_per_decade", c.checkpoints_per_decade},
          {"record_history", c.record_history},
          {"color_capacity", c.color_capacity}};
}

SimulationConfig config_of(const json &j) {
  SimulationConfig c;
  c.schedule = schedule_of(j.at("schedule"));
  c.update = update_of(j.at("update"));
  c.horizon = j.at("horizon").get<std::uint64_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("tracked")) {
    const auto &t = j.at("tracked");
    c.tracked.ids = t.value("ids", std::vector<Color>{1, 2});
    c.tracked.track_late_color = t.value("track_late_color", true);
    c.tracked.late_fraction = t.value("late_fraction", 0.1);
  }
  c.checkpoints_per_decade = j.value("checkpoints_per_decade", 64);
  c.record_history = j.value("record_history", false);
  c.color_capacity = j.value("color_capacity", c.color_capacity);
  return c;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw ValidationError(std::string("JSON parse error: ") + e.what());
  }
}

template <typename F>
auto guarded(F &&f) {
  try {
    return f();
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed document: ") + e.what());
  }
}

std::string slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::ofstream open_out(const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  return out;
}

}  // namespace

std::string schedule_to_json(const TriggerSchedule &schedule) {
  return schedule_json(schedule).dump();
}
TriggerSchedule schedule_from_json(std::string_view text) {
  return guarded([&] { return schedule_of(parse(text)); });
}
std::string update_function_to_json(const UpdateFunction &update) {
  return update_json(update).dump();
}
UpdateFunction update_function_from_json(std::string_view text) {
  return guarded([&] { return update_of(parse(text)); });
}
std::string config_to_json(const SimulationConfig &config) {
  return config_json(config).dump();
}
SimulationConfig config_from_json(std::string_view text) {
  return guarded([&] { return config_of(parse(text)); });
}

std::string trace_to_json(const Trace &trace, int indent) {
  json j;
  j["format"] = "faqurn.trace";
  j["version"] = 1;
  j["config"] = config_json(trace.config);
  j["colors"] = trace.colors;
  json tracked = json::array();
  for (const auto &t : trace.tracked) {
    tracked.push_back({{"color", t.color}, {"birth", t.birth}, {"points", t.points}});
  }
  j["tracked"] = std::move(tracked);
  j["final_counts"] = trace.final_counts;
  if (trace.history) j["history"] = *trace.history;
  return j.dump(indent);
}

Trace trace_from_json(std::string_view text) {
  return guarded([&] {
    const json j = parse(text);
    if (j.value("format", "") != "faqurn.trace") {
      throw ValidationError("not a faqurn trace document");
    }
    Trace t;
    t.config = config_of(j.at("config"));
    t.colors = j.at("colors").get<std::vector<TimePoint>>();
    for (const auto &item : j.at("tracked")) {
      t.tracked.push_back({item.at("color").get<Color>(), item.at("birth").get<std::uint64_t>(),
                           item.at("points").get<std::vector<TimePoint>>()});
    }
    t.final_counts = j.at("final_counts").get<std::vector<std::uint64_t>>();
    if (j.contains("history")) t.history = j.at("history").get<std::vector<Color>>();
    return t;
  });
}

void write_trace_json(const std::filesystem::path &path, const Trace &trace) {
  auto out = open_out(path);
  out << trace_to_json(trace) << '\n';
}

Trace read_trace_json(const std::filesystem::path &path) {
  return trace_from_json(slurp(path));
}

void write_trajectory_csv(const std::filesystem::path &path,
                          std::span<const TimePoint> points) {
  auto out = open_out(path);
  out << "n,value\n";
  for (const auto &[n, v] : points) out << n << ',' << v << '\n';
}

std::vector<TimePoint> read_trajectory_csv(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  if (line != "n,value") throw ValidationError(path.string() + ": expected header n,value");
  std::vector<TimePoint> points;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    std::uint64_t n = 0;
    std::uint64_t v = 0;
    const char *end = line.data() + line.size();
    if (comma == std::string::npos ||
        std::from_chars(line.data(), line.data() + comma, n).ec != std::errc{} ||
        std::from_chars(line.data() + comma + 1, end, v).ptr != end) {
      throw ValidationError(path.string() + ":" + std::to_string(lineno) + ": bad row");
    }
    points.emplace_back(n, v);
  }
  return points;
}

void write_trace_csvs(const std::filesystem::path &dir, const Trace &trace) {
  std::filesystem::create_directories(dir);
  write_trajectory_csv(dir / "colors.csv", trace.colors);
  for (const auto &t : trace.tracked) {
    write_trajectory_csv(dir / ("color_" + std::to_string(t.color) + ".csv"), t.points);
  }
}

void write_history(const std::filesystem::path &path, std::span<const Color> history) {
  auto out = open_out(path);
  for (Color c : history) out << c << '\n';
}

std::vector<Color> read_history(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::vector<Color> history;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Color c = 0;
    const char *end = line.data() + line.size();
    if (std::from_chars(line.data(), end, c).ptr != end) {
      throw ValidationError(path.string() + ":" + std::to_string(lineno) +
                            ": expected a decimal color label");
    }
    history.push_back(c);
  }
  return history;
}

}  // namespace faqurn
