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

// Shared plumbing for the faqurn command-line tool: model options, the
// output envelope, CSV writing and fixed-width tables.

#ifndef FAQURN_TOOLS_OUTPUT_HPP_
#define FAQURN_TOOLS_OUTPUT_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "faqurn/trigger_schedule.hpp"
#include "faqurn/update_function.hpp"
#include "json.hpp"

namespace faqurn::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitOracle = 3;

struct ModelOptions {
  std::string schedule = "constant";
  double p = 0.5;
  double theta = 0.7;
  double scale = 1.0;
  double ratio = 0.5;
  double clamp = TriggerSchedule::kDefaultClampMax;
  std::vector<double> p_values;

  std::string update = "linear";
  double rho = 1.0;
  double rho_tilde = 0.0;
  double exponent = 2.0;
  std::size_t table_size = 10'000;

  TriggerSchedule make_schedule() const;
  UpdateFunction make_update() const;
};

// `positional_schedule` also accepts the schedule kind as the first positional.
void add_schedule_options(CLI::App &app, ModelOptions &m, bool positional_schedule = false);
void add_update_options(CLI::App &app, ModelOptions &m);

/// Reads a count given as an integer or in scientific notation ("1e7").
std::uint64_t parse_count(const std::string &text, const std::string &name);

/// State every command shares: the parsed config and stdout mode.
struct Context {
  const CLI::App *root = nullptr;
  std::string command;
  bool json_stdout = false;
  unsigned threads = 0;

  /// The effective configuration as INI text; feeding it back through
  /// --config reproduces the run.
  std::string config_ini() const;
  /// {"tool", "version", "command", "config"} plus the given payload.
  json envelope(json payload) const;
  /// Comment lines that open every CSV the tool writes.
  std::string csv_preamble() const;
};

void write_text(const std::filesystem::path &path, const std::string &text);
void write_json(const std::filesystem::path &path, const json &doc);

/// RFC-4180 field quoting.
std::string csv_field(const std::string &s);
void write_csv(const std::filesystem::path &path, const Context &ctx,
               const std::vector<std::string> &header,
               const std::vector<std::vector<std::string>> &rows);

std::string num(double v, int digits = 6);

/// Left-aligned first column, right-aligned rest.
void print_table(const std::vector<std::string> &header,
                 const std::vector<std::vector<std::string>> &rows);

}  // namespace faqurn::cli

#endif  // FAQURN_TOOLS_OUTPUT_HPP_
