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

#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "faqurn/error.hpp"

namespace faqurn::cli {

TriggerSchedule ModelOptions::make_schedule() const {
  if (schedule == "constant") return TriggerSchedule::constant(p);
  if (schedule == "power") return TriggerSchedule::power_law(theta, scale, clamp);
  if (schedule == "harmonic") return TriggerSchedule::harmonic(scale, clamp);
  if (schedule == "geometric") return TriggerSchedule::geometric(ratio, scale, clamp);
  if (schedule == "explicit") return TriggerSchedule::explicit_sequence(p_values);
  throw ValidationError("unknown schedule " + schedule);
}

UpdateFunction ModelOptions::make_update() const {
  if (update == "linear") return UpdateFunction::linear(rho, rho_tilde);
  if (update == "power-root") return UpdateFunction::power_root(rho);
  if (update == "tabulated-power") return UpdateFunction::tabulated_power(exponent, table_size);
  throw ValidationError("unknown update function " + update);
}

void add_schedule_options(CLI::App &app, ModelOptions &m, bool positional_schedule) {
  const auto kinds = CLI::IsMember({"constant", "power", "harmonic", "geometric", "explicit"});
  app.add_option(positional_schedule ? "schedule,--schedule" : "--schedule", m.schedule,
                 "trigger schedule p_n: constant, power (n^(theta-1)), harmonic (1/n), "
                 "geometric (ratio^n) or explicit (--p-values)")
      ->check(kinds)
      ->capture_default_str();
  app.add_option("--p", m.p, "constant trigger probability")->capture_default_str();
  app.add_option("--theta", m.theta, "power-law growth exponent of C_n")->capture_default_str();
  app.add_option("--scale", m.scale, "multiplier on p_n")->capture_default_str();
  app.add_option("--ratio", m.ratio, "geometric ratio")->capture_default_str();
  app.add_option("--clamp", m.clamp, "upper clamp on p_n")->capture_default_str();
  app.add_option("--p-values", m.p_values, "explicit p_1, p_2, ...");
}

void add_update_options(CLI::App &app, ModelOptions &m) {
  app.add_option("--update", m.update,
                 "update function F: linear (rho x + rho_tilde), power-root (x^(1/rho)) "
                 "or tabulated-power (x^exponent)")
      ->check(CLI::IsMember({"linear", "power-root", "tabulated-power"}))
      ->capture_default_str();
  app.add_option("--rho", m.rho)->capture_default_str();
  app.add_option("--rho-tilde", m.rho_tilde)->capture_default_str();
  app.add_option("--exponent", m.exponent, "tabulated-power exponent")->capture_default_str();
  app.add_option("--table-size", m.table_size, "tabulated-power table length")
      ->capture_default_str();
}

std::uint64_t parse_count(const std::string &text, const std::string &name) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != text.size() || !(v >= 0.0) || v > 1.8e19 || std::floor(v) != v) {
    throw ValidationError(name + " must be a nonnegative integer, got '" + text + "'");
  }
  return static_cast<std::uint64_t>(v);
}

std::string Context::config_ini() const {
  // Written from the raw option strings so that a config read back through
  // --config emits the same text. Output-only settings (--json, --threads)
  // are left out; they do not change results.
  std::ostringstream out;
  const CLI::App *sub = root->get_subcommand(command);
  for (const CLI::Option *opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "version" || name == "config") continue;
    const bool is_list = opt->get_expected_max() > 1;
    if (is_list && opt->count() == 0 && opt->get_default_str().empty()) continue;
    out << command << '.' << name << '=';
    if (opt->get_expected_max() == 0) {
      out << (opt->count() > 0 && opt->as<bool>() ? "true" : "false");
    } else if (is_list) {
      if (opt->count() > 0) {
        out << '[';
        const auto &items = opt->results();
        for (std::size_t i = 0; i < items.size(); ++i) out << (i ? "," : "") << items[i];
        out << ']';
      } else {
        out << opt->get_default_str();
      }
    } else {
      out << '"' << (opt->count() > 0 ? opt->results().front() : opt->get_default_str())
          << '"';
    }
    out << '\n';
  }
  return out.str();
}

json Context::envelope(json payload) const {
  json doc = {{"tool", "faqurn"},
              {"version", FAQURN_VERSION},
              {"command", command},
              {"config", config_ini()}};
  for (auto &[k, v] : payload.items()) doc[k] = std::move(v);
  return doc;
}

std::string Context::csv_preamble() const {
  std::ostringstream out;
  out << "# faqurn " << FAQURN_VERSION << ' ' << command << '\n';
  std::istringstream in(config_ini());
  std::string line;
  while (std::getline(in, line)) out << "# " << line << '\n';
  return out.str();
}

namespace {

std::ofstream open_out(const std::filesystem::path &path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  return out;
}

}  // namespace

void write_text(const std::filesystem::path &path, const std::string &text) {
  open_out(path) << text;
}

void write_json(const std::filesystem::path &path, const json &doc) {
  open_out(path) << doc.dump(2) << '\n';
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

void write_csv(const std::filesystem::path &path, const Context &ctx,
               const std::vector<std::string> &header,
               const std::vector<std::vector<std::string>> &rows) {
  auto out = open_out(path);
  out << ctx.csv_preamble();
  auto emit = [&](const std::vector<std::string> &row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_field(row[i]);
    }
    out << '\n';
  };
  emit(header);
  for (const auto &row : rows) emit(row);
}

std::string num(double v, int digits) {
  if (std::isnan(v)) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void print_table(const std::vector<std::string> &header,
                 const std::vector<std::vector<std::string>> &rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto measure = [&](const std::vector<std::string> &row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  };
  measure(header);
  for (const auto &r : rows) measure(r);
  auto emit = [&](const std::vector<std::string> &row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      const int w = static_cast<int>(width[i]);
      if (i == 0) {
        std::printf("%-*s", w, row[i].c_str());
      } else {
        std::printf("  %*s", w, row[i].c_str());
      }
    }
    std::printf("\n");
  };
  emit(header);
  std::size_t total = 0;
  for (auto w : width) total += w + 2;
  std::printf("%s\n", std::string(total > 2 ? total - 2 : 0, '-').c_str());
  for (const auto &r : rows) emit(r);
}

}  // namespace faqurn::cli
