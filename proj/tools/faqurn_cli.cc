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

// faqurn: simulate FAQ urns, evaluate exact and approximate laws, and fit
// power-law slopes to simulated or observed histories.
//
// Exit status: 0 success, 1 usage error, 2 invalid input or model mismatch,
// 3 oracle disagreement.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "faqurn/analysis.hpp"
#include "faqurn/approx.hpp"
#include "faqurn/enumerate.hpp"
#include "faqurn/error.hpp"
#include "faqurn/exact_simon.hpp"
#include "faqurn/ingest.hpp"
#include "faqurn/trace.hpp"
#include "faqurn/trace_io.hpp"
#include "json.hpp"
#include "output.hpp"

namespace faqurn::cli {
namespace {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Inputs shared by analyze and fit.

struct InputOptions {
  std::vector<std::string> traces;
  std::vector<std::string> histories;
  std::vector<std::string> events;
  std::string format = "csv";
  std::string delimiter = ",";
  std::string time_column = "timestamp";
  std::string label_column = "label";
  int per_decade = 64;
  std::size_t top_m = 20;
};

void add_input_options(CLI::App &app, InputOptions &in) {
  app.add_option("--trace", in.traces, "trace JSON written by 'faqurn simulate'");
  app.add_option("--history", in.histories, "color history, one integer label per line");
  app.add_option("--events", in.events, "event log; see --format");
  app.add_option("--format", in.format, "event log format")
      ->check(CLI::IsMember({"csv", "jsonl", "lines"}))
      ->capture_default_str();
  app.add_option("--delimiter", in.delimiter, "CSV delimiter")->capture_default_str();
  app.add_option("--time-column", in.time_column,
                 "timestamp column; empty means file order")
      ->capture_default_str();
  app.add_option("--label-column", in.label_column)->capture_default_str();
  app.add_option("--checkpoints-per-decade", in.per_decade)->capture_default_str();
  app.add_option("--top-m", in.top_m, "colors tracked when reading logs")->capture_default_str();
}

struct LoadedInput {
  std::string source;
  Observation observation;
  std::optional<SimulationConfig> config;
  std::vector<std::string> warnings;
};

Trace load_trace(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  json doc;
  try {
    doc = json::parse(text.str());
  } catch (const json::exception &e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  // Accept both bare traces and the tool's enveloped form.
  if (doc.contains("trace")) doc = doc.at("trace");
  return trace_from_json(doc.dump());
}

std::vector<LoadedInput> load_inputs(const InputOptions &in) {
  std::vector<LoadedInput> out;
  TrajectoryOptions topts;
  topts.checkpoints_per_decade = in.per_decade;
  topts.top_m = in.top_m;
  for (const auto &p : in.traces) {
    const Trace t = load_trace(p);
    out.push_back({p, observation_of(t), t.config, {}});
  }
  for (const auto &p : in.histories) {
    const auto h = read_history(p);
    out.push_back({p, empirical_trajectories(h, topts), std::nullopt, {}});
  }
  if (!in.events.empty()) {
    if (in.delimiter.size() != 1) throw ValidationError("--delimiter must be one character");
    LoadOptions lopts;
    lopts.format = in.format == "csv"     ? EventFormat::kCsv
                   : in.format == "jsonl" ? EventFormat::kJsonl
                                          : EventFormat::kLines;
    lopts.delimiter = in.delimiter.front();
    lopts.time_column = in.time_column;
    lopts.label_column = in.label_column;
    for (const auto &p : in.events) {
      auto loaded = load_events(fs::path(p), lopts);
      const auto lh = to_history(loaded.stream);
      out.push_back({p, empirical_trajectories(lh.history, topts), std::nullopt,
                     std::move(loaded.warnings)});
    }
  }
  if (out.empty()) throw ValidationError("no input; pass --trace, --history or --events");
  return out;
}

// ---------------------------------------------------------------------------
// JSON views of library results.

json fit_json(const FitReport &f) {
  return {{"slope", f.slope},
          {"intercept", f.intercept},
          {"r_squared", f.r_squared},
          {"points", f.points_used},
          {"excluded", f.excluded},
          {"x_min", f.fit_window.x_min},
          {"x_max", f.fit_window.x_max},
          {"shift", f.shift}};
}

json opt_json(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

json estimates_json(const ParameterEstimates &e) {
  json per = json::array();
  for (const auto &o : e.per_observation) {
    json counts = json::array();
    for (const auto &[c, f] : o.count_fits) {
      json item = fit_json(f);
      item["color"] = c;
      counts.push_back(std::move(item));
    }
    per.push_back({{"colors", fit_json(o.colors_fit)},
                   {"counts", std::move(counts)},
                   {"count_slope", opt_json(o.count_slope)},
                   {"rank", fit_json(o.rank_fit)},
                   {"shifted_rank",
                    o.shifted_rank_fit ? fit_json(*o.shifted_rank_fit) : json(nullptr)}});
  }
  return {{"colors_slope", e.colors_slope},
          {"colors_intercept", e.colors_intercept},
          {"count_slope", opt_json(e.count_slope)},
          {"rank_slope", e.rank_slope},
          {"shifted_rank_slope", opt_json(e.shifted_rank_slope)},
          {"theta_hat", e.theta_hat},
          {"p_hat", opt_json(e.p_hat)},
          {"delta_hat", opt_json(e.delta_hat)},
          {"alpha_hat", e.alpha_hat},
          {"eta_hat", opt_json(e.eta_hat)},
          {"model_mismatch", e.model_mismatch},
          {"diagnostics", e.diagnostics},
          {"per_observation", std::move(per)}};
}

json prediction_json(const ScenarioPrediction &p) {
  return {{"scenario", p.scenario},
          {"ell", opt_json(p.ell)},
          {"colors_slope", opt_json(p.colors_slope)},
          {"count_slope", opt_json(p.count_slope)},
          {"rank_slope", opt_json(p.rank_slope)},
          {"defined", p.defined()}};
}

json regime_json(const RegimeReport &r) {
  return {{"colors", to_string(r.colors)},
          {"growth_law", r.growth_law},
          {"expected_total_colors", opt_json(r.expected_total_colors)},
          {"dominance", to_string(r.dominance)},
          {"explanation", r.explanation}};
}

std::string regime_line(const RegimeReport &r) {
  std::string line = "colors " + to_string(r.colors);
  if (!r.growth_law.empty()) line += " (" + r.growth_law + ")";
  return line + ", dominance " + to_string(r.dominance);
}

std::optional<ScenarioPrediction> prediction_for(const TriggerSchedule &s,
                                                 const UpdateFunction &f) {
  const auto scenario = scenario_of(s, f);
  if (!scenario) return std::nullopt;
  return theoretical_prediction(*scenario);
}

std::vector<std::vector<std::string>> spectrum_rows(std::span<const std::uint64_t> counts) {
  std::vector<std::vector<std::string>> rows;
  if (counts.empty()) return rows;
  const auto spec = frequency_spectrum(counts);
  const auto q = spec.normalized();
  for (const auto &[k, Q] : spec.entries) {
    rows.push_back({std::to_string(k), std::to_string(Q), num(q.at(k), 17)});
  }
  return rows;
}

std::vector<std::vector<std::string>> rank_rows(std::span<const std::uint64_t> counts) {
  std::vector<std::vector<std::string>> rows;
  const auto curve = rank_curve(counts);
  for (std::size_t r = 0; r < curve.size(); ++r) {
    rows.push_back({std::to_string(r + 1), std::to_string(curve.frequencies[r])});
  }
  return rows;
}

// Rows of (regression, emp or theo, slope).
void print_slope_table(const ParameterEstimates &e, const std::vector<double> &colors,
                       const std::vector<double> &counts, const std::vector<double> &ranks,
                       const std::optional<ScenarioPrediction> &theo) {
  auto spread = [](const std::vector<double> &v) {
    if (v.size() < 2) return std::string();
    double m = 0.0;
    for (double x : v) m += x;
    m /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return " (sd " + num(std::sqrt(ss / static_cast<double>(v.size() - 1)), 2) + ")";
  };
  auto theo_of = [&](std::optional<double> ScenarioPrediction::*field) {
    return theo && (*theo).*field ? num(*((*theo).*field), 4) : std::string("-");
  };
  std::vector<std::vector<std::string>> rows = {
      {"log10(C_n) vs log10(n)", "emp", num(e.colors_slope, 4) + spread(colors)},
      {"", "theo", theo_of(&ScenarioPrediction::colors_slope)},
      {"log10(K_n(c)) vs log10(n)", "emp",
       e.count_slope ? num(*e.count_slope, 4) + spread(counts) : "-"},
      {"", "theo", theo_of(&ScenarioPrediction::count_slope)},
      {"log10(z(r)) vs log10(r)", "emp", num(e.rank_slope, 4) + spread(ranks)},
      {"", "theo", theo_of(&ScenarioPrediction::rank_slope)},
  };
  if (e.shifted_rank_slope) {
    rows.push_back({"log10(z(r)+eta) vs log10(r)", "emp", num(*e.shifted_rank_slope, 4)});
  }
  print_table({"regression", "slope", "value"}, rows);
}

void print_estimates(const ParameterEstimates &e) {
  auto opt = [](const std::optional<double> &v) { return v ? num(*v, 4) : "-"; };
  std::printf("\ntheta-hat %s  p-hat %s  delta-hat %s  alpha-hat %s  eta-hat %s\n",
              num(e.theta_hat, 4).c_str(), opt(e.p_hat).c_str(), opt(e.delta_hat).c_str(),
              num(e.alpha_hat, 4).c_str(), opt(e.eta_hat).c_str());
  if (e.model_mismatch) std::printf("model mismatch: eta-hat <= -1\n");
  for (const auto &d : e.diagnostics) std::printf("note: %s\n", d.c_str());
}

struct SlopeColumns {
  std::vector<double> colors, counts, ranks;
};

SlopeColumns per_observation_slopes(const ParameterEstimates &e) {
  SlopeColumns s;
  for (const auto &o : e.per_observation) {
    s.colors.push_back(o.colors_fit.slope);
    if (o.count_slope) s.counts.push_back(*o.count_slope);
    s.ranks.push_back(o.rank_fit.slope);
  }
  return s;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateOptions {
  ModelOptions model;
  std::string horizon = "200000";
  std::size_t replications = 10;
  std::uint64_t seed = 1;
  std::string out;
  int per_decade = 64;
  bool history = false;
  std::vector<Color> track = {1, 2};
  bool no_late = false;
  double late_fraction = 0.1;
};

int run_simulate(const Context &ctx, const SimulateOptions &o) {
  SimulationConfig cfg;
  cfg.schedule = o.model.make_schedule();
  cfg.update = o.model.make_update();
  cfg.horizon = parse_count(o.horizon, "--horizon");
  cfg.checkpoints_per_decade = o.per_decade;
  cfg.record_history = o.history;
  cfg.tracked.ids = o.track;
  cfg.tracked.track_late_color = !o.no_late;
  cfg.tracked.late_fraction = o.late_fraction;
  cfg.validate();
  if (o.replications == 0) throw ValidationError("--replications must be positive");

  const auto traces = simulate_replications(cfg, o.seed, o.replications, ctx.threads);
  std::vector<Observation> obs;
  for (const auto &t : traces) obs.push_back(observation_of(t));

  std::optional<ParameterEstimates> est;
  std::string fit_note;
  try {
    est = estimate_parameters(obs);
  } catch (const EstimationError &e) {
    fit_note = e.what();
  }
  const auto theo = prediction_for(cfg.schedule, cfg.update);
  const auto regime = regime_classifier(cfg.schedule, cfg.update);

  json reps = json::array();
  for (std::size_t r = 0; r < traces.size(); ++r) {
    const auto &t = traces[r];
    const auto dom = dominance_diagnostic(t.final_counts);
    json item = {{"replication", r},
                 {"seed", t.seed()},
                 {"final_colors", t.final_counts.size()},
                 {"leading_share", dom.leading_share},
                 {"second_share", dom.second_share},
                 {"gini", dom.gini}};
    if (est) {
      const auto &f = est->per_observation[r];
      item["colors_slope"] = f.colors_fit.slope;
      item["count_slope"] = opt_json(f.count_slope);
      item["rank_slope"] = f.rank_fit.slope;
    }
    reps.push_back(std::move(item));
  }
  json summary = ctx.envelope({{"model", json::parse(config_to_json(cfg))},
                               {"master_seed", o.seed},
                               {"replications", std::move(reps)},
                               {"estimates", est ? estimates_json(*est) : json(nullptr)},
                               {"fit_error", fit_note.empty() ? json(nullptr) : json(fit_note)},
                               {"theory", theo ? prediction_json(*theo) : json(nullptr)},
                               {"regime", regime_json(regime)}});

  if (!o.out.empty()) {
    const fs::path dir(o.out);
    write_text(dir / "run.ini", ctx.config_ini());
    write_json(dir / "summary.json", summary);
    for (std::size_t r = 0; r < traces.size(); ++r) {
      const auto &t = traces[r];
      char name[32];
      std::snprintf(name, sizeof name, "rep_%03zu", r);
      const fs::path rd = dir / name;
      write_json(rd / "trace.json",
                 ctx.envelope({{"replication", r}, {"trace", json::parse(trace_to_json(t))}}));
      auto traj_rows = [](std::span<const TimePoint> pts) {
        std::vector<std::vector<std::string>> rows;
        for (const auto &[n, v] : pts) rows.push_back({std::to_string(n), std::to_string(v)});
        return rows;
      };
      write_csv(rd / "colors.csv", ctx, {"n", "C"}, traj_rows(t.colors));
      for (const auto &tr : t.tracked) {
        write_csv(rd / ("color_" + std::to_string(tr.color) + ".csv"), ctx, {"n", "K"},
                  traj_rows(tr.points));
      }
      write_csv(rd / "spectrum.csv", ctx, {"k", "Q", "q"}, spectrum_rows(t.final_counts));
      write_csv(rd / "rank.csv", ctx, {"r", "z"}, rank_rows(t.final_counts));
      if (t.history) write_history(rd / "history.txt", *t.history);
    }
  }

  if (ctx.json_stdout) {
    std::printf("%s\n", summary.dump(2).c_str());
    return kExitOk;
  }
  std::printf("replications %zu, horizon %llu, master seed %llu\n", traces.size(),
              static_cast<unsigned long long>(cfg.horizon),
              static_cast<unsigned long long>(o.seed));
  std::printf("model: %s, %s\n", cfg.schedule.describe().c_str(),
              cfg.update.describe().c_str());
  std::printf("regime: %s\n\n", regime_line(regime).c_str());
  if (est) {
    const auto cols = per_observation_slopes(*est);
    print_slope_table(*est, cols.colors, cols.counts, cols.ranks, theo);
    print_estimates(*est);
  } else {
    std::printf("C_N per replication:");
    for (const auto &t : traces) std::printf(" %zu", t.final_counts.size());
    std::printf("\nno slope fits: %s\n", fit_note.c_str());
  }
  if (!o.out.empty()) std::printf("\nwrote %s\n", o.out.c_str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// exact

struct ExactOptions {
  std::string quantity;
  std::string n = "100";
  double p = 0.5;
  std::uint64_t c = 2;
  double tolerance = 1e-12;
  bool limit = false;
  ModelOptions model;
  std::string out;
  std::string csv;
};

json record(const std::string &formula, json params, json value,
            std::optional<double> error_bound = std::nullopt) {
  json r = {{"formula", formula}, {"params", std::move(params)}, {"value", std::move(value)}};
  if (error_bound) r["error_bound"] = *error_bound;
  return r;
}

int run_exact(const Context &ctx, const ExactOptions &o) {
  const std::uint64_t n = parse_count(o.n, "--n");
  const simon::SimonParams sp(o.p);
  json records = json::array();
  std::vector<std::vector<std::string>> pmf_rows;
  const json np = {{"n", n}, {"p", o.p}};
  const json npc = {{"n", n}, {"p", o.p}, {"c", o.c}};

  if (o.quantity == "mean-colors") {
    const auto m = simon::colors_moments(n, sp);
    records.push_back(record("colors_mean", np, m.mean));
    records.push_back(record("colors_variance", np, m.variance));
  } else if (o.quantity == "colors-pmf") {
    const auto d = simon::colors_pmf(n, sp);
    json values = json::array();
    for (std::int64_t j = d.min_value(); j <= d.max_value(); ++j) {
      values.push_back({{"j", j}, {"P", d.pmf(j)}});
      pmf_rows.push_back({std::to_string(j), num(d.pmf(j), 17)});
    }
    records.push_back(record("colors_pmf", np, std::move(values)));
  } else if (o.quantity == "absent") {
    records.push_back(record("prob_color_absent", npc, simon::prob_color_absent(n, o.c, sp)));
  } else if (o.quantity == "expected-count") {
    records.push_back(record("expected_count", npc, simon::expected_count(n, o.c, sp)));
  } else if (o.quantity == "color1") {
    const auto m = simon::expected_count_color1(n, sp);
    records.push_back(record("expected_count_color1", np, m.exact));
    records.push_back(
        record("expected_count_color1_asymptotic", np, m.asymptotic, m.error_estimate));
  } else if (o.quantity == "prefactor") {
    const auto b = simon::asymptotic_prefactor(o.c, sp);
    records.push_back(record("asymptotic_prefactor", {{"c", o.c}, {"p", o.p}}, b.value,
                             b.error_bound));
  } else if (o.quantity == "lambda") {
    std::variant<simon::Partial, simon::Limit> mode = simon::Partial{n};
    json params = npc;
    if (o.limit) {
      mode = simon::Limit{o.tolerance};
      params = {{"c", o.c}, {"p", o.p}, {"limit", true}, {"tolerance", o.tolerance}};
    }
    const auto b = simon::lambda_series(o.c, sp, mode);
    params["terms"] = b.terms;
    records.push_back(record("lambda_series", std::move(params), b.value, b.error_bound));
  } else {  // dynamic
    const auto schedule = o.model.make_schedule();
    records.push_back(record("dynamic_mean_color1",
                             {{"n", n}, {"schedule", json::parse(schedule_to_json(schedule))}},
                             simon::dynamic_mean_color1(schedule, n)));
  }

  const json doc = ctx.envelope({{"records", records}});
  if (!o.out.empty()) write_json(o.out, doc);
  if (!o.csv.empty() && !pmf_rows.empty()) write_csv(o.csv, ctx, {"j", "P"}, pmf_rows);

  if (ctx.json_stdout) {
    std::printf("%s\n", doc.dump(2).c_str());
  } else if (!pmf_rows.empty()) {
    print_table({"j", "P(C_n = j)"}, pmf_rows);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto &r : records) {
      std::string params;
      for (const auto &[k, v] : r["params"].items()) {
        if (!params.empty()) params += ' ';
        params += k + '=' + (v.is_number_float() ? num(v.get<double>(), 10) : v.dump());
      }
      rows.push_back({r["formula"].get<std::string>(), params,
                      num(r["value"].get<double>(), 17),
                      r.contains("error_bound") ? num(r["error_bound"].get<double>(), 3)
                                                : "-"});
    }
    print_table({"formula", "params", "value", "error bound"}, rows);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// approx

struct ApproxOptions {
  ModelOptions model;
  std::string n = "1000";
  bool exact_tv = false;
  std::string out;
};

int run_approx(const Context &ctx, const ApproxOptions &o) {
  const std::uint64_t n = parse_count(o.n, "--n");
  const auto schedule = o.model.make_schedule();
  const auto r = o.exact_tv ? barbour_holst_with_exact(schedule, n) : barbour_holst(schedule, n);

  const json params = {{"n", n}, {"schedule", json::parse(schedule_to_json(schedule))}};
  json records = json::array();
  records.push_back(record("lambda1", params, r.lambda1));
  records.push_back(record("lambda2", params, r.lambda2));
  records.push_back(record("tv_bound", params, r.tv_bound));
  if (r.tv_exact) records.push_back(record("tv_exact", params, *r.tv_exact, r.tv_bound));
  records.push_back(record("clt_mean", params, r.clt_mean));
  records.push_back(record("clt_sd", params, r.clt_sd));

  const json doc = ctx.envelope({{"records", records}});
  if (!o.out.empty()) write_json(o.out, doc);
  if (ctx.json_stdout) {
    std::printf("%s\n", doc.dump(2).c_str());
    return kExitOk;
  }
  std::printf("C_n - 1 = sum of Bernoulli(p_i), i < n; n = %llu, %s\n\n",
              static_cast<unsigned long long>(n), schedule.describe().c_str());
  std::vector<std::vector<std::string>> rows = {
      {"lambda1 = sum p_i", num(r.lambda1, 10)},
      {"lambda2 = sum p_i^2", num(r.lambda2, 10)},
      {"Poisson TV bound", num(r.tv_bound, 10)},
  };
  if (r.tv_exact) rows.push_back({"exact TV", num(*r.tv_exact, 10)});
  rows.push_back({"CLT mean", num(r.clt_mean, 10)});
  rows.push_back({"CLT sd", num(r.clt_sd, 10)});
  print_table({"quantity", "value"}, rows);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
  InputOptions input;
  std::string out;
};

int run_analyze(const Context &ctx, const AnalyzeOptions &o) {
  const auto inputs = load_inputs(o.input);
  json items = json::array();
  const bool many = inputs.size() > 1;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto &in = inputs[i];
    const auto &counts = in.observation.final_counts;
    const auto dom = dominance_diagnostic(counts);
    json item = {{"source", in.source},
                 {"horizon", in.observation.horizon},
                 {"colors", counts.size()},
                 {"leading_share", dom.leading_share},
                 {"second_share", dom.second_share},
                 {"gini", dom.gini},
                 {"warnings", in.warnings}};
    std::optional<RegimeReport> regime;
    std::optional<ScenarioPrediction> theo;
    if (in.config) {
      regime = regime_classifier(in.config->schedule, in.config->update);
      theo = prediction_for(in.config->schedule, in.config->update);
      item["regime"] = regime_json(*regime);
      item["theory"] = theo ? prediction_json(*theo) : json(nullptr);
    }
    const auto srows = spectrum_rows(counts);
    const auto rrows = rank_rows(counts);
    if (!o.out.empty()) {
      const std::string suffix = many ? "_" + std::to_string(i) : "";
      write_csv(fs::path(o.out) / ("spectrum" + suffix + ".csv"), ctx, {"k", "Q", "q"}, srows);
      write_csv(fs::path(o.out) / ("rank" + suffix + ".csv"), ctx, {"r", "z"}, rrows);
    }
    if (!ctx.json_stdout) {
      std::printf("%s: N = %llu, C_N = %zu\n", in.source.c_str(),
                  static_cast<unsigned long long>(in.observation.horizon), counts.size());
      for (const auto &w : in.warnings) std::printf("warning: %s\n", w.c_str());
      std::printf("leading share %s, second share %s, Gini %s\n", num(dom.leading_share).c_str(),
                  num(dom.second_share).c_str(), num(dom.gini).c_str());
      if (regime) {
        std::printf("regime: %s\n", regime_line(*regime).c_str());
      }
      std::vector<std::vector<std::string>> head(srows.begin(),
                                                 srows.begin() + std::min<std::size_t>(10, srows.size()));
      std::printf("\n");
      print_table({"k", "Q", "q"}, head);
      if (srows.size() > head.size()) std::printf("... %zu more\n", srows.size() - head.size());
      std::printf("\n");
    }
    items.push_back(std::move(item));
  }
  const json doc = ctx.envelope({{"inputs", items}});
  if (!o.out.empty()) write_json(fs::path(o.out) / "analysis.json", doc);
  if (ctx.json_stdout) std::printf("%s\n", doc.dump(2).c_str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// fit

struct FitOptions {
  InputOptions input;
  EstimationOptions est;
  bool no_shift = false;
  std::string out;
};

int run_fit(const Context &ctx, FitOptions o) {
  const auto inputs = load_inputs(o.input);
  std::vector<Observation> obs;
  json sources = json::array();
  for (const auto &in : inputs) {
    obs.push_back(in.observation);
    sources.push_back({{"source", in.source}, {"warnings", in.warnings}});
  }
  o.est.shifted_rank_fit = !o.no_shift;
  const auto e = estimate_parameters(obs, o.est);

  // Observed data carry no model, so the reference row comes from the
  // estimates: sublinear color growth implies K slope 1 and rank slope
  // -1/theta; linear growth ties the rank slope to the count slope.
  ScenarioPrediction theo;
  if (!e.p_hat) {
    theo.count_slope = 1.0;
    if (e.theta_hat > 0.0) theo.rank_slope = -1.0 / e.theta_hat;
  } else {
    theo.colors_slope = 1.0;
    if (e.delta_hat) theo.rank_slope = -*e.delta_hat;
  }
  json doc = ctx.envelope({{"inputs", sources}, {"estimates", estimates_json(e)}});
  if (e.theta_hat > 0.0 && e.alpha_hat > 0.0) {
    const auto hz = heaps_zipf_check(e.theta_hat, e.alpha_hat);
    doc["heaps_zipf"] = {{"product", hz.product}, {"deviation", hz.deviation}};
  }
  if (!o.out.empty()) write_json(o.out, doc);

  if (ctx.json_stdout) {
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    const auto cols = per_observation_slopes(e);
    print_slope_table(e, cols.colors, cols.counts, cols.ranks, theo);
    print_estimates(e);
    if (doc.contains("heaps_zipf")) {
      std::printf("theta-hat * alpha-hat = %s\n",
                  num(doc["heaps_zipf"]["product"].get<double>(), 4).c_str());
    }
  }
  if (e.model_mismatch) {
    std::fflush(stdout);
    std::fprintf(stderr, "faqurn: model mismatch: the fitted slopes imply eta <= -1\n");
    return kExitInvalid;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleOptions {
  std::uint32_t n = 6;
  double p = 0.3;
  double tolerance = 1e-10;
  std::string out;
};

int run_oracle(const Context &ctx, const OracleOptions &o) {
  if (o.n < 1 || o.n > kMaxEnumerationHorizon) {
    throw ValidationError("--n must lie in [1, " + std::to_string(kMaxEnumerationHorizon) + "]");
  }
  const simon::SimonParams sp(o.p);
  const auto ex = enumerate_exact(o.n, TriggerSchedule::constant(o.p), UpdateFunction::linear(1, 0));

  struct Check {
    std::string name;
    std::string at;
    double closed;
    double enumerated;
  };
  std::vector<Check> checks;
  checks.push_back({"total_probability", "", 1.0, ex.total_probability});
  const auto pmf = simon::colors_pmf(o.n, sp);
  for (std::int64_t j = 0; j <= static_cast<std::int64_t>(o.n); ++j) {
    checks.push_back({"colors_pmf", "j=" + std::to_string(j), pmf.pmf(j), ex.colors.pmf(j)});
  }
  checks.push_back({"expected_count_color1", "c=1",
                    simon::expected_count_color1(o.n, sp).exact, ex.expected_count(1)});
  for (Color c = 2; c <= o.n; ++c) {
    const std::string at = "c=" + std::to_string(c);
    checks.push_back({"prob_color_absent", at, simon::prob_color_absent(o.n, c, sp),
                      ex.count_law(c).pmf(0)});
    checks.push_back({"expected_count", at, simon::expected_count(o.n, c, sp),
                      ex.expected_count(c)});
  }

  double worst = 0.0;
  json items = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto &ch : checks) {
    const double dev = std::abs(ch.closed - ch.enumerated);
    worst = std::max(worst, dev);
    items.push_back({{"formula", ch.name},
                     {"at", ch.at},
                     {"closed_form", ch.closed},
                     {"enumeration", ch.enumerated},
                     {"deviation", dev}});
    rows.push_back({ch.name, ch.at, num(ch.closed, 15), num(ch.enumerated, 15), num(dev, 3)});
  }
  const bool ok = worst <= o.tolerance;
  const json doc = ctx.envelope({{"histories", ex.num_histories},
                                 {"checks", items},
                                 {"max_deviation", worst},
                                 {"tolerance", o.tolerance},
                                 {"agree", ok}});
  if (!o.out.empty()) write_json(o.out, doc);
  if (ctx.json_stdout) {
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    std::printf("closed forms vs enumeration of %llu histories, n = %u, p = %s\n\n",
                static_cast<unsigned long long>(ex.num_histories), o.n, num(o.p).c_str());
    print_table({"formula", "at", "closed form", "enumeration", "deviation"}, rows);
    std::printf("\nmax deviation %s (tolerance %s): %s\n", num(worst, 3).c_str(),
                num(o.tolerance, 3).c_str(), ok ? "agree" : "DISAGREE");
  }
  return ok ? kExitOk : kExitOracle;
}

}  // namespace
}  // namespace faqurn::cli

int main(int argc, char **argv) {
  using namespace faqurn::cli;
  CLI::App app{"FAQ urn simulation, exact laws and slope estimation", "faqurn"};
  app.set_version_flag("--version", std::string(FAQURN_VERSION));
  app.set_config("--config", "", "read options from an INI file (as written to run.ini)");
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  ctx.root = &app;
  app.add_flag("--json", ctx.json_stdout, "print JSON instead of tables");
  app.add_option("--threads", ctx.threads, "worker threads; 0 uses all cores")
      ->capture_default_str();

  std::function<int()> action;

  SimulateOptions sim;
  auto *s = app.add_subcommand("simulate", "run seeded replications of the urn");
  add_schedule_options(*s, sim.model);
  add_update_options(*s, sim.model);
  s->add_option("--horizon", sim.horizon, "steps per replication")->capture_default_str();
  s->add_option("--replications", sim.replications)->capture_default_str();
  s->add_option("--seed", sim.seed, "master seed")->capture_default_str();
  s->add_option("--out", sim.out, "directory for traces, CSVs and summary.json");
  s->add_option("--checkpoints-per-decade", sim.per_decade)->capture_default_str();
  s->add_flag("--record-history", sim.history, "also write each color sequence");
  s->add_option("--track", sim.track, "color ids with K_n trajectories")->capture_default_str();
  s->add_flag("--no-late-color", sim.no_late, "skip the late-born tracked color");
  s->add_option("--late-fraction", sim.late_fraction)->capture_default_str();
  s->callback([&] { action = [&] { return run_simulate(ctx, sim); }; });

  ExactOptions ex;
  auto *e = app.add_subcommand("exact", "closed-form laws of the Simon urn");
  e->add_option("quantity", ex.quantity)
      ->required()
      ->check(CLI::IsMember({"mean-colors", "colors-pmf", "absent", "expected-count", "color1",
                             "prefactor", "lambda", "dynamic"}));
  e->add_option("--n", ex.n)->capture_default_str();
  e->add_option("--p", ex.p)->capture_default_str();
  e->add_option("--c", ex.c, "color index")->capture_default_str();
  e->add_flag("--limit", ex.limit, "lambda: sum the series to infinity");
  e->add_option("--tolerance", ex.tolerance, "lambda --limit tail tolerance")
      ->capture_default_str();
  e->add_option("--schedule", ex.model.schedule, "dynamic: trigger schedule")
      ->check(CLI::IsMember({"constant", "power", "harmonic", "geometric"}))
      ->capture_default_str();
  e->add_option("--theta", ex.model.theta)->capture_default_str();
  e->add_option("--scale", ex.model.scale)->capture_default_str();
  e->add_option("--ratio", ex.model.ratio)->capture_default_str();
  e->add_option("--out", ex.out, "write the JSON records here");
  e->add_option("--csv", ex.csv, "colors-pmf: write j,P here");
  e->callback([&] {
    ex.model.p = ex.p;
    action = [&] { return run_exact(ctx, ex); };
  });

  ApproxOptions ap;
  auto *a = app.add_subcommand("approx", "Poisson and normal approximations for C_n");
  add_schedule_options(*a, ap.model, true);
  a->add_option("--n", ap.n)->capture_default_str();
  a->add_flag("--exact-tv", ap.exact_tv, "also compute the exact total variation");
  a->add_option("--out", ap.out, "write the JSON records here");
  a->callback([&] { action = [&] { return run_approx(ctx, ap); }; });

  AnalyzeOptions an;
  auto *z = app.add_subcommand("analyze", "frequency spectrum, rank curve and dominance");
  add_input_options(*z, an.input);
  z->add_option("--out", an.out, "directory for spectrum.csv, rank.csv, analysis.json");
  z->callback([&] { action = [&] { return run_analyze(ctx, an); }; });

  FitOptions fi;
  auto *f = app.add_subcommand("fit", "log-log slope fits and parameter estimates");
  add_input_options(*f, fi.input);
  f->add_option("--transient", fi.est.transient_exponent,
                "time fits use n >= N^transient")
      ->capture_default_str();
  f->add_option("--min-rank-frequency", fi.est.min_rank_frequency)->capture_default_str();
  f->add_flag("--no-shift", fi.no_shift, "skip the shifted rank fit");
  f->add_option("--out", fi.out, "write the JSON report here");
  f->callback([&] { action = [&] { return run_fit(ctx, fi); }; });

  OracleOptions orc;
  auto *o = app.add_subcommand("oracle", "check closed forms against full enumeration");
  o->add_option("--n", orc.n)->capture_default_str();
  o->add_option("--p", orc.p)->capture_default_str();
  o->add_option("--tolerance", orc.tolerance)->capture_default_str();
  o->add_option("--out", orc.out, "write the JSON report here");
  o->callback([&] { action = [&] { return run_oracle(ctx, orc); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }
  ctx.command = app.get_subcommands().front()->get_name();

  try {
    return action();
  } catch (const std::exception &e) {
    // Library errors (invalid parameters, domain, capacity, estimation) and
    // file errors all map to the same status.
    std::fprintf(stderr, "faqurn %s: %s\n", ctx.command.c_str(), e.what());
    return kExitInvalid;
  }
}
