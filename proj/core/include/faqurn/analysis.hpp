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

#ifndef FAQURN_ANALYSIS_HPP_
#define FAQURN_ANALYSIS_HPP_

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "faqurn/trace.hpp"

namespace faqurn {

// ---------------------------------------------------------------------------
// Observed trajectories, whether simulated or ingested.

/// The part of a trace the estimators consume.
struct Observation {
  std::uint64_t horizon = 0;
  std::vector<TimePoint> colors;  // (n, C_n)
  std::vector<ColorTrajectory> tracked;
  std::vector<std::uint64_t> final_counts;

  friend bool operator==(const Observation &, const Observation &) = default;
};

Observation observation_of(const Trace &trace);

// ---------------------------------------------------------------------------
// Frequency spectrum and rank curve.

/// Q_{n,k}: number of colors observed exactly k times.
struct FrequencySpectrum {
  std::uint64_t n = 0;           // sum of counts
  std::uint64_t num_colors = 0;  // C_n
  std::map<std::uint64_t, std::uint64_t> entries;  // k -> Q_{n,k}

  /// q_n(k) = Q_{n,k} / C_n.
  std::map<std::uint64_t, double> normalized() const;
  std::uint64_t at(std::uint64_t k) const;
  /// R_n(z) = sum_{k >= z} Q_{n,k}.
  std::uint64_t tail_count(std::uint64_t z) const;
};

/// Throws ValidationError if any count is zero.
FrequencySpectrum frequency_spectrum(std::span<const std::uint64_t> counts);

/// z(r): counts sorted nonincreasing; ties keep ascending color id.
struct RankCurve {
  std::vector<std::uint64_t> frequencies;  // z(1) >= z(2) >= ...
  std::vector<Color> colors;               // color id at each rank

  std::size_t size() const noexcept { return frequencies.size(); }
  /// #{r : z(r) >= v}.
  std::size_t ranks_at_least(std::uint64_t v) const;
};

RankCurve rank_curve(std::span<const std::uint64_t> counts);

// ---------------------------------------------------------------------------
// Log-log regression.

/// Points with window.x_min <= x <= window.x_max are fitted.
struct FitWindow {
  double x_min = 0.0;
  double x_max = std::numeric_limits<double>::infinity();
};

struct FitReport {
  double slope = 0.0;
  double intercept = 0.0;  // in log10 units
  double r_squared = 0.0;
  FitWindow fit_window;    // observed x-range of the fitted points
  std::size_t points_used = 0;
  std::size_t excluded = 0;  // points in the window dropped for x <= 0 or y + shift <= 0
  double shift = 0.0;
};

/// Minimum number of points a fit accepts.
inline constexpr std::size_t kMinFitPoints = 8;

/// OLS of log10(y + shift) on log10(x). Throws EstimationError with fewer
/// than kMinFitPoints usable points.
FitReport loglog_fit(std::span<const std::pair<double, double>> points,
                     FitWindow window = {}, double shift = 0.0);

/// (r, z(r)) pairs for ranks whose frequency is at least `min_frequency`.
std::vector<std::pair<double, double>> rank_points(const RankCurve &curve,
                                                   std::uint64_t min_frequency);

std::vector<std::pair<double, double>> to_points(std::span<const TimePoint> trajectory);

// ---------------------------------------------------------------------------
// Parameter estimation.

struct EstimationOptions {
  /// Time regressions use checkpoints with n >= N^transient_exponent.
  double transient_exponent = 0.5;
  /// Rank regression uses ranks with z(r) >= min_rank_frequency.
  std::uint64_t min_rank_frequency = 10;
  /// p-hat is reported only when the C_n slope is within this of 1.
  double p_hat_slope_tolerance = 0.1;
  /// Refit the rank curve on log10(z + eta-hat) when eta-hat is available.
  bool shifted_rank_fit = true;
};

/// Regressions for one observation.
struct ObservationFits {
  FitReport colors_fit;                               // (i)
  std::vector<std::pair<Color, FitReport>> count_fits;  // (ii), one per tracked color
  FitReport rank_fit;                                 // (iii)
  std::optional<FitReport> shifted_rank_fit;
  std::optional<double> count_slope;  // median over tracked colors
};

struct ParameterEstimates {
  std::vector<ObservationFits> per_observation;
  // Averages over observations.
  double colors_slope = 0.0;
  double colors_intercept = 0.0;
  std::optional<double> count_slope;
  double rank_slope = 0.0;
  std::optional<double> shifted_rank_slope;
  // Derived estimates.
  double theta_hat = 0.0;               // colors_slope
  std::optional<double> p_hat;          // 10^colors_intercept
  std::optional<double> delta_hat;      // count_slope
  double alpha_hat = 0.0;               // -rank_slope
  std::optional<double> eta_hat;        // from p_hat and delta_hat
  bool model_mismatch = false;
  std::vector<std::string> diagnostics;
};

/// eta-hat = (1/p)((1-p)/delta - 1). Throws EstimationError when
/// delta <= 0, p is outside (0, 1), or the result is <= -1.
double estimate_eta(double p_hat, double delta_hat);

/// Regressions (i)-(iii) and the derived estimates. Throws EstimationError
/// when an observation is too short to fit.
ParameterEstimates estimate_parameters(std::span<const Observation> observations,
                                       const EstimationOptions &options = {});

// ---------------------------------------------------------------------------
// Theoretical predictions.

/// Constant p_n = p with F(x) = rho x + rho_tilde.
struct ConstantPScenario {
  double p;
  double rho = 1.0;
  double rho_tilde = 0.0;
};
/// p_n proportional to n^-(1-theta) with F(x) = rho x + rho_tilde.
struct PowerLawPScenario {
  double theta;
  double rho = 1.0;
  double rho_tilde = 0.0;
};
/// p_n proportional to 1/n with affine F.
struct HarmonicPScenario {
  double rho = 1.0;
  double rho_tilde = 0.0;
};
/// F(x) = x^(1/rho) with p_n decaying (power law or harmonic).
struct PowerRootScenario {
  double rho;
};

using Scenario =
    std::variant<ConstantPScenario, PowerLawPScenario, HarmonicPScenario, PowerRootScenario>;

struct ScenarioPrediction {
  std::string scenario;
  std::optional<double> ell;
  std::optional<double> delta;  // growth exponent of K_{n,c}
  std::optional<double> beta;   // spectrum exponent, q(k) ~ (k + eta)^-beta
  std::optional<double> alpha;  // Zipf exponent
  std::optional<double> eta;    // rho_tilde / rho
  std::optional<double> colors_slope;
  std::optional<double> count_slope;
  std::optional<double> rank_slope;
  std::string reason;  // set when exponents are undefined

  bool defined() const noexcept { return alpha.has_value(); }
};

/// Throws ValidationError for parameters outside the scenario's range.
ScenarioPrediction theoretical_prediction(const Scenario &scenario);

/// The scenario matching a (schedule, update) pair, if one exists.
std::optional<Scenario> scenario_of(const TriggerSchedule &schedule,
                                    const UpdateFunction &update);

// ---------------------------------------------------------------------------
// Regimes.

enum class ColorRegime { kFinite, kInfinite, kUndetermined };
enum class DominanceRegime { kSingleDominant, kAllInfinitelyOften, kInapplicable };

struct RegimeReport {
  ColorRegime colors = ColorRegime::kUndetermined;
  std::string growth_law;  // e.g. "C_n ~ p n"
  std::optional<double> expected_total_colors;  // E[C_inf] when finite
  DominanceRegime dominance = DominanceRegime::kInapplicable;
  std::string explanation;
};

RegimeReport regime_classifier(const TriggerSchedule &schedule, const UpdateFunction &update);

std::string to_string(ColorRegime regime);
std::string to_string(DominanceRegime regime);

// ---------------------------------------------------------------------------
// Diagnostics.

struct DominanceDiagnostic {
  double leading_share = 0.0;  // max_c K_{N,c} / N
  double second_share = 0.0;
  double gini = 0.0;
};

DominanceDiagnostic dominance_diagnostic(std::span<const std::uint64_t> final_counts);

struct HeapsZipfCheck {
  double product = 0.0;    // theta * alpha
  double deviation = 0.0;  // |theta * alpha - 1|
};

/// Throws ValidationError unless both estimates are positive.
HeapsZipfCheck heaps_zipf_check(double theta_hat, double alpha_hat);

}  // namespace faqurn

#endif  // FAQURN_ANALYSIS_HPP_
