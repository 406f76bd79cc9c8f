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

#include "faqurn/analysis.hpp"
#include "faqurn/error.hpp"

namespace faqurn {
namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size();
  return m % 2 == 1 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

double mean(const std::vector<double> &v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

ObservationFits fit_observation(const Observation &obs, const EstimationOptions &options,
                                std::vector<std::string> &diagnostics) {
  if (obs.horizon == 0 || obs.colors.empty() || obs.final_counts.empty()) {
    throw EstimationError("observation is empty");
  }
  const FitWindow window{std::pow(static_cast<double>(obs.horizon), options.transient_exponent),
                         std::numeric_limits<double>::infinity()};
  ObservationFits fits;
  try {
    fits.colors_fit = loglog_fit(to_points(obs.colors), window);
  } catch (const EstimationError &e) {
    throw EstimationError(std::string("colors regression: ") + e.what());
  }
  std::vector<double> slopes;
  for (const auto &traj : obs.tracked) {
    try {
      FitReport r = loglog_fit(to_points(traj.points), window);
      slopes.push_back(r.slope);
      fits.count_fits.emplace_back(traj.color, r);
    } catch (const EstimationError &e) {
      std::ostringstream os;
      os << "count regression skipped for color " << traj.color << ": " << e.what();
      diagnostics.push_back(os.str());
    }
  }
  if (!slopes.empty()) fits.count_slope = median(std::move(slopes));
  try {
    fits.rank_fit =
        loglog_fit(rank_points(rank_curve(obs.final_counts), options.min_rank_frequency));
  } catch (const EstimationError &e) {
    throw EstimationError(std::string("rank regression: ") + e.what());
  }
  return fits;
}

}  // namespace

double estimate_eta(double p_hat, double delta_hat) {
  if (!(p_hat > 0.0 && p_hat < 1.0)) {
    throw EstimationError("eta estimate needs p-hat in (0, 1)");
  }
  if (!(delta_hat > 0.0)) throw EstimationError("eta estimate needs delta-hat > 0");
  const double eta = ((1.0 - p_hat) / delta_hat - 1.0) / p_hat;
  if (!(eta > -1.0)) {
    std::ostringstream os;
    os << "eta-hat = " << eta << " violates eta > -1 (p-hat " << p_hat << ", delta-hat "
       << delta_hat << ")";
    throw EstimationError(os.str());
  }
  return eta;
}

ParameterEstimates estimate_parameters(std::span<const Observation> observations,
                                       const EstimationOptions &options) {
  if (observations.empty()) throw EstimationError("no observations to estimate from");
  if (!(options.transient_exponent >= 0.0 && options.transient_exponent < 1.0)) {
    throw ValidationError("transient exponent must lie in [0, 1)");
  }
  ParameterEstimates est;
  std::vector<double> colors_slopes;
  std::vector<double> intercepts;
  std::vector<double> count_slopes;
  std::vector<double> rank_slopes;
  for (const auto &obs : observations) {
    est.per_observation.push_back(fit_observation(obs, options, est.diagnostics));
    const auto &f = est.per_observation.back();
    colors_slopes.push_back(f.colors_fit.slope);
    intercepts.push_back(f.colors_fit.intercept);
    rank_slopes.push_back(f.rank_fit.slope);
    if (f.count_slope) count_slopes.push_back(*f.count_slope);
  }
  est.colors_slope = mean(colors_slopes);
  est.colors_intercept = mean(intercepts);
  est.rank_slope = mean(rank_slopes);
  est.theta_hat = est.colors_slope;
  est.alpha_hat = -est.rank_slope;
  if (!count_slopes.empty()) {
    est.count_slope = mean(count_slopes);
    est.delta_hat = est.count_slope;
  } else {
    est.diagnostics.emplace_back("no tracked color had enough points for a count regression");
  }
  if (std::abs(est.colors_slope - 1.0) <= options.p_hat_slope_tolerance) {
    est.p_hat = std::pow(10.0, est.colors_intercept);
  } else {
    est.diagnostics.emplace_back("p-hat not applicable: colors slope is not close to 1");
  }
  if (est.p_hat && est.delta_hat) {
    try {
      est.eta_hat = estimate_eta(*est.p_hat, *est.delta_hat);
    } catch (const EstimationError &e) {
      est.model_mismatch = true;
      est.diagnostics.emplace_back(std::string("model mismatch: ") + e.what());
    }
  }
  if (est.eta_hat && options.shifted_rank_fit) {
    std::vector<double> shifted;
    for (std::size_t i = 0; i < observations.size(); ++i) {
      auto &f = est.per_observation[i];
      try {
        f.shifted_rank_fit = loglog_fit(
            rank_points(rank_curve(observations[i].final_counts), options.min_rank_frequency),
            {}, *est.eta_hat);
        shifted.push_back(f.shifted_rank_fit->slope);
      } catch (const EstimationError &e) {
        est.diagnostics.push_back(std::string("shifted rank fit skipped: ") + e.what());
      }
    }
    if (!shifted.empty()) est.shifted_rank_slope = mean(shifted);
  }
  return est;
}

}  // namespace faqurn
