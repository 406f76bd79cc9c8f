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

#include <cmath>
#include <sstream>

#include "faqurn/analysis.hpp"
#include "faqurn/error.hpp"

namespace faqurn {
namespace {

void check_affine(double rho, double rho_tilde) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw ValidationError("rho must be positive");
  if (!(rho + rho_tilde > 0.0) || !std::isfinite(rho_tilde)) {
    throw ValidationError("rho + rho_tilde must be positive");
  }
}

constexpr const char *kEllZero =
    "the limit ell of p_t T_t / ((1 - p_t) C_t) is 0, so the spectrum has no power-law exponent";

ScenarioPrediction predict(const ConstantPScenario &s) {
  if (!(s.p > 0.0 && s.p < 1.0)) throw ValidationError("constant p must lie in (0, 1)");
  check_affine(s.rho, s.rho_tilde);
  ScenarioPrediction out;
  out.scenario = "constant-p";
  const double ell = (s.rho + s.p * s.rho_tilde) / (1.0 - s.p);
  const double delta = (1.0 - s.p) / (1.0 + s.p * s.rho_tilde / s.rho);
  out.ell = ell;
  out.delta = delta;
  out.beta = ell / s.rho + 1.0;
  out.alpha = s.rho / ell;
  out.eta = s.rho_tilde / s.rho;
  out.colors_slope = 1.0;
  out.count_slope = delta;
  out.rank_slope = -delta;
  return out;
}

ScenarioPrediction predict(const PowerLawPScenario &s) {
  if (!(s.theta > 0.0 && s.theta < 1.0)) throw ValidationError("theta must lie in (0, 1)");
  check_affine(s.rho, s.rho_tilde);
  ScenarioPrediction out;
  out.scenario = "power-law-p";
  out.ell = s.theta * s.rho;
  out.delta = 1.0;
  out.beta = 1.0 + s.theta;
  out.alpha = 1.0 / s.theta;
  out.eta = s.rho_tilde / s.rho;
  out.colors_slope = s.theta;
  out.count_slope = 1.0;
  out.rank_slope = -1.0 / s.theta;
  return out;
}

ScenarioPrediction predict(const HarmonicPScenario &s) {
  check_affine(s.rho, s.rho_tilde);
  ScenarioPrediction out;
  out.scenario = "harmonic-p";
  out.ell = 0.0;
  out.eta = s.rho_tilde / s.rho;
  out.reason = kEllZero;
  return out;
}

ScenarioPrediction predict(const PowerRootScenario &s) {
  if (!(s.rho > 1.0) || !std::isfinite(s.rho)) throw ValidationError("rho must exceed 1");
  ScenarioPrediction out;
  out.scenario = "power-root-F";
  out.ell = 0.0;
  out.reason = kEllZero;
  return out;
}

std::string format_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Growth exponent of a tabulated F over its last decade (or whole span).
double table_tail_exponent(std::span<const double> table) {
  const std::size_t m = table.size();
  const std::size_t lo = m >= 10 ? m / 10 : 1;
  return std::log(table[m - 1] / table[lo - 1]) /
         std::log(static_cast<double>(m) / static_cast<double>(lo));
}

}  // namespace

ScenarioPrediction theoretical_prediction(const Scenario &scenario) {
  return std::visit([](const auto &s) { return predict(s); }, scenario);
}

std::optional<Scenario> scenario_of(const TriggerSchedule &schedule,
                                    const UpdateFunction &update) {
  using SK = TriggerSchedule::Kind;
  using UK = UpdateFunction::Kind;
  if (update.kind() == UK::kLinear) {
    const double rho = *update.rho();
    const double rho_tilde = *update.rho_tilde();
    switch (schedule.kind()) {
      case SK::kConstant:
        return ConstantPScenario{schedule.parameter(), rho, rho_tilde};
      case SK::kPowerLaw:
        return PowerLawPScenario{schedule.parameter(), rho, rho_tilde};
      case SK::kHarmonic:
        return HarmonicPScenario{rho, rho_tilde};
      default:
        return std::nullopt;
    }
  }
  if (update.kind() == UK::kPowerRoot &&
      (schedule.kind() == SK::kPowerLaw || schedule.kind() == SK::kHarmonic)) {
    return PowerRootScenario{*update.rho()};
  }
  return std::nullopt;
}

RegimeReport regime_classifier(const TriggerSchedule &schedule, const UpdateFunction &update) {
  using SK = TriggerSchedule::Kind;
  RegimeReport r;
  std::ostringstream why;
  switch (schedule.kind()) {
    case SK::kConstant:
      r.colors = ColorRegime::kInfinite;
      r.growth_law = "C_n ~ " + format_double(schedule.parameter()) + " n";
      why << "sum of p_n diverges (constant p)";
      break;
    case SK::kPowerLaw: {
      const double theta = schedule.parameter();
      r.colors = ColorRegime::kInfinite;
      r.growth_law = "C_n ~ " + format_double(schedule.scale() / theta) + " n^" +
                     format_double(theta);
      why << "sum of p_n diverges (p_n ~ n^" << format_double(theta - 1.0) << ")";
      break;
    }
    case SK::kHarmonic:
      r.colors = ColorRegime::kInfinite;
      r.growth_law = "C_n ~ " + format_double(schedule.scale()) + " ln n";
      why << "sum of p_n diverges logarithmically";
      break;
    case SK::kGeometric: {
      r.colors = ColorRegime::kFinite;
      // E[C_inf] = 1 + sum_{n>=1} p_n; the terms decay geometrically.
      double total = 1.0;
      for (std::uint64_t n = 1;; ++n) {
        const double p = schedule(n);
        total += p;
        if (p < 1e-18 * total) break;
      }
      r.expected_total_colors = total;
      r.growth_law = "C_n -> C_inf < inf";
      why << "sum of p_n converges";
      break;
    }
    case SK::kExplicit:
      r.colors = ColorRegime::kUndetermined;
      r.dominance = DominanceRegime::kInapplicable;
      r.explanation = "explicit schedules are finite, so the tail of p_n is unknown";
      return r;
  }
  // Every family other than Explicit keeps p_n <= clamp_max < 1 for n >= 1.
  switch (update.kind()) {
    case UpdateFunction::Kind::kLinear:
      r.dominance = DominanceRegime::kAllInfinitelyOften;
      why << "; sum 1/F(n) diverges for affine F";
      break;
    case UpdateFunction::Kind::kPowerRoot:
      r.dominance = DominanceRegime::kAllInfinitelyOften;
      why << "; sum 1/F(n) diverges for F(x) = x^(1/rho)";
      break;
    case UpdateFunction::Kind::kTabulated: {
      const double e = table_tail_exponent(update.table());
      if (e >= 1.5) {
        r.dominance = DominanceRegime::kSingleDominant;
        why << "; table grows like n^" << format_double(e) << ", so sum 1/F(n) converges";
      } else if (e <= 1.1) {
        r.dominance = DominanceRegime::kAllInfinitelyOften;
        why << "; table grows like n^" << format_double(e) << ", so sum 1/F(n) diverges";
      } else {
        r.dominance = DominanceRegime::kInapplicable;
        why << "; table growth exponent " << format_double(e)
            << " is too close to 1 to decide sum 1/F(n)";
      }
      break;
    }
  }
  r.explanation = why.str();
  return r;
}

std::string to_string(ColorRegime regime) {
  switch (regime) {
    case ColorRegime::kFinite:
      return "finite";
    case ColorRegime::kInfinite:
      return "infinite";
    case ColorRegime::kUndetermined:
      break;
  }
  return "undetermined";
}

std::string to_string(DominanceRegime regime) {
  switch (regime) {
    case DominanceRegime::kSingleDominant:
      return "single-dominant";
    case DominanceRegime::kAllInfinitelyOften:
      return "all-infinitely-often";
    case DominanceRegime::kInapplicable:
      break;
  }
  return "inapplicable";
}

}  // namespace faqurn
