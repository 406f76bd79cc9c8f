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
#include <limits>
#include <sstream>

#include "faqurn/analysis.hpp"
#include "faqurn/error.hpp"

namespace faqurn {

FitReport loglog_fit(std::span<const std::pair<double, double>> points, FitWindow window,
                     double shift) {
  FitReport report;
  report.shift = shift;
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto &[x, y] : points) {
    if (!(x >= window.x_min && x <= window.x_max)) continue;
    const double ys_shifted = y + shift;
    if (!(x > 0.0) || !(ys_shifted > 0.0)) {
      ++report.excluded;
      continue;
    }
    xs.push_back(std::log10(x));
    ys.push_back(std::log10(ys_shifted));
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (xs.size() < kMinFitPoints) {
    std::ostringstream os;
    os << "log-log fit needs at least " << kMinFitPoints << " points, " << xs.size()
       << " usable (" << report.excluded << " excluded)";
    throw EstimationError(os.str());
  }
  const auto m = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw EstimationError("log-log fit needs at least two distinct x values");
  report.slope = sxy / sxx;
  report.intercept = my - report.slope * mx;
  // A constant response is fitted exactly by slope 0.
  report.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
  report.fit_window = {lo, hi};
  report.points_used = xs.size();
  return report;
}

std::vector<std::pair<double, double>> rank_points(const RankCurve &curve,
                                                   std::uint64_t min_frequency) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t r = 0; r < curve.size(); ++r) {
    if (curve.frequencies[r] < min_frequency) break;
    pts.emplace_back(static_cast<double>(r + 1), static_cast<double>(curve.frequencies[r]));
  }
  return pts;
}

std::vector<std::pair<double, double>> to_points(std::span<const TimePoint> trajectory) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(trajectory.size());
  for (const auto &[n, v] : trajectory) {
    pts.emplace_back(static_cast<double>(n), static_cast<double>(v));
  }
  return pts;
}

}  // namespace faqurn
