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
#include <numeric>

#include "faqurn/analysis.hpp"
#include "faqurn/error.hpp"

namespace faqurn {

Observation observation_of(const Trace &trace) {
  return {trace.horizon(), trace.colors, trace.tracked, trace.final_counts};
}

std::map<std::uint64_t, double> FrequencySpectrum::normalized() const {
  std::map<std::uint64_t, double> q;
  for (const auto &[k, count] : entries) {
    q[k] = static_cast<double>(count) / static_cast<double>(num_colors);
  }
  return q;
}

std::uint64_t FrequencySpectrum::at(std::uint64_t k) const {
  const auto it = entries.find(k);
  return it == entries.end() ? 0 : it->second;
}

std::uint64_t FrequencySpectrum::tail_count(std::uint64_t z) const {
  std::uint64_t r = 0;
  for (auto it = entries.lower_bound(z); it != entries.end(); ++it) r += it->second;
  return r;
}

FrequencySpectrum frequency_spectrum(std::span<const std::uint64_t> counts) {
  FrequencySpectrum s;
  for (std::uint64_t k : counts) {
    if (k == 0) throw ValidationError("frequency spectrum needs counts >= 1");
    ++s.entries[k];
    s.n += k;
  }
  s.num_colors = counts.size();
  return s;
}

std::size_t RankCurve::ranks_at_least(std::uint64_t v) const {
  // frequencies is nonincreasing: count the prefix with z >= v.
  const auto it = std::partition_point(frequencies.begin(), frequencies.end(),
                                       [v](std::uint64_t z) { return z >= v; });
  return static_cast<std::size_t>(it - frequencies.begin());
}

RankCurve rank_curve(std::span<const std::uint64_t> counts) {
  std::vector<Color> order(counts.size());
  std::iota(order.begin(), order.end(), Color{1});
  std::stable_sort(order.begin(), order.end(),
                   [&](Color a, Color b) { return counts[a - 1] > counts[b - 1]; });
  RankCurve curve;
  curve.frequencies.reserve(counts.size());
  for (Color c : order) {
    if (counts[c - 1] == 0) throw ValidationError("rank curve needs counts >= 1");
    curve.frequencies.push_back(counts[c - 1]);
  }
  curve.colors = std::move(order);
  return curve;
}

DominanceDiagnostic dominance_diagnostic(std::span<const std::uint64_t> final_counts) {
  if (final_counts.empty()) throw ValidationError("dominance diagnostic needs counts");
  std::vector<std::uint64_t> sorted(final_counts.begin(), final_counts.end());
  std::sort(sorted.begin(), sorted.end());
  const double total =
      static_cast<double>(std::accumulate(sorted.begin(), sorted.end(), std::uint64_t{0}));
  if (!(total > 0.0)) throw ValidationError("dominance diagnostic needs a positive total");
  DominanceDiagnostic d;
  d.leading_share = static_cast<double>(sorted.back()) / total;
  d.second_share = sorted.size() > 1 ? static_cast<double>(sorted[sorted.size() - 2]) / total : 0.0;
  // Gini from the ascending order: 2 sum_i i x_(i) / (m sum x) - (m + 1) / m.
  const auto m = static_cast<double>(sorted.size());
  double weighted = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    weighted += static_cast<double>(i + 1) * static_cast<double>(sorted[i]);
  }
  d.gini = std::max(0.0, 2.0 * weighted / (m * total) - (m + 1.0) / m);
  return d;
}

HeapsZipfCheck heaps_zipf_check(double theta_hat, double alpha_hat) {
  if (!(theta_hat > 0.0) || !(alpha_hat > 0.0)) {
    throw ValidationError("Heaps-Zipf check needs positive theta and alpha estimates");
  }
  const double product = theta_hat * alpha_hat;
  return {product, std::abs(product - 1.0)};
}

}  // namespace faqurn
