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

#include "faqurn/enumerate.hpp"

#include <sstream>

#include "faqurn/error.hpp"
#include "faqurn/special.hpp"

namespace faqurn {

void validate_history(std::span<const Color> history) {
  if (history.empty()) throw ValidationError("history is empty");
  Color max_label = 0;
  for (std::size_t i = 0; i < history.size(); ++i) {
    const Color c = history[i];
    if (c == 0 || c > max_label + 1) {
      std::ostringstream os;
      os << "malformed history at position " << i + 1 << ": label " << c;
      if (i == 0) {
        os << " (the first symbol must be 1)";
      } else {
        os << " (expected a label in 1.." << max_label + 1 << ")";
      }
      throw ValidationError(os.str());
    }
    if (c > max_label) max_label = c;
  }
}

double path_probability(std::span<const Color> history, const TriggerSchedule &schedule,
                        const UpdateFunction &update) {
  validate_history(history);
  std::vector<std::uint64_t> counts;
  double probability = 1.0;
  for (std::size_t t = 0; t < history.size(); ++t) {
    const double p = schedule(t);
    const Color c = history[t];
    if (c == counts.size() + 1) {
      probability *= p;
      counts.push_back(1);
      continue;
    }
    double total = 0.0;
    for (std::uint64_t k : counts) total += update(k);
    probability *= (1.0 - p) * update(counts[c - 1]) / total;
    ++counts[c - 1];
  }
  return probability;
}

void for_each_history(std::uint32_t n,
                      const std::function<void(std::span<const Color>)> &visit) {
  std::vector<Color> h(n);
  if (n == 0) {
    visit(h);
    return;
  }
  // Restricted growth strings, generated depth-first with the running max.
  std::vector<Color> max_before(n + 1, 0);
  auto rec = [&](auto &&self, std::uint32_t pos) -> void {
    if (pos == n) {
      visit(h);
      return;
    }
    const Color m = max_before[pos];
    for (Color c = 1; c <= m + 1; ++c) {
      h[pos] = c;
      max_before[pos + 1] = c > m ? c : m;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

ExactDistribution ExactEnumeration::count_law(Color c) const {
  if (c == 0) throw ValidationError("colors are labeled from 1");
  if (c > counts.size()) return ExactDistribution::point_mass(0);
  return counts[c - 1];
}

ExactEnumeration enumerate_exact(std::uint32_t n, const TriggerSchedule &schedule,
                                 const UpdateFunction &update, bool keep_histories) {
  if (n > kMaxEnumerationHorizon) {
    std::ostringstream os;
    os << "enumeration horizon " << n << " exceeds the bound " << kMaxEnumerationHorizon;
    throw CapacityError(os.str());
  }
  if (const auto last = schedule.last_index(); last && n > 0 && n - 1 > *last) {
    throw ValidationError("explicit schedule is shorter than the enumeration horizon");
  }

  const std::size_t width = n + 1;
  std::vector<CompensatedSum> colors(width);
  std::vector<std::vector<CompensatedSum>> counts(n, std::vector<CompensatedSum>(width));
  std::vector<std::vector<CompensatedSum>> spectrum(n, std::vector<CompensatedSum>(width));
  CompensatedSum total;

  ExactEnumeration result;
  result.horizon = n;
  std::vector<std::uint64_t> k(n);
  std::vector<std::uint32_t> q(n + 1);

  for_each_history(n, [&](std::span<const Color> h) {
    const double prob = path_probability(h, schedule, update);
    ++result.num_histories;
    total.add(prob);
    std::fill(k.begin(), k.end(), 0);
    Color num_colors = 0;
    for (Color c : h) {
      ++k[c - 1];
      if (c > num_colors) num_colors = c;
    }
    colors[num_colors].add(prob);
    std::fill(q.begin(), q.end(), 0);
    for (std::uint32_t c = 0; c < n; ++c) {
      counts[c][k[c]].add(prob);
      if (k[c] > 0) ++q[k[c]];
    }
    for (std::uint32_t kk = 1; kk <= n; ++kk) spectrum[kk - 1][q[kk]].add(prob);
    if (keep_histories) result.histories.push_back({{h.begin(), h.end()}, prob});
  });

  auto finish = [&](const std::vector<CompensatedSum> &cells) {
    std::vector<double> probs(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) probs[i] = cells[i].value();
    return ExactDistribution(0, std::move(probs));
  };
  result.total_probability = total.value();
  result.colors = finish(colors);
  for (std::uint32_t c = 0; c < n; ++c) {
    result.counts.push_back(finish(counts[c]));
    result.spectrum.push_back(finish(spectrum[c]));
  }
  return result;
}

}  // namespace faqurn
