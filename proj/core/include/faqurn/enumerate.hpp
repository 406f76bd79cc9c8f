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

#ifndef FAQURN_ENUMERATE_HPP_
#define FAQURN_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "faqurn/distribution.hpp"
#include "faqurn/trigger_schedule.hpp"
#include "faqurn/update_function.hpp"
#include "faqurn/urn.hpp"

namespace faqurn {

/// Throws ValidationError unless `history` is nonempty, starts with color 1 and every new
/// label is exactly one more than the largest label seen so far.
void validate_history(std::span<const Color> history);

/// Probability of observing `history` as the first |history| symbols of S.
/// Computed directly from the counts, independently of UrnState's sampling
/// index.
double path_probability(std::span<const Color> history, const TriggerSchedule &schedule,
                        const UpdateFunction &update);

/// Largest horizon enumerate_exact accepts (Bell(12) = 4,213,597 histories).
inline constexpr std::uint32_t kMaxEnumerationHorizon = 12;

/// Calls `visit` with every well-formed history of length n, in
/// lexicographic order.
void for_each_history(std::uint32_t n,
                      const std::function<void(std::span<const Color>)> &visit);

struct WeightedHistory {
  std::vector<Color> history;
  double probability;
};

/// Exact laws at horizon n obtained by summing path probabilities over every
/// history of length n.
struct ExactEnumeration {
  std::uint32_t horizon = 0;
  std::uint64_t num_histories = 0;
  double total_probability = 0.0;
  ExactDistribution colors;               // law of C_n on {0..n}
  std::vector<ExactDistribution> counts;  // counts[c-1]: law of K_{n,c} on {0..n}
  std::vector<ExactDistribution> spectrum;  // spectrum[k-1]: law of Q_{n,k} on {0..n}
  std::vector<WeightedHistory> histories;   // filled when requested

  /// Law of K_{n,c}; point mass at 0 for c > n.
  ExactDistribution count_law(Color c) const;
  /// E[K_{n,c}].
  double expected_count(Color c) const { return count_law(c).mean(); }
};

/// Brute-force oracle. Throws CapacityError for n > kMaxEnumerationHorizon.
ExactEnumeration enumerate_exact(std::uint32_t n, const TriggerSchedule &schedule,
                                 const UpdateFunction &update, bool keep_histories = false);

}  // namespace faqurn

#endif  // FAQURN_ENUMERATE_HPP_
