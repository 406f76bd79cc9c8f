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

#ifndef FAQURN_DISTRIBUTION_HPP_
#define FAQURN_DISTRIBUTION_HPP_

#include <cstdint>
#include <vector>

namespace faqurn {

/// A finite pmf on the integers {offset, offset + 1, ...}.
struct ExactDistribution {
  std::int64_t offset = 0;
  std::vector<double> probabilities;

  ExactDistribution() = default;
  ExactDistribution(std::int64_t offset, std::vector<double> probabilities)
      : offset(offset), probabilities(std::move(probabilities)) {}

  /// Point mass at `value`.
  static ExactDistribution point_mass(std::int64_t value) { return {value, {1.0}}; }

  /// P(X = j); zero outside the stored support.
  double pmf(std::int64_t j) const noexcept {
    const std::int64_t i = j - offset;
    if (i < 0 || i >= static_cast<std::int64_t>(probabilities.size())) return 0.0;
    return probabilities[static_cast<std::size_t>(i)];
  }

  std::int64_t min_value() const noexcept { return offset; }
  std::int64_t max_value() const noexcept {
    return offset + static_cast<std::int64_t>(probabilities.size()) - 1;
  }

  double total() const;
  double mean() const;
  double variance() const;

  /// Throws ValidationError unless every probability is >= 0 and the total
  /// is within `tolerance` of 1.
  void validate(double tolerance = 1e-12) const;
};

/// Poisson(lambda), evaluated lazily by the approximation routines.
struct PoissonLaw {
  double lambda = 0.0;
};

}  // namespace faqurn

#endif  // FAQURN_DISTRIBUTION_HPP_
