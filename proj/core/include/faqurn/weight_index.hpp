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

#ifndef FAQURN_WEIGHT_INDEX_HPP_
#define FAQURN_WEIGHT_INDEX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace faqurn {

/// Binary-indexed cumulative-weight tree (Fenwick tree) over a growing list of
/// nonnegative weights. Append, point update, prefix sum and inverse-CDF
/// search are O(log n).
class WeightIndex {
 public:
  WeightIndex() : tree_(1, 0.0) {}

  std::size_t size() const noexcept { return tree_.size() - 1; }
  bool empty() const noexcept { return size() == 0; }
  void reserve(std::size_t n) { tree_.reserve(n + 1); }
  void clear() { tree_.assign(1, 0.0); }

  /// Appends a weight and returns its 0-based index.
  std::size_t push_back(double weight);

  /// weights[i] += delta.
  void add(std::size_t i, double delta);

  /// Sum of the first `count` weights.
  double prefix(std::size_t count) const;

  double total() const { return prefix(size()); }

  /// Smallest index i such that weights[0] + ... + weights[i] > target.
  /// Targets at or beyond the total (floating round-off) map to the last
  /// index. Requires a nonempty index.
  std::size_t find(double target) const;

  /// Replaces the contents with `weights` in O(n).
  void rebuild(std::span<const double> weights);

 private:
  static std::size_t lowbit(std::size_t i) noexcept { return i & (~i + 1); }

  std::vector<double> tree_;  // 1-based
};

}  // namespace faqurn

#endif  // FAQURN_WEIGHT_INDEX_HPP_
