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

#include "faqurn/weight_index.hpp"

#include <bit>
#include <cassert>

namespace faqurn {

std::size_t WeightIndex::push_back(double weight) {
  const std::size_t i = tree_.size();
  // Node i covers (i - lowbit(i), i]; all but the new element already exist.
  const double covered = prefix(i - 1) - prefix(i - lowbit(i));
  tree_.push_back(weight + covered);
  return i - 1;
}

void WeightIndex::add(std::size_t i, double delta) {
  assert(i < size());
  for (std::size_t j = i + 1; j < tree_.size(); j += lowbit(j)) {
    tree_[j] += delta;
  }
}

double WeightIndex::prefix(std::size_t count) const {
  assert(count <= size());
  double sum = 0.0;
  for (std::size_t j = count; j > 0; j -= lowbit(j)) {
    sum += tree_[j];
  }
  return sum;
}

std::size_t WeightIndex::find(double target) const {
  assert(!empty());
  const std::size_t n = size();
  std::size_t pos = 0;
  for (std::size_t step = std::bit_floor(n); step > 0; step >>= 1) {
    const std::size_t next = pos + step;
    if (next <= n && tree_[next] <= target) {
      pos = next;
      target -= tree_[next];
    }
  }
  return pos < n ? pos : n - 1;
}

void WeightIndex::rebuild(std::span<const double> weights) {
  tree_.assign(weights.size() + 1, 0.0);
  for (std::size_t i = 1; i <= weights.size(); ++i) {
    tree_[i] += weights[i - 1];
    const std::size_t parent = i + lowbit(i);
    if (parent <= weights.size()) tree_[parent] += tree_[i];
  }
}

}  // namespace faqurn
