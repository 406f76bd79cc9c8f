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

#ifndef FAQURN_SPECIAL_HPP_
#define FAQURN_SPECIAL_HPP_

#include <cmath>
#include <cstdint>

namespace faqurn {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// ln C(n, k); -infinity when k < 0 or k > n (the convention C(m, -1) = 0).
double log_binomial(std::int64_t n, std::int64_t k);

/// ln Gamma(x + a) - ln Gamma(x) for x > 0, x + a > 0. Uses an asymptotic
/// expansion for large x so the difference keeps full relative accuracy
/// where two large lgamma values would cancel.
double log_gamma_ratio(double x, double a);

/// Standard normal CDF.
double normal_cdf(double z);

/// ln P(Poisson(lambda) = j).
double log_poisson_pmf(double lambda, std::uint64_t j);

}  // namespace faqurn

#endif  // FAQURN_SPECIAL_HPP_
