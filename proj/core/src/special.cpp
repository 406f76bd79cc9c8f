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

#include "faqurn/special.hpp"

#include <array>
#include <limits>
#include <numbers>

namespace faqurn {

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return -std::numeric_limits<double>::infinity();
  if (k == 0 || k == n) return 0.0;
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
}

double log_gamma_ratio(double x, double a) {
  if (a == 0.0) return 0.0;
  if (x < 64.0 || x + a < 64.0) {
    return std::lgamma(x + a) - std::lgamma(x);
  }
  // Stirling: ln G(z) = (z - 1/2) ln z - z + ln(2 pi)/2 + sum_k B_2k / (2k (2k-1) z^(2k-1)).
  // Differencing at z = x + a and z = x, rearranged to avoid cancellation:
  //   (x - 1/2) log1p(a/x) + a ln(x + a) - a + series(x + a) - series(x).
  constexpr std::array<double, 5> kCoeff = {1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0,
                                            -1.0 / 1680.0, 1.0 / 1188.0};
  auto series = [&](double z) {
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double term = inv;
    double s = 0.0;
    for (double c : kCoeff) {
      s += c * term;
      term *= inv2;
    }
    return s;
  };
  const double y = x + a;
  return (x - 0.5) * std::log1p(a / x) + a * std::log(y) - a + (series(y) - series(x));
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double log_poisson_pmf(double lambda, std::uint64_t j) {
  const auto jd = static_cast<double>(j);
  if (lambda == 0.0) return j == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  return jd * std::log(lambda) - lambda - std::lgamma(jd + 1.0);
}

}  // namespace faqurn
