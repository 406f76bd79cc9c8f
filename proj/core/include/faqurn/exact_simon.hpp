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

#ifndef FAQURN_EXACT_SIMON_HPP_
#define FAQURN_EXACT_SIMON_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include "faqurn/distribution.hpp"
#include "faqurn/trigger_schedule.hpp"

namespace faqurn::simon {

// Closed forms for Simon's urn: constant trigger probability p in (0, 1)
// and F(k) = k. Gamma ratios and binomials are evaluated in log space and
// exponentiated once at the end.

/// Validated trigger probability.
class SimonParams {
 public:
  explicit SimonParams(double p);
  double p() const noexcept { return p_; }

 private:
  double p_;
};

/// A value with an optional certified bound on its truncation/approximation
/// error.
struct BoundedValue {
  double value = 0.0;
  std::optional<double> error_bound;
  std::uint64_t terms = 0;  // series terms summed, where applicable
};

/// P(C_n = i) = C(n-1, i-1) p^(i-1) (1-p)^(n-i) on {1..n}.
ExactDistribution colors_pmf(std::uint64_t n, SimonParams params);

struct Moments {
  double mean;
  double variance;
};

/// E[C_n] = 1 + p(n-1), Var[C_n] = p(1-p)(n-1).
Moments colors_moments(std::uint64_t n, SimonParams params);

/// P(K_{n,c} = 0) for n >= 2, c >= 2.
double prob_color_absent(std::uint64_t n, std::uint64_t c, SimonParams params);

struct Partial {
  std::uint64_t n;
};
struct Limit {
  double tolerance = 1e-12;
};

/// Lambda_n(c, p) = sum_{i=c+1}^{n} C(i-2, c-2) (1-p)^i Gamma(i) / Gamma(i+1-p)
/// (Partial), or its limit n -> infinity with a certified tail bound (Limit).
BoundedValue lambda_series(std::uint64_t c, SimonParams params,
                           std::variant<Partial, Limit> mode);

/// E[K_{n,c}] for n >= c >= 1. Throws DomainError for n < c.
double expected_count(std::uint64_t n, std::uint64_t c, SimonParams params);

struct Color1Mean {
  double exact;       // Gamma(n+1-p) / (Gamma(2-p) Gamma(n))
  double asymptotic;  // n^(1-p) / Gamma(2-p)
  double error_estimate;  // |exact - asymptotic|, which is O(n^-p)
};

/// E[K_{n,1}] and its leading-order asymptotic form.
Color1Mean expected_count_color1(std::uint64_t n, SimonParams params);

/// lim E[K_{n,c}] / n^(1-p) = p^(c-1) (Lambda_inf(c,p) / (1-p)^c + Gamma(c) / Gamma(c-p+1)).
BoundedValue asymptotic_prefactor(std::uint64_t c, SimonParams params);

/// prod_{i=2}^{n} (i - p_i) / (i - 1), accumulated in the log domain.
///
/// The factor for step i uses p_i. Under the urn's own indexing ball i is
/// governed by p_{i-1}, so E[K_{n,1}] of a simulated time-varying schedule
/// is this product evaluated at i -> p_{i-1}. The two agree for constant p.
double dynamic_mean_color1(const std::function<double(std::uint64_t)> &p_of,
                           std::uint64_t n);
double dynamic_mean_color1(const TriggerSchedule &schedule, std::uint64_t n);

}  // namespace faqurn::simon

#endif  // FAQURN_EXACT_SIMON_HPP_
