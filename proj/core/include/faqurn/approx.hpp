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

#ifndef FAQURN_APPROX_HPP_
#define FAQURN_APPROX_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "faqurn/distribution.hpp"
#include "faqurn/trigger_schedule.hpp"

namespace faqurn {

/// Largest n accepted by the O(n^2) Poisson-binomial convolution.
inline constexpr std::uint64_t kMaxPoissonBinomialSize = 100'000;

/// Cumulative mass beyond which a Poisson law is truncated.
inline constexpr double kPoissonTailMass = 1e-14;

/// Exact law of C_n = B_0 + ... + B_{n-1} on {0..n}, by dynamic programming
/// over one rolling array. Throws CapacityError above
/// kMaxPoissonBinomialSize.
ExactDistribution poisson_binomial_pmf(const TriggerSchedule &schedule, std::uint64_t n);

/// Same, for an explicit list of success probabilities.
ExactDistribution poisson_binomial_pmf(std::span<const double> probabilities);

struct TruncatedPoisson {
  ExactDistribution pmf;   // P(j) for j = 0..J
  double tail_mass = 0.0;  // 1 - sum of the stored probabilities
};

/// Poisson(lambda) pmf up to the smallest J with cdf(J) > 1 - tail_mass,
/// filled by recurrence outward from the mode (the mode term is computed in
/// log space, so small j do not underflow prematurely).
TruncatedPoisson poisson_pmf(double lambda, double tail_mass = kPoissonTailMass);

struct ApproxReport {
  std::uint64_t n = 0;
  double lambda1 = 0.0;  // sum_{i<n} p_i
  double lambda2 = 0.0;  // sum_{i<n} p_i^2
  double tv_bound = 0.0;  // (1 - e^{-lambda1}) lambda2 / lambda1
  std::optional<double> tv_exact;
  double clt_mean = 0.0;  // sum p_i
  double clt_sd = 0.0;    // sqrt(sum p_i (1 - p_i))
};

/// Barbour-Holst total-variation bound between C_n and Poisson(lambda1).
/// Streams the sums, so n = 10^7 is cheap.
ApproxReport barbour_holst(const TriggerSchedule &schedule, std::uint64_t n);

/// barbour_holst plus the exact d_TV(C_n, Poisson(lambda1)) via
/// poisson_binomial_pmf.
ApproxReport barbour_holst_with_exact(const TriggerSchedule &schedule, std::uint64_t n);

using Law = std::variant<ExactDistribution, PoissonLaw>;

struct TotalVariation {
  double value = 0.0;
  double uncertainty = 0.0;  // Poisson truncation mass not resolved
};

/// d_TV = 1/2 sum_j |P1(j) - P2(j)| over the nonnegative integers.
TotalVariation total_variation(const Law &a, const Law &b);

struct CltReport {
  double mean = 0.0;
  double sd = 0.0;
  std::vector<double> standardized;
  double ks_statistic = 0.0;  // sup |F_emp - Phi|
};

/// Standardizes realized C_n values by the CLT centering and scaling and
/// computes the one-sample Kolmogorov-Smirnov statistic against N(0, 1).
/// Throws ValidationError when sum p_i (1 - p_i) = 0 or samples is empty.
CltReport clt_report(const TriggerSchedule &schedule, std::uint64_t n,
                     std::span<const double> samples);

/// One-sample KS statistic of `values` against the standard normal CDF.
double ks_statistic_normal(std::span<const double> values);

}  // namespace faqurn

#endif  // FAQURN_APPROX_HPP_
