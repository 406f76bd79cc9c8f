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

#include "faqurn/approx.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "faqurn/error.hpp"
#include "faqurn/special.hpp"

namespace faqurn {

ExactDistribution poisson_binomial_pmf(std::span<const double> probabilities) {
  if (probabilities.size() > kMaxPoissonBinomialSize) {
    std::ostringstream os;
    os << "Poisson-binomial DP is capped at n = " << kMaxPoissonBinomialSize
       << "; use the CLT or Poisson approximation for n = " << probabilities.size();
    throw CapacityError(os.str());
  }
  std::vector<double> pmf(probabilities.size() + 1, 0.0);
  pmf[0] = 1.0;
  std::size_t top = 0;
  for (double p : probabilities) {
    ++top;
    for (std::size_t j = top; j > 0; --j) {
      pmf[j] = pmf[j] * (1.0 - p) + pmf[j - 1] * p;
    }
    pmf[0] *= 1.0 - p;
  }
  return ExactDistribution(0, std::move(pmf));
}

ExactDistribution poisson_binomial_pmf(const TriggerSchedule &schedule, std::uint64_t n) {
  if (n < 1) throw DomainError("poisson_binomial_pmf needs n >= 1");
  if (n > kMaxPoissonBinomialSize) {
    std::ostringstream os;
    os << "Poisson-binomial DP is capped at n = " << kMaxPoissonBinomialSize;
    throw CapacityError(os.str());
  }
  std::vector<double> ps(n);
  for (std::uint64_t i = 0; i < n; ++i) ps[i] = schedule(i);
  return poisson_binomial_pmf(ps);
}

TruncatedPoisson poisson_pmf(double lambda, double tail_mass) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("Poisson rate must be finite and nonnegative");
  }
  if (lambda == 0.0) return {ExactDistribution::point_mass(0), 0.0};
  const auto mode = static_cast<std::uint64_t>(std::floor(lambda));

  // Upward from the mode until the tail above is negligible; the terms decay
  // at least geometrically past lambda, so the remainder is bounded by
  // term * r / (1 - r) with r = lambda / (j + 1).
  std::vector<double> upper = {std::exp(log_poisson_pmf(lambda, mode))};
  for (std::uint64_t j = mode;; ++j) {
    const double r = lambda / static_cast<double>(j + 2);
    const double next = upper.back() * lambda / static_cast<double>(j + 1);
    upper.push_back(next);
    if (r < 1.0 && next * r / (1.0 - r) < tail_mass * 1e-3) break;
    if (next == 0.0) break;
  }
  std::vector<double> probs(mode + upper.size(), 0.0);
  std::copy(upper.begin(), upper.end(), probs.begin() + static_cast<std::ptrdiff_t>(mode));
  for (std::uint64_t j = mode; j > 0; --j) {
    probs[j - 1] = probs[j] * static_cast<double>(j) / lambda;
  }

  // Cut at the smallest J with cdf(J) > 1 - tail_mass.
  CompensatedSum cdf;
  std::size_t cut = probs.size();
  for (std::size_t j = 0; j < probs.size(); ++j) {
    cdf.add(probs[j]);
    if (cdf.value() > 1.0 - tail_mass) {
      cut = j + 1;
      break;
    }
  }
  probs.resize(cut);
  ExactDistribution pmf(0, std::move(probs));
  const double tail = std::max(0.0, 1.0 - pmf.total());
  return {std::move(pmf), tail};
}

ApproxReport barbour_holst(const TriggerSchedule &schedule, std::uint64_t n) {
  if (n < 1) throw DomainError("barbour_holst needs n >= 1");
  CompensatedSum l1;
  CompensatedSum l2;
  CompensatedSum var;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double p = schedule(i);
    l1.add(p);
    l2.add(p * p);
    var.add(p * (1.0 - p));
  }
  ApproxReport r;
  r.n = n;
  r.lambda1 = l1.value();
  r.lambda2 = l2.value();
  r.tv_bound = -std::expm1(-r.lambda1) * r.lambda2 / r.lambda1;
  r.clt_mean = r.lambda1;
  r.clt_sd = std::sqrt(var.value());
  return r;
}

ApproxReport barbour_holst_with_exact(const TriggerSchedule &schedule, std::uint64_t n) {
  ApproxReport r = barbour_holst(schedule, n);
  const auto tv = total_variation(poisson_binomial_pmf(schedule, n), PoissonLaw{r.lambda1});
  r.tv_exact = tv.value;
  return r;
}

namespace {

struct Materialized {
  ExactDistribution pmf;
  double tail = 0.0;
};

Materialized materialize(const Law &law) {
  if (const auto *d = std::get_if<ExactDistribution>(&law)) {
    if (d->min_value() < 0) {
      throw ValidationError("total variation is defined here for laws on the nonnegative integers");
    }
    return {*d, 0.0};
  }
  auto t = poisson_pmf(std::get<PoissonLaw>(law).lambda);
  return {std::move(t.pmf), t.tail_mass};
}

}  // namespace

TotalVariation total_variation(const Law &a, const Law &b) {
  const Materialized x = materialize(a);
  const Materialized y = materialize(b);
  const std::int64_t hi = std::max(x.pmf.max_value(), y.pmf.max_value());
  CompensatedSum s;
  for (std::int64_t j = 0; j <= hi; ++j) s.add(std::abs(x.pmf.pmf(j) - y.pmf.pmf(j)));
  // Truncated Poisson mass is reported, not folded into the value.
  return {0.5 * s.value(), x.tail + y.tail};
}

double ks_statistic_normal(std::span<const double> values) {
  if (values.empty()) throw ValidationError("KS statistic needs at least one value");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto m = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = normal_cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / m - f, f - static_cast<double>(i) / m});
  }
  return d;
}

CltReport clt_report(const TriggerSchedule &schedule, std::uint64_t n,
                     std::span<const double> samples) {
  if (samples.empty()) throw ValidationError("clt_report needs at least one sample");
  const ApproxReport bh = barbour_holst(schedule, n);
  if (!(bh.clt_sd > 0.0)) {
    throw ValidationError("degenerate variance: every p_i is 0 or 1");
  }
  CltReport r;
  r.mean = bh.clt_mean;
  r.sd = bh.clt_sd;
  r.standardized.reserve(samples.size());
  for (double x : samples) r.standardized.push_back((x - r.mean) / r.sd);
  r.ks_statistic = ks_statistic_normal(r.standardized);
  return r;
}

}  // namespace faqurn
