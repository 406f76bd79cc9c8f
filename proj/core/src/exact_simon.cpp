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

#include "faqurn/exact_simon.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "faqurn/error.hpp"
#include "faqurn/special.hpp"

namespace faqurn::simon {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ln[C(m, j) p^j (1-p)^(m-j)], the binomial(m, p) log-pmf.
double log_binomial_term(std::int64_t m, std::int64_t j, double log_p, double log_q) {
  const double lb = log_binomial(m, j);
  if (lb == kNegInf) return kNegInf;
  const double a = j == 0 ? 0.0 : static_cast<double>(j) * log_p;
  const double b = m - j == 0 ? 0.0 : static_cast<double>(m - j) * log_q;
  return lb + a + b;
}

double safe_exp(double x) { return x == kNegInf ? 0.0 : std::exp(x); }

// ln term of Lambda: ln C(i-2, c-2) + i ln(1-p) + ln Gamma(i) - ln Gamma(i+1-p).
double log_lambda_term(std::uint64_t i, std::uint64_t c, double p) {
  return log_binomial(static_cast<std::int64_t>(i) - 2, static_cast<std::int64_t>(c) - 2) +
         static_cast<double>(i) * std::log1p(-p) -
         log_gamma_ratio(static_cast<double>(i), 1.0 - p);
}

}  // namespace

SimonParams::SimonParams(double p) : p_(p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ValidationError("Simon urn trigger probability must lie in (0, 1)");
  }
}

ExactDistribution colors_pmf(std::uint64_t n, SimonParams params) {
  if (n < 1) throw DomainError("colors_pmf needs n >= 1");
  const double p = params.p();
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const auto m = static_cast<std::int64_t>(n - 1);  // C_n - 1 ~ Binomial(n-1, p)

  // Start at the mode in log space, then walk outward with the exact
  // ratio P(j+1)/P(j) = (m-j)/(j+1) * p/(1-p). A single lgamma evaluation
  // fixes the scale; the final normalization absorbs its rounding.
  const auto mode = std::min<std::int64_t>(
      m, static_cast<std::int64_t>(std::floor(static_cast<double>(m + 1) * p)));
  std::vector<double> probs(static_cast<std::size_t>(m + 1), 0.0);
  probs[static_cast<std::size_t>(mode)] = std::exp(log_binomial_term(m, mode, log_p, log_q));
  const double odds = p / (1.0 - p);
  for (std::int64_t j = mode; j < m; ++j) {
    probs[static_cast<std::size_t>(j + 1)] = probs[static_cast<std::size_t>(j)] *
                                             static_cast<double>(m - j) /
                                             static_cast<double>(j + 1) * odds;
  }
  for (std::int64_t j = mode; j > 0; --j) {
    probs[static_cast<std::size_t>(j - 1)] = probs[static_cast<std::size_t>(j)] *
                                             static_cast<double>(j) /
                                             static_cast<double>(m - j + 1) / odds;
  }
  CompensatedSum total;
  for (double v : probs) total.add(v);
  const double scale = 1.0 / total.value();
  for (double &v : probs) v *= scale;
  return ExactDistribution(1, std::move(probs));
}

Moments colors_moments(std::uint64_t n, SimonParams params) {
  if (n < 1) throw DomainError("colors_moments needs n >= 1");
  const double p = params.p();
  const auto m = static_cast<double>(n - 1);
  return {1.0 + p * m, p * (1.0 - p) * m};
}

double prob_color_absent(std::uint64_t n, std::uint64_t c, SimonParams params) {
  if (n < 2 || c < 2) throw DomainError("prob_color_absent needs n >= 2 and c >= 2");
  const double p = params.p();
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const auto ni = static_cast<std::int64_t>(n);
  const auto ci = static_cast<std::int64_t>(c);
  // C(n-2, c-2) p^(c-2) (1-p)^(n-c+1): one more failure than the binomial
  // term P(C_{n-1} = c-1).
  CompensatedSum s;
  s.add((1.0 - p) * safe_exp(log_binomial_term(ni - 2, ci - 2, log_p, log_q)));
  for (std::int64_t r = 1; r <= ci - 2; ++r) {
    s.add(safe_exp(log_binomial_term(ni - 2, r - 1, log_p, log_q)));
  }
  return std::min(1.0, s.value());
}

BoundedValue lambda_series(std::uint64_t c, SimonParams params,
                           std::variant<Partial, Limit> mode) {
  if (c < 2) throw DomainError("lambda_series needs c >= 2");
  const double p = params.p();
  BoundedValue out;
  CompensatedSum sum;

  if (const auto *partial = std::get_if<Partial>(&mode)) {
    for (std::uint64_t i = c + 1; i <= partial->n; ++i) {
      sum.add(std::exp(log_lambda_term(i, c, p)));
      ++out.terms;
    }
    out.value = sum.value();
    return out;
  }

  const double tolerance = std::get<Limit>(mode).tolerance;
  if (!(tolerance > 0.0)) throw ValidationError("lambda_series tolerance must be positive");
  // For j >= i the term ratio t_{j+1}/t_j = (j-1)/(j-c+1) * (1-p) * j/(j+1-p)
  // is at most rho_i = i/(i-c+2) * (1-p): the first factor decreases in j and
  // the last is below 1. Once rho_i < 1 the tail after t_i is bounded by the
  // geometric sum t_i rho_i / (1 - rho_i).
  constexpr std::uint64_t kMaxTerms = 100'000'000;
  for (std::uint64_t i = c + 1;; ++i) {
    const double term = std::exp(log_lambda_term(i, c, p));
    sum.add(term);
    ++out.terms;
    const double rho = static_cast<double>(i) / static_cast<double>(i - c + 2) * (1.0 - p);
    if (rho < 1.0) {
      const double tail = term * rho / (1.0 - rho);
      const double partial = sum.value();
      if (tail < tolerance && (partial == 0.0 || term / partial < 1e-15)) {
        out.value = partial;
        out.error_bound = tail;
        return out;
      }
    }
    if (out.terms > kMaxTerms) {
      // Geometric decay makes this unreachable for p in (0, 1).
      throw std::logic_error("lambda_series failed to converge");
    }
  }
}

double expected_count(std::uint64_t n, std::uint64_t c, SimonParams params) {
  if (c < 1) throw DomainError("colors are labeled from 1");
  if (n < c) {
    std::ostringstream os;
    os << "E[K_{n,c}] is defined for n >= c; got n=" << n << ", c=" << c;
    throw DomainError(os.str());
  }
  const double p = params.p();
  if (n == c) return std::pow(p, static_cast<double>(c - 1));

  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const auto cd = static_cast<double>(c);
  // Gamma(n-p+1) / Gamma(n)
  const double log_growth = log_gamma_ratio(static_cast<double>(n), 1.0 - p);
  // p^(c-1) Gamma(c) / Gamma(c-p+1)
  const double log_boundary = (cd - 1.0) * log_p - log_gamma_ratio(cd, 1.0 - p);
  CompensatedSum s;
  s.add(std::exp(log_growth + log_boundary));
  if (c >= 2) {
    const double log_scale = (cd - 1.0) * log_p - cd * log_q + log_growth;
    for (std::uint64_t i = c + 1; i <= n; ++i) {
      const double t = log_scale + log_lambda_term(i, c, p);
      if (t < -745.0) {
        // Remaining terms decay geometrically once past the binomial mode.
        if (static_cast<double>(i) > static_cast<double>(c) / p + 10.0) break;
        continue;
      }
      s.add(std::exp(t));
    }
  }
  return s.value();
}

Color1Mean expected_count_color1(std::uint64_t n, SimonParams params) {
  if (n < 1) throw DomainError("expected_count_color1 needs n >= 1");
  const double p = params.p();
  const auto nd = static_cast<double>(n);
  const double lg2p = std::lgamma(2.0 - p);
  const double exact = std::exp(log_gamma_ratio(nd, 1.0 - p) - lg2p);
  const double asym = std::exp((1.0 - p) * std::log(nd) - lg2p);
  return {exact, asym, std::abs(exact - asym)};
}

BoundedValue asymptotic_prefactor(std::uint64_t c, SimonParams params) {
  if (c < 2) throw DomainError("asymptotic_prefactor needs c >= 2");
  const double p = params.p();
  const auto cd = static_cast<double>(c);
  const BoundedValue lambda = lambda_series(c, params, Limit{1e-12});
  const double pc = std::pow(p, cd - 1.0);
  const double inv_qc = std::exp(-cd * std::log1p(-p));
  const double boundary = std::exp(-log_gamma_ratio(cd, 1.0 - p));  // Gamma(c)/Gamma(c-p+1)
  BoundedValue out;
  out.value = pc * (lambda.value * inv_qc + boundary);
  out.error_bound = pc * inv_qc * lambda.error_bound.value_or(0.0);
  out.terms = lambda.terms;
  return out;
}

double dynamic_mean_color1(const std::function<double(std::uint64_t)> &p_of,
                           std::uint64_t n) {
  if (n < 1) throw DomainError("dynamic_mean_color1 needs n >= 1");
  CompensatedSum log_product;
  for (std::uint64_t i = 2; i <= n; ++i) {
    const double p = p_of(i);
    // (i - p) / (i - 1) = 1 + (1 - p) / (i - 1)
    log_product.add(std::log1p((1.0 - p) / static_cast<double>(i - 1)));
  }
  return std::exp(log_product.value());
}

double dynamic_mean_color1(const TriggerSchedule &schedule, std::uint64_t n) {
  return dynamic_mean_color1([&](std::uint64_t i) { return schedule(i); }, n);
}

}  // namespace faqurn::simon
