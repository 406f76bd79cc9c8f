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

#include "faqurn/distribution.hpp"

#include <cmath>
#include <sstream>

#include "faqurn/error.hpp"
#include "faqurn/special.hpp"

namespace faqurn {

double ExactDistribution::total() const {
  CompensatedSum s;
  for (double p : probabilities) s.add(p);
  return s.value();
}

double ExactDistribution::mean() const {
  CompensatedSum s;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    s.add(static_cast<double>(offset + static_cast<std::int64_t>(i)) * probabilities[i]);
  }
  return s.value();
}

double ExactDistribution::variance() const {
  const double m = mean();
  CompensatedSum s;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double d = static_cast<double>(offset + static_cast<std::int64_t>(i)) - m;
    s.add(d * d * probabilities[i]);
  }
  return s.value();
}

void ExactDistribution::validate(double tolerance) const {
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (!(probabilities[i] >= 0.0)) {
      std::ostringstream os;
      os << "negative or NaN probability at value " << offset + static_cast<std::int64_t>(i);
      throw ValidationError(os.str());
    }
  }
  const double t = total();
  if (std::abs(t - 1.0) > tolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "probabilities sum to " << t;
    throw ValidationError(os.str());
  }
}

}  // namespace faqurn
