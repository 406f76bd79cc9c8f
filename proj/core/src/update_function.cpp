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

#include "faqurn/update_function.hpp"

#include <cmath>
#include <sstream>

#include "faqurn/error.hpp"

namespace faqurn {

UpdateFunction UpdateFunction::linear(double rho, double rho_tilde) {
  if (!(rho > 0.0) || !std::isfinite(rho) || !std::isfinite(rho_tilde)) {
    throw ValidationError("linear update function needs finite rho > 0");
  }
  if (!(rho + rho_tilde > 0.0)) {
    throw ValidationError("linear update function needs F(1) = rho + rho_tilde > 0");
  }
  return UpdateFunction(Kind::kLinear, rho, rho_tilde, nullptr);
}

UpdateFunction UpdateFunction::power_root(double rho) {
  if (!(rho > 1.0) || !std::isfinite(rho)) {
    throw ValidationError("power-root update function needs finite rho > 1");
  }
  return UpdateFunction(Kind::kPowerRoot, rho, 1.0 / rho, nullptr);
}

UpdateFunction UpdateFunction::tabulated(std::vector<double> values) {
  if (values.size() < 2) {
    throw ValidationError("tabulated update function needs at least two values");
  }
  if (!(values.front() > 0.0)) {
    throw ValidationError("tabulated update function needs F(1) > 0");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw ValidationError("tabulated update function has a non-finite value");
    }
    if (i > 0 && !(values[i] > values[i - 1])) {
      std::ostringstream os;
      os << "tabulated update function is not strictly increasing at k=" << i + 1;
      throw ValidationError(os.str());
    }
  }
  return UpdateFunction(
      Kind::kTabulated, 0.0, 0.0,
      std::make_shared<const std::vector<double>>(std::move(values)));
}

UpdateFunction UpdateFunction::tabulated_power(double exponent, std::size_t size) {
  if (!(exponent > 0.0)) {
    throw ValidationError("tabulated power needs a positive exponent");
  }
  std::vector<double> values(size);
  for (std::size_t k = 1; k <= size; ++k) {
    values[k - 1] = std::pow(static_cast<double>(k), exponent);
  }
  return tabulated(std::move(values));
}

double UpdateFunction::operator()(std::uint64_t k) const noexcept {
  const auto x = static_cast<double>(k);
  switch (kind_) {
    case Kind::kLinear:
      return a_ * x + b_;
    case Kind::kPowerRoot:
      return std::pow(x, b_);
    case Kind::kTabulated: {
      const auto &t = *table_;
      if (k <= t.size()) return t[k - 1];
      const double slope = t[t.size() - 1] - t[t.size() - 2];
      return t.back() + slope * static_cast<double>(k - t.size());
    }
  }
  return 0.0;
}

std::optional<double> UpdateFunction::rho() const noexcept {
  if (kind_ == Kind::kTabulated) return std::nullopt;
  return a_;
}

std::optional<double> UpdateFunction::rho_tilde() const noexcept {
  if (kind_ != Kind::kLinear) return std::nullopt;
  return b_;
}

std::optional<double> UpdateFunction::eta() const noexcept {
  if (kind_ != Kind::kLinear) return std::nullopt;
  return b_ / a_;
}

std::span<const double> UpdateFunction::table() const noexcept {
  if (!table_) return {};
  return *table_;
}

bool UpdateFunction::integral_weights() const noexcept {
  auto integral = [](double v) { return std::nearbyint(v) == v && std::abs(v) < 0x1p52; };
  switch (kind_) {
    case Kind::kLinear:
      return integral(a_) && integral(b_);
    case Kind::kPowerRoot:
      return false;
    case Kind::kTabulated:
      for (double v : *table_) {
        if (!integral(v)) return false;
      }
      return true;
  }
  return false;
}

std::string UpdateFunction::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::kLinear:
      os << "linear(rho=" << a_ << ", rho_tilde=" << b_ << ")";
      break;
    case Kind::kPowerRoot:
      os << "power_root(rho=" << a_ << ")";
      break;
    case Kind::kTabulated:
      os << "tabulated(size=" << table_->size() << ")";
      break;
  }
  return os.str();
}

bool operator==(const UpdateFunction &a, const UpdateFunction &b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == UpdateFunction::Kind::kTabulated) {
    return a.table_ == b.table_ || *a.table_ == *b.table_;
  }
  return a.a_ == b.a_ && a.b_ == b.b_;
}

}  // namespace faqurn
