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

#ifndef FAQURN_UPDATE_FUNCTION_HPP_
#define FAQURN_UPDATE_FUNCTION_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace faqurn {

/// The weight map F: a color observed k times carries weight F(k) in the urn.
///
/// Three families are supported:
///   - Linear:     F(k) = rho * k + rho_tilde, rho > 0, rho + rho_tilde > 0
///   - PowerRoot:  F(k) = k^(1/rho), rho > 1
///   - Tabulated:  F(k) = values[k-1] for k within the table; beyond the
///                 table F continues with the last finite difference, which
///                 keeps it strictly increasing.
///
/// Values are immutable and cheap to copy; tabulated storage is shared, so an
/// UpdateFunction can be handed to many threads at once.
class UpdateFunction {
 public:
  enum class Kind { kLinear, kPowerRoot, kTabulated };

  /// Simon's update function F(k) = k.
  UpdateFunction() : UpdateFunction(linear(1.0, 0.0)) {}

  static UpdateFunction linear(double rho, double rho_tilde);
  static UpdateFunction power_root(double rho);
  /// `values` are F(1), F(2), ...; at least two entries, positive and
  /// strictly increasing.
  static UpdateFunction tabulated(std::vector<double> values);
  /// Convenience: the table k^exponent for k = 1..size.
  static UpdateFunction tabulated_power(double exponent, std::size_t size);

  /// F(k) for k >= 1.
  double operator()(std::uint64_t k) const noexcept;

  Kind kind() const noexcept { return kind_; }
  /// rho for Linear and PowerRoot; unset for Tabulated.
  std::optional<double> rho() const noexcept;
  /// rho_tilde for Linear; unset otherwise.
  std::optional<double> rho_tilde() const noexcept;
  /// eta = rho_tilde / rho for Linear; unset otherwise.
  std::optional<double> eta() const noexcept;
  std::span<const double> table() const noexcept;

  /// True when every weight F(k) is an integer-valued double, so running
  /// sums of weights are exact.
  bool integral_weights() const noexcept;

  std::string describe() const;

  friend bool operator==(const UpdateFunction &a, const UpdateFunction &b);

 private:
  UpdateFunction(Kind kind, double a, double b,
                 std::shared_ptr<const std::vector<double>> table)
      : kind_(kind), a_(a), b_(b), table_(std::move(table)) {}

  Kind kind_;
  double a_;  // rho
  double b_;  // rho_tilde (Linear), 1/rho (PowerRoot)
  std::shared_ptr<const std::vector<double>> table_;
};

}  // namespace faqurn

#endif  // FAQURN_UPDATE_FUNCTION_HPP_
