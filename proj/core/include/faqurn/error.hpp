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

#ifndef FAQURN_ERROR_HPP_
#define FAQURN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace faqurn {

/// Invalid parameters or malformed input (histories, schedules, files).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A formula was evaluated outside its domain, e.g. E[K_{n,c}] with n < c.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured size limit was exceeded (color capacity, enumeration
/// horizon, dynamic-programming size).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Parameter estimation produced values outside the model's admissible range.
class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace faqurn

#endif  // FAQURN_ERROR_HPP_
