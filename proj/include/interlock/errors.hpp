// Copyright 2026 The Interlock Sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INTERLOCK_ERRORS_HPP_
#define INTERLOCK_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace interlock {

// Raised by the pure formula layer when an argument is outside the
// function's domain (negative depth, angle at 90 deg, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct FieldError {
  std::string field;    // dotted path, e.g. "vehicle.rear_spikes.max_depth_m"
  std::string message;
};

class InvalidConfig : public std::invalid_argument {
 public:
  explicit InvalidConfig(std::vector<FieldError> errors);
  InvalidConfig(std::string field, std::string message)
      : InvalidConfig(std::vector<FieldError>{{std::move(field), std::move(message)}}) {}

  const std::vector<FieldError>& errors() const noexcept { return errors_; }

 private:
  static std::string Summarize(const std::vector<FieldError>& errors);
  std::vector<FieldError> errors_;
};

}  // namespace interlock

#endif  // INTERLOCK_ERRORS_HPP_
