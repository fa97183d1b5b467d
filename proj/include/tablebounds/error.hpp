// Copyright 2026 The tablebounds Authors
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

#ifndef TABLEBOUNDS_ERROR_HPP_
#define TABLEBOUNDS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tablebounds {

// Error categories. The numeric values double as CLI exit codes.
enum class ErrorKind {
  kSchema = 2,           // malformed input document or inconsistent family
  kRange = 3,            // index, parameter or value out of range
  kMissingMarginal = 4,  // a required marginal is neither released nor derivable
  kBudgetExhausted = 5,  // enumeration stopped before completion
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

inline Error SchemaError(const std::string& m) {
  return Error(ErrorKind::kSchema, m);
}
inline Error RangeError(const std::string& m) {
  return Error(ErrorKind::kRange, m);
}
inline Error MissingMarginalError(const std::string& m) {
  return Error(ErrorKind::kMissingMarginal, m);
}

}  // namespace tablebounds

#endif  // TABLEBOUNDS_ERROR_HPP_
