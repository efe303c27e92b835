// Copyright 2026 The goalbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GOALBENCH_ERROR_H_
#define GOALBENCH_ERROR_H_

#include <stdexcept>
#include <string>

namespace goalbench {

// Raised when a caller breaks a documented precondition (shape mismatch,
// out-of-range parameter, stepping a finished episode, ...).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what)
      : std::invalid_argument(what) {}
};

// Raised when a gradient, loss or parameter becomes NaN or infinite.
class NonFiniteError : public std::runtime_error {
 public:
  explicit NonFiniteError(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised for unreadable, truncated or malformed files.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace goalbench

#endif  // GOALBENCH_ERROR_H_
