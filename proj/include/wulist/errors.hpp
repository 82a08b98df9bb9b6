// Copyright 2026 The wulist Authors.
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

#ifndef WULIST_ERRORS_HPP
#define WULIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wulist {

// Caller violated a documented precondition (bad sizes, mismatched fields,
// malformed input files).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically impossible request: division by zero, non-invertible
// residue, reducible modulus where a field was required.
class ArithmeticError : public std::domain_error {
 public:
  explicit ArithmeticError(const std::string& what)
      : std::domain_error(what) {}
};

// Decoding parameters cannot be chosen for the requested radius.
class ParameterError : public std::runtime_error {
 public:
  explicit ParameterError(const std::string& what)
      : std::runtime_error(what) {}
};

// A postcondition that the algorithms guarantee did not hold. Always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wulist

#endif  // WULIST_ERRORS_HPP
