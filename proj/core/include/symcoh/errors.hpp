// Copyright 2026 The symcoh Authors.
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

#ifndef SYMCOH_ERRORS_HPP
#define SYMCOH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symcoh {

/// Base of every error thrown by the library. `kind()` is a stable
/// machine-readable tag used in JSON error documents.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  [[nodiscard]] const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Input data is well-formed but mathematically invalid (bad structure
/// constants, bad decomposition, size guard). The CLI maps these to exit 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A library invariant failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message) : Error("InternalError", message) {}
};

class ParseError : public ValidationError {
 public:
  explicit ParseError(const std::string& message) : ValidationError("ParseError", message) {}
};

class DimensionMismatch : public ValidationError {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : ValidationError("DimensionMismatch", "dimension mismatch: expected " + std::to_string(expected) +
                                                 ", got " + std::to_string(actual)) {}
};

class SizeLimit : public ValidationError {
 public:
  SizeLimit(std::size_t requested, std::size_t limit)
      : ValidationError("SizeLimit", "exterior space of dimension " + std::to_string(requested) +
                                         " exceeds the guard " + std::to_string(limit)),
        requested_(requested) {}
  [[nodiscard]] std::size_t requested() const noexcept { return requested_; }

 private:
  std::size_t requested_;
};

}  // namespace symcoh

#endif  // SYMCOH_ERRORS_HPP
