// Copyright 2026 The speclab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPECLAB_CORE_ERRORS_HPP
#define SPECLAB_CORE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace speclab {

// Numeric values are mirrored by speclab_status in the public C header.
enum class ErrorCode : int {
  kContract = 1,
  kDegenerateInput = 2,
  kNumericalFailure = 3,
  kNoConvergence = 4,
  kSizeGuard = 5,
  kParse = 6,
  kSchema = 7,
  kIo = 8,
  kUsage = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Violated precondition: mismatched dimensions, domains, bad parameters.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what)
      : Error(ErrorCode::kContract, what) {}
};

class DegenerateInputError : public Error {
 public:
  explicit DegenerateInputError(const std::string& what)
      : Error(ErrorCode::kDegenerateInput, what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(ErrorCode::kNumericalFailure, what) {}
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::size_t iterations)
      : Error(ErrorCode::kNoConvergence,
              what + " (after " + std::to_string(iterations) + " iterations)"),
        iterations_(iterations) {}
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::size_t iterations_;
};

class SizeGuardError : public Error {
 public:
  explicit SizeGuardError(const std::string& what)
      : Error(ErrorCode::kSizeGuard, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Plan validation failure; `pointer` is the JSON pointer of the bad field.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& pointer, const std::string& what)
      : Error(ErrorCode::kSchema, pointer + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::kIo, what) {}
};

// Bad command-line or API selector, such as an unknown suite name.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what)
      : Error(ErrorCode::kUsage, what) {}
};

}  // namespace speclab

#endif  // SPECLAB_CORE_ERRORS_HPP
