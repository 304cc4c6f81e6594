// Copyright 2026 The jcontainers Authors
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

#ifndef JC_ERROR_HPP_
#define JC_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jc {

// Process exit codes shared by the CLI and the error hierarchy below.
enum class ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kInvalidInput = 2,
  kBudget = 3,
  kUndecided = 4,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const = 0;
};

// Malformed or out-of-range input; also contract violations by the caller.
class InputError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kInvalidInput; }
};

// An enumeration or iteration cap was hit.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t explored)
      : Error(what + " (explored " + std::to_string(explored) + ")"),
        explored_(explored) {}
  std::uint64_t explored() const { return explored_; }
  ExitCode exit_code() const override { return ExitCode::kBudget; }

 private:
  std::uint64_t explored_;
};

// A Janson query that the solver could not certify either way.
class UndecidedError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kUndecided; }
};

// A checked hypothesis of a lemma does not hold on the given instance.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kInvalidInput; }
};

}  // namespace jc

#endif  // JC_ERROR_HPP_
