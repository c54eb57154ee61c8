// Copyright 2026 The stochvc Authors.
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

#ifndef STOCHVC_ERRORS_H_
#define STOCHVC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stochvc {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Structurally invalid graph (self-loop, duplicate edge, id out of range).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Numeric parameter outside its admissible range (p, epsilon, trials, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An exact path was asked to handle an instance above its size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Query outside the non-adaptive query set.
class ModelViolationError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

// Caller broke a documented precondition between arguments.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Formula evaluated outside its domain of validity.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace stochvc

#endif  // STOCHVC_ERRORS_H_
