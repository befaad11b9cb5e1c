// Copyright 2026 The dilaug Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace dilaug {

// Base of every error raised by the library. The CLI maps all of them to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke an operation's precondition (vertex out of range, bad
// parameter, malformed certificate).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Input text could not be parsed. `line()` is 1-based; 0 means the error is
// not tied to a single line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// The metric graph is disconnected, so pairwise distances are undefined.
class MetricError : public Error {
 public:
  using Error::Error;
};

// An engine was asked to solve an instance outside its domain.
class InapplicableError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search examined more candidates than its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A documented caller contract turned out to be false (e.g. G contains a
// K_{d,d} although the caller promised it does not).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace dilaug
