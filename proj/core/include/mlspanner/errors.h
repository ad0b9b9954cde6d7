// Copyright 2026 The mlspanner Authors
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

#ifndef MLSPANNER_ERRORS_H_
#define MLSPANNER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mlspanner {

// Invalid vertex ids, non-edges, stretch below one and similar contract
// violations on the caller's side.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed instance, solution or config text. `line()` is 1-based; 0 when
// the error is not tied to a particular line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line),
        detail_(message) {}

  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  std::string detail_;
};

// A terminal pair that must be connected is not.
class DisconnectedError : public std::runtime_error {
 public:
  DisconnectedError(int u, int v)
      : std::runtime_error("vertices " + std::to_string(u) + " and " +
                           std::to_string(v) + " are disconnected"),
        u_(u),
        v_(v) {}

  int u() const { return u_; }
  int v() const { return v_; }

 private:
  int u_;
  int v_;
};

// Raised by exact subroutines that hit their resource cap, or when an exact
// single-level solve is asked for an infeasible instance.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mlspanner

#endif  // MLSPANNER_ERRORS_H_
