/*
 Copyright 2026 The singular-sos Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "singular_sos/polynomial.hpp"

namespace singular_sos {

/// Minimize `objective` over the real zeros of `constraints`. Inequalities from the input
/// are already converted: g >= 0 became g - z^2 = 0 with a fresh slack variable z.
struct Problem {
  std::vector<std::string> variables;  ///< declared variables followed by slacks
  std::size_t declared = 0;
  Polynomial objective;
  std::vector<Polynomial> constraints;

  std::size_t nvars() const { return variables.size(); }
  /// Compares the equality form only; `declared` is not part of it.
  bool operator==(const Problem& other) const {
    return variables == other.variables && objective == other.objective && constraints == other.constraints;
  }
};

class ProblemParseError : public std::runtime_error {
 public:
  ProblemParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Statements end with ';' and '#' starts a comment:
///
///     vars x1 x2;
///     minimize x1 + x2;
///     subject to x1^3 - x2^2 = 0;
///     subject to x1 >= 0;
///
/// Either side of a constraint may be an expression; `<=` is accepted as well.
Problem parse_problem(std::string_view text);
Problem read_problem_file(const std::string& path);

/// Canonical text; parse_problem(format_problem(p)) == p. Slacks are declared as ordinary
/// variables.
std::string format_problem(const Problem& p);

}  // namespace singular_sos
