/* Copyright (C) 2026 The asred Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef ASRED_ERRORS_HPP
#define ASRED_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asred {

/// Malformed input text: equation files, coefficient expressions, trace
/// documents. Line and column are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0 && column == 0) return what;
    if (line == 0) return "column " + std::to_string(column) + ": " + what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A caller violated an operation's precondition (non-prime p, c0 in L^p, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Something that cannot happen did happen. Always a bug in this library.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace asred

#endif  // ASRED_ERRORS_HPP
