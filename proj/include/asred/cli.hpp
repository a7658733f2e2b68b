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

#ifndef ASRED_CLI_HPP
#define ASRED_CLI_HPP

// Subcommand bodies of the asred tool, kept out of main() so tests can
// drive them with string streams.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "asred/equation.hpp"

namespace asred::cli {

enum ExitCode : int {
  kOk = 0,
  kViolations = 1,
  kParseError = 2,
  kPreconditionError = 3,
  kInternalError = 4,
  kIoError = 5,
};

/// "-" reads standard input.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// z^p - z = ... in the uniformizer of `eq` ("pi" when E = 0, else "t").
std::string format_rhs(const ASEquation& eq);
std::string summarize(const ReductionTrace& trace);

int cmd_reduce(const std::string& path, const std::optional<std::string>& trace_path,
               std::optional<std::size_t> max_passes, std::ostream& out, std::ostream& err);

int cmd_check(const std::string& trace_path, std::ostream& out, std::ostream& err);

struct ExampleOptions {
  std::uint64_t p = 2;
  unsigned e = 1;
  std::string modulus;
  std::string vars = "u";
  std::string c0 = "u";
  std::string c1 = "0";
  std::string m1 = "1";
};

int cmd_example(const ExampleOptions& opts, std::ostream& out, std::ostream& err);

struct FuzzOptions {
  std::uint64_t p = 2;
  unsigned e = 1;
  std::string modulus;
  std::string vars = "u";
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t terms = 4;
  std::uint64_t max_exp = 8;
  unsigned max_deg = 4;
  double family_weight = 0.5;
  std::optional<std::string> report_path;
};

int cmd_fuzz(const FuzzOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace asred::cli

#endif  // ASRED_CLI_HPP
