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

#ifndef ASRED_EQUATION_FILE_HPP
#define ASRED_EQUATION_FILE_HPP

// Plain-text equation files:
//
//   # z^p - z = u^2 pi^-2 + u pi^-1
//   p=2
//   e=1
//   vars=u
//   term -2: u^2
//   term -1: u
//
// Header keys: p (required), e (default 1), modulus (a polynomial in g,
// required iff e > 1), vars (comma separated, default "u"). Headers come
// before the first term line. "term <exp>: <coefficient>" gives the
// coefficient of pi^<exp>, exp <= 0, at most one line per exponent; exp = 0
// is a_0. '#' starts a comment line.

#include <string>
#include <string_view>

#include "asred/equation.hpp"

namespace asred {

/// Throws ParseError carrying line and column.
ASEquation parse_equation_file(std::string_view text);

/// Canonical text; parse_equation_file(emit_equation_file(eq)) == eq.
/// Requires eq.E == 0.
std::string emit_equation_file(const ASEquation& eq);

}  // namespace asred

#endif  // ASRED_EQUATION_FILE_HPP
