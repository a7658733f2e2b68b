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

#ifndef ASRED_EXPR_HPP
#define ASRED_EXPR_HPP

// Text form of coefficients in L.
//
//   ratfunc  := poly | poly "/" poly
//   poly     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := "-" factor | primary ("^" nat)?
//   primary  := nat | var | "g" | "(" ratfunc ")"
//
// "g" denotes the generator of F_{p^e} and is only available when e > 1.
// The top-level "/" binds loosest, so "u^2/u^2+1" is u^2/(u^2+1).
// Whitespace is ignored.
//
// The formatter emits the canonical form: terms in decreasing grlex order,
// coefficients of F_{p^e} expanded over powers of g (e.g. "g*u+u" for
// (g+1)*u), integers in [0, p), and no parentheses. Parsing the output
// reproduces the same value, so format(parse(format(x))) == format(x).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "asred/field_tower.hpp"

namespace asred {

/// Throws ParseError (column is 1-based within `text`).
RatFunc parse_ratfunc(const FieldRef& field, std::string_view text);

/// Parses a monic polynomial in "g" over F_p, returning coefficients low degree first.
std::vector<std::uint64_t> parse_modulus(std::uint64_t p, std::string_view text);

std::string format_poly(const Poly& f);
std::string format_ratfunc(const RatFunc& f);
std::string format_modulus(const FieldParams& fp);

}  // namespace asred

#endif  // ASRED_EXPR_HPP
