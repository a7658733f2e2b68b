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

#ifndef ASRED_CERTIFICATE_HPP
#define ASRED_CERTIFICATE_HPP

// Independent checking of reduction traces.
//
// Replacing z by z - d changes the right-hand side F into F - (d^p - d).
// Since X^p - X is additive, a whole pass with single-root steps d_1..d_r
// satisfies
//
//     ramify(F_before) - F_after  ==  D^p - D,      D = d_1 + ... + d_r,
//
// as an exact identity of Laurent polynomials in the new uniformizer. The
// verifier checks that identity, re-derives I, J, nu, mu and the depths from
// scratch, and re-evaluates the terminal predicate. It never calls into the
// reduction engine.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asred/equation.hpp"
#include "asred/field_tower.hpp"

namespace asred {

/// Finite Laurent polynomial over L in the current uniformizer.
class LaurentPoly {
public:
  using Terms = std::map<BigInt, RatFunc>;

  explicit LaurentPoly(FieldRef field) : field_(std::move(field)) {}

  const FieldRef& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BigInt& exponent, const RatFunc& c);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

private:
  FieldRef field_;
  Terms terms_;
};

/// The Artin-Schreier operator d -> d^p - d.
LaurentPoly as_operator(const LaurentPoly& d);

/// Right-hand side as a Laurent polynomial: a_{-m} at -m, a_0 at 0.
LaurentPoly to_laurent(const ASEquation& eq);

struct Violation {
  std::string kind;
  std::optional<std::size_t> pass;
  std::string detail;
};

std::string to_string(const Violation& v);

/// All violations of one pass record against the equation it was applied to.
std::vector<Violation> verify_pass(const ASEquation& before, const PassRecord& pass,
                                   std::optional<std::size_t> index = std::nullopt);

/// Empty iff `trace` is a valid derivation from its initial equation.
std::vector<Violation> verify_trace(const ReductionTrace& trace);

}  // namespace asred

#endif  // ASRED_CERTIFICATE_HPP
