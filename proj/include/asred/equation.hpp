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

#ifndef ASRED_EQUATION_HPP
#define ASRED_EQUATION_HPP

// Artin-Schreier right-hand sides and the corrected reduction loop.
//
// An ASEquation stands for
//
//     z^p - z = sum_m a_{-m} tau^{-m} + a_0,        tau^{p^E} = pi,
//
// over L((tau)). The unknown z is never represented; only the right-hand side
// and the ramification level E are.
//
// One pass picks nu (the least nu >= 1 with min(J) p^nu > max(I)) and
// mu = max depth over J, ramifies by p^{nu+mu}, then replaces p-th powers by
// their roots: each I-term is rooted nu+mu times back to its old exponent,
// each J-term nu_m times (its depth). Distinct J-terms may land on the same
// exponent; their coefficients are summed, and if that pushes the leading
// coefficient into L^p the whole procedure starts over on the new equation.
// Every such restart merges J-terms, so |J| strictly drops and the loop runs
// at most |J| times.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asred/errors.hpp"
#include "asred/field_tower.hpp"

namespace asred {

struct ASEquation {
  FieldRef field;
  /// m -> a_{-m}; keys >= 1, no zero values.
  std::map<BigInt, RatFunc> terms;
  RatFunc a0;
  /// Cumulative ramification level.
  std::uint64_t E = 0;

  /// Drops zero coefficients and rejects exponents < 1.
  static ASEquation make(const FieldRef& field, const std::map<BigInt, RatFunc>& terms, RatFunc a0 = {},
                         std::uint64_t E = 0);

  /// Largest m with a nonzero coefficient, or 0.
  BigInt N() const;

  friend bool operator==(const ASEquation& a, const ASEquation& b) {
    return a.terms == b.terms && a.a0 == b.a0 && a.E == b.E;
  }
};

struct SetsIJ {
  std::vector<BigInt> I;  // coefficient in K
  std::vector<BigInt> J;  // coefficient not in K

  friend bool operator==(const SetsIJ&, const SetsIJ&) = default;
};

struct TermPlan {
  Depth depth = Depth::infinite();
  unsigned roots = 0;
  BigInt target_exponent;
  RatFunc target_coeff;
};

struct PassPlan {
  unsigned nu = 0;
  unsigned mu = 0;
  SetsIJ sets;
  /// source exponent m -> plan
  std::map<BigInt, TermPlan> terms;

  unsigned kstep() const { return nu + mu; }
};

/// One single-root replacement: d = coeff * tau^{exponent}, expressed in the
/// uniformizer after the pass's ramification. d^p was the term before this step.
struct Replacement {
  BigInt source;
  BigInt target;
  BigInt exponent;
  RatFunc coeff;

  friend bool operator==(const Replacement&, const Replacement&) = default;
};

struct PassOutcome {
  ASEquation result;
  std::vector<Replacement> replacements;
  /// Target exponents hit by two or more source terms.
  std::vector<BigInt> merges;
};

enum class TerminalTag { Trivial, NormalForm, JEmpty };

std::string to_string(TerminalTag tag);
/// Throws ParseError on an unknown name.
TerminalTag terminal_tag_from_string(const std::string& s);

struct TerminalState {
  TerminalTag tag;
  ASEquation equation;
};

struct PassRecord {
  SetsIJ sets;
  unsigned nu = 0;
  unsigned mu = 0;
  /// Depth of every coefficient of the pass input (I-terms are infinite).
  std::map<BigInt, Depth> depths;
  unsigned kstep = 0;
  std::vector<Replacement> replacements;
  std::vector<BigInt> merges;
  ASEquation result;
};

struct ReductionTrace {
  FieldRef field;
  ASEquation initial;
  std::vector<PassRecord> passes;
  /// Always set on traces returned by reduce(); may be missing on aborted or
  /// externally supplied traces.
  std::optional<TerminalState> terminal;
};

/// Thrown by reduce() when an internal invariant fails; carries everything
/// computed so far.
class ReductionAborted : public InvariantError {
public:
  ReductionAborted(const std::string& what, ReductionTrace partial)
      : InvariantError(what), partial_(std::move(partial)) {}
  const ReductionTrace& partial() const { return partial_; }

private:
  ReductionTrace partial_;
};

SetsIJ compute_sets(const ASEquation& eq);

/// Least nu >= 1 with min(J) * p^nu > max(I). Throws PreconditionError if J is empty.
unsigned choose_nu(const SetsIJ& sets, std::uint64_t p);

struct MuResult {
  unsigned mu = 0;
  std::map<BigInt, Depth> depths;  // J only
};

MuResult compute_mu(const ASEquation& eq, const SetsIJ& sets);

/// tau = t^{p^kstep}: every m becomes m p^kstep and E grows by kstep.
ASEquation ramify(const ASEquation& eq, unsigned kstep);

PassPlan plan_pass(const ASEquation& eq, const SetsIJ& sets);

PassOutcome apply_pass(const ASEquation& eq, const PassPlan& plan);

/// `after_pass` enables the internal check that a non-p-th-power leading
/// coefficient sits at an exponent divisible by p.
std::optional<TerminalState> classify(const ASEquation& eq, bool after_pass = false);

/// Runs the corrected loop. Requires eq.E == 0. `max_passes` defaults to
/// |J_initial| + 1; exceeding it raises ReductionAborted.
ReductionTrace reduce(const ASEquation& eq, std::optional<std::size_t> max_passes = std::nullopt);

BigInt pow_big(std::uint64_t base, unsigned exp);

}  // namespace asred

#endif  // ASRED_EQUATION_HPP
