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

#ifndef ASRED_DIFFCHECK_HPP
#define ASRED_DIFFCHECK_HPP

// Random equations, the recombination family, and a differential harness
// that runs the single-pass procedure (whose leading-coefficient claim can
// fail) next to the corrected loop.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "asred/equation.hpp"
#include "asred/trace_io.hpp"

namespace asred {

struct GenConfig {
  FieldRef field;
  std::size_t min_terms = 1;
  std::size_t max_terms = 4;
  std::uint64_t max_exponent = 8;
  unsigned max_degree = 4;
  std::uint64_t seed = 1;
  /// Probability that an instance is built around the recombination family.
  double family_weight = 0.5;
  std::size_t count = 100;
  /// Relative weights for drawing a coefficient from K, L^p \ K, or all of L.
  std::array<double, 3> strata{1.0, 1.0, 2.0};
  /// Draw a nonzero a_0 half of the time.
  bool random_a0 = true;

  /// Throws PreconditionError on empty ranges or a weight outside [0, 1].
  void validate() const;
};

/// Deterministic equation source: the same config yields the same sequence.
class Generator {
public:
  explicit Generator(GenConfig cfg);

  ASEquation next();

  RatFunc random_ratfunc(unsigned max_degree);
  /// Nonzero, not in K, not in L^p.
  RatFunc random_non_power(unsigned max_degree);
  /// Nonzero and in L^p \ K.
  RatFunc random_power(unsigned max_degree);
  FqElem random_nonzero_fq();

private:
  std::uint64_t below(std::uint64_t n);
  bool chance(double w);
  Poly random_poly(unsigned max_degree);
  RatFunc random_coefficient();
  ASEquation uniform_instance();
  ASEquation family_instance();

  GenConfig cfg_;
  std::mt19937_64 rng_;
};

/// {m1 p: c0^p, m1: c1 - c0}, a0 = 0. Requires c0 ∉ K ∪ L^p, c1 ∈ L^p (0 allowed),
/// m1 >= 1; throws PreconditionError otherwise.
ASEquation make_example_family(const FieldRef& field, const RatFunc& c0, const RatFunc& c1, const BigInt& m1);

struct OriginalOutcome {
  bool asserted = true;
  /// J was empty, so no pass ran and the claim holds by convention.
  bool vacuous = false;
  /// Leading coefficient after the single pass, absent if nothing survived.
  std::optional<RatFunc> leading;
  std::optional<PassOutcome> pass;
};

/// One plan_pass + apply_pass, then the claim "the most negative exponent
/// carries a coefficient outside L^p".
OriginalOutcome run_original_epp(const ASEquation& eq);

struct Counterexample {
  std::size_t run = 0;
  ASEquation input;
  std::vector<BigInt> first_pass_merges;
  TerminalTag tag = TerminalTag::Trivial;
  std::size_t passes = 0;
};

struct DiffReport {
  std::size_t total = 0;
  std::size_t original_holds = 0;
  /// Claim failed, corrected loop still reached a terminal state.
  std::size_t counterexamples = 0;
  /// The corrected loop itself threw.
  std::size_t failures = 0;
  /// Subset of original_holds where J was empty.
  std::size_t vacuous = 0;
  std::size_t verifier_violations = 0;
  std::map<TerminalTag, std::size_t> terminals;
  std::vector<Counterexample> counterexample_list;
  std::vector<std::string> failure_list;
};

DiffReport differential_campaign(const GenConfig& cfg);

Json report_to_json(const DiffReport& report, const GenConfig& cfg);
std::string emit_report(const DiffReport& report, const GenConfig& cfg);

}  // namespace asred

#endif  // ASRED_DIFFCHECK_HPP
