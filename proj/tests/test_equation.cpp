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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <initializer_list>
#include <utility>

#include "asred/diffcheck.hpp"
#include "asred/equation.hpp"
#include "asred/expr.hpp"
#include "oracles.hpp"

using namespace asred;

namespace {

FieldRef f2() { return FieldParams::make(2, 1, {}, {"u"}); }
FieldRef f3() { return FieldParams::make(3, 1, {}, {"u"}); }

ASEquation eq_of(const FieldRef& f, std::initializer_list<std::pair<int, const char*>> terms, const char* a0 = "0") {
  std::map<BigInt, RatFunc> t;
  for (const auto& [m, c] : terms) t.emplace(BigInt(m), parse_ratfunc(f, c));
  return ASEquation::make(f, t, parse_ratfunc(f, a0));
}

std::vector<BigInt> big(std::initializer_list<int> v) {
  std::vector<BigInt> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

std::map<BigInt, RatFunc> terms_of(const FieldRef& f, std::initializer_list<std::pair<int, const char*>> terms) {
  return eq_of(f, terms).terms;
}

}  // namespace

TEST_CASE("ASEquation::make") {
  const auto f = f2();
  const ASEquation eq = eq_of(f, {{3, "u+u"}, {1, "u"}});
  CHECK(eq.terms.size() == 1);
  CHECK(eq.N() == 1);
  CHECK(eq_of(f, {}).N() == 0);
  CHECK_THROWS_AS(eq_of(f, {{0, "u"}}), PreconditionError);
}

TEST_CASE("compute_sets") {
  const auto f = f2();
  CHECK(compute_sets(eq_of(f, {{2, "u^2"}, {1, "u"}})) == SetsIJ{{}, big({1, 2})});
  CHECK(compute_sets(eq_of(f, {{3, "1"}})) == SetsIJ{big({3}), {}});
  CHECK(compute_sets(eq_of(f, {{2, "u"}, {1, "1"}})) == SetsIJ{big({1}), big({2})});
}

TEST_CASE("choose_nu") {
  CHECK(choose_nu(SetsIJ{big({3}), big({1})}, 2) == 2);
  CHECK(choose_nu(SetsIJ{{}, big({5})}, 3) == 1);
  CHECK(choose_nu(SetsIJ{big({1}), big({2})}, 2) == 1);
  CHECK(choose_nu(SetsIJ{big({100}), big({1, 7})}, 3) == 5);  // 3^4 = 81 <= 100 < 243
  CHECK_THROWS_AS(choose_nu(SetsIJ{big({1}), {}}, 2), PreconditionError);
}

TEST_CASE("compute_mu") {
  const auto f = f2();
  {
    const ASEquation eq = eq_of(f, {{1, "u"}, {2, "u^2"}});
    const MuResult r = compute_mu(eq, compute_sets(eq));
    CHECK(r.mu == 1);
    CHECK(r.depths.at(1) == Depth::finite(0));
    CHECK(r.depths.at(2) == Depth::finite(1));
  }
  {
    const ASEquation eq = eq_of(f, {{1, "u"}});
    CHECK(compute_mu(eq, compute_sets(eq)).mu == 0);
  }
  {
    const ASEquation eq = eq_of(f, {{1, "u^4+1"}});
    CHECK(compute_mu(eq, compute_sets(eq)).mu == 2);
  }
}

TEST_CASE("ramify") {
  const auto f = f2();
  const ASEquation r = ramify(eq_of(f, {{2, "u^2"}, {1, "u"}}), 2);
  CHECK(r.terms == terms_of(f, {{8, "u^2"}, {4, "u"}}));
  CHECK(r.E == 2);

  const ASEquation empty = ramify(eq_of(f, {}, "u"), 3);
  CHECK(empty.terms.empty());
  CHECK(empty.E == 3);
  CHECK(empty.a0 == parse_ratfunc(f, "u"));

  const ASEquation r3 = ramify(eq_of(f3(), {{1, "u"}}), 1);
  CHECK(r3.terms == terms_of(f3(), {{3, "u"}}));
  CHECK(r3.E == 1);
  CHECK_THROWS_AS(ramify(r3, 0), PreconditionError);

  // Exponents are unbounded.
  const ASEquation huge = ramify(eq_of(f3(), {{5, "u"}}), 80);
  CHECK(huge.terms.begin()->first == 5 * oracle::big_pow(3, 80));
}

TEST_CASE("plan_pass") {
  const auto f = f2();
  SUBCASE("recombination family: both J-targets land on 4") {
    const ASEquation eq = eq_of(f, {{2, "u^2"}, {1, "u"}});
    const PassPlan plan = plan_pass(eq, compute_sets(eq));
    CHECK(plan.nu == 1);
    CHECK(plan.mu == 1);
    CHECK(plan.terms.at(2).target_exponent == 4);
    CHECK(plan.terms.at(2).target_coeff == parse_ratfunc(f, "u"));
    CHECK(plan.terms.at(1).target_exponent == 4);
    CHECK(plan.terms.at(1).target_coeff == parse_ratfunc(f, "u"));
  }
  SUBCASE("single J-term") {
    const ASEquation eq = eq_of(f, {{1, "u"}});
    const PassPlan plan = plan_pass(eq, compute_sets(eq));
    CHECK(plan.nu == 1);
    CHECK(plan.mu == 0);
    CHECK(plan.terms.at(1).target_exponent == 2);
    CHECK(plan.terms.at(1).target_coeff == parse_ratfunc(f, "u"));
  }
  SUBCASE("I-term returns to its exponent with a K-root") {
    const ASEquation eq = eq_of(f, {{2, "u"}, {1, "1"}});
    const PassPlan plan = plan_pass(eq, compute_sets(eq));
    CHECK(plan.terms.at(1).roots == plan.kstep());
    CHECK(plan.terms.at(1).target_exponent == 1);
    CHECK(plan.terms.at(1).target_coeff == parse_ratfunc(f, "1"));
  }
  SUBCASE("F_9 I-term root") {
    const auto f9 = FieldParams::make(3, 2, {1, 0, 1}, {"u"});
    const ASEquation eq = eq_of(f9, {{2, "u"}, {1, "g"}});
    const PassPlan plan = plan_pass(eq, compute_sets(eq));
    REQUIRE(plan.kstep() == 1);
    CHECK(plan.terms.at(1).target_coeff == parse_ratfunc(f9, "2*g"));
  }
}

TEST_CASE("apply_pass") {
  const auto f = f2();
  SUBCASE("collapse") {
    const ASEquation eq = eq_of(f, {{2, "u^2"}, {1, "u"}});
    const PassOutcome out = apply_pass(eq, plan_pass(eq, compute_sets(eq)));
    CHECK(out.result.terms.empty());
    CHECK(out.result.E == 2);
    CHECK(out.merges == big({4}));
    REQUIRE(out.replacements.size() == 1);
    CHECK(out.replacements[0].source == 2);
    CHECK(out.replacements[0].exponent == -4);
    CHECK(out.replacements[0].coeff == parse_ratfunc(f, "u"));
  }
  SUBCASE("c1 = u^2 merges into a square") {
    const ASEquation eq =
        make_example_family(f, parse_ratfunc(f, "u"), parse_ratfunc(f, "u^2"), BigInt(1));
    CHECK(eq.terms == terms_of(f, {{2, "u^2"}, {1, "u^2+u"}}));
    const PassOutcome out = apply_pass(eq, plan_pass(eq, compute_sets(eq)));
    CHECK(out.result.terms == terms_of(f, {{4, "u^2"}}));
    CHECK(out.merges == big({4}));
  }
  SUBCASE("no collision") {
    const ASEquation eq = eq_of(f, {{1, "u"}});
    const PassOutcome out = apply_pass(eq, plan_pass(eq, compute_sets(eq)));
    CHECK(out.result.terms == terms_of(f, {{2, "u"}}));
    CHECK(out.merges.empty());
    CHECK(out.replacements.empty());
  }
  SUBCASE("a0 rides along") {
    const ASEquation eq = eq_of(f, {{1, "u"}}, "u^3+1");
    CHECK(apply_pass(eq, plan_pass(eq, compute_sets(eq))).result.a0 == parse_ratfunc(f, "u^3+1"));
  }
}

TEST_CASE("classify") {
  const auto f = f2();
  CHECK(classify(eq_of(f, {}))->tag == TerminalTag::Trivial);
  CHECK(classify(eq_of(f, {{3, "1"}, {1, "1"}}))->tag == TerminalTag::JEmpty);
  CHECK(classify(eq_of(f, {{8, "u"}}))->tag == TerminalTag::NormalForm);
  CHECK_FALSE(classify(eq_of(f, {{8, "u^2"}})));
  CHECK_FALSE(classify(eq_of(f, {{3, "u"}})));
  CHECK_THROWS_AS(classify(eq_of(f, {{3, "u"}}), true), InvariantError);

  ASEquation collapsed = eq_of(f, {});
  collapsed.E = 2;
  CHECK(classify(collapsed)->tag == TerminalTag::JEmpty);
}

TEST_CASE("reduce") {
  const auto f = f2();
  SUBCASE("collapse to a0 in one pass") {
    const ReductionTrace t = reduce(eq_of(f, {{2, "u^2"}, {1, "u"}}));
    CHECK(t.passes.size() == 1);
    REQUIRE(t.terminal);
    CHECK(t.terminal->tag == TerminalTag::JEmpty);
    CHECK(t.terminal->equation.terms.empty());
    CHECK(t.terminal->equation.a0.is_zero());
    CHECK(t.terminal->equation.E == 2);
  }
  SUBCASE("c1 = u^2: restart then normal form") {
    const ReductionTrace t =
        reduce(make_example_family(f, parse_ratfunc(f, "u"), parse_ratfunc(f, "u^2"), BigInt(1)));
    REQUIRE(t.passes.size() == 2);
    CHECK(t.passes[0].sets.J.size() == 2);
    CHECK(t.passes[1].sets.J.size() == 1);
    CHECK(t.passes[1].nu == 1);
    CHECK(t.passes[1].mu == 1);
    CHECK(t.terminal->tag == TerminalTag::NormalForm);
    CHECK(t.terminal->equation.terms == terms_of(f, {{8, "u"}}));
    CHECK(t.terminal->equation.E == 4);
  }
  SUBCASE("constants only") {
    const ReductionTrace t = reduce(eq_of(f, {{3, "1"}}));
    CHECK(t.passes.empty());
    CHECK(t.terminal->tag == TerminalTag::JEmpty);
  }
  SUBCASE("c1 in K moves the merged exponent into I") {
    const ReductionTrace t = reduce(make_example_family(f, parse_ratfunc(f, "u"), parse_ratfunc(f, "1"), BigInt(1)));
    CHECK(t.passes.size() == 1);
    CHECK(t.terminal->equation.terms == terms_of(f, {{4, "1"}}));
    CHECK(t.terminal->tag == TerminalTag::JEmpty);
  }
  SUBCASE("preconditions and pass limit") {
    ASEquation ramified = eq_of(f, {{1, "u"}});
    ramified.E = 1;
    CHECK_THROWS_AS(reduce(ramified), PreconditionError);
    try {
      reduce(eq_of(f, {{1, "u"}}), 0);
      FAIL("expected ReductionAborted");
    } catch (const ReductionAborted& e) {
      CHECK(e.partial().passes.empty());
      CHECK_FALSE(e.partial().terminal);
    }
  }
}

TEST_CASE("reduce agrees with the hand-applied definitions") {
  for (std::uint64_t p : {2, 3}) {
    GenConfig cfg;
    cfg.field = FieldParams::make(p, 1, {}, {"u"});
    cfg.seed = 21 + p;
    cfg.max_degree = 3;
    Generator gen(cfg);
    for (int i = 0; i < 60; ++i) {
      const ASEquation eq = gen.next();
      const ReductionTrace t = reduce(eq);
      const oracle::HandRun hand = oracle::hand_reduce(eq);
      CHECK(hand.j_sizes.size() == t.passes.size());
      for (std::size_t k = 0; k < std::min(hand.j_sizes.size(), t.passes.size()); ++k)
        CHECK(hand.j_sizes[k] == t.passes[k].sets.J.size());
      CHECK(hand.E == t.terminal->equation.E);
      CHECK(hand.final_terms == t.terminal->equation.terms);
      CHECK(hand.tag == to_string(t.terminal->tag));
    }
  }
}

TEST_CASE("property: pass invariants over generated equations") {
  for (const FieldRef& f : {f2(), f3(), FieldParams::make(2, 2, {1, 1, 1}, {"u", "v"})}) {
    GenConfig cfg;
    cfg.field = f;
    cfg.seed = 1234;
    cfg.max_degree = 3;
    Generator gen(cfg);
    const std::uint64_t p = f->p();
    for (int i = 0; i < 150; ++i) {
      const ASEquation eq = gen.next();
      const ReductionTrace t = reduce(eq);
      REQUIRE(t.terminal);
      CHECK(t.passes.size() <= compute_sets(eq).J.size());

      std::uint64_t E = 0;
      const ASEquation* before = &eq;
      for (std::size_t k = 0; k < t.passes.size(); ++k) {
        const PassRecord& pass = t.passes[k];
        // Uniformizer consistency.
        const ASEquation r = ramify(*before, pass.kstep);
        std::vector<BigInt> scaled, got;
        for (const auto& [m, c] : before->terms) scaled.push_back(m * oracle::big_pow(p, pass.kstep));
        for (const auto& [m, c] : r.terms) got.push_back(m);
        CHECK(scaled == got);

        // Pass shape and maximality.
        const PassPlan plan = plan_pass(*before, pass.sets);
        BigInt max_i = 0;
        for (const auto& s : pass.sets.I) max_i = std::max(max_i, plan.terms.at(s).target_exponent);
        for (const auto& m : pass.sets.J) {
          const TermPlan& tp = plan.terms.at(m);
          CHECK(tp.target_exponent % p == 0);
          CHECK(tp.target_exponent > max_i);
          CHECK_FALSE(ratfunc_pth_root(tp.target_coeff));
        }

        // Restart cause.
        if (k > 0) {
          CHECK_FALSE(t.passes[k - 1].merges.empty());
          CHECK(pass.sets.J.size() < t.passes[k - 1].sets.J.size());
        }
        E += pass.kstep;
        before = &pass.result;
      }
      CHECK(t.terminal->equation.E == E);
      // Classification soundness.
      const auto again = classify(t.terminal->equation);
      REQUIRE(again);
      CHECK(again->tag == t.terminal->tag);
    }
  }
}
