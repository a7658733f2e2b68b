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

#include <algorithm>

#include "asred/certificate.hpp"
#include "asred/diffcheck.hpp"
#include "asred/expr.hpp"
#include "asred/trace_io.hpp"

using namespace asred;

namespace {

FieldRef f2() { return FieldParams::make(2, 1, {}, {"u"}); }

RatFunc R(const FieldRef& f, const char* s) { return parse_ratfunc(f, s); }

bool has_kind(const std::vector<Violation>& vs, const std::string& kind) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == kind; });
}

ReductionTrace collapse_trace() {
  const auto f = f2();
  return reduce(make_example_family(f, R(f, "u"), RatFunc(f), BigInt(1)));
}

ReductionTrace restart_trace() {
  const auto f = f2();
  return reduce(make_example_family(f, R(f, "u"), R(f, "u^2"), BigInt(1)));
}

}  // namespace

TEST_CASE("as_operator") {
  SUBCASE("p = 2: u t^-2 -> u^2 t^-4 + u t^-2") {
    const auto f = f2();
    LaurentPoly d(f);
    d.add_term(-2, R(f, "u"));
    LaurentPoly want(f);
    want.add_term(-4, R(f, "u^2"));
    want.add_term(-2, R(f, "u"));  // -u = u in characteristic 2
    CHECK(as_operator(d) == want);
  }
  SUBCASE("p = 3: t^-1 -> t^-3 + 2 t^-1") {
    const auto f = FieldParams::make(3, 1, {}, {"u"});
    LaurentPoly d(f);
    d.add_term(-1, R(f, "1"));
    LaurentPoly want(f);
    want.add_term(-3, R(f, "1"));
    want.add_term(-1, R(f, "2"));
    CHECK(as_operator(d) == want);
  }
  SUBCASE("constants of F_p are fixed") {
    const auto f = FieldParams::make(5, 1, {}, {"u"});
    LaurentPoly d(f);
    d.add_term(0, R(f, "3"));
    CHECK(as_operator(d).is_zero());
  }
}

TEST_CASE("property: as_operator is additive") {
  for (const FieldRef& f : {f2(), FieldParams::make(3, 2, {1, 0, 1}, {"u"})}) {
    GenConfig cfg;
    cfg.field = f;
    cfg.seed = 17;
    Generator gen(cfg);
    for (int i = 0; i < 100; ++i) {
      LaurentPoly a(f), b(f);
      for (int k = -4; k <= 0; ++k) {
        if (i % 2 == 0 || k % 2 == 0) a.add_term(k, gen.random_ratfunc(3));
        b.add_term(k - i % 3, gen.random_ratfunc(3));
      }
      CHECK(as_operator(a + b) == as_operator(a) + as_operator(b));
    }
  }
}

TEST_CASE("to_laurent") {
  const auto f = f2();
  const ASEquation eq = ASEquation::make(f, {{BigInt(2), R(f, "u")}}, R(f, "1"));
  const LaurentPoly l = to_laurent(eq);
  CHECK(l.terms().size() == 2);
  CHECK(l.terms().at(-2) == R(f, "u"));
  CHECK(l.terms().at(0) == R(f, "1"));
}

TEST_CASE("verify_pass on honest passes") {
  const ReductionTrace t = collapse_trace();
  REQUIRE(t.passes.size() == 1);
  CHECK(verify_pass(t.initial, t.passes[0]).empty());
  CHECK(verify_trace(t).empty());

  const ReductionTrace r = restart_trace();
  CHECK(verify_trace(r).empty());
}

TEST_CASE("verify_pass catches tampering") {
  const auto f = f2();
  const ReductionTrace t = collapse_trace();

  SUBCASE("extra coefficient in the result") {
    PassRecord p = t.passes[0];
    p.result.terms.emplace(4, R(f, "u"));
    CHECK(has_kind(verify_pass(t.initial, p), "wp_identity"));
  }
  SUBCASE("nu = 2") {
    PassRecord p = t.passes[0];
    p.nu = 2;
    const auto vs = verify_pass(t.initial, p);
    CHECK(has_kind(vs, "nu_minimality"));
    CHECK(has_kind(vs, "kstep"));
  }
  SUBCASE("mu = 0") {
    PassRecord p = t.passes[0];
    p.mu = 0;
    CHECK(has_kind(verify_pass(t.initial, p), "mu"));
  }
  SUBCASE("replacement exponent") {
    PassRecord p = t.passes[0];
    p.replacements[0].exponent = -2;
    CHECK(has_kind(verify_pass(t.initial, p), "replacement_chain"));
  }
  SUBCASE("replacement coefficient") {
    PassRecord p = t.passes[0];
    p.replacements[0].coeff = R(f, "u+1");
    const auto vs = verify_pass(t.initial, p);
    CHECK(has_kind(vs, "replacement_chain"));
    CHECK(has_kind(vs, "wp_identity"));
  }
  SUBCASE("merges") {
    PassRecord p = t.passes[0];
    p.merges.clear();
    CHECK(has_kind(verify_pass(t.initial, p), "merges"));
  }
  SUBCASE("sets") {
    PassRecord p = t.passes[0];
    p.sets.I.push_back(p.sets.J.back());
    p.sets.J.pop_back();
    CHECK(has_kind(verify_pass(t.initial, p), "sets"));
  }
  SUBCASE("result E") {
    PassRecord p = t.passes[0];
    p.result.E += 1;
    CHECK(has_kind(verify_pass(t.initial, p), "ramification"));
  }
}

TEST_CASE("verify_trace catches bad derivations") {
  const auto f = f2();
  SUBCASE("restart without a decrease in |J|") {
    ReductionTrace t = restart_trace();
    REQUIRE(t.passes.size() == 2);
    t.passes[1].sets.J.push_back(99);
    CHECK(has_kind(verify_trace(t), "j_monotonicity"));
  }
  SUBCASE("NORMAL_FORM claimed while the leading coefficient is u^2") {
    ReductionTrace t = restart_trace();
    t.passes.pop_back();
    t.terminal = TerminalState{TerminalTag::NormalForm, t.passes[0].result};
    CHECK(has_kind(verify_trace(t), "terminal_tag"));
  }
  SUBCASE("wrong tag") {
    ReductionTrace t = collapse_trace();
    t.terminal->tag = TerminalTag::Trivial;
    CHECK(has_kind(verify_trace(t), "terminal_tag"));
  }
  SUBCASE("wrong terminal E") {
    ReductionTrace t = collapse_trace();
    t.terminal->equation.E = 5;
    const auto vs = verify_trace(t);
    CHECK((has_kind(vs, "ramification") || has_kind(vs, "terminal_equation")));
  }
  SUBCASE("missing terminal") {
    ReductionTrace t = collapse_trace();
    t.terminal.reset();
    CHECK(has_kind(verify_trace(t), "terminal_missing"));
  }
  SUBCASE("extra pass on a terminal equation") {
    const ReductionTrace t = reduce(ASEquation::make(f, {{BigInt(3), R(f, "1")}, {BigInt(1), R(f, "u")}}));
    ReductionTrace bad = t;
    bad.initial = ASEquation::make(f, {{BigInt(3), R(f, "1")}});
    CHECK_FALSE(verify_trace(bad).empty());
  }
  SUBCASE("initial equation already ramified") {
    ReductionTrace t = collapse_trace();
    t.initial.E = 1;
    CHECK(has_kind(verify_trace(t), "initial"));
  }
}

TEST_CASE("trace JSON") {
  const ReductionTrace t = restart_trace();
  const std::string s = emit_trace(t);
  const ReductionTrace back = parse_trace(s);
  CHECK(emit_trace(back) == s);
  CHECK(back.passes.size() == 2);
  CHECK(back.terminal->tag == TerminalTag::NormalForm);
  CHECK(verify_trace(back).empty());

  const Json j = Json::parse(s);
  CHECK(j["params"]["p"] == "2");
  CHECK(j["params"]["modulus"].is_null());
  CHECK(j["terminal"]["tag"] == "NORMAL_FORM");
  CHECK(j["terminal"]["E"] == "4");
  CHECK(j["passes"][0]["merges"][0] == "4");

  CHECK_THROWS_AS(parse_trace("{"), ParseError);
  CHECK_THROWS_AS(parse_trace("{}"), ParseError);
  CHECK_THROWS_AS(parse_trace("[1,2]"), ParseError);
  Json bad = j;
  bad["passes"][0]["nu"] = 1;
  CHECK_THROWS_AS(parse_trace(bad.dump()), ParseError);
  bad = j;
  bad["terminal"]["E"] = "3";
  CHECK_THROWS_AS(parse_trace(bad.dump()), ParseError);
  bad = j;
  bad["passes"][0]["depths"][0]["depth"] = "deep";
  CHECK_THROWS_AS(parse_trace(bad.dump()), ParseError);
}

TEST_CASE("property: traces round-trip byte for byte and verify") {
  for (const FieldRef& f : {f2(), FieldParams::make(3, 1, {}, {"u"}), FieldParams::make(3, 2, {1, 0, 1}, {"u"}),
                            FieldParams::make(2, 1, {}, {"u", "v"})}) {
    GenConfig cfg;
    cfg.field = f;
    cfg.seed = 404;
    cfg.max_degree = 3;
    Generator gen(cfg);
    for (int i = 0; i < 80; ++i) {
      const ReductionTrace t = reduce(gen.next());
      const std::string s = emit_trace(t);
      CHECK(emit_trace(parse_trace(s)) == s);
      const auto vs = verify_trace(t);
      CHECK(vs.empty());
      for (const auto& v : vs) MESSAGE(to_string(v));
    }
  }
}
