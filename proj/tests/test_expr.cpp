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

#include "asred/diffcheck.hpp"
#include "asred/errors.hpp"
#include "asred/expr.hpp"

using namespace asred;

TEST_CASE("parse and format") {
  const auto f = FieldParams::make(2, 1, {}, {"u"});
  CHECK(format_ratfunc(parse_ratfunc(f, "u^2 + 1")) == "u^2+1");
  CHECK(format_ratfunc(parse_ratfunc(f, "u^2/u^2+1")) == "u^2/u^2+1");
  CHECK(parse_ratfunc(f, "u^2/u^2+1") == parse_ratfunc(f, "u^2/(u^2+1)"));
  CHECK(format_ratfunc(parse_ratfunc(f, "(u+1)^2")) == "u^2+1");
  CHECK(format_ratfunc(parse_ratfunc(f, "u + u")) == "0");
  CHECK(format_ratfunc(parse_ratfunc(f, "3*u")) == "u");
  CHECK(format_ratfunc(parse_ratfunc(f, " 1 ")) == "1");

  const auto f3 = FieldParams::make(3, 1, {}, {"u", "v"});
  CHECK(format_ratfunc(parse_ratfunc(f3, "-u*v^2")) == "2*u*v^2");
  CHECK(format_ratfunc(parse_ratfunc(f3, "v - u")) == "2*u+v");
  CHECK(format_ratfunc(parse_ratfunc(f3, "1/(2*u)")) == "2/u");
}

TEST_CASE("generator coefficients") {
  const auto f = FieldParams::make(3, 2, {1, 0, 1}, {"u"});
  CHECK(format_ratfunc(parse_ratfunc(f, "g^2")) == "2");
  CHECK(format_ratfunc(parse_ratfunc(f, "(g+1)*u")) == "g*u+u");
  CHECK(format_ratfunc(parse_ratfunc(f, "2*g*u^2 + g")) == "2*g*u^2+g");
  CHECK(format_modulus(*f) == "g^2+1");
  CHECK(parse_modulus(3, "g^2+1") == std::vector<std::uint64_t>{1, 0, 1});
  // g is an unknown symbol over a prime field.
  CHECK_THROWS_AS(parse_ratfunc(FieldParams::make(3, 1, {}, {"u"}), "g"), ParseError);
}

TEST_CASE("parse errors carry columns") {
  const auto f = FieldParams::make(2, 1, {}, {"u"});
  try {
    parse_ratfunc(f, "u + x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_ratfunc(f, "u +"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(f, "u / 0"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(f, "u / (u+u)"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(f, "(u"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(f, "u^"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(f, "u ^ 99999999"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(f, ""), ParseError);
}

TEST_CASE("property: format is canonical and parses back") {
  for (const FieldRef& f : {FieldParams::make(2, 1, {}, {"u"}), FieldParams::make(3, 2, {1, 0, 1}, {"u", "w"}),
                            FieldParams::make(5, 1, {}, {"x", "y", "z"})}) {
    GenConfig cfg;
    cfg.field = f;
    cfg.seed = 99;
    Generator gen(cfg);
    for (int i = 0; i < 300; ++i) {
      const RatFunc r = gen.random_ratfunc(4);
      const std::string s = format_ratfunc(r);
      const RatFunc back = parse_ratfunc(f, s);
      CHECK(back == r);
      CHECK(format_ratfunc(back) == s);
    }
  }
}
