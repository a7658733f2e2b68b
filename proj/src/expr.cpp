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

#include "asred/expr.hpp"

#include <algorithm>
#include <cctype>

#include "asred/errors.hpp"

namespace asred {

namespace {

constexpr std::uint32_t kMaxPower = 1u << 20;

class Parser {
public:
  Parser(const FieldRef& field, std::string_view text) : field_(field), text_(text) {}

  RatFunc parse() {
    RatFunc r = ratfunc();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc ratfunc() {
    RatFunc num = poly();
    if (!accept('/')) return num;
    const std::size_t at = pos_;
    RatFunc den = poly();
    if (den.is_zero()) {
      pos_ = at;
      fail("division by zero");
    }
    return num / den;
  }

  RatFunc poly() {
    RatFunc acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  RatFunc factor() {
    if (accept('-')) return -factor();
    RatFunc base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    BigInt n = natural();
    if (n > kMaxPower) {
      pos_ = start;
      fail("exponent too large");
    }
    return pow(base, static_cast<unsigned>(n));
  }

  BigInt natural() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a natural number");
    BigInt n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return n;
  }

  RatFunc primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) return RatFunc::constant(field_, field_->from_bigint(natural()));
    if (ch == '(') {
      ++pos_;
      RatFunc inner = ratfunc();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto& vars = field_->vars();
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it != vars.end()) return RatFunc::variable(field_, static_cast<std::size_t>(it - vars.begin()));
      if (name == "g" && field_->e() > 1) return RatFunc::constant(field_, field_->generator());
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  const FieldRef& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

RatFunc parse_ratfunc(const FieldRef& field, std::string_view text) { return Parser(field, text).parse(); }

std::vector<std::uint64_t> parse_modulus(std::uint64_t p, std::string_view text) {
  const FieldRef gfield = FieldParams::make(p, 1, {}, {"g"});
  const RatFunc f = parse_ratfunc(gfield, text);
  if (!f.den().is_one()) throw ParseError("modulus must be a polynomial in g");
  std::vector<std::uint64_t> coeffs(f.num().degree_in(0) + 1, 0);
  for (const auto& [m, c] : f.num().terms()) coeffs[m[0]] = c.c[0];
  return coeffs;
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  const FieldParams& fp = *f.field();
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    const std::string mono = monomial_string(m, fp.vars());
    for (std::size_t j = c.c.size(); j-- > 0;) {
      const std::uint64_t k = c.c[j];
      if (k == 0) continue;
      std::string t;
      if (k != 1 || (j == 0 && mono.empty())) t = std::to_string(k);
      if (j > 0) {
        if (!t.empty()) t += '*';
        t += j == 1 ? std::string("g") : "g^" + std::to_string(j);
      }
      if (!mono.empty()) {
        if (!t.empty()) t += '*';
        t += mono;
      }
      if (!out.empty()) out += '+';
      out += t;
    }
  }
  return out;
}

std::string format_ratfunc(const RatFunc& f) {
  if (f.den().is_one()) return format_poly(f.num());
  return format_poly(f.num()) + "/" + format_poly(f.den());
}

std::string format_modulus(const FieldParams& fp) {
  std::string out;
  const auto& m = fp.modulus();
  for (std::size_t j = m.size(); j-- > 0;) {
    if (m[j] == 0) continue;
    std::string t;
    if (m[j] != 1 || j == 0) t = std::to_string(m[j]);
    if (j > 0) {
      if (!t.empty()) t += '*';
      t += j == 1 ? std::string("g") : "g^" + std::to_string(j);
    }
    if (!out.empty()) out += '+';
    out += t;
  }
  return out;
}

}  // namespace asred
