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

#include "asred/equation_file.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "asred/expr.hpp"

namespace asred {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Offset of the first non-space character at or after `from`.
std::size_t skip_spaces(std::string_view s, std::size_t from) {
  while (from < s.size() && is_space(s[from])) ++from;
  return from;
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

struct Header {
  std::optional<std::uint64_t> p;
  std::optional<unsigned> e;
  std::optional<std::string> modulus;
  std::optional<std::vector<std::string>> vars;
  std::size_t p_line = 0;
  std::size_t modulus_line = 0;
};

std::uint64_t parse_u64(std::string_view s, std::size_t line, std::size_t col, const char* what) {
  if (s.empty()) throw ParseError(std::string("expected a natural number for ") + what, line, col);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError(std::string("expected a natural number for ") + what, line, col + i);
    const std::uint64_t d = static_cast<std::uint64_t>(s[i] - '0');
    if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
      throw ParseError(std::string(what) + " is too large", line, col);
    v = v * 10 + d;
  }
  return v;
}

FieldRef build_field(const Header& h, std::size_t line) {
  if (!h.p) throw ParseError("missing header 'p'", line, 1);
  if (!is_prime(*h.p)) throw ParseError("p = " + std::to_string(*h.p) + " is not prime", h.p_line, 1);
  const unsigned e = h.e.value_or(1);
  std::vector<std::uint64_t> modulus;
  if (e > 1 && !h.modulus) throw ParseError("e = " + std::to_string(e) + " requires a 'modulus' header", line, 1);
  if (e == 1 && h.modulus) throw ParseError("'modulus' is only allowed when e > 1", h.modulus_line, 1);
  if (h.modulus) {
    try {
      modulus = parse_modulus(*h.p, *h.modulus);
    } catch (const ParseError& err) {
      throw ParseError(std::string("modulus: ") + err.what(), h.modulus_line, 1);
    }
  }
  try {
    return FieldParams::make(*h.p, e, std::move(modulus), h.vars.value_or(std::vector<std::string>{"u"}));
  } catch (const PreconditionError& err) {
    throw ParseError(err.what(), line, 1);
  }
}

}  // namespace

ASEquation parse_equation_file(std::string_view text) {
  Header header;
  FieldRef field;
  std::map<BigInt, RatFunc> terms;
  std::map<BigInt, std::size_t> seen;
  RatFunc a0;
  bool have_a0 = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim_right(text.substr(start, end - start));
    ++line_no;
    start = end + 1;

    const std::size_t first = skip_spaces(line, 0);
    if (first == line.size() || line[first] == '#') continue;
    const std::size_t col0 = first + 1;

    if (line.substr(first, 4) == "term" && (first + 4 == line.size() || !std::isalnum(static_cast<unsigned char>(line[first + 4])))) {
      if (!field) field = build_field(header, line_no);
      std::size_t pos = skip_spaces(line, first + 4);
      const std::size_t exp_col = pos + 1;
      bool negative = false;
      if (pos < line.size() && (line[pos] == '-' || line[pos] == '+')) {
        negative = line[pos] == '-';
        ++pos;
      }
      const std::size_t digits = pos;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos == digits) throw ParseError("expected an integer exponent", line_no, exp_col);
      BigInt exp(std::string(line.substr(digits, pos - digits)));
      if (negative) exp = -exp;
      if (exp > 0) throw ParseError("exponent must be <= 0 (coefficient of pi^exp)", line_no, exp_col);
      pos = skip_spaces(line, pos);
      if (pos >= line.size() || line[pos] != ':') throw ParseError("expected ':' after the exponent", line_no, pos + 1);
      ++pos;
      if (auto it = seen.find(exp); it != seen.end())
        throw ParseError("duplicate term for exponent " + exp.str() + " (first on line " + std::to_string(it->second) +
                             ")",
                         line_no, exp_col);
      seen.emplace(exp, line_no);
      RatFunc c;
      try {
        c = parse_ratfunc(field, line.substr(pos));
      } catch (const ParseError& err) {
        // err.column() is relative to the expression.
        const std::string msg = err.what();
        const std::size_t colon = msg.find(": ");
        throw ParseError(colon == std::string::npos ? msg : msg.substr(colon + 2), line_no, pos + err.column());
      }
      if (exp == 0) {
        a0 = std::move(c);
        have_a0 = true;
      } else {
        terms.emplace(-exp, std::move(c));
      }
      continue;
    }

    const std::size_t eq = line.find('=', first);
    if (eq == std::string_view::npos) throw ParseError("expected 'key=value' or 'term <exp>: <coefficient>'", line_no, col0);
    const std::string_view key = trim_right(line.substr(first, eq - first));
    const std::size_t vpos = skip_spaces(line, eq + 1);
    const std::string_view value = line.substr(vpos);
    if (field) throw ParseError("header '" + std::string(key) + "' after the first term line", line_no, col0);

    if (key == "p") {
      if (header.p) throw ParseError("duplicate header 'p'", line_no, col0);
      header.p = parse_u64(value, line_no, vpos + 1, "p");
      header.p_line = line_no;
    } else if (key == "e") {
      if (header.e) throw ParseError("duplicate header 'e'", line_no, col0);
      const std::uint64_t e = parse_u64(value, line_no, vpos + 1, "e");
      if (e < 1 || e > 64) throw ParseError("e must lie in [1, 64]", line_no, vpos + 1);
      header.e = static_cast<unsigned>(e);
    } else if (key == "modulus") {
      if (header.modulus) throw ParseError("duplicate header 'modulus'", line_no, col0);
      header.modulus = std::string(value);
      header.modulus_line = line_no;
    } else if (key == "vars") {
      if (header.vars) throw ParseError("duplicate header 'vars'", line_no, col0);
      std::vector<std::string> vars;
      std::size_t s = 0;
      for (;;) {
        const std::size_t comma = value.find(',', s);
        std::string_view name = value.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s);
        const std::size_t lead = skip_spaces(name, 0);
        name = trim_right(name.substr(lead));
        if (name.empty()) throw ParseError("empty variable name", line_no, vpos + s + 1);
        vars.emplace_back(name);
        if (comma == std::string_view::npos) break;
        s = comma + 1;
      }
      header.vars = std::move(vars);
    } else {
      throw ParseError("unknown header '" + std::string(key) + "'", line_no, col0);
    }
  }

  if (!field) field = build_field(header, line_no);
  return ASEquation::make(field, terms, have_a0 ? a0 : RatFunc(field));
}

std::string emit_equation_file(const ASEquation& eq) {
  if (eq.E != 0) throw PreconditionError("equation files describe unramified equations (E = 0)");
  const FieldParams& fp = *eq.field;
  std::string out = "p=" + std::to_string(fp.p()) + "\n";
  out += "e=" + std::to_string(fp.e()) + "\n";
  if (fp.e() > 1) out += "modulus=" + format_modulus(fp) + "\n";
  out += "vars=";
  for (std::size_t i = 0; i < fp.vars().size(); ++i) out += (i ? "," : "") + fp.vars()[i];
  out += "\n";
  for (auto it = eq.terms.rbegin(); it != eq.terms.rend(); ++it)
    out += "term -" + it->first.str() + ": " + format_ratfunc(it->second) + "\n";
  if (!eq.a0.is_zero()) out += "term 0: " + format_ratfunc(eq.a0) + "\n";
  return out;
}

}  // namespace asred
