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

#include "asred/trace_io.hpp"

#include <limits>

#include "asred/errors.hpp"
#include "asred/expr.hpp"

namespace asred {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return a;
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string("field '") + what + "' must be a string");
  return j.get<std::string>();
}

RatFunc ratfunc_from_json(const FieldRef& f, const Json& j, const char* what) {
  try {
    return parse_ratfunc(f, string_of(j, what));
  } catch (const ParseError& e) {
    throw ParseError(std::string("in '") + what + "': " + e.what());
  }
}

unsigned unsigned_from_json(const Json& j, const char* what) {
  const std::uint64_t v = u64_from_json(j, what);
  if (v > std::numeric_limits<unsigned>::max()) throw ParseError(std::string("field '") + what + "' out of range");
  return static_cast<unsigned>(v);
}

Json bigints_to_json(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::vector<BigInt> bigints_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("field '") + what + "' must be an array");
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(bigint_from_json(x, what));
  return out;
}

Json pass_to_json(const PassRecord& pass) {
  Json j;
  j["I"] = bigints_to_json(pass.sets.I);
  j["J"] = bigints_to_json(pass.sets.J);
  j["nu"] = std::to_string(pass.nu);
  j["mu"] = std::to_string(pass.mu);
  Json depths = Json::array();
  for (const auto& [m, d] : pass.depths) depths.push_back(Json{{"m", m.str()}, {"depth", d.to_string()}});
  j["depths"] = std::move(depths);
  j["kstep"] = std::to_string(pass.kstep);
  Json reps = Json::array();
  for (const auto& r : pass.replacements)
    reps.push_back(Json{{"source", r.source.str()},
                        {"target", r.target.str()},
                        {"exp", r.exponent.str()},
                        {"coeff", format_ratfunc(r.coeff)}});
  j["replacements"] = std::move(reps);
  j["merges"] = bigints_to_json(pass.merges);
  j["result"] = equation_to_json(pass.result);
  return j;
}

PassRecord pass_from_json(const FieldRef& f, const Json& j) {
  PassRecord pass;
  pass.sets.I = bigints_from_json(field(j, "I"), "I");
  pass.sets.J = bigints_from_json(field(j, "J"), "J");
  pass.nu = unsigned_from_json(field(j, "nu"), "nu");
  pass.mu = unsigned_from_json(field(j, "mu"), "mu");
  for (const auto& d : array_field(j, "depths")) {
    const BigInt m = bigint_from_json(field(d, "m"), "m");
    const std::string s = string_of(field(d, "depth"), "depth");
    const Depth depth = s == "inf" ? Depth::infinite() : Depth::finite(unsigned_from_json(field(d, "depth"), "depth"));
    if (!pass.depths.emplace(m, depth).second) throw ParseError("duplicate depth entry for m = " + m.str());
  }
  pass.kstep = unsigned_from_json(field(j, "kstep"), "kstep");
  for (const auto& r : array_field(j, "replacements"))
    pass.replacements.push_back(Replacement{bigint_from_json(field(r, "source"), "source"),
                                            bigint_from_json(field(r, "target"), "target"),
                                            bigint_from_json(field(r, "exp"), "exp"),
                                            ratfunc_from_json(f, field(r, "coeff"), "coeff")});
  pass.merges = bigints_from_json(field(j, "merges"), "merges");
  pass.result = equation_from_json(f, field(j, "result"));
  return pass;
}

}  // namespace

BigInt bigint_from_json(const Json& j, const char* what) {
  const std::string s = string_of(j, what);
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw ParseError(std::string("field '") + what + "' is not a decimal integer");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw ParseError(std::string("field '") + what + "' is not a decimal integer: " + s);
  return BigInt(s);
}

std::uint64_t u64_from_json(const Json& j, const char* what) {
  const BigInt v = bigint_from_json(j, what);
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw ParseError(std::string("field '") + what + "' out of range");
  return static_cast<std::uint64_t>(v);
}

Json params_to_json(const FieldParams& fp) {
  Json j;
  j["p"] = std::to_string(fp.p());
  j["e"] = std::to_string(fp.e());
  j["modulus"] = fp.e() > 1 ? Json(format_modulus(fp)) : Json(nullptr);
  j["vars"] = fp.vars();
  return j;
}

FieldRef params_from_json(const Json& j) {
  const std::uint64_t p = u64_from_json(field(j, "p"), "p");
  const unsigned e = unsigned_from_json(field(j, "e"), "e");
  std::vector<std::uint64_t> modulus;
  const Json& mj = field(j, "modulus");
  if (!mj.is_null()) modulus = parse_modulus(p, string_of(mj, "modulus"));
  std::vector<std::string> vars;
  for (const auto& v : array_field(j, "vars")) vars.push_back(string_of(v, "vars"));
  try {
    return FieldParams::make(p, e, std::move(modulus), std::move(vars));
  } catch (const PreconditionError& err) {
    throw ParseError(std::string("invalid params: ") + err.what());
  }
}

Json equation_to_json(const ASEquation& eq) {
  Json j;
  j["E"] = std::to_string(eq.E);
  j["a0"] = format_ratfunc(eq.a0);
  Json terms = Json::array();
  for (const auto& [m, c] : eq.terms) terms.push_back(Json{{"m", m.str()}, {"coeff", format_ratfunc(c)}});
  j["terms"] = std::move(terms);
  return j;
}

ASEquation equation_from_json(const FieldRef& f, const Json& j) {
  std::map<BigInt, RatFunc> terms;
  for (const auto& t : array_field(j, "terms")) {
    const BigInt m = bigint_from_json(field(t, "m"), "m");
    if (m < 1) throw ParseError("term exponent m = " + m.str() + " must be at least 1");
    if (!terms.emplace(m, ratfunc_from_json(f, field(t, "coeff"), "coeff")).second)
      throw ParseError("duplicate term for m = " + m.str());
  }
  return ASEquation::make(f, terms, ratfunc_from_json(f, field(j, "a0"), "a0"), u64_from_json(field(j, "E"), "E"));
}

Json trace_to_json(const ReductionTrace& trace) {
  Json j;
  j["params"] = params_to_json(*trace.field);
  j["initial"] = equation_to_json(trace.initial);
  Json passes = Json::array();
  for (const auto& p : trace.passes) passes.push_back(pass_to_json(p));
  j["passes"] = std::move(passes);
  if (trace.terminal)
    j["terminal"] = Json{{"tag", to_string(trace.terminal->tag)},
                         {"E", std::to_string(trace.terminal->equation.E)},
                         {"equation", equation_to_json(trace.terminal->equation)}};
  else
    j["terminal"] = nullptr;
  return j;
}

ReductionTrace trace_from_json(const Json& j) {
  ReductionTrace trace;
  trace.field = params_from_json(field(j, "params"));
  trace.initial = equation_from_json(trace.field, field(j, "initial"));
  for (const auto& p : array_field(j, "passes")) trace.passes.push_back(pass_from_json(trace.field, p));
  const Json& t = field(j, "terminal");
  if (!t.is_null()) {
    TerminalState term{terminal_tag_from_string(string_of(field(t, "tag"), "tag")),
                       equation_from_json(trace.field, field(t, "equation"))};
    if (u64_from_json(field(t, "E"), "E") != term.equation.E)
      throw ParseError("terminal E disagrees with its equation");
    trace.terminal = std::move(term);
  }
  return trace;
}

std::string emit_trace(const ReductionTrace& trace) { return trace_to_json(trace).dump(2) + "\n"; }

ReductionTrace parse_trace(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return trace_from_json(j);
}

}  // namespace asred
