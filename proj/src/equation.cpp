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

#include "asred/equation.hpp"

#include <algorithm>

namespace asred {

BigInt pow_big(std::uint64_t base, unsigned exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return r;
}

ASEquation ASEquation::make(const FieldRef& field, const std::map<BigInt, RatFunc>& terms, RatFunc a0,
                            std::uint64_t E) {
  ASEquation eq;
  eq.field = field;
  for (const auto& [m, c] : terms) {
    if (m < 1) throw PreconditionError("term exponent m = " + m.str() + " must be at least 1");
    if (!c.is_zero()) eq.terms.emplace(m, c);
  }
  eq.a0 = a0.field() ? std::move(a0) : RatFunc(field);
  eq.E = E;
  return eq;
}

BigInt ASEquation::N() const { return terms.empty() ? BigInt(0) : terms.rbegin()->first; }

std::string to_string(TerminalTag tag) {
  switch (tag) {
    case TerminalTag::Trivial:
      return "TRIVIAL";
    case TerminalTag::NormalForm:
      return "NORMAL_FORM";
    case TerminalTag::JEmpty:
      return "J_EMPTY";
  }
  return "?";
}

TerminalTag terminal_tag_from_string(const std::string& s) {
  if (s == "TRIVIAL") return TerminalTag::Trivial;
  if (s == "NORMAL_FORM") return TerminalTag::NormalForm;
  if (s == "J_EMPTY") return TerminalTag::JEmpty;
  throw ParseError("unknown terminal tag '" + s + "'");
}

SetsIJ compute_sets(const ASEquation& eq) {
  SetsIJ sets;
  for (const auto& [m, c] : eq.terms) (is_in_K(c) ? sets.I : sets.J).push_back(m);
  return sets;
}

unsigned choose_nu(const SetsIJ& sets, std::uint64_t p) {
  if (sets.J.empty()) throw PreconditionError("choose_nu requires a nonempty J");
  if (sets.I.empty()) return 1;
  const BigInt& min_j = *std::min_element(sets.J.begin(), sets.J.end());
  const BigInt& max_i = *std::max_element(sets.I.begin(), sets.I.end());
  unsigned nu = 1;
  BigInt scaled = min_j * p;
  while (scaled <= max_i) {
    scaled *= p;
    ++nu;
  }
  return nu;
}

MuResult compute_mu(const ASEquation& eq, const SetsIJ& sets) {
  if (sets.J.empty()) throw PreconditionError("compute_mu requires a nonempty J");
  MuResult out;
  for (const auto& m : sets.J) {
    const Depth d = depth(eq.terms.at(m));
    if (d.is_infinite()) throw InvariantError("J-coefficient at m = " + m.str() + " lies in K");
    out.mu = std::max(out.mu, d.value());
    out.depths.emplace(m, d);
  }
  return out;
}

ASEquation ramify(const ASEquation& eq, unsigned kstep) {
  if (kstep < 1) throw PreconditionError("ramification step must be at least 1");
  const BigInt scale = pow_big(eq.field->p(), kstep);
  ASEquation out;
  out.field = eq.field;
  out.a0 = eq.a0;
  out.E = eq.E + kstep;
  for (const auto& [m, c] : eq.terms) out.terms.emplace(m * scale, c);
  return out;
}

PassPlan plan_pass(const ASEquation& eq, const SetsIJ& sets) {
  const std::uint64_t p = eq.field->p();
  PassPlan plan;
  plan.sets = sets;
  plan.nu = choose_nu(sets, p);
  MuResult mu = compute_mu(eq, sets);
  plan.mu = mu.mu;
  const unsigned k = plan.kstep();

  for (const auto& s : sets.I) {
    TermPlan t;
    t.depth = Depth::infinite();
    t.roots = k;
    t.target_exponent = s;
    RatFunc c = eq.terms.at(s);
    for (unsigned i = 0; i < k; ++i) c = RatFunc::constant(c.field(), c.field()->pth_root(c.num().constant_coeff()));
    t.target_coeff = std::move(c);
    plan.terms.emplace(s, std::move(t));
  }
  for (const auto& m : sets.J) {
    TermPlan t;
    t.depth = mu.depths.at(m);
    t.roots = t.depth.value();
    t.target_exponent = m * pow_big(p, k - t.roots);
    RatFunc c = eq.terms.at(m);
    for (unsigned i = 0; i < t.roots; ++i) {
      auto r = ratfunc_pth_root(c);
      if (!r) throw InvariantError("depth overstates p-th power level at m = " + m.str());
      c = std::move(*r);
    }
    t.target_coeff = std::move(c);
    plan.terms.emplace(m, std::move(t));
  }

  BigInt max_i_target = 0;
  for (const auto& s : sets.I) max_i_target = std::max(max_i_target, plan.terms.at(s).target_exponent);
  for (const auto& m : sets.J) {
    const BigInt& n = plan.terms.at(m).target_exponent;
    if (n % p != 0) throw InvariantError("J-target exponent " + n.str() + " not divisible by p");
    if (n <= max_i_target) throw InvariantError("I-target exponent not below J-target " + n.str());
  }
  return plan;
}

PassOutcome apply_pass(const ASEquation& eq, const PassPlan& plan) {
  const std::uint64_t p = eq.field->p();
  const unsigned k = plan.kstep();
  const BigInt scale = pow_big(p, k);

  PassOutcome out;
  std::map<BigInt, std::vector<RatFunc>> landing;  // target -> contributions, in source order

  for (const auto& [m, a] : eq.terms) {
    const TermPlan& tp = plan.terms.at(m);
    BigInt n = m * scale;
    RatFunc c = a;
    for (unsigned i = 0; i < tp.roots; ++i) {
      auto r = ratfunc_pth_root(c);
      if (!r) throw InvariantError("planned p-th root does not exist at m = " + m.str());
      if (n % p != 0) throw InvariantError("exponent not divisible by p while rooting m = " + m.str());
      n /= p;
      c = std::move(*r);
      out.replacements.push_back(Replacement{m, tp.target_exponent, -n, c});
    }
    if (n != tp.target_exponent || !(c == tp.target_coeff))
      throw InvariantError("rooting m = " + m.str() + " missed its planned target");
    landing[n].push_back(std::move(c));
  }

  out.result.field = eq.field;
  out.result.a0 = eq.a0;
  out.result.E = eq.E + k;
  for (auto& [n, parts] : landing) {
    if (parts.size() > 1) out.merges.push_back(n);
    RatFunc sum(eq.field);
    for (const auto& c : parts) sum = sum + c;
    if (!sum.is_zero()) out.result.terms.emplace(n, std::move(sum));
  }
  return out;
}

std::optional<TerminalState> classify(const ASEquation& eq, bool after_pass) {
  // An empty right-hand side reached by passes (E > 0) is the collapse of J,
  // not the untouched N = 0 input.
  if (eq.terms.empty()) return TerminalState{eq.E == 0 ? TerminalTag::Trivial : TerminalTag::JEmpty, eq};
  if (std::all_of(eq.terms.begin(), eq.terms.end(), [](const auto& t) { return is_in_K(t.second); }))
    return TerminalState{TerminalTag::JEmpty, eq};
  const auto& [n, c] = *eq.terms.rbegin();
  if (ratfunc_pth_root(c)) return std::nullopt;
  if (n % eq.field->p() == 0) return TerminalState{TerminalTag::NormalForm, eq};
  if (after_pass)
    throw InvariantError("leading coefficient outside L^p at exponent " + n.str() + " not divisible by p");
  return std::nullopt;
}

ReductionTrace reduce(const ASEquation& eq, std::optional<std::size_t> max_passes) {
  if (eq.E != 0) throw PreconditionError("reduce expects an unramified equation (E = 0)");
  ReductionTrace trace;
  trace.field = eq.field;
  trace.initial = eq;
  const std::size_t limit = max_passes.value_or(compute_sets(eq).J.size() + 1);

  ASEquation cur = eq;
  bool after_pass = false;
  for (;;) {
    std::optional<TerminalState> terminal;
    try {
      terminal = classify(cur, after_pass);
    } catch (const InvariantError& err) {
      throw ReductionAborted(err.what(), trace);
    }
    if (terminal) {
      trace.terminal = std::move(terminal);
      return trace;
    }
    if (trace.passes.size() >= limit)
      throw ReductionAborted("pass limit " + std::to_string(limit) + " exceeded", trace);

    PassRecord rec;
    try {
      rec.sets = compute_sets(cur);
      const PassPlan plan = plan_pass(cur, rec.sets);
      PassOutcome outcome = apply_pass(cur, plan);
      rec.nu = plan.nu;
      rec.mu = plan.mu;
      rec.kstep = plan.kstep();
      for (const auto& [m, tp] : plan.terms) rec.depths.emplace(m, tp.depth);
      rec.replacements = std::move(outcome.replacements);
      rec.merges = std::move(outcome.merges);
      rec.result = std::move(outcome.result);
    } catch (const InvariantError& err) {
      throw ReductionAborted(err.what(), trace);
    }

    const bool leading_is_power =
        !rec.result.terms.empty() && ratfunc_pth_root(rec.result.terms.rbegin()->second).has_value();
    const bool merged = !rec.merges.empty();
    cur = rec.result;
    trace.passes.push_back(std::move(rec));
    if (leading_is_power && !merged)
      throw ReductionAborted("leading coefficient in L^p without any merge", trace);
    after_pass = true;
  }
}

}  // namespace asred
