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

#include "asred/certificate.hpp"

#include <algorithm>

namespace asred {

void LaurentPoly::add_term(const BigInt& exponent, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [n, c] : b.terms_) r.add_term(n, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [n, c] : b.terms_) r.add_term(n, -c);
  return r;
}

LaurentPoly as_operator(const LaurentPoly& d) {
  const std::uint64_t p = d.field()->p();
  LaurentPoly r(d.field());
  for (const auto& [n, c] : d.terms()) {
    r.add_term(n * p, frobenius(c));
    r.add_term(n, -c);
  }
  return r;
}

LaurentPoly to_laurent(const ASEquation& eq) {
  LaurentPoly r(eq.field);
  for (const auto& [m, c] : eq.terms) r.add_term(-m, c);
  r.add_term(0, eq.a0);
  return r;
}

std::string to_string(const Violation& v) {
  std::string s = v.kind;
  if (v.pass) s += " (pass " + std::to_string(*v.pass + 1) + ")";
  return s + ": " + v.detail;
}

namespace {

class Collector {
public:
  explicit Collector(std::optional<std::size_t> pass) : pass_(pass) {}
  void add(std::string kind, std::string detail) { out_.push_back({std::move(kind), pass_, std::move(detail)}); }
  std::vector<Violation> take() { return std::move(out_); }

private:
  std::optional<std::size_t> pass_;
  std::vector<Violation> out_;
};

std::string join(const std::vector<BigInt>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "}";
}

bool is_pth_power(const RatFunc& c) { return ratfunc_pth_root(c).has_value(); }

// The terminal predicate, evaluated from the equation alone.
std::optional<TerminalTag> terminal_predicate(const ASEquation& eq) {
  if (eq.terms.empty()) return eq.E == 0 ? TerminalTag::Trivial : TerminalTag::JEmpty;
  bool all_in_k = true;
  for (const auto& [m, c] : eq.terms) all_in_k = all_in_k && is_in_K(c);
  if (all_in_k) return TerminalTag::JEmpty;
  const auto& [n, c] = *eq.terms.rbegin();
  if (!is_pth_power(c) && n % eq.field->p() == 0) return TerminalTag::NormalForm;
  return std::nullopt;
}

}  // namespace

std::vector<Violation> verify_pass(const ASEquation& before, const PassRecord& pass,
                                   std::optional<std::size_t> index) {
  Collector out(index);
  const FieldRef& f = before.field;
  const std::uint64_t p = f->p();

  // (1) I and J.
  std::vector<BigInt> I, J;
  for (const auto& [m, c] : before.terms) (is_in_K(c) ? I : J).push_back(m);
  if (I != pass.sets.I || J != pass.sets.J)
    out.add("sets", "recorded I=" + join(pass.sets.I) + " J=" + join(pass.sets.J) + ", recomputed I=" + join(I) +
                        " J=" + join(J));
  if (J.empty()) {
    out.add("sets", "pass applied to an equation with empty J");
    return out.take();
  }

  // (2) depths, mu, nu, kstep.
  unsigned max_depth = 0;
  for (const auto& [m, c] : before.terms) {
    const Depth d = depth(c);
    if (!d.is_infinite()) max_depth = std::max(max_depth, d.value());
    auto it = pass.depths.find(m);
    if (it == pass.depths.end())
      out.add("depth", "no depth recorded for m = " + m.str());
    else if (!(it->second == d))
      out.add("depth", "m = " + m.str() + ": recorded " + it->second.to_string() + ", recomputed " + d.to_string());
  }
  for (const auto& [m, d] : pass.depths)
    if (!before.terms.count(m)) out.add("depth", "depth recorded for absent m = " + m.str());
  if (pass.mu != max_depth)
    out.add("mu", "recorded mu = " + std::to_string(pass.mu) + ", max depth over J is " + std::to_string(max_depth));

  const BigInt min_j = *std::min_element(J.begin(), J.end());
  const BigInt max_i = I.empty() ? BigInt(0) : *std::max_element(I.begin(), I.end());
  if (pass.nu < 1 || min_j * pow_big(p, pass.nu) <= max_i)
    out.add("nu_inequality", "nu = " + std::to_string(pass.nu) + " violates min(J) p^nu > max(I)");
  else if (pass.nu > 1 && min_j * pow_big(p, pass.nu - 1) > max_i)
    out.add("nu_minimality", "nu = " + std::to_string(pass.nu) + " is not the least admissible value");
  if (pass.kstep != pass.nu + pass.mu)
    out.add("kstep", "kstep = " + std::to_string(pass.kstep) + " differs from nu + mu");
  if (pass.result.E != before.E + pass.kstep)
    out.add("ramification", "result E = " + std::to_string(pass.result.E) + ", expected " +
                                std::to_string(before.E + pass.kstep));

  // (3) Targets and their shape.
  const unsigned k = pass.kstep;
  std::map<BigInt, BigInt> target_of;
  BigInt max_i_target = 0;
  BigInt min_j_target = -1;
  for (const auto& [m, c] : before.terms) {
    auto it = pass.depths.find(m);
    if (it == pass.depths.end()) continue;
    const unsigned roots = it->second.is_infinite() ? k : it->second.value();
    if (roots > k) {
      out.add("pass_shape", "m = " + m.str() + " needs more roots than kstep");
      continue;
    }
    const BigInt t = m * pow_big(p, k - roots);
    target_of[m] = t;
    if (it->second.is_infinite()) {
      max_i_target = std::max(max_i_target, t);
    } else {
      if (t % p != 0) out.add("pass_shape", "J-target exponent " + t.str() + " not divisible by p");
      if (min_j_target < 0 || t < min_j_target) min_j_target = t;
    }
  }
  if (min_j_target >= 0 && max_i_target >= min_j_target)
    out.add("pass_shape", "I-target " + max_i_target.str() + " not below J-target " + min_j_target.str());

  std::map<BigInt, int> landing;
  for (const auto& [m, t] : target_of) ++landing[t];
  std::vector<BigInt> merges;
  for (const auto& [t, count] : landing)
    if (count > 1) merges.push_back(t);
  if (merges != pass.merges) out.add("merges", "recorded " + join(pass.merges) + ", recomputed " + join(merges));

  // (4) Each source's replacement chain: successive p-th roots, ending on its target.
  const BigInt scale = pow_big(p, k);
  std::map<BigInt, std::vector<const Replacement*>> chains;
  for (const auto& r : pass.replacements) {
    if (!before.terms.count(r.source))
      out.add("replacement_chain", "replacement for absent source m = " + r.source.str());
    else
      chains[r.source].push_back(&r);
  }
  for (const auto& [m, a] : before.terms) {
    RatFunc cur = a;
    BigInt exponent = -(m * scale);
    bool ok = true;
    for (const Replacement* r : chains[m]) {
      if (!(frobenius(r->coeff) == cur) || r->exponent * p != exponent) {
        out.add("replacement_chain", "step for m = " + m.str() + " at exponent " + r->exponent.str() +
                                         " is not a p-th root of the previous term");
        ok = false;
        break;
      }
      cur = r->coeff;
      exponent = r->exponent;
    }
    if (!ok) continue;
    auto t = target_of.find(m);
    if (t != target_of.end() && exponent != -t->second)
      out.add("replacement_chain", "m = " + m.str() + " ends at exponent " + exponent.str() + ", target is -" +
                                       t->second.str());
    for (const Replacement* r : chains[m])
      if (r->target != -exponent) {
        out.add("replacement_chain", "m = " + m.str() + " records target " + r->target.str());
        break;
      }
    auto d = pass.depths.find(m);
    if (d != pass.depths.end() && !d->second.is_infinite() && is_pth_power(cur))
      out.add("maximality", "final coefficient for m = " + m.str() + " is still a p-th power");
  }

  // (5) The operator identity.
  LaurentPoly ramified(f);
  for (const auto& [m, c] : before.terms) ramified.add_term(-(m * scale), c);
  ramified.add_term(0, before.a0);
  LaurentPoly D(f);
  for (const auto& r : pass.replacements) D.add_term(r.exponent, r.coeff);
  if (!(ramified - to_laurent(pass.result) == as_operator(D)))
    out.add("wp_identity", "ramified input minus result differs from D^p - D");

  return out.take();
}

std::vector<Violation> verify_trace(const ReductionTrace& trace) {
  std::vector<Violation> all;
  auto add = [&](std::string kind, std::optional<std::size_t> pass, std::string detail) {
    all.push_back({std::move(kind), pass, std::move(detail)});
  };
  if (!trace.field) {
    add("params", std::nullopt, "trace has no field parameters");
    return all;
  }
  if (trace.initial.E != 0) add("initial", std::nullopt, "initial equation has E = " + std::to_string(trace.initial.E));

  std::size_t initial_j = 0;
  for (const auto& [m, c] : trace.initial.terms) initial_j += is_in_K(c) ? 0 : 1;
  if (trace.passes.size() > initial_j)
    add("termination_bound", std::nullopt,
        std::to_string(trace.passes.size()) + " passes exceed initial |J| = " + std::to_string(initial_j));

  const ASEquation* before = &trace.initial;
  std::uint64_t total_kstep = 0;
  for (std::size_t i = 0; i < trace.passes.size(); ++i) {
    const PassRecord& pass = trace.passes[i];
    if (terminal_predicate(*before))
      add("unneeded_pass", i, "equation before this pass is already terminal");
    if (i > 0) {
      const PassRecord& prev = trace.passes[i - 1];
      if (prev.merges.empty()) add("j_monotonicity", i, "restart without a merge in the previous pass");
      if (pass.sets.J.size() >= prev.sets.J.size())
        add("j_monotonicity", i,
            "|J| went " + std::to_string(prev.sets.J.size()) + " -> " + std::to_string(pass.sets.J.size()));
    }
    auto v = verify_pass(*before, pass, i);
    all.insert(all.end(), v.begin(), v.end());
    total_kstep += pass.kstep;
    before = &pass.result;
  }

  if (!trace.terminal) {
    add("terminal_missing", std::nullopt, "trace has no terminal state");
    return all;
  }
  const TerminalState& term = *trace.terminal;
  if (!(term.equation == *before))
    add("terminal_equation", std::nullopt, "terminal equation differs from the last pass result");
  if (term.equation.E != total_kstep)
    add("ramification", std::nullopt,
        "terminal E = " + std::to_string(term.equation.E) + ", passes sum to " + std::to_string(total_kstep));
  const auto tag = terminal_predicate(term.equation);
  if (!tag)
    add("terminal_tag", std::nullopt, "claimed " + to_string(term.tag) + " but the equation is not terminal");
  else if (*tag != term.tag)
    add("terminal_tag", std::nullopt, "claimed " + to_string(term.tag) + ", equation satisfies " + to_string(*tag));
  return all;
}

}  // namespace asred
