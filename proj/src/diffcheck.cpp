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

#include "asred/diffcheck.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "asred/certificate.hpp"
#include "asred/expr.hpp"

namespace asred {

void GenConfig::validate() const {
  if (!field) throw PreconditionError("generator needs field parameters");
  if (min_terms > max_terms) throw PreconditionError("empty term-count range");
  if (max_exponent < 1) throw PreconditionError("max exponent must be at least 1");
  if (!(family_weight >= 0.0 && family_weight <= 1.0)) throw PreconditionError("family weight must lie in [0, 1]");
  if (std::any_of(strata.begin(), strata.end(), [](double w) { return w < 0.0; }) ||
      std::accumulate(strata.begin(), strata.end(), 0.0) <= 0.0)
    throw PreconditionError("coefficient strata weights must be nonnegative with a positive sum");
}

Generator::Generator(GenConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) { cfg_.validate(); }

std::uint64_t Generator::below(std::uint64_t n) { return n <= 1 ? 0 : rng_() % n; }

bool Generator::chance(double w) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < w; }

FqElem Generator::random_nonzero_fq() {
  const FieldParams& fp = *cfg_.field;
  for (;;) {
    FqElem a = fp.zero();
    for (auto& c : a.c) c = below(fp.p());
    if (!fp.is_zero(a)) return a;
  }
}

Poly Generator::random_poly(unsigned max_degree) {
  const FieldRef& f = cfg_.field;
  Poly out(f);
  const std::size_t nterms = 1 + below(max_degree + 2);
  for (std::size_t i = 0; i < nterms; ++i) {
    Monomial m(f->nvars(), 0);
    unsigned left = static_cast<unsigned>(below(max_degree + 1));
    for (std::size_t v = 0; v + 1 < m.size() && left > 0; ++v) {
      const unsigned take = static_cast<unsigned>(below(left + 1));
      m[v] = take;
      left -= take;
    }
    m.back() += left;
    out.add_term(m, random_nonzero_fq());
  }
  return out;
}

RatFunc Generator::random_ratfunc(unsigned max_degree) {
  for (;;) {
    Poly num = random_poly(max_degree);
    if (num.is_zero()) continue;
    Poly den = Poly::from_int(cfg_.field, 1);
    if (chance(0.5)) {
      den = random_poly(max_degree);
      if (den.is_zero()) continue;
    }
    RatFunc r(std::move(num), std::move(den));
    if (!r.is_zero()) return r;
  }
}

RatFunc Generator::random_non_power(unsigned max_degree) {
  for (;;) {
    RatFunc r = random_ratfunc(std::max(1u, max_degree));
    if (!is_in_K(r) && !ratfunc_pth_root(r)) return r;
  }
}

RatFunc Generator::random_power(unsigned max_degree) {
  const unsigned base_degree = std::max<unsigned>(1, max_degree / static_cast<unsigned>(cfg_.field->p()));
  for (;;) {
    RatFunc r = frobenius(random_ratfunc(base_degree));
    if (!is_in_K(r)) return r;
  }
}

RatFunc Generator::random_coefficient() {
  const double total = std::accumulate(cfg_.strata.begin(), cfg_.strata.end(), 0.0);
  double x = static_cast<double>(rng_() >> 11) * 0x1.0p-53 * total;
  if ((x -= cfg_.strata[0]) < 0) return RatFunc::constant(cfg_.field, random_nonzero_fq());
  if ((x -= cfg_.strata[1]) < 0) return random_power(cfg_.max_degree);
  return random_ratfunc(cfg_.max_degree);
}

ASEquation Generator::uniform_instance() {
  const std::size_t hi = std::min<std::uint64_t>(cfg_.max_terms, cfg_.max_exponent);
  const std::size_t lo = std::min(cfg_.min_terms, hi);
  const std::size_t nterms = lo + below(hi - lo + 1);
  std::vector<std::uint64_t> exps(cfg_.max_exponent);
  std::iota(exps.begin(), exps.end(), 1);
  std::map<BigInt, RatFunc> terms;
  for (std::size_t i = 0; i < nterms; ++i) {
    std::swap(exps[i], exps[i + below(exps.size() - i)]);
    terms.emplace(BigInt(exps[i]), random_coefficient());
  }
  RatFunc a0(cfg_.field);
  if (cfg_.random_a0 && chance(0.5)) a0 = random_coefficient();
  return ASEquation::make(cfg_.field, terms, a0);
}

ASEquation Generator::family_instance() {
  const std::uint64_t p = cfg_.field->p();
  const std::uint64_t m1 = 1 + below(cfg_.max_exponent / p);
  RatFunc c0 = random_non_power(cfg_.max_degree);
  RatFunc c1(cfg_.field);
  switch (below(3)) {
    case 0:
      break;
    case 1:
      c1 = RatFunc::constant(cfg_.field, random_nonzero_fq());
      break;
    default:
      c1 = random_power(cfg_.max_degree);
      break;
  }

  ASEquation eq;
  if (chance(0.25)) {
    // Deeper variant: c0 itself a p-th power, so a_{-m0} = c0^p sits one level lower.
    const RatFunc deep = frobenius(c0);
    eq = ASEquation::make(cfg_.field, {{BigInt(m1 * p), frobenius(deep)}, {BigInt(m1), c1 - deep}}, RatFunc(cfg_.field));
  } else {
    eq = make_example_family(cfg_.field, c0, c1, BigInt(m1));
  }

  const std::size_t want = std::max<std::size_t>(cfg_.min_terms, 2);
  const std::size_t hi = std::max(want, cfg_.max_terms);
  const std::size_t nterms = want + below(hi - want + 1);
  std::vector<std::uint64_t> free;
  for (std::uint64_t m = 1; m <= cfg_.max_exponent; ++m)
    if (!eq.terms.count(BigInt(m))) free.push_back(m);
  for (std::size_t i = 2; i < nterms && !free.empty(); ++i) {
    const std::size_t k = below(free.size());
    eq.terms.emplace(BigInt(free[k]), random_coefficient());
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(k));
  }
  if (cfg_.random_a0 && chance(0.5)) eq.a0 = random_coefficient();
  return eq;
}

ASEquation Generator::next() {
  if (cfg_.max_exponent >= cfg_.field->p() && chance(cfg_.family_weight)) return family_instance();
  return uniform_instance();
}

ASEquation make_example_family(const FieldRef& field, const RatFunc& c0, const RatFunc& c1, const BigInt& m1) {
  if (m1 < 1) throw PreconditionError("m1 must be at least 1");
  if (c0.is_zero() || is_in_K(c0)) throw PreconditionError("c0 = " + format_ratfunc(c0) + " lies in K");
  if (ratfunc_pth_root(c0))
    throw PreconditionError("c0 = " + format_ratfunc(c0) + " lies in L^" + std::to_string(field->p()));
  if (!ratfunc_pth_root(c1))
    throw PreconditionError("c1 = " + format_ratfunc(c1) + " is not in L^" + std::to_string(field->p()));
  return ASEquation::make(field, {{m1 * field->p(), frobenius(c0)}, {m1, c1 - c0}}, RatFunc(field));
}

OriginalOutcome run_original_epp(const ASEquation& eq) {
  OriginalOutcome out;
  const SetsIJ sets = compute_sets(eq);
  if (sets.J.empty()) {
    out.vacuous = true;
    return out;
  }
  out.pass = apply_pass(eq, plan_pass(eq, sets));
  const auto& terms = out.pass->result.terms;
  if (terms.empty()) {
    out.asserted = false;
    return out;
  }
  out.leading = terms.rbegin()->second;
  out.asserted = !ratfunc_pth_root(*out.leading).has_value();
  return out;
}

DiffReport differential_campaign(const GenConfig& cfg) {
  Generator gen(cfg);
  DiffReport report;
  for (std::size_t run = 0; run < cfg.count; ++run) {
    const ASEquation eq = gen.next();
    ++report.total;
    try {
      const OriginalOutcome orig = run_original_epp(eq);
      const ReductionTrace trace = reduce(eq);
      report.verifier_violations += verify_trace(trace).size();
      ++report.terminals[trace.terminal->tag];
      if (orig.asserted) {
        ++report.original_holds;
        if (orig.vacuous) ++report.vacuous;
      } else {
        ++report.counterexamples;
        report.counterexample_list.push_back(
            Counterexample{run, eq, orig.pass->merges, trace.terminal->tag, trace.passes.size()});
      }
    } catch (const std::exception& err) {
      ++report.failures;
      report.failure_list.push_back("run " + std::to_string(run) + ": " + err.what());
    }
  }
  return report;
}

Json report_to_json(const DiffReport& report, const GenConfig& cfg) {
  std::ostringstream weight;
  weight << cfg.family_weight;
  Json j;
  j["config"] = Json{{"params", params_to_json(*cfg.field)},
                     {"seed", std::to_string(cfg.seed)},
                     {"count", std::to_string(cfg.count)},
                     {"min_terms", std::to_string(cfg.min_terms)},
                     {"max_terms", std::to_string(cfg.max_terms)},
                     {"max_exponent", std::to_string(cfg.max_exponent)},
                     {"max_degree", std::to_string(cfg.max_degree)},
                     {"family_weight", weight.str()}};
  j["total"] = std::to_string(report.total);
  j["original_holds"] = std::to_string(report.original_holds);
  j["vacuous"] = std::to_string(report.vacuous);
  j["counterexamples"] = std::to_string(report.counterexamples);
  j["failures"] = std::to_string(report.failures);
  j["verifier_violations"] = std::to_string(report.verifier_violations);
  Json terminals = Json::object();
  for (TerminalTag t : {TerminalTag::Trivial, TerminalTag::NormalForm, TerminalTag::JEmpty}) {
    auto it = report.terminals.find(t);
    terminals[to_string(t)] = std::to_string(it == report.terminals.end() ? 0 : it->second);
  }
  j["terminals"] = std::move(terminals);
  Json list = Json::array();
  for (const auto& c : report.counterexample_list) {
    Json merges = Json::array();
    for (const auto& m : c.first_pass_merges) merges.push_back(m.str());
    list.push_back(Json{{"run", std::to_string(c.run)},
                        {"input", equation_to_json(c.input)},
                        {"first_pass_merges", std::move(merges)},
                        {"terminal", to_string(c.tag)},
                        {"passes", std::to_string(c.passes)}});
  }
  j["counterexample_list"] = std::move(list);
  j["failure_list"] = report.failure_list;
  return j;
}

std::string emit_report(const DiffReport& report, const GenConfig& cfg) {
  return report_to_json(report, cfg).dump(2) + "\n";
}

}  // namespace asred
