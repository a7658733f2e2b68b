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

#include "asred/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "asred/certificate.hpp"
#include "asred/diffcheck.hpp"
#include "asred/equation_file.hpp"
#include "asred/expr.hpp"
#include "asred/trace_io.hpp"

namespace asred::cli {

namespace {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const ReductionAborted& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    err << "partial trace:\n" << emit_trace(e.partial());
    return kInternalError;
  } catch (const InvariantError& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInternalError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  }
}

std::string join(const std::vector<BigInt>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "}";
}

FieldRef make_field(std::uint64_t p, unsigned e, const std::string& modulus, const std::string& vars_csv) {
  std::vector<std::string> vars;
  std::stringstream ss(vars_csv);
  for (std::string v; std::getline(ss, v, ',');) vars.push_back(v);
  std::vector<std::uint64_t> mod;
  if (!modulus.empty()) mod = parse_modulus(p, modulus);
  return FieldParams::make(p, e, std::move(mod), std::move(vars));
}

std::string uniformizer(const ASEquation& eq) {
  if (eq.E == 0) return "pi";
  return "t^(" + std::to_string(eq.field->p()) + "^" + std::to_string(eq.E) + ") = pi";
}

}  // namespace

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string format_rhs(const ASEquation& eq) {
  const std::string tau = eq.E == 0 ? "pi" : "t";
  std::string out;
  for (auto it = eq.terms.rbegin(); it != eq.terms.rend(); ++it) {
    std::string c = format_ratfunc(it->second);
    if (c.find_first_of("+/") != std::string::npos) c = "(" + c + ")";
    if (!out.empty()) out += " + ";
    out += (c == "1" ? "" : c + "*") + tau + "^-" + it->first.str();
  }
  if (!eq.a0.is_zero()) {
    if (!out.empty()) out += " + ";
    out += format_ratfunc(eq.a0);
  }
  return "z^p - z = " + (out.empty() ? std::string("0") : out);
}

std::string summarize(const ReductionTrace& trace) {
  std::ostringstream out;
  out << "initial: " << format_rhs(trace.initial) << "\n";
  std::string jseq;
  for (std::size_t i = 0; i < trace.passes.size(); ++i) {
    const PassRecord& p = trace.passes[i];
    out << "pass " << (i + 1) << ": I=" << join(p.sets.I) << " J=" << join(p.sets.J) << " nu=" << p.nu
        << " mu=" << p.mu << " kstep=" << p.kstep << " replacements=" << p.replacements.size()
        << " merges=" << join(p.merges) << "\n";
    out << "  -> " << format_rhs(p.result) << "\n";
    jseq += (i ? " -> " : "") + std::to_string(p.sets.J.size());
  }
  out << "passes: " << trace.passes.size() << "\n";
  out << "|J| per pass: " << (jseq.empty() ? std::string("(none)") : jseq) << "\n";
  if (trace.terminal) {
    const ASEquation& fin = trace.terminal->equation;
    out << "terminal: " << to_string(trace.terminal->tag) << "\n";
    out << "E: " << fin.E << " (" << uniformizer(fin) << ")\n";
    out << "final: " << format_rhs(fin) << "\n";
  }
  return out.str();
}

int cmd_reduce(const std::string& path, const std::optional<std::string>& trace_path,
               std::optional<std::size_t> max_passes, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ASEquation eq = parse_equation_file(read_file(path));
    const ReductionTrace trace = reduce(eq, max_passes);
    out << summarize(trace);
    if (trace_path) write_file(*trace_path, emit_trace(trace));
    return kOk;
  });
}

int cmd_check(const std::string& trace_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ReductionTrace trace = parse_trace(read_file(trace_path));
    const auto violations = verify_trace(trace);
    for (const auto& v : violations) out << to_string(v) << "\n";
    out << violations.size() << " violation(s)\n";
    return violations.empty() ? kOk : kViolations;
  });
}

int cmd_example(const ExampleOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FieldRef f = make_field(opts.p, opts.e, opts.modulus, opts.vars);
    const RatFunc c0 = parse_ratfunc(f, opts.c0);
    const RatFunc c1 = parse_ratfunc(f, opts.c1);
    BigInt m1;
    try {
      m1 = BigInt(opts.m1);
    } catch (const std::exception&) {
      throw ParseError("m1 must be an integer: '" + opts.m1 + "'");
    }
    const ASEquation eq = make_example_family(f, c0, c1, m1);

    out << "equation (c0 = " << format_ratfunc(c0) << ", c1 = " << format_ratfunc(c1) << ", m1 = " << m1 << "):\n";
    out << "  " << format_rhs(eq) << "\n\n";

    const OriginalOutcome orig = run_original_epp(eq);
    out << "[single pass, leading-coefficient claim]\n";
    if (orig.pass) {
      out << "  after one pass: " << format_rhs(orig.pass->result) << "\n";
      out << "  merges: " << join(orig.pass->merges) << "\n";
    }
    if (orig.asserted)
      out << "  claim holds: leading coefficient " << format_ratfunc(*orig.leading) << " is not in L^" << opts.p << "\n";
    else if (!orig.leading)
      out << "  claim FAILS: no negative-exponent term survives\n";
    else
      out << "  claim FAILS: leading coefficient " << format_ratfunc(*orig.leading) << " lies in L^" << opts.p << "\n";

    const ReductionTrace trace = reduce(eq);
    out << "\n[corrected loop]\n";
    std::istringstream lines(summarize(trace));
    for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
    return kOk;
  });
}

int cmd_fuzz(const FuzzOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    GenConfig cfg;
    cfg.field = make_field(opts.p, opts.e, opts.modulus, opts.vars);
    cfg.seed = opts.seed;
    cfg.count = opts.count;
    cfg.max_terms = opts.terms;
    cfg.max_exponent = opts.max_exp;
    cfg.max_degree = opts.max_deg;
    cfg.family_weight = opts.family_weight;
    const DiffReport report = differential_campaign(cfg);

    out << "runs: " << report.total << "\n";
    out << "original claim holds: " << report.original_holds << " (vacuous: " << report.vacuous << ")\n";
    out << "counterexamples (claim fails, corrected loop terminates): " << report.counterexamples << "\n";
    out << "corrected-loop failures: " << report.failures << "\n";
    out << "verifier violations: " << report.verifier_violations << "\n";
    for (const auto& [tag, n] : report.terminals) out << "terminal " << to_string(tag) << ": " << n << "\n";
    for (const auto& f : report.failure_list) out << "  " << f << "\n";
    if (opts.report_path) write_file(*opts.report_path, emit_report(report, cfg));
    if (report.failures) return kInternalError;
    return report.verifier_violations ? kViolations : kOk;
  });
}

}  // namespace asred::cli
