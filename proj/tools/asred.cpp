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

#include <iostream>

#include <CLI11.hpp>

#include "asred/cli.hpp"

int main(int argc, char** argv) {
  using namespace asred::cli;

  CLI::App app{"Artin-Schreier equation reduction with checkable traces"};
  app.require_subcommand(1);

  std::string reduce_path;
  std::string trace_path;
  std::size_t max_passes = 0;
  auto* reduce = app.add_subcommand("reduce", "reduce an equation file to a terminal state");
  reduce->add_option("file", reduce_path, "equation file ('-' for stdin)")->required();
  reduce->add_option("--trace", trace_path, "write the reduction trace (JSON) here");
  reduce->add_option("--max-passes", max_passes, "abort after this many passes (default |J| + 1)");

  std::string check_path;
  auto* check = app.add_subcommand("check", "verify a reduction trace independently");
  check->add_option("trace", check_path, "trace document ('-' for stdin)")->required();

  ExampleOptions ex;
  auto* example = app.add_subcommand("example", "run the recombination family through both procedures");
  example->add_option("--p", ex.p, "characteristic")->capture_default_str();
  example->add_option("--e", ex.e, "extension degree of K over F_p")->capture_default_str();
  example->add_option("--modulus", ex.modulus, "defining polynomial in g, required when e > 1");
  example->add_option("--vars", ex.vars, "comma-separated variables of L")->capture_default_str();
  example->add_option("--c0", ex.c0, "c0, outside K and L^p")->capture_default_str();
  example->add_option("--c1", ex.c1, "c1, inside L^p")->capture_default_str();
  example->add_option("--m1", ex.m1, "m1 >= 1")->capture_default_str();

  FuzzOptions fz;
  std::string report_path;
  auto* fuzz = app.add_subcommand("fuzz", "differential campaign over random equations");
  fuzz->add_option("--p", fz.p, "characteristic")->capture_default_str();
  fuzz->add_option("--e", fz.e, "extension degree of K over F_p")->capture_default_str();
  fuzz->add_option("--modulus", fz.modulus, "defining polynomial in g, required when e > 1");
  fuzz->add_option("--vars", fz.vars, "comma-separated variables of L")->capture_default_str();
  fuzz->add_option("--seed", fz.seed, "generator seed")->capture_default_str();
  fuzz->add_option("--count", fz.count, "number of equations")->capture_default_str();
  fuzz->add_option("--terms", fz.terms, "maximum number of terms")->capture_default_str();
  fuzz->add_option("--max-exp", fz.max_exp, "maximum initial exponent m")->capture_default_str();
  fuzz->add_option("--max-deg", fz.max_deg, "maximum total degree of random coefficients")->capture_default_str();
  fuzz->add_option("--family-weight", fz.family_weight, "share of recombination-family instances")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  fuzz->add_option("--report", report_path, "write the report (JSON) here");

  CLI11_PARSE(app, argc, argv);

  if (*reduce) {
    return cmd_reduce(reduce_path, trace_path.empty() ? std::nullopt : std::optional<std::string>(trace_path),
                      max_passes ? std::optional<std::size_t>(max_passes) : std::nullopt, std::cout, std::cerr);
  }
  if (*check) return cmd_check(check_path, std::cout, std::cerr);
  if (*example) return cmd_example(ex, std::cout, std::cerr);
  if (!report_path.empty()) fz.report_path = report_path;
  return cmd_fuzz(fz, std::cout, std::cerr);
}
