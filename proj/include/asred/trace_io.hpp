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

#ifndef ASRED_TRACE_IO_HPP
#define ASRED_TRACE_IO_HPP

// JSON form of reduction traces.
//
//   {
//     "params":   {"p": "2", "e": "1", "modulus": null, "vars": ["u"]},
//     "initial":  {"E": "0", "a0": "0", "terms": [{"m": "1", "coeff": "u"}, ...]},
//     "passes":   [{"I": [...], "J": [...], "nu": "1", "mu": "1",
//                   "depths": [{"m": "2", "depth": "1"}, ...],
//                   "kstep": "2",
//                   "replacements": [{"source": "2", "target": "4", "exp": "-4", "coeff": "u"}],
//                   "merges": ["4"], "result": {...equation...}}],
//     "terminal": {"tag": "J_EMPTY", "E": "2", "equation": {...}}
//   }
//
// Every integer is a decimal string; infinite depth is "inf". Coefficients
// use the expression syntax of expr.hpp. Emission is canonical, so
// emit_trace(parse_trace(emit_trace(t))) == emit_trace(t) byte for byte.

#include <string>
#include <string_view>

#include "asred/equation.hpp"
#include <json.hpp>

namespace asred {

using Json = nlohmann::ordered_json;

Json params_to_json(const FieldParams& fp);
FieldRef params_from_json(const Json& j);

Json equation_to_json(const ASEquation& eq);
ASEquation equation_from_json(const FieldRef& field, const Json& j);

Json trace_to_json(const ReductionTrace& trace);
ReductionTrace trace_from_json(const Json& j);

std::string emit_trace(const ReductionTrace& trace);
/// Throws ParseError on malformed JSON or a document that does not match the schema.
ReductionTrace parse_trace(std::string_view text);

/// Decimal-string integer fields.
BigInt bigint_from_json(const Json& j, const char* what);
std::uint64_t u64_from_json(const Json& j, const char* what);

}  // namespace asred

#endif  // ASRED_TRACE_IO_HPP
