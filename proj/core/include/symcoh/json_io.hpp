// Copyright 2026 The symcoh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON input and output for algebras, decompositions, modules and cochains.
//
// Algebra:        {"dim": 3, "basis": ["h","e","f"],
//                  "brackets": [{"i": 0, "j": 1, "result": [[1, "2"]]}, ...]}   (i < j)
// Decomposition:  {"k_indices": [...], "p_indices": [...]}
//              or {"k_basis": [[...], ...], "p_basis": [[...], ...]}
// Module:         {"dim": m, "actions": [matrix of basis element 0, ...]}, matrices as row lists
// Scalars are integers or "num/den" strings.

#ifndef SYMCOH_JSON_IO_HPP
#define SYMCOH_JSON_IO_HPP

#include <string>

#include "symcoh/reports.hpp"

namespace symcoh {

/// Throws ParseError (unreadable file or malformed JSON).
Json load_json_file(const std::string& path);

/// Throws ParseError, JacobiViolation, ValidationError.
LieAlgebra algebra_from_json(const Json& doc);
Json to_json(const LieAlgebra& g);

/// Throws ParseError, NotComplementary, BracketViolation.
CartanDecomposition decomposition_from_json(const LieAlgebra& g, const Json& doc);

/// Throws ParseError, ValidationError.
CoefficientModule module_from_json(const LieAlgebra& g, const Json& doc);

Json to_json(const Cochain& c, const std::vector<std::string>& labels);

}  // namespace symcoh

#endif  // SYMCOH_JSON_IO_HPP
