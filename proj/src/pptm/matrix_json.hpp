// Copyright 2026 The pptmoments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPTM_MATRIX_JSON_HPP
#define PPTM_MATRIX_JSON_HPP

#include <string>

#include <json.hpp>

#include "pptm/linalg.hpp"

namespace pptm {

// Interchange format: {"rows": n, "cols": n, "re": [...], "im": [...]},
// row-major. Density matrices add "dim_a" and "dim_b".

nlohmann::json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const nlohmann::json &j);

nlohmann::json density_to_json(const DensityMatrix &rho);
/// Requires "dim_a" and "dim_b" unless the matrix is 1x1.
DensityMatrix density_from_json(const nlohmann::json &j);

/// Parses text and throws ParseError on malformed JSON.
nlohmann::json parse_json_text(const std::string &text);

}  // namespace pptm

#endif  // PPTM_MATRIX_JSON_HPP
