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

#include "pptm/matrix_json.hpp"

#include <vector>

#include "pptm/errors.hpp"

namespace pptm {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix &m) {
    std::vector<double> re, im;
    re.reserve(m.entries().size());
    im.reserve(m.entries().size());
    for (const auto &z : m.entries()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const json &j) {
    if (!j.is_object()) throw ParseError("matrix JSON: expected an object");
    for (const char *key : {"rows", "cols", "re"}) {
        if (!j.contains(key)) throw ParseError(std::string("matrix JSON: missing field \"") + key + "\"");
    }
    try {
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const auto re = j.at("re").get<std::vector<double>>();
        std::vector<double> im(re.size(), 0.0);
        if (j.contains("im")) im = j.at("im").get<std::vector<double>>();
        if (im.size() != re.size()) throw ParseError("matrix JSON: \"re\" and \"im\" lengths differ");
        if (re.size() != rows * cols)
            throw ParseError("matrix JSON: " + std::to_string(re.size()) + " entries for " + std::to_string(rows) + "x" +
                             std::to_string(cols));
        std::vector<Complex> entries(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) entries[i] = {re[i], im[i]};
        return ComplexMatrix(rows, cols, std::move(entries));
    } catch (const json::exception &e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
}

json density_to_json(const DensityMatrix &rho) {
    json j = matrix_to_json(rho.matrix());
    j["dim_a"] = rho.partition().dim_a;
    j["dim_b"] = rho.partition().dim_b;
    return j;
}

DensityMatrix density_from_json(const json &j) {
    ComplexMatrix m = matrix_from_json(j);
    Bipartition part{1, m.rows()};
    if (j.contains("dim_a") || j.contains("dim_b")) {
        try {
            part.dim_a = j.at("dim_a").get<std::size_t>();
            part.dim_b = j.at("dim_b").get<std::size_t>();
        } catch (const json::exception &e) {
            throw ParseError(std::string("density JSON: ") + e.what());
        }
    } else if (m.rows() != 1) {
        throw ParseError("density JSON: missing \"dim_a\"/\"dim_b\" bipartition");
    }
    return DensityMatrix(std::move(m), part);
}

json parse_json_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace pptm
