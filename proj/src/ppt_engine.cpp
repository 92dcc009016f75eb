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

#include "pptm/ppt_engine.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>

#include "pptm/errors.hpp"
#include "pptm/sympoly.hpp"

namespace pptm::ppt {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

}  // namespace

const char *to_string(Verdict v) { return v == Verdict::Entangled ? "ENTANGLED" : "PPT_CONSISTENT"; }
const char *to_string(OracleVerdict v) { return v == OracleVerdict::Npt ? "NPT" : "PPT"; }

std::vector<double> moments_of_partial_transpose(const DensityMatrix &rho, std::size_t m) {
    if (m == 0) throw InvalidArgument("moments_of_partial_transpose: m must be >= 1");
    const auto traces = traces_of_powers(partial_transpose(rho), m);
    std::vector<double> out;
    out.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (std::abs(traces[k].imag()) > kMomentImaginaryTolerance) {
            throw NumericalConsistencyError("moment p_" + std::to_string(k + 1) + " has imaginary part " +
                                            fmt(traces[k].imag()));
        }
        out.push_back(traces[k].real());
    }
    if (std::abs(out[0] - 1.0) > kMomentImaginaryTolerance) {
        throw NumericalConsistencyError("moment p_1 = " + fmt(out[0]) + " is not 1");
    }
    return out;
}

FSequence f_sequence_from_moments(std::span<const double> moments, std::size_t m, double tol) {
    if (tol < 0.0) throw InvalidArgument("f_sequence: tolerance must be >= 0");
    if (moments.size() < m) throw InvalidArgument("f_sequence: not enough moments");
    FSequence out;
    out.tolerance = tol;
    out.values.reserve(m);
    for (std::size_t k = 1; k <= m; ++k) {
        const double f = sympoly::elementary_closed_form(moments, k);
        out.values.push_back(f);
        if (!out.first_violation && f < -tol) out.first_violation = k;
    }
    return out;
}

FSequence f_sequence(const DensityMatrix &rho, std::size_t m, double tol) {
    if (m > rho.dim()) {
        throw InvalidArgument("f_sequence: m = " + std::to_string(m) + " exceeds dimension " +
                              std::to_string(rho.dim()));
    }
    const auto moments = moments_of_partial_transpose(rho, std::max<std::size_t>(m, 1));
    FSequence out = f_sequence_from_moments(moments, m, tol);

    const auto spectrum = hermitian_eigenvalues(partial_transpose(rho));
    const auto e = sympoly::elementary_from_roots(spectrum);
    for (std::size_t k = 1; k <= m; ++k) {
        const double gap = std::abs(out.values[k - 1] - e[k]);
        if (gap > kCrossPathTolerance * std::max(1.0, std::abs(e[k]))) {
            throw NumericalConsistencyError("f(" + std::to_string(k) + ") = " + fmt(out.values[k - 1]) +
                                            " disagrees with e_k of the spectrum " + fmt(e[k]));
        }
    }
    return out;
}

std::array<double, 4> low_order_inequalities(std::span<const double> moments) {
    if (moments.size() < 4) throw InvalidArgument("low_order_inequalities: need p_1..p_4");
    const double p1 = moments[0], p2 = moments[1], p3 = moments[2], p4 = moments[3];
    const double d2 = p1 * p1 - p2;
    return {
        p1,
        d2,
        p3 + 0.5 * p1 * p1 * p1 - 1.5 * p1 * p2,
        0.5 * d2 * d2 - p1 * p1 * p1 * p1 / 3.0 + 4.0 * p1 * p3 / 3.0 - p4,
    };
}

OracleResult oracle_ppt(const DensityMatrix &rho, double tol) {
    const auto spectrum = hermitian_eigenvalues(partial_transpose(rho));
    OracleResult out;
    out.min_eigenvalue = spectrum.front();
    out.verdict = out.min_eigenvalue < -tol ? OracleVerdict::Npt : OracleVerdict::Ppt;
    return out;
}

TestReport full_report(const DensityMatrix &rho, double tol, bool run_oracle) {
    TestReport report;
    report.dimension = rho.dim();
    const std::size_t d = rho.dim();
    // Moments past d feed only the low-order residuals, never the hierarchy.
    const auto moments = moments_of_partial_transpose(rho, std::max<std::size_t>(d, 4));
    report.moments.assign(moments.begin(), moments.begin() + static_cast<std::ptrdiff_t>(d));
    report.f = f_sequence(rho, d, tol);
    report.verdict = report.f.first_violation ? Verdict::Entangled : Verdict::PptConsistent;

    const auto r = low_order_inequalities(moments);
    report.residuals.assign(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(4, d)));

    const auto spectrum = hermitian_eigenvalues(partial_transpose(rho));
    report.numerical_rank = static_cast<std::size_t>(
        std::count_if(spectrum.begin(), spectrum.end(), [](double x) { return std::abs(x) > kRankThreshold; }));

    if (run_oracle) {
        OracleResult oracle;
        oracle.min_eigenvalue = spectrum.front();
        oracle.verdict = oracle.min_eigenvalue < -tol ? OracleVerdict::Npt : OracleVerdict::Ppt;
        report.oracle = oracle;
        const bool agree = (report.verdict == Verdict::Entangled) == (oracle.verdict == OracleVerdict::Npt);
        if (!agree && std::abs(oracle.min_eigenvalue) > 10.0 * tol) {
            throw NumericalConsistencyError("f-sequence verdict " + std::string(to_string(report.verdict)) +
                                            " contradicts eigenvalue oracle (min eigenvalue " +
                                            fmt(oracle.min_eigenvalue) + ")");
        }
    }
    return report;
}

nlohmann::json report_to_json(const TestReport &report) {
    nlohmann::json j;
    j["dimension"] = report.dimension;
    j["moments"] = report.moments;
    j["f"] = report.f.values;
    j["tolerance"] = report.f.tolerance;
    j["verdict"] = to_string(report.verdict);
    j["first_violation"] = report.f.first_violation ? nlohmann::json(*report.f.first_violation) : nlohmann::json();
    if (report.oracle) {
        j["oracle"] = {{"min_eig", report.oracle->min_eigenvalue}, {"verdict", to_string(report.oracle->verdict)}};
    } else {
        j["oracle"] = nullptr;
    }
    j["residuals"] = report.residuals;
    j["numerical_rank"] = report.numerical_rank;
    return j;
}

}  // namespace pptm::ppt
