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

// Moment-based PPT test hierarchy.
//
// With p_k = tr((rho^T_B)^k), the k-th test value is
//   f(k) = (-1)^k Z(S_k)(-p_1, ..., -p_k) = e_k(spectrum of rho^T_B),
// and rho^T_B is PSD exactly when f(k) >= 0 for every k = 1..d.

#ifndef PPTM_PPT_ENGINE_HPP
#define PPTM_PPT_ENGINE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pptm/linalg.hpp"

namespace pptm::ppt {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kMomentImaginaryTolerance = 1e-10;
inline constexpr double kCrossPathTolerance = 1e-8;
inline constexpr double kRankThreshold = 1e-10;

struct FSequence {
    std::vector<double> values;  // f(1)..f(m)
    double tolerance = kDefaultTolerance;
    std::optional<std::size_t> first_violation;  // least k with f(k) < -tolerance
};

enum class Verdict { Entangled, PptConsistent };
enum class OracleVerdict { Npt, Ppt };

const char *to_string(Verdict v);
const char *to_string(OracleVerdict v);

struct OracleResult {
    OracleVerdict verdict = OracleVerdict::Ppt;
    double min_eigenvalue = 0.0;
};

struct TestReport {
    std::vector<double> moments;
    FSequence f;
    Verdict verdict = Verdict::PptConsistent;
    std::optional<OracleResult> oracle;
    std::vector<double> residuals;  // low-order inequalities, k = 1..min(4, d)
    std::size_t dimension = 0;
    std::size_t numerical_rank = 0;
};

/// p_1..p_m of rho^T_B. Throws NumericalConsistencyError when a moment has
/// imaginary part above 1e-10 or p_1 is not within 1e-10 of 1.
std::vector<double> moments_of_partial_transpose(const DensityMatrix &rho, std::size_t m);

/// f(1)..f(m) from given moments, no cross-checks.
FSequence f_sequence_from_moments(std::span<const double> moments, std::size_t m, double tol = kDefaultTolerance);

/// f(1)..f(m) for rho, m <= dim. Cross-checks every f(k) against e_k of the
/// partial-transpose spectrum.
FSequence f_sequence(const DensityMatrix &rho, std::size_t m, double tol = kDefaultTolerance);

/// Residuals of the first four inequalities; each equals k * f(k):
///   r1 = p1, r2 = p1^2 - p2, r3 = p3 + p1^3/2 - 3 p1 p2 / 2,
///   r4 = (p1^2 - p2)^2 / 2 - p1^4 / 3 + 4 p1 p3 / 3 - p4.
std::array<double, 4> low_order_inequalities(std::span<const double> moments);

/// Eigenvalue reference: NPT iff min eigenvalue of rho^T_B < -tol.
OracleResult oracle_ppt(const DensityMatrix &rho, double tol = kDefaultTolerance);

/// Moments, f-sequence to k = dim, verdict and residuals. With
/// `run_oracle`, also the eigenvalue verdict; a disagreement on a state whose
/// min PT eigenvalue exceeds 10 * tol in magnitude throws
/// NumericalConsistencyError.
TestReport full_report(const DensityMatrix &rho, double tol = kDefaultTolerance, bool run_oracle = true);

/// {moments[], f[], verdict, first_violation, oracle{min_eig, verdict},
///  residuals[], tolerance, dimension, numerical_rank}
nlohmann::json report_to_json(const TestReport &report);

}  // namespace pptm::ppt

#endif  // PPTM_PPT_ENGINE_HPP
