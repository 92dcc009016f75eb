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

// Command implementations behind the CLI. Each returns the rendered output
// and the process exit status; nothing here touches stdout.

#ifndef PPTM_COMMANDS_HPP
#define PPTM_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pptm/circuit.hpp"
#include "pptm/linalg.hpp"
#include "pptm/ppt_engine.hpp"

namespace pptm::cli {

enum class Format { Json, Csv };

inline constexpr int kExitConsistent = 0;
inline constexpr int kExitEntangled = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitInconclusive = 3;

/// Significance multiple for shots-mode sign decisions.
inline constexpr double kShotsSigma = 3.0;

struct RunConfig {
    std::string state = "bell";
    std::optional<std::size_t> max_k;  // empty = dimension
    double tolerance = ppt::kDefaultTolerance;
    std::optional<Format> format;      // empty = command default
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> shots;
    bool oracle = false;
};

struct CommandResult {
    int exit_code = kExitConsistent;
    std::string output;
};

enum class SignStatus { Satisfied, Violated, Inconclusive };
const char *to_string(SignStatus s);

/// f-sequence from circuit-sampled moments.
struct SampledFSequence {
    std::vector<circuit::ShotEstimate> moments;
    std::vector<double> values;
    std::vector<double> std_errors;  // first-order propagation
    std::vector<SignStatus> status;
};

/// Samples p_1..p_m (seed + k for moment k) and propagates the shot noise
/// through de_k/dp_j = (-1)^{j+1} e_{k-j} / j.
SampledFSequence sampled_f_sequence(const DensityMatrix &rho, std::size_t m, std::uint64_t shots, std::uint64_t seed,
                                    double tol);

/// Shortest round-trip decimal, '.' separator.
std::string format_real(double x);

CommandResult cmd_test(const RunConfig &config);
CommandResult cmd_fseries(const RunConfig &config);
CommandResult cmd_zeta(const RunConfig &config);
CommandResult cmd_moments(const RunConfig &config);

struct ScanRange {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
};

/// Parses "lo:hi:step" (or a single value).
ScanRange parse_range(const std::string &text);

/// Grid points lo, lo+step, ..., hi (inclusive within rounding), each rounded
/// to 12 decimals.
std::vector<double> scan_grid(const ScanRange &range);

/// Rows (param, first_violation, min_f, final_f); first_violation 0 = none.
/// Recognized parameters: werner p; butterfly t, J, a.
CommandResult cmd_scan(const RunConfig &config, const std::string &parameter, const ScanRange &range);

/// Cross-path invariant table; exit 0 only when every row passes.
CommandResult cmd_selftest(const RunConfig &config);

/// Density matrix of the configured state as interchange JSON.
CommandResult cmd_export(const RunConfig &config);

}  // namespace pptm::cli

#endif  // PPTM_COMMANDS_HPP
