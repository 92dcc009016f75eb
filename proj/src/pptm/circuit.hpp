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

// Hadamard-test estimation of partial-transpose moments.
//
// For rho on H_A ⊗ H_B, tr[(rho^T_B)^k] = tr[(sigma_k ⊗ sigma_k^{-1}) rho^{⊗k}]
// where sigma_k = (k k-1 ... 1) acts on the k copies of H_A and its inverse on
// the copies of H_B. The tensor power is laid out as A1 B1 A2 B2 ... Ak Bk.
// Everything here works at the index level; no d^k x d^k operator is formed
// unless PermutationOperator::to_matrix is called.

#ifndef PPTM_CIRCUIT_HPP
#define PPTM_CIRCUIT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "pptm/linalg.hpp"

namespace pptm::circuit {

/// Largest tensor-power dimension (d^k) any routine here will touch.
inline constexpr std::size_t kSizeGuard = 4096;

/// d^k, or throws SizeGuardExceeded past kSizeGuard.
std::size_t guarded_power(std::size_t base, std::size_t k);

/// sigma_k = (k k-1 ... 1) on (C^d)^{⊗k}:
///   |i_1 i_2 ... i_k> -> |i_2 ... i_k i_1>.
class PermutationOperator {
  public:
    PermutationOperator(std::size_t k, std::size_t local_dim);

    std::size_t k() const noexcept { return k_; }
    std::size_t local_dim() const noexcept { return local_dim_; }
    std::size_t dim() const noexcept { return image_.size(); }
    /// M|x> = |image()[x]>.
    std::span<const std::size_t> image() const noexcept { return image_; }

    PermutationOperator inverse() const;
    ComplexMatrix to_matrix() const;

  private:
    PermutationOperator() = default;
    std::size_t k_ = 0;
    std::size_t local_dim_ = 0;
    std::vector<std::size_t> image_;
};

PermutationOperator cyclic_perm_operator(std::size_t k, std::size_t local_dim);

/// Re tr[(sigma_k ⊗ sigma_k^{-1}) rho^{⊗k}].
double perm_moment_trace(const DensityMatrix &rho, std::size_t k);

struct OutcomeProbabilities {
    double p0 = 0.0;
    double p1 = 0.0;
};

/// Ancilla statistics of the controlled-permutation Hadamard test:
/// P(0|1) = tr[(2 ± Pi ± Pi^dagger)/4 rho^{⊗k}], Pi = sigma_k ⊗ sigma_k^{-1}.
OutcomeProbabilities hadamard_outcome_probabilities(const DensityMatrix &rho, std::size_t k);

/// <Z> = P(0) - P(1).
double hadamard_test_expectation(const DensityMatrix &rho, std::size_t k);

/// One member (weight, |psi> ⊗ |phi>) of a product-state ensemble.
struct EnsembleMember {
    double weight = 0.0;
    std::vector<Complex> psi;  // on H_A
    std::vector<Complex> phi;  // on H_B
};

/// <Z> averaged over every k-tuple of ensemble members drawn independently,
/// evaluated member-tuple by member-tuple as the circuit would see them.
double ensemble_expectation(std::span<const EnsembleMember> ensemble, std::size_t k);

/// sum_i w_i |psi_i><psi_i| ⊗ |phi_i><phi_i|.
DensityMatrix ensemble_density(std::span<const EnsembleMember> ensemble);

struct ShotEstimate {
    std::size_t k = 0;
    double mean = 0.0;
    std::uint64_t shots = 0;
    double std_error = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const ShotEstimate &, const ShotEstimate &) = default;
};

/// Draws `shots` ±1 outcomes with P(+1) = (1 + <Z>)/2 from a generator
/// seeded with `seed`. std_error = sqrt((1 - mean^2) / shots).
ShotEstimate sample_hadamard_test(const DensityMatrix &rho, std::size_t k, std::uint64_t shots, std::uint64_t seed);

/// Same draw for a known expectation value.
ShotEstimate sample_expectation(double expectation, std::size_t k, std::uint64_t shots, std::uint64_t seed);

nlohmann::json estimate_to_json(const ShotEstimate &e);

}  // namespace pptm::circuit

#endif  // PPTM_CIRCUIT_HPP
