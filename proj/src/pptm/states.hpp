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

#ifndef PPTM_STATES_HPP
#define PPTM_STATES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pptm/linalg.hpp"

namespace pptm::states {

// Qubit 1 is the most significant bit of the basis index: |1011> is index 11.

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// `op` on qubit `site` (0-based) of an n-qubit register, identity elsewhere.
ComplexMatrix single_site(const ComplexMatrix &op, std::size_t site, std::size_t n);

/// |psi><psi| with bipartition.
DensityMatrix pure_state(const std::vector<Complex> &psi, Bipartition partition);

/// (|00> + |11>)/sqrt(2), partition 2x2.
DensityMatrix bell_state();

/// (|0...0> + |1...1>)/sqrt(2) on n qubits; first `split` qubits form A.
DensityMatrix ghz(std::size_t n, std::size_t split);

/// p |Psi-><Psi-| + (1 - p) I/4, |Psi-> = (|01> - |10>)/sqrt(2).
DensityMatrix werner(double p);

struct ButterflyParams {
    std::size_t qubit_count = 4;
    double coupling = 1.0;          // J
    double lattice_spacing = 1.0;   // a
    std::vector<double> positions = {0.0, 1.0, 2.0, 3.0};
    double time = 0.0;
    std::vector<int> initial_bitstring = {1, 0, 1, 1};
    std::pair<std::size_t, std::size_t> v_sites = {0, 1};  // 0-based; V = Y Y on these
    std::size_t split = 2;  // qubits in subsystem A

    /// Throws InvalidArgument when positions are not strictly increasing or
    /// lengths disagree with qubit_count.
    void validate() const;
};

/// H = -J sum_{i<j} (a^3 / r_ij^3)(X_i X_j + Y_i Y_j).
ComplexMatrix xy_hamiltonian(const ButterflyParams &params);

/// e^{iHt} e^{iVπ/4} e^{-iHt} |psi(0)>, with hbar = 1.
std::vector<Complex> butterfly_vector(const ButterflyParams &params);
DensityMatrix butterfly_state(const ButterflyParams &params);

/// G G^dagger / tr(G G^dagger), G a seeded (d x rank) complex Gaussian
/// matrix, d = d_a d_b <= 64. rank 0 means full rank.
DensityMatrix random_density(std::size_t d_a, std::size_t d_b, std::uint64_t seed, std::size_t rank = 0);

/// Random single-system density matrix (d x d), same construction.
ComplexMatrix random_local_density(std::size_t d, std::uint64_t seed, std::size_t rank = 0);

/// Random Hermitian d x d with standard Gaussian entries.
ComplexMatrix random_hermitian(std::size_t d, std::uint64_t seed);

/// kron(rho_a, rho_b) with partition (rows(rho_a), rows(rho_b)).
DensityMatrix product_state(const ComplexMatrix &rho_a, const ComplexMatrix &rho_b);

/// Parsed `name:key=value,...` state specifier.
struct StateSpec {
    std::string family;
    std::vector<std::pair<std::string, std::string>> params;

    std::optional<std::string> get(const std::string &key) const;
    /// Replaces or appends key=value.
    void set(const std::string &key, const std::string &value);
    std::string to_string() const;
};

/// Splits "family:k=v,k=v" ("file:<path>" keeps the path whole).
StateSpec parse_state_spec(const std::string &text);

/// Builds the state for bell, ghz, werner, butterfly, random, product
/// (random product of local densities) or file:<path>. Unknown families or
/// keys throw ParseError.
DensityMatrix make_state(const StateSpec &spec);
DensityMatrix make_state(const std::string &text);

}  // namespace pptm::states

#endif  // PPTM_STATES_HPP
