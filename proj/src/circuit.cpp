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

#include "pptm/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "pptm/errors.hpp"

namespace pptm::circuit {

namespace {

void require_k(std::size_t k) {
    if (k == 0) throw InvalidArgument("cycle length k must be >= 1");
}

// Splits x into k base-`base` digits, most significant first.
void decode(std::size_t x, std::size_t base, std::span<std::size_t> digits) {
    for (std::size_t m = digits.size(); m > 0; --m) {
        digits[m - 1] = x % base;
        x /= base;
    }
}

std::size_t encode(std::span<const std::size_t> digits, std::size_t base) {
    std::size_t x = 0;
    for (std::size_t d : digits) x = x * base + d;
    return x;
}

// tr[(P_A ⊗ P_B) rho^{⊗k}] where register m of the image takes its A index
// from register (m + a_shift) mod k and its B index from (m + b_shift) mod k.
// sigma_k is shift +1, sigma_k^{-1} is shift k-1.
Complex shifted_tensor_trace(const DensityMatrix &rho, std::size_t k, std::size_t a_shift, std::size_t b_shift) {
    const std::size_t d = rho.dim();
    const std::size_t db = rho.partition().dim_b;
    const std::size_t total = guarded_power(d, k);
    const ComplexMatrix &m = rho.matrix();
    std::vector<std::size_t> regs(k);
    Complex acc = 0.0;
    // tr[Pi R] = sum_y R[y, Pi(y)].
    for (std::size_t y = 0; y < total; ++y) {
        decode(y, d, regs);
        Complex prod = 1.0;
        for (std::size_t r = 0; r < k && prod != Complex(0.0); ++r) {
            const std::size_t a_src = regs[(r + a_shift) % k] / db;
            const std::size_t b_src = regs[(r + b_shift) % k] % db;
            prod *= m(regs[r], a_src * db + b_src);
        }
        acc += prod;
    }
    return acc;
}

}  // namespace

std::size_t guarded_power(std::size_t base, std::size_t k) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (base != 0 && out > kSizeGuard / base) {
            throw SizeGuardExceeded("tensor power " + std::to_string(base) + "^" + std::to_string(k) +
                                    " exceeds the size guard of " + std::to_string(kSizeGuard));
        }
        out *= base;
    }
    if (out > kSizeGuard) {
        throw SizeGuardExceeded("tensor power " + std::to_string(base) + "^" + std::to_string(k) +
                                " exceeds the size guard of " + std::to_string(kSizeGuard));
    }
    return out;
}

PermutationOperator::PermutationOperator(std::size_t k, std::size_t local_dim) : k_(k), local_dim_(local_dim) {
    require_k(k);
    if (local_dim == 0) throw InvalidArgument("cyclic_perm_operator: local dimension must be >= 1");
    const std::size_t total = guarded_power(local_dim, k);
    image_.resize(total);
    std::vector<std::size_t> digits(k), shifted(k);
    for (std::size_t x = 0; x < total; ++x) {
        decode(x, local_dim, digits);
        for (std::size_t m = 0; m < k; ++m) shifted[m] = digits[(m + 1) % k];
        image_[x] = encode(shifted, local_dim);
    }
}

PermutationOperator PermutationOperator::inverse() const {
    PermutationOperator out;
    out.k_ = k_;
    out.local_dim_ = local_dim_;
    out.image_.resize(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x) out.image_[image_[x]] = x;
    return out;
}

ComplexMatrix PermutationOperator::to_matrix() const {
    ComplexMatrix m(dim(), dim());
    for (std::size_t x = 0; x < dim(); ++x) m(image_[x], x) = 1.0;
    return m;
}

PermutationOperator cyclic_perm_operator(std::size_t k, std::size_t local_dim) {
    return PermutationOperator(k, local_dim);
}

double perm_moment_trace(const DensityMatrix &rho, std::size_t k) {
    require_k(k);
    return shifted_tensor_trace(rho, k, 1, k - 1).real();
}

OutcomeProbabilities hadamard_outcome_probabilities(const DensityMatrix &rho, std::size_t k) {
    require_k(k);
    const Complex forward = shifted_tensor_trace(rho, k, 1, k - 1);
    const Complex backward = shifted_tensor_trace(rho, k, k - 1, 1);
    const double sym = 0.5 * (forward + backward).real();
    return {0.5 * (1.0 + sym), 0.5 * (1.0 - sym)};
}

double hadamard_test_expectation(const DensityMatrix &rho, std::size_t k) {
    const auto probs = hadamard_outcome_probabilities(rho, k);
    return probs.p0 - probs.p1;
}

double ensemble_expectation(std::span<const EnsembleMember> ensemble, std::size_t k) {
    require_k(k);
    if (ensemble.empty()) throw InvalidArgument("ensemble_expectation: empty ensemble");
    const std::size_t n = ensemble.size();
    guarded_power(n, k);
    auto inner = [](const std::vector<Complex> &u, const std::vector<Complex> &v) {
        Complex s = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
        return s;
    };
    std::vector<std::size_t> pick(k, 0);
    double total = 0.0;
    while (true) {
        double weight = 1.0;
        for (std::size_t i : pick) weight *= ensemble[i].weight;
        // sigma shifts the A factors left, sigma^{-1} the B factors right.
        Complex amp = 1.0;
        for (std::size_t m = 0; m < k; ++m) {
            const auto &here = ensemble[pick[m]];
            amp *= inner(here.psi, ensemble[pick[(m + 1) % k]].psi);
            amp *= inner(here.phi, ensemble[pick[(m + k - 1) % k]].phi);
        }
        total += weight * amp.real();
        std::size_t pos = k;
        while (pos > 0 && pick[pos - 1] == n - 1) pick[--pos] = 0;
        if (pos == 0) break;
        ++pick[pos - 1];
    }
    return total;
}

DensityMatrix ensemble_density(std::span<const EnsembleMember> ensemble) {
    if (ensemble.empty()) throw InvalidArgument("ensemble_density: empty ensemble");
    const std::size_t da = ensemble.front().psi.size();
    const std::size_t db = ensemble.front().phi.size();
    ComplexMatrix rho(da * db, da * db);
    for (const auto &member : ensemble) {
        if (member.psi.size() != da || member.phi.size() != db) {
            throw DimensionMismatch("ensemble_density: members have different local dimensions");
        }
        std::vector<Complex> v(da * db);
        for (std::size_t i = 0; i < da; ++i) {
            for (std::size_t j = 0; j < db; ++j) v[i * db + j] = member.psi[i] * member.phi[j];
        }
        for (std::size_t r = 0; r < v.size(); ++r) {
            for (std::size_t c = 0; c < v.size(); ++c) rho(r, c) += member.weight * v[r] * std::conj(v[c]);
        }
    }
    return DensityMatrix(std::move(rho), {da, db});
}

ShotEstimate sample_expectation(double expectation, std::size_t k, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw InvalidArgument("sample_hadamard_test: shots must be >= 1");
    const double p_plus = std::clamp(0.5 * (1.0 + expectation), 0.0, 1.0);
    std::mt19937_64 rng(seed);
    std::int64_t sum = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        // 53-bit uniform in [0, 1); mt19937_64 output is fully specified.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        sum += (u < p_plus) ? 1 : -1;
    }
    ShotEstimate out;
    out.k = k;
    out.shots = shots;
    out.seed = seed;
    out.mean = static_cast<double>(sum) / static_cast<double>(shots);
    out.std_error = std::sqrt(std::max(0.0, 1.0 - out.mean * out.mean) / static_cast<double>(shots));
    return out;
}

ShotEstimate sample_hadamard_test(const DensityMatrix &rho, std::size_t k, std::uint64_t shots, std::uint64_t seed) {
    return sample_expectation(hadamard_test_expectation(rho, k), k, shots, seed);
}

nlohmann::json estimate_to_json(const ShotEstimate &e) {
    return {{"k", e.k}, {"mean", e.mean}, {"shots", e.shots}, {"std_error", e.std_error}, {"seed", e.seed}};
}

}  // namespace pptm::circuit
