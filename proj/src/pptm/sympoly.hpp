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

// Symmetric-polynomial machinery shared by the moment tests.
//
// Every partition-indexed sum runs over multiplicity vectors (n_1..n_k) with
// sum_j j*n_j = k. The integer weight k!/prod(n_j! j^{n_j}) is the number of
// permutations in S_k with that cycle type; it is formed exactly in 64-bit
// arithmetic (valid for k <= 20) and only converted to double at the final
// multiply.

#ifndef PPTM_SYMPOLY_HPP
#define PPTM_SYMPOLY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace pptm::sympoly {

inline constexpr std::size_t kMaxExactOrder = 20;
inline constexpr std::size_t kMaxEnumerationOrder = 8;

/// Multiplicities (n_1, ..., n_k) of a partition of k.
struct PartitionVector {
    std::size_t k = 0;
    std::vector<std::size_t> multiplicities;  // length k; n_j at index j-1

    std::size_t n(std::size_t j) const { return multiplicities[j - 1]; }
    /// n_2 + n_4 + ..., the number of even-length cycles.
    std::size_t even_part_count() const;
    friend bool operator==(const PartitionVector &, const PartitionVector &) = default;
};

/// Calls `visit` once for every partition of k, in lexicographic order of
/// (n_1, ..., n_k).
void for_each_partition(std::size_t k, const std::function<void(const PartitionVector &)> &visit);

/// Materialized for_each_partition.
std::vector<PartitionVector> partitions(std::size_t k);

/// k! / prod_j (n_j! j^{n_j}): permutations of S_k with this cycle type.
std::uint64_t cycle_type_count(const PartitionVector &part);

/// k! / prod_j (n_j! (j!)^{n_j}): set partitions of k with this block type.
std::uint64_t set_partition_count(const PartitionVector &part);

std::uint64_t factorial(std::size_t n);

/// e_k by summing every k-subset product. Returns 0 when k > n.
double elementary_direct(std::span<const double> values, std::size_t k);

/// e_0..e_n from the expansion of prod(1 + x_j t).
std::vector<double> elementary_from_roots(std::span<const double> values);

/// e_1..e_n by Newton's recursion k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i.
/// `moments` holds p_1, p_2, ... and must have at least n entries.
std::vector<double> newton_elementary(std::span<const double> moments, std::size_t n);

/// e_k = (-1)^k sum_partitions prod_j (-p_j)^{n_j} / (n_j! j^{n_j}).
double elementary_closed_form(std::span<const double> moments, std::size_t k);

/// Complete exponential Bell polynomial,
/// B_k(x) = sum_partitions k!/prod(n_j! (j!)^{n_j}) prod x_j^{n_j}.
double bell_polynomial(std::size_t k, std::span<const double> x);

/// Z(S_k)(x) = sum_partitions prod x_j^{n_j} / (n_j! j^{n_j}).
double cycle_index_symmetric(std::size_t k, std::span<const double> x);

/// Z(A_k)(x). For k >= 2 this is the partition sum weighted by
/// (1 + (-1)^{n_2+n_4+...}); A_1 is the trivial group and gives x_1.
double cycle_index_alternating(std::size_t k, std::span<const double> x);

/// Number of sign changes in the coefficient sequence (ascending degree),
/// skipping zeros. Throws InvalidArgument for the zero polynomial.
std::size_t descartes_bound(std::span<const double> coefficients);

struct ParitySums {
    double even_sum = 0.0;  // sum over A_k of prod p_j^{c_j(sigma)}
    double odd_sum = 0.0;   // same over S_k \ A_k
};

/// Explicit enumeration of S_k, split by permutation parity. k <= 8.
ParitySums even_odd_split(std::size_t k, std::span<const double> moments);

/// Power sums p_1..p_count of the given values.
std::vector<double> power_sums(std::span<const double> values, std::size_t count);

}  // namespace pptm::sympoly

#endif  // PPTM_SYMPOLY_HPP
