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

// Slow, obvious reference implementations. Nothing here calls into the
// library's numerics; tests compare library output against these.

#ifndef PPTM_TESTS_ORACLES_HPP
#define PPTM_TESTS_ORACLES_HPP

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<C>(n)); }

inline Mat mul(const Mat &a, const Mat &b) {
    const std::size_t n = a.size(), m = b[0].size(), inner = b.size();
    Mat out(n, std::vector<C>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < inner; ++l) out[i][j] += a[i][l] * b[l][j];
    return out;
}

inline C trace(const Mat &a) {
    C t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

inline C trace_power(const Mat &a, std::size_t k) {
    Mat p = a;
    for (std::size_t i = 1; i < k; ++i) p = mul(p, a);
    return trace(p);
}

// Gaussian elimination with partial pivoting.
inline C det(Mat a) {
    const std::size_t n = a.size();
    C d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (std::abs(a[piv][c]) == 0.0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const C f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return d;
}

// e_k(spectrum of a) as the sum of principal k x k minors.
inline C principal_minor_sum(const Mat &a, std::size_t k) {
    const std::size_t n = a.size();
    if (k == 0) return 1;
    if (k > n) return 0;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    C total = 0;
    do {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) idx.push_back(i);
        Mat sub = zeros(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[idx[i]][idx[j]];
        total += det(sub);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return total;
}

// sum over k-subsets of the product, by bitmask.
inline double elementary_bruteforce(const std::vector<double> &x, std::size_t k) {
    const std::size_t n = x.size();
    double total = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) prod *= x[i];
        total += prod;
    }
    return total;
}

// Cycle lengths of a permutation given as an image vector.
inline std::vector<std::size_t> cycle_lengths(const std::vector<std::size_t> &perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        for (std::size_t v = s; !seen[v]; v = perm[v]) {
            seen[v] = true;
            ++len;
        }
        out.push_back(len);
    }
    return out;
}

// (1/|G|) sum over G of prod x_{len}; G = S_k or A_k by explicit enumeration.
inline double cycle_index_bruteforce(std::size_t k, const std::vector<double> &x, bool alternating) {
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    double total = 0.0;
    std::size_t count = 0;
    do {
        const auto lens = cycle_lengths(perm);
        const bool even = (k - lens.size()) % 2 == 0;
        if (alternating && !even) continue;
        double prod = 1.0;
        for (auto l : lens) prod *= x[l - 1];
        total += prod;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / static_cast<double>(count);
}

// Number of integer partitions of n by the standard DP.
inline std::uint64_t partition_count(std::size_t n) {
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (std::size_t part = 1; part <= n; ++part)
        for (std::size_t s = part; s <= n; ++s) p[s] += p[s - part];
    return p[n];
}

// Random density matrix (Ginibre) with its own generator.
inline Mat random_density(std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    std::normal_distribution<double> g;
    Mat x = zeros(d);
    for (auto &row : x)
        for (auto &v : row) v = {g(rng), g(rng)};
    Mat xd = zeros(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) xd[i][j] = std::conj(x[j][i]);
    Mat r = mul(x, xd);
    const C t = trace(r);
    for (auto &row : r)
        for (auto &v : row) v /= t;
    return r;
}

// Partial transpose on B by the index definition.
inline Mat partial_transpose_b(const Mat &m, std::size_t da, std::size_t db) {
    Mat out = zeros(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l) out[i * db + k][j * db + l] = m[i * db + l][j * db + k];
    return out;
}

inline int moebius(std::size_t n) {
    int result = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

// Prime classes of length n in a 0/1 adjacency matrix, by Moebius
// inversion of the closed-walk counts tr(A^d).
inline std::int64_t prime_count(const std::vector<std::vector<int>> &adj, std::size_t n) {
    const std::size_t v = adj.size();
    Mat a = zeros(v);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j) a[i][j] = adj[i][j];
    double total = 0.0;
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        total += moebius(n / d) * trace_power(a, d).real();
    }
    return static_cast<std::int64_t>(std::llround(total / static_cast<double>(n)));
}

}  // namespace oracle

#endif  // PPTM_TESTS_ORACLES_HPP
