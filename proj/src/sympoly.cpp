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

#include "pptm/sympoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pptm/errors.hpp"

namespace pptm::sympoly {

namespace {

void require_length(std::span<const double> x, std::size_t k, const char *what) {
    if (x.size() < k) {
        throw InvalidArgument(std::string(what) + ": need " + std::to_string(k) + " values, got " +
                              std::to_string(x.size()));
    }
}

void partitions_from(std::size_t j, std::size_t remaining, PartitionVector &current,
                     const std::function<void(const PartitionVector &)> &visit) {
    if (j > current.k) {
        if (remaining == 0) visit(current);
        return;
    }
    for (std::size_t n = 0; n * j <= remaining; ++n) {
        const std::size_t rest = remaining - n * j;
        // Parts j+1..k must be able to absorb what is left.
        if (rest != 0 && rest < j + 1) continue;
        current.multiplicities[j - 1] = n;
        partitions_from(j + 1, rest, current, visit);
    }
    current.multiplicities[j - 1] = 0;
}

double int_power(double base, std::size_t exponent) {
    double out = 1.0;
    for (std::size_t i = 0; i < exponent; ++i) out *= base;
    return out;
}

// prod_j x_j^{n_j}
double monomial(const PartitionVector &part, std::span<const double> x) {
    double out = 1.0;
    for (std::size_t j = 1; j <= part.k; ++j) {
        if (part.n(j) != 0) out *= int_power(x[j - 1], part.n(j));
    }
    return out;
}

// 1 / prod_j (n_j! j^{n_j}) in floating point, for orders beyond exact range.
long double inverse_centralizer(const PartitionVector &part) {
    long double denom = 1.0L;
    for (std::size_t j = 1; j <= part.k; ++j) {
        for (std::size_t m = 1; m <= part.n(j); ++m) denom *= static_cast<long double>(m) * static_cast<long double>(j);
    }
    return 1.0L / denom;
}

// sum_partitions prod x_j^{n_j} / (n_j! j^{n_j}), optionally weighted by a
// per-partition sign.
template <class Weight>
double weighted_cycle_sum(std::size_t k, std::span<const double> x, Weight &&weight) {
    if (k <= kMaxExactOrder) {
        const double kfact = static_cast<double>(factorial(k));
        double total = 0.0;
        for_each_partition(k, [&](const PartitionVector &part) {
            const double w = weight(part);
            if (w == 0.0) return;
            total += w * static_cast<double>(cycle_type_count(part)) * monomial(part, x);
        });
        return total / kfact;
    }
    long double total = 0.0L;
    for_each_partition(k, [&](const PartitionVector &part) {
        const double w = weight(part);
        if (w == 0.0) return;
        total += static_cast<long double>(w) * inverse_centralizer(part) * monomial(part, x);
    });
    return static_cast<double>(total);
}

}  // namespace

std::size_t PartitionVector::even_part_count() const {
    std::size_t total = 0;
    for (std::size_t j = 2; j <= k; j += 2) total += n(j);
    return total;
}

void for_each_partition(std::size_t k, const std::function<void(const PartitionVector &)> &visit) {
    PartitionVector current{k, std::vector<std::size_t>(k, 0)};
    if (k == 0) {
        visit(current);
        return;
    }
    partitions_from(1, k, current, visit);
}

std::vector<PartitionVector> partitions(std::size_t k) {
    std::vector<PartitionVector> out;
    for_each_partition(k, [&](const PartitionVector &p) { out.push_back(p); });
    return out;
}

std::uint64_t factorial(std::size_t n) {
    if (n > kMaxExactOrder) throw InvalidArgument("factorial: " + std::to_string(n) + "! overflows 64 bits");
    std::uint64_t out = 1;
    for (std::size_t i = 2; i <= n; ++i) out *= i;
    return out;
}

std::uint64_t cycle_type_count(const PartitionVector &part) {
    std::uint64_t denom = 1;
    for (std::size_t j = 1; j <= part.k; ++j) {
        for (std::size_t m = 1; m <= part.n(j); ++m) denom *= static_cast<std::uint64_t>(m) * j;
    }
    return factorial(part.k) / denom;
}

std::uint64_t set_partition_count(const PartitionVector &part) {
    std::uint64_t denom = 1;
    for (std::size_t j = 1; j <= part.k; ++j) {
        const std::uint64_t jf = factorial(j);
        for (std::size_t m = 1; m <= part.n(j); ++m) denom *= static_cast<std::uint64_t>(m) * jf;
    }
    return factorial(part.k) / denom;
}

double elementary_direct(std::span<const double> values, std::size_t k) {
    const std::size_t n = values.size();
    if (k > n) return 0.0;
    if (k == 0) return 1.0;
    // Walk all k-subsets j_1 < ... < j_k in lexicographic order.
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    double total = 0.0;
    while (true) {
        double prod = 1.0;
        for (std::size_t i : idx) prod *= values[i];
        total += prod;
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + (pos - 1)) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return total;
}

std::vector<double> elementary_from_roots(std::span<const double> values) {
    std::vector<double> e(values.size() + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t m = 0; m < values.size(); ++m) {
        for (std::size_t k = m + 1; k >= 1; --k) e[k] += values[m] * e[k - 1];
    }
    return e;
}

std::vector<double> newton_elementary(std::span<const double> moments, std::size_t n) {
    require_length(moments, n, "newton_elementary");
    std::vector<double> e(n + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (std::size_t i = 1; i <= k; ++i) {
            const double term = e[k - i] * moments[i - 1];
            acc += (i % 2 == 1) ? term : -term;
        }
        e[k] = acc / static_cast<double>(k);
    }
    return {e.begin() + 1, e.end()};
}

double elementary_closed_form(std::span<const double> moments, std::size_t k) {
    require_length(moments, k, "elementary_closed_form");
    std::vector<double> neg(moments.begin(), moments.begin() + static_cast<std::ptrdiff_t>(k));
    for (auto &v : neg) v = -v;
    const double z = weighted_cycle_sum(k, neg, [](const PartitionVector &) { return 1.0; });
    return (k % 2 == 0) ? z : -z;
}

double bell_polynomial(std::size_t k, std::span<const double> x) {
    require_length(x, k, "bell_polynomial");
    if (k > kMaxExactOrder) throw InvalidArgument("bell_polynomial: order above " + std::to_string(kMaxExactOrder));
    double total = 0.0;
    for_each_partition(k, [&](const PartitionVector &part) {
        total += static_cast<double>(set_partition_count(part)) * monomial(part, x);
    });
    return total;
}

double cycle_index_symmetric(std::size_t k, std::span<const double> x) {
    require_length(x, k, "cycle_index_S");
    return weighted_cycle_sum(k, x, [](const PartitionVector &) { return 1.0; });
}

double cycle_index_alternating(std::size_t k, std::span<const double> x) {
    if (k == 0) throw InvalidArgument("cycle_index_A: k must be >= 1");
    require_length(x, k, "cycle_index_A");
    if (k == 1) return x[0];
    return weighted_cycle_sum(k, x,
                              [](const PartitionVector &p) { return p.even_part_count() % 2 == 0 ? 2.0 : 0.0; });
}

std::size_t descartes_bound(std::span<const double> coefficients) {
    std::size_t changes = 0;
    int last_sign = 0;
    for (double c : coefficients) {
        if (c == 0.0) continue;
        const int sign = c > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++changes;
        last_sign = sign;
    }
    if (last_sign == 0) throw InvalidArgument("descartes_bound: zero polynomial");
    return changes;
}

ParitySums even_odd_split(std::size_t k, std::span<const double> moments) {
    if (k > kMaxEnumerationOrder) {
        throw InvalidArgument("even_odd_split: k = " + std::to_string(k) + " is too large to enumerate S_k (max " +
                              std::to_string(kMaxEnumerationOrder) + "); use the f-sequence closed form instead");
    }
    require_length(moments, k, "even_odd_split");
    ParitySums out;
    if (k == 0) {
        out.even_sum = 1.0;
        return out;
    }
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> seen(k);
    do {
        std::fill(seen.begin(), seen.end(), 0);
        double prod = 1.0;
        std::size_t cycles = 0;
        for (std::size_t start = 0; start < k; ++start) {
            if (seen[start]) continue;
            std::size_t len = 0;
            for (std::size_t i = start; !seen[i]; i = perm[i]) {
                seen[i] = 1;
                ++len;
            }
            prod *= moments[len - 1];
            ++cycles;
        }
        if ((k - cycles) % 2 == 0) {
            out.even_sum += prod;
        } else {
            out.odd_sum += prod;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<double> power_sums(std::span<const double> values, std::size_t count) {
    std::vector<double> out(count, 0.0);
    for (double v : values) {
        double pw = 1.0;
        for (std::size_t k = 0; k < count; ++k) {
            pw *= v;
            out[k] += pw;
        }
    }
    return out;
}

}  // namespace pptm::sympoly
