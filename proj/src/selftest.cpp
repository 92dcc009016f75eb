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

// Runtime cross-path checks exposed as `selftest`.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "pptm/circuit.hpp"
#include "pptm/commands.hpp"
#include "pptm/graph_zeta.hpp"
#include "pptm/states.hpp"
#include "pptm/sympoly.hpp"

namespace pptm::cli {

namespace {

struct Row {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::string sci(double x) {
    std::ostringstream s;
    s.precision(2);
    s << std::scientific << x;
    return s.str();
}

Row symmetric_three_way(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 8;
        std::vector<double> x(n);
        for (auto &v : x) v = uni(rng);
        const auto p = sympoly::power_sums(x, n + 2);
        const auto newton = sympoly::newton_elementary(p, n + 2);
        for (std::size_t k = 1; k <= n + 2; ++k) {
            const double direct = sympoly::elementary_direct(x, k);
            const double closed = sympoly::elementary_closed_form(p, k);
            const double scale = std::max(1.0, std::abs(direct));
            worst = std::max({worst, std::abs(newton[k - 1] - direct) / scale, std::abs(closed - direct) / scale});
        }
    }
    return {"elementary: direct == newton == closed form", worst <= 1e-9, "max rel err " + sci(worst)};
}

Row moment_lemma(std::uint64_t seed) {
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto rho = states::random_density(2, 2, seed + s);
        const auto pt = partial_transpose(rho);
        for (std::size_t k = 1; k <= 3; ++k) {
            worst = std::max(worst, std::abs(circuit::perm_moment_trace(rho, k) - trace_of_power(pt, k).real()));
        }
    }
    return {"tr[(rho^T)^k] == tr[(sigma x sigma^-1) rho^(x)k]", worst <= 1e-10, "max abs err " + sci(worst)};
}

Row hierarchy_vs_oracle(std::uint64_t seed) {
    std::size_t checked = 0, agree = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const std::size_t db = (s % 2 == 0) ? 2 : 3;
        const auto rho = states::random_density(2, db, seed + 1000 + s);
        const auto oracle = ppt::oracle_ppt(rho);
        if (std::abs(oracle.min_eigenvalue) <= 1e-8) continue;
        const auto f = ppt::f_sequence(rho, rho.dim());
        ++checked;
        agree += (f.first_violation.has_value() == (oracle.verdict == ppt::OracleVerdict::Npt)) ? 1 : 0;
    }
    return {"f-sequence verdict == eigenvalue verdict", agree == checked,
            std::to_string(agree) + "/" + std::to_string(checked)};
}

Row zeta_dual_path(std::uint64_t seed) {
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto m = states::random_hermitian(4, seed + 2000 + s);
        const auto a = zeta::zeta_inverse_coeffs_via_primes(zeta::graph_from_matrix(m), 4);
        const auto b = zeta::zeta_coeffs_via_moments(m, 4);
        for (std::size_t k = 0; k <= 4; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return {"zeta coefficients: primes == moments", worst <= 1e-9, "max abs err " + sci(worst)};
}

Row bell_graph() {
    const auto g = zeta::graph_from_matrix(partial_transpose(states::bell_state()));
    const auto primes = zeta::enumerate_prime_classes(g, 3);
    const auto c3 = zeta::graph_condition(primes, 3);
    const bool ok = primes.size() == 3 && !c3.satisfied && std::abs(c3.lhs) <= 1e-12 &&
                    std::abs(c3.rhs - 1.0 / 24.0) <= 1e-12;
    return {"Bell graph: 3 primes, k=3 condition 0 < 1/24", ok,
            "primes " + std::to_string(primes.size()) + ", rhs " + sci(c3.rhs)};
}

Row werner_threshold() {
    std::size_t wrong = 0;
    for (int i = 0; i <= 20; ++i) {
        const double p = i * 0.05;
        const auto f = ppt::f_sequence(states::werner(p), 4);
        wrong += (f.first_violation.has_value() != (p > 1.0 / 3.0)) ? 1 : 0;
    }
    return {"Werner: violation iff p > 1/3", wrong == 0, std::to_string(wrong) + " grid points wrong"};
}

Row descartes_parity(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 3000);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    std::size_t bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 8;
        std::vector<double> roots(n);
        for (auto &r : roots) r = uni(rng);
        // prod (x - r): ascending coefficients are (-1)^{n-k} e_{n-k}(roots).
        const auto e = sympoly::elementary_from_roots(roots);
        std::vector<double> coeffs(n + 1);
        for (std::size_t k = 0; k <= n; ++k) coeffs[k] = ((n - k) % 2 == 0 ? 1.0 : -1.0) * e[n - k];
        const std::size_t positive = static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [](double r) { return r > 0; }));
        const std::size_t bound = sympoly::descartes_bound(coeffs);
        bad += (bound < positive || (bound - positive) % 2 != 0) ? 1 : 0;
    }
    return {"Descartes: bound >= #positive roots, same parity", bad == 0, std::to_string(bad) + " failures"};
}

Row sampler_determinism(std::uint64_t seed) {
    const auto rho = states::bell_state();
    const auto a = circuit::sample_hadamard_test(rho, 3, 10000, seed);
    const auto b = circuit::sample_hadamard_test(rho, 3, 10000, seed);
    const bool ok = a == b && std::abs(a.mean - 0.25) <= 5.0 * a.std_error;
    return {"sampler: reproducible, mean within 5 sigma", ok, "mean " + sci(a.mean) + " +- " + sci(a.std_error)};
}

}  // namespace

CommandResult cmd_selftest(const RunConfig &config) {
    std::vector<std::function<Row()>> checks = {
        [&] { return symmetric_three_way(config.seed); },
        [&] { return moment_lemma(config.seed); },
        [&] { return hierarchy_vs_oracle(config.seed); },
        [&] { return zeta_dual_path(config.seed); },
        [] { return bell_graph(); },
        [] { return werner_threshold(); },
        [&] { return descartes_parity(config.seed); },
        [&] { return sampler_determinism(config.seed); },
    };
    std::ostringstream s;
    bool all = true;
    for (const auto &check : checks) {
        Row row;
        try {
            row = check();
        } catch (const std::exception &e) {
            row = {"(check threw)", false, e.what()};
        }
        all = all && row.passed;
        s << (row.passed ? "PASS  " : "FAIL  ") << row.name << "  [" << row.detail << "]\n";
    }
    s << (all ? "all checks passed\n" : "some checks FAILED\n");
    return {all ? kExitConsistent : kExitError, s.str()};
}

}  // namespace pptm::cli
