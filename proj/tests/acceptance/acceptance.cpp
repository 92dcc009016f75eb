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

// Acceptance run: one PASS/FAIL line per criterion, exit 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pptm/circuit.hpp"
#include "pptm/commands.hpp"
#include "pptm/graph_zeta.hpp"
#include "pptm/ppt_engine.hpp"
#include "pptm/states.hpp"
#include "pptm/sympoly.hpp"

using namespace pptm;
using json = nlohmann::json;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string num(double x) {
    std::ostringstream s;
    s.precision(3);
    s << x;
    return s.str();
}

cli::RunConfig config_for(const std::string &state) {
    cli::RunConfig c;
    c.state = state;
    return c;
}

// 1. Bell end to end.
Outcome bell_end_to_end() {
    const auto start = Clock::now();
    const auto result = cli::cmd_test(config_for("bell"));
    const auto j = json::parse(result.output);
    const auto spectrum = hermitian_eigenvalues(partial_transpose(states::bell_state()));
    const double elapsed = seconds_since(start);

    const std::vector<double> f_expected = {1.0, 0.0, -0.25, -0.0625};
    const std::vector<double> ev_expected = {-0.5, 0.5, 0.5, 0.5};
    bool ok = j.at("first_violation") == 3 && j.at("verdict") == "ENTANGLED" && result.exit_code == 1;
    double err = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        err = std::max(err, std::abs(j.at("f")[i].get<double>() - f_expected[i]));
        err = std::max(err, std::abs(spectrum[i] - ev_expected[i]));
    }
    ok = ok && err <= 1e-9 && elapsed < 0.1;
    return {ok, "max err " + num(err) + ", " + num(elapsed) + " s"};
}

// 2. Graph example.
Outcome bell_graph() {
    const auto j = json::parse(cli::cmd_zeta(config_for("bell")).output);
    std::set<std::vector<std::pair<int, int>>> found;
    for (const auto &p : j.at("primes")) {
        if (p.at("length").get<int>() > 3) continue;
        std::vector<std::pair<int, int>> edges;
        for (const auto &e : p.at("rotation")) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        found.insert(edges);
    }
    const std::set<std::vector<std::pair<int, int>>> expected = {
        {{1, 1}}, {{4, 4}}, {{2, 3}, {3, 2}}};
    const auto &c = j.at("conditions");
    const bool primes_ok = found == expected;
    const bool k3 = c[2].at("satisfied") == false && std::abs(c[2].at("lhs").get<double>()) <= 1e-12 &&
                    std::abs(c[2].at("rhs").get<double>() - 1.0 / 24.0) <= 1e-12;
    const bool k12 = c[0].at("satisfied") == true && std::abs(c[0].at("lhs").get<double>() - 1.0) <= 1e-12 &&
                     c[1].at("satisfied") == true && std::abs(c[1].at("lhs").get<double>() - 0.25) <= 1e-12;
    return {primes_ok && k3 && k12, "primes " + std::to_string(found.size()) + ", k=3 lhs " +
                                        num(c[2].at("lhs").get<double>()) + " rhs " + num(c[2].at("rhs").get<double>())};
}

// 3. Three-way elementary symmetric agreement. Relative error is measured
// against e_k(|x|), the size of the sum before cancellation.
Outcome symmetric_agreement() {
    const auto start = Clock::now();
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double worst_rel = 0.0, worst_tail = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        std::vector<double> x(n), ax(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = uni(rng);
            ax[i] = std::abs(x[i]);
        }
        const std::size_t kmax = n + 3;
        const auto p = sympoly::power_sums(x, kmax);
        const auto newton = sympoly::newton_elementary(p, kmax);
        for (std::size_t k = 1; k <= kmax; ++k) {
            const double closed = sympoly::elementary_closed_form(p, k);
            if (k > n) {
                worst_tail = std::max({worst_tail, std::abs(newton[k - 1]), std::abs(closed)});
                continue;
            }
            const double direct = sympoly::elementary_direct(x, k);
            const double scale = sympoly::elementary_direct(ax, k);
            const double d = std::max({std::abs(direct - newton[k - 1]), std::abs(direct - closed),
                                       std::abs(newton[k - 1] - closed)});
            worst_rel = std::max(worst_rel, d / scale);
        }
    }
    const double elapsed = seconds_since(start);
    return {worst_rel <= 1e-9 && worst_tail <= 1e-9 && elapsed < 5.0,
            "rel " + num(worst_rel) + ", tail " + num(worst_tail) + ", " + num(elapsed) + " s"};
}

// 4. Moment lemma.
Outcome moment_lemma() {
    const auto start = Clock::now();
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto rho = states::random_density(2, 2, 4000 + s, 1 + s % 4);
        const auto pt = partial_transpose(rho);
        for (std::size_t k = 1; k <= 3; ++k)
            worst = std::max(worst, std::abs(circuit::perm_moment_trace(rho, k) - trace_of_power(pt, k).real()));
    }
    const double elapsed = seconds_since(start);
    return {worst <= 1e-10 && elapsed < 30.0, "max err " + num(worst) + ", " + num(elapsed) + " s"};
}

// 5. Hierarchy vs eigenvalue oracle.
Outcome hierarchy_oracle() {
    std::size_t accepted = 0, agree = 0, npt = 0;
    for (std::uint64_t s = 0; accepted < 200; ++s) {
        const std::size_t db = (s % 2 == 0) ? 2 : 3;
        const std::size_t rank = 1 + (s / 2) % (2 * db);
        auto rho = states::random_density(2, db, 5000 + s, rank);
        if (s % 4 >= 2) {
            // Pull toward the maximally mixed state so PPT cases are common too.
            const double lambda = 0.15 + 0.6 * static_cast<double>((s * 37) % 100) / 100.0;
            const std::size_t d = rho.dim();
            ComplexMatrix mixed = Complex(lambda, 0.0) * rho.matrix();
            mixed += Complex((1.0 - lambda) / static_cast<double>(d), 0.0) * ComplexMatrix::identity(d);
            rho = DensityMatrix(mixed, rho.partition());
        }
        const auto oracle = ppt::oracle_ppt(rho);
        if (std::abs(oracle.min_eigenvalue) <= 1e-8) continue;
        ++accepted;
        const bool is_npt = oracle.verdict == ppt::OracleVerdict::Npt;
        npt += is_npt ? 1 : 0;
        const auto f = ppt::f_sequence(rho, rho.dim());
        agree += (f.first_violation.has_value() == is_npt) ? 1 : 0;
    }
    return {agree == accepted,
            std::to_string(agree) + "/" + std::to_string(accepted) + " agree (" + std::to_string(npt) + " NPT)"};
}

// 6. Dual-path zeta identity.
Outcome zeta_dual_path() {
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const std::size_t d = (s % 2 == 0) ? 4 : 5;
        const auto m = states::random_hermitian(d, 6000 + s);
        const auto via_primes = zeta::zeta_inverse_coeffs_via_primes(zeta::graph_from_matrix(m), d);
        const auto via_moments = zeta::zeta_coeffs_via_moments(m, d);
        const auto e = sympoly::elementary_from_roots(hermitian_eigenvalues(m));
        for (std::size_t k = 0; k <= d; ++k)
            worst = std::max({worst, std::abs(via_primes[k] - via_moments[k]), std::abs(via_primes[k] - e[k]),
                              std::abs(via_moments[k] - e[k])});
    }
    return {worst <= 1e-9, "max err " + num(worst)};
}

// 7. Werner threshold.
Outcome werner_threshold() {
    auto c = config_for("werner");
    c.format = cli::Format::Json;
    const auto rows = json::parse(cli::cmd_scan(c, "p", cli::parse_range("0:1:0.05")).output);
    std::size_t wrong = 0;
    for (const auto &row : rows) {
        const bool violated = row.at("first_violation").get<int>() != 0;
        wrong += (violated != (row.at("param").get<double>() > 1.0 / 3.0)) ? 1 : 0;
    }
    const auto t = cli::cmd_test(config_for("werner:p=0.75"));
    const bool entangled = json::parse(t.output).at("verdict") == "ENTANGLED";
    return {rows.size() == 21 && wrong == 0 && entangled,
            std::to_string(rows.size()) + " rows, " + std::to_string(wrong) + " wrong, p=0.75 " +
                (entangled ? "ENTANGLED" : "not entangled")};
}

// 8. GHZ.
Outcome ghz() {
    auto c = config_for("ghz:n=3,split=1");
    c.format = cli::Format::Json;
    const auto j = json::parse(cli::cmd_fseries(c).output);
    const auto &f = j.at("f");
    std::size_t negative = 0;
    for (const auto &v : f) negative += v.get<double>() < -1e-6 ? 1 : 0;
    const double f1 = f[0].get<double>();
    return {std::abs(f1 - 1.0) <= 1e-9 && negative >= 2, "f(1)=" + num(f1) + ", " + std::to_string(negative) + " negative"};
}

// 9. Butterfly non-monotone sign pattern.
Outcome butterfly() {
    auto c = config_for("butterfly");
    c.format = cli::Format::Json;
    const auto rows = json::parse(cli::cmd_scan(c, "t", cli::parse_range("0:3:0.1")).output);
    std::size_t hits = 0;
    double first_t = -1.0;
    for (const auto &row : rows) {
        const auto f = row.at("f").get<std::vector<double>>();
        const std::size_t max_k = f.size();
        bool intermediate = false;
        for (std::size_t k = 3; k < max_k; ++k) intermediate = intermediate || f[k - 1] < -1e-6;
        if (intermediate && f.back() >= -1e-9) {
            if (hits == 0) first_t = row.at("param").get<double>();
            ++hits;
        }
    }
    return {hits >= 1, std::to_string(hits) + "/" + std::to_string(rows.size()) + " grid points, first t=" + num(first_t)};
}

// 10. Sampler calibration.
Outcome sampler() {
    const auto rho = states::bell_state();
    const auto a = circuit::sample_hadamard_test(rho, 3, 100000, 2026);
    const auto b = circuit::sample_hadamard_test(rho, 3, 100000, 2026);
    const double dev = std::abs(a.mean - 0.25);
    return {dev <= 4.0 * a.std_error && a == b,
            "mean " + num(a.mean) + " +- " + num(a.std_error) + (a == b ? ", identical reruns" : ", reruns differ")};
}

// 11. Descartes.
Outcome descartes() {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> uni(-3.0, 3.0);
    std::size_t bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        std::vector<double> roots(n);
        for (auto &r : roots) r = uni(rng);
        const auto e = sympoly::elementary_from_roots(roots);
        std::vector<double> coeffs(n + 1);
        for (std::size_t k = 0; k <= n; ++k) coeffs[k] = ((n - k) % 2 == 0 ? 1.0 : -1.0) * e[n - k];
        const auto positive = static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [](double r) { return r > 0; }));
        const std::size_t bound = sympoly::descartes_bound(coeffs);
        bad += (positive > bound || (bound - positive) % 2 != 0) ? 1 : 0;
    }
    return {bad == 0, std::to_string(bad) + " failures in 200"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"Bell state end to end", bell_end_to_end},
        {"Bell graph primes and conditions", bell_graph},
        {"three-way elementary symmetric agreement", symmetric_agreement},
        {"moment computation identity", moment_lemma},
        {"hierarchy matches PPT oracle", hierarchy_oracle},
        {"dual-path zeta coefficients", zeta_dual_path},
        {"Werner threshold", werner_threshold},
        {"GHZ f-sequence", ghz},
        {"butterfly non-monotone sign pattern", butterfly},
        {"sampler calibration", sampler},
        {"Descartes property", descartes},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s criterion %zu: %s [%s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
