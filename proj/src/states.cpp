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

#include "pptm/states.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "pptm/errors.hpp"
#include "pptm/matrix_json.hpp"

namespace pptm::states {

namespace {

constexpr double kNormTolerance = 1e-10;

ComplexMatrix projector(const std::vector<Complex> &psi) {
    ComplexMatrix m(psi.size(), psi.size());
    for (std::size_t r = 0; r < psi.size(); ++r) {
        for (std::size_t c = 0; c < psi.size(); ++c) m(r, c) = psi[r] * std::conj(psi[c]);
    }
    return m;
}

std::vector<Complex> mat_vec(const ComplexMatrix &m, const std::vector<Complex> &v) {
    std::vector<Complex> out(m.rows(), 0.0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    }
    return out;
}

ComplexMatrix normalized_gram(std::size_t d, std::size_t rank, std::mt19937_64 &rng) {
    if (rank == 0) rank = d;
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(d, rank);
    for (auto &z : g.entries()) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = {re, im};
    }
    ComplexMatrix rho = matmul(g, g.adjoint());
    rho *= 1.0 / rho.trace().real();
    return hermitian_part(rho);
}

double to_double(const std::string &key, const std::string &value) {
    try {
        std::size_t used = 0;
        const double x = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception &) {
        throw ParseError("state spec: " + key + "=" + value + " is not a number");
    }
}

std::size_t to_count(const std::string &key, const std::string &value) {
    try {
        std::size_t used = 0;
        const unsigned long long x = std::stoull(value, &used);
        if (used != value.size() || value.front() == '-') throw std::invalid_argument(value);
        return static_cast<std::size_t>(x);
    } catch (const std::exception &) {
        throw ParseError("state spec: " + key + "=" + value + " is not a nonnegative integer");
    }
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

void reject_unknown(const StateSpec &spec, std::initializer_list<const char *> allowed) {
    for (const auto &[key, value] : spec.params) {
        bool ok = false;
        for (const char *a : allowed) ok = ok || key == a;
        if (!ok) throw ParseError("state spec: unknown parameter '" + key + "' for " + spec.family);
    }
}

}  // namespace

ComplexMatrix pauli_x() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix pauli_y() { return ComplexMatrix(2, 2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}); }
ComplexMatrix pauli_z() { return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

ComplexMatrix single_site(const ComplexMatrix &op, std::size_t site, std::size_t n) {
    if (site >= n) throw InvalidArgument("single_site: site out of range");
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (std::size_t q = 0; q < n; ++q) out = kron(out, q == site ? op : ComplexMatrix::identity(2));
    return out;
}

DensityMatrix pure_state(const std::vector<Complex> &psi, Bipartition partition) {
    double norm = 0.0;
    for (const auto &z : psi) norm += std::norm(z);
    if (std::abs(norm - 1.0) > kNormTolerance) throw InvalidArgument("pure_state: vector is not normalized");
    return DensityMatrix(projector(psi), partition);
}

DensityMatrix bell_state() {
    const double h = 0.5;
    return DensityMatrix(ComplexMatrix::from_real(4, 4,
                                                  std::vector<double>{h, 0, 0, h,  //
                                                                      0, 0, 0, 0,  //
                                                                      0, 0, 0, 0,  //
                                                                      h, 0, 0, h}),
                         {2, 2});
}

DensityMatrix ghz(std::size_t n, std::size_t split) {
    if (n < 2 || n > 6) throw InvalidArgument("ghz: need 2 <= n <= 6");
    if (split < 1 || split >= n) throw InvalidArgument("ghz: need 1 <= split < n");
    const std::size_t dim = std::size_t{1} << n;
    // Projector onto (|0...0> + |1...1>)/sqrt(2), entries exactly 1/2.
    ComplexMatrix m(dim, dim);
    for (std::size_t r : {std::size_t{0}, dim - 1}) {
        for (std::size_t c : {std::size_t{0}, dim - 1}) m(r, c) = 0.5;
    }
    return DensityMatrix(std::move(m), {std::size_t{1} << split, std::size_t{1} << (n - split)});
}

DensityMatrix werner(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("werner: p must lie in [0, 1]");
    // |Psi-><Psi-| with exact entries.
    ComplexMatrix singlet(4, 4);
    singlet(1, 1) = 0.5;
    singlet(2, 2) = 0.5;
    singlet(1, 2) = -0.5;
    singlet(2, 1) = -0.5;
    ComplexMatrix rho = p * singlet;
    rho += ((1.0 - p) / 4.0) * ComplexMatrix::identity(4);
    return DensityMatrix(std::move(rho), {2, 2});
}

void ButterflyParams::validate() const {
    if (qubit_count < 2) throw InvalidArgument("butterfly: need at least 2 qubits");
    if (positions.size() != qubit_count) throw InvalidArgument("butterfly: positions length must equal qubit_count");
    if (initial_bitstring.size() != qubit_count) {
        throw InvalidArgument("butterfly: initial bitstring length must equal qubit_count");
    }
    for (std::size_t i = 1; i < positions.size(); ++i) {
        if (!(positions[i] > positions[i - 1])) throw InvalidArgument("butterfly: positions must be strictly increasing");
    }
    for (int b : initial_bitstring) {
        if (b != 0 && b != 1) throw InvalidArgument("butterfly: bitstring entries must be 0 or 1");
    }
    if (v_sites.first >= qubit_count || v_sites.second >= qubit_count || v_sites.first == v_sites.second) {
        throw InvalidArgument("butterfly: V must act on two distinct qubits");
    }
    if (split < 1 || split >= qubit_count) throw InvalidArgument("butterfly: need 1 <= split < qubit_count");
    if (qubit_count > 6) throw InvalidArgument("butterfly: at most 6 qubits");
}

ComplexMatrix xy_hamiltonian(const ButterflyParams &params) {
    params.validate();
    const std::size_t n = params.qubit_count;
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix h(dim, dim);
    const double a3 = params.lattice_spacing * params.lattice_spacing * params.lattice_spacing;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double r = std::abs(params.positions[j] - params.positions[i]);
            const double strength = -params.coupling * a3 / (r * r * r);
            ComplexMatrix xx = matmul(single_site(pauli_x(), i, n), single_site(pauli_x(), j, n));
            ComplexMatrix yy = matmul(single_site(pauli_y(), i, n), single_site(pauli_y(), j, n));
            h += strength * (xx + yy);
        }
    }
    return hermitian_part(h);
}

std::vector<Complex> butterfly_vector(const ButterflyParams &params) {
    params.validate();
    const std::size_t n = params.qubit_count;
    std::size_t index = 0;
    for (int b : params.initial_bitstring) index = (index << 1) | static_cast<std::size_t>(b);
    std::vector<Complex> psi(std::size_t{1} << n, 0.0);
    psi[index] = 1.0;

    const ComplexMatrix h = xy_hamiltonian(params);
    const ComplexMatrix v =
        matmul(single_site(pauli_y(), params.v_sites.first, n), single_site(pauli_y(), params.v_sites.second, n));
    const Complex i_unit(0.0, 1.0);
    psi = mat_vec(expm_hermitian(h, -i_unit * params.time), psi);
    psi = mat_vec(expm_hermitian(v, i_unit * (std::numbers::pi / 4.0)), psi);
    psi = mat_vec(expm_hermitian(h, i_unit * params.time), psi);
    return psi;
}

DensityMatrix butterfly_state(const ButterflyParams &params) {
    auto psi = butterfly_vector(params);
    double norm = 0.0;
    for (const auto &z : psi) norm += std::norm(z);
    if (std::abs(norm - 1.0) > kNormTolerance) throw NumericalConsistencyError("butterfly: evolved state lost norm");
    const std::size_t n = params.qubit_count;
    return pure_state(psi, {std::size_t{1} << params.split, std::size_t{1} << (n - params.split)});
}

DensityMatrix random_density(std::size_t d_a, std::size_t d_b, std::uint64_t seed, std::size_t rank) {
    if (d_a == 0 || d_b == 0 || d_a * d_b > 64) throw InvalidArgument("random_density: need 1 <= d_a*d_b <= 64");
    std::mt19937_64 rng(seed);
    return DensityMatrix(normalized_gram(d_a * d_b, rank, rng), {d_a, d_b});
}

ComplexMatrix random_local_density(std::size_t d, std::uint64_t seed, std::size_t rank) {
    if (d == 0 || d > 64) throw InvalidArgument("random_local_density: need 1 <= d <= 64");
    std::mt19937_64 rng(seed);
    return normalized_gram(d, rank, rng);
}

ComplexMatrix random_hermitian(std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        m(r, r) = normal(rng);
        for (std::size_t c = r + 1; c < d; ++c) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(r, c) = {re, im};
            m(c, r) = {re, -im};
        }
    }
    return m;
}

DensityMatrix product_state(const ComplexMatrix &rho_a, const ComplexMatrix &rho_b) {
    // Validate each factor as a density matrix in its own right.
    DensityMatrix a(rho_a, {1, rho_a.rows()});
    DensityMatrix b(rho_b, {1, rho_b.rows()});
    return DensityMatrix(kron(a.matrix(), b.matrix()), {rho_a.rows(), rho_b.rows()});
}

std::optional<std::string> StateSpec::get(const std::string &key) const {
    for (const auto &[k, v] : params) {
        if (k == key) return v;
    }
    return std::nullopt;
}

void StateSpec::set(const std::string &key, const std::string &value) {
    for (auto &[k, v] : params) {
        if (k == key) {
            v = value;
            return;
        }
    }
    params.emplace_back(key, value);
}

std::string StateSpec::to_string() const {
    std::string out = family;
    for (std::size_t i = 0; i < params.size(); ++i) {
        out += (i == 0 ? ":" : ",");
        out += params[i].first + "=" + params[i].second;
    }
    return out;
}

StateSpec parse_state_spec(const std::string &text) {
    StateSpec spec;
    const auto colon = text.find(':');
    spec.family = text.substr(0, colon);
    if (spec.family.empty()) throw ParseError("state spec: empty family name");
    if (colon == std::string::npos) return spec;
    const std::string rest = text.substr(colon + 1);
    if (spec.family == "file") {
        if (rest.empty()) throw ParseError("state spec: file: needs a path");
        spec.params.emplace_back("path", rest);
        return spec;
    }
    for (const auto &item : split(rest, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            throw ParseError("state spec: expected key=value, got '" + item + "'");
        }
        spec.params.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return spec;
}

DensityMatrix make_state(const StateSpec &spec) {
    auto count_or = [&](const char *key, std::size_t fallback) {
        auto v = spec.get(key);
        return v ? to_count(key, *v) : fallback;
    };
    auto real_or = [&](const char *key, double fallback) {
        auto v = spec.get(key);
        return v ? to_double(key, *v) : fallback;
    };

    if (spec.family == "bell") {
        reject_unknown(spec, {});
        return bell_state();
    }
    if (spec.family == "ghz") {
        reject_unknown(spec, {"n", "split"});
        return ghz(count_or("n", 3), count_or("split", 1));
    }
    if (spec.family == "werner") {
        reject_unknown(spec, {"p"});
        return werner(real_or("p", 0.75));
    }
    if (spec.family == "butterfly") {
        reject_unknown(spec, {"t", "J", "a", "split", "bits", "v", "pos"});
        ButterflyParams params;
        params.time = real_or("t", 0.0);
        params.coupling = real_or("J", params.coupling);
        params.lattice_spacing = real_or("a", params.lattice_spacing);
        if (auto bits = spec.get("bits")) {
            params.initial_bitstring.clear();
            for (char c : *bits) {
                if (c != '0' && c != '1') throw ParseError("state spec: bits must be a 0/1 string");
                params.initial_bitstring.push_back(c - '0');
            }
            params.qubit_count = params.initial_bitstring.size();
        }
        if (auto pos = spec.get("pos")) {
            params.positions.clear();
            for (const auto &x : split(*pos, '/')) params.positions.push_back(to_double("pos", x));
        } else if (params.positions.size() != params.qubit_count) {
            params.positions.clear();
            for (std::size_t i = 0; i < params.qubit_count; ++i) params.positions.push_back(static_cast<double>(i));
        }
        if (auto v = spec.get("v")) {
            const auto sites = split(*v, '-');
            if (sites.size() != 2) throw ParseError("state spec: v must look like 1-2 (1-based qubits)");
            const auto first = to_count("v", sites[0]), second = to_count("v", sites[1]);
            if (first == 0 || second == 0) throw ParseError("state spec: v sites are 1-based");
            params.v_sites = {first - 1, second - 1};
        }
        params.split = count_or("split", params.qubit_count / 2);
        return butterfly_state(params);
    }
    if (spec.family == "random") {
        reject_unknown(spec, {"da", "db", "seed", "rank"});
        return random_density(count_or("da", 2), count_or("db", 2), count_or("seed", 0), count_or("rank", 0));
    }
    if (spec.family == "product") {
        reject_unknown(spec, {"da", "db", "seed"});
        const std::uint64_t seed = count_or("seed", 0);
        return product_state(random_local_density(count_or("da", 2), 2 * seed),
                             random_local_density(count_or("db", 2), 2 * seed + 1));
    }
    if (spec.family == "file") {
        const auto path = spec.get("path");
        if (!path) throw ParseError("state spec: file: needs a path");
        std::ifstream in(*path);
        if (!in) throw ParseError("state spec: cannot open " + *path);
        std::stringstream buf;
        buf << in.rdbuf();
        return density_from_json(parse_json_text(buf.str()));
    }
    throw ParseError("state spec: unknown family '" + spec.family + "'");
}

DensityMatrix make_state(const std::string &text) { return make_state(parse_state_spec(text)); }

}  // namespace pptm::states
