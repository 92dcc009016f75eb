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

#include "pptm/graph_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "pptm/errors.hpp"

namespace pptm::zeta {

namespace {

bool is_aperiodic(const std::vector<std::size_t> &seq) {
    const std::size_t n = seq.size();
    for (std::size_t period = 1; period < n; ++period) {
        if (n % period != 0) continue;
        bool repeats = true;
        for (std::size_t i = period; i < n && repeats; ++i) repeats = seq[i] == seq[i - period];
        if (repeats) return false;
    }
    return true;
}

bool is_least_rotation(const std::vector<std::size_t> &seq) {
    const std::size_t n = seq.size();
    for (std::size_t shift = 1; shift < n; ++shift) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t a = seq[i], b = seq[(i + shift) % n];
            if (a < b) break;
            if (a > b) return false;
        }
    }
    return true;
}

struct Enumerator {
    const WeightedDigraph &g;
    std::vector<PrimeClass> &out;
    std::size_t length = 0;
    std::vector<std::size_t> path;

    void extend() {
        const std::size_t start = path.front();
        if (path.size() == length) {
            const std::size_t closing = g.find_edge(path.back(), start);
            if (closing == WeightedDigraph::npos) return;
            if (!is_aperiodic(path) || !is_least_rotation(path)) return;
            PrimeClass p;
            p.vertices = path;
            p.weight = 1.0;
            for (std::size_t i = 0; i < length; ++i) {
                const std::size_t e = g.find_edge(path[i], path[(i + 1) % length]);
                p.edges.push_back(e);
                p.weight *= g.edges()[e].weight;
            }
            out.push_back(std::move(p));
            return;
        }
        // The least rotation starts at its smallest vertex.
        for (std::size_t e : g.out_edges(path.back())) {
            const std::size_t next = g.edges()[e].to;
            if (next < start) continue;
            path.push_back(next);
            extend();
            path.pop_back();
        }
    }
};

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(17);
    s << x;
    return s.str();
}

double sum_weights(const std::vector<PrimeClass> &primes, std::size_t length) {
    Complex s = 0.0;
    for (const auto &p : primes) {
        if (p.length() == length) s += p.weight;
    }
    return s.real();
}

}  // namespace

WeightedDigraph::WeightedDigraph(std::size_t vertex_count, double edge_threshold)
    : vertex_count_(vertex_count), edge_threshold_(edge_threshold), out_(vertex_count) {
    if (edge_threshold < 0.0) throw InvalidArgument("WeightedDigraph: threshold must be >= 0");
}

void WeightedDigraph::add_edge(std::size_t from, std::size_t to, Complex weight) {
    if (from >= vertex_count_ || to >= vertex_count_) throw InvalidArgument("add_edge: vertex out of range");
    if (std::abs(weight) <= edge_threshold_) return;
    if (find_edge(from, to) != npos) throw InvalidArgument("add_edge: duplicate edge");
    edges_.push_back({from, to, weight});
    auto &list = out_[from];
    list.push_back(edges_.size() - 1);
    std::sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) { return edges_[x].to < edges_[y].to; });
}

std::size_t WeightedDigraph::find_edge(std::size_t from, std::size_t to) const {
    for (std::size_t e : out_[from]) {
        if (edges_[e].to == to) return e;
    }
    return npos;
}

WeightedDigraph graph_from_matrix(const ComplexMatrix &m, double threshold) {
    if (!m.is_square()) throw DimensionMismatch("graph_from_matrix: matrix must be square");
    WeightedDigraph g(m.rows(), threshold);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) g.add_edge(i, j, m(i, j));
    }
    return g;
}

std::vector<PrimeClass> enumerate_prime_classes(const WeightedDigraph &g, std::size_t max_len) {
    if (max_len == 0) throw InvalidArgument("enumerate_prime_classes: max_len must be >= 1");
    std::vector<PrimeClass> out;
    Enumerator walk{g, out, 0, {}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        walk.length = len;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            walk.path.assign(1, v);
            walk.extend();
        }
    }
    return out;
}

std::vector<double> zeta_inverse_coeffs_via_primes(const std::vector<PrimeClass> &primes, std::size_t k_max) {
    std::vector<Complex> c(k_max + 1, 0.0);
    c[0] = 1.0;
    for (const auto &p : primes) {
        const std::size_t nu = p.length();
        if (nu > k_max) continue;
        const Complex factor = (nu % 2 == 0 ? -1.0 : 1.0) * p.weight;  // -(-1)^ν N_E
        for (std::size_t deg = k_max; deg >= nu; --deg) {
            c[deg] += factor * c[deg - nu];
            if (deg == nu) break;
        }
    }
    std::vector<double> out(k_max + 1);
    for (std::size_t k = 0; k <= k_max; ++k) {
        if (std::abs(c[k].imag()) > kImaginaryTolerance) {
            throw NumericalConsistencyError("zeta coefficient c_" + std::to_string(k) + " has imaginary part " +
                                            fmt(c[k].imag()));
        }
        out[k] = c[k].real();
    }
    return out;
}

std::vector<double> zeta_inverse_coeffs_via_primes(const WeightedDigraph &g, std::size_t k_max) {
    if (k_max == 0) return {1.0};
    return zeta_inverse_coeffs_via_primes(enumerate_prime_classes(g, k_max), k_max);
}

std::vector<double> zeta_coeffs_via_moments(const ComplexMatrix &m, std::size_t k_max) {
    if (!m.is_square()) throw DimensionMismatch("zeta_coeffs_via_moments: matrix must be square");
    std::vector<double> g(k_max + 1, 0.0);
    const auto traces = traces_of_powers(m, k_max);
    for (std::size_t j = 1; j <= k_max; ++j) {
        if (std::abs(traces[j - 1].imag()) > kImaginaryTolerance) {
            throw NumericalConsistencyError("tr[m^" + std::to_string(j) + "] is not real; matrix must be Hermitian");
        }
        const double p = traces[j - 1].real();
        g[j] = (j % 2 == 1 ? p : -p) / static_cast<double>(j);
    }
    std::vector<double> h(k_max + 1, 0.0);
    h[0] = 1.0;
    for (std::size_t n = 1; n <= k_max; ++n) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= n; ++j) acc += static_cast<double>(j) * g[j] * h[n - j];
        h[n] = acc / static_cast<double>(n);
    }
    return h;
}

GraphCondition graph_condition(const std::vector<PrimeClass> &primes, std::size_t k) {
    if (k == 0) throw InvalidArgument("graph_condition: k must be >= 1");
    GraphCondition out;
    out.k = k;
    out.coefficient = zeta_inverse_coeffs_via_primes(primes, k)[k];
    out.coefficient_satisfied = out.coefficient >= -kConditionTolerance;
    const double s1 = sum_weights(primes, 1);
    switch (k) {
        case 1:
            out.lhs = s1;
            out.rhs = 0.0;
            out.satisfied = out.lhs >= out.rhs - kConditionTolerance;
            break;
        case 2:
            out.lhs = sum_weights(primes, 2);
            out.rhs = s1 * s1;
            out.satisfied = out.lhs <= out.rhs + kConditionTolerance;
            break;
        case 3: {
            const double s2 = sum_weights(primes, 2);
            out.lhs = sum_weights(primes, 3);
            out.rhs = (5.0 * s1 * s2 - s1 * s1 * s1) / 6.0;
            out.satisfied = out.lhs >= out.rhs - kConditionTolerance;
            break;
        }
        default:
            out.lhs = out.coefficient;
            out.rhs = 0.0;
            out.satisfied = out.coefficient_satisfied;
            break;
    }
    return out;
}

GraphCondition graph_condition(const WeightedDigraph &g, std::size_t k) {
    return graph_condition(enumerate_prime_classes(g, k), k);
}

nlohmann::json graph_to_json(const WeightedDigraph &g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto &e : g.edges()) {
        edges.push_back({{"from", e.from + 1}, {"to", e.to + 1}, {"re", e.weight.real()}, {"im", e.weight.imag()}});
    }
    return {{"vertices", g.vertex_count()}, {"edge_threshold", g.edge_threshold()}, {"edges", edges}};
}

nlohmann::json prime_to_json(const WeightedDigraph &g, const PrimeClass &p) {
    nlohmann::json rotation = nlohmann::json::array();
    for (std::size_t e : p.edges) rotation.push_back({g.edges()[e].from + 1, g.edges()[e].to + 1});
    return {{"rotation", rotation},
            {"length", p.length()},
            {"weight_re", p.weight.real()},
            {"weight_im", p.weight.imag()}};
}

nlohmann::json condition_to_json(const GraphCondition &c) {
    return {{"k", c.k},
            {"lhs", c.lhs},
            {"rhs", c.rhs},
            {"satisfied", c.satisfied},
            {"coefficient", c.coefficient},
            {"coefficient_satisfied", c.coefficient_satisfied}};
}

std::string describe_graph(const WeightedDigraph &g) {
    std::ostringstream s;
    s << g.vertex_count() << " vertices, " << g.edges().size() << " edges\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        s << "  " << v + 1 << ":";
        if (g.out_edges(v).empty()) s << " (none)";
        for (std::size_t e : g.out_edges(v)) {
            const auto &edge = g.edges()[e];
            s << " ->" << edge.to + 1 << " [" << fmt(edge.weight.real());
            if (edge.weight.imag() != 0.0) s << (edge.weight.imag() < 0 ? "-" : "+") << fmt(std::abs(edge.weight.imag())) << "i";
            s << "]";
        }
        s << "\n";
    }
    return s.str();
}

}  // namespace pptm::zeta
