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

#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "pptm/errors.hpp"
#include "pptm/graph_zeta.hpp"
#include "pptm/ppt_engine.hpp"
#include "pptm/states.hpp"

using namespace pptm;

namespace {

oracle::Mat to_oracle(const ComplexMatrix &m) {
    oracle::Mat out = oracle::zeros(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

}  // namespace

TEST(graph_zeta, graph_construction) {
    const auto g = zeta::graph_from_matrix(partial_transpose(states::bell_state()));
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.edges().size(), 4u);
    EXPECT_NE(g.find_edge(1, 2), zeta::WeightedDigraph::npos);
    EXPECT_EQ(g.find_edge(1, 1), zeta::WeightedDigraph::npos);
    zeta::WeightedDigraph h(2, 1e-12);
    h.add_edge(0, 1, 1.0);
    h.add_edge(0, 0, 1e-15);  // below threshold: dropped
    EXPECT_EQ(h.edges().size(), 1u);
    EXPECT_THROW(h.add_edge(0, 1, 2.0), InvalidArgument);
}

TEST(graph_zeta, bell_primes) {
    const auto g = zeta::graph_from_matrix(partial_transpose(states::bell_state()));
    const auto primes = zeta::enumerate_prime_classes(g, 3);
    ASSERT_EQ(primes.size(), 3u);
    EXPECT_EQ(primes[0].vertices, (std::vector<std::size_t>{0}));
    EXPECT_EQ(primes[1].vertices, (std::vector<std::size_t>{3}));
    EXPECT_EQ(primes[2].vertices, (std::vector<std::size_t>{1, 2}));
    EXPECT_NEAR(primes[2].weight.real(), 0.25, 1e-15);
}

TEST(graph_zeta, bell_conditions) {
    const auto g = zeta::graph_from_matrix(partial_transpose(states::bell_state()));
    const auto c1 = zeta::graph_condition(g, 1);
    const auto c2 = zeta::graph_condition(g, 2);
    const auto c3 = zeta::graph_condition(g, 3);
    EXPECT_TRUE(c1.satisfied);
    EXPECT_NEAR(c1.lhs, 1.0, 1e-12);
    EXPECT_TRUE(c2.satisfied);
    EXPECT_NEAR(c2.lhs, 0.25, 1e-12);
    EXPECT_FALSE(c3.satisfied);
    EXPECT_NEAR(c3.lhs, 0.0, 1e-12);
    EXPECT_NEAR(c3.rhs, 1.0 / 24.0, 1e-12);
    EXPECT_NEAR(c3.coefficient, -0.25, 1e-12);
    EXPECT_FALSE(c3.coefficient_satisfied);
}

TEST(graph_zeta, prime_counts_match_moebius) {
    // Complete digraph with loops on 3 vertices, and a directed 4-cycle with a chord.
    const std::vector<std::vector<std::vector<int>>> graphs = {
        {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}},
        {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 1, 0}},
        {{1, 1}, {1, 0}},
    };
    for (const auto &adj : graphs) {
        const std::size_t n = adj.size();
        zeta::WeightedDigraph g(n, 1e-12);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (adj[i][j]) g.add_edge(i, j, 1.0);
        const auto primes = zeta::enumerate_prime_classes(g, 6);
        std::map<std::size_t, std::int64_t> counts;
        for (const auto &p : primes) ++counts[p.length()];
        for (std::size_t len = 1; len <= 6; ++len) EXPECT_EQ(counts[len], oracle::prime_count(adj, len)) << len;
    }
}

TEST(graph_zeta, coefficients_match_principal_minors) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const std::size_t d = 3 + s % 3;
        const auto m = states::random_hermitian(d, s);
        const auto via_primes = zeta::zeta_inverse_coeffs_via_primes(zeta::graph_from_matrix(m), d);
        const auto via_moments = zeta::zeta_coeffs_via_moments(m, d);
        const auto o = to_oracle(m);
        for (std::size_t k = 0; k <= d; ++k) {
            const double minors = oracle::principal_minor_sum(o, k).real();
            EXPECT_NEAR(via_primes[k], minors, 1e-9);
            EXPECT_NEAR(via_moments[k], minors, 1e-9);
        }
    }
}

TEST(graph_zeta, coefficient_verdict_equals_f_verdict) {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const auto rho = states::random_density(2, 2, 800 + s, 1 + s % 4);
        const auto g = zeta::graph_from_matrix(partial_transpose(rho));
        const auto f = ppt::f_sequence(rho, 4);
        std::size_t least = 0;
        for (std::size_t k = 1; k <= 4; ++k) {
            const auto c = zeta::graph_condition(g, k);
            EXPECT_NEAR(c.coefficient, f.values[k - 1], 1e-9);
            if (least == 0 && !c.coefficient_satisfied) least = k;
        }
        EXPECT_EQ(least, f.first_violation.value_or(0)) << s;
    }
}

TEST(graph_zeta, json_uses_one_based_labels) {
    const auto g = zeta::graph_from_matrix(partial_transpose(states::bell_state()));
    const auto j = zeta::graph_to_json(g);
    EXPECT_EQ(j.at("edges")[0].at("from"), 1);
    const auto primes = zeta::enumerate_prime_classes(g, 2);
    const auto pj = zeta::prime_to_json(g, primes[2]);
    EXPECT_EQ(pj.at("length"), 2);
    EXPECT_EQ(pj.at("rotation")[0][0], 2);
    EXPECT_EQ(pj.at("rotation")[0][1], 3);
    EXPECT_NE(zeta::describe_graph(g).find("->"), std::string::npos);
}
