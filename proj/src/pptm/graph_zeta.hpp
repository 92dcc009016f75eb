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

// Weighted-digraph zeta function of a matrix.
//
// A matrix M induces a digraph with an edge i -> j of weight M[i,j]. A prime
// class is an aperiodic closed directed walk up to cyclic rotation; ν(P) is
// its length and N_E(P) the product of its edge weights. The inverse zeta
// function at -u factors as
//   prod_[P] (1 - (-1)^ν(P) N_E(P) u^ν(P)) = det(I + u M) = sum_k e_k(M) u^k,
// so for M = rho^T_B the k-th coefficient is the moment test value f(k).

#ifndef PPTM_GRAPH_ZETA_HPP
#define PPTM_GRAPH_ZETA_HPP

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "pptm/linalg.hpp"

namespace pptm::zeta {

inline constexpr double kDefaultEdgeThreshold = 1e-12;
inline constexpr double kImaginaryTolerance = 1e-9;
inline constexpr double kConditionTolerance = 1e-9;

struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    Complex weight;
};

class WeightedDigraph {
  public:
    WeightedDigraph(std::size_t vertex_count, double edge_threshold);

    /// Adds from -> to when |weight| > threshold. Throws on a duplicate pair.
    void add_edge(std::size_t from, std::size_t to, Complex weight);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    double edge_threshold() const noexcept { return edge_threshold_; }
    const std::vector<Edge> &edges() const noexcept { return edges_; }
    /// Edges sorted by (from, to).
    const std::vector<std::size_t> &out_edges(std::size_t v) const { return out_[v]; }
    /// Index into edges() of from -> to, or npos.
    std::size_t find_edge(std::size_t from, std::size_t to) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    std::size_t vertex_count_;
    double edge_threshold_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;  // edge indices per vertex
};

struct PrimeClass {
    std::vector<std::size_t> vertices;  // canonical rotation: v_0 -> v_1 -> ... -> v_0
    std::vector<std::size_t> edges;     // indices into WeightedDigraph::edges()
    Complex weight;                     // N_E(P)

    std::size_t length() const noexcept { return edges.size(); }
};

/// Edge i -> j for every |m[i,j]| > threshold; diagonal entries are loops.
WeightedDigraph graph_from_matrix(const ComplexMatrix &m, double threshold = kDefaultEdgeThreshold);

/// Every prime class with ν(P) <= max_len, once each, ordered by length and
/// then by the canonical vertex sequence. The canonical representative is the
/// lexicographically least rotation.
std::vector<PrimeClass> enumerate_prime_classes(const WeightedDigraph &g, std::size_t max_len);

/// c_0..c_{k_max} of prod_[P] (1 - (-1)^ν N_E u^ν) truncated at degree k_max.
/// Primes longer than k_max cannot touch these coefficients and are skipped.
/// Throws NumericalConsistencyError if a coefficient has imaginary part above
/// 1e-9 (the source matrix was not Hermitian).
std::vector<double> zeta_inverse_coeffs_via_primes(const WeightedDigraph &g, std::size_t k_max);
std::vector<double> zeta_inverse_coeffs_via_primes(const std::vector<PrimeClass> &primes, std::size_t k_max);

/// c_0..c_{k_max} of exp(-sum_k (-1)^k tr[m^k] u^k / k) by the series
/// exponential recurrence n h_n = sum_{j=1}^n j g_j h_{n-j}.
std::vector<double> zeta_coeffs_via_moments(const ComplexMatrix &m, std::size_t k_max);

struct GraphCondition {
    std::size_t k = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = true;
    /// c_k of the truncated Euler product; c_k >= 0 is the exact test.
    double coefficient = 0.0;
    bool coefficient_satisfied = true;
};

/// Prime-sum form of the k-th inequality, with S_ν = sum of N_E over classes
/// of length ν:
///   k = 1:  S_1 >= 0
///   k = 2:  S_2 <= S_1^2
///   k = 3:  S_3 >= (5 S_1 S_2 - S_1^3) / 6
///   k > 3:  c_k >= 0
/// Always also reports c_k itself.
GraphCondition graph_condition(const WeightedDigraph &g, std::size_t k);
GraphCondition graph_condition(const std::vector<PrimeClass> &primes, std::size_t k);

nlohmann::json graph_to_json(const WeightedDigraph &g);
nlohmann::json prime_to_json(const WeightedDigraph &g, const PrimeClass &p);
nlohmann::json condition_to_json(const GraphCondition &c);

/// Plain-text adjacency summary, one line per vertex.
std::string describe_graph(const WeightedDigraph &g);

}  // namespace pptm::zeta

#endif  // PPTM_GRAPH_ZETA_HPP
