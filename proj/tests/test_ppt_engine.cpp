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

#include "oracles.hpp"
#include "pptm/errors.hpp"
#include "pptm/ppt_engine.hpp"
#include "pptm/states.hpp"

using namespace pptm;

TEST(ppt_engine, bell_spectrum_and_moments) {
    const auto rho = states::bell_state();
    const auto ev = hermitian_eigenvalues(partial_transpose(rho));
    const std::vector<double> expected_ev = {-0.5, 0.5, 0.5, 0.5};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], expected_ev[i], 1e-12);
    const auto p = ppt::moments_of_partial_transpose(rho, 4);
    const std::vector<double> expected_p = {1.0, 1.0, 0.25, 0.25};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(p[i], expected_p[i], 1e-12);
}

TEST(ppt_engine, bell_f_sequence) {
    const auto f = ppt::f_sequence(states::bell_state(), 4);
    const std::vector<double> expected = {1.0, 0.0, -0.25, -0.0625};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(f.values[i], expected[i], 1e-9);
    ASSERT_TRUE(f.first_violation.has_value());
    EXPECT_EQ(*f.first_violation, 3u);
}

TEST(ppt_engine, f_equals_elementary_of_pt_spectrum) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto rho = states::random_density(2, 3, s);
        oracle::Mat pt = oracle::zeros(6);
        const auto m = partial_transpose(rho);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) pt[i][j] = m(i, j);
        const auto f = ppt::f_sequence(rho, 6);
        for (std::size_t k = 1; k <= 6; ++k) EXPECT_NEAR(f.values[k - 1], oracle::principal_minor_sum(pt, k).real(), 1e-12);
    }
}

TEST(ppt_engine, f_sequence_from_moments_checks_length) {
    const std::vector<double> p = {1.0, 0.5};
    EXPECT_THROW(ppt::f_sequence_from_moments(p, 3), InvalidArgument);
    EXPECT_THROW(ppt::f_sequence(states::bell_state(), 5), InvalidArgument);
}

TEST(ppt_engine, low_order_inequalities) {
    // r_k = k f(k)
    const auto rho = states::random_density(2, 2, 9);
    const auto p = ppt::moments_of_partial_transpose(rho, 4);
    const auto r = ppt::low_order_inequalities(p);
    const auto f = ppt::f_sequence_from_moments(p, 4);
    for (std::size_t k = 1; k <= 4; ++k) EXPECT_NEAR(r[k - 1], static_cast<double>(k) * f.values[k - 1], 1e-12);
}

TEST(ppt_engine, product_states_are_consistent) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto rho = states::product_state(states::random_local_density(2, s), states::random_local_density(3, s + 50));
        const auto report = ppt::full_report(rho);
        EXPECT_EQ(report.verdict, ppt::Verdict::PptConsistent);
        for (double v : report.f.values) EXPECT_GE(v, -1e-12);
    }
}

TEST(ppt_engine, verdict_matches_oracle) {
    std::size_t checked = 0;
    for (std::uint64_t s = 0; s < 60; ++s) {
        const auto rho = states::random_density(2, 2 + s % 2, 500 + s);
        const auto oracle_result = ppt::oracle_ppt(rho);
        if (std::abs(oracle_result.min_eigenvalue) <= 1e-8) continue;
        const auto report = ppt::full_report(rho);
        ++checked;
        EXPECT_EQ(report.verdict == ppt::Verdict::Entangled, oracle_result.verdict == ppt::OracleVerdict::Npt) << s;
    }
    EXPECT_GT(checked, 50u);
}

TEST(ppt_engine, report_fields) {
    const auto report = ppt::full_report(states::werner(0.75));
    EXPECT_EQ(report.verdict, ppt::Verdict::Entangled);
    EXPECT_EQ(report.dimension, 4u);
    EXPECT_EQ(report.numerical_rank, 4u);
    ASSERT_TRUE(report.oracle.has_value());
    EXPECT_NEAR(report.oracle->min_eigenvalue, (1.0 - 3.0 * 0.75) / 4.0, 1e-12);
    const auto j = ppt::report_to_json(report);
    EXPECT_EQ(j.at("verdict"), "ENTANGLED");
    EXPECT_EQ(j.at("first_violation"), 3);
}

TEST(ppt_engine, one_by_one) {
    const auto rho = DensityMatrix(ComplexMatrix::identity(1), {1, 1});
    const auto report = ppt::full_report(rho);
    EXPECT_EQ(report.verdict, ppt::Verdict::PptConsistent);
    ASSERT_EQ(report.f.values.size(), 1u);
    EXPECT_NEAR(report.f.values[0], 1.0, 1e-15);
}
