// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "vimaps/qh_oracle.hpp"
#include "vimaps/vi_engine.hpp"

using namespace vimaps;
using vimaps::testing::all_monomials;

namespace {

QClass single(Partition p, int q = 0) { return QClass{{QTerm{std::move(p), q}, 1}}; }

QClass classical_part(const QClass& c) {
    QClass out;
    for (const auto& [term, coeff] : c)
        if (term.q_power == 0) out.emplace(term, coeff);
    return out;
}

}  // namespace

TEST(Pieri, UnitTimesSigma1) {
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r < n; ++r) {
            Partition p(static_cast<std::size_t>(r), 0);
            p[0] = 1;
            EXPECT_EQ(pieri_multiply(unit_class(r), 1, r, n), single(p));
        }
}

TEST(Pieri, Sigma1SquaredOnG24) {
    const QClass s1 = pieri_multiply(unit_class(2), 1, 2, 4);
    const QClass expected{{QTerm{{2, 0}, 0}, 1}, {QTerm{{1, 1}, 0}, 1}};
    EXPECT_EQ(pieri_multiply(s1, 1, 2, 4), expected);
}

TEST(Pieri, QuantumCorrectionOnProjectiveSpace) {
    // G(1, n): sigma_1^n = q
    for (int n = 2; n <= 6; ++n) {
        QClass c = unit_class(1);
        for (int k = 0; k < n; ++k) c = pieri_multiply(c, 1, 1, n);
        EXPECT_EQ(c, single({0}, 1));
    }
}

TEST(Pieri, ClassicalLimitAndConservation) {
    std::mt19937 rng(17);
    for (int n = 2; n <= 7; ++n) {
        for (int r = 1; r < n; ++r) {
            QClass c = unit_class(r);
            for (int step = 0; step < 2 * n; ++step) {
                const int i = std::uniform_int_distribution<int>(1, r)(rng);
                const QClass quantum = pieri_multiply(c, i, r, n);
                EXPECT_EQ(classical_part(quantum), classical_pieri_multiply(classical_part(c), i, r, n));
                int degree = -1;
                for (const auto& [term, coeff] : quantum) {
                    EXPECT_GT(coeff, 0) << "negative structure constant";
                    const int total = partition_size(term.shape) + term.q_power * n;
                    if (degree < 0) degree = total;
                    EXPECT_EQ(total, degree);
                    EXPECT_LE(term.shape.front(), n - r);
                    EXPECT_TRUE(std::is_sorted(term.shape.rbegin(), term.shape.rend()));
                }
                c = quantum;
            }
        }
    }
}

TEST(Pieri, RejectsBadIndex) {
    EXPECT_THROW((void)pieri_multiply(unit_class(2), 3, 2, 4), error);
    EXPECT_THROW((void)pieri_multiply(unit_class(2), 0, 2, 4), error);
    EXPECT_THROW((void)classical_pieri_multiply(unit_class(3), 1, 3, 2), error);
}

TEST(FixedDomain, PointTarget) {
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(fixed_domain_count_g0(n, n, 0, Monomial{}), 1);
}

TEST(FixedDomain, ProjectiveSpaceMatchesEngine) {
    // G(1, n) = P^(n-1): the count of degree-d maps through e = dn + n - 1 hyperplane conditions
    for (int n = 2; n <= 7; ++n) {
        for (int d = 0; d <= 3; ++d) {
            const GrassmannSpec spec{1, n, 0, d};
            const Monomial m{{chern(1), static_cast<int>(spec.virtual_dimension())}};
            EXPECT_EQ(fixed_domain_count_g0(1, n, d, m), 1);
            EXPECT_EQ(vi_integral(spec, m).value, 1);
        }
    }
}

TEST(FixedDomain, G24LineCount) {
    const Monomial m{{chern(1), 8}};
    const mpz_class oracle = fixed_domain_count_g0(2, 4, 1, m);
    EXPECT_EQ(vi_integral({2, 4, 0, 1}, m).value, oracle);
    EXPECT_GT(oracle, 0);
}

TEST(FixedDomain, ClassicalDegreeOfG24) {
    // d = 0 is classical Schubert calculus: sigma_1^4 = 2 on G(2,4)
    EXPECT_EQ(fixed_domain_count_g0(2, 4, 0, Monomial{{chern(1), 4}}), 2);
    EXPECT_EQ(fixed_domain_count_g0(2, 5, 0, Monomial{{chern(1), 6}}), 5);
}

TEST(FixedDomain, MatchesEngineOnSmallGrassmannians) {
    for (const auto& [r, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}}) {
        for (int d = 0; d <= 2; ++d) {
            const GrassmannSpec spec{r, n, 0, d};
            for (const auto& m : all_monomials(r, spec.virtual_dimension()))
                EXPECT_EQ(vi_integral(spec, m).value, fixed_domain_count_g0(r, n, d, m)) << to_string(spec) << " " << to_string(m);
        }
    }
}

TEST(FixedDomain, Errors) {
    EXPECT_THROW((void)fixed_domain_count_g0(2, 4, 1, Monomial{{chern(1), 7}}), error);
    EXPECT_THROW((void)fixed_domain_count_g0(2, 4, 1, Monomial{{segre(1), 8}}), error);
    EXPECT_THROW((void)fixed_domain_count_g0(2, 4, -1, Monomial{}), error);
}
