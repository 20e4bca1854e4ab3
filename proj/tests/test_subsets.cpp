// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "vimaps/subsets.hpp"

using namespace vimaps;

TEST(Binomial, Values) {
    EXPECT_EQ(binomial(6, 2), 15u);
    EXPECT_EQ(binomial(16, 4), 1820u);
    EXPECT_EQ(binomial(20, 5), 15504u);
    EXPECT_EQ(binomial(5, 0), 1u);
    EXPECT_EQ(binomial(3, 4), 0u);
    EXPECT_EQ(binomial(66, 33), 7219428434016265740ull);
    EXPECT_THROW((void)binomial(200, 100), error);
}

TEST(Colex, EnumeratesEverySubsetOnceInRankOrder) {
    for (int n = 1; n <= 9; ++n) {
        for (int r = 0; r <= n; ++r) {
            std::set<SubsetIndex> seen;
            SubsetIndex s = first_subset(r);
            std::uint64_t rank = 0;
            do {
                ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
                EXPECT_EQ(colex_rank(s), rank);
                EXPECT_EQ(colex_unrank(rank, r), s);
                seen.insert(s);
                ++rank;
            } while (next_colex(s, n));
            EXPECT_EQ(seen.size(), binomial(n, r));
            EXPECT_EQ(rank, binomial(n, r));
        }
    }
}

TEST(Colex, ComplementAndRotation) {
    const SubsetIndex s{0, 2, 3};
    EXPECT_EQ(complement(s, 6), (SubsetIndex{1, 4, 5}));
    EXPECT_EQ(rotate_subset(s, 3, 6), (SubsetIndex{0, 3, 5}));
    EXPECT_EQ(rotate_subset(s, -1, 6), (SubsetIndex{1, 2, 5}));
    EXPECT_EQ(rotate_subset(s, 6, 6), s);
}
