// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

// r-subsets of {0, ..., n-1} in colexicographic order, with ranking via the
// combinatorial number system.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace vimaps {

/// Strictly increasing exponents a_0 < ... < a_{r-1} in [0, n); a means the root w^a.
using SubsetIndex = std::vector<int>;

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t b = 1;
    for (int i = 1; i <= k; ++i) {
        // b * num / i is exact; cancel gcd(b, i) first so only a true overflow throws
        const std::uint64_t g = std::gcd(b, static_cast<std::uint64_t>(i));
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i) / (static_cast<std::uint64_t>(i) / g);
        b /= g;
        if (b > std::numeric_limits<std::uint64_t>::max() / num)
            throw error(errc::invalid_argument, "binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
        b *= num;
    }
    return b;
}

inline SubsetIndex first_subset(int r) {
    SubsetIndex s(static_cast<std::size_t>(r));
    std::iota(s.begin(), s.end(), 0);
    return s;
}

/// Advances to the colex successor; returns false after the last subset.
inline bool next_colex(SubsetIndex& s, int n) {
    for (std::size_t j = 0; j < s.size(); ++j) {
        const int limit = j + 1 < s.size() ? s.at(j + 1) : n;
        if (s[j] + 1 < limit) {
            ++s[j];
            for (std::size_t i = 0; i < j; ++i) s[i] = static_cast<int>(i);
            return true;
        }
    }
    return false;
}

inline std::uint64_t colex_rank(std::span<const int> s) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < s.size(); ++i) rank += binomial(s[i], static_cast<int>(i) + 1);
    return rank;
}

inline SubsetIndex colex_unrank(std::uint64_t rank, int r) {
    SubsetIndex s(static_cast<std::size_t>(r));
    for (int i = r - 1; i >= 0; --i) {
        int c = i;
        while (binomial(c + 1, i + 1) <= rank) ++c;
        s[static_cast<std::size_t>(i)] = c;
        rank -= binomial(c, i + 1);
    }
    return s;
}

/// Exponents in [0, n) not in s, increasing.
inline SubsetIndex complement(std::span<const int> s, int n) {
    SubsetIndex out;
    out.reserve(static_cast<std::size_t>(n) - s.size());
    std::size_t j = 0;
    for (int a = 0; a < n; ++a) {
        if (j < s.size() && s[j] == a)
            ++j;
        else
            out.push_back(a);
    }
    return out;
}

/// The subset w * z_I: every exponent shifted by k modulo n, re-sorted.
inline SubsetIndex rotate_subset(std::span<const int> s, int k, int n) {
    SubsetIndex out(s.begin(), s.end());
    for (auto& a : out) a = ((a + k) % n + n) % n;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace vimaps
