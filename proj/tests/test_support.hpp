// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

// Shared helpers for the test binaries.

#pragma once

#include <functional>
#include <vector>

#include "vimaps/cyclotomic.hpp"
#include "vimaps/subsets.hpp"
#include "vimaps/symfunc.hpp"
#include "vimaps/vi_engine.hpp"

namespace vimaps::testing {

/// Every monomial in kind(1..max_index) of weighted degree exactly `degree`.
inline std::vector<Monomial> all_monomials(int max_index, long long degree, InsertionKind kind = InsertionKind::chern) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial cur;
    std::function<void(int, long long)> rec = [&](int i, long long rest) {
        if (i == 0) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        const Monomial saved = cur;
        for (long long k = 0; k * i <= rest; ++k) {
            cur = saved;
            if (k > 0) cur.multiply({kind, i}, static_cast<int>(k));
            rec(i - 1, rest - k * i);
        }
        cur = saved;
    };
    rec(max_index, degree);
    return out;
}

/// Genus-0 integral with J^(-1) = n^(-r) prod_i z_i * prod_{i != j} (z_i - z_j), which holds in Q(w)
/// because n z_i^(n-1) = prod_{j != i} (z_i - z_j) and z_i^n = 1. No inverse of a ring element is formed.
inline mpq_class genus0_vandermonde_integral(const GrassmannSpec& spec, const Monomial& m) {
    const int n = spec.n;
    const SummandEvaluator eval(spec, m);
    Cyc total(n);
    SubsetIndex s = first_subset(spec.r);
    do {
        Cyc jinv = one(n);
        for (int a : s) jinv *= root_of_unity(n, a);
        for (int a : s)
            for (int b : s)
                if (a != b) jinv *= root_of_unity(n, a) - root_of_unity(n, b);
        total += eval.insertion_product(s) * jinv;
    } while (next_colex(s, n));
    mpq_class v = extract_rational(total).value;
    for (int k = 0; k < spec.r; ++k) v /= n;
    if ((static_cast<long long>(spec.d) * (spec.r - 1)) % 2 != 0) v = -v;
    return v;
}

}  // namespace vimaps::testing
