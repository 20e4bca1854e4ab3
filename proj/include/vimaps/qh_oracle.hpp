// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file qh_oracle.hpp
 * @brief Small quantum cohomology of G(r, n) by Pieri products and rim-hook reduction.
 *
 * Schubert classes are indexed by partitions in the r x (n - r) box (at most r rows). The class
 * a_i = c_i(S^dual) is the column 1^i, so multiplying by it adds a vertical strip of i boxes.
 *
 * Computation happens on beta numbers b_j = lambda_j + r - 1 - j (j = 0..r-1), i.e. on the
 * alternant det(x_k^(b_j)) in r variables. Adding a vertical strip along a set S of rows is
 * b -> b + 1_S. In the quantum ring every Chern root satisfies x^n = (-1)^(r-1) q, so an exponent
 * b_j >= n is replaced by b_j - n at the cost of (-1)^(r-1) q; re-sorting the exponents then gives the
 * sign of the sorting permutation, and a repeated exponent gives zero. This is the n-rim-hook rule
 * with sign (-1)^(r - height of the hook).
 */

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "subsets.hpp"
#include "symfunc.hpp"

namespace vimaps {

/// Weakly decreasing parts, padded with zeros to exactly r entries.
using Partition = std::vector<int>;

struct QTerm {
    Partition shape;
    int q_power = 0;

    friend auto operator<=>(const QTerm&, const QTerm&) = default;
};

/// Finitely supported integer combination of q^k sigma_lambda.
using QClass = std::map<QTerm, mpz_class>;

inline QClass unit_class(int r) { return QClass{{QTerm{Partition(static_cast<std::size_t>(r), 0), 0}, 1}}; }

inline Partition box_partition(int r, int n) { return Partition(static_cast<std::size_t>(r), n - r); }

inline int partition_size(const Partition& p) {
    int s = 0;
    for (int v : p) s += v;
    return s;
}

namespace detail {

inline void add_term(QClass& c, QTerm key, const mpz_class& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = c.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) c.erase(it);
    }
}

inline void check_box(int r, int n) {
    if (r < 1 || n < r) throw error(errc::invalid_argument, "quantum cohomology needs 1 <= r <= n");
}

}  // namespace detail

/// Multiplies by the special class c_i(S^dual) in QH*(G(r, n)).
inline QClass pieri_multiply(const QClass& c, int i, int r, int n) {
    detail::check_box(r, n);
    if (i < 1 || i > r) throw error(errc::invalid_argument, "pieri_multiply: need 1 <= i <= r, got " + std::to_string(i));
    QClass out;
    std::vector<int> beta(static_cast<std::size_t>(r));
    for (const auto& [term, coeff] : c) {
        for (int j = 0; j < r; ++j) beta[static_cast<std::size_t>(j)] = term.shape[static_cast<std::size_t>(j)] + r - 1 - j;
        SubsetIndex rows = first_subset(i);
        do {
            std::vector<int> b = beta;
            for (int j : rows) ++b[static_cast<std::size_t>(j)];
            int sign = 1;
            int hooks = 0;
            for (auto& v : b) {
                while (v >= n) {
                    v -= n;
                    ++hooks;
                }
            }
            if (hooks % 2 == 1 && (r - 1) % 2 == 1) sign = -sign;
            // sort descending, tracking the permutation sign; repeated exponents vanish
            bool repeated = false;
            for (std::size_t a = 0; a < b.size() && !repeated; ++a) {
                for (std::size_t k = a + 1; k < b.size(); ++k) {
                    if (b[a] == b[k]) {
                        repeated = true;
                        break;
                    }
                    if (b[a] < b[k]) sign = -sign;
                }
            }
            if (repeated) continue;
            std::sort(b.begin(), b.end(), std::greater<>());
            Partition shape(static_cast<std::size_t>(r));
            for (int j = 0; j < r; ++j) shape[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j)] - (r - 1 - j);
            detail::add_term(out, QTerm{std::move(shape), term.q_power + hooks}, sign > 0 ? coeff : mpz_class(-coeff));
        } while (next_colex(rows, r));
    }
    return out;
}

/// Classical vertical-strip Pieri rule in H*(G(r, n)), acting on partitions directly.
inline QClass classical_pieri_multiply(const QClass& c, int i, int r, int n) {
    detail::check_box(r, n);
    if (i < 1 || i > r) throw error(errc::invalid_argument, "classical_pieri_multiply: need 1 <= i <= r");
    QClass out;
    for (const auto& [term, coeff] : c) {
        SubsetIndex rows = first_subset(i);
        do {
            Partition p = term.shape;
            for (int j : rows) ++p[static_cast<std::size_t>(j)];
            bool ok = p.front() <= n - r;
            for (std::size_t j = 1; j < p.size() && ok; ++j) ok = p[j] <= p[j - 1];
            if (ok) detail::add_term(out, QTerm{std::move(p), term.q_power}, coeff);
        } while (next_colex(rows, r));
    }
    return out;
}

/// Genus-0 count: coefficient of q^d times the point class in the quantum product of the insertions.
inline mpz_class fixed_domain_count_g0(int r, int n, int d, const Monomial& insertions) {
    detail::check_box(r, n);
    if (d < 0) throw error(errc::invalid_argument, "degree must be >= 0");
    if (insertions.has_kind(InsertionKind::segre))
        throw error(errc::invalid_argument, "the quantum oracle supports Chern insertions only");
    const long long e = static_cast<long long>(d) * n + static_cast<long long>(r) * (n - r);
    if (insertions.weighted_degree() != e) {
        throw error(errc::dimension_mismatch, "insertion degree " + std::to_string(insertions.weighted_degree()) +
                                                  " != genus-0 virtual dimension " + std::to_string(e));
    }
    QClass c = unit_class(r);
    for (const auto& [ins, k] : insertions.factors())
        for (int rep = 0; rep < k; ++rep) c = pieri_multiply(c, ins.index, r, n);
    const auto it = c.find(QTerm{box_partition(r, n), d});
    return it == c.end() ? mpz_class(0) : it->second;
}

}  // namespace vimaps
