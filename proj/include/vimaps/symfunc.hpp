// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file symfunc.hpp
 * @brief Elementary and complete homogeneous symmetric polynomials at cyclotomic points,
 *        and the insertion monomials they evaluate.
 *
 * A Chern insertion a_i = c_i(E_p^dual) is evaluated as e_i(z_1, ..., z_r). A Segre insertion
 * s_i(E_p) is evaluated as h_i(z_1, ..., z_r), where the z_j are the Chern roots of E_p^dual; with
 * that convention c(E_p) s(E_p) = 1 and no extra signs appear.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"

namespace vimaps {

enum class InsertionKind { chern, segre };

struct Insertion {
    InsertionKind kind = InsertionKind::chern;
    int index = 1;

    friend auto operator<=>(const Insertion&, const Insertion&) = default;
};

inline Insertion chern(int i) { return {InsertionKind::chern, i}; }
inline Insertion segre(int i) { return {InsertionKind::segre, i}; }

inline std::string to_string(const Insertion& ins) {
    return (ins.kind == InsertionKind::chern ? "a" : "s") + std::to_string(ins.index);
}

/// A multiset of insertions, kept merged and sorted.
class Monomial {
   public:
    Monomial() = default;
    Monomial(std::initializer_list<std::pair<Insertion, int>> factors) {
        for (const auto& [ins, k] : factors) multiply(ins, k);
    }

    Monomial& multiply(const Insertion& ins, int exponent = 1) {
        if (ins.index < 1) throw error(errc::invalid_argument, "insertion index must be >= 1: " + to_string(ins));
        if (exponent < 0) throw error(errc::invalid_argument, "negative exponent for " + to_string(ins));
        if (exponent == 0) return *this;
        auto it = std::lower_bound(factors_.begin(), factors_.end(), ins,
                                   [](const auto& f, const Insertion& key) { return f.first < key; });
        if (it != factors_.end() && it->first == ins)
            it->second += exponent;
        else
            factors_.insert(it, {ins, exponent});
        return *this;
    }

    Monomial times(const Insertion& ins, int exponent) const {
        Monomial m = *this;
        m.multiply(ins, exponent);
        return m;
    }

    const std::vector<std::pair<Insertion, int>>& factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }

    long long weighted_degree() const {
        long long deg = 0;
        for (const auto& [ins, k] : factors_) deg += static_cast<long long>(ins.index) * k;
        return deg;
    }

    int max_index(InsertionKind kind) const {
        int m = 0;
        for (const auto& [ins, k] : factors_)
            if (ins.kind == kind) m = std::max(m, ins.index);
        return m;
    }

    bool has_kind(InsertionKind kind) const { return max_index(kind) > 0; }

    /// Factors with every insertion replaced by the same index of the other kind.
    Monomial swapped_kind() const {
        Monomial m;
        for (const auto& [ins, k] : factors_)
            m.multiply({ins.kind == InsertionKind::chern ? InsertionKind::segre : InsertionKind::chern, ins.index}, k);
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

   private:
    std::vector<std::pair<Insertion, int>> factors_;
};

inline std::string to_string(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const auto& [ins, k] : m.factors()) {
        if (!out.empty()) out += ",";
        out += to_string(ins) + ":" + std::to_string(k);
    }
    return out;
}

// Generic evaluation on arbitrary tuples ----------------------------------------------------

/// e_0, ..., e_max of the tuple via prod_j (1 + t z_j) truncated at t^max.
inline std::vector<Cyc> elementary_all(int max, std::span<const Cyc> tuple, int n) {
    std::vector<Cyc> e(static_cast<std::size_t>(max) + 1, Cyc(n));
    e[0] = one(n);
    for (const auto& z : tuple) {
        for (int k = max; k >= 1; --k) e[static_cast<std::size_t>(k)] += z * e[static_cast<std::size_t>(k) - 1];
    }
    return e;
}

/// h_0, ..., h_max of the tuple via prod_j (1 - t z_j)^(-1) truncated at t^max.
inline std::vector<Cyc> complete_homogeneous_all(int max, std::span<const Cyc> tuple, int n) {
    std::vector<Cyc> h(static_cast<std::size_t>(max) + 1, Cyc(n));
    h[0] = one(n);
    for (const auto& z : tuple) {
        // multiply by 1 + z t + z^2 t^2 + ...: h_k <- h_k + z * h_{k-1} (ascending, in place)
        for (int k = 1; k <= max; ++k) h[static_cast<std::size_t>(k)] += z * h[static_cast<std::size_t>(k) - 1];
    }
    return h;
}

/// e_i of a tuple of elements of order n. Zero when i exceeds the tuple length.
inline Cyc elementary(int i, std::span<const Cyc> tuple, int n) {
    if (i < 0) throw error(errc::invalid_argument, "elementary: negative degree");
    if (static_cast<std::size_t>(i) > tuple.size()) return Cyc(n);
    return elementary_all(i, tuple, n).back();
}

inline Cyc complete_homogeneous(int i, std::span<const Cyc> tuple, int n) {
    if (i < 0) throw error(errc::invalid_argument, "complete_homogeneous: negative degree");
    return complete_homogeneous_all(i, tuple, n).back();
}

// Root-of-unity tuples: z_j = w^(exponents[j]); multiplication by z_j is an index shift -------

inline std::vector<Cyc> elementary_all_roots(int max, std::span<const int> exponents, int n) {
    std::vector<Cyc> e(static_cast<std::size_t>(max) + 1, Cyc(n));
    e[0] = one(n);
    int filled = 0;
    for (int a : exponents) {
        ++filled;
        for (int k = std::min(max, filled); k >= 1; --k)
            e[static_cast<std::size_t>(k)].add_rotated(e[static_cast<std::size_t>(k) - 1], a);
    }
    return e;
}

inline std::vector<Cyc> complete_homogeneous_all_roots(int max, std::span<const int> exponents, int n) {
    std::vector<Cyc> h(static_cast<std::size_t>(max) + 1, Cyc(n));
    h[0] = one(n);
    for (int a : exponents) {
        for (int k = 1; k <= max; ++k) h[static_cast<std::size_t>(k)].add_rotated(h[static_cast<std::size_t>(k) - 1], a);
    }
    return h;
}

}  // namespace vimaps
