// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file vi_engine.hpp
 * @brief Exact evaluation of virtual top intersections of a-classes on Quot_d(C, G(r, n)).
 *
 * The integral of a monomial P in the classes a_i = c_i(E_p^dual) of weighted degree
 * e = dn + r(n - r)(1 - g) is
 *
 *     (-1)^(d(r-1)) * sum over r-subsets I of the n-th roots of unity of  P(z_I) * J(z_I)^(g-1),
 *
 * where a_i is evaluated as e_i(z_I). The J factor is evaluated without division as
 *
 *     J(z_I) = prod_{i in I} prod_{k not in I} (z_i - z_k),
 *
 * which agrees with prod_i n z_i^(n-1) / prod_{i != j in I} (z_i - z_j) because
 * n z_i^(n-1) = prod_{j != i} (z_i - z_j) over all n roots.
 *
 * In genus 0 the inverse J^(-1) is assembled from one certified inverse per difference factor:
 * z_i - z_k = -w^(a_k) (1 - w^(a_i - a_k)).
 *
 * Each summand is multiplied by w^(sum of insertion degrees + (g-1) r (n-r)) when every root is
 * rotated by w, which is w^(dn) = 1 in the balanced case; vi_integral_orbit_reduced() sums one
 * representative per rotation orbit.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "count.hpp"
#include "cyclotomic.hpp"
#include "subsets.hpp"
#include "symfunc.hpp"

namespace vimaps {

struct GrassmannSpec {
    int r = 1;  // rank of the subsheaf
    int n = 1;  // ambient dimension
    int g = 0;  // genus of the domain curve
    int d = 0;  // degree

    /// e = dn + r(n-r)(1-g); may be negative.
    long long virtual_dimension() const {
        return static_cast<long long>(d) * n + static_cast<long long>(r) * (n - r) * (1 - g);
    }

    void validate() const {
        if (n < 1 || r < 1 || r > n)
            throw error(errc::invalid_argument,
                        "G(r, n) requires 1 <= r <= n, got r = " + std::to_string(r) + ", n = " + std::to_string(n));
        if (g < 0) throw error(errc::invalid_argument, "genus must be >= 0");
        if (d < 0) throw error(errc::invalid_argument, "degree must be >= 0");
    }

    friend bool operator==(const GrassmannSpec&, const GrassmannSpec&) = default;
};

inline std::string to_string(const GrassmannSpec& s) {
    return "G(" + std::to_string(s.r) + "," + std::to_string(s.n) + ") g=" + std::to_string(s.g) +
           " d=" + std::to_string(s.d);
}

/// Division-free J(z_I): a product of r(n-r) root differences.
inline Cyc j_factor(const GrassmannSpec& spec, std::span<const int> subset) {
    const int n = spec.n;
    Cyc j = one(n);
    const auto rest = complement(subset, n);
    for (int a : subset) {
        for (int b : rest) j *= root_of_unity(n, a) - root_of_unity(n, b);
    }
    return j;
}

namespace detail {

inline void check_insertions(const GrassmannSpec& spec, const Monomial& insertions) {
    spec.validate();
    for (const auto& [ins, k] : insertions.factors()) {
        if (ins.kind == InsertionKind::chern && ins.index > spec.r) {
            throw error(errc::invalid_argument, "Chern insertion " + to_string(ins) + " exceeds rank r = " +
                                                    std::to_string(spec.r));
        }
    }
    const long long e = spec.virtual_dimension();
    if (e < 0) {
        throw error(errc::dimension_mismatch,
                    "virtual dimension e = " + std::to_string(e) + " is negative for " + to_string(spec));
    }
    if (insertions.weighted_degree() != e) {
        throw error(errc::dimension_mismatch, "insertion degree " + std::to_string(insertions.weighted_degree()) +
                                                  " != virtual dimension e = " + std::to_string(e) + " for " +
                                                  to_string(spec));
    }
}

}  // namespace detail

/// Evaluates single summands P(z_I) J(z_I)^(g-1) for a fixed spec and insertion monomial.
class SummandEvaluator {
   public:
    SummandEvaluator(const GrassmannSpec& spec, Monomial insertions) : spec_(spec), insertions_(std::move(insertions)) {
        detail::check_insertions(spec_, insertions_);
        max_chern_ = insertions_.max_index(InsertionKind::chern);
        max_segre_ = insertions_.max_index(InsertionKind::segre);
        if (spec_.g == 0) {
            // inverse of 1 - w^m for every nonzero residue m
            inverse_table_.reserve(static_cast<std::size_t>(spec_.n));
            inverse_table_.push_back(Cyc(spec_.n));
            for (int m = 1; m < spec_.n; ++m) inverse_table_.push_back(inv_one_minus_root(spec_.n, m));
        }
    }

    const GrassmannSpec& spec() const noexcept { return spec_; }
    const Monomial& insertions() const noexcept { return insertions_; }

    /// J(z_I)^(-1) in Q(w), as a product of certified factor inverses.
    Cyc j_inverse(std::span<const int> subset) const {
        const int n = spec_.n;
        const auto rest = complement(subset, n);
        Cyc inv = one(n);
        int shift = 0;
        for (int a : subset) {
            for (int b : rest) {
                inv *= table_inverse(a - b);
                shift -= b;
            }
        }
        inv = inv.rotated(shift);
        const std::size_t factors = subset.size() * rest.size();
        return factors % 2 == 0 ? inv : -inv;
    }

    Cyc insertion_product(std::span<const int> subset) const {
        const int n = spec_.n;
        Cyc product = one(n);
        std::vector<Cyc> e, h;
        if (max_chern_ > 0) e = elementary_all_roots(max_chern_, subset, n);
        if (max_segre_ > 0) h = complete_homogeneous_all_roots(max_segre_, subset, n);
        for (const auto& [ins, k] : insertions_.factors()) {
            const auto& table = ins.kind == InsertionKind::chern ? e : h;
            product *= pow(table[static_cast<std::size_t>(ins.index)], static_cast<unsigned long>(k));
        }
        return product;
    }

    Cyc operator()(std::span<const int> subset) const {
        Cyc value = insertion_product(subset);
        if (spec_.g == 0) return value * j_inverse(subset);
        if (spec_.g == 1) return value;
        return value * pow(j_factor(spec_, subset), static_cast<unsigned long>(spec_.g - 1));
    }

    /// (-1)^(d(r-1)) applied to an extracted subset sum.
    VirtualCount finish(const Cyc& total, std::uint64_t summands) const {
        mpq_class v = extract_rational(total).value;
        if ((static_cast<long long>(spec_.d) * (spec_.r - 1)) % 2 != 0) v = -v;
        return VirtualCount::of(v, summands);
    }

   private:
    GrassmannSpec spec_;
    Monomial insertions_;
    int max_chern_ = 0;
    int max_segre_ = 0;
    std::vector<Cyc> inverse_table_;

    const Cyc& table_inverse(int m) const {
        const int n = spec_.n;
        return inverse_table_[static_cast<std::size_t>(((m % n) + n) % n)];
    }
};

/// Sum of summands over colex ranks [lo, hi).
inline Cyc sum_block(const SummandEvaluator& eval, std::uint64_t lo, std::uint64_t hi) {
    const int n = eval.spec().n;
    Cyc total(n);
    if (lo >= hi) return total;
    SubsetIndex s = colex_unrank(lo, eval.spec().r);
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
        total += eval(s);
        next_colex(s, n);
    }
    return total;
}

/// The Vafa-Intriligator integral of the monomial over [Quot_d(C, G(r, n))]^vir.
inline VirtualCount vi_integral(const GrassmannSpec& spec, const Monomial& insertions) {
    const SummandEvaluator eval(spec, insertions);
    const std::uint64_t total = binomial(spec.n, spec.r);
    return eval.finish(sum_block(eval, 0, total), total);
}

/// As vi_integral, with the colex range split into contiguous blocks summed on separate threads.
inline VirtualCount vi_integral_parallel(const GrassmannSpec& spec, const Monomial& insertions, int workers) {
    if (workers < 1) throw error(errc::invalid_argument, "workers must be >= 1");
    const SummandEvaluator eval(spec, insertions);
    const std::uint64_t total = binomial(spec.n, spec.r);
    const std::uint64_t w = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total);
    if (w <= 1) return eval.finish(sum_block(eval, 0, total), total);

    std::vector<Cyc> partial(w, Cyc(spec.n));
    std::vector<std::exception_ptr> failures(w);
    {
        std::vector<std::jthread> threads;
        threads.reserve(w);
        for (std::uint64_t k = 0; k < w; ++k) {
            const std::uint64_t lo = total * k / w;
            const std::uint64_t hi = total * (k + 1) / w;
            threads.emplace_back([&, k, lo, hi] {
                try {
                    partial[k] = sum_block(eval, lo, hi);
                } catch (...) {
                    failures[k] = std::current_exception();
                }
            });
        }
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
    Cyc sum(spec.n);
    for (const auto& p : partial) sum += p;
    return eval.finish(sum, total);
}

/// As vi_integral, evaluating one colex-least representative per rotation orbit, weighted by orbit size.
inline VirtualCount vi_integral_orbit_reduced(const GrassmannSpec& spec, const Monomial& insertions) {
    const SummandEvaluator eval(spec, insertions);
    const int n = spec.n;
    Cyc sum(n);
    std::uint64_t evaluated = 0;
    SubsetIndex s = first_subset(spec.r);
    do {
        const std::uint64_t rank = colex_rank(s);
        bool representative = true;
        int stabilizer = 1;
        for (int k = 1; k < n && representative; ++k) {
            const std::uint64_t other = colex_rank(rotate_subset(s, k, n));
            if (other < rank)
                representative = false;
            else if (other == rank)
                ++stabilizer;
        }
        if (!representative) continue;
        sum += eval(s) * mpq_class(n / stabilizer);
        ++evaluated;
    } while (next_colex(s, n));
    return eval.finish(sum, evaluated);
}

struct DualityReport {
    VirtualCount chern_side;  // on G(r, n) with the Chern monomial
    VirtualCount segre_side;  // on G(n-r, n) with the matching Segre monomial
    bool equal = false;
};

/// Compares the Chern-class integral on G(r, n) with the Segre-class integral on G(n - r, n).
inline DualityReport duality_check(const GrassmannSpec& spec, const Monomial& chern_insertions) {
    if (chern_insertions.has_kind(InsertionKind::segre))
        throw error(errc::invalid_argument, "duality_check expects Chern insertions only");
    if (spec.r >= spec.n)
        throw error(errc::invalid_argument, "duality_check needs r < n so that G(n - r, n) is nonempty");
    DualityReport report;
    report.chern_side = vi_integral(spec, chern_insertions);
    GrassmannSpec dual = spec;
    dual.r = spec.n - spec.r;
    report.segre_side = vi_integral(dual, chern_insertions.swapped_kind());
    report.equal = report.chern_side.value == report.segre_side.value;
    return report;
}

}  // namespace vimaps
