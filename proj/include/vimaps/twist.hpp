// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file twist.hpp
 * @brief Virtual counts of maps to hypersurfaces and complete intersections X in G(r, n).
 *
 * For X cut out by sections of (det S^dual)^l_i, i = 1..u, with d l_i > 2g - 2, the virtual class of
 * Quot_d(C, X) is c_top(E) capped with that of Quot_d(C, G(r, n)), where E has rank
 * N = sum_i (d l_i - g + 1) and
 *
 *     c_top(E) = prod_i (l_i a_1)^(d l_i - g + 1) * exp(-L phi / a_1),   L = sum_i l_i.
 *
 * Two evaluations are provided. The closed path uses the resummed factor ((n - L)/n)^g. The phi path
 * expands the exponential term by term and evaluates every phi^s through the b-class reduction
 * (which vanishes for s > d), so it agrees with the closed path exactly when d >= g.
 */

#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "count.hpp"
#include "vi_engine.hpp"

namespace vimaps {

struct ProblemSpec {
    GrassmannSpec base;
    std::vector<int> multidegree;  // l_1, ..., l_u; empty for G(r, n) itself
    Monomial insertions;

    int degree_sum() const { return std::accumulate(multidegree.begin(), multidegree.end(), 0); }

    /// Rank of E: sum_i (d l_i - g + 1).
    long long twist_rank() const {
        long long rank = 0;
        for (int l : multidegree) rank += static_cast<long long>(base.d) * l - base.g + 1;
        return rank;
    }

    /// e_l = e - sum_i (d l_i - g + 1).
    long long twisted_dimension() const { return base.virtual_dimension() - twist_rank(); }

    /// d l_i > 2g - 2 for every i.
    bool in_regime() const {
        return std::all_of(multidegree.begin(), multidegree.end(), [&](int l) {
            return static_cast<long long>(base.d) * l > 2LL * base.g - 2;
        });
    }

    void validate() const {
        base.validate();
        for (int l : multidegree)
            if (l < 1) throw error(errc::invalid_argument, "hypersurface degrees must be >= 1");
    }
};

inline Advisory enumerativity_advisor(const ProblemSpec& spec);

namespace detail {

inline mpq_class frac(long long num, long long den) {
    mpq_class q{mpz_class(std::to_string(num)), mpz_class(std::to_string(den))};
    q.canonicalize();
    return q;
}

inline mpq_class qpow(const mpq_class& base, long long k) {
    if (k < 0) {
        if (sgn(base) == 0) throw error(errc::invalid_argument, "0 raised to a negative power");
        return qpow(1 / base, -k);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(k));
    mpq_class out(num, den);
    out.canonicalize();
    return out;
}

inline void check_twisted(const ProblemSpec& spec) {
    spec.validate();
    if (spec.multidegree.empty()) throw error(errc::invalid_argument, "a hypersurface degree is required");
    if (!spec.in_regime()) {
        throw error(errc::regime_violation, "d*l > 2g - 2 fails for some l (g = " + std::to_string(spec.base.g) +
                                                ", d = " + std::to_string(spec.base.d) + ")");
    }
    for (const auto& [ins, k] : spec.insertions.factors()) {
        if (ins.kind == InsertionKind::chern && ins.index > spec.base.r)
            throw error(errc::invalid_argument,
                        "Chern insertion " + to_string(ins) + " exceeds rank r = " + std::to_string(spec.base.r));
    }
    const long long el = spec.twisted_dimension();
    if (el < 0) throw error(errc::dimension_mismatch, "twisted virtual dimension " + std::to_string(el) + " is negative");
    if (spec.insertions.weighted_degree() != el) {
        throw error(errc::dimension_mismatch, "insertion degree " + std::to_string(spec.insertions.weighted_degree()) +
                                                  " != twisted virtual dimension " + std::to_string(el));
    }
}

/// prod_i l_i^(d l_i - g + 1)
inline mpq_class degree_power_product(const ProblemSpec& spec) {
    mpq_class p = 1;
    for (int l : spec.multidegree) p *= qpow(mpq_class(l), static_cast<long long>(spec.base.d) * l - spec.base.g + 1);
    return p;
}

inline int checked_int(long long v, const char* what) {
    if (v > std::numeric_limits<int>::max()) throw error(errc::invalid_argument, std::string(what) + " too large");
    return static_cast<int>(v);
}

}  // namespace detail

/// (n - L)^g prod_i l_i^(d l_i - g + 1) / n^g * integral over Quot_d(C, G(r, n)) of a_1^N P.
inline VirtualCount complete_intersection_integral(const ProblemSpec& spec, int workers = 1) {
    detail::check_twisted(spec);
    const auto& b = spec.base;
    const Monomial boosted = spec.insertions.times(chern(1), detail::checked_int(spec.twist_rank(), "twist rank"));
    const VirtualCount base = workers > 1 ? vi_integral_parallel(b, boosted, workers) : vi_integral(b, boosted);
    const mpq_class prefactor =
        detail::qpow(detail::frac(b.n - spec.degree_sum(), b.n), b.g) * detail::degree_power_product(spec);
    VirtualCount out = VirtualCount::of(prefactor * base.value, base.summands);
    out.advisory = enumerativity_advisor(spec);
    return out;
}

inline VirtualCount hypersurface_integral(const ProblemSpec& spec, int workers = 1) {
    if (spec.multidegree.size() != 1)
        throw error(errc::invalid_argument, "hypersurface_integral expects exactly one degree l");
    detail::check_twisted(spec);
    const auto& b = spec.base;
    const int l = spec.multidegree.front();
    const long long rank = static_cast<long long>(b.d) * l - b.g + 1;
    const Monomial boosted = spec.insertions.times(chern(1), detail::checked_int(rank, "twist rank"));
    const VirtualCount base = workers > 1 ? vi_integral_parallel(b, boosted, workers) : vi_integral(b, boosted);
    const mpq_class prefactor = detail::qpow(mpq_class(b.n - l), b.g) * detail::qpow(mpq_class(l), rank) /
                                detail::qpow(mpq_class(b.n), b.g);
    VirtualCount out = VirtualCount::of(prefactor * base.value, base.summands);
    out.advisory = enumerativity_advisor(spec);
    return out;
}

/// b_1^(j) b_1^(j+g) pairs for the listed j, followed by a monomial in the a-classes.
struct BClassWord {
    std::vector<int> pairs;  // the j of each pair, 1 <= j <= g
    Monomial trailing;
};

/// Integral of the word over Quot_d(C, G(r, n)): zero for repeated pairs or more than d pairs,
/// otherwise n^(-s) times the integral of a_1^s times the trailing monomial.
inline VirtualCount reduce_b_classes(const BClassWord& word, const GrassmannSpec& base) {
    base.validate();
    const int s = static_cast<int>(word.pairs.size());
    for (int j : word.pairs) {
        if (j < 1 || j > base.g)
            throw error(errc::invalid_argument,
                        "b-class pair index " + std::to_string(j) + " outside [1, " + std::to_string(base.g) + "]");
    }
    const long long e = base.virtual_dimension();
    if (word.trailing.weighted_degree() != e - s) {
        throw error(errc::dimension_mismatch, "trailing monomial degree " + std::to_string(word.trailing.weighted_degree()) +
                                                  " != e - s = " + std::to_string(e - s));
    }
    auto sorted = word.pairs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return VirtualCount::of(0);
    if (s > base.d) return VirtualCount::of(0);
    const VirtualCount v = vi_integral(base, word.trailing.times(chern(1), s));
    return VirtualCount::of(v.value / detail::qpow(mpq_class(base.n), s), v.summands);
}

/// c_top(E) expanded in powers of phi, each power evaluated through reduce_b_classes().
inline VirtualCount hypersurface_integral_via_phi_expansion(const ProblemSpec& spec) {
    detail::check_twisted(spec);
    const auto& b = spec.base;
    const int rank = detail::checked_int(spec.twist_rank(), "twist rank");
    const int L = spec.degree_sum();
    mpq_class total = 0;
    std::uint64_t summands = 0;
    mpq_class inv_factorial = 1;  // 1/s!
    mpz_class falling = 1;         // g!/(g-s)!: ordered choices of s distinct pair indices
    for (int s = 0; s <= b.g; ++s) {
        if (s > 0) {
            inv_factorial /= s;
            falling *= b.g - s + 1;
        }
        BClassWord word;
        for (int j = 1; j <= s; ++j) word.pairs.push_back(j);
        word.trailing = spec.insertions.times(chern(1), rank - s);
        const VirtualCount term = reduce_b_classes(word, b);
        summands += term.summands;
        total += detail::qpow(mpq_class(-L), s) * inv_factorial * mpq_class(falling) * term.value;
    }
    VirtualCount out = VirtualCount::of(total * detail::degree_power_product(spec), summands);
    out.advisory = enumerativity_advisor(spec);
    return out;
}

struct PathComparison {
    VirtualCount closed;
    VirtualCount phi;
    bool agree = false;
    bool d_below_g = false;  // the regime where the two paths are allowed to differ
};

inline PathComparison compare_paths(const ProblemSpec& spec, int workers = 1) {
    PathComparison c;
    c.closed = complete_intersection_integral(spec, workers);
    c.phi = hypersurface_integral_via_phi_expansion(spec);
    c.agree = c.closed.value == c.phi.value;
    c.d_below_g = spec.base.d < spec.base.g;
    return c;
}

/// prod_i l_i^(d l_i - g + 1) * (r + 1 - L)^g, the count for X in P^r.
inline VirtualCount closed_form_projective(int g, int d, int r, const std::vector<int>& multidegree) {
    if (g < 0 || d < 0 || r < 1) throw error(errc::invalid_argument, "closed_form_projective: need g, d >= 0 and r >= 1");
    mpq_class v = detail::qpow(mpq_class(r + 1 - std::accumulate(multidegree.begin(), multidegree.end(), 0)), g);
    for (int l : multidegree) {
        if (l < 1) throw error(errc::invalid_argument, "hypersurface degrees must be >= 1");
        v *= detail::qpow(mpq_class(l), static_cast<long long>(d) * l - g + 1);
    }
    return VirtualCount::of(v);
}

/// 2^(2d - m2 - g + 1) * 3^g, the a_1^m1 a_2^m2 count on Quot_d(C, LG(2,4)).
inline VirtualCount closed_form_lg24(int g, int d, int m1, int m2) {
    if (g < 0 || d < 0 || m1 < 0 || m2 < 0) throw error(errc::invalid_argument, "closed_form_lg24: negative parameter");
    if (m1 + 2 * m2 != 3 * (d - g + 1))
        throw error(errc::dimension_mismatch, "closed_form_lg24: m1 + 2 m2 must equal 3(d - g + 1)");
    if (d <= 2 * g - 2) throw error(errc::regime_violation, "closed_form_lg24: requires d > 2g - 2");
    return VirtualCount::of(detail::qpow(2, 2LL * d - m2 - g + 1) * detail::qpow(3, g));
}

struct TevelevComparison {
    int t = 0;
    VirtualCount q;           // integral of (a_{r-1}/l)^t over Quot_d(C, X_l), X_l in P^r
    mpq_class implied_tev;    // (l!/l^l)^t * q
    bool implied_is_integer = false;
    bool integrality_expected = false;  // 3 <= l <= r/2 + 1 and g + t >= 2
};

/// e_l / (r - 1) for X_l in P^r; throws unless it is a positive integer.
inline int tevelev_points(int g, int d, int r, int l) {
    if (r < 2) throw error(errc::invalid_argument, "tevelev: need r >= 2");
    const long long el = static_cast<long long>(d) * (r + 1 - l) + static_cast<long long>(1 - g) * (r - 1);
    if (el <= 0 || el % (r - 1) != 0) {
        throw error(errc::invalid_argument,
                    "tevelev: e_l / (r - 1) = " + std::to_string(el) + "/" + std::to_string(r - 1) + " is not a positive integer");
    }
    return static_cast<int>(el / (r - 1));
}

inline TevelevComparison tevelev_compare(int g, int d, int r, int l, int t) {
    if (l < 1 || g < 0 || d < 0) throw error(errc::invalid_argument, "tevelev: invalid parameters");
    if (t != tevelev_points(g, d, r, l))
        throw error(errc::invalid_argument, "tevelev: t must equal e_l / (r - 1) = " + std::to_string(tevelev_points(g, d, r, l)));
    TevelevComparison c;
    c.t = t;
    c.q = VirtualCount::of(detail::qpow(mpq_class(l), static_cast<long long>(d) * l - g + 1 - t) *
                           detail::qpow(mpq_class(r + 1 - l), g));
    mpz_class fact = 1;
    for (int k = 2; k <= l; ++k) fact *= k;
    c.implied_tev = detail::qpow(mpq_class(fact) / detail::qpow(mpq_class(l), l), t) * c.q.value;
    c.implied_tev.canonicalize();
    c.implied_is_integer = c.implied_tev.get_den() == 1;
    c.integrality_expected = l >= 3 && 2 * l <= r + 2 && g + t >= 2;
    return c;
}

/// The engine route to the same q: the hypersurface integral of a_{r-1}^t on G(r, r+1), divided by l^t.
inline VirtualCount tevelev_q_via_engine(int g, int d, int r, int l, int t) {
    ProblemSpec spec{{r, r + 1, g, d}, {l}, Monomial{{chern(r - 1), t}}};
    const VirtualCount v = hypersurface_integral(spec);
    return VirtualCount::of(v.value / detail::qpow(mpq_class(l), t), v.summands);
}

/// Which conditions for an enumerative reading of the count hold. Never asserts enumerativity outright:
/// the hypersurface statements also need weak g-convexity of the target and d large.
inline Advisory enumerativity_advisor(const ProblemSpec& spec) {
    if (!spec.in_regime()) return {Enumerativity::out_of_regime, "d*l > 2g - 2 fails, E is not a vector bundle"};
    if (spec.insertions.has_kind(InsertionKind::segre))
        return {Enumerativity::virtual_only, "Segre insertions are not Schubert incidence conditions on the target"};
    const int n = spec.base.n;
    if (spec.multidegree.empty()) {
        return {Enumerativity::enumerative_if_weakly_convex,
                "plain Grassmannian: enumerative for d sufficiently large (Bertram)"};
    }
    const int L = spec.degree_sum();
    const int worst = spec.insertions.max_index(InsertionKind::chern);
    if (spec.multidegree.size() == 1) {
        if (worst < n - L)
            return {Enumerativity::enumerative_if_weakly_convex,
                    "all i_k < n - l; requires weak g-convexity of X_l and d sufficiently large"};
        return {Enumerativity::virtual_only, "some i_k >= n - l = " + std::to_string(n - L)};
    }
    if (worst <= n - L)
        return {Enumerativity::enumerative_if_weakly_convex,
                "all i_k <= n - sum l_j; requires weak g-convexity of X and d sufficiently large"};
    return {Enumerativity::virtual_only, "some i_k > n - sum l_j = " + std::to_string(n - L)};
}

}  // namespace vimaps
