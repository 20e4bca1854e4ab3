// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Q[w]/(w^n - 1) for a fixed primitive n-th root of unity w.
 *
 * Elements are stored densely as n integer numerators over one positive common
 * denominator, kept in lowest terms after every operation (gcd of the content and
 * the denominator is 1, and zero has denominator 1). Multiplication wraps exponents
 * modulo n, so the representation never leaves length n.
 *
 * The ring Q[w]/(w^n - 1) has zero divisors. It is only identified with the field
 * Q(w) by reducing modulo the n-th cyclotomic polynomial, which happens in
 * reduce_mod_cyclotomic() / extract_rational() and nowhere else.
 */

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace vimaps {

class Cyc {
   public:
    /// The zero element of order n.
    explicit Cyc(int n) : n_(check_order(n)), num_(static_cast<std::size_t>(n)), den_(1) {}

    static Cyc constant(int n, const mpq_class& c) {
        Cyc x(n);
        x.num_[0] = c.get_num();
        x.den_ = c.get_den();
        return x;
    }

    static Cyc from_coefficients(int n, const std::vector<mpq_class>& coeffs) {
        Cyc x(n);
        if (coeffs.size() != static_cast<std::size_t>(n)) {
            throw error(errc::invalid_argument, "Cyc: expected " + std::to_string(n) + " coefficients, got " +
                                                    std::to_string(coeffs.size()));
        }
        mpz_class den = 1;
        for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        for (std::size_t k = 0; k < coeffs.size(); ++k) x.num_[k] = coeffs[k].get_num() * (den / coeffs[k].get_den());
        x.den_ = den;
        x.normalize();
        return x;
    }

    int order() const noexcept { return n_; }

    mpq_class coeff(int k) const {
        mpq_class c(num_[static_cast<std::size_t>(wrap(k))], den_);
        c.canonicalize();
        return c;
    }

    std::vector<mpq_class> coefficients() const {
        std::vector<mpq_class> out;
        out.reserve(num_.size());
        for (int k = 0; k < n_; ++k) out.push_back(coeff(k));
        return out;
    }

    const std::vector<mpz_class>& numerators() const noexcept { return num_; }
    const mpz_class& denominator() const noexcept { return den_; }

    bool is_zero() const {
        for (const auto& c : num_)
            if (sgn(c) != 0) return false;
        return true;
    }

    /// w^a * x, a pure index shift.
    Cyc rotated(int a) const {
        Cyc out(n_);
        const int s = wrap(a);
        for (int k = 0; k < n_; ++k) out.num_[static_cast<std::size_t>((k + s) % n_)] = num_[static_cast<std::size_t>(k)];
        out.den_ = den_;
        return out;
    }

    /// *this += w^a * x
    Cyc& add_rotated(const Cyc& x, int a) {
        require_same_order(x);
        const int s = wrap(a);
        if (den_ == x.den_) {
            for (int k = 0; k < n_; ++k)
                num_[static_cast<std::size_t>((k + s) % n_)] += x.num_[static_cast<std::size_t>(k)];
            normalize();
            return *this;
        }
        return *this += x.rotated(a);
    }

    Cyc operator-() const {
        Cyc out = *this;
        for (auto& c : out.num_) c = -c;
        return out;
    }

    Cyc& operator+=(const Cyc& rhs) { return combine(rhs, 1); }
    Cyc& operator-=(const Cyc& rhs) { return combine(rhs, -1); }

    Cyc& operator*=(const Cyc& rhs) {
        *this = *this * rhs;
        return *this;
    }

    Cyc& operator*=(const mpq_class& c) {
        for (auto& v : num_) v *= c.get_num();
        den_ *= c.get_den();
        normalize();
        return *this;
    }

    friend Cyc operator+(Cyc lhs, const Cyc& rhs) { return lhs += rhs; }
    friend Cyc operator-(Cyc lhs, const Cyc& rhs) { return lhs -= rhs; }
    friend Cyc operator*(Cyc lhs, const mpq_class& c) { return lhs *= c; }
    friend Cyc operator*(const mpq_class& c, Cyc rhs) { return rhs *= c; }

    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        a.require_same_order(b);
        const int n = a.n_;
        Cyc out(n);
        // Index lists of nonzero terms; most factors in the engine are binomials.
        std::vector<int> nz_b;
        nz_b.reserve(b.num_.size());
        for (int j = 0; j < n; ++j)
            if (sgn(b.num_[static_cast<std::size_t>(j)]) != 0) nz_b.push_back(j);
        for (int i = 0; i < n; ++i) {
            const mpz_class& ai = a.num_[static_cast<std::size_t>(i)];
            if (sgn(ai) == 0) continue;
            for (int j : nz_b) {
                int k = i + j;
                if (k >= n) k -= n;
                mpz_addmul(out.num_[static_cast<std::size_t>(k)].get_mpz_t(), ai.get_mpz_t(),
                           b.num_[static_cast<std::size_t>(j)].get_mpz_t());
            }
        }
        out.den_ = a.den_ * b.den_;
        out.normalize();
        return out;
    }

    /// Equality in Q[w]/(w^n - 1); canonical form makes this structural.
    friend bool operator==(const Cyc& a, const Cyc& b) { return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_; }

    friend std::ostream& operator<<(std::ostream& os, const Cyc& x) {
        bool first = true;
        for (int k = 0; k < x.n_; ++k) {
            const mpq_class c = x.coeff(k);
            if (sgn(c) == 0) continue;
            if (!first) os << " + ";
            os << c;
            if (k > 0) os << "*w^" << k;
            first = false;
        }
        if (first) os << "0";
        return os;
    }

   private:
    int n_;
    std::vector<mpz_class> num_;
    mpz_class den_;

    static int check_order(int n) {
        if (n < 1) throw error(errc::invalid_argument, "Cyc: order must be positive, got " + std::to_string(n));
        return n;
    }

    int wrap(int a) const noexcept {
        int r = a % n_;
        return r < 0 ? r + n_ : r;
    }

    void require_same_order(const Cyc& other) const {
        if (other.n_ != n_) {
            throw error(errc::order_mismatch,
                        "Cyc: order mismatch " + std::to_string(n_) + " vs " + std::to_string(other.n_));
        }
    }

    Cyc& combine(const Cyc& rhs, int sign) {
        require_same_order(rhs);
        if (den_ == rhs.den_) {
            for (std::size_t k = 0; k < num_.size(); ++k) {
                if (sign > 0)
                    num_[k] += rhs.num_[k];
                else
                    num_[k] -= rhs.num_[k];
            }
        } else {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), rhs.den_.get_mpz_t());
            const mpz_class fa = l / den_;
            const mpz_class fb = l / rhs.den_;
            for (std::size_t k = 0; k < num_.size(); ++k) {
                num_[k] *= fa;
                if (sign > 0)
                    num_[k] += rhs.num_[k] * fb;
                else
                    num_[k] -= rhs.num_[k] * fb;
            }
            den_ = l;
        }
        normalize();
        return *this;
    }

    void normalize() {
        if (den_ == 1) return;
        mpz_class g = den_;
        for (const auto& c : num_) {
            if (g == 1) break;
            if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        }
        if (is_zero()) {
            den_ = 1;
            return;
        }
        if (g != 1) {
            for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        }
    }
};

/// Rational value certified by extract_rational().
struct CycRational {
    mpq_class value;
};

/// The basis element w^(a mod n).
inline Cyc root_of_unity(int n, int a) {
    return Cyc::constant(n, 1).rotated(a);
}

inline Cyc one(int n) { return Cyc::constant(n, 1); }

inline Cyc pow(Cyc base, unsigned long k) {
    Cyc result = one(base.order());
    while (k > 0) {
        if (k & 1UL) result *= base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
inline std::vector<mpz_class> cyclotomic_polynomial(int n) {
    if (n < 1) throw error(errc::invalid_argument, "cyclotomic_polynomial: n must be positive");
    std::map<int, std::vector<mpz_class>> phi;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        // x^d - 1
        std::vector<mpz_class> p(static_cast<std::size_t>(d) + 1);
        p.front() = -1;
        p.back() = 1;
        for (const auto& [e, q] : phi) {
            if (d % e != 0) continue;
            // exact division by the monic q
            const std::size_t dq = q.size() - 1;
            std::vector<mpz_class> quot(p.size() - dq);
            for (std::size_t i = p.size(); i-- > dq;) {
                const mpz_class c = p[i];
                quot[i - dq] = c;
                if (sgn(c) == 0) continue;
                for (std::size_t j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
            }
            p = std::move(quot);
        }
        phi.emplace(d, std::move(p));
    }
    return phi.at(n);
}

/// Rational coefficients of x reduced modulo Phi_n, of length deg(Phi_n).
inline std::vector<mpq_class> reduce_mod_cyclotomic(const Cyc& x) {
    const auto phi = cyclotomic_polynomial(x.order());
    const std::size_t deg = phi.size() - 1;
    std::vector<mpz_class> r = x.numerators();
    for (std::size_t k = r.size(); k-- > deg;) {
        const mpz_class c = r[k];
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) r[k - deg + j] -= c * phi[j];
    }
    std::vector<mpq_class> out;
    out.reserve(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        mpq_class c(r[k], x.denominator());
        c.canonicalize();
        out.push_back(c);
    }
    return out;
}

/// Equality in the field Q(w), i.e. after reduction modulo Phi_n.
inline bool equal_in_field(const Cyc& a, const Cyc& b) {
    for (const auto& c : reduce_mod_cyclotomic(a - b))
        if (sgn(c) != 0) return false;
    return true;
}

/// The rational number represented by x, or not_rational if x reduces to a non-constant.
inline CycRational extract_rational(const Cyc& x) {
    const auto r = reduce_mod_cyclotomic(x);
    for (std::size_t k = 1; k < r.size(); ++k) {
        if (sgn(r[k]) != 0) {
            std::ostringstream os;
            os << "extract_rational: element " << x << " is not rational in Q(w), n = " << x.order();
            throw error(errc::not_rational, os.str());
        }
    }
    return CycRational{r.empty() ? mpq_class(0) : r[0]};
}

/// (1 - w^m)^(-1) in Q(w), written as (1/n) * prod_{k != m mod n, 0 < k < n} (1 - w^k).
/// The product identity holds modulo Phi_n only.
inline Cyc inv_one_minus_root(int n, int m) {
    if (n < 1) throw error(errc::invalid_argument, "inv_one_minus_root: n must be positive");
    const int mm = ((m % n) + n) % n;
    if (mm == 0) {
        throw error(errc::not_invertible,
                    "inv_one_minus_root: 1 - w^" + std::to_string(m) + " is zero for n = " + std::to_string(n));
    }
    Cyc result = Cyc::constant(n, mpq_class(1, n));
    for (int k = 1; k < n; ++k) {
        if (k == mm) continue;
        result *= one(n) - root_of_unity(n, k);
    }
    return result;
}

}  // namespace vimaps
