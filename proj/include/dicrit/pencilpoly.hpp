// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_PENCILPOLY_HPP
#define DICRIT_PENCILPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dicrit/errors.hpp"
#include "dicrit/unipoly.hpp"

namespace dicrit {

// Sparse bivariate polynomial whose coefficients are affine in T:
// each stored term (i, j) -> a + b*T. Affineness in T is preserved by
// construction: products with a second T-carrying operand are rejected.
// Polynomials of the ground ring K[x,y] are the T-free case (b = 0).
template <class F>
class PencilPoly {
   public:
    using Elem = typename F::Elem;
    struct TCoeff {
        Elem a, b;  // a + b*T
    };
    using Key = std::pair<long, long>;  // (x-exponent i, y-exponent j)
    using Terms = std::map<Key, TCoeff>;

    explicit PencilPoly(F f) : f_(std::move(f)) {}

    static PencilPoly zero(F f) { return PencilPoly(std::move(f)); }
    static PencilPoly constant(F f, Elem v) {
        PencilPoly r(f);
        r.add_term(0, 0, v, f.zero());
        return r;
    }
    static PencilPoly one(F f) { return constant(f, f.one()); }
    static PencilPoly monomial(F f, Elem v, long i, long j) {
        PencilPoly r(f);
        r.add_term(i, j, std::move(v), f.zero());
        return r;
    }
    // the indeterminate T itself
    static PencilPoly t_monomial(F f) {
        PencilPoly r(f);
        r.add_term(0, 0, f.zero(), f.one());
        return r;
    }

    const F& field() const { return f_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    bool is_t_free() const {
        for (const auto& [k, c] : t_)
            if (!f_.is_zero(c.b)) return false;
        return true;
    }

    TCoeff coeff(long i, long j) const {
        auto it = t_.find({i, j});
        if (it == t_.end()) return {f_.zero(), f_.zero()};
        return it->second;
    }

    void add_term(long i, long j, Elem a, Elem b) {
        if (i < 0 || j < 0) throw Error("negative exponent");
        auto it = t_.find({i, j});
        if (it == t_.end()) {
            if (f_.is_zero(a) && f_.is_zero(b)) return;
            t_.emplace(Key{i, j}, TCoeff{std::move(a), std::move(b)});
        } else {
            it->second.a = f_.add(it->second.a, a);
            it->second.b = f_.add(it->second.b, b);
            if (f_.is_zero(it->second.a) && f_.is_zero(it->second.b)) t_.erase(it);
        }
    }

    PencilPoly operator+(const PencilPoly& o) const {
        PencilPoly r = *this;
        for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c.a, c.b);
        return r;
    }
    PencilPoly operator-(const PencilPoly& o) const {
        PencilPoly r = *this;
        for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, f_.neg(c.a), f_.neg(c.b));
        return r;
    }
    PencilPoly operator-() const {
        PencilPoly r(f_);
        for (const auto& [k, c] : t_) r.t_.emplace(k, TCoeff{f_.neg(c.a), f_.neg(c.b)});
        return r;
    }

    // Product. To stay affine in T, at most one operand may carry T.
    PencilPoly operator*(const PencilPoly& o) const {
        if (!is_t_free() && !o.is_t_free()) throw TDegreeTooHighError();
        PencilPoly r(f_);
        for (const auto& [k1, c1] : t_)
            for (const auto& [k2, c2] : o.t_) {
                // (a1 + b1 T)(a2 + b2 T) with b1 b2 = 0
                Elem a = f_.mul(c1.a, c2.a);
                Elem b = f_.add(f_.mul(c1.a, c2.b), f_.mul(c1.b, c2.a));
                r.add_term(k1.first + k2.first, k1.second + k2.second, std::move(a), std::move(b));
            }
        return r;
    }
    PencilPoly scaled(const Elem& k) const {
        PencilPoly r(f_);
        if (f_.is_zero(k)) return r;
        for (const auto& [key, c] : t_) r.t_.emplace(key, TCoeff{f_.mul(c.a, k), f_.mul(c.b, k)});
        return r;
    }
    PencilPoly pow(long e) const {
        PencilPoly acc = one(f_);
        PencilPoly base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base;
            if (e > 1) base = base * base;
        }
        return acc;
    }
    bool operator==(const PencilPoly& o) const {
        if (t_.size() != o.t_.size()) return false;
        auto it2 = o.t_.begin();
        for (const auto& [k, c] : t_) {
            if (k != it2->first || !f_.eq(c.a, it2->second.a) || !f_.eq(c.b, it2->second.b)) return false;
            ++it2;
        }
        return true;
    }
    bool operator!=(const PencilPoly& o) const { return !(*this == o); }

    // K-part P|_{T=0} and the T-slope dP/dT
    PencilPoly k_part() const {
        PencilPoly r(f_);
        for (const auto& [k, c] : t_)
            if (!f_.is_zero(c.a)) r.t_.emplace(k, TCoeff{c.a, f_.zero()});
        return r;
    }
    PencilPoly t_slope() const {
        PencilPoly r(f_);
        for (const auto& [k, c] : t_)
            if (!f_.is_zero(c.b)) r.t_.emplace(k, TCoeff{c.b, f_.zero()});
        return r;
    }

    long x_content() const {
        if (t_.empty()) throw Error("content of zero polynomial");
        long m = t_.begin()->first.first;
        for (const auto& [k, c] : t_) m = std::min(m, k.first);
        return m;
    }
    long y_content() const {
        if (t_.empty()) throw Error("content of zero polynomial");
        long m = t_.begin()->first.second;
        for (const auto& [k, c] : t_) m = std::min(m, k.second);
        return m;
    }
    // order of P(0, y) in y; requires a term on the y-axis (x does not divide P)
    long y_order_on_axis() const {
        long best = -1;
        for (const auto& [k, c] : t_)
            if (k.first == 0 && (best < 0 || k.second < best)) best = k.second;
        if (best < 0) throw Error("x divides the polynomial");
        return best;
    }
    long total_degree() const {
        long d = 0;
        for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
        return d;
    }
    long degree_x() const {
        long d = 0;
        for (const auto& [k, c] : t_) d = std::max(d, k.first);
        return d;
    }
    long degree_y() const {
        long d = 0;
        for (const auto& [k, c] : t_) d = std::max(d, k.second);
        return d;
    }

    PencilPoly divided_by_monomial(long i, long j) const {
        PencilPoly r(f_);
        for (const auto& [k, c] : t_) {
            if (k.first < i || k.second < j) throw Error("monomial division is not exact");
            r.t_.emplace(Key{k.first - i, k.second - j}, c);
        }
        return r;
    }

    // exponent remap (i, j) -> (n i + m j, a i + b j); injective for bn - am = 1
    PencilPoly monomial_substitution(long n, long m, long a, long b) const {
        PencilPoly r(f_);
        for (const auto& [k, c] : t_) r.add_term(n * k.first + m * k.second, a * k.first + b * k.second, c.a, c.b);
        return r;
    }

    // y -> y + A x^m  (m = 0 gives the plain translation y -> y + A).
    // Binomials come from Pascal's triangle: additions only, valid in any
    // characteristic.
    PencilPoly shift_y(const Elem& A, long m) const {
        PencilPoly r(f_);
        std::vector<std::vector<Elem>> pascal{{f_.one()}};
        auto row = [&](long j) -> const std::vector<Elem>& {
            while (static_cast<long>(pascal.size()) <= j) {
                const auto& prev = pascal.back();
                std::vector<Elem> next{f_.one()};
                for (std::size_t t = 1; t < prev.size(); ++t) next.push_back(f_.add(prev[t - 1], prev[t]));
                next.push_back(f_.one());
                pascal.push_back(std::move(next));
            }
            return pascal[j];
        };
        for (const auto& [k, c] : t_) {
            Elem pw = f_.one();
            std::vector<Elem> apow{f_.one()};
            for (long t = 1; t <= k.second; ++t) {
                pw = f_.mul(pw, A);
                apow.push_back(pw);
            }
            const auto& binoms = row(k.second);
            for (long t = 0; t <= k.second; ++t) {
                Elem coef = f_.mul(binoms[t], apow[t]);
                r.add_term(k.first + m * t, k.second - t, f_.mul(c.a, coef), f_.mul(c.b, coef));
            }
        }
        return r;
    }

    // x -> x + A y^m, the mirror of shift_y
    PencilPoly shift_x(const Elem& A, long m) const { return swapped_xy().shift_y(A, m).swapped_xy(); }

    PencilPoly swapped_xy() const {
        PencilPoly r(f_);
        for (const auto& [k, c] : t_) r.t_.emplace(Key{k.second, k.first}, c);
        return r;
    }

    Elem eval(const Elem& x, const Elem& y, const Elem& t) const {
        Elem acc = f_.zero();
        for (const auto& [k, c] : t_) {
            Elem term = f_.add(c.a, f_.mul(c.b, t));
            term = f_.mul(term, elem_pow_local(x, k.first));
            term = f_.mul(term, elem_pow_local(y, k.second));
            acc = f_.add(acc, term);
        }
        return acc;
    }

    // collect coefficients of x^i as a polynomial in y (requires T-free)
    UniPoly<F> y_slice_at_x0() const {
        std::vector<Elem> cs;
        for (const auto& [k, c] : t_) {
            if (k.first != 0) continue;
            while (static_cast<long>(cs.size()) <= k.second) cs.push_back(f_.zero());
            cs[k.second] = c.a;
        }
        return UniPoly<F>(f_, cs, "y");
    }

   private:
    Elem elem_pow_local(Elem base, long e) const {
        Elem acc = f_.one();
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = f_.mul(acc, base);
            if (e > 1) base = f_.mul(base, base);
        }
        return acc;
    }

    F f_;
    Terms t_;
};

}  // namespace dicrit

#endif
