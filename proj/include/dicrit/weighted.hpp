// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_WEIGHTED_HPP
#define DICRIT_WEIGHTED_HPP

#include <map>
#include <utility>
#include <vector>

#include "dicrit/unipoly.hpp"

namespace dicrit {

// A series truncated by the weight w(i, j) = n i + m j <= trunc, over any
// field object R (the ground field, or K(T) via FractionField). Terms beyond
// the truncation are silently dropped; arithmetic is exact below it.
template <class R>
class WeightedSeries {
   public:
    using Elem = typename R::Elem;
    using Key = std::pair<long, long>;

    WeightedSeries(R f, long n, long m, long trunc)
        : f_(std::move(f)), n_(n), m_(m), trunc_(trunc) {
        if (n < 1 || m < 1 || std::gcd(n, m) != 1) throw Error("weights must be coprime positive integers");
    }

    const R& field() const { return f_; }
    long wn() const { return n_; }
    long wm() const { return m_; }
    long trunc() const { return trunc_; }
    const std::map<Key, Elem>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    long weight_of(long i, long j) const { return n_ * i + m_ * j; }

    void add_term(long i, long j, const Elem& v) {
        if (i < 0 || j < 0) throw Error("negative exponent");
        if (weight_of(i, j) > trunc_) return;
        auto it = t_.find({i, j});
        if (it == t_.end()) {
            if (!f_.is_zero(v)) t_.emplace(Key{i, j}, v);
        } else {
            it->second = f_.add(it->second, v);
            if (f_.is_zero(it->second)) t_.erase(it);
        }
    }

    Elem coeff(long i, long j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? f_.zero() : it->second;
    }

    long min_weight() const {
        if (t_.empty()) throw Error("weight of zero series");
        long best = -1;
        for (const auto& [k, v] : t_) {
            long w = weight_of(k.first, k.second);
            if (best < 0 || w < best) best = w;
        }
        return best;
    }

    // the terms of exactly weight w
    WeightedSeries weight_component(long w) const {
        WeightedSeries r(f_, n_, m_, trunc_);
        for (const auto& [k, v] : t_)
            if (weight_of(k.first, k.second) == w) r.t_.emplace(k, v);
        return r;
    }
    WeightedSeries initial_form() const { return weight_component(min_weight()); }
    bool is_quasi_homogeneous() const { return t_.empty() || weight_component(min_weight()).t_.size() == t_.size(); }

    long x_content() const {
        long c = -1;
        for (const auto& [k, v] : t_) c = (c < 0) ? k.first : std::min(c, k.first);
        if (c < 0) throw Error("content of zero series");
        return c;
    }
    long y_content() const {
        long c = -1;
        for (const auto& [k, v] : t_) c = (c < 0) ? k.second : std::min(c, k.second);
        if (c < 0) throw Error("content of zero series");
        return c;
    }

    WeightedSeries operator+(const WeightedSeries& o) const {
        check_compatible(o);
        WeightedSeries r = *this;
        for (const auto& [k, v] : o.t_) r.add_term(k.first, k.second, v);
        return r;
    }
    WeightedSeries operator-(const WeightedSeries& o) const {
        check_compatible(o);
        WeightedSeries r = *this;
        for (const auto& [k, v] : o.t_) r.add_term(k.first, k.second, f_.neg(v));
        return r;
    }
    WeightedSeries operator*(const WeightedSeries& o) const {
        check_compatible(o);
        WeightedSeries r(f_, n_, m_, trunc_);
        for (const auto& [k1, v1] : t_) {
            long w1 = weight_of(k1.first, k1.second);
            for (const auto& [k2, v2] : o.t_) {
                if (w1 + o.weight_of(k2.first, k2.second) > trunc_) continue;
                r.add_term(k1.first + k2.first, k1.second + k2.second, f_.mul(v1, v2));
            }
        }
        return r;
    }
    WeightedSeries scaled(const Elem& c) const {
        WeightedSeries r(f_, n_, m_, trunc_);
        if (f_.is_zero(c)) return r;
        for (const auto& [k, v] : t_) r.t_.emplace(k, f_.mul(v, c));
        return r;
    }
    WeightedSeries divided_by_monomial(long i, long j) const {
        WeightedSeries r(f_, n_, m_, trunc_);
        for (const auto& [k, v] : t_) {
            if (k.first < i || k.second < j) throw Error("monomial division is not exact");
            r.t_.emplace(Key{k.first - i, k.second - j}, v);
        }
        return r;
    }
    WeightedSeries shifted_by_monomial(long i, long j) const {
        WeightedSeries r(f_, n_, m_, trunc_);
        for (const auto& [k, v] : t_) r.add_term(k.first + i, k.second + j, v);
        return r;
    }
    bool operator==(const WeightedSeries& o) const {
        if (t_.size() != o.t_.size()) return false;
        auto it2 = o.t_.begin();
        for (const auto& [k, v] : t_) {
            if (k != it2->first || !f_.eq(v, it2->second)) return false;
            ++it2;
        }
        return true;
    }

    // same terms under a new weight / truncation; terms beyond the new
    // truncation are dropped
    WeightedSeries reweighted(long n2, long m2, long trunc2) const {
        WeightedSeries r(f_, n2, m2, trunc2);
        for (const auto& [k, v] : t_) r.add_term(k.first, k.second, v);
        return r;
    }

    long max_total_degree() const {
        long d = 0;
        for (const auto& [k, v] : t_) d = std::max(d, k.first + k.second);
        return d;
    }

   private:
    void check_compatible(const WeightedSeries& o) const {
        if (n_ != o.n_ || m_ != o.m_) throw Error("weight mismatch between series");
    }

    R f_;
    long n_, m_, trunc_;
    std::map<Key, Elem> t_;
};

// Unique shape of the weight-w lattice: w = n ex + m ey + e n m with
// 0 <= ex < m, 0 <= ey < n; e < 0 means the lattice is empty.
struct QHShape {
    long ex, ey, e;
};

inline QHShape qh_shape(long w, long n, long m) {
    // ex = w * n^{-1} mod m, ey = w * m^{-1} mod n
    auto mod_inv = [](long a, long mod) {
        if (mod == 1) return 0L;
        long t = 0, newt = 1, r = mod, newr = ((a % mod) + mod) % mod;
        while (newr != 0) {
            long q = r / newr;
            long tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        return ((t % mod) + mod) % mod;
    };
    QHShape s{};
    s.ex = (m == 1) ? 0 : (((w % m) * mod_inv(n, m)) % m + m) % m;
    s.ey = (n == 1) ? 0 : (((w % n) * mod_inv(m, n)) % n + n) % n;
    s.e = (w - n * s.ex - m * s.ey) / (n * m);
    return s;
}

// Univariate image of a quasi-homogeneous piece of weight w: the coefficient
// of s^v sits at the lattice point (ex + m (e - v), ey + n v).
template <class R>
UniPoly<R> qh_image(const WeightedSeries<R>& p, long w) {
    const R& f = p.field();
    QHShape sh = qh_shape(w, p.wn(), p.wm());
    UniPoly<R> img(f, "s");
    if (sh.e < 0) {
        if (!p.is_zero()) throw Error("nonzero piece on an empty lattice");
        return img;
    }
    for (const auto& [k, v] : p.terms()) {
        if (p.weight_of(k.first, k.second) != w) throw Error("piece is not quasi-homogeneous");
        long vv = (k.second - sh.ey);
        if (vv % p.wn() != 0) throw Error("lattice point off the weight grid");
        vv /= p.wn();
        img.set_coeff(static_cast<int>(vv), f.add(img.coeff(static_cast<int>(vv)), v));
    }
    return img;
}

template <class R>
WeightedSeries<R> qh_from_image(R f, long n, long m, long trunc, long w, const UniPoly<R>& img) {
    WeightedSeries<R> r(std::move(f), n, m, trunc);
    QHShape sh = qh_shape(w, n, m);
    if (img.is_zero()) return r;
    if (sh.e < 0 || img.degree() > sh.e) throw Error("image does not fit the weight lattice");
    for (int v = 0; v <= img.degree(); ++v) {
        if (r.field().is_zero(img.coeff(v))) continue;
        r.add_term(sh.ex + m * (sh.e - v), sh.ey + n * v, img.coeff(v));
    }
    return r;
}

}  // namespace dicrit

#endif
