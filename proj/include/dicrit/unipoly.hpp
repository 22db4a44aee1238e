// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_UNIPOLY_HPP
#define DICRIT_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "dicrit/errors.hpp"

namespace dicrit {

// Dense univariate polynomial over a field object F. Coefficients are indexed
// by exponent; the invariant is that the leading coefficient is nonzero
// unless the polynomial is zero (empty coefficient vector). A variable tag is
// carried along for printing only ("s", "z", "t", ...); arithmetic keeps the
// tag of the left operand.
template <class F>
class UniPoly {
   public:
    using Elem = typename F::Elem;

    explicit UniPoly(F f, std::string var = "s") : f_(std::move(f)), var_(std::move(var)) {}
    UniPoly(F f, std::vector<Elem> coeffs, std::string var = "s")
        : f_(std::move(f)), c_(std::move(coeffs)), var_(std::move(var)) {
        normalize();
    }

    static UniPoly zero(F f, std::string var = "s") { return UniPoly(std::move(f), std::move(var)); }
    static UniPoly constant(F f, Elem v, std::string var = "s") {
        UniPoly r(f, std::move(var));
        if (!f.is_zero(v)) r.c_.push_back(std::move(v));
        return r;
    }
    static UniPoly one(F f, std::string var = "s") { return constant(f, f.one(), std::move(var)); }
    static UniPoly monomial(F f, Elem v, int exp, std::string var = "s") {
        UniPoly r(f, std::move(var));
        if (!f.is_zero(v)) {
            for (int i = 0; i < exp; ++i) r.c_.push_back(f.zero());
            r.c_.push_back(std::move(v));
        }
        return r;
    }
    // the variable itself
    static UniPoly variable(F f, std::string var = "s") { return monomial(f, f.one(), 1, std::move(var)); }

    const F& field() const { return f_; }
    const std::string& var() const { return var_; }
    UniPoly with_var(std::string var) const {
        UniPoly r = *this;
        r.var_ = std::move(var);
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Elem coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return f_.zero();
        return c_[i];
    }
    const Elem& lead() const {
        if (c_.empty()) throw Error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && f_.eq(c_[0], f_.one()); }

    void set_coeff(int i, Elem v) {
        while (static_cast<int>(c_.size()) <= i) c_.push_back(f_.zero());
        c_[i] = std::move(v);
        normalize();
    }

    UniPoly operator+(const UniPoly& o) const {
        UniPoly r(f_, var_);
        std::size_t n = std::max(c_.size(), o.c_.size());
        r.c_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.c_.push_back(f_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i))));
        r.normalize();
        return r;
    }
    UniPoly operator-(const UniPoly& o) const {
        UniPoly r(f_, var_);
        std::size_t n = std::max(c_.size(), o.c_.size());
        r.c_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.c_.push_back(f_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i))));
        r.normalize();
        return r;
    }
    UniPoly operator-() const {
        UniPoly r(f_, var_);
        r.c_.reserve(c_.size());
        for (const auto& v : c_) r.c_.push_back(f_.neg(v));
        return r;
    }
    UniPoly operator*(const UniPoly& o) const {
        UniPoly r(f_, var_);
        if (is_zero() || o.is_zero()) return r;
        r.c_.assign(c_.size() + o.c_.size() - 1, f_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] = f_.add(r.c_[i + j], f_.mul(c_[i], o.c_[j]));
        r.normalize();
        return r;
    }
    UniPoly scaled(const Elem& k) const {
        UniPoly r(f_, var_);
        if (f_.is_zero(k)) return r;
        r.c_.reserve(c_.size());
        for (const auto& v : c_) r.c_.push_back(f_.mul(v, k));
        r.normalize();
        return r;
    }
    // multiply by var^k
    UniPoly shifted_up(int k) const {
        UniPoly r(f_, var_);
        if (is_zero()) return r;
        for (int i = 0; i < k; ++i) r.c_.push_back(f_.zero());
        for (const auto& v : c_) r.c_.push_back(v);
        return r;
    }
    bool operator==(const UniPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!f_.eq(c_[i], o.c_[i])) return false;
        return true;
    }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    Elem eval(const Elem& x) const {
        Elem acc = f_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
        return acc;
    }

    UniPoly derivative() const {
        UniPoly r(f_, var_);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(f_.mul(c_[i], f_.from_long(static_cast<long>(i))));
        r.normalize();
        return r;
    }

    // (quotient, remainder) with deg r < deg divisor
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const {
        if (divisor.is_zero()) throw Error("division by zero polynomial");
        UniPoly q(f_, var_);
        UniPoly r = *this;
        int dd = divisor.degree();
        Elem dl_inv = f_.inv(divisor.lead());
        if (r.degree() >= dd) q.c_.assign(r.degree() - dd + 1, f_.zero());
        while (!r.is_zero() && r.degree() >= dd) {
            int k = r.degree() - dd;
            Elem c = f_.mul(r.lead(), dl_inv);
            q.c_[k] = c;
            for (int i = 0; i <= dd; ++i)
                r.c_[k + i] = f_.sub(r.c_[k + i], f_.mul(c, divisor.c_[i]));
            r.normalize();
        }
        q.normalize();
        return {q, r};
    }
    UniPoly operator/(const UniPoly& o) const {
        auto [q, r] = divmod(o);
        if (!r.is_zero()) throw Error("polynomial division is not exact");
        return q;
    }
    UniPoly operator%(const UniPoly& o) const { return divmod(o).second; }

    UniPoly pow(long e) const {
        UniPoly acc = one(f_, var_);
        UniPoly base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base;
            if (e > 1) base = base * base;
        }
        return acc;
    }

    std::string to_string() const;  // defined in printer.hpp

   private:
    void normalize() {
        while (!c_.empty() && f_.is_zero(c_.back())) c_.pop_back();
    }

    F f_;
    std::vector<Elem> c_;
    std::string var_;
};

template <class F>
UniPoly<F> monic(const UniPoly<F>& u) {
    if (u.is_zero()) return u;
    return u.scaled(u.field().inv(u.lead()));
}

template <class F>
UniPoly<F> gcd(const UniPoly<F>& a, const UniPoly<F>& b) {
    UniPoly<F> x = a, y = b;
    while (!y.is_zero()) {
        UniPoly<F> r = x % y;
        x = y;
        y = r;
    }
    return monic(x);
}

}  // namespace dicrit

#endif
