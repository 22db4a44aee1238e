// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_RATFUNC_HPP
#define DICRIT_RATFUNC_HPP

#include <string>
#include <utility>

#include "dicrit/unipoly.hpp"

namespace dicrit {

// Rational functions num/den over K[t], reduced, with monic denominator.
// FractionField<F> is itself a field object in the sense of fields.hpp, so
// UniPoly and the weighted-series machinery work over K(T) unchanged.
template <class F>
struct RatFunc {
    UniPoly<F> num;
    UniPoly<F> den;  // monic, nonzero, coprime to num

    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
};

template <class F>
class FractionField {
   public:
    using Elem = RatFunc<F>;

    explicit FractionField(F base, std::string var = "T") : base_(std::move(base)), var_(std::move(var)) {}

    const F& base() const { return base_; }
    const std::string& var() const { return var_; }

    Elem make(UniPoly<F> num, UniPoly<F> den) const {
        if (den.is_zero()) throw Error("zero denominator");
        UniPoly<F> g = dicrit::gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        typename F::Elem lead_inv = base_.inv(den.lead());
        return Elem{num.scaled(lead_inv), den.scaled(lead_inv)};
    }
    Elem from_poly(UniPoly<F> p) const { return Elem{std::move(p), UniPoly<F>::one(base_, var_)}; }
    Elem from_base(typename F::Elem v) const { return from_poly(UniPoly<F>::constant(base_, std::move(v), var_)); }
    // the transcendental generator T
    Elem generator() const { return from_poly(UniPoly<F>::variable(base_, var_)); }

    Elem zero() const { return from_poly(UniPoly<F>::zero(base_, var_)); }
    Elem one() const { return from_poly(UniPoly<F>::one(base_, var_)); }
    Elem from_long(long v) const { return from_base(base_.from_long(v)); }
    Elem from_ratio(long num, long den) const { return from_base(base_.from_ratio(num, den)); }
    Elem from_decimal_string(const std::string& s) const { return from_base(base_.from_decimal_string(s)); }

    Elem add(const Elem& a, const Elem& b) const { return make(a.num * b.den + b.num * a.den, a.den * b.den); }
    Elem sub(const Elem& a, const Elem& b) const { return make(a.num * b.den - b.num * a.den, a.den * b.den); }
    Elem mul(const Elem& a, const Elem& b) const { return make(a.num * b.num, a.den * b.den); }
    Elem div(const Elem& a, const Elem& b) const {
        if (b.num.is_zero()) throw Error("division by zero");
        return make(a.num * b.den, a.den * b.num);
    }
    Elem neg(const Elem& a) const { return Elem{-a.num, a.den}; }
    Elem inv(const Elem& a) const { return div(one(), a); }

    bool is_zero(const Elem& a) const { return a.num.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a.num == b.num && a.den == b.den; }
    int cmp(const Elem& a, const Elem& b) const {
        // arbitrary but total and deterministic: compare degree vectors then coefficients
        auto key = [&](const Elem& e) { return std::make_pair(e.num.degree(), e.den.degree()); };
        if (key(a) != key(b)) return key(a) < key(b) ? -1 : 1;
        for (int i = 0; i <= a.num.degree(); ++i) {
            int c = base_.cmp(a.num.coeff(i), b.num.coeff(i));
            if (c != 0) return c;
        }
        for (int i = 0; i <= a.den.degree(); ++i) {
            int c = base_.cmp(a.den.coeff(i), b.den.coeff(i));
            if (c != 0) return c;
        }
        return 0;
    }

    unsigned long characteristic() const { return base_.characteristic(); }
    std::string str(const Elem& a) const;  // printer.hpp
    std::string name() const { return base_.name() + "(" + var_ + ")"; }

    bool operator==(const FractionField& o) const { return base_ == o.base_; }

   private:
    F base_;
    std::string var_;
};

}  // namespace dicrit

#endif
