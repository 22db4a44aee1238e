// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_PRINTER_HPP
#define DICRIT_PRINTER_HPP

#include <string>

#include "dicrit/pencilpoly.hpp"
#include "dicrit/ratfunc.hpp"
#include "dicrit/unipoly.hpp"

namespace dicrit {

// Canonical exact text forms. These are the strings that end up in reports
// and JSON, so they must be deterministic; they also re-parse with the
// expression grammar (explicit '*', '^' with integer exponents).

namespace detail {

// one monomial "c*v^k" with sign split off; returns the unsigned body
template <class F>
std::string monomial_body(const F& f, const typename F::Elem& c, const std::string& var, int k, bool& negative) {
    std::string cs = f.str(c);
    negative = !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    std::string body;
    if (k == 0) return cs;
    bool unit_coeff = (cs == "1");
    if (!unit_coeff) body = cs + "*";
    body += var;
    if (k > 1) body += "^" + std::to_string(k);
    return body;
}

}  // namespace detail

template <class F>
std::string poly_to_string(const UniPoly<F>& u) {
    const F& f = u.field();
    if (u.is_zero()) return "0";
    std::string out;
    for (int i = u.degree(); i >= 0; --i) {
        if (f.is_zero(u.coeff(i))) continue;
        bool neg = false;
        std::string body = detail::monomial_body(f, u.coeff(i), u.var(), i, neg);
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

template <class F>
std::string UniPoly<F>::to_string() const {
    return poly_to_string(*this);
}

// Canonical bivariate form, highest x-power first; a mixed coefficient a + b*T
// is parenthesized so the output re-parses exactly.
template <class F>
std::string pencil_to_string(const PencilPoly<F>& p, char xv = 'x', char yv = 'y') {
    const F& f = p.field();
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [k, c] = *it;
        std::string mono;
        if (k.first > 0) mono += std::string(1, xv) + (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += std::string(1, yv) + (k.second > 1 ? "^" + std::to_string(k.second) : "");
        }
        bool has_a = !f.is_zero(c.a), has_b = !f.is_zero(c.b);
        std::string piece;
        bool neg = false;
        if (has_a && has_b) {
            std::string bs = f.str(c.b);
            bool bneg = !bs.empty() && bs[0] == '-';
            if (bneg) bs = bs.substr(1);
            std::string bterm = (bs == "1") ? "T" : bs + "*T";
            piece = "(" + f.str(c.a) + (bneg ? " - " : " + ") + bterm + ")";
            if (!mono.empty()) piece += "*" + mono;
        } else {
            const auto& v = has_a ? c.a : c.b;
            std::string cs = f.str(v);
            neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            bool unit = (cs == "1");
            if (has_b) {
                piece = unit ? "T" : cs + "*T";
                if (!mono.empty()) piece += "*" + mono;
            } else {
                if (mono.empty())
                    piece = cs;
                else
                    piece = unit ? mono : cs + "*" + mono;
            }
        }
        if (out.empty())
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

template <class F>
std::string FractionField<F>::str(const Elem& a) const {
    if (a.num.is_zero()) return "0";
    std::string n = poly_to_string(a.num);
    if (a.den.is_one()) return n;
    return "(" + n + ")/(" + poly_to_string(a.den) + ")";
}

}  // namespace dicrit

#endif
