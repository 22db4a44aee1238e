// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_PENCIL_HPP
#define DICRIT_PENCIL_HPP

#include <utility>

#include "dicrit/polygon.hpp"

namespace dicrit {

// A special pencil P(x, y, T) = p(x, y) - T x^c U(x, y) with U a unit,
// x not dividing p, and p vanishing at the origin.
template <class F>
struct SpecialPencil {
    PencilPoly<F> P;
    long c;
    long y_order;
};

// Establishes and checks the special-form invariants of P itself
// (the caller provides c as a cross-check or -1 to infer it).
template <class F>
SpecialPencil<F> pencil_from_poly(const PencilPoly<F>& P, long expect_c = -1) {
    const F& f = P.field();
    if (P.is_zero()) throw NotSpecialError("zero pencil");
    PencilPoly<F> g = -P.t_slope();  // g = x^c U with P = p - T g
    if (g.is_zero()) throw NotSpecialError("no T part");
    long c = g.x_content();
    if (c < 1) throw NotSpecialError("T part has no x factor");
    if (expect_c >= 0 && c != expect_c) throw NotSpecialError("T part x-order mismatch");
    PencilPoly<F> U = g.divided_by_monomial(c, 0);
    if (f.is_zero(U.coeff(0, 0).a)) throw NotSpecialError("T-part cofactor is not a unit");
    PencilPoly<F> p = P.k_part();
    if (p.is_zero()) throw NotSpecialError("numerator vanishes");
    long d = -1;
    for (const auto& [k, coef] : p.terms())
        if (k.first == 0 && (d < 0 || k.second < d)) d = k.second;
    if (d < 0) throw NotSpecialError("x divides the numerator");
    if (d == 0) throw UnitNumeratorError();
    if (P.x_content() != 0 || P.y_content() != 0) throw NotSpecialError("pencil has monomial content");
    return SpecialPencil<F>{P, c, d};
}

// Assemble P = p - T x^c U from T-free inputs.
template <class F>
SpecialPencil<F> make_pencil(const PencilPoly<F>& p, long c, const PencilPoly<F>& U) {
    const F& f = p.field();
    if (!p.is_t_free() || !U.is_t_free()) throw NotSpecialError("p and U must not involve T");
    if (c < 1) throw NotSpecialError("c must be positive");
    if (U.is_zero() || f.is_zero(U.coeff(0, 0).a)) throw NotSpecialError("U is not a unit");
    PencilPoly<F> tpart = PencilPoly<F>::t_monomial(f) * PencilPoly<F>::monomial(f, f.one(), c, 0) * U;
    return pencil_from_poly(p - tpart, c);
}

// Smallest positive a with b n - a m = 1 and b = (1 + a m) / n.
inline std::pair<long, long> bezout_pair(long n, long m) {
    if (n <= 0 || m <= 0 || std::gcd(n, m) != 1) throw Error("bezout_pair needs coprime positive inputs");
    for (long a = 1;; ++a)
        if ((1 + a * m) % n == 0) return {a, (1 + a * m) / n};
}

// One toric-Newton transformation step.
template <class F>
struct ToricStep {
    Edge edge;
    long a, b;                 // b n - a m = 1
    typename F::Elem alpha;    // the root used for the translation
    long multiplicity;         // its multiplicity in q0
    long divided_x_power;      // always equals edge.omega
    long divided_y_power;      // the y1-content removed by the strict transform
};

// Substitute x = x1^n (y1 + alpha)^a, y = x1^m (y1 + alpha)^b and divide the
// full monomial content. The y1-content is taken over the whole pull-back,
// so the retained factor differs from the transform with (y1 + alpha)^v~
// removed by a unit only; no polygon-derived datum changes.
template <class F>
std::pair<SpecialPencil<F>, ToricStep<F>> toric_newton_child(const SpecialPencil<F>& s, const Edge& e,
                                                             const typename F::Elem& alpha, long mult) {
    const F& f = s.P.field();
    if (e.kind != EdgeKind::Ordinary) throw Error("toric-Newton step requires an ordinary edge");
    if (f.is_zero(alpha)) throw ZeroRootError();
    auto [a, b] = bezout_pair(e.n, e.m);

    PencilPoly<F> q = s.P.monomial_substitution(e.n, e.m, a, b);
    long wx = q.x_content();
    if (wx != e.omega) throw Error("strict transform: x-content differs from the edge weight");
    long wy = q.y_content();
    q = q.divided_by_monomial(wx, wy);
    q = q.shift_y(alpha, 0);
    // translation by a nonzero constant cannot create x-content; y-content can
    // only appear if the whole support collapses, which specialness forbids
    if (q.x_content() != 0 || q.y_content() != 0) throw Error("strict transform left monomial content");

    long c_child = e.n * s.c - e.omega;
    if (c_child < 1) throw Error("strict transform: T part lost its x factor");
    SpecialPencil<F> child = pencil_from_poly(q, c_child);
    if (child.y_order != mult) throw Error("strict transform: y-order differs from the root multiplicity");
    return {child, ToricStep<F>{e, a, b, alpha, mult, wx, wy}};
}

template <class F>
struct AbsorbStep {
    Edge edge;
    typename F::Elem root;  // y -> y + root x^m
};

// Remove an absorbable edge by the translation y -> y + A x^m.
template <class F>
std::pair<SpecialPencil<F>, AbsorbStep<F>> absorb_translation(const SpecialPencil<F>& s, const Edge& e) {
    if (e.kind != EdgeKind::Absorbable) throw NotAbsorbableError("edge is not absorbable");
    EdgeSupport<F> sup = edge_data(s.P, e);
    auto roots = rational_roots(sup.q0);
    if (roots.roots.size() != 1 || roots.roots[0].second != e.d)
        throw NotAbsorbableError("edge support is not a perfect power");
    typename F::Elem A = roots.roots[0].first;
    PencilPoly<F> q = s.P.shift_y(A, e.m);
    SpecialPencil<F> child = pencil_from_poly(q, s.c);
    if (child.y_order != s.y_order) throw Error("absorbing translation changed the y-order");
    return {child, AbsorbStep<F>{e, A}};
}

}  // namespace dicrit

#endif
