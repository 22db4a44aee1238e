// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_ALGEBRA_HPP
#define DICRIT_ALGEBRA_HPP

#include <utility>
#include <vector>

#include "dicrit/fields.hpp"
#include "dicrit/ratfunc.hpp"
#include "dicrit/unipoly.hpp"

namespace dicrit {

// ---------------------------------------------------------------------------
// squarefree part
// ---------------------------------------------------------------------------

// u = v(s^p) -> v, valid over F_p where the Frobenius is the identity.
template <class F>
UniPoly<F> pth_root_poly(const UniPoly<F>& u) {
    const F& f = u.field();
    unsigned long p = f.characteristic();
    if (p == 0) throw Error("p-th root requested in characteristic zero");
    std::vector<typename F::Elem> cs;
    for (int i = 0; i * static_cast<long>(p) <= u.degree(); ++i)
        cs.push_back(u.coeff(i * static_cast<int>(p)));
    return UniPoly<F>(f, std::move(cs), u.var());
}

// Monic polynomial with the same distinct roots over the closure, each simple.
// In characteristic p, multiplicities divisible by p are handled by p-th-root
// extraction.
template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& u) {
    if (u.is_zero()) throw Error("squarefree part of zero polynomial");
    if (u.degree() == 0) return UniPoly<F>::one(u.field(), u.var());
    UniPoly<F> der = u.derivative();
    if (der.is_zero()) return squarefree_part(pth_root_poly(u));
    UniPoly<F> g = gcd(u, der);
    UniPoly<F> w = monic(u / g);
    if (u.field().characteristic() == 0 || g.degree() == 0) return w;
    // char p: roots with multiplicity divisible by p live only in g
    UniPoly<F> y = g;
    for (UniPoly<F> h = gcd(y, w); h.degree() > 0; h = gcd(y, w)) y = y / h;
    if (y.degree() == 0) return w;
    return monic(w * squarefree_part(y));
}

// ---------------------------------------------------------------------------
// resultant
// ---------------------------------------------------------------------------

template <class F>
typename F::Elem elem_pow(const F& f, typename F::Elem base, long e) {
    typename F::Elem acc = f.one();
    for (; e > 0; e >>= 1) {
        if (e & 1) acc = f.mul(acc, base);
        if (e > 1) base = f.mul(base, base);
    }
    return acc;
}

// Res(A, B) by the Euclidean recurrence over a field.
template <class F>
typename F::Elem resultant(UniPoly<F> a, UniPoly<F> b) {
    const F& f = a.field();
    if (a.is_zero() || b.is_zero()) return f.zero();
    typename F::Elem res = f.one();
    bool negate = false;
    while (true) {
        int da = a.degree(), db = b.degree();
        if (da == 0) {
            res = f.mul(res, elem_pow(f, a.lead(), db));
            break;
        }
        if (db == 0) {
            res = f.mul(res, elem_pow(f, b.lead(), da));
            break;
        }
        UniPoly<F> r = a % b;
        if (r.is_zero()) return f.zero();
        if ((da & 1) && (db & 1)) negate = !negate;
        res = f.mul(res, elem_pow(f, b.lead(), da - r.degree()));
        a = b;
        b = r;
    }
    return negate ? f.neg(res) : res;
}

// ---------------------------------------------------------------------------
// rational / field roots
// ---------------------------------------------------------------------------

template <class F>
struct RootsResult {
    std::vector<std::pair<typename F::Elem, int>> roots;  // (root, multiplicity)
    UniPoly<F> residual;                                  // exact cofactor, no roots in K
};

namespace detail {

// Sturm chain of a squarefree rational polynomial.
inline std::vector<UniPoly<RationalField>> sturm_chain(const UniPoly<RationalField>& m) {
    std::vector<UniPoly<RationalField>> chain;
    chain.push_back(m);
    chain.push_back(m.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly<RationalField> r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline int sign_variations(const std::vector<UniPoly<RationalField>>& chain, const mpq_class& x) {
    int variations = 0, last = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// all integer roots of a monic squarefree integer polynomial, via Sturm
// bisection down to unit intervals
inline std::vector<mpz_class> integer_roots_monic(const UniPoly<RationalField>& m) {
    std::vector<mpz_class> out;
    if (m.degree() <= 0) return out;
    auto chain = sturm_chain(m);
    mpz_class bound = 1;
    for (int i = 0; i <= m.degree(); ++i) {
        mpz_class a = abs(m.coeff(i).get_num());
        if (a > bound) bound = a;
    }
    bound += 1;
    struct Interval {
        mpz_class lo, hi;
    };
    std::vector<Interval> stack;
    stack.push_back({-bound - 1, bound});
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        int count = sign_variations(chain, mpq_class(iv.lo)) - sign_variations(chain, mpq_class(iv.hi));
        if (count <= 0) continue;
        if (iv.hi - iv.lo == 1) {
            if (sgn(m.eval(mpq_class(iv.hi))) == 0) out.push_back(iv.hi);
            continue;
        }
        mpz_class mid = (iv.lo + iv.hi) >> 1;  // floor for either sign
        stack.push_back({iv.lo, mid});
        stack.push_back({mid, iv.hi});
    }
    return out;
}

}  // namespace detail

// Roots in Q by the rational-root reduction (monicize, then exact integer-root
// isolation with Sturm chains) with deflation; the residual is the exact
// cofactor and has no rational roots.
inline RootsResult<RationalField> rational_roots(const UniPoly<RationalField>& u) {
    if (u.is_zero()) throw Error("roots of zero polynomial");
    const RationalField f = u.field();
    RootsResult<RationalField> out{{}, u};
    std::vector<mpq_class> candidates;

    if (u.degree() >= 1) {
        UniPoly<RationalField> w = squarefree_part(u);
        if (w.degree() == 1) {
            candidates.push_back(mpq_class(-w.coeff(0) / w.coeff(1)));
        } else if (w.degree() >= 2) {
            // clear denominators: W integer with the same roots
            mpz_class den_lcm = 1;
            for (int i = 0; i <= w.degree(); ++i) den_lcm = lcm(den_lcm, w.coeff(i).get_den());
            UniPoly<RationalField> W = w.scaled(mpq_class(den_lcm));
            // monicize: M(y) = L^(deg-1) W(y/L) has integer coefficients and
            // integer roots y = L * s for every rational root s of W
            mpq_class L(W.lead());
            std::vector<mpq_class> M(w.degree() + 1, mpq_class(0));
            for (int i = 0; i <= w.degree(); ++i) {
                mpq_class c = W.coeff(i);
                for (int k = 0; k < w.degree() - 1 - i; ++k) c *= L;
                if (i == w.degree()) c = 1;
                M[i] = c;
            }
            UniPoly<RationalField> Mpoly(f, M, w.var());
            for (const mpz_class& y0 : detail::integer_roots_monic(Mpoly))
                candidates.push_back(mpq_class(y0) / L);
        }
    }

    // deflate the original polynomial, recording exact multiplicities
    for (const mpq_class& r : candidates) {
        UniPoly<RationalField> lin(f, {mpq_class(-r), mpq_class(1)}, u.var());
        int mult = 0;
        while (!out.residual.is_constant()) {
            auto [q, rem] = out.residual.divmod(lin);
            if (!rem.is_zero()) break;
            out.residual = q;
            ++mult;
        }
        if (mult > 0) out.roots.emplace_back(r, mult);
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [&](const auto& a, const auto& b) { return f.cmp(a.first, b.first) < 0; });
    return out;
}

// Roots in F_p by exhaustive scan.
inline RootsResult<PrimeField> rational_roots(const UniPoly<PrimeField>& u) {
    if (u.is_zero()) throw Error("roots of zero polynomial");
    const PrimeField f = u.field();
    RootsResult<PrimeField> out{{}, u};
    for (std::uint32_t r = 0; r < f.modulus(); ++r) {
        if (out.residual.is_constant()) break;
        if (!f.is_zero(out.residual.eval(r))) continue;
        UniPoly<PrimeField> lin(f, {f.neg(r), f.one()}, u.var());
        int mult = 0;
        while (!out.residual.is_constant()) {
            auto [q, rem] = out.residual.divmod(lin);
            if (!rem.is_zero()) break;
            out.residual = q;
            ++mult;
        }
        if (mult > 0) out.roots.emplace_back(r, mult);
    }
    return out;
}

// ---------------------------------------------------------------------------
// resultant over K[t] by the subresultant pseudo-remainder sequence
// ---------------------------------------------------------------------------

// Polynomials in z with coefficients in the domain K[t], dense. The
// subresultant sequence keeps intermediate coefficients small via the exact
// divisions by g h^delta; every division below is exact by construction.
template <class F>
UniPoly<F> resultant_over_poly_ring(std::vector<UniPoly<F>> A, std::vector<UniPoly<F>> B) {
    if (A.empty() || B.empty()) throw Error("resultant of zero polynomial");
    const F f = A.front().field();
    const std::string tv = A.front().var();
    auto deg = [](const std::vector<UniPoly<F>>& p) { return static_cast<int>(p.size()) - 1; };
    auto trim = [](std::vector<UniPoly<F>>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    auto zero = UniPoly<F>::zero(f, tv);
    auto one = UniPoly<F>::one(f, tv);
    auto pow = [&](UniPoly<F> base, int e) {
        UniPoly<F> acc = one;
        for (; e > 0; --e) acc = acc * base;
        return acc;
    };
    // pseudo-remainder: exactly lc(B)^(dA - dB + 1) A mod B, compensating
    // for steps skipped when the degree drops by more than one
    auto prem = [&](std::vector<UniPoly<F>> P, const std::vector<UniPoly<F>>& Q) {
        int dQ = deg(Q);
        UniPoly<F> lq = Q.back();
        int spare = deg(P) - dQ + 1;
        while (!P.empty() && deg(P) >= dQ) {
            UniPoly<F> lead = P.back();
            int k = deg(P) - dQ;
            for (auto& c : P) c = c * lq;
            for (int i = 0; i <= dQ; ++i) P[k + i] = P[k + i] - lead * Q[i];
            P.pop_back();
            trim(P);
            --spare;
        }
        if (!P.empty() && spare > 0) {
            UniPoly<F> scale = pow(lq, spare);
            for (auto& c : P) c = c * scale;
        }
        return P;
    };

    bool negate = false;
    if (deg(A) < deg(B)) {
        std::swap(A, B);
        if ((deg(A) & 1) && (deg(B) & 1)) negate = true;
    }
    UniPoly<F> g = one, h = one;
    while (true) {
        int da = deg(A), db = deg(B);
        if (db == 0) {
            // res = lc(B)^da / h^(da - 1), exact
            UniPoly<F> num = pow(B.back(), da);
            UniPoly<F> res = (da >= 1) ? num / pow(h, da - 1) : num;
            return negate ? -res : res;
        }
        if ((da & 1) && (db & 1)) negate = !negate;
        int delta = da - db;
        auto R = prem(A, B);
        if (R.empty()) return zero;
        UniPoly<F> div = g * pow(h, delta);
        for (auto& c : R) c = c / div;
        A = std::move(B);
        B = std::move(R);
        g = A.back();
        // h <- h^(1 - delta) g^delta, exact in the domain
        h = (delta == 0) ? h : pow(g, delta) / pow(h, delta - 1);
    }
}

// ---------------------------------------------------------------------------
// critical values
// ---------------------------------------------------------------------------

// Monic squarefree Delta(t) whose roots over the closure are exactly
// { q(alpha) : q'(alpha) = 0 }, computed as Res_z(q(z) - t, q'(z)) by the
// subresultant sequence over K[t], then normalized. Throws InseparableError
// when q' vanishes.
template <class F>
UniPoly<F> critical_value_poly(const UniPoly<F>& q, const std::string& tvar = "t") {
    const F& f = q.field();
    UniPoly<F> qp = q.derivative();
    if (qp.is_zero()) throw InseparableError();
    if (qp.degree() == 0) return UniPoly<F>::one(f, tvar);

    // A = q(z) - t and B = q'(z), as polynomials in z over K[t]
    std::vector<UniPoly<F>> A, B;
    for (int i = 0; i <= q.degree(); ++i) A.push_back(UniPoly<F>::constant(f, q.coeff(i), tvar));
    A[0] = A[0] - UniPoly<F>::variable(f, tvar);
    for (int i = 0; i <= qp.degree(); ++i) B.push_back(UniPoly<F>::constant(f, qp.coeff(i), tvar));
    UniPoly<F> res = resultant_over_poly_ring(A, B);
    if (res.is_zero()) throw Error("degenerate resultant");
    if (res.degree() == 0) return UniPoly<F>::one(f, tvar);
    return monic(squarefree_part(res.with_var(tvar)));
}

}  // namespace dicrit

#endif
