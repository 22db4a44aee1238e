// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_HENSEL_HPP
#define DICRIT_HENSEL_HPP

#include <vector>

#include "dicrit/pencil.hpp"
#include "dicrit/printer.hpp"
#include "dicrit/ratfunc.hpp"
#include "dicrit/weighted.hpp"

namespace dicrit {

namespace detail {

// Gaussian elimination with the given column order; free columns are set to
// zero, which normalizes the solution deterministically (leading image
// coefficients of g', then of f', are preferred zero).
template <class R>
std::vector<typename R::Elem> solve_linear(const R& f,
                                           std::vector<std::vector<typename R::Elem>>& mat,
                                           std::vector<typename R::Elem>& rhs) {
    const std::size_t rows = mat.size();
    const std::size_t cols = rows ? mat[0].size() : 0;
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && f.is_zero(mat[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(mat[piv], mat[rank]);
        std::swap(rhs[piv], rhs[rank]);
        typename R::Elem inv = f.inv(mat[rank][col]);
        for (std::size_t c = col; c < cols; ++c) mat[rank][c] = f.mul(mat[rank][c], inv);
        rhs[rank] = f.mul(rhs[rank], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || f.is_zero(mat[r][col])) continue;
            typename R::Elem factor = mat[r][col];
            for (std::size_t c = col; c < cols; ++c) mat[r][c] = f.sub(mat[r][c], f.mul(factor, mat[rank][c]));
            rhs[r] = f.sub(rhs[r], f.mul(factor, rhs[rank]));
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!f.is_zero(rhs[r])) throw WeightMismatchError("no lattice solution for the division step");
    std::vector<typename R::Elem> sol;
    sol.reserve(cols);
    for (std::size_t col = 0; col < cols; ++col)
        sol.push_back(pivot_of_col[col] >= 0 ? rhs[pivot_of_col[col]] : f.zero());
    return sol;
}

}  // namespace detail

// Solve f_a g' + g_b f' = h in quasi-homogeneous pieces, where f_a, g_b are
// coprime of weights a and b and h has weight a + b + k. The solution is the
// unique one whose g'-image is reduced (leading coefficients preferred zero).
template <class R>
std::pair<WeightedSeries<R>, WeightedSeries<R>> qh_bezout(const WeightedSeries<R>& f_a,
                                                          const WeightedSeries<R>& g_b,
                                                          const WeightedSeries<R>& h) {
    const R& f = f_a.field();
    const long n = f_a.wn(), m = f_a.wm();
    if (f_a.is_zero() || g_b.is_zero()) throw Error("qh_bezout with zero factor");
    if (!f_a.is_quasi_homogeneous() || !g_b.is_quasi_homogeneous() || !h.is_quasi_homogeneous())
        throw Error("qh_bezout needs quasi-homogeneous input");
    const long wa = f_a.min_weight(), wb = g_b.min_weight();
    if (h.is_zero()) {
        WeightedSeries<R> z(f, n, m, f_a.trunc());
        return {z, z};
    }
    const long wh = h.min_weight();
    const long k = wh - wa - wb;
    if (k < 0) throw WeightMismatchError("target weight below the product weight");

    // coprimality: no common monomial factor, no common root of the cores
    if (std::min(f_a.x_content(), g_b.x_content()) > 0 || std::min(f_a.y_content(), g_b.y_content()) > 0)
        throw NotCoprimeError();
    {
        UniPoly<R> uf = qh_image(f_a, wa), ug = qh_image(g_b, wb);
        while (uf.degree() > 0 && f.is_zero(uf.coeff(0))) uf = uf.divmod(UniPoly<R>::variable(f, "s")).first;
        while (ug.degree() > 0 && f.is_zero(ug.coeff(0))) ug = ug.divmod(UniPoly<R>::variable(f, "s")).first;
        if (gcd(uf, ug).degree() > 0) throw NotCoprimeError();
    }

    // lattices of the two unknowns and of the target
    auto lattice = [&](long w) {
        std::vector<std::pair<long, long>> pts;
        QHShape sh = qh_shape(w, n, m);
        for (long v = sh.e; v >= 0; --v) pts.push_back({sh.ex + m * (sh.e - v), sh.ey + n * v});
        return pts;  // ordered by descending image degree
    };
    auto gpts = lattice(wb + k);
    auto fpts = lattice(wa + k);
    auto hpts = lattice(wa + wb + k);

    std::map<std::pair<long, long>, std::size_t> hindex;
    for (std::size_t r = 0; r < hpts.size(); ++r) hindex.emplace(hpts[r], r);

    const std::size_t cols = gpts.size() + fpts.size();
    std::vector<std::vector<typename R::Elem>> mat(hpts.size(), std::vector<typename R::Elem>(cols, f.zero()));
    std::vector<typename R::Elem> rhs(hpts.size(), f.zero());
    for (const auto& [kk, v] : h.terms()) {
        auto it = hindex.find(kk);
        if (it == hindex.end()) throw Error("target term off the weight lattice");
        rhs[it->second] = v;
    }
    auto fill = [&](const WeightedSeries<R>& fixed, const std::vector<std::pair<long, long>>& pts,
                    std::size_t col0) {
        for (std::size_t c = 0; c < pts.size(); ++c)
            for (const auto& [kk, v] : fixed.terms()) {
                std::pair<long, long> target{kk.first + pts[c].first, kk.second + pts[c].second};
                auto it = hindex.find(target);
                if (it == hindex.end()) throw Error("product term off the weight lattice");
                mat[it->second][col0 + c] = f.add(mat[it->second][col0 + c], v);
            }
    };
    fill(f_a, gpts, 0);            // f_a * g'
    fill(g_b, fpts, gpts.size());  // g_b * f'

    auto sol = detail::solve_linear(f, mat, rhs);

    WeightedSeries<R> gp(f, n, m, f_a.trunc());
    WeightedSeries<R> fp(f, n, m, f_a.trunc());
    for (std::size_t c = 0; c < gpts.size(); ++c)
        if (!f.is_zero(sol[c])) gp.add_term(gpts[c].first, gpts[c].second, sol[c]);
    for (std::size_t c = 0; c < fpts.size(); ++c)
        if (!f.is_zero(sol[gpts.size() + c])) fp.add_term(fpts[c].first, fpts[c].second, sol[gpts.size() + c]);

    // Canonical normal form: the solution set is (f' + f_a w, g' - g_b w)
    // over quasi-homogeneous w of weight k. Reduce the image of g' by the
    // echelonized span of the images of g_b w, top degree first; the paired
    // f_a w keeps the identity intact.
    QHShape ksh = qh_shape(k, n, m);
    if (ksh.e >= 0) {
        struct KernelRow {
            UniPoly<R> gimg;
            WeightedSeries<R> gshift, fshift;
        };
        std::vector<KernelRow> rows;
        for (long v = 0; v <= ksh.e; ++v) {
            WeightedSeries<R> w(f, n, m, f_a.trunc());
            w.add_term(ksh.ex + m * (ksh.e - v), ksh.ey + n * v, f.one());
            WeightedSeries<R> gs = g_b * w;
            rows.push_back(KernelRow{qh_image(gs, wb + k), gs, f_a * w});
        }
        // echelonize by leading s-degree
        std::vector<KernelRow> echelon;
        for (auto& row : rows) {
            while (!row.gimg.is_zero()) {
                bool reduced = false;
                for (const auto& e2 : echelon)
                    if (e2.gimg.degree() == row.gimg.degree()) {
                        typename R::Elem c = f.div(row.gimg.lead(), e2.gimg.lead());
                        row.gimg = row.gimg - e2.gimg.scaled(c);
                        row.gshift = row.gshift - e2.gshift.scaled(c);
                        row.fshift = row.fshift - e2.fshift.scaled(c);
                        reduced = true;
                        break;
                    }
                if (!reduced) break;
            }
            if (!row.gimg.is_zero()) echelon.push_back(std::move(row));
        }
        std::sort(echelon.begin(), echelon.end(),
                  [](const KernelRow& a2, const KernelRow& b2) { return a2.gimg.degree() > b2.gimg.degree(); });
        UniPoly<R> gimg = qh_image(gp, wb + k);
        for (const auto& row : echelon) {
            int d = row.gimg.degree();
            if (f.is_zero(gimg.coeff(d))) continue;
            typename R::Elem c = f.div(gimg.coeff(d), row.gimg.lead());
            gimg = gimg - row.gimg.scaled(c);
            gp = gp - row.gshift.scaled(c);
            fp = fp + row.fshift.scaled(c);
        }
    }

    if (!(f_a * gp + g_b * fp == h)) throw Error("qh_bezout verification failed");
    return {fp, gp};
}

// Weighted Hensel lifting: F with initial form f_a g_b (coprime) splits as
// F = f g up to weighted degree N, with initial forms f_a and g_b.
template <class R>
std::pair<WeightedSeries<R>, WeightedSeries<R>> hensel_split(const WeightedSeries<R>& F,
                                                             const WeightedSeries<R>& f_a,
                                                             const WeightedSeries<R>& g_b, long N) {
    const long n = F.wn(), m = F.wm();
    if (f_a.is_zero() || g_b.is_zero()) throw Error("hensel_split with zero initial factor");
    const long wa = f_a.min_weight(), wb = g_b.min_weight();
    if (N < wa + wb) throw PrecisionTooLowError("truncation below the initial weight");
    if (!(F.initial_form() == f_a * g_b)) throw Error("initial form does not factor as f_a * g_b");

    WeightedSeries<R> lifted_f = f_a.reweighted(n, m, N);
    WeightedSeries<R> lifted_g = g_b.reweighted(n, m, N);
    WeightedSeries<R> residual = F.reweighted(n, m, N) - lifted_f * lifted_g;

    while (!residual.is_zero()) {
        long w = residual.min_weight();
        long k = w - wa - wb;
        if (k <= 0) throw Error("residual at or below the initial weight");
        WeightedSeries<R> target = residual.weight_component(w);
        auto [df, dg] = qh_bezout(f_a.reweighted(n, m, N), g_b.reweighted(n, m, N), target);
        lifted_f = lifted_f + df;
        lifted_g = lifted_g + dg;
        // F - (f + df)(g + dg) = residual - f_a dg - g_b df - (higher cross terms)
        residual = residual - (lifted_f * dg + df * lifted_g - df * dg);
    }
    if (!(lifted_f * lifted_g == F.reweighted(n, m, N))) throw Error("hensel product check failed");
    return {lifted_f, lifted_g};
}

// ---------------------------------------------------------------------------
// edge factorization of a special pencil over K(T)
// ---------------------------------------------------------------------------

template <class F>
using TSeries = WeightedSeries<FractionField<F>>;

template <class F>
struct EdgeFactor {
    Edge edge;
    TSeries<F> factor;  // initial form q_l(x^m, y^n), y-degree n * d
};

template <class F>
struct EdgeFactorization {
    std::vector<EdgeFactor<F>> factors;
    TSeries<F> unit;        // cofactor with unit constant term, in weight (1,1)
    long complete_totdeg;   // products are certified up to this total degree
};

// Embed the pencil into a weighted view over K(T).
template <class F>
TSeries<F> pencil_to_series(const PencilPoly<F>& p, const FractionField<F>& ff, long n, long m, long trunc) {
    TSeries<F> r(ff, n, m, trunc);
    UniPoly<F> tvar = UniPoly<F>::variable(ff.base(), ff.var());
    for (const auto& [k, c] : p.terms()) {
        UniPoly<F> num = UniPoly<F>::constant(ff.base(), c.a, ff.var()) + tvar.scaled(c.b);
        r.add_term(k.first, k.second, ff.make(num, UniPoly<F>::one(ff.base(), ff.var())));
    }
    return r;
}

// One Hensel factor per edge of the polygon, steepest first: the factor of
// edge l carries initial form q_l(x^m, y^n); the running cofactor keeps the
// remaining edges and ends as a unit. prec controls how many weighted orders
// beyond each initial form are computed.
template <class F>
EdgeFactorization<F> edge_factorization(const SpecialPencil<F>& s, long prec) {
    if (prec < 1) throw PrecisionTooLowError("precision must be positive");
    FractionField<F> ff(s.P.field(), "T");
    EdgeFactorization<F> out{{}, TSeries<F>(ff, 1, 1, 0), 0};

    // current remainder, kept as a plain (1,1)-weighted container with a
    // conservative completeness bound in total degree
    long complete = s.P.total_degree() + prec;
    TSeries<F> rem = pencil_to_series(s.P, ff, 1, 1, complete);

    while (true) {
        if (rem.is_zero()) throw Error("edge factorization lost the remainder");
        std::vector<std::pair<long, long>> support;
        for (const auto& [k, v] : rem.terms()) support.push_back(k);
        auto hull = hull_vertices_of_points(support);
        if (hull.size() < 2) break;
        Edge e = edge_between(hull[0], hull[1]);  // steepest edge
        e.kind = EdgeKind::Ordinary;

        long trunc_e = e.omega + prec * (e.n + e.m);
        TSeries<F> view = rem.reweighted(e.n, e.m, trunc_e);
        TSeries<F> init = view.initial_form();
        // split off the pure edge form q_l(x^m, y^n); the monomial x^u y^v
        // seeds the cofactor
        TSeries<F> f_a = init.divided_by_monomial(e.u, e.v);
        TSeries<F> g_b(ff, e.n, e.m, trunc_e);
        g_b.add_term(e.u, e.v, ff.one());
        auto [fac, cof] = hensel_split(view, f_a, g_b, trunc_e);
        out.factors.push_back(EdgeFactor<F>{e, fac});

        long complete_here = trunc_e / std::max(e.n, e.m);
        complete = std::min(complete, complete_here);
        rem = cof.reweighted(1, 1, complete);
    }
    // the final remainder must be a unit
    if (ff.is_zero(rem.coeff(0, 0))) throw Error("edge factorization cofactor is not a unit");
    out.unit = rem;
    out.complete_totdeg = complete;
    return out;
}

}  // namespace dicrit

#endif
