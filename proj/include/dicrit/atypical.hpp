// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_ATYPICAL_HPP
#define DICRIT_ATYPICAL_HPP

#include <string>
#include <vector>

#include "dicrit/resolver.hpp"

namespace dicrit {

// Atypical-value data of one dicritical: the critical-value polynomial
// A_E (squarefree, monic, in t), the base value t0 = q_E(0), and the
// squarefree polynomial vanishing exactly on the atypical set over the
// closure: sqf(A_E * (t - t0)) when the v-ratio exceeds 1, A_E otherwise.
// M_bound bounds the count: #distinct nonzero roots of q_E' plus one.
template <class F>
struct DicriticalAnalysis {
    int record_id = 0;
    bool separable = true;
    UniPoly<F> A_E_poly;
    UniPoly<F> atypical_poly;
    std::vector<typename F::Elem> rational_atypical;
    bool includes_t0 = false;
    long M_bound = 0;
    typename F::Elem t0;
    long d_E = 0;
    long n_E = 0;
    bool residual_flag = false;
    std::string warning;  // nonempty when inseparable
};

template <class F>
DicriticalAnalysis<F> dicritical_analysis(const DicriticalRecord<F>& rec) {
    const F& f = rec.q_E.field();
    DicriticalAnalysis<F> a{rec.id,
                            true,
                            UniPoly<F>::one(f, "t"),
                            UniPoly<F>::one(f, "t"),
                            {},
                            false,
                            0,
                            rec.t0,
                            rec.d_E,
                            rec.n_E,
                            rec.residual_flag,
                            ""};

    UniPoly<F> qp = rec.q_E.derivative();
    if (qp.is_zero()) {
        a.separable = false;
        a.warning = "q_E' vanishes identically; atypical values are not determined by q_E";
        return a;
    }
    a.A_E_poly = critical_value_poly(rec.q_E);
    a.atypical_poly = a.A_E_poly;
    if (rec.n_E > 1) {
        UniPoly<F> lin(f, {f.neg(rec.t0), f.one()}, "t");
        UniPoly<F> prod = a.A_E_poly * lin;
        a.atypical_poly = monic(squarefree_part(prod)).with_var("t");
    }
    a.includes_t0 = f.is_zero(a.atypical_poly.eval(rec.t0));
    for (const auto& [r, mult] : rational_roots(a.atypical_poly).roots) a.rational_atypical.push_back(r);

    // distinct nonzero roots of q_E' over the closure, plus one
    if (qp.degree() == 0) {
        a.M_bound = 1;
    } else {
        UniPoly<F> sqf = squarefree_part(qp);
        long nonzero = sqf.degree() - (f.is_zero(sqf.eval(f.zero())) ? 1 : 0);
        a.M_bound = nonzero + 1;
    }
    return a;
}

// Pencil-level aggregation: unions across dicriticals (squarefree lcm of the
// atypical polynomials), the branch count nu_gen = sum d_E, and the bound
// sum M_bound of separable dicriticals.
template <class F>
struct PencilReport {
    std::vector<DicriticalAnalysis<F>> analyses;
    long nu_gen = 0;
    long bound_sum = 0;
    long gw_bound_gen = 0;  // the branch-count arm of the min(nu_gen, nu_min + 1) bound
    UniPoly<F> atypical_union_poly;
    std::vector<typename F::Elem> rational_atypical_union;
    long atypical_count = 0;  // distinct over the closure
    bool any_inseparable = false;
    bool residual_present = false;
    std::vector<std::string> warnings;

    explicit PencilReport(F f) : atypical_union_poly(UniPoly<F>::one(std::move(f), "t")) {}
};

template <class F>
PencilReport<F> aggregate_report(const ResolutionTree<F>& tree) {
    F f = [&] {
        if (!tree.nodes.empty()) return tree.nodes.front().pencil.P.field();
        throw Error("empty resolution tree");
    }();
    PencilReport<F> rep(f);
    rep.residual_present = tree.has_residuals();
    for (const auto& res : tree.residuals)
        rep.warnings.push_back("node " + std::to_string(res.node) +
                               ": edge factor with no roots in the ground field: " + res.residual.to_string());

    for (const auto& rec : tree.dicriticals) {
        DicriticalAnalysis<F> a = dicritical_analysis(rec);
        rep.nu_gen += rec.d_E;
        if (a.separable) {
            rep.bound_sum += a.M_bound;
            UniPoly<F> g = gcd(rep.atypical_union_poly, a.atypical_poly);
            rep.atypical_union_poly = rep.atypical_union_poly * (a.atypical_poly / g);
        } else {
            rep.any_inseparable = true;
            rep.warnings.push_back("dicritical " + std::to_string(a.record_id) + ": " + a.warning);
        }
        rep.analyses.push_back(std::move(a));
    }
    rep.gw_bound_gen = rep.nu_gen;
    rep.atypical_union_poly = monic(rep.atypical_union_poly).with_var("t");
    rep.atypical_count = rep.atypical_union_poly.degree();
    for (const auto& [r, mult] : rational_roots(rep.atypical_union_poly).roots)
        rep.rational_atypical_union.push_back(r);

    // coincidence diagnostics: record when the atypical set is strictly
    // smaller than the critical-point count suggests
    for (std::size_t i = 0; i < rep.analyses.size(); ++i) {
        const auto& a = rep.analyses[i];
        if (!a.separable) continue;
        UniPoly<F> qp = tree.dicriticals[i].q_E.derivative();
        if (qp.degree() <= 0) continue;
        long points = squarefree_part(qp).degree();
        long values = a.A_E_poly.degree();
        if (values < points)
            rep.warnings.push_back("dicritical " + std::to_string(a.record_id) +
                                   ": distinct critical points of q_E share critical values (" +
                                   std::to_string(points) + " points, " + std::to_string(values) + " values)");
    }
    if (!tree.dicriticals.empty() && !rep.any_inseparable && !rep.residual_present) {
        if (rep.atypical_count > rep.bound_sum) throw Error("atypical count exceeds the M_bound bound");
        if (rep.atypical_count > rep.nu_gen) throw Error("atypical count exceeds nu_gen");
    }
    return rep;
}

// Sharpness flags per dicritical plus pairwise disjointness of the atypical
// sets across dicriticals.
template <class F>
struct ExtremalityFlags {
    struct PerDicritical {
        int record_id;
        bool bamboo;                    // n_E > 1
        bool t0_not_critical;           // t0 is not in A_E
        bool qprime_squarefree;         // q_E' has simple roots
        bool critical_values_distinct;  // distinct critical points, distinct values
    };
    std::vector<PerDicritical> per_dicritical;
    bool pairwise_disjoint = true;
    bool all() const {
        for (const auto& d : per_dicritical)
            if (!(d.bamboo && d.t0_not_critical && d.qprime_squarefree && d.critical_values_distinct))
                return false;
        return pairwise_disjoint;
    }
};

template <class F>
ExtremalityFlags<F> extremality_flags(const ResolutionTree<F>& tree, const PencilReport<F>& rep) {
    if (rep.any_inseparable) throw InseparablePresentError();
    ExtremalityFlags<F> out;
    for (std::size_t i = 0; i < rep.analyses.size(); ++i) {
        const auto& a = rep.analyses[i];
        const auto& rec = tree.dicriticals[i];
        const F& f = rec.q_E.field();
        typename ExtremalityFlags<F>::PerDicritical d{a.record_id, a.n_E > 1, true, true, true};
        d.t0_not_critical = !f.is_zero(a.A_E_poly.eval(a.t0));
        UniPoly<F> qp = rec.q_E.derivative();
        if (qp.degree() > 0) {
            UniPoly<F> sqf = squarefree_part(qp);
            d.qprime_squarefree = (sqf.degree() == qp.degree());
            d.critical_values_distinct = (a.A_E_poly.degree() == sqf.degree());
        }
        out.per_dicritical.push_back(d);
    }
    for (std::size_t i = 0; i < rep.analyses.size(); ++i)
        for (std::size_t j = i + 1; j < rep.analyses.size(); ++j)
            if (gcd(rep.analyses[i].atypical_poly, rep.analyses[j].atypical_poly).degree() > 0)
                out.pairwise_disjoint = false;
    return out;
}

}  // namespace dicrit

#endif
