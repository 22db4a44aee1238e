// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_INFINITY_HPP
#define DICRIT_INFINITY_HPP

#include <string>
#include <vector>

#include "dicrit/atypical.hpp"

namespace dicrit {

// A base point of the pencil f = t at the line at infinity: [0:1:0] or
// [1:lambda:0], with its multiplicity as a root of the top form.
template <class F>
struct BasePoint {
    bool at_y_axis = false;           // [0:1:0]
    typename F::Elem lambda;          // [1:lambda:0] otherwise
    long multiplicity = 0;

    std::string label(const F& f) const {
        return at_y_axis ? std::string("[0:1:0]") : "[1:" + f.str(lambda) + ":0]";
    }
};

template <class F>
struct InfinityJob {
    PencilPoly<F> f;  // T-free
    long degree = 0;
    PencilPoly<F> top_form;
    std::vector<BasePoint<F>> base_points;
};

// Factor the top homogeneous form into linear factors over K; a factor of
// higher degree has no K-rational point and raises NonSplitTopFormError.
template <class F>
InfinityJob<F> top_form_points(const PencilPoly<F>& f) {
    const F& field = f.field();
    if (!f.is_t_free()) throw Error("polynomial at infinity must not involve T");
    if (f.is_zero() || f.total_degree() == 0) throw Error("constant polynomial has no structure at infinity");
    long d = f.total_degree();
    PencilPoly<F> top(field);
    for (const auto& [k, c] : f.terms())
        if (k.first + k.second == d) top.add_term(k.first, k.second, c.a, c.b);

    InfinityJob<F> job{f, d, top, {}};
    // top(x, y) = c x^a * prod (y - lambda x): roots of top(1, y)
    long xonly = top.x_content();
    UniPoly<F> ty(field, "y");
    for (const auto& [k, c] : top.terms()) ty.set_coeff(static_cast<int>(k.second), c.a);
    // ty = top(1, y); the x-power at infinity corresponds to [0:1:0]
    if (d - ty.degree() > 0) job.base_points.push_back(BasePoint<F>{true, field.zero(), d - ty.degree()});
    auto roots = rational_roots(ty);
    if (roots.residual.degree() > 0) throw NonSplitTopFormError(roots.residual.to_string());
    for (const auto& [lambda, mult] : roots.roots)
        job.base_points.push_back(BasePoint<F>{false, lambda, mult});
    (void)xonly;
    return job;
}

// Localize at one base point: move it to [1:0:0] by a shear (or the x/y
// swap), then p(y, z) = z^D f(1/z, y/z) with the pencil p - T z^D.
template <class F>
SpecialPencil<F> localize_at_point(const InfinityJob<F>& job, const BasePoint<F>& pt) {
    const F& field = job.f.field();
    PencilPoly<F> g = job.f;
    if (pt.at_y_axis) {
        g = g.swapped_xy();
    } else if (!field.is_zero(pt.lambda)) {
        // x' = x, y' = y - lambda x, so substitute y = y' + lambda x
        g = g.shift_y(pt.lambda, 1);
    }
    // p(y, z) = z^D g(1/z, y/z): the term x^i y^j picks up z^(D - i - j)
    PencilPoly<F> p(field);
    for (const auto& [k, c] : g.terms()) p.add_term(job.degree - k.first - k.second, k.second, c.a, field.zero());
    SpecialPencil<F> s =
        make_pencil(p, job.degree, PencilPoly<F>::one(field));
    if (s.y_order != pt.multiplicity) throw Error("localized y-order differs from the base point multiplicity");
    return s;
}

template <class F>
struct PointReport {
    BasePoint<F> point;
    ResolutionTree<F> tree;
    PencilReport<F> report;
};

template <class F>
struct InfinityReport {
    InfinityJob<F> job;
    std::vector<PointReport<F>> points;
    long nu_inf_gen = 0;
    long bound_sum = 0;
    UniPoly<F> atypical_union_poly;
    std::vector<typename F::Elem> rational_atypical;
    long atypical_count = 0;
    bool extremal = false;  // bound attained with all sharpness conditions
    bool any_inseparable = false;
    bool residual_present = false;
    std::vector<std::string> warnings;
};

// Resolve the special pencil at every base point and aggregate the local
// reports into the atypical values at infinity.
template <class F>
InfinityReport<F> infinity_report(const PencilPoly<F>& f, const ResolveOptions& opts = {}) {
    const F& field = f.field();
    InfinityJob<F> job = top_form_points(f);
    InfinityReport<F> rep{job, {}, 0, 0, UniPoly<F>::one(field, "t"), {}, 0, false, false, false, {}};

    bool flags_all = true;
    for (const BasePoint<F>& pt : job.base_points) {
        SpecialPencil<F> local = localize_at_point(job, pt);
        ResolutionTree<F> tree = resolve(local, opts);
        PencilReport<F> prep = aggregate_report(tree);
        rep.nu_inf_gen += prep.nu_gen;
        rep.bound_sum += prep.bound_sum;
        rep.any_inseparable = rep.any_inseparable || prep.any_inseparable;
        rep.residual_present = rep.residual_present || prep.residual_present;
        for (const auto& w : prep.warnings) rep.warnings.push_back(pt.label(field) + ": " + w);
        UniPoly<F> g = gcd(rep.atypical_union_poly, prep.atypical_union_poly);
        if (g.degree() > 0) flags_all = false;  // atypical sets meet across points
        rep.atypical_union_poly = rep.atypical_union_poly * (prep.atypical_union_poly / g);
        if (!prep.any_inseparable) {
            auto flags = extremality_flags(tree, prep);
            if (!flags.all()) flags_all = false;
        } else {
            flags_all = false;
        }
        rep.points.push_back(PointReport<F>{pt, std::move(tree), std::move(prep)});
    }
    rep.atypical_union_poly = monic(rep.atypical_union_poly).with_var("t");
    rep.atypical_count = rep.atypical_union_poly.degree();
    for (const auto& [r, m] : rational_roots(rep.atypical_union_poly).roots) rep.rational_atypical.push_back(r);
    rep.extremal = flags_all && !rep.any_inseparable && !rep.residual_present &&
                   rep.atypical_count == rep.nu_inf_gen;
    return rep;
}

// The family reaching the branch-count bound: f = (y+1)(x q(xy) + Q(xy))
// with Q(t) = (t+1)^(2d+1) and q = h^2, where h is monic of degree d and its
// lower coefficients are forced, top-down, by deg(Q - t q) <= d.
template <class F>
PencilPoly<F> extremal_family(const F& field, long d) {
    if (field.characteristic() != 0) throw CharacteristicObstructionError();
    if (d < 1) throw Error("family parameter must be positive");
    UniPoly<F> t = UniPoly<F>::variable(field, "t");
    UniPoly<F> one = UniPoly<F>::one(field, "t");
    UniPoly<F> Qpoly = (t + one).pow(2 * d + 1);

    UniPoly<F> h = UniPoly<F>::monomial(field, field.one(), static_cast<int>(d), "t");
    for (long r = 1; r <= d; ++r) {
        // kill the coefficient of t^(2d+1-r) in Q - t h^2, which is linear in
        // the unknown coefficient c_(d-r) with slope 2 (h is monic)
        UniPoly<F> rem = Qpoly - t * (h * h);
        typename F::Elem bad = rem.coeff(static_cast<int>(2 * d + 1 - r));
        h.set_coeff(static_cast<int>(d - r), field.div(bad, field.from_long(2)));
    }
    UniPoly<F> q = h * h;
    UniPoly<F> check = Qpoly - t * q;
    if (check.degree() > d) throw Error("family condition deg(Q - t q) <= d failed");

    // assemble f = (y+1)(x q(xy) + Q(xy))
    const F& f = field;
    PencilPoly<F> xy = PencilPoly<F>::monomial(f, f.one(), 1, 1);
    auto eval_at_xy = [&](const UniPoly<F>& u) {
        PencilPoly<F> acc = PencilPoly<F>::zero(f);
        for (int i = 0; i <= u.degree(); ++i)
            if (!f.is_zero(u.coeff(i))) acc = acc + xy.pow(i).scaled(u.coeff(i));
        return acc;
    };
    PencilPoly<F> x = PencilPoly<F>::monomial(f, f.one(), 1, 0);
    PencilPoly<F> yp1 = PencilPoly<F>::monomial(f, f.one(), 0, 1) + PencilPoly<F>::one(f);
    return yp1 * (x * eval_at_xy(q) + eval_at_xy(Qpoly));
}

}  // namespace dicrit

#endif
