// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_POLYGON_HPP
#define DICRIT_POLYGON_HPP

#include <numeric>
#include <vector>

#include "dicrit/algebra.hpp"
#include "dicrit/pencilpoly.hpp"

namespace dicrit {

enum class EdgeKind { Dicritical, Ordinary, Absorbable };

inline const char* edge_kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::Dicritical: return "dicritical";
        case EdgeKind::Ordinary: return "ordinary";
        case EdgeKind::Absorbable: return "absorbable";
    }
    return "?";
}

// One compact face of the Newton polygon, with endpoints ordered j1 > j2.
// The edge lies on the line n*i + m*j = omega with gcd(n, m) = 1;
// d is the lattice length, u and v the minimal exponents on the edge.
struct Edge {
    long i1, j1, i2, j2;
    long n, m;     // v-ratio and h-ratio
    long omega;    // weight of the edge line
    long d;        // lattice length
    long u, v;     // u = i1, v = j2
    EdgeKind kind = EdgeKind::Ordinary;
};

// Edge support data: the T-free edge polynomial q0 in s (coefficient of
// s^((j - v)/n) taken from the K-part at each edge lattice point) and gamma,
// the coefficient of -T at the (c, 0) vertex (zero off dicritical edges).
template <class F>
struct EdgeSupport {
    UniPoly<F> q0;
    typename F::Elem gamma;
};

// Hull vertices of points + N^2, from the top-left vertex down to the
// bottom-right one; the input must be sorted lexicographically (i, then j).
// A single vertex means the polygon has no compact face.
inline std::vector<std::pair<long, long>> hull_vertices_of_points(const std::vector<std::pair<long, long>>& pts) {
    if (pts.empty()) throw Error("Newton polygon of zero polynomial");
    // Pareto-minimal staircase: increasing i, strictly decreasing j
    std::vector<std::pair<long, long>> mins;
    long best_j = -1, i_cur = -1;
    for (const auto& [i, j] : pts) {
        if (i == i_cur) continue;  // first entry per i carries its minimal j
        i_cur = i;
        if (best_j < 0 || j < best_j) {
            mins.push_back({i, j});
            best_j = j;
        }
    }
    // monotone chain: keep the convex lower-left boundary
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : mins) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // drop b when it lies on or above the segment from a to pt
            long cross = (b.first - a.first) * (pt.second - a.second) - (pt.first - a.first) * (b.second - a.second);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    return hull;
}

// Edge descriptor for a consecutive pair of hull vertices.
inline Edge edge_between(std::pair<long, long> top, std::pair<long, long> bottom) {
    Edge e;
    e.i1 = top.first;
    e.j1 = top.second;
    e.i2 = bottom.first;
    e.j2 = bottom.second;
    e.d = std::gcd(e.j1 - e.j2, e.i2 - e.i1);
    e.n = (e.j1 - e.j2) / e.d;
    e.m = (e.i2 - e.i1) / e.d;
    e.omega = e.n * e.i1 + e.m * e.j1;
    e.u = e.i1;
    e.v = e.j2;
    return e;
}

template <class F>
std::vector<std::pair<long, long>> newton_hull_vertices(const PencilPoly<F>& p) {
    if (p.is_zero()) throw Error("Newton polygon of zero polynomial");
    std::vector<std::pair<long, long>> pts;
    pts.reserve(p.terms().size());
    for (const auto& [k, c] : p.terms()) pts.push_back(k);  // map order: i asc, then j asc
    return hull_vertices_of_points(pts);
}

template <class F>
EdgeKind classify_edge(const PencilPoly<F>& p, const Edge& e);

// Compact faces, ordered by decreasing j (steepest first); empty when the
// support has a single hull corner.
template <class F>
std::vector<Edge> newton_polygon(const PencilPoly<F>& p) {
    auto hull = newton_hull_vertices(p);
    std::vector<Edge> edges;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        Edge e = edge_between(hull[k], hull[k + 1]);
        e.kind = classify_edge(p, e);
        edges.push_back(e);
    }
    return edges;
}

template <class F>
EdgeSupport<F> edge_data(const PencilPoly<F>& p, const Edge& e) {
    const F& f = p.field();
    UniPoly<F> q0(f, "s");
    typename F::Elem gamma = f.zero();
    for (const auto& [k, c] : p.terms()) {
        if (e.n * k.first + e.m * k.second != e.omega) continue;
        if (k.first < e.i1 || k.first > e.i2) continue;
        long rel = k.second - e.v;
        if (rel % e.n != 0) throw Error("edge lattice point off the (m, n) grid");
        if (!f.is_zero(c.a)) q0.set_coeff(static_cast<int>(rel / e.n), f.add(q0.coeff(static_cast<int>(rel / e.n)), c.a));
        if (!f.is_zero(c.b)) {
            if (k.second != 0) throw Error("T-dependence off the axis vertex of an edge");
            gamma = f.neg(c.b);
        }
    }
    return {q0, gamma};
}

// Dicritical: the low endpoint sits on the j = 0 axis and its coefficient
// depends on T. Absorbable: ordinary full-height edge with n = 1 whose
// support is a perfect d-th power of (s - A) for a single rational root A;
// the translation y -> y + A x^m then removes the edge. Everything else is
// Ordinary.
template <class F>
EdgeKind classify_edge(const PencilPoly<F>& p, const Edge& e) {
    const F& f = p.field();
    if (e.j2 == 0 && !f.is_zero(p.coeff(e.i2, 0).b)) return EdgeKind::Dicritical;
    if (e.n != 1 || e.v != 0 || e.u != 0) return EdgeKind::Ordinary;
    if (e.j1 != p.y_order_on_axis()) return EdgeKind::Ordinary;
    EdgeSupport<F> sup = edge_data(p, e);
    if (sup.q0.degree() != e.d) return EdgeKind::Ordinary;
    auto roots = rational_roots(sup.q0);
    if (roots.roots.size() == 1 && roots.roots[0].second == e.d && roots.residual.degree() == 0)
        return EdgeKind::Absorbable;
    return EdgeKind::Ordinary;
}

}  // namespace dicrit

#endif
