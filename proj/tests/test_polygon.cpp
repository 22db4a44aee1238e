// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dicrit/parse.hpp"
#include "dicrit/polygon.hpp"
#include "dicrit/printer.hpp"

using namespace dicrit;

namespace {

const RationalField Q;

// the pencil of the degree-11 polynomial at its x-directional point at
// infinity; z is the special variable
const char* kPx = "(x^3 - z^5)^2 - x^6 + x*(x - z^2)^5 + 5*x*z^7*(x - 3/4*z^2) - T*z^11";

PencilPoly<RationalField> parse_px() { return parse_poly(Q, kPx, ParseVars{'z', 'x'}); }

std::mt19937 rng(7);

}  // namespace

TEST_CASE("newton_polygon: one edge (0,6)-(10,0) for p_x") {
    auto p = parse_px();
    auto edges = newton_polygon(p);
    REQUIRE(edges.size() == 1);
    const Edge& e = edges[0];
    CHECK(e.i1 == 0);
    CHECK(e.j1 == 6);
    CHECK(e.i2 == 10);
    CHECK(e.j2 == 0);
    CHECK(e.n == 3);
    CHECK(e.m == 5);
    CHECK(e.d == 2);
    CHECK(e.omega == 30);
    CHECK(e.kind == EdgeKind::Ordinary);

    auto sup = edge_data(p, e);
    CHECK(sup.q0 == UniPoly<RationalField>(Q, {mpq_class(1), mpq_class(-2), mpq_class(1)}, "s"));
    CHECK(Q.is_zero(sup.gamma));
}

TEST_CASE("newton_polygon: dicritical edge of y^4 + y^2 x^3 + y x^7 + x^12 - T x^6") {
    auto p = parse_poly(Q, "y^4 + y^2*x^3 + y*x^7 + x^12 - T*x^6");
    auto edges = newton_polygon(p);
    REQUIRE(edges.size() == 1);
    const Edge& e = edges[0];
    CHECK(e.i1 == 0);
    CHECK(e.j1 == 4);
    CHECK(e.i2 == 6);
    CHECK(e.j2 == 0);
    CHECK(e.n == 2);
    CHECK(e.m == 3);
    CHECK(e.omega == 12);
    CHECK(e.d == 2);
    CHECK(e.kind == EdgeKind::Dicritical);

    auto sup = edge_data(p, e);
    UniPoly<RationalField> expect(Q, {mpq_class(0), mpq_class(1), mpq_class(1)}, "s");  // s^2 + s
    CHECK(sup.q0 == expect);
    CHECK(sup.gamma == mpq_class(1));
}

TEST_CASE("newton_polygon: y - T x") {
    auto p = parse_poly(Q, "y - T*x");
    auto edges = newton_polygon(p);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].i1 == 0);
    CHECK(edges[0].j1 == 1);
    CHECK(edges[0].i2 == 1);
    CHECK(edges[0].j2 == 0);
    CHECK(edges[0].n == 1);
    CHECK(edges[0].m == 1);
    CHECK(edges[0].kind == EdgeKind::Dicritical);
    auto sup = edge_data(p, edges[0]);
    CHECK(sup.q0 == UniPoly<RationalField>(Q, {mpq_class(0), mpq_class(1)}, "s"));
    CHECK(sup.gamma == mpq_class(1));
}

TEST_CASE("classify: absorbable edge of the (y - z^2)^5 pencil") {
    auto p = parse_poly(Q,
                        "(y - z^2)^5 + y*z^10 - 2*y^3*z^5 + 5*y^2*z^7 - 15/4*y*z^9 - T*z^11",
                        ParseVars{'z', 'y'});
    auto edges = newton_polygon(p);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].i1 == 0);
    CHECK(edges[0].j1 == 5);
    CHECK(edges[0].i2 == 10);
    CHECK(edges[0].j2 == 0);
    CHECK(edges[0].n == 1);
    CHECK(edges[0].m == 2);
    CHECK(edges[0].d == 5);
    CHECK(edges[0].kind == EdgeKind::Absorbable);
}

TEST_CASE("two-edge polygon orders edges by decreasing j with decreasing steepness") {
    // (y^2 - x)(y - x^2) - T x^3 has hull (0,3) - (1,1) - (3,0)
    auto p = parse_poly(Q, "(y^2 - x)*(y - x^2) - T*x^3");
    auto edges = newton_polygon(p);
    REQUIRE(edges.size() == 2);
    CHECK(edges[0].i1 == 0);
    CHECK(edges[0].j1 == 3);
    CHECK(edges[0].i2 == 1);
    CHECK(edges[0].j2 == 1);
    CHECK(edges[0].n == 2);
    CHECK(edges[0].m == 1);
    CHECK(edges[1].i1 == 1);
    CHECK(edges[1].j1 == 1);
    CHECK(edges[1].i2 == 3);
    CHECK(edges[1].j2 == 0);
    CHECK(edges[1].n == 1);
    CHECK(edges[1].m == 2);
    CHECK(edges[1].kind == EdgeKind::Dicritical);
    // strictly decreasing steepness n/m
    CHECK(edges[0].n * edges[1].m > edges[1].n * edges[0].m);
}

TEST_CASE("edge terms plus interior support reconstruct the pencil") {
    auto p = parse_px();
    auto edges = newton_polygon(p);
    PencilPoly<RationalField> rebuilt(Q);
    for (const auto& [k, c] : p.terms()) {
        bool on_edge = false;
        for (const Edge& e : edges)
            if (e.n * k.first + e.m * k.second == e.omega && k.first >= e.i1 && k.first <= e.i2) on_edge = true;
        if (!on_edge) rebuilt.add_term(k.first, k.second, c.a, c.b);
    }
    for (const Edge& e : edges)
        for (const auto& [k, c] : p.terms())
            if (e.n * k.first + e.m * k.second == e.omega && k.first >= e.i1 && k.first <= e.i2) {
                // shared endpoints would be double-counted; the single-edge case is safe
                rebuilt.add_term(k.first, k.second, c.a, c.b);
            }
    CHECK(rebuilt == p);
}

TEST_CASE("polygon is invariant under multiplication by a unit") {
    auto p = parse_px();
    auto base_hull = newton_hull_vertices(p);
    auto base = newton_polygon(p);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int it = 0; it < 25; ++it) {
        PencilPoly<RationalField> unit = PencilPoly<RationalField>::one(Q);
        for (int t = 0; t < 3; ++t) {
            long ci = coef(rng), cj = coef(rng), cc = coef(rng);
            if (cc == 0) continue;
            unit.add_term(std::abs(ci), std::abs(cj), mpq_class(cc), mpq_class(0));
        }
        if (Q.is_zero(unit.coeff(0, 0).a)) continue;
        auto prod = p * unit;
        CHECK(newton_hull_vertices(prod) == base_hull);
        auto edges = newton_polygon(prod);
        REQUIRE(edges.size() == base.size());
        for (std::size_t k = 0; k < edges.size(); ++k) {
            CHECK(edges[k].n == base[k].n);
            CHECK(edges[k].m == base[k].m);
            CHECK(edges[k].d == base[k].d);
            CHECK(edges[k].kind == base[k].kind);
        }
    }
}

TEST_CASE("at most one dicritical edge per polygon") {
    for (const char* src :
         {"y - T*x", "y^4 + y^2*x^3 + y*x^7 + x^12 - T*x^6", "(y^2 - x)*(y - x^2) - T*x^3",
          "y^3 + y^2*x - x^4 - T*x^3", "y^3 + y*x^2 - x^4 - T*x^3"}) {
        auto p = parse_poly(Q, src);
        int dicritical = 0;
        for (const Edge& e : newton_polygon(p))
            if (e.kind == EdgeKind::Dicritical) ++dicritical;
        CHECK(dicritical <= 1);
    }
}

TEST_CASE("pencil printing round-trips through the parser") {
    for (const char* src :
         {"y^4 + y^2*x^3 + y*x^7 + x^12 - T*x^6", "(y^2 - x)*(y - x^2) - T*x^3", "y - 5/8*x + T*x^2"}) {
        auto p = parse_poly(Q, src);
        auto printed = pencil_to_string(p);
        CHECK(parse_poly(Q, printed) == p);
    }
    auto px = parse_px();
    CHECK(parse_poly(Q, pencil_to_string(px, 'z', 'x'), ParseVars{'z', 'x'}) == px);
}
