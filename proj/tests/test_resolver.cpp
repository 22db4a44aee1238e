// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dicrit/parse.hpp"
#include "dicrit/printer.hpp"
#include "dicrit/resolver.hpp"

using namespace dicrit;

namespace {

const RationalField Q;

const char* kPx = "(x^3 - z^5)^2 - x^6 + x*(x - z^2)^5 + 5*x*z^7*(x - 3/4*z^2) - T*z^11";

// localization of the degree-10 polynomial at its second point at infinity
const char* kFx =
    "-25/4*z^4*x^6 - 17/4*z^3*x^6 + 4*z^2*x^6 - 4*x^6*z - 12*z^3*x^4 + 6*x^4*z^2 - 71/4*z^6*x^4"
    " + 4*z^5*x^4 + 75/4*z^4*x^4 - 25/2*z^8*x^2 + 75/4*z^7*x^2 + 59/4*z^6*x^2 - 99/4*z^5*x^2"
    " + 12*x^2*z^4 - 4*x^2*z^3 + z^4 - 4*z^5 + 41/4*z^6 - 25/2*z^7 + 25/4*z^9 + x^8 - T*z^10";

SpecialPencil<RationalField> pencil(const char* src, char xv = 'x', char yv = 'y') {
    return pencil_from_poly(parse_poly(Q, src, ParseVars{xv, yv}));
}

}  // namespace

TEST_CASE("resolve p_x: toric (n=3), absorb, one dicritical of degree 1 and v-ratio 2") {
    auto tree = resolve(pencil(kPx, 'z', 'x'));
    REQUIRE(tree.nodes.size() == 3);
    CHECK(tree.nodes[0].step.type == StepType::Root);
    CHECK(tree.nodes[1].step.type == StepType::Toric);
    CHECK(tree.nodes[1].step.toric->edge.n == 3);
    CHECK(tree.nodes[1].step.toric->alpha == mpq_class(1));
    CHECK(tree.nodes[2].step.type == StepType::Absorb);
    REQUIRE(tree.dicriticals.size() == 1);
    const auto& rec = tree.dicriticals[0];
    CHECK(rec.d_E == 1);
    CHECK(rec.n_E == 2);
    CHECK(rec.m_E == 3);
    CHECK(rec.t0 == Q.from_ratio(-5, 8));
    CHECK(rec.ratio_chain == std::vector<long>{3});
    CHECK(rec.h == 2);
    CHECK(!rec.residual_flag);
    CHECK(tree.residuals.empty());

    auto ident = degree_identity(tree);
    CHECK(ident.lhs == 6);
    CHECK(ident.rhs == 6);
    CHECK(ident.ok);
    CHECK(ident.per_dicritical == std::vector<long>{6});
}

TEST_CASE("resolve the depth-0 dicritical pencil with q_E = z^2 + z") {
    auto tree = resolve(pencil("y^4 + y^2*x^3 + y*x^7 + x^12 - T*x^6"));
    REQUIRE(tree.dicriticals.size() == 1);
    const auto& rec = tree.dicriticals[0];
    CHECK(rec.q_E == UniPoly<RationalField>(Q, {mpq_class(0), mpq_class(1), mpq_class(1)}, "z"));
    CHECK(rec.d_E == 2);
    CHECK(rec.n_E == 2);
    CHECK(rec.t0 == mpq_class(0));
    CHECK(rec.ratio_chain.empty());
    auto ident = degree_identity(tree);
    CHECK(ident.lhs == 4);
    CHECK(ident.rhs == 4);  // 2 * 2
    CHECK(ident.ok);
}

TEST_CASE("resolve f_x: toric (x^2 - z)^4 step, absorb, q_E = z^4 - 2 z^2 + 1") {
    auto s = pencil(kFx, 'z', 'x');
    CHECK(s.y_order == 8);
    CHECK(s.c == 10);
    auto tree = resolve(s);
    REQUIRE(tree.nodes.size() == 3);
    CHECK(tree.nodes[1].step.type == StepType::Toric);
    CHECK(tree.nodes[1].step.toric->edge.n == 2);
    CHECK(tree.nodes[1].step.toric->edge.m == 1);
    CHECK(tree.nodes[1].step.toric->alpha == mpq_class(1));
    CHECK(tree.nodes[1].step.toric->multiplicity == 4);
    CHECK(tree.nodes[2].step.type == StepType::Absorb);
    REQUIRE(tree.dicriticals.size() == 1);
    const auto& rec = tree.dicriticals[0];
    CHECK(rec.q_E ==
          UniPoly<RationalField>(Q, {mpq_class(1), mpq_class(0), mpq_class(-2), mpq_class(0), mpq_class(1)}, "z"));
    CHECK(rec.d_E == 4);
    // the degree identity forces v-ratio 1 here: 8 = 4 * 1 * 2
    CHECK(rec.n_E == 1);
    CHECK(rec.ratio_chain == std::vector<long>{2});
    auto ident = degree_identity(tree);
    CHECK(ident.ok);
    CHECK(ident.per_dicritical == std::vector<long>{8});
}

TEST_CASE("single depth-0 dicritical with v-ratio 1: y^3 + y^2 x - x^4 - T x^3") {
    auto tree = resolve(pencil("y^3 + y^2*x - x^4 - T*x^3"));
    REQUIRE(tree.dicriticals.size() == 1);
    CHECK(tree.dicriticals[0].d_E == 3);
    CHECK(tree.dicriticals[0].n_E == 1);
    auto ident = degree_identity(tree);
    CHECK(ident.lhs == 3);
    CHECK(ident.ok);
}

TEST_CASE("children are ordered by root value") {
    // edge polynomial s^2 - 25/4: roots -5/2 then 5/2
    auto tree = resolve(pencil("y^2 - 25/4*x^4 + x^5 - T*x^6"));
    std::vector<mpq_class> alphas;
    for (const auto& node : tree.nodes)
        if (node.parent == 0 && node.step.type == StepType::Toric) alphas.push_back(node.step.toric->alpha);
    REQUIRE(alphas.size() == 2);
    CHECK(alphas[0] == Q.from_ratio(-5, 2));
    CHECK(alphas[1] == Q.from_ratio(5, 2));
}

TEST_CASE("budget errors") {
    CHECK_THROWS_AS(resolve(pencil(kPx, 'z', 'x'), ResolveOptions{1, 4096, false}), DepthExceededError);
    CHECK_THROWS_AS(resolve(pencil(kPx, 'z', 'x'), ResolveOptions{64, 2, false}), NodeBudgetExceededError);
}

TEST_CASE("irrational branches: flagged by default, fatal in strict mode") {
    auto s = pencil("y^2 - 2*x^2 - T*x^3");
    auto tree = resolve(s);
    CHECK(tree.dicriticals.empty());
    REQUIRE(tree.residuals.size() == 1);
    CHECK(tree.residuals[0].residual.degree() == 2);
    CHECK_THROWS_AS(degree_identity(tree), ResidualPresentError);
    CHECK_THROWS_AS(resolve(s, ResolveOptions{64, 4096, true}), IrrationalBranchError);
}

TEST_CASE("residual flag propagates to sibling dicriticals") {
    // (y^2 - 2 x^2)(y - x) picks up one rational branch and one residual
    auto s = pencil("(y^2 - 2*x^2)*(y - x) - T*x^4");
    auto tree = resolve(s);
    REQUIRE(!tree.dicriticals.empty());
    for (const auto& rec : tree.dicriticals) CHECK(rec.residual_flag);
    // conservation: the followed branch plus the residual degree cover ord_y
    REQUIRE(tree.residuals.size() == 1);
    long followed = 0;
    for (const auto& rec : tree.dicriticals) {
        long d = rec.d_E * rec.n_E;
        for (long n : rec.ratio_chain) d *= n;
        followed += d;
    }
    CHECK(followed + tree.residuals[0].residual.degree() * tree.residuals[0].edge.n == 3);
}

TEST_CASE("tree is invariant under unit multipliers with U(0,0) = 1") {
    auto p = parse_poly(Q, kPx, ParseVars{'z', 'x'});
    auto unit = parse_poly(Q, "1 + z + x^2 - 3*z*x", ParseVars{'z', 'x'});
    auto t1 = resolve(pencil_from_poly(p));
    auto t2 = resolve(pencil_from_poly(p * unit));
    REQUIRE(t1.nodes.size() == t2.nodes.size());
    for (std::size_t i = 0; i < t1.nodes.size(); ++i) {
        CHECK(t1.nodes[i].step.type == t2.nodes[i].step.type);
        CHECK(t1.nodes[i].depth == t2.nodes[i].depth);
        if (t1.nodes[i].step.toric) {
            CHECK(t1.nodes[i].step.toric->edge.n == t2.nodes[i].step.toric->edge.n);
            CHECK(t1.nodes[i].step.toric->edge.m == t2.nodes[i].step.toric->edge.m);
            CHECK(t1.nodes[i].step.toric->alpha == t2.nodes[i].step.toric->alpha);
        }
    }
    REQUIRE(t1.dicriticals.size() == t2.dicriticals.size());
    for (std::size_t i = 0; i < t1.dicriticals.size(); ++i) {
        CHECK(t1.dicriticals[i].q_E == t2.dicriticals[i].q_E);
        CHECK(t1.dicriticals[i].n_E == t2.dicriticals[i].n_E);
        CHECK(t1.dicriticals[i].ratio_chain == t2.dicriticals[i].ratio_chain);
    }
}

TEST_CASE("resolution over a prime field follows branches and keeps the identity") {
    PrimeField F7(7);
    // edge polynomial s^2 - 25/4 = (s - 1)(s - 6) over F_7: two branches
    auto s = pencil_from_poly(parse_poly(F7, "y^2 - 25/4*x^4 + x^5 - T*x^6"));
    auto tree = resolve(s);
    REQUIRE(tree.dicriticals.size() == 2);
    CHECK(tree.residuals.empty());
    std::vector<PrimeField::Elem> alphas;
    for (const auto& node : tree.nodes)
        if (node.step.type == StepType::Toric) alphas.push_back(node.step.toric->alpha);
    CHECK(alphas == std::vector<PrimeField::Elem>{1, 6});
    auto ident = degree_identity(tree);
    CHECK(ident.lhs == 2);
    CHECK(ident.ok);
}

TEST_CASE("every polygon in the corpus has at most one dicritical edge") {
    for (const char* src : {kPx, "y^4 + y^2*x^3 + y*x^7 + x^12 - T*x^6", "y^3 + y^2*x - x^4 - T*x^3",
                            "y^3 + y*x^2 - x^4 - T*x^3", "y^4 - 2*x^2*y^2 + (y^2 - x^2)*y*x^2 + x^7 - T*x^4"}) {
        char xv = (src == kPx) ? 'z' : 'x';
        char yv = (src == kPx) ? 'x' : 'y';
        auto tree = resolve(pencil(src, xv, yv));
        for (const auto& node : tree.nodes) {
            int count = 0;
            for (const Edge& e : node.polygon)
                if (e.kind == EdgeKind::Dicritical) ++count;
            CHECK(count <= 1);
        }
    }
}
