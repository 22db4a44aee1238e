// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dicrit/atypical.hpp"
#include "dicrit/parse.hpp"
#include "dicrit/printer.hpp"

using namespace dicrit;

namespace {

const RationalField Q;

DicriticalRecord<RationalField> record(std::vector<long> num, std::vector<long> den, long n) {
    std::vector<mpq_class> cs;
    for (std::size_t i = 0; i < num.size(); ++i) cs.push_back(Q.from_ratio(num[i], den[i]));
    DicriticalRecord<RationalField> rec{0, 0, UniPoly<RationalField>(Q, cs, "z"), Q.one(), 0, n, 1,
                                        Q.zero(),   {},      0,       false};
    rec.d_E = rec.q_E.degree();
    rec.t0 = rec.q_E.eval(Q.zero());
    return rec;
}

DicriticalRecord<RationalField> record(std::vector<long> coeffs, long n) {
    std::vector<long> den(coeffs.size(), 1);
    return record(coeffs, den, n);
}

PencilReport<RationalField> report_for(const char* src) {
    auto tree = resolve(pencil_from_poly(parse_poly(Q, src)));
    return aggregate_report(tree);
}

}  // namespace

TEST_CASE("analysis of q_E = z^2 + z with bamboo: atypical {0, -1/4}, M_bound = 2") {
    auto a = dicritical_analysis(record({0, 1, 1}, 2));
    CHECK(a.separable);
    CHECK(a.M_bound == 2);
    REQUIRE(a.rational_atypical.size() == 2);
    CHECK(a.rational_atypical[0] == Q.from_ratio(-1, 4));
    CHECK(a.rational_atypical[1] == mpq_class(0));
    CHECK(a.atypical_poly.degree() == 2);
    CHECK(a.includes_t0);
}

TEST_CASE("analysis of q_E = z^3 + z^2 without bamboo: atypical {0, 4/27}, M_bound = 2") {
    auto a = dicritical_analysis(record({0, 0, 1, 1}, 1));
    CHECK(a.M_bound == 2);
    REQUIRE(a.rational_atypical.size() == 2);
    CHECK(a.rational_atypical[0] == mpq_class(0));
    CHECK(a.rational_atypical[1] == Q.from_ratio(4, 27));
    CHECK(a.includes_t0);  // t0 = 0 happens to be a critical value
}

TEST_CASE("analysis of q_E = z^3 + z: typical base value, no rational atypical values") {
    auto a = dicritical_analysis(record({0, 1, 0, 1}, 1));
    CHECK(a.atypical_poly == UniPoly<RationalField>(Q, {Q.from_ratio(4, 27), Q.zero(), Q.one()}, "t"));
    CHECK(a.rational_atypical.empty());
    CHECK(!a.includes_t0);
    CHECK(a.M_bound == 3);  // q' = 3z^2 + 1: two distinct nonzero roots over the closure, plus one
}

TEST_CASE("analysis of q_E = z^4 - 2 z^2: two atypical values against bound 3") {
    auto a = dicritical_analysis(record({0, 0, -2, 0, 1}, 2));
    CHECK(a.M_bound == 3);
    CHECK(a.atypical_poly.degree() == 2);
    REQUIRE(a.rational_atypical.size() == 2);
    CHECK(a.rational_atypical[0] == mpq_class(-1));
    CHECK(a.rational_atypical[1] == mpq_class(0));
}

TEST_CASE("inseparable q_E = z^5 over F_5 is reported, not followed") {
    PrimeField F5(5);
    DicriticalRecord<PrimeField> rec{0, 0, UniPoly<PrimeField>(F5, {0, 0, 0, 0, 0, 1}, "z"),
                                     F5.one(), 5, 1, 1, F5.zero(), {}, 0, false};
    auto a = dicritical_analysis(rec);
    CHECK(!a.separable);
    CHECK(!a.warning.empty());
    CHECK(a.M_bound == 0);
    CHECK(a.rational_atypical.empty());
}

TEST_CASE("aggregate report for the sharp-bound pencil") {
    auto rep = report_for("y^4 - 2*x^2*y^2 + (y^2 - x^2)*y*x^2 + x^7 - T*x^4");
    CHECK(rep.nu_gen == 4);
    CHECK(rep.bound_sum == 3);
    CHECK(rep.atypical_count == 2);
    REQUIRE(rep.rational_atypical_union.size() == 2);
    CHECK(rep.rational_atypical_union[0] == mpq_class(-1));
    CHECK(rep.rational_atypical_union[1] == mpq_class(0));
    // the coincidence q(1) = q(-1) is reported
    bool warned = false;
    for (const auto& w : rep.warnings)
        if (w.find("share critical values") != std::string::npos) warned = true;
    CHECK(warned);
}

TEST_CASE("aggregate report for q_E = z^2 + z pencil") {
    auto rep = report_for("y^4 + y^2*x^3 + y*x^7 + x^12 - T*x^6");
    CHECK(rep.nu_gen == 2);
    CHECK(rep.bound_sum == 2);
    CHECK(rep.atypical_count == 2);
}

TEST_CASE("aggregate report for y - T x: one branch, nothing atypical") {
    auto rep = report_for("y - T*x");
    CHECK(rep.nu_gen == 1);
    CHECK(rep.bound_sum == 1);
    CHECK(rep.atypical_count == 0);
    CHECK(rep.atypical_union_poly.is_one());
}

TEST_CASE("extremality flags hold for both local pencils of the sharp degree-11 example") {
    const char* kPx = "(x^3 - z^5)^2 - x^6 + x*(x - z^2)^5 + 5*x*z^7*(x - 3/4*z^2) - T*z^11";
    const char* kPy = "(y - z^2)^5 + y*z^10 - 2*y^3*z^5 + 5*y^2*z^7 - 15/4*y*z^9 - T*z^11";
    auto tx = resolve(pencil_from_poly(parse_poly(Q, kPx, ParseVars{'z', 'x'})));
    auto ty = resolve(pencil_from_poly(parse_poly(Q, kPy, ParseVars{'z', 'y'})));
    auto rx = aggregate_report(tx);
    auto ry = aggregate_report(ty);
    auto fx = extremality_flags(tx, rx);
    auto fy = extremality_flags(ty, ry);
    CHECK(fx.all());
    CHECK(fy.all());
    REQUIRE(rx.rational_atypical_union.size() == 1);
    CHECK(rx.rational_atypical_union[0] == Q.from_ratio(-5, 8));
    REQUIRE(ry.rational_atypical_union.size() == 1);
    CHECK(ry.rational_atypical_union[0] == Q.from_ratio(-3, 4));
    // disjoint atypical sets across the two local pencils
    CHECK(gcd(rx.atypical_union_poly, ry.atypical_union_poly).degree() == 0);
}

TEST_CASE("extremality fails on shared critical values") {
    auto tree = resolve(pencil_from_poly(parse_poly(Q, "y^4 - 2*x^2*y^2 + (y^2 - x^2)*y*x^2 + x^7 - T*x^4")));
    auto rep = aggregate_report(tree);
    auto flags = extremality_flags(tree, rep);
    REQUIRE(flags.per_dicritical.size() == 1);
    CHECK(!flags.per_dicritical[0].critical_values_distinct);
    CHECK(!flags.all());
}

TEST_CASE("extremality is vacuous on a degree-1 dicritical") {
    auto tree = resolve(pencil_from_poly(parse_poly(Q, "y - T*x")));
    auto rep = aggregate_report(tree);
    auto flags = extremality_flags(tree, rep);
    REQUIRE(flags.per_dicritical.size() == 1);
    CHECK(flags.per_dicritical[0].t0_not_critical);
    CHECK(flags.per_dicritical[0].qprime_squarefree);
    CHECK(flags.per_dicritical[0].critical_values_distinct);
    CHECK(flags.pairwise_disjoint);
    CHECK(!flags.per_dicritical[0].bamboo);
}

TEST_CASE("inseparable analyses make extremality_flags throw") {
    PrimeField F5(5);
    auto p = parse_poly(F5, "y^5 + x^6 - T*x^5");
    auto tree = resolve(pencil_from_poly(p));
    auto rep = aggregate_report(tree);
    CHECK(rep.any_inseparable);
    CHECK_THROWS_AS(extremality_flags(tree, rep), InseparablePresentError);
}

TEST_CASE("reports are invariant under scaling the pencil by a constant") {
    for (const char* src : {"y^4 + y^2*x^3 + y*x^7 + x^12 - T*x^6", "y^3 + y^2*x - x^4 - T*x^3",
                            "y^4 - 2*x^2*y^2 + (y^2 - x^2)*y*x^2 + x^7 - T*x^4"}) {
        auto P = parse_poly(Q, src);
        auto base = aggregate_report(resolve(pencil_from_poly(P)));
        for (long lam : {3L, -7L}) {
            auto rep = aggregate_report(resolve(pencil_from_poly(P.scaled(mpq_class(lam)))));
            CHECK(rep.atypical_union_poly == base.atypical_union_poly);
            CHECK(rep.nu_gen == base.nu_gen);
            CHECK(rep.bound_sum == base.bound_sum);
        }
    }
}

TEST_CASE("atypical values of q_E are critical values, cross-validated") {
    for (auto coeffs : std::vector<std::vector<long>>{{0, 1, 1}, {0, 0, 1, 1}, {0, 0, -2, 0, 1}, {1, 0, -2, 0, 1}}) {
        auto rec = record(coeffs, 1);
        auto a = dicritical_analysis(rec);
        auto der = rec.q_E.derivative();
        for (const auto& [alpha, m] : rational_roots(der).roots)
            CHECK(Q.is_zero(a.A_E_poly.eval(rec.q_E.eval(alpha))));
        for (const auto& v : a.rational_atypical) {
            // every rational atypical value comes from a critical point
            UniPoly<RationalField> shifted = rec.q_E - UniPoly<RationalField>::constant(Q, v, "z");
            CHECK(gcd(shifted, der).degree() > 0);
        }
    }
}
