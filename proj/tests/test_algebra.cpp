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

#include "dicrit/algebra.hpp"
#include "dicrit/printer.hpp"
#include "oracles.hpp"

using namespace dicrit;

namespace {

const RationalField Q;

UniPoly<RationalField> qpoly(std::vector<long> coeffs, const char* var = "s") {
    std::vector<mpq_class> cs;
    for (long c : coeffs) cs.emplace_back(c);
    return UniPoly<RationalField>(Q, cs, var);
}

mpq_class rat(long n, long d = 1) { return Q.from_ratio(n, d); }

std::mt19937 rng(20260808);

mpq_class random_rat() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return Q.from_ratio(num(rng), den(rng));
}

UniPoly<RationalField> random_qpoly(int maxdeg) {
    std::uniform_int_distribution<int> d(0, maxdeg);
    int deg = d(rng);
    std::vector<mpq_class> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(random_rat());
    return UniPoly<RationalField>(Q, cs);
}

}  // namespace

TEST_CASE("field axioms on randomized triples") {
    auto check = [](auto f, auto gen) {
        for (int it = 0; it < 200; ++it) {
            auto a = gen(), b = gen(), c = gen();
            CHECK(f.eq(f.add(f.add(a, b), c), f.add(a, f.add(b, c))));
            CHECK(f.eq(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
            CHECK(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
            CHECK(f.eq(f.add(a, f.neg(a)), f.zero()));
            if (!f.is_zero(a)) CHECK(f.eq(f.mul(a, f.inv(a)), f.one()));
        }
    };
    check(Q, [] { return random_rat(); });
    PrimeField F13(13);
    std::uniform_int_distribution<long> u13(0, 12);
    check(F13, [&] { return F13.from_long(u13(rng)); });
}

TEST_CASE("unipoly divmod and gcd basics") {
    auto a = qpoly({-1, 0, 1});  // s^2 - 1
    auto b = qpoly({-1, 1});     // s - 1
    auto [q, r] = a.divmod(b);
    CHECK(q == qpoly({1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(a, b) == monic(b));
    CHECK(poly_to_string(qpoly({1, 0, -2})) == "-2*s^2 + 1");
}

TEST_CASE("rational_roots: examples") {
    // s^2 + s -> roots 0, -1, residual constant
    auto r1 = rational_roots(qpoly({0, 1, 1}));
    REQUIRE(r1.roots.size() == 2);
    CHECK(r1.roots[0].first == rat(-1));
    CHECK(r1.roots[0].second == 1);
    CHECK(r1.roots[1].first == rat(0));
    CHECK(r1.roots[1].second == 1);
    CHECK(r1.residual.degree() == 0);

    // s^2 - 25/4 -> +-5/2
    auto u2 = UniPoly<RationalField>(Q, {rat(-25, 4), rat(0), rat(1)});
    auto r2 = rational_roots(u2);
    REQUIRE(r2.roots.size() == 2);
    CHECK(r2.roots[0].first == rat(-5, 2));
    CHECK(r2.roots[1].first == rat(5, 2));

    // (s - 1)^2 -> [(1, 2)]
    auto r3 = rational_roots(qpoly({1, -2, 1}));
    REQUIRE(r3.roots.size() == 1);
    CHECK(r3.roots[0].first == rat(1));
    CHECK(r3.roots[0].second == 2);

    // no rational roots at all
    auto r4 = rational_roots(qpoly({1, 1, 1}));
    CHECK(r4.roots.empty());
    CHECK(r4.residual == qpoly({1, 1, 1}));
}

TEST_CASE("rational_roots: exact reconstruction on random inputs") {
    for (int it = 0; it < 60; ++it) {
        UniPoly<RationalField> u = random_qpoly(3);
        // plant rational roots so there is something to find
        std::uniform_int_distribution<int> nroots(0, 3);
        for (int k = nroots(rng); k > 0; --k) {
            mpq_class r = random_rat();
            u = u * UniPoly<RationalField>(Q, {-r, mpq_class(1)});
        }
        if (u.is_zero()) continue;
        auto res = rational_roots(u);
        UniPoly<RationalField> prod = res.residual;
        for (const auto& [root, mult] : res.roots) {
            UniPoly<RationalField> lin(Q, {mpq_class(-root), mpq_class(1)});
            prod = prod * lin.pow(mult);
        }
        CHECK(prod == u);
        if (!res.residual.is_constant()) {
            auto again = rational_roots(res.residual);
            CHECK(again.roots.empty());
        }
    }
}

TEST_CASE("rational_roots over F_p by exhaustive scan") {
    PrimeField F7(7);
    // (z - 3)^2 (z - 5) = z^3 - 11 z^2 + 39 z - 45
    UniPoly<PrimeField> u(F7, {F7.from_long(-45), F7.from_long(39), F7.from_long(-11), F7.one()}, "z");
    auto r = rational_roots(u);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].first == 3);
    CHECK(r.roots[0].second == 2);
    CHECK(r.roots[1].first == 5);
    CHECK(r.roots[1].second == 1);
    CHECK(r.residual.degree() == 0);
}

TEST_CASE("squarefree_part: examples") {
    // s (s-1)^2
    auto u = qpoly({0, 1}) * qpoly({-1, 1}) * qpoly({-1, 1});
    CHECK(squarefree_part(u) == qpoly({0, 1}) * qpoly({-1, 1}));
    // t^2 (t+1)
    auto v = qpoly({0, 0, 1}, "t") * qpoly({1, 1}, "t");
    CHECK(squarefree_part(v) == qpoly({0, 1}, "t") * qpoly({1, 1}, "t"));

    // over F_5: (z+1)^5 = z^5 + 1
    PrimeField F5(5);
    UniPoly<PrimeField> w(F5, {F5.one(), F5.zero(), F5.zero(), F5.zero(), F5.zero(), F5.one()}, "z");
    auto sq = squarefree_part(w);
    CHECK(sq.degree() == 1);
    CHECK(sq == UniPoly<PrimeField>(F5, {F5.one(), F5.one()}, "z"));
}

TEST_CASE("squarefree_part: divides input and is squarefree (char 0)") {
    for (int it = 0; it < 50; ++it) {
        UniPoly<RationalField> u = random_qpoly(2);
        std::uniform_int_distribution<int> extra(0, 2);
        for (int k = extra(rng); k > 0; --k) {
            mpq_class r = random_rat();
            UniPoly<RationalField> lin(Q, {-r, mpq_class(1)});
            u = u * lin * lin;
        }
        if (u.is_zero() || u.degree() == 0) continue;
        auto s = squarefree_part(u);
        auto [q, rem] = u.divmod(s);
        CHECK(rem.is_zero());
        if (s.degree() > 0) CHECK(gcd(s, s.derivative()).degree() == 0);
    }
}

TEST_CASE("squarefree_part preserves root sets over small prime fields") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 97u}) {
        PrimeField F(p);
        std::uniform_int_distribution<long> el(0, p - 1);
        for (int it = 0; it < 20; ++it) {
            std::vector<PrimeField::Elem> cs;
            std::uniform_int_distribution<int> d(1, 6);
            int deg = d(rng);
            for (int i = 0; i <= deg; ++i) cs.push_back(F.from_long(el(rng)));
            UniPoly<PrimeField> u(F, cs);
            if (u.is_zero() || u.degree() < 1) continue;
            auto s = squarefree_part(u);
            for (std::uint32_t x = 0; x < p; ++x)
                CHECK(F.is_zero(u.eval(x)) == F.is_zero(s.eval(x)));
        }
    }
}

TEST_CASE("resultant agrees with the Sylvester determinant oracle") {
    CHECK(resultant(qpoly({-2, 1}), qpoly({-3, 1})) == rat(-1));  // B(2) = -1
    for (int it = 0; it < 40; ++it) {
        auto a = random_qpoly(4);
        auto b = random_qpoly(4);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(resultant(a, b) == test::sylvester_resultant(a, b));
    }
}

TEST_CASE("critical_value_poly: examples from worked pencils") {
    // q = z^2 + z -> t + 1/4
    auto q1 = qpoly({0, 1, 1}, "z");
    auto d1 = critical_value_poly(q1);
    CHECK(d1 == UniPoly<RationalField>(Q, {rat(1, 4), rat(1)}, "t"));

    // q = z^3 + z^2 -> t (t - 4/27)
    auto q2 = qpoly({0, 0, 1, 1}, "z");
    auto d2 = critical_value_poly(q2);
    CHECK(d2 == UniPoly<RationalField>(Q, {rat(0), rat(-4, 27), rat(1)}, "t"));

    // q = z: constant 1 (no critical values)
    CHECK(critical_value_poly(qpoly({0, 1}, "z")).is_one());

    // q = z^3 + z -> t^2 + 4/27, no rational roots
    auto q4 = qpoly({0, 1, 0, 1}, "z");
    auto d4 = critical_value_poly(q4);
    CHECK(d4 == UniPoly<RationalField>(Q, {rat(4, 27), rat(0), rat(1)}, "t"));
    CHECK(rational_roots(d4).roots.empty());

    // inseparable: z^5 over F_5
    PrimeField F5(5);
    UniPoly<PrimeField> z5(F5, {0, 0, 0, 0, 0, 1}, "z");
    CHECK_THROWS_AS(critical_value_poly(z5), InseparableError);
}

TEST_CASE("critical_value_poly vanishes exactly on critical values") {
    for (int it = 0; it < 30; ++it) {
        auto q = random_qpoly(5);
        if (q.degree() < 2) continue;
        auto qp = q.derivative();
        auto delta = critical_value_poly(q);
        for (const auto& [alpha, mult] : rational_roots(qp).roots)
            CHECK(Q.is_zero(delta.eval(q.eval(alpha))));
        // oracle cross-check: Sylvester determinant over K(t)
        FractionField<RationalField> ff(Q, "t");
        UniPoly<FractionField<RationalField>> A(ff, "z"), B(ff, "z");
        for (int i = q.degree(); i >= 0; --i) A.set_coeff(i, ff.from_base(q.coeff(i)));
        A.set_coeff(0, ff.sub(A.coeff(0), ff.generator()));
        for (int i = qp.degree(); i >= 0; --i) B.set_coeff(i, ff.from_base(qp.coeff(i)));
        auto det = test::sylvester_resultant(A, B);
        REQUIRE(det.den.degree() == 0);
        auto num = det.num.with_var("t");
        if (num.degree() > 0) CHECK(monic(squarefree_part(num)) == delta);
    }
}
