#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ec/cm.hpp"
#include "ec/errors.hpp"
#include "ec/forms.hpp"

using namespace ec;

TEST_CASE("curve_from_j hits the requested invariant") {
    Fp F(1009);
    for (u64 j : {1u, 5u, 33u, 100u, 718u, 720u, 1008u}) {
        Weierstrass E = curve_from_j(F, j, 1);
        CHECK(j_invariant(E) == j);
        // twist scale c changes the model but not j
        Weierstrass T = curve_from_j(F, j, F.nonresidue());
        CHECK(j_invariant(T) == j);
        if (j != 0 && j != F.reduce(1728)) {
            // quadratic twist changes the count unless trace is 0
            u64 n1 = count_points(E), n2 = count_points(T);
            CHECK(n1 + n2 == 2 * (1009 + 1));
        }
    }
    CHECK_THROWS_AS(curve_from_j(F, 0, 1), invalid_parameter_error);
    CHECK_THROWS_AS(curve_from_j(F, F.reduce(1728), 1), invalid_parameter_error);
    CHECK_THROWS_AS(curve_from_j(F, 5, 0), invalid_parameter_error);
}

TEST_CASE("u_from_j solves (u+16)^3 = j u") {
    Fp F(1009);
    for (u64 j = 1; j < 200; ++j) {
        if (j == F.reduce(1728)) continue;
        for (u64 u : u_from_j(F, j)) {
            CHECK(u != 0);
            u64 lhs = F.mul(F.add(u, 16), F.sq(F.add(u, 16)));
            CHECK(lhs == F.mul(j, u));
        }
    }
}

TEST_CASE("montgomery_from_u recovers a certified model") {
    Fp F(1009);
    int hits = 0;
    for (u64 j = 1; j < 1009 && hits < 30; ++j) {
        if (j == F.reduce(1728)) continue;
        for (u64 u : u_from_j(F, j)) {
            if (u == 8 || u == F.reduce(-64)) continue;
            auto rec = montgomery_from_u(F, X02Param{u, 1});
            if (F.legendre(F.add(u, 64)) != 1) {
                CHECK_FALSE(rec.has_value());
                continue;
            }
            REQUIRE(rec.has_value());
            CHECK(F.sq(rec->v) == F.add(u, 64));
            Weierstrass W = montgomery_to_weierstrass(rec->M);
            CHECK(j_invariant(W) == j);
            CHECK(count_points(W) == count_points(curve_from_j(F, j, 1)));
            ++hits;
        }
    }
    CHECK(hits >= 30);
}

TEST_CASE("montgomery_from_type_one on the golden curve") {
    Fp F(1009);
    Weierstrass E = make_curve(F, 0, 1003, 17);
    TwoTorsionReport rep = classify_two_torsion(E);
    auto conv = montgomery_from_type_one(E, rep);
    REQUIRE(conv.has_value());
    CHECK(conv->x0 == 518);
    CHECK(conv->s == 271);
    CHECK(conv->M.B == 271);
    CHECK(conv->M.A == F.div(545, 271));
    Weierstrass W = montgomery_to_weierstrass(conv->M);
    CHECK(count_points(W) == count_points(E));
    CHECK(j_invariant(W) == j_invariant(E));

    // point maps round-trip
    Point P = Point::affine(247, 19);
    Point Q = curve_point_to_montgomery(*conv, P);
    CHECK(on_montgomery(conv->M, Q));
    CHECK(montgomery_point_to_curve(*conv, Q) == P);
}

TEST_CASE("kubert parameters") {
    Fp F(1009);
    // j(EK_1) = 33^3 / 17
    CHECK(kubert_j(F, 1) == F.div(F.mul(33, F.mul(33, 33)), 17));
    for (u64 b = 1; b < 150; ++b) {
        if (F.mul(b, F.add(F.mul(16, b), 1)) == 0) continue;
        Weierstrass EK = kubert_curve(F, b);
        CHECK(EK.a2 == F.reduce(1 - 4 * static_cast<i64>(b)));
        CHECK(j_invariant(EK) == kubert_j(F, b));
        // (4b, 0) is 2-torsion and EK has a point of order 4
        CHECK(poly_eval(F, division_cubic(EK), F.mul(4, b)) == 0);
        TwistedEdwards ed = edwards_from_kubert(F, b);
        CHECK(ed.a == 1);
        CHECK(ed.d == F.add(F.mul(16, b), 1));
        CHECK(twisted_edwards_j(F, ed.a, ed.d) == kubert_j(F, b));
    }
}

TEST_CASE("kubert_from_type_one certifies an isomorphism") {
    Fp F(1009);
    Weierstrass E = make_curve(F, 0, 1003, 17);
    TwoTorsionReport rep = classify_two_torsion(E);
    KubertFromTypeOne kb = kubert_from_type_one(E, rep);
    CHECK(kb.u2 == 3); // C + 2(x0 - z) = 518 + 2(518 - 271) mod 1009
    Weierstrass EK = kubert_curve(F, kb.b);
    CHECK(j_invariant(EK) == j_invariant(E));
    CHECK(count_points(EK) == count_points(E));
    CHECK(F.sq(kb.iso.u) == kb.u2);

    // exhaustive over small primes: every qualifying curve certifies
    for (u64 p : {13u, 17u}) {
        Fp G(p);
        for (u64 a2 = 0; a2 < p; ++a2)
            for (u64 a4 = 0; a4 < p; ++a4)
                for (u64 a6 = 0; a6 < p; ++a6) {
                    Weierstrass C{G, a2, a4, a6};
                    if (discriminant(C) == 0) continue;
                    TwoTorsionReport r = classify_two_torsion(C);
                    if (r.type != TorsionType::I || G.legendre(r.D2) != 1) continue;
                    KubertFromTypeOne k = kubert_from_type_one(C, r);
                    CHECK(j_invariant(kubert_curve(G, k.b)) == j_invariant(C));
                }
    }
}

TEST_CASE("w-parameter bridge") {
    Fp F(1009);
    for (u64 w = 1; w < 300; ++w) {
        if (w == F.reduce(-8) || w == F.reduce(-16)) continue;
        auto [u, v] = w_param_bridge(F, w);
        CHECK(u == F.add(F.sq(w), F.mul(16, w)));
        CHECK(v == F.add(w, 8));
        CHECK(F.sq(v) == F.add(u, 64));
    }
    CHECK_THROWS_AS(w_param_bridge(F, 0), invalid_parameter_error);
    CHECK_THROWS_AS(w_param_bridge(F, F.reduce(-8)), invalid_parameter_error);
    CHECK_THROWS_AS(w_param_bridge(F, F.reduce(-16)), invalid_parameter_error);
}

TEST_CASE("the two sqrt branches of u+64 give isomorphic montgomery curves") {
    Fp F(1009);
    int done = 0;
    for (u64 j = 2; j < 1009 && done < 10; ++j) {
        if (j == F.reduce(1728)) continue;
        for (u64 u : u_from_j(F, j)) {
            if (u == 8 || u == F.reduce(-64) || F.legendre(F.add(u, 64)) != 1) continue;
            auto rec = montgomery_from_u(F, X02Param{u, 1});
            REQUIRE(rec.has_value());
            // A -> -A is the composition of the (-1)-twist with x -> -x
            Montgomery other = make_montgomery(F, F.neg(rec->M.A), rec->M.B);
            Weierstrass W1 = montgomery_to_weierstrass(rec->M);
            Weierstrass W2 = montgomery_to_weierstrass(other);
            CHECK(j_invariant(W1) == j_invariant(W2));
            CHECK(count_points(W1) == count_points(W2));
            ++done;
        }
    }
    CHECK(done == 10);
}
