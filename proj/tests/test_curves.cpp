#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ec/cm.hpp"
#include "ec/curves.hpp"
#include "ec/errors.hpp"

using namespace ec;

TEST_CASE("discriminant and singular rejection") {
    Fp F(13);
    CHECK_THROWS_AS(make_curve(F, 0, 0, 0), singular_curve_error); // Y^2 = X^3
    CHECK_THROWS_AS(make_curve(F, 0, F.reduce(-3), 2), singular_curve_error); // (x-1)^2(x+2)
    CHECK_NOTHROW(make_curve(F, 0, 0, 1));
    // Delta matches 16 * Disc(division cubic) for a sample
    Fp G(1009);
    Weierstrass E = make_curve(G, 0, 1, 2);
    CHECK(discriminant(E) == G.mul(16, poly_discriminant(G, division_cubic(E))));
}

TEST_CASE("group law sanity over small p") {
    Fp F(13);
    Weierstrass E = make_curve(F, 2, 3, 5);
    std::vector<Point> pts{Point::inf()};
    for (u64 x = 0; x < 13; ++x) {
        u64 y2 = poly_eval(F, division_cubic(E), x);
        for (u64 y = 0; y < 13; ++y)
            if (F.sq(y) == y2) pts.push_back(Point::affine(x, y));
    }
    // closure, commutativity, associativity on the full group
    for (const auto& P : pts)
        for (const auto& Q : pts) {
            Point S = add(E, P, Q);
            CHECK(on_curve(E, S));
            CHECK(S == add(E, Q, P));
        }
    for (size_t i = 0; i < pts.size(); i += 3)
        for (size_t j = 1; j < pts.size(); j += 4)
            for (size_t k = 2; k < pts.size(); k += 5)
                CHECK(add(E, add(E, pts[i], pts[j]), pts[k]) ==
                      add(E, pts[i], add(E, pts[j], pts[k])));
    // Lagrange: order annihilates every point
    u64 n = pts.size();
    CHECK(n == count_points(E));
    for (const auto& P : pts) CHECK(scalar_mul(E, n, P).infinity);
    CHECK_THROWS_AS(add(E, Point::affine(0, 1), Point::affine(0, 1)), not_on_curve_error);
}

TEST_CASE("j-invariant") {
    Fp F(1009);
    CHECK(j_invariant(make_curve(F, 0, 0, 1)) == 0);
    CHECK(j_invariant(make_curve(F, 0, 1, 0)) == F.reduce(1728));
    // j is invariant under (u, r) twists of the model
    Weierstrass E = make_curve(F, 3, 7, 11);
    u64 u = 5, r = 123;
    u64 u2 = F.sq(u);
    // push (a2, a4, a6) through x -> u^2 x + r
    u64 b2 = F.div(F.add(E.a2, F.mul(3, r)), u2);
    u64 b4 = F.div(F.add(E.a4, F.add(F.mul(F.mul(2, r), E.a2), F.mul(3, F.sq(r)))),
                   F.sq(u2));
    u64 b6 = F.div(F.add(F.add(E.a6, F.mul(r, E.a4)), F.add(F.mul(F.sq(r), E.a2), F.mul(F.sq(r), r))),
                   F.mul(u2, F.sq(u2)));
    CHECK(j_invariant(make_curve(F, b2, b4, b6)) == j_invariant(E));
}

TEST_CASE("isomorphism_solve certifies and round-trips points") {
    Fp F(1009);
    Weierstrass E = make_curve(F, 3, 7, 11);
    u64 u = 5, r = 123, u2 = F.sq(u);
    u64 b2 = F.div(F.add(E.a2, F.mul(3, r)), u2);
    u64 b4 = F.div(F.add(E.a4, F.add(F.mul(F.mul(2, r), E.a2), F.mul(3, F.sq(r)))), F.sq(u2));
    u64 b6 = F.div(F.add(F.add(E.a6, F.mul(r, E.a4)),
                         F.add(F.mul(F.sq(r), E.a2), F.mul(F.sq(r), r))),
                   F.mul(u2, F.sq(u2)));
    Weierstrass Ep = make_curve(F, b2, b4, b6);
    auto iso = isomorphism_solve(E, Ep);
    REQUIRE(iso.has_value());
    // map a point of E' to E
    for (u64 x = 0; x < 1009; ++x) {
        u64 y2 = poly_eval(F, division_cubic(Ep), x);
        auto sq = F.sqrt(y2);
        if (!sq) continue;
        Point P = Point::affine(x, sq->first);
        CHECK(on_curve(E, isomorphism_apply(F, *iso, P)));
        break;
    }
    // non-isomorphic pair: quadratic twist with generic j
    Weierstrass T = make_curve(F, 0, F.mul(7, F.sq(5)), F.mul(11, F.mul(5, F.sq(5))));
    Weierstrass S = make_curve(F, 0, 7, 11);
    if (count_points(S) != count_points(T)) CHECK_FALSE(isomorphism_solve(S, T).has_value());
    // special j values still work
    Weierstrass j0a = make_curve(F, 0, 0, 1), j0b = make_curve(F, 0, 0, 64);
    auto iso0 = isomorphism_solve(j0a, j0b);
    REQUIRE(iso0.has_value()); // 64 = 2^6
}

TEST_CASE("montgomery <-> weierstrass") {
    Fp F(1009);
    Montgomery M = make_montgomery(F, 545, 271);
    Weierstrass E = montgomery_to_weierstrass(M);
    CHECK(E.a2 == F.div(M.A, M.B));
    CHECK(E.a4 == F.inv(F.sq(M.B)));
    CHECK(E.a6 == 0);
    CHECK_THROWS_AS(make_montgomery(F, 2, 1), invalid_parameter_error);
    CHECK_THROWS_AS(make_montgomery(F, 1007, 1), invalid_parameter_error);
    CHECK_THROWS_AS(make_montgomery(F, 5, 0), invalid_parameter_error);
    // point transport both ways
    int moved = 0;
    for (u64 x = 0; x < 1009 && moved < 10; ++x) {
        u64 rhs = F.add(F.mul(F.sq(x), F.add(x, M.A)), x);
        u64 y2 = F.div(rhs, M.B);
        auto sq = F.sqrt(y2);
        if (!sq) continue;
        Point P = Point::affine(x, sq->first);
        REQUIRE(on_montgomery(M, P));
        Point W = montgomery_point_to_weierstrass(M, P);
        CHECK(on_curve(E, W));
        CHECK(weierstrass_point_to_montgomery(M, W) == P);
        ++moved;
    }
    CHECK(moved == 10);
}

TEST_CASE("twisted edwards completeness flag and j") {
    Fp F(1009);
    CHECK_THROWS_AS(make_twisted_edwards(F, 0, 5), invalid_parameter_error);
    CHECK_THROWS_AS(make_twisted_edwards(F, 5, 5), invalid_parameter_error);
    u64 ns = F.nonresidue();
    CHECK(make_twisted_edwards(F, 1, ns).complete);
    CHECK_FALSE(make_twisted_edwards(F, 1, 4).complete);
    CHECK_FALSE(make_twisted_edwards(F, ns, 4).complete);
}

TEST_CASE("montgomery/edwards point bridge and addition") {
    Fp F(1009);
    // find a Montgomery curve whose Edwards twin is complete
    for (u64 A = 3; A < 1009; ++A) {
        if (A == F.reduce(2) || A == F.reduce(-2)) continue;
        Montgomery M = make_montgomery(F, A, 1);
        TwistedEdwards Ed = montgomery_to_twisted_edwards(M);
        if (!Ed.complete) continue;
        CHECK(twisted_edwards_j(F, Ed.a, Ed.d) == j_invariant(montgomery_to_weierstrass(M)));
        // transport arithmetic: (P + Q) commutes with the bridge
        Weierstrass E = montgomery_to_weierstrass(M);
        std::vector<Point> sample;
        for (u64 x = 0; x < 1009 && sample.size() < 8; ++x) {
            u64 y2 = F.div(F.add(F.mul(F.sq(x), F.add(x, M.A)), x), M.B);
            auto sq = F.sqrt(y2);
            if (sq && sq->first != 0 && x != F.reduce(-1)) sample.push_back(Point::affine(x, sq->first));
        }
        for (const auto& P : sample)
            for (const auto& Q : sample) {
                EdwardsPoint ep = montgomery_point_to_edwards(M, P);
                EdwardsPoint eq = montgomery_point_to_edwards(M, Q);
                CHECK(on_edwards(Ed, ep));
                Point sum = add(E, montgomery_point_to_weierstrass(M, P),
                                montgomery_point_to_weierstrass(M, Q));
                Point msum = weierstrass_point_to_montgomery(M, sum);
                EdwardsPoint esum = edwards_add(Ed, ep, eq);
                if (msum.infinity) {
                    CHECK(esum == EdwardsPoint{0, 1});
                } else if (msum.y != 0 && msum.x != F.reduce(-1)) {
                    CHECK(esum == montgomery_point_to_edwards(M, msum));
                }
            }
        CHECK(edwards_add(Ed, EdwardsPoint{0, 1}, EdwardsPoint{0, 1}) == EdwardsPoint{0, 1});
        break;
    }
}
