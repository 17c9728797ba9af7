#include "ec/curves.hpp"

#include <algorithm>

namespace ec {

u64 discriminant(const Weierstrass& E) {
    const Fp& F = E.F;
    u64 a2 = E.a2, a4 = E.a4, a6 = E.a6;
    u64 t1 = F.mul(F.mul(64, a6), F.pow(a2, 3));
    u64 t2 = F.mul(F.mul(16, F.sq(a4)), F.sq(a2));
    u64 t3 = F.mul(F.mul(F.mul(288, a4), a6), a2);
    u64 t4 = F.mul(64, F.pow(a4, 3));
    u64 t5 = F.mul(432, F.sq(a6));
    u64 r = F.sub(t2, t1);
    r = F.add(r, t3);
    r = F.sub(r, t4);
    r = F.sub(r, t5);
    return r;
}

Weierstrass make_curve(const Fp& F, u64 a2, u64 a4, u64 a6) {
    Weierstrass E{F, a2 % F.p(), a4 % F.p(), a6 % F.p()};
    if (discriminant(E) == 0) throw singular_curve_error("curve discriminant vanishes");
    return E;
}

Poly division_cubic(const Weierstrass& E) {
    return Poly{{E.a6, E.a4, E.a2, 1}};
}

bool on_curve(const Weierstrass& E, const Point& P) {
    if (P.infinity) return true;
    const Fp& F = E.F;
    return F.sq(P.y) == poly_eval(F, division_cubic(E), P.x);
}

Point negate(const Weierstrass& E, const Point& P) {
    if (P.infinity) return P;
    return Point::affine(P.x, E.F.neg(P.y));
}

Point add(const Weierstrass& E, const Point& P, const Point& Q) {
    const Fp& F = E.F;
    if (!on_curve(E, P) || !on_curve(E, Q))
        throw not_on_curve_error("group law input not on curve");
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    u64 lambda;
    if (P.x == Q.x) {
        if (F.add(P.y, Q.y) == 0) return Point::inf();
        // tangent: (3x^2 + 2 a2 x + a4) / (2y)
        u64 num = F.add(F.add(F.mul(3, F.sq(P.x)), F.mul(F.mul(2, E.a2), P.x)), E.a4);
        lambda = F.div(num, F.mul(2, P.y));
    } else {
        lambda = F.div(F.sub(Q.y, P.y), F.sub(Q.x, P.x));
    }
    u64 x3 = F.sub(F.sub(F.sub(F.sq(lambda), E.a2), P.x), Q.x);
    u64 y3 = F.sub(F.mul(lambda, F.sub(P.x, x3)), P.y);
    return Point::affine(x3, y3);
}

Point scalar_mul(const Weierstrass& E, u64 k, const Point& P) {
    Point r = Point::inf();
    Point base = P;
    while (k) {
        if (k & 1) r = add(E, r, base);
        base = add(E, base, base);
        k >>= 1;
    }
    return r;
}

u64 j_invariant(const Weierstrass& E) {
    const Fp& F = E.F;
    // b2 = 4 a2, b4 = 2 a4, c4 = b2^2 - 24 b4; Delta here is already the
    // standard discriminant (the division cubic's is Delta/16).
    u64 b2 = F.mul(4, E.a2);
    u64 c4 = F.sub(F.sq(b2), F.mul(48, E.a4));
    u64 delta = discriminant(E);
    if (delta == 0) throw singular_curve_error("j-invariant of a singular curve");
    return F.div(F.pow(c4, 3), delta);
}

namespace {

// Depressed-form invariants: shifting X by a2/3 gives Y^2 = X^3 + A X + B.
std::pair<u64, u64> depressed(const Weierstrass& E) {
    const Fp& F = E.F;
    u64 third = F.inv(3);
    u64 s = F.mul(E.a2, third); // shift
    u64 A = F.sub(E.a4, F.mul(E.a2, s));
    u64 B = F.add(F.sub(E.a6, F.mul(E.a4, s)), F.mul(F.mul(2, F.sq(s)), s));
    return {A, B};
}

bool iso_equations_hold(const Weierstrass& E, const Weierstrass& Ep, u64 u, u64 r) {
    const Fp& F = E.F;
    u64 u2 = F.sq(u);
    u64 u4 = F.sq(u2);
    u64 u6 = F.mul(u4, u2);
    if (F.mul(u2, Ep.a2) != F.add(E.a2, F.mul(3, r))) return false;
    u64 rhs4 = F.add(E.a4, F.add(F.mul(F.mul(2, r), E.a2), F.mul(3, F.sq(r))));
    if (F.mul(u4, Ep.a4) != rhs4) return false;
    u64 rhs6 = F.add(F.add(E.a6, F.mul(r, E.a4)), F.add(F.mul(F.sq(r), E.a2), F.pow(r, 3)));
    return F.mul(u6, Ep.a6) == rhs6;
}

} // namespace

std::optional<Isomorphism> isomorphism_solve(const Weierstrass& E, const Weierstrass& Ep) {
    const Fp& F = E.F;
    auto [A, B] = depressed(E);
    auto [Ap, Bp] = depressed(Ep);

    auto finish = [&](u64 u) -> std::optional<Isomorphism> {
        u64 r = F.div(F.sub(F.mul(F.sq(u), Ep.a2), E.a2), 3);
        Isomorphism iso{u, r};
        if (!iso_equations_hold(E, Ep, u, r))
            throw consistency_error("isomorphism candidate failed re-verification");
        return iso;
    };

    if (A != 0 && B != 0) {
        if (Ap == 0 || Bp == 0) return std::nullopt;
        u64 u2 = F.div(F.mul(B, Ap), F.mul(Bp, A));
        u64 u4 = F.sq(u2);
        if (F.mul(u4, Ap) != A) return std::nullopt;
        if (F.mul(F.mul(u4, u2), Bp) != B) return std::nullopt;
        auto s = F.sqrt(u2);
        if (!s) return std::nullopt;
        return finish(s->first);
    }
    if (A == 0) {
        // j = 0: need u^6 Bp = B
        if (Ap != 0) return std::nullopt;
        Poly f{{F.neg(F.div(B, Bp)), 0, 0, 0, 0, 0, 1}};
        auto roots = poly_roots(F, f);
        if (roots.empty()) return std::nullopt;
        return finish(roots.front());
    }
    // B == 0, j = 1728: need u^4 Ap = A
    if (Bp != 0) return std::nullopt;
    Poly f{{F.neg(F.div(A, Ap)), 0, 0, 0, 1}};
    auto roots = poly_roots(F, f);
    if (roots.empty()) return std::nullopt;
    return finish(roots.front());
}

Point isomorphism_apply(const Fp& F, const Isomorphism& iso, const Point& P) {
    if (P.infinity) return P;
    u64 u2 = F.sq(iso.u);
    return Point::affine(F.add(F.mul(u2, P.x), iso.r), F.mul(F.mul(u2, iso.u), P.y));
}

Point isomorphism_apply_inverse(const Fp& F, const Isomorphism& iso, const Point& P) {
    if (P.infinity) return P;
    u64 u2 = F.sq(iso.u);
    return Point::affine(F.div(F.sub(P.x, iso.r), u2), F.div(P.y, F.mul(u2, iso.u)));
}

Montgomery make_montgomery(const Fp& F, u64 A, u64 B) {
    A %= F.p();
    B %= F.p();
    if (B == 0) throw invalid_parameter_error("Montgomery B must be nonzero");
    if (A == 2 || A == F.p() - 2) throw invalid_parameter_error("Montgomery A must differ from +-2");
    return Montgomery{F, A, B};
}

TwistedEdwards make_twisted_edwards(const Fp& F, u64 a, u64 d) {
    a %= F.p();
    d %= F.p();
    if (a == 0 || d == 0 || a == d)
        throw invalid_parameter_error("twisted Edwards parameters need a, d nonzero and distinct");
    bool complete = F.legendre(a) == 1 && F.legendre(d) == -1;
    return TwistedEdwards{F, a, d, complete};
}

u64 twisted_edwards_j(const Fp& F, u64 a, u64 d) {
    a %= F.p();
    d %= F.p();
    u64 denom = F.mul(F.mul(a, d), F.pow(F.sub(a, d), 4));
    if (denom == 0) throw invalid_parameter_error("twisted Edwards j needs a d (a - d) != 0");
    u64 num = F.add(F.add(F.sq(a), F.mul(F.mul(14, a), d)), F.sq(d));
    return F.div(F.mul(16, F.pow(num, 3)), denom);
}

Weierstrass montgomery_to_weierstrass(const Montgomery& M) {
    const Fp& F = M.F;
    u64 Binv = F.inv(M.B);
    return make_curve(F, F.mul(M.A, Binv), F.sq(Binv), 0);
}

Point montgomery_point_to_weierstrass(const Montgomery& M, const Point& P) {
    if (P.infinity) return P;
    const Fp& F = M.F;
    u64 Binv = F.inv(M.B);
    return Point::affine(F.mul(P.x, Binv), F.mul(P.y, Binv));
}

Point weierstrass_point_to_montgomery(const Montgomery& M, const Point& P) {
    if (P.infinity) return P;
    const Fp& F = M.F;
    return Point::affine(F.mul(P.x, M.B), F.mul(P.y, M.B));
}

bool on_montgomery(const Montgomery& M, const Point& P) {
    if (P.infinity) return true;
    const Fp& F = M.F;
    u64 lhs = F.mul(M.B, F.sq(P.y));
    u64 rhs = F.add(F.mul(F.add(P.x, M.A), F.sq(P.x)), P.x);
    return lhs == rhs;
}

TwistedEdwards montgomery_to_twisted_edwards(const Montgomery& M) {
    const Fp& F = M.F;
    u64 a = F.div(F.add(M.A, 2), M.B);
    u64 d = F.div(F.sub(M.A, 2), M.B);
    return make_twisted_edwards(F, a, d);
}

EdwardsPoint montgomery_point_to_edwards(const Montgomery& M, const Point& P) {
    const Fp& F = M.F;
    if (P.infinity) return EdwardsPoint{0, 1};
    if (P.y == 0 || F.add(P.x, 1) == 0)
        throw exceptional_point_error("Montgomery point on the exceptional set of the Edwards map");
    return EdwardsPoint{F.div(P.x, P.y), F.div(F.sub(P.x, 1), F.add(P.x, 1))};
}

Point edwards_point_to_montgomery(const Montgomery& M, const EdwardsPoint& P) {
    const Fp& F = M.F;
    if (P.x == 0 && P.y == 1) return Point::inf();
    u64 one_minus_y = F.sub(1, P.y);
    if (one_minus_y == 0 || P.x == 0)
        throw exceptional_point_error("Edwards point on the exceptional set of the inverse map");
    u64 x = F.div(F.add(1, P.y), one_minus_y);
    u64 y = F.div(x, P.x);
    return Point::affine(x, y);
}

bool on_edwards(const TwistedEdwards& C, const EdwardsPoint& P) {
    const Fp& F = C.F;
    u64 x2 = F.sq(P.x), y2 = F.sq(P.y);
    return F.add(F.mul(C.a, x2), y2) == F.add(1, F.mul(F.mul(C.d, x2), y2));
}

EdwardsPoint edwards_add(const TwistedEdwards& C, const EdwardsPoint& P, const EdwardsPoint& Q) {
    const Fp& F = C.F;
    u64 t = F.mul(F.mul(C.d, F.mul(P.x, Q.x)), F.mul(P.y, Q.y));
    u64 den1 = F.add(1, t);
    u64 den2 = F.sub(1, t);
    if (den1 == 0 || den2 == 0)
        throw exceptional_point_error("Edwards addition hit a vanishing denominator");
    u64 x = F.div(F.add(F.mul(P.x, Q.y), F.mul(Q.x, P.y)), den1);
    u64 y = F.div(F.sub(F.mul(P.y, Q.y), F.mul(C.a, F.mul(P.x, Q.x))), den2);
    return EdwardsPoint{x, y};
}

EdwardsPoint edwards_negate(const TwistedEdwards& C, const EdwardsPoint& P) {
    return EdwardsPoint{C.F.neg(P.x), P.y};
}

} // namespace ec
