#pragma once

#include <optional>
#include <vector>

#include "ec/field.hpp"
#include "ec/poly.hpp"

namespace ec {

// Y^2 = X^3 + a2 X^2 + a4 X + a6 over F_p; the universal internal model.
struct Weierstrass {
    Fp F;
    u64 a2, a4, a6;
};

struct Point {
    bool infinity = true;
    u64 x = 0, y = 0;

    static Point inf() { return {}; }
    static Point affine(u64 x, u64 y) { return {false, x, y}; }

    bool operator==(const Point& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

//   Delta(E) = -64 a6 a2^3 + 16 a4^2 a2^2 + 288 a4 a6 a2 - 64 a4^3 - 432 a6^2
u64 discriminant(const Weierstrass& E);

// Validates nonsingularity; throws singular_curve_error when Delta = 0.
Weierstrass make_curve(const Fp& F, u64 a2, u64 a4, u64 a6);

// The two-division cubic F(X) = X^3 + a2 X^2 + a4 X + a6.
Poly division_cubic(const Weierstrass& E);

bool on_curve(const Weierstrass& E, const Point& P);

Point negate(const Weierstrass& E, const Point& P);
Point add(const Weierstrass& E, const Point& P, const Point& Q);
Point scalar_mul(const Weierstrass& E, u64 k, const Point& P);

u64 j_invariant(const Weierstrass& E);

// Change of variables (x, y) -> (u^2 x + r, u^3 y) taking points of E' to
// points of E, where (u, r) satisfies
//   u^2 a2' = a2 + 3r,  u^4 a4' = a4 + 2 r a2 + 3 r^2,
//   u^6 a6' = a6 + r a4 + r^2 a2 + r^3.
struct Isomorphism {
    u64 u, r;
};

// Solve the system above; empty when E and E' are not F_p-isomorphic.
std::optional<Isomorphism> isomorphism_solve(const Weierstrass& E, const Weierstrass& Eprime);

// Apply (x, y) -> (u^2 x + r, u^3 y)  (points of E' land on E).
Point isomorphism_apply(const Fp& F, const Isomorphism& iso, const Point& P);
// Inverse direction (points of E land on E').
Point isomorphism_apply_inverse(const Fp& F, const Isomorphism& iso, const Point& P);

// B y^2 = x^3 + A x^2 + x with A != +-2, B != 0.
struct Montgomery {
    Fp F;
    u64 A, B;
};

Montgomery make_montgomery(const Fp& F, u64 A, u64 B);

// a x^2 + y^2 = 1 + d x^2 y^2 with a, d nonzero and a != d.
// complete <=> a is a square and d is not.
struct TwistedEdwards {
    Fp F;
    u64 a, d;
    bool complete;
};

TwistedEdwards make_twisted_edwards(const Fp& F, u64 a, u64 d);

struct EdwardsPoint {
    u64 x = 0, y = 1;
    bool operator==(const EdwardsPoint& o) const { return x == o.x && y == o.y; }
};

//   J = 16 (a^2 + 14 a d + d^2)^3 / (a d (a - d)^4)
u64 twisted_edwards_j(const Fp& F, u64 a, u64 d);

// E = (A/B, 1/B^2, 0); points map by (x, y) -> (x/B, y/B).
Weierstrass montgomery_to_weierstrass(const Montgomery& M);
Point montgomery_point_to_weierstrass(const Montgomery& M, const Point& P);
Point weierstrass_point_to_montgomery(const Montgomery& M, const Point& P);
bool on_montgomery(const Montgomery& M, const Point& P);

// a = (A+2)/B, d = (A-2)/B; (x, y) -> (x/y, (x-1)/(x+1)) away from
// {y = 0} u {x = -1}.
TwistedEdwards montgomery_to_twisted_edwards(const Montgomery& M);
// Throws exceptional_point_error on the exceptional set of a non-complete
// curve; the Montgomery point at infinity maps to the Edwards identity (0, 1).
EdwardsPoint montgomery_point_to_edwards(const Montgomery& M, const Point& P);
Point edwards_point_to_montgomery(const Montgomery& M, const EdwardsPoint& P);

bool on_edwards(const TwistedEdwards& C, const EdwardsPoint& P);

// Unified addition; identity (0, 1).  Throws exceptional_point_error when a
// denominator vanishes (cannot happen on a complete curve).
EdwardsPoint edwards_add(const TwistedEdwards& C, const EdwardsPoint& P, const EdwardsPoint& Q);
EdwardsPoint edwards_negate(const TwistedEdwards& C, const EdwardsPoint& P);

} // namespace ec
