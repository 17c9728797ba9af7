#pragma once

#include <optional>

#include "ec/curves.hpp"
#include "ec/torsion.hpp"

namespace ec {

// Point on X_0(2): j = (u + 16)^3 / u, with a twist scale c.
struct X02Param {
    u64 u;
    u64 c = 1;
};

// Y^2 = X^3 + 3j/(1728-j) c^2 X + 2j/(1728-j) c^3.  Requires j not in
// {0, 1728} (mod p) and c != 0.
Weierstrass curve_from_j(const Fp& F, u64 j, u64 c);

// All roots u of (u + 16)^3 = j u over F_p, ascending.
std::vector<u64> u_from_j(const Fp& F, u64 j);

// Montgomery recovery along X_0(2): exists iff u + 64 is a square v^2.
// The change of variables from curve_from_j(j, c) is X = k X'' - shift with
// shift = c (u+16)/(u-8); the Montgomery model is (A, B) = (-v/4, k).
struct MontgomeryFromU {
    Montgomery M;
    u64 v, k, shift;
};

std::optional<MontgomeryFromU> montgomery_from_u(const Fp& F, const X02Param& P);

// Montgomery form straight from a curve with rational 2-torsion: shift a
// root x0 to the origin giving y^2 = x(x^2 + c2 x + c1); a Montgomery model
// exists iff c1 is a square s^2, and then (A, B) = (c2/s, s) with point map
// (x, y) -> ((x - x0)/s, y/s^2).
struct MontgomeryFromCurve {
    Montgomery M;
    u64 x0, s;
};

std::optional<MontgomeryFromCurve> montgomery_from_type_one(const Weierstrass& E,
                                                            const TwoTorsionReport& report);

Point curve_point_to_montgomery(const MontgomeryFromCurve& conv, const Point& P);
Point montgomery_point_to_curve(const MontgomeryFromCurve& conv, const Point& P);

// Kubert model EK_b: Y^2 = (X - 4b)(X^2 + X - 4b); requires b(16b + 1) != 0.
Weierstrass kubert_curve(const Fp& F, u64 b);

// j(EK_b) = (16 b^2 + 16 b + 1)^3 / (b^4 (16 b + 1)).
u64 kubert_j(const Fp& F, u64 b);

// Recover the Kubert parameter of a type I curve with D2 square and certify
// it by an explicit isomorphism E ~ EK_b.
struct KubertFromTypeOne {
    u64 b;
    u64 u2; // C + 2(x0 +- z), the square choice
    Isomorphism iso; // satisfies the isomorphism system between E and kubert_curve(b)
};

KubertFromTypeOne kubert_from_type_one(const Weierstrass& E, const TwoTorsionReport& report);

// Edwards parameter of EK_b: (a, d) = (1, 16b + 1); complete iff 16b + 1 is
// a nonsquare.
TwistedEdwards edwards_from_kubert(const Fp& F, u64 b);

// X_0(4) bridge: u = w^2 + 16w, v = w + 8 with v^2 = u + 64.  Requires
// w not in {0, -16, -8}.
std::pair<u64, u64> w_param_bridge(const Fp& F, u64 w);

} // namespace ec
