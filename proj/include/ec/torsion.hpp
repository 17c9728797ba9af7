#pragma once

#include <vector>

#include "ec/curves.hpp"

namespace ec {

enum class TorsionType { None, I, III };

// Everything the 2- and 4-torsion analysis produces for one curve.
// For type I the cubic splits as F(X) = (X - x0)(X^2 + C X + D) with the
// quadratic irreducible, and D2 = x0^2 + C x0 + D decides rational 4-torsion.
struct TwoTorsionReport {
    TorsionType type = TorsionType::None;
    std::vector<u64> roots;          // rational roots of F, ascending
    u64 x0 = 0, C = 0, D = 0, D2 = 0; // type I only
    std::vector<Point> four_torsion; // rational points of order 4, sorted by (x, y)
};

TwoTorsionReport classify_two_torsion(const Weierstrass& E);

// The degree-6 division polynomial f4 in dense coefficient form.
Poly f4_polynomial(const Weierstrass& E);

struct F4Factorization {
    Poly P2, P4;
    u64 disc_P2;   // 4 D2
    u64 disc_P4;   // -2^8 (C^2 - 4D)^3 D2^3
    u64 resultant; // -16 D2^3 (C^2 - 4D)
};

// f4 = P2 * P4 for a type I curve given by (x0, C, D).
F4Factorization split_f4_type_one(const Fp& F, u64 x0, u64 C, u64 D);

// Rational 4-torsion points of the type III curve with 2-torsion abscissas
// e1, e2, e3: solve the three quadratics and keep roots with square ordinate.
std::vector<Point> four_torsion_type_three(const Fp& F, u64 e1, u64 e2, u64 e3);

// Proposition: with exactly one 2-torsion point, (-1)^{n4} = -legendre(-D2)
// where n4 counts irreducible factors of f4.  Self-test; true on a correct
// implementation.  Requires legendre(Delta) = -1.
bool swan_parity_check(const Weierstrass& E, const TwoTorsionReport& report);

// Splitting-table row for a type I curve: factor shapes of (P2, P4) as
// multisets of factor degrees, decided by (legendre(D2), p mod 4).
std::pair<std::vector<int>, std::vector<int>> predict_splitting(const Fp& F, u64 D2);

// True iff E(F_p) contains a point of exact order 4 (via the 4-torsion
// analysis, not enumeration).
bool has_point_of_order_4(const Weierstrass& E);

} // namespace ec
