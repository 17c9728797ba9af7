#pragma once

#include <string>
#include <vector>

#include "ec/curves.hpp"
#include "ec/torsion.hpp"

namespace ec {

// Naive point counting |E(F_p)| = p + 1 + sum_x chi(F(x)).  Exact; bounded
// at p <= 10^7 (resource_limit_error beyond).
constexpr u64 kCountBound = 10'000'000;

u64 count_points(const Weierstrass& E);

// Shared quadratic-character table for one p; the per-prime sweeps reuse it.
struct ChiTable {
    u64 p;
    std::vector<signed char> chi;

    explicit ChiTable(const Fp& F);
    int operator()(u64 x) const { return chi[x]; }
};

u64 count_points(const Weierstrass& E, const ChiTable& chi);

// Frobenius data of an ordinary curve: order = p + 1 - U,
// Disc(pi) = U^2 - 4p = V^2 D_K with D_K fundamental.
struct FrobeniusData {
    u64 p;
    u64 order;
    i64 U;
    i64 disc_pi;
    i64 V;
    i64 D_K;
};

FrobeniusData frobenius_data(const Weierstrass& E);
FrobeniusData frobenius_data(const Weierstrass& E, const ChiTable& chi);

enum class MontgomeryColumn { Yes, No, Undetermined };
enum class EdwardsColumn { Complete, TwistedNotComplete, None, TwistedAtBest };

// One row of the CM classification table, keyed by (D mod 16 / mod 8,
// parity of V for the order of discriminant D).
struct CMClassification {
    i64 D;
    bool v_even;
    TorsionType torsion;
    MontgomeryColumn montgomery;
    EdwardsColumn edwards;
};

// chi4 = legendre(-1, p) when the target prime is known, 0 otherwise.  It
// only matters for the D = 5 mod 8, V even row: there a Montgomery (hence
// twisted Edwards) form exists iff chi4 = +1.  The classical table prints
// an unconditional "yes" for that row, but e.g. Y^2 = X^3 + 1 over F_103
// (CM by D = -3, V = 2) is type III with no Montgomery model at all, and
// exhaustive sweeps show the chi4 dichotomy is exact.
CMClassification classify_cm_predict(i64 D, bool v_even, int chi4 = 0);

// Jacobi symbol (a/n) for odd positive n.
int jacobi(i64 a, i64 n);

struct GenusCharacters {
    // label ("(p/q)", "chi4", "chi8", "chi4*chi8") and value in {-1, +1}.
    std::vector<std::pair<std::string, int>> characters;
    bool all_plus_one; // principal-genus verdict
};

// Generic characters of D evaluated at p; requires gcd(p, 2D) = 1.
GenusCharacters generic_characters(i64 D, i64 p);

// Number of reduced primitive forms of discriminant D < 0, by enumeration.
int class_number(i64 D);

// Measured 2-volcano level of an ordinary curve: k = ord2(conductor of
// End(E)), obtained as m - (BFS distance to the nearest type I curve) where
// m = ord2(V).
int volcano_level(const Weierstrass& E, const FrobeniusData& frob);
int volcano_level(const Weierstrass& E, const FrobeniusData& frob, const ChiTable& chi);

// Floor-invariant count of the trace-(+-t) class over F_p: predicted
// 2^(n-1) (2 - kronecker(D_K, 2)) h(D_K) with t^2 - 4p = V^2 D_K and
// n = ord2(V) >= 1, versus the exhaustively observed number of distinct
// j-invariants admitting a complete Edwards form.
struct EdwardsInvariantCount {
    i64 t;
    int n;
    i64 v; // odd part of V
    i64 D_K;
    u64 predicted;
    u64 observed;
};

EdwardsInvariantCount count_complete_edwards_invariants(u64 p, i64 t);

// Exhaustive Theorem-10 check: no curve with V = 1 admits a complete
// Edwards form.
struct ExclusionReport {
    u64 curves_scanned = 0;
    u64 fundamental_count = 0;
    u64 violations = 0;
};

ExclusionReport check_fundamental_exclusion(u64 p);

} // namespace ec
