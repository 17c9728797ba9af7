#pragma once

#include <string>
#include <vector>

#include "ec/cm.hpp"

namespace ec {

// Exhaustive per-prime verification sweeps.  Each sweep checks every curve
// in its range against the theory and reports violations; the parallel
// drivers split the coefficient space across OpenMP threads and must agree
// with the serial ones exactly.
struct SweepOutcome {
    u64 curves_scanned = 0;
    u64 checks = 0;
    u64 violations = 0;
    std::vector<std::string> failures; // first few violation descriptions

    void note_failure(std::string msg);
    void merge(const SweepOutcome& other);
};

// Rational 4-torsion of type I curves: exactly two points iff D2 is a
// square, and the computed points match brute-force enumeration.  Full
// (a2, a4, a6) space.
SweepOutcome sweep_prop2(u64 p, bool parallel);

// Type I curves have no rational point of abscissa a root of P4 beyond the
// D2 mechanism: P4 is rootless, checked by direct evaluation.  Full space.
SweepOutcome sweep_coro1(u64 p, bool parallel);

// Factorization patterns of P2 and P4 against the (legendre(D2), p mod 4)
// table, plus the Swan parity identity when legendre(Delta) = -1.  Full
// space.
SweepOutcome sweep_splitting(u64 p, bool parallel);

// CM classification table on every ordinary short-model curve: measured
// 2-volcano level k gives D = 4^k D_K and the V-parity at that level; the
// predicted (torsion, Montgomery, Edwards) columns must match observation.
// Also checks the square-discriminant criterion for D odd or v even, the
// D mod 16 in {0,1,4,9} Montgomery criterion, and the V = 1 exclusion.
SweepOutcome sweep_thm11(u64 p, bool parallel);

} // namespace ec
