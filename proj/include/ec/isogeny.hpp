#pragma once

#include <vector>

#include "ec/curves.hpp"
#include "ec/torsion.hpp"

namespace ec {

// One Velu 2-isogeny with kernel <(x0, 0)>:
//   t = 3 x0^2 + 2 a2 x0 + a4,  w = x0 t,
//   target = (a2, a4 - 5t, a6 - 4 a2 t - 7 w).
struct IsogenyStep {
    Weierstrass source;
    u64 kernel_x0;
    u64 t, w;
    Weierstrass target;
    // Images of the non-kernel 2-torsion roots of the source under the step
    // map (the FindDescendingPath bookkeeping), ascending.
    std::vector<u64> transported_roots;
};

// Requires F(x0) = 0; throws not_on_curve_error otherwise.
IsogenyStep velu_2_isogeny(const Weierstrass& E, u64 x0);

// (X, Y) -> (X + t/(X - x0), Y (1 - t/(X - x0)^2)); kernel and infinity map
// to infinity.
Point transport_point(const IsogenyStep& step, const Point& P);

struct DescentPath {
    std::vector<IsogenyStep> steps;
    Weierstrass terminal;
    TwoTorsionReport terminal_report;
};

// Walk the 2-isogeny volcano down to a curve that is type I with D2 a
// square (hence admits a complete Edwards form).  Deterministic DFS:
// kernels tried in ascending abscissa order, immediate backtracking excluded
// by comparing j-invariants, depth bounded by 2 log2(4p).
//
// Throws unsupported_curve_error for supersingular input and
// no_edwards_form_error when no qualifying curve is reachable.
DescentPath descend_to_complete_edwards(const Weierstrass& E);

// Replay an explicit kernel-abscissa script instead of searching.
DescentPath descend_scripted(const Weierstrass& E, const std::vector<u64>& kernels);

} // namespace ec
