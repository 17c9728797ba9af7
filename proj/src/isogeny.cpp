#include "ec/isogeny.hpp"

#include <algorithm>
#include <cmath>

namespace ec {

namespace {

bool qualifies(const Fp& F, const TwoTorsionReport& rep) {
    return rep.type == TorsionType::I && F.legendre(rep.D2) == 1;
}

// Desk-scale ordinarity check; larger fields are trusted to the caller.
constexpr u64 kSupersingularCheckBound = 2'000'000;

bool is_supersingular(const Weierstrass& E) {
    const Fp& F = E.F;
    if (F.p() > kSupersingularCheckBound) return false;
    std::vector<signed char> chi(F.p(), -1);
    chi[0] = 0;
    for (u64 x = 1; x < F.p(); ++x) chi[F.sq(x)] = 1;
    Poly f = division_cubic(E);
    i64 trace = 0;
    for (u64 x = 0; x < F.p(); ++x) trace -= chi[poly_eval(F, f, x)];
    return trace % static_cast<i64>(F.p()) == 0;
}

struct Dfs {
    const Fp& F;
    u64 depth_bound;
    std::vector<IsogenyStep> steps;
    TwoTorsionReport terminal_report;

    bool run(const Weierstrass& cur, const TwoTorsionReport& rep, const u64* prev_j) {
        if (steps.size() >= depth_bound) return false;
        u64 cur_j = j_invariant(cur);
        for (size_t i = 0; i < rep.roots.size(); ++i) {
            u64 x0 = rep.roots[i];
            if (i > 0 && x0 == rep.roots[i - 1]) continue;
            IsogenyStep step = velu_2_isogeny(cur, x0);
            u64 tj = j_invariant(step.target);
            if (prev_j && tj == *prev_j) continue;
            TwoTorsionReport trep = classify_two_torsion(step.target);
            steps.push_back(step);
            if (qualifies(F, trep)) {
                terminal_report = std::move(trep);
                return true;
            }
            if (!trep.roots.empty() && run(step.target, trep, &cur_j)) return true;
            steps.pop_back();
        }
        return false;
    }
};

} // namespace

IsogenyStep velu_2_isogeny(const Weierstrass& E, u64 x0) {
    const Fp& F = E.F;
    x0 %= F.p();
    if (poly_eval(F, division_cubic(E), x0) != 0)
        throw not_on_curve_error("kernel abscissa is not a 2-torsion root");

    u64 t = F.add(F.add(F.mul(3, F.sq(x0)), F.mul(F.mul(2, E.a2), x0)), E.a4);
    u64 w = F.mul(x0, t);
    u64 A4 = F.sub(E.a4, F.mul(5, t));
    u64 A6 = F.sub(F.sub(E.a6, F.mul(F.mul(4, E.a2), t)), F.mul(7, w));
    IsogenyStep step{E, x0, t, w, Weierstrass{F, E.a2, A4, A6}, {}};
    if (discriminant(step.target) == 0)
        throw consistency_error("Velu target is singular");

    for (u64 e : poly_roots(F, division_cubic(E))) {
        if (e == x0) continue;
        step.transported_roots.push_back(F.add(e, F.div(step.t, F.sub(e, x0))));
    }
    std::sort(step.transported_roots.begin(), step.transported_roots.end());
    step.transported_roots.erase(
        std::unique(step.transported_roots.begin(), step.transported_roots.end()),
        step.transported_roots.end());
    return step;
}

Point transport_point(const IsogenyStep& step, const Point& P) {
    const Fp& F = step.source.F;
    if (!on_curve(step.source, P))
        throw not_on_curve_error("transport input not on the isogeny source");
    if (P.infinity || (P.x == step.kernel_x0 && P.y == 0)) return Point::inf();
    u64 dx = F.sub(P.x, step.kernel_x0);
    u64 x1 = F.add(P.x, F.div(step.t, dx));
    u64 y1 = F.mul(P.y, F.sub(1, F.div(step.t, F.sq(dx))));
    return Point::affine(x1, y1);
}

DescentPath descend_to_complete_edwards(const Weierstrass& E) {
    const Fp& F = E.F;
    if (is_supersingular(E))
        throw unsupported_curve_error("volcano descent requires an ordinary curve");

    TwoTorsionReport rep = classify_two_torsion(E);
    if (qualifies(F, rep)) return DescentPath{{}, E, std::move(rep)};
    if (rep.roots.empty())
        throw no_edwards_form_error("curve has no rational 2-torsion and no 4-torsion route");

    u64 depth_bound = 2 * static_cast<u64>(std::ceil(std::log2(4.0 * static_cast<double>(F.p()))));
    Dfs dfs{F, depth_bound, {}, {}};
    if (!dfs.run(E, rep, nullptr))
        throw no_edwards_form_error("no isogenous curve with a complete Edwards form found");
    Weierstrass terminal = dfs.steps.back().target;
    return DescentPath{std::move(dfs.steps), terminal, std::move(dfs.terminal_report)};
}

DescentPath descend_scripted(const Weierstrass& E, const std::vector<u64>& kernels) {
    DescentPath path{{}, E, {}};
    Weierstrass cur = E;
    for (u64 x0 : kernels) {
        IsogenyStep step = velu_2_isogeny(cur, x0);
        cur = step.target;
        path.steps.push_back(std::move(step));
    }
    path.terminal = cur;
    path.terminal_report = classify_two_torsion(cur);
    return path;
}

} // namespace ec
