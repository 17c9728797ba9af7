#include "ec/sweeps.hpp"

#include <algorithm>
#include <tuple>

#include "ec/forms.hpp"
#include "ec/isogeny.hpp"

namespace ec {

namespace {
constexpr size_t kFailureCap = 32;
}

void SweepOutcome::note_failure(std::string msg) {
    ++violations;
    if (failures.size() < kFailureCap) failures.push_back(std::move(msg));
}

void SweepOutcome::merge(const SweepOutcome& other) {
    curves_scanned += other.curves_scanned;
    checks += other.checks;
    violations += other.violations;
    for (const auto& f : other.failures)
        if (failures.size() < kFailureCap) failures.push_back(f);
}

namespace {

std::string curve_tag(u64 p, u64 a2, u64 a4, u64 a6) {
    return "p=" + std::to_string(p) + " (" + std::to_string(a2) + "," + std::to_string(a4) + "," +
           std::to_string(a6) + ")";
}

// Order-4 points by brute force: y != 0 and 2P is a 2-torsion point.
std::vector<Point> brute_order4(const Weierstrass& E, const ChiTable& chi) {
    const Fp& F = E.F;
    std::vector<Point> pts;
    Poly f = division_cubic(E);
    for (u64 x = 0; x < F.p(); ++x) {
        u64 y2 = poly_eval(F, f, x);
        if (chi(y2) != 1) continue;
        u64 y = F.sqrt(y2)->first;
        if (y == 0) continue;
        for (u64 yy : {y, F.neg(y)}) {
            Point P = Point::affine(x, yy);
            Point P2 = add(E, P, P);
            if (!P2.infinity && P2.y == 0) pts.push_back(P);
        }
    }
    std::sort(pts.begin(), pts.end(),
              [](const Point& a, const Point& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
    return pts;
}

void check_prop2(const Fp& F, const ChiTable& chi, u64 a2, u64 a4, u64 a6, SweepOutcome& out) {
    Weierstrass E{F, a2, a4, a6};
    if (discriminant(E) == 0) return;
    ++out.curves_scanned;
    TwoTorsionReport rep = classify_two_torsion(E);
    std::vector<Point> brute = brute_order4(E, chi);
    ++out.checks;
    if (rep.four_torsion != brute)
        out.note_failure(curve_tag(F.p(), a2, a4, a6) + ": 4-torsion set mismatch");
    if (rep.type == TorsionType::I) {
        size_t expected = F.legendre(rep.D2) == 1 ? 2 : 0;
        ++out.checks;
        if (brute.size() != expected)
            out.note_failure(curve_tag(F.p(), a2, a4, a6) + ": expected " +
                             std::to_string(expected) + " order-4 points, found " +
                             std::to_string(brute.size()));
        ++out.checks;
        if (has_point_of_order_4(E) != !brute.empty())
            out.note_failure(curve_tag(F.p(), a2, a4, a6) + ": has_point_of_order_4 mismatch");
    }
}

void check_coro1(const Fp& F, const ChiTable&, u64 a2, u64 a4, u64 a6, SweepOutcome& out) {
    Weierstrass E{F, a2, a4, a6};
    if (discriminant(E) == 0) return;
    TwoTorsionReport rep = classify_two_torsion(E);
    if (rep.type != TorsionType::I) return;
    ++out.curves_scanned;
    F4Factorization f4 = split_f4_type_one(F, rep.x0, rep.C, rep.D);
    ++out.checks;
    for (u64 x = 0; x < F.p(); ++x) {
        if (poly_eval(F, f4.P4, x) == 0) {
            out.note_failure(curve_tag(F.p(), a2, a4, a6) + ": P4 has rational root " +
                             std::to_string(x));
            break;
        }
    }
}

void check_splitting(const Fp& F, const ChiTable&, u64 a2, u64 a4, u64 a6, SweepOutcome& out) {
    Weierstrass E{F, a2, a4, a6};
    if (discriminant(E) == 0) return;
    TwoTorsionReport rep = classify_two_torsion(E);
    if (rep.type != TorsionType::I) return;
    ++out.curves_scanned;
    F4Factorization f4 = split_f4_type_one(F, rep.x0, rep.C, rep.D);
    auto predicted = predict_splitting(F, rep.D2);
    ++out.checks;
    if (factor_degrees(F, f4.P2) != predicted.first || factor_degrees(F, f4.P4) != predicted.second)
        out.note_failure(curve_tag(F.p(), a2, a4, a6) + ": splitting pattern mismatch");
    if (F.legendre(discriminant(E)) == -1) {
        ++out.checks;
        if (!swan_parity_check(E, rep))
            out.note_failure(curve_tag(F.p(), a2, a4, a6) + ": Swan parity violated");
    }
}

const char* edwards_name(EdwardsColumn e) {
    switch (e) {
    case EdwardsColumn::Complete: return "complete";
    case EdwardsColumn::TwistedNotComplete: return "twisted-not-complete";
    case EdwardsColumn::None: return "none";
    default: return "twisted-at-best";
    }
}

void check_thm11(const Fp& F, const ChiTable& chi, u64 a4, u64 a6, SweepOutcome& out) {
    Weierstrass E{F, 0, a4, a6};
    if (discriminant(E) == 0) return;
    u64 order = count_points(E, chi);
    i64 U = static_cast<i64>(F.p()) + 1 - static_cast<i64>(order);
    if (U % static_cast<i64>(F.p()) == 0) return; // supersingular
    ++out.curves_scanned;

    FrobeniusData frob = frobenius_data(E, chi);
    TwoTorsionReport rep = classify_two_torsion(E);
    int m = 0;
    for (i64 v = frob.V; v % 2 == 0; v /= 2) ++m;
    int k = volcano_level(E, frob);
    i64 D = frob.D_K;
    for (int i = 0; i < k; ++i) D *= 4;
    bool v_even = k < m;
    CMClassification pred = classify_cm_predict(D, v_even, F.p() % 4 == 1 ? 1 : -1);

    bool complete = rep.type == TorsionType::I && F.legendre(rep.D2) == 1;
    bool montgomery =
        rep.type != TorsionType::None && montgomery_from_type_one(E, rep).has_value();
    std::string tag = curve_tag(F.p(), 0, a4, a6) + " D=" + std::to_string(D) +
                      (v_even ? " v even" : " v odd");

    ++out.checks;
    if (pred.torsion != rep.type) out.note_failure(tag + ": torsion column mismatch");

    ++out.checks;
    bool edwards_ok = true;
    switch (pred.edwards) {
    case EdwardsColumn::Complete: edwards_ok = complete; break;
    case EdwardsColumn::TwistedNotComplete: edwards_ok = !complete && montgomery; break;
    case EdwardsColumn::None: edwards_ok = !complete && !montgomery; break;
    case EdwardsColumn::TwistedAtBest: edwards_ok = !complete; break;
    }
    if (!edwards_ok)
        out.note_failure(tag + ": Edwards column " + edwards_name(pred.edwards) + " mismatch");

    if (pred.montgomery != MontgomeryColumn::Undetermined) {
        ++out.checks;
        if ((pred.montgomery == MontgomeryColumn::Yes) != montgomery)
            out.note_failure(tag + ": Montgomery column mismatch");
    }

    // Proposition 12: D odd, or D even with v even, forces square discriminant.
    if (D % 2 != 0 || v_even) {
        ++out.checks;
        if (F.legendre(discriminant(E)) != 1)
            out.note_failure(tag + ": discriminant not a square");
    }

    // Corollary 7: D mod 16 in {0, 1, 4, 9} gives a Montgomery form.
    i64 d16 = (D % 16 + 16) % 16;
    if (d16 == 0 || d16 == 1 || d16 == 4 || d16 == 9) {
        ++out.checks;
        if (!montgomery) out.note_failure(tag + ": expected Montgomery form");
    }

    // Theorem 10: maximal order with fundamental Frobenius discriminant
    // excludes complete Edwards.
    if (frob.V == 1) {
        ++out.checks;
        if (complete) out.note_failure(tag + ": V=1 curve admits complete Edwards");
    }
}

template <typename Check>
SweepOutcome drive_triple(u64 p, bool parallel, Check check) {
    Fp F(p);
    ChiTable chi(F);
    SweepOutcome total;
    if (!parallel) {
        for (u64 a2 = 0; a2 < p; ++a2)
            for (u64 a4 = 0; a4 < p; ++a4)
                for (u64 a6 = 0; a6 < p; ++a6) check(F, chi, a2, a4, a6, total);
        return total;
    }
#pragma omp parallel
    {
        SweepOutcome local;
#pragma omp for collapse(2) schedule(dynamic)
        for (u64 a2 = 0; a2 < p; ++a2)
            for (u64 a4 = 0; a4 < p; ++a4)
                for (u64 a6 = 0; a6 < p; ++a6) check(F, chi, a2, a4, a6, local);
#pragma omp critical
        total.merge(local);
    }
    return total;
}

} // namespace

SweepOutcome sweep_prop2(u64 p, bool parallel) { return drive_triple(p, parallel, check_prop2); }

SweepOutcome sweep_coro1(u64 p, bool parallel) { return drive_triple(p, parallel, check_coro1); }

SweepOutcome sweep_splitting(u64 p, bool parallel) {
    return drive_triple(p, parallel, check_splitting);
}

SweepOutcome sweep_thm11(u64 p, bool parallel) {
    Fp F(p);
    ChiTable chi(F);
    SweepOutcome total;
    if (!parallel) {
        for (u64 a4 = 0; a4 < p; ++a4)
            for (u64 a6 = 0; a6 < p; ++a6) check_thm11(F, chi, a4, a6, total);
        return total;
    }
#pragma omp parallel
    {
        SweepOutcome local;
#pragma omp for collapse(2) schedule(dynamic)
        for (u64 a4 = 0; a4 < p; ++a4)
            for (u64 a6 = 0; a6 < p; ++a6) check_thm11(F, chi, a4, a6, local);
#pragma omp critical
        total.merge(local);
    }
    return total;
}

} // namespace ec
