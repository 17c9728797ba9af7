#include "ec/torsion.hpp"

#include <algorithm>

namespace ec {

namespace {

void sort_points(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
}

} // namespace

Poly f4_polynomial(const Weierstrass& E) {
    const Fp& F = E.F;
    u64 a2 = E.a2, a4 = E.a4, a6 = E.a6;
    u64 c2 = F.sub(F.mul(F.mul(20, a2), a6), F.mul(5, F.sq(a4)));
    u64 c1 = F.sub(F.mul(F.mul(8, F.sq(a2)), a6),
                   F.add(F.mul(F.mul(4, a4), a6), F.mul(F.mul(2, a2), F.sq(a4))));
    u64 c0 = F.sub(F.sub(F.mul(F.mul(F.mul(4, a4), a6), a2), F.pow(a4, 3)),
                   F.mul(8, F.sq(a6)));
    return Poly{{c0, c1, c2, F.mul(20, a6), F.mul(5, a4), F.mul(2, a2), 1}};
}

F4Factorization split_f4_type_one(const Fp& F, u64 x0, u64 C, u64 D) {
    u64 disc_quad = F.sub(F.sq(C), F.mul(4, D));
    u64 D2 = F.add(F.add(F.sq(x0), F.mul(C, x0)), D);
    if (disc_quad == 0 || D2 == 0)
        throw singular_curve_error("type I split requires C^2 - 4D and D2 nonzero");

    F4Factorization out;
    out.P2 = Poly{{F.neg(F.add(F.mul(C, x0), D)), F.neg(F.mul(2, x0)), 1}};
    u64 q1 = F.add(F.sub(F.mul(F.mul(2, C), D), F.mul(F.mul(8, x0), D)),
                   F.mul(F.mul(2, x0), F.sq(C)));
    u64 q0 = F.add(F.mul(F.sub(F.mul(4, D), F.sq(C)), F.sq(x0)), F.sq(D));
    out.P4 = Poly{{q0, q1, F.mul(6, D), F.mul(2, C), 1}};
    out.disc_P2 = F.mul(4, D2);
    out.disc_P4 = F.neg(F.mul(F.mul(256, F.pow(disc_quad, 3)), F.pow(D2, 3)));
    out.resultant = F.neg(F.mul(F.mul(16, F.pow(D2, 3)), disc_quad));
    return out;
}

std::vector<Point> four_torsion_type_three(const Fp& F, u64 e1, u64 e2, u64 e3) {
    if (e1 == e2 || e1 == e3 || e2 == e3)
        throw invalid_parameter_error("type III abscissas must be distinct");
    const u64 es[3] = {e1, e2, e3};
    Poly cubic = poly_mul(F, poly_mul(F, Poly{{F.neg(e1), 1}}, Poly{{F.neg(e2), 1}}),
                          Poly{{F.neg(e3), 1}});
    u64 half = F.inv(2);

    int square_discs = 0;
    std::vector<Point> pts;
    for (int i = 0; i < 3; ++i) {
        u64 ei = es[i], ej = es[(i + 1) % 3], ek = es[(i + 2) % 3];
        u64 disc = F.mul(4, F.mul(F.sub(ei, ej), F.sub(ei, ek)));
        if (F.legendre(disc) != 1) continue;
        ++square_discs;
        u64 delta = F.sqrt(disc)->first;
        for (u64 x : {F.add(ei, F.mul(delta, half)), F.sub(ei, F.mul(delta, half))}) {
            u64 y2 = poly_eval(F, cubic, x);
            if (F.legendre(y2) != 1) continue;
            auto y = F.sqrt(y2);
            pts.push_back(Point::affine(x, y->first));
            pts.push_back(Point::affine(x, y->second));
        }
    }

    // The product of the three discriminants is -64 (e1-e2)^2 (e1-e3)^2
    // (e2-e3)^2, so the number of square ones is odd iff -1 is a square.
    bool odd_squares = square_discs % 2 == 1;
    if (odd_squares != (F.p() % 4 == 1))
        throw consistency_error("type III discriminant parity violated");

    sort_points(pts);
    return pts;
}

TwoTorsionReport classify_two_torsion(const Weierstrass& E) {
    const Fp& F = E.F;
    if (discriminant(E) == 0) throw singular_curve_error("classifying a singular curve");
    TwoTorsionReport rep;
    rep.roots = poly_roots(F, division_cubic(E));

    if (rep.roots.empty()) {
        rep.type = TorsionType::None;
        return rep;
    }
    if (rep.roots.size() == 3) {
        rep.type = TorsionType::III;
        rep.four_torsion = four_torsion_type_three(F, rep.roots[0], rep.roots[1], rep.roots[2]);
        return rep;
    }

    rep.type = TorsionType::I;
    rep.x0 = rep.roots[0];
    rep.C = F.add(E.a2, rep.x0);
    rep.D = F.add(E.a4, F.mul(rep.x0, rep.C));
    rep.D2 = F.add(F.add(F.sq(rep.x0), F.mul(rep.C, rep.x0)), rep.D);
    if (F.legendre(rep.D2) != 1) return rep;

    u64 z = F.sqrt(rep.D2)->first;
    // Abscissas x0 +- z; ordinates y^2 = z^2 (C + 2(x0 +- z)); exactly one
    // of the two factors is a square since their product is C^2 - 4D, a
    // nonsquare for type I.
    int squares = 0;
    for (u64 zz : {z, F.neg(z)}) {
        u64 x = F.add(rep.x0, zz);
        u64 w = F.add(rep.C, F.mul(2, x));
        if (F.legendre(w) != 1) continue;
        ++squares;
        u64 y2 = F.mul(rep.D2, w);
        auto y = F.sqrt(y2);
        if (!y) throw consistency_error("square ordinate candidate is not a square");
        rep.four_torsion.push_back(Point::affine(x, y->first));
        rep.four_torsion.push_back(Point::affine(x, y->second));
    }
    if (squares != 1)
        throw consistency_error("exactly one 4-torsion abscissa candidate must survive");
    sort_points(rep.four_torsion);
    return rep;
}

bool swan_parity_check(const Weierstrass& E, const TwoTorsionReport& report) {
    const Fp& F = E.F;
    if (F.legendre(discriminant(E)) != -1 || report.type != TorsionType::I)
        throw invalid_parameter_error("Swan parity check needs a unique 2-torsion point");
    // n4 counts the irreducible factors of the quartic P4: Swan on P4 gives
    // chi(Disc P4) = (-1)^(4 - n4) and Disc(P4) = -2^8 (C^2-4D)^3 D2^3 with
    // chi(C^2-4D) = -1 here, hence (-1)^n4 = -chi(-D2).
    F4Factorization fac = split_f4_type_one(F, report.x0, report.C, report.D);
    int n4 = static_cast<int>(factor_degrees(F, fac.P4).size());
    int lhs = (n4 % 2 == 0) ? 1 : -1;
    return lhs == -F.legendre(F.neg(report.D2));
}

std::pair<std::vector<int>, std::vector<int>> predict_splitting(const Fp& F, u64 D2) {
    int chi = F.legendre(D2);
    if (chi == 0) throw invalid_parameter_error("D2 = 0 means the curve is singular");
    bool p1mod4 = F.p() % 4 == 1;
    if (chi == 1) {
        return p1mod4 ? std::make_pair(std::vector<int>{1, 1}, std::vector<int>{4})
                      : std::make_pair(std::vector<int>{1, 1}, std::vector<int>{2, 2});
    }
    return p1mod4 ? std::make_pair(std::vector<int>{2}, std::vector<int>{2, 2})
                  : std::make_pair(std::vector<int>{2}, std::vector<int>{4});
}

bool has_point_of_order_4(const Weierstrass& E) {
    return !classify_two_torsion(E).four_torsion.empty();
}

} // namespace ec
