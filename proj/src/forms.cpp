#include "ec/forms.hpp"

namespace ec {

namespace {

bool iso_holds(const Weierstrass& E, const Weierstrass& Ep, u64 u2, u64 r) {
    const Fp& F = E.F;
    u64 u4 = F.sq(u2);
    u64 u6 = F.mul(u4, u2);
    if (F.mul(u2, Ep.a2) != F.add(E.a2, F.mul(3, r))) return false;
    u64 rhs4 = F.add(E.a4, F.add(F.mul(F.mul(2, r), E.a2), F.mul(3, F.sq(r))));
    if (F.mul(u4, Ep.a4) != rhs4) return false;
    u64 rhs6 = F.add(F.add(E.a6, F.mul(r, E.a4)), F.add(F.mul(F.sq(r), E.a2), F.pow(r, 3)));
    return F.mul(u6, Ep.a6) == rhs6;
}

} // namespace

Weierstrass curve_from_j(const Fp& F, u64 j, u64 c) {
    j %= F.p();
    c %= F.p();
    if (c == 0) throw invalid_parameter_error("twist scale c must be nonzero");
    u64 j1728 = F.reduce(1728);
    if (j == 0 || j == j1728)
        throw invalid_parameter_error("j in {0, 1728}: supply such curves directly");
    u64 k = F.div(j, F.sub(j1728, j));
    u64 c2 = F.sq(c);
    return make_curve(F, 0, F.mul(F.mul(3, k), c2), F.mul(F.mul(2, k), F.mul(c2, c)));
}

std::vector<u64> u_from_j(const Fp& F, u64 j) {
    j %= F.p();
    // (u + 16)^3 - j u = u^3 + 48 u^2 + (768 - j) u + 4096
    Poly f{{F.reduce(4096), F.sub(F.reduce(768), j), F.reduce(48), 1}};
    return poly_roots(F, f);
}

std::optional<MontgomeryFromU> montgomery_from_u(const Fp& F, const X02Param& P) {
    u64 u = P.u % F.p();
    u64 c = P.c % F.p();
    if (c == 0) throw invalid_parameter_error("twist scale c must be nonzero");
    if (u == 0 || u == 8 || u == F.reduce(-64))
        throw invalid_parameter_error("u in {0, 8, -64} is outside the X_0(2) parameterization");
    u64 u64v = F.add(u, 64);
    auto v_roots = F.sqrt(u64v);
    if (!v_roots) return std::nullopt;
    u64 v = v_roots->first;
    u64 u16 = F.add(u, 16);
    u64 u8 = F.sub(u, 8);
    u64 k = F.div(F.mul(F.mul(12, c), u16), F.mul(u8, v));
    u64 A = F.neg(F.div(v, 4));
    MontgomeryFromU out{make_montgomery(F, A, k), v, k, F.div(F.mul(c, u16), u8)};
    return out;
}

std::optional<MontgomeryFromCurve> montgomery_from_type_one(const Weierstrass& E,
                                                            const TwoTorsionReport& report) {
    const Fp& F = E.F;
    if (report.type == TorsionType::None)
        throw invalid_parameter_error("Montgomery recovery needs rational 2-torsion");
    std::vector<u64> distinct = report.roots;
    for (size_t i = 0; i < distinct.size(); ++i) {
        u64 x0 = distinct[i];
        if (i > 0 && x0 == distinct[i - 1]) continue;
        u64 c2 = F.add(E.a2, F.mul(3, x0));
        u64 c1 = F.add(F.add(F.mul(3, F.sq(x0)), F.mul(F.mul(2, E.a2), x0)), E.a4);
        if (F.legendre(c1) != 1) continue;
        u64 s = F.sqrt(c1)->first;
        return MontgomeryFromCurve{make_montgomery(F, F.div(c2, s), s), x0, s};
    }
    return std::nullopt;
}

Point curve_point_to_montgomery(const MontgomeryFromCurve& conv, const Point& P) {
    if (P.infinity) return P;
    const Fp& F = conv.M.F;
    return Point::affine(F.div(F.sub(P.x, conv.x0), conv.s), F.div(P.y, F.sq(conv.s)));
}

Point montgomery_point_to_curve(const MontgomeryFromCurve& conv, const Point& P) {
    if (P.infinity) return P;
    const Fp& F = conv.M.F;
    return Point::affine(F.add(F.mul(P.x, conv.s), conv.x0), F.mul(P.y, F.sq(conv.s)));
}

Weierstrass kubert_curve(const Fp& F, u64 b) {
    b %= F.p();
    u64 d = F.add(F.mul(16, b), 1);
    if (b == 0 || d == 0)
        throw invalid_parameter_error("Kubert parameter needs b (16b + 1) != 0");
    // (X - 4b)(X^2 + X - 4b) = X^3 + (1 - 4b) X^2 - 8b X + 16 b^2
    return make_curve(F, F.sub(1, F.mul(4, b)), F.neg(F.mul(8, b)), F.mul(16, F.sq(b)));
}

u64 kubert_j(const Fp& F, u64 b) {
    b %= F.p();
    u64 d = F.add(F.mul(16, b), 1);
    if (b == 0 || d == 0)
        throw invalid_parameter_error("Kubert parameter needs b (16b + 1) != 0");
    u64 num = F.add(F.add(F.mul(16, F.sq(b)), F.mul(16, b)), 1);
    return F.div(F.pow(num, 3), F.mul(F.pow(b, 4), d));
}

KubertFromTypeOne kubert_from_type_one(const Weierstrass& E, const TwoTorsionReport& report) {
    const Fp& F = E.F;
    if (report.type != TorsionType::I || F.legendre(report.D2) != 1)
        throw invalid_parameter_error("Kubert recovery needs type I with D2 a square");
    u64 x0 = report.x0, C = report.C;
    u64 z = F.sqrt(report.D2)->first;

    // u^2 = C + 2(x0 +- z), whichever sign yields a square.
    int sign = 0;
    u64 u2 = 0;
    for (int s : {+1, -1}) {
        u64 zz = s > 0 ? z : F.neg(z);
        u64 cand = F.add(C, F.mul(2, F.add(x0, zz)));
        if (F.legendre(cand) == 1) {
            sign = s;
            u2 = cand;
            break;
        }
    }
    if (sign == 0) throw consistency_error("neither sign of z yields a square u^2");

    u64 zz = sign > 0 ? z : F.neg(z);
    u64 four_u2 = F.mul(4, u2);
    u64 b1 = F.div(F.neg(zz), four_u2);
    u64 b2 = F.neg(F.div(F.add(F.add(F.mul(7, zz), F.mul(8, x0)), F.mul(4, C)), four_u2));

    for (u64 b : {b1, b2}) {
        if (b == 0 || F.add(F.mul(16, b), 1) == 0) continue;
        Weierstrass EK = kubert_curve(F, b);
        u64 r = F.div(F.add(F.mul(F.sub(1, F.mul(4, b)), u2), F.sub(x0, C)), 3);
        if (!iso_holds(E, EK, u2, r)) continue;
        u64 u = F.sqrt(u2)->first;
        return KubertFromTypeOne{b, u2, Isomorphism{u, r}};
    }
    throw consistency_error("no Kubert candidate certified by isomorphism");
}

TwistedEdwards edwards_from_kubert(const Fp& F, u64 b) {
    b %= F.p();
    u64 d = F.add(F.mul(16, b), 1);
    if (b == 0 || d == 0)
        throw invalid_parameter_error("Kubert parameter needs b (16b + 1) != 0");
    return make_twisted_edwards(F, 1, d);
}

std::pair<u64, u64> w_param_bridge(const Fp& F, u64 w) {
    w %= F.p();
    if (w == 0 || w == F.reduce(-16) || w == F.reduce(-8))
        throw invalid_parameter_error("w in {0, -8, -16} is outside the X_0(4) bridge");
    u64 u = F.add(F.sq(w), F.mul(16, w));
    return {u, F.add(w, 8)};
}

} // namespace ec
