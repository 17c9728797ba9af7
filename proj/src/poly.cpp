#include "ec/poly.hpp"

#include <algorithm>

namespace ec {

Poly poly_trim(Poly f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
    return f;
}

Poly poly_x() { return Poly{{0, 1}}; }
Poly poly_const(u64 a) { return a == 0 ? Poly{} : Poly{{a}}; }

Poly poly_add(const Fp& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        u64 x = i < a.c.size() ? a.c[i] : 0;
        u64 y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = F.add(x, y);
    }
    return poly_trim(std::move(r));
}

Poly poly_sub(const Fp& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        u64 x = i < a.c.size() ? a.c[i] : 0;
        u64 y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = F.sub(x, y);
    }
    return poly_trim(std::move(r));
}

Poly poly_mul(const Fp& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
        }
    }
    return poly_trim(std::move(r));
}

Poly poly_scale(const Fp& F, const Poly& a, u64 k) {
    if (k == 0) return {};
    Poly r = a;
    for (auto& x : r.c) x = F.mul(x, k);
    return r;
}

Poly poly_monic(const Fp& F, const Poly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return poly_scale(F, a, F.inv(a.lead()));
}

std::pair<Poly, Poly> poly_divmod(const Fp& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw invalid_parameter_error("polynomial division by zero");
    Poly rem = a;
    if (a.deg() < b.deg()) return {Poly{}, rem};
    Poly quo;
    quo.c.assign(a.deg() - b.deg() + 1, 0);
    u64 lead_inv = F.inv(b.lead());
    for (int i = a.deg(); i >= b.deg(); --i) {
        if (rem.deg() < i) continue;
        u64 q = F.mul(rem.c[i], lead_inv);
        if (q == 0) continue;
        quo.c[i - b.deg()] = q;
        for (int j = 0; j <= b.deg(); ++j) {
            rem.c[i - b.deg() + j] = F.sub(rem.c[i - b.deg() + j], F.mul(q, b.c[j]));
        }
        rem = poly_trim(std::move(rem));
    }
    return {poly_trim(std::move(quo)), poly_trim(std::move(rem))};
}

Poly poly_mod(const Fp& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).second;
}

Poly poly_gcd(const Fp& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

Poly poly_powmod(const Fp& F, const Poly& base, u64 e, const Poly& m) {
    Poly r = poly_const(1);
    Poly b = poly_mod(F, base, m);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, b), m);
        b = poly_mod(F, poly_mul(F, b, b), m);
        e >>= 1;
    }
    return r;
}

u64 poly_eval(const Fp& F, const Poly& f, u64 x) {
    u64 r = 0;
    for (size_t i = f.c.size(); i-- > 0;) r = F.add(F.mul(r, x), f.c[i]);
    return r;
}

Poly poly_derivative(const Fp& F, const Poly& f) {
    Poly r;
    if (f.deg() < 1) return r;
    r.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) {
        r.c[i - 1] = F.mul(f.c[i], F.reduce(static_cast<i64>(i)));
    }
    return poly_trim(std::move(r));
}

u64 poly_resultant(const Fp& F, Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    if (a.is_zero() || b.is_zero()) return 0;
    u64 res = 1;
    while (b.deg() > 0) {
        Poly r = poly_mod(F, a, b);
        if (r.is_zero()) return 0;
        // Res(a, b) = (-1)^{deg a * deg b} lc(b)^{deg a - deg r} Res(b, r)
        u64 factor = F.pow(b.lead(), static_cast<u64>(a.deg() - r.deg()));
        if ((a.deg() & 1) && (b.deg() & 1)) factor = F.neg(factor);
        res = F.mul(res, factor);
        a = std::move(b);
        b = std::move(r);
    }
    // deg b == 0: Res(a, b) = b^{deg a}
    return F.mul(res, F.pow(b.c[0], static_cast<u64>(a.deg())));
}

u64 poly_discriminant(const Fp& F, const Poly& f) {
    int d = f.deg();
    if (d < 1) throw invalid_parameter_error("discriminant needs degree >= 1");
    u64 r = poly_resultant(F, f, poly_derivative(F, f));
    r = F.div(r, f.lead());
    if ((static_cast<u64>(d) * (d - 1) / 2) & 1) r = F.neg(r);
    return r;
}

namespace {

// g: monic squarefree product of linear factors; collect its roots.
void split_linear(const Fp& F, const Poly& g, std::vector<u64>& out) {
    if (g.deg() <= 0) return;
    if (g.deg() == 1) {
        out.push_back(F.neg(g.c[0]));
        return;
    }
    if (g.deg() == 2) {
        // quadratic formula; discriminant is a square since g splits
        u64 disc = F.sub(F.sq(g.c[1]), F.mul(4, g.c[0]));
        auto s = F.sqrt(disc);
        if (!s) throw consistency_error("linear-part polynomial failed to split");
        u64 half = F.inv(2);
        out.push_back(F.mul(F.sub(s->first, g.c[1]), half));
        out.push_back(F.mul(F.sub(s->second, g.c[1]), half));
        return;
    }
    // Deterministic splitting: gcd with (X+a)^((p-1)/2) - 1 for a = 0, 1, ...
    for (u64 a = 0;; ++a) {
        Poly shifted{{a, 1}};
        Poly h = poly_powmod(F, shifted, (F.p() - 1) / 2, g);
        h = poly_sub(F, h, poly_const(1));
        Poly d = poly_gcd(F, h, g);
        if (d.deg() > 0 && d.deg() < g.deg()) {
            split_linear(F, d, out);
            split_linear(F, poly_divmod(F, g, d).first, out);
            return;
        }
    }
}

} // namespace

std::vector<u64> poly_roots(const Fp& F, const Poly& f) {
    Poly g = poly_trim(f);
    if (g.is_zero()) throw invalid_parameter_error("root-finding on the zero polynomial");
    std::vector<u64> roots;
    if (g.deg() == 0) return roots;
    Poly m = poly_monic(F, g);
    Poly xp = poly_powmod(F, poly_x(), F.p(), m);
    Poly lin = poly_gcd(F, poly_sub(F, xp, poly_x()), m);
    std::vector<u64> distinct;
    split_linear(F, lin, distinct);
    std::sort(distinct.begin(), distinct.end());
    for (u64 r : distinct) {
        Poly cur = m;
        Poly factor{{F.neg(r), 1}};
        while (true) {
            auto [q, rem] = poly_divmod(F, cur, factor);
            if (!rem.is_zero()) break;
            roots.push_back(r);
            cur = std::move(q);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<int> factor_degrees(const Fp& F, const Poly& f) {
    Poly cur = poly_monic(F, poly_trim(f));
    if (cur.is_zero()) throw invalid_parameter_error("factoring the zero polynomial");
    std::vector<int> degs;
    Poly h = poly_x();
    for (int d = 1; cur.deg() > 0; ++d) {
        if (2 * d > cur.deg()) {
            degs.push_back(cur.deg());
            break;
        }
        h = poly_powmod(F, h, F.p(), cur);
        Poly g = poly_gcd(F, poly_sub(F, h, poly_x()), cur);
        if (g.deg() > 0) {
            for (int i = 0; i < g.deg() / d; ++i) degs.push_back(d);
            cur = poly_divmod(F, cur, g).first;
            h = poly_mod(F, h, cur);
        }
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

} // namespace ec
