#include "ec/cm.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

#include "ec/forms.hpp"
#include "ec/isogeny.hpp"

namespace ec {

ChiTable::ChiTable(const Fp& F) : p(F.p()), chi(F.p(), -1) {
    chi[0] = 0;
    for (u64 x = 1; x <= (p - 1) / 2; ++x) chi[static_cast<u64>(static_cast<u128>(x) * x % p)] = 1;
}

u64 count_points(const Weierstrass& E, const ChiTable& chi) {
    const Fp& F = E.F;
    Poly f = division_cubic(E);
    i64 sum = 0;
    for (u64 x = 0; x < F.p(); ++x) sum += chi(poly_eval(F, f, x));
    return static_cast<u64>(static_cast<i64>(F.p()) + 1 + sum);
}

u64 count_points(const Weierstrass& E) {
    if (E.F.p() > kCountBound)
        throw resource_limit_error("naive point counting bounded at p <= 10^7");
    ChiTable chi(E.F);
    return count_points(E, chi);
}

namespace {

FrobeniusData frobenius_from_order(const Weierstrass& E, u64 order) {
    const u64 p = E.F.p();
    FrobeniusData fd;
    fd.p = p;
    fd.order = order;
    fd.U = static_cast<i64>(p) + 1 - static_cast<i64>(order);
    if (fd.U % static_cast<i64>(p) == 0)
        throw unsupported_curve_error("supersingular curve has no imaginary quadratic CM order");
    fd.disc_pi = fd.U * fd.U - 4 * static_cast<i64>(p);
    // Extract the square part of -disc by trial division.
    i64 n = -fd.disc_pi;
    i64 v = 1, d = n;
    for (i64 q = 2; q * q <= d; ++q) {
        while (d % (q * q) == 0) {
            d /= q * q;
            v *= q;
        }
    }
    if ((-d) % 4 == -3 || (-d) % 4 == 1) { // -d = 1 mod 4
        fd.D_K = -d;
        fd.V = v;
    } else {
        fd.D_K = -4 * d;
        if (v % 2 != 0) throw consistency_error("Frobenius discriminant not 0 or 1 mod 4");
        fd.V = v / 2;
    }
    return fd;
}

} // namespace

FrobeniusData frobenius_data(const Weierstrass& E, const ChiTable& chi) {
    return frobenius_from_order(E, count_points(E, chi));
}

FrobeniusData frobenius_data(const Weierstrass& E) {
    return frobenius_from_order(E, count_points(E));
}

CMClassification classify_cm_predict(i64 D, bool v_even, int chi4) {
    if (D >= 0 || ((D % 4 + 4) % 4 != 0 && (D % 4 + 4) % 4 != 1))
        throw invalid_parameter_error("discriminant must be negative and 0 or 1 mod 4");
    CMClassification c{D, v_even, TorsionType::None, MontgomeryColumn::No, EdwardsColumn::None};
    if (D % 2 != 0) {
        i64 d8 = (D % 8 + 8) % 8;
        if (d8 == 1) {
            c = {D, v_even, TorsionType::III, MontgomeryColumn::Yes, EdwardsColumn::TwistedNotComplete};
        } else if (v_even) {
            // The 5 mod 8 row: type III always, but the Montgomery model
            // exists iff chi4(p) = +1 (see the header note).
            if (chi4 > 0) {
                c = {D, v_even, TorsionType::III, MontgomeryColumn::Yes,
                     EdwardsColumn::TwistedNotComplete};
            } else if (chi4 < 0) {
                c = {D, v_even, TorsionType::III, MontgomeryColumn::No, EdwardsColumn::None};
            } else {
                c = {D, v_even, TorsionType::III, MontgomeryColumn::Undetermined,
                     EdwardsColumn::TwistedAtBest};
            }
        } else {
            c = {D, v_even, TorsionType::None, MontgomeryColumn::No, EdwardsColumn::None};
        }
        return c;
    }
    i64 d16 = (D % 16 + 16) % 16;
    if (d16 == 0 || d16 == 4) {
        c = v_even ? CMClassification{D, v_even, TorsionType::III, MontgomeryColumn::Yes,
                                      EdwardsColumn::TwistedNotComplete}
                   : CMClassification{D, v_even, TorsionType::I, MontgomeryColumn::Yes,
                                      EdwardsColumn::Complete};
    } else {
        c = v_even ? CMClassification{D, v_even, TorsionType::III, MontgomeryColumn::Undetermined,
                                      EdwardsColumn::TwistedAtBest}
                   : CMClassification{D, v_even, TorsionType::I, MontgomeryColumn::No,
                                      EdwardsColumn::None};
    }
    return c;
}

int jacobi(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0) throw invalid_parameter_error("Jacobi symbol needs odd positive n");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

GenusCharacters generic_characters(i64 D, i64 p) {
    if (D >= 0 || ((D % 4 + 4) % 4 != 0 && (D % 4 + 4) % 4 != 1))
        throw invalid_parameter_error("discriminant must be negative and 0 or 1 mod 4");
    if (p <= 0 || std::gcd(static_cast<long long>(p), 2 * std::llabs(D)) != 1)
        throw invalid_parameter_error("generic characters need gcd(p, 2D) = 1");

    GenusCharacters out;
    i64 m = -D;
    // odd prime divisors of D
    for (i64 q = 3; q * q <= m; q += 2) {
        if (m % q != 0) continue;
        out.characters.emplace_back("(p/" + std::to_string(q) + ")", jacobi(p, q));
        while (m % q == 0) m /= q;
    }
    while (m % 2 == 0) m /= 2;
    if (m > 1) out.characters.emplace_back("(p/" + std::to_string(m) + ")", jacobi(p, m));

    int chi4 = (p % 4 == 1) ? 1 : -1;
    i64 p8 = p % 8;
    int chi8 = (p8 == 1 || p8 == 7) ? 1 : -1;
    if (D % 2 == 0) {
        i64 q8 = ((D / 4) % 8 + 8) % 8;
        if (q8 == 3 || q8 == 4 || q8 == 7) {
            out.characters.emplace_back("chi4", chi4);
        } else if (q8 == 2) {
            out.characters.emplace_back("chi8", chi8);
        } else if (q8 == 6) {
            out.characters.emplace_back("chi4*chi8", chi4 * chi8);
        } else if (q8 == 0) {
            out.characters.emplace_back("chi4", chi4);
            out.characters.emplace_back("chi8", chi8);
        }
    }
    out.all_plus_one = std::all_of(out.characters.begin(), out.characters.end(),
                                   [](const auto& c) { return c.second == 1; });
    return out;
}

int class_number(i64 D) {
    if (D >= 0 || ((D % 4 + 4) % 4 != 0 && (D % 4 + 4) % 4 != 1))
        throw invalid_parameter_error("discriminant must be negative and 0 or 1 mod 4");
    int count = 0;
    for (i64 A = 1; 3 * A * A <= -D; ++A) {
        for (i64 B = -A + 1; B <= A; ++B) {
            i64 num = B * B - D;
            if (num % (4 * A) != 0) continue;
            i64 C = num / (4 * A);
            if (C < A) continue;
            if (A == C && B < 0) continue;
            if (std::gcd(std::gcd(A, std::llabs(B)), C) != 1) continue;
            ++count;
        }
    }
    return count;
}

namespace {

int ord2(i64 v) {
    int n = 0;
    while (v % 2 == 0) {
        v /= 2;
        ++n;
    }
    return n;
}

} // namespace

int volcano_level(const Weierstrass& E, const FrobeniusData& frob, const ChiTable&) {
    return volcano_level(E, frob);
}

int volcano_level(const Weierstrass& E, const FrobeniusData& frob) {
    int m = ord2(frob.V);
    if (m == 0) return 0;
    TwoTorsionReport rep = classify_two_torsion(E);
    if (rep.type != TorsionType::III) return m; // type I sits on the floor
    // BFS over the 2-isogeny graph to the nearest floor (type I) curve.
    std::set<u64> seen{j_invariant(E)};
    std::deque<std::pair<Weierstrass, int>> queue{{E, 0}};
    while (!queue.empty()) {
        auto [cur, dist] = queue.front();
        queue.pop_front();
        for (u64 x0 : poly_roots(cur.F, division_cubic(cur))) {
            IsogenyStep step = velu_2_isogeny(cur, x0);
            u64 tj = j_invariant(step.target);
            if (!seen.insert(tj).second) continue;
            TwoTorsionReport trep = classify_two_torsion(step.target);
            if (trep.type == TorsionType::I) return m - (dist + 1);
            queue.emplace_back(step.target, dist + 1);
        }
    }
    throw consistency_error("volcano has 2-torsion everywhere but no floor");
}

EdwardsInvariantCount count_complete_edwards_invariants(u64 p, i64 t) {
    Fp F(p);
    if (p > 200'000) throw resource_limit_error("floor-invariant count is an exhaustive sweep");
    if (t == 0 || static_cast<u64>(t * t) >= 4 * p)
        throw invalid_parameter_error("trace violates the Hasse bound or is supersingular");

    i64 disc = t * t - 4 * static_cast<i64>(p);
    i64 n0 = -disc, v0 = 1, d0 = n0;
    for (i64 q = 2; q * q <= d0; ++q) {
        while (d0 % (q * q) == 0) {
            d0 /= q * q;
            v0 *= q;
        }
    }
    i64 D_K, V;
    if ((-d0 % 4 + 4) % 4 == 1) {
        D_K = -d0;
        V = v0;
    } else {
        D_K = -4 * d0;
        V = v0 / 2;
    }
    int n = ord2(V);
    if (n < 1)
        throw invalid_parameter_error("trace decomposition has no 2-power part (n = 0)");
    i64 v = V >> n;

    int kron2;
    if (D_K % 2 == 0) {
        kron2 = 0;
    } else {
        kron2 = ((D_K % 8 + 8) % 8 == 1) ? 1 : -1;
    }
    u64 predicted =
        (1ull << (n - 1)) * static_cast<u64>(2 - kron2) * static_cast<u64>(class_number(D_K));

    // Observed: enumerate j-invariants via curve_from_j and its twists.
    ChiTable chi(F);
    u64 g = F.nonresidue();
    // a generator of F_p^* for the extra-twist classes at j = 0, 1728
    u64 gen = 0;
    {
        std::vector<u64> prime_factors;
        u64 q = p - 1;
        for (u64 f = 2; f * f <= q; ++f) {
            if (q % f == 0) {
                prime_factors.push_back(f);
                while (q % f == 0) q /= f;
            }
        }
        if (q > 1) prime_factors.push_back(q);
        for (u64 cand = 2;; ++cand) {
            bool ok = true;
            for (u64 f : prime_factors) {
                if (F.pow(cand, (p - 1) / f) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen = cand;
                break;
            }
        }
    }

    u64 abs_t = static_cast<u64>(t < 0 ? -t : t);
    u64 observed = 0;
    u64 j1728 = F.reduce(1728);
    for (u64 j = 0; j < p; ++j) {
        std::vector<Weierstrass> models;
        if (j == 0) {
            u64 a6 = 1;
            for (int i = 0; i < 6; ++i, a6 = F.mul(a6, gen)) models.push_back(make_curve(F, 0, 0, a6));
        } else if (j == j1728) {
            u64 a4 = 1;
            for (int i = 0; i < 4; ++i, a4 = F.mul(a4, gen)) models.push_back(make_curve(F, 0, a4, 0));
        } else {
            models.push_back(curve_from_j(F, j, 1));
            models.push_back(curve_from_j(F, j, g));
        }
        for (const auto& E : models) {
            u64 order = count_points(E, chi);
            i64 U = static_cast<i64>(p) + 1 - static_cast<i64>(order);
            if (static_cast<u64>(U < 0 ? -U : U) != abs_t) continue;
            TwoTorsionReport rep = classify_two_torsion(E);
            if (rep.type == TorsionType::I && F.legendre(rep.D2) == 1) {
                ++observed;
                break;
            }
        }
    }
    return EdwardsInvariantCount{t, n, v, D_K, predicted, observed};
}

ExclusionReport check_fundamental_exclusion(u64 p) {
    Fp F(p);
    if (p > 2000) throw resource_limit_error("fundamental-exclusion sweep is exhaustive in p^2");
    ChiTable chi(F);
    ExclusionReport rep;
    for (u64 a4 = 0; a4 < p; ++a4) {
        for (u64 a6 = 0; a6 < p; ++a6) {
            Weierstrass E{F, 0, a4, a6};
            if (discriminant(E) == 0) continue;
            u64 order = count_points(E, chi);
            i64 U = static_cast<i64>(p) + 1 - static_cast<i64>(order);
            if (U % static_cast<i64>(p) == 0) continue;
            ++rep.curves_scanned;
            FrobeniusData fd = frobenius_from_order(E, order);
            if (fd.V != 1) continue;
            ++rep.fundamental_count;
            TwoTorsionReport tor = classify_two_torsion(E);
            if (tor.type == TorsionType::I && F.legendre(tor.D2) == 1) ++rep.violations;
        }
    }
    return rep;
}

} // namespace ec
