#pragma once

#include <initializer_list>
#include <vector>

#include "ec/field.hpp"

namespace ec {

// Dense univariate polynomial over F_p; c[i] is the coefficient of X^i.
// The zero polynomial has an empty coefficient vector.
struct Poly {
    std::vector<u64> c;

    Poly() = default;
    explicit Poly(std::vector<u64> coeffs) : c(std::move(coeffs)) {}
    Poly(std::initializer_list<u64> coeffs) : c(coeffs) {}

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    u64 lead() const { return c.back(); }
};

Poly poly_trim(Poly f);
Poly poly_x();
Poly poly_const(u64 a);

Poly poly_add(const Fp& F, const Poly& a, const Poly& b);
Poly poly_sub(const Fp& F, const Poly& a, const Poly& b);
Poly poly_mul(const Fp& F, const Poly& a, const Poly& b);
Poly poly_scale(const Fp& F, const Poly& a, u64 k);
Poly poly_monic(const Fp& F, const Poly& a);

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Fp& F, const Poly& a, const Poly& b);
Poly poly_mod(const Fp& F, const Poly& a, const Poly& b);

// Monic gcd.
Poly poly_gcd(const Fp& F, Poly a, Poly b);

// base^e mod m.
Poly poly_powmod(const Fp& F, const Poly& base, u64 e, const Poly& m);

u64 poly_eval(const Fp& F, const Poly& f, u64 x);
Poly poly_derivative(const Fp& F, const Poly& f);

// Resultant and discriminant mod p (Euclidean remainder sequence).
u64 poly_resultant(const Fp& F, Poly a, Poly b);
u64 poly_discriminant(const Fp& F, const Poly& f);

// All roots in F_p with multiplicity, sorted ascending.  Exact: gcd with
// X^p - X isolates the linear part, then deterministic quadratic-character
// splitting.  Intended for small degrees (the artifact needs <= 6).
std::vector<u64> poly_roots(const Fp& F, const Poly& f);

// Degrees of the irreducible factors of a squarefree f, sorted ascending
// (distinct-degree factorization).
std::vector<int> factor_degrees(const Fp& F, const Poly& f);

} // namespace ec
