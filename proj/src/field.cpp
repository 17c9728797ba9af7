#include "ec/field.hpp"

namespace ec {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic Miller-Rabin base set for 64-bit inputs.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Fp::Fp(u64 p) : p_(p) {
    if (p <= 3) throw invalid_parameter_error("field characteristic must exceed 3");
    if (!is_prime_u64(p)) throw invalid_parameter_error("field modulus is not prime");
}

u64 Fp::pow(u64 a, u64 e) const { return powmod(a, e, p_); }

u64 Fp::inv(u64 a) const {
    if (a == 0) throw invalid_parameter_error("division by zero in F_p");
    return pow(a, p_ - 2);
}

int Fp::legendre(u64 a) const {
    a %= p_;
    if (a == 0) return 0;
    return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

u64 Fp::nonresidue() const {
    for (u64 n = 2;; ++n) {
        if (legendre(n) == -1) return n;
    }
}

std::optional<std::pair<u64, u64>> Fp::sqrt(u64 a) const {
    a %= p_;
    if (a == 0) return std::make_pair(0ull, 0ull);
    if (legendre(a) != 1) return std::nullopt;

    u64 r;
    if (p_ % 4 == 3) {
        r = pow(a, (p_ + 1) / 4);
    } else {
        // Tonelli-Shanks.
        u64 q = p_ - 1;
        int s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        u64 z = nonresidue();
        u64 c = pow(z, q);
        r = pow(a, (q + 1) / 2);
        u64 t = pow(a, q);
        int m = s;
        while (t != 1) {
            u64 tt = t;
            int i = 0;
            while (tt != 1) { tt = mul(tt, tt); ++i; }
            u64 b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
            r = mul(r, b);
            c = mul(b, b);
            t = mul(t, c);
            m = i;
        }
    }
    u64 other = p_ - r;
    if (other < r) std::swap(r, other);
    return std::make_pair(r, other);
}

} // namespace ec
