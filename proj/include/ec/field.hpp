#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "ec/errors.hpp"

namespace ec {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

bool is_prime_u64(u64 n);

// Arithmetic in F_p for an odd prime p > 3.  Elements are canonical residues
// in [0, p).  All operations are pure; Fp is freely copyable.
class Fp {
public:
    explicit Fp(u64 p);

    u64 p() const { return p_; }

    u64 reduce(i64 v) const {
        i64 m = v % static_cast<i64>(p_);
        if (m < 0) m += static_cast<i64>(p_);
        return static_cast<u64>(m);
    }

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        if (s >= p_ || s < a) s -= p_;
        return s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const {
        return static_cast<u64>(static_cast<u128>(a) * b % p_);
    }
    u64 sq(u64 a) const { return mul(a, a); }

    u64 pow(u64 a, u64 e) const;
    u64 inv(u64 a) const;
    u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }

    // Quadratic character: 0 iff a = 0, +1 for nonzero squares, -1 otherwise.
    int legendre(u64 a) const;

    // Both square roots (r, p - r), smaller canonical residue first;
    // empty when a is a nonresidue.  sqrt(0) = (0, 0).
    std::optional<std::pair<u64, u64>> sqrt(u64 a) const;

    // Smallest quadratic nonresidue.
    u64 nonresidue() const;

    bool operator==(const Fp& o) const { return p_ == o.p_; }

private:
    u64 p_;
};

} // namespace ec
