#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ec/errors.hpp"
#include "ec/field.hpp"

using namespace ec;

TEST_CASE("primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(1009));
    CHECK(is_prime_u64(999983));
    CHECK(is_prime_u64(2147483647));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(1001));
    CHECK_FALSE(is_prime_u64(1009ull * 1013));
    // strong pseudoprime to several small bases
    CHECK_FALSE(is_prime_u64(3215031751ull));
}

TEST_CASE("field constructor validates p") {
    CHECK_THROWS_AS(Fp(4), invalid_parameter_error);
    CHECK_THROWS_AS(Fp(3), invalid_parameter_error);
    CHECK_THROWS_AS(Fp(1001), invalid_parameter_error);
    CHECK_NOTHROW(Fp(5));
}

TEST_CASE("arithmetic mod 1009") {
    Fp F(1009);
    CHECK(F.reduce(-1) == 1008);
    CHECK(F.add(1000, 10) == 1);
    CHECK(F.sub(3, 5) == 1007);
    CHECK(F.mul(1008, 1008) == 1);
    CHECK(F.pow(3, 1008) == 1); // Fermat
    CHECK(F.mul(F.inv(271), 271) == 1);
    CHECK(F.div(545, 271) == F.mul(545, F.inv(271)));
    CHECK_THROWS_AS(F.inv(0), invalid_parameter_error);
}

TEST_CASE("legendre and sqrt oracles over 1009") {
    Fp F(1009);
    CHECK(F.legendre(793) == 1);
    CHECK(F.legendre(226) == 1);
    CHECK(F.legendre(0) == 0);
    auto r = F.sqrt(793);
    REQUIRE(r.has_value());
    CHECK(r->first == 271);
    CHECK(r->second == 738);
    CHECK(F.sqrt(0)->first == 0);
    // count nonresidues the slow way
    int nonres = 0;
    for (u64 a = 1; a < 1009; ++a)
        if (F.legendre(a) == -1) ++nonres;
    CHECK(nonres == 504);
}

TEST_CASE("sqrt round-trips on every residue, several prime shapes") {
    for (u64 p : {13u, 17u, 101u, 257u, 769u}) { // includes p = 1 mod 8 (2-adic depth)
        Fp F(p);
        for (u64 a = 0; a < p; ++a) {
            auto r = F.sqrt(a);
            if (F.legendre(a) == -1) {
                CHECK_FALSE(r.has_value());
            } else {
                REQUIRE(r.has_value());
                CHECK(F.sq(r->first) == a);
                CHECK(r->first <= r->second);
            }
        }
    }
}

TEST_CASE("nonresidue is minimal") {
    CHECK(Fp(1009).legendre(Fp(1009).nonresidue()) == -1);
    Fp F(73);
    u64 g = F.nonresidue();
    for (u64 a = 1; a < g; ++a) CHECK(F.legendre(a) == 1);
}
