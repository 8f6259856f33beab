#include <doctest.h>

#include <random>

#include "zn/arith.hpp"

using namespace zn;

TEST_CASE("factorize on known moduli") {
    CHECK(factorize(12).factors == std::vector<PrimePower>{{2, 2, 4}, {3, 1, 3}});
    CHECK(factorize(9).factors == std::vector<PrimePower>{{3, 2, 9}});
    CHECK(factorize(1).factors.empty());
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(kMaxModulus + 1), std::domain_error);
}

TEST_CASE("factorize reconstructs n") {
    for (u64 n = 1; n <= 10000; ++n) {
        const auto f = factorize(n);
        u64 prod = 1;
        u64 last_prime = 0;
        for (const auto& pp : f.factors) {
            CHECK(pp.prime > last_prime);
            CHECK(pp.exponent >= 1);
            last_prime = pp.prime;
            prod *= pp.value;
        }
        REQUIRE(prod == n);
    }
}

TEST_CASE("euler_phi on known values") {
    CHECK(euler_phi(factorize(12)) == 4);
    CHECK(euler_phi(factorize(1)) == 1);
    CHECK(euler_phi(factorize(9)) == 6);
}

TEST_CASE("euler_phi matches the coprime count") {
    for (u64 n = 1; n <= 2000; ++n) {
        u64 count = 0;
        for (u64 a = 1; a <= n; ++a)
            if (gcd(a, n) == 1) ++count;
        REQUIRE(euler_phi(factorize(n)) == count);
    }
}

TEST_CASE("gcd conventions") {
    CHECK(gcd(8, 12) == 4);
    CHECK(gcd(0, 9) == 9);
    CHECK(gcd(7, 12) == 1);
    CHECK(gcd(0, 0) == 0);
}

TEST_CASE("pow_mod basics") {
    CHECK(pow_mod(4, 2, 12) == 4);
    CHECK(pow_mod(3, 2, 12) == 9);
    CHECK(pow_mod(5, 5, 12) == 5);  // phi(12)+1 = 5, regular element
    CHECK(pow_mod(7, 0, 13) == 1);
    CHECK(pow_mod(7, 0, 1) == 0);
    CHECK(pow_mod(-1, 3, 12) == 11);
}

TEST_CASE("pow_mod exponent additivity") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const u64 n = rng() % 999'999'999'999ULL + 1;
        const u64 a = rng() % n;
        const u64 e1 = rng() % 1000, e2 = rng() % 1000;
        const u64 lhs = pow_mod(static_cast<long long>(a), e1 + e2, n);
        const u64 rhs = mul_mod(pow_mod(static_cast<long long>(a), e1, n),
                                pow_mod(static_cast<long long>(a), e2, n), n);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("pow_mod by repeated multiplication oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const u64 n = rng() % 10000 + 1;
        const u64 a = rng() % n;
        const u64 e = rng() % 64;
        u64 expect = 1 % n;
        for (u64 k = 0; k < e; ++k) expect = mul_mod(expect, a, n);
        REQUIRE(pow_mod(static_cast<long long>(a), e, n) == expect);
    }
}

TEST_CASE("residue_decompose components") {
    const auto f12 = factorize(12);
    CHECK(residue_decompose(8, f12).components ==
          std::vector<ResidueComponent>{{4, 0}, {3, 2}});
    CHECK(residue_decompose(1, f12).components ==
          std::vector<ResidueComponent>{{4, 1}, {3, 1}});
    for (const auto& c : residue_decompose(0, factorize(360)).components)
        CHECK(c.residue == 0);
}

TEST_CASE("decompose then recombine is the identity") {
    for (u64 n = 1; n <= 1000; ++n) {
        const auto f = factorize(n);
        for (u64 a = 0; a < n; ++a)
            REQUIRE(crt_recombine(residue_decompose(a, f), f) == a);
    }
}
