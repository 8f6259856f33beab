#include <doctest.h>

#include "zn/oracle.hpp"

using namespace zn;
using namespace zn::oracle;

TEST_CASE("brute_join / brute_meet examples") {
    const ZnContext z9(9), z12(12);
    CHECK_FALSE(brute_join(z9, 3, 6).has_value());
    CHECK(brute_join(z12, 4, 6) == 7);
    CHECK(brute_join(z12, 5, 1) == 1);
    CHECK_FALSE(brute_meet(z9, 4, 7).has_value());
    CHECK(brute_meet(z12, 7, 9) == 6);
    CHECK(brute_meet(z12, 5, 0) == 0);
}

TEST_CASE("brute_join / brute_meet are commutative") {
    for (u64 n = 1; n <= 60; ++n) {
        const ZnContext ctx(n);
        for (u64 a = 0; a < n; ++a)
            for (u64 b = a + 1; b < n; ++b) {
                REQUIRE(brute_join(ctx, a, b) == brute_join(ctx, b, a));
                REQUIRE(brute_meet(ctx, a, b) == brute_meet(ctx, b, a));
            }
    }
}

TEST_CASE("brute_is_lattice examples and witness order") {
    const auto r9 = brute_is_lattice(ZnContext(9));
    CHECK_FALSE(r9.is_lattice);
    CHECK(r9.a == 3);
    CHECK(r9.b == 6);
    CHECK(brute_is_lattice(ZnContext(12)).is_lattice);
    CHECK(brute_is_lattice(ZnContext(2)).is_lattice);
    CHECK_THROWS_AS(brute_is_lattice(ZnContext(50), 49), std::length_error);
}

TEST_CASE("brute_is_lattice matches the pairwise definition") {
    for (u64 n = 1; n <= 100; ++n) {
        const ZnContext ctx(n);
        bool all = true;
        for (u64 a = 0; a < n && all; ++a)
            for (u64 b = a + 1; b < n && all; ++b)
                all = brute_join(ctx, a, b).has_value() && brute_meet(ctx, a, b).has_value();
        REQUIRE(brute_is_lattice(ctx).is_lattice == all);
    }
}

TEST_CASE("brute_covering_projections examples") {
    const ZnContext z12(12);
    CHECK(brute_covering_projections(z12, 8) == std::pair<u64, u64>{0, 4});
    CHECK(brute_covering_projections(z12, 5) == std::pair<u64, u64>{9, 1});
    CHECK(brute_covering_projections(z12, 1) == std::pair<u64, u64>{1, 1});
    CHECK_THROWS_AS(brute_covering_projections(z12, 2), std::invalid_argument);
}

TEST_CASE("brute_extreme") {
    const ZnContext z9(9), z12(12);
    CHECK_FALSE(brute_extreme(z9, {0, 3, 6}, Extreme::Largest).has_value());
    CHECK(brute_extreme(z12, {1, 7}, Extreme::Smallest) == 7);
    CHECK(brute_extreme(z12, {5}, Extreme::Largest) == 5);
    CHECK(brute_extreme(z12, {5}, Extreme::Smallest) == 5);
    CHECK_THROWS_AS(brute_extreme(z12, {}, Extreme::Smallest), std::invalid_argument);
}
