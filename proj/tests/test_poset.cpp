#include <doctest.h>

#include <algorithm>
#include <set>

#include "zn/poset.hpp"

using namespace zn;

namespace {

std::vector<u64> brute_regular_some_power(const ZnContext& ctx) {
    // Condition: some m in [1, n] with a^{m+1} = a.
    std::vector<u64> out;
    for (u64 a = 0; a < ctx.n; ++a) {
        u64 x = mul_mod(a, a, ctx.n);  // a^2
        for (u64 m = 1; m <= ctx.n; ++m) {
            if (x == a) {
                out.push_back(a);
                break;
            }
            x = mul_mod(x, a, ctx.n);
        }
    }
    return out;
}

bool square_free(const ZnContext& ctx) {
    return std::all_of(ctx.factorization.factors.begin(), ctx.factorization.factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

}  // namespace

TEST_CASE("leq basics") {
    const ZnContext z8(8), z9(9);
    CHECK(leq(z8, 2, 5));
    CHECK_FALSE(leq(z9, 3, 6));
    CHECK_FALSE(leq(z9, 6, 3));
    for (u64 n : {2, 5, 12, 30}) {
        const ZnContext ctx(n);
        for (u64 a = 0; a < n; ++a) {
            CHECK(leq(ctx, 0, a));
            CHECK(leq(ctx, a, 1));
        }
    }
}

TEST_CASE("compare examples") {
    const ZnContext z12(12), z4(4);
    CHECK(compare(z12, 4, 6) == Comparison::Incomparable);
    CHECK(compare(z4, 2, 3) == Comparison::Less);
    CHECK(compare(z4, 3, 2) == Comparison::Greater);
    CHECK(compare(z12, 7, 7) == Comparison::Equal);
}

TEST_CASE("compare is antisymmetric in Less/Greater") {
    for (u64 n = 1; n <= 60; ++n) {
        const ZnContext ctx(n);
        for (u64 a = 0; a < n; ++a)
            for (u64 b = 0; b < n; ++b) {
                const auto ab = compare(ctx, a, b);
                const auto ba = compare(ctx, b, a);
                if (ab == Comparison::Less) REQUIRE(ba == Comparison::Greater);
                if (ab == Comparison::Greater) REQUIRE(ba == Comparison::Less);
                if (ab == Comparison::Equal) REQUIRE(a == b);
            }
    }
}

TEST_CASE("partial order axioms hold exhaustively") {
    for (u64 n = 1; n <= 300; ++n) {
        const ZnContext ctx(n);
        for (u64 a = 0; a < n; ++a) {
            REQUIRE(leq(ctx, a, a));
            for (u64 b = 0; b < n; ++b) {
                if (a != b && leq(ctx, a, b)) REQUIRE_FALSE(leq(ctx, b, a));
                if (!leq(ctx, a, b)) continue;
                for (u64 c = 0; c < n; ++c)
                    if (leq(ctx, b, c)) REQUIRE(leq(ctx, a, c));
            }
        }
    }
}

TEST_CASE("classification of paper example rings") {
    CHECK(element_sets(ZnContext(8)).gp == std::vector<u64>{0, 1, 3, 5, 7});
    CHECK(element_sets(ZnContext(8)).nilpotents == std::vector<u64>{0, 2, 4, 6});
    CHECK(element_sets(ZnContext(12)).nilpotents == std::vector<u64>{0, 6});
    CHECK(element_sets(ZnContext(12)).gp == std::vector<u64>{0, 1, 3, 4, 5, 7, 8, 9, 11});
    CHECK(element_sets(ZnContext(9)).gp == std::vector<u64>{0, 1, 2, 4, 5, 7, 8});
    CHECK(element_sets(ZnContext(9)).nilpotents == std::vector<u64>{0, 3, 6});
    CHECK(element_sets(ZnContext(4)).gp == std::vector<u64>{0, 1, 3});
    CHECK(element_sets(ZnContext(4)).nilpotents == std::vector<u64>{0, 2});
}

TEST_CASE("classification flag invariants") {
    for (u64 n = 1; n <= 200; ++n) {
        const ZnContext ctx(n);
        for (u64 a = 0; a < n; ++a) {
            const auto fl = classify(ctx, a);
            if (fl.is_projection) REQUIRE(fl.is_gp);
            if (fl.is_unit) REQUIRE(fl.is_gp);
            if (fl.is_unit && fl.is_nilpotent) REQUIRE(n == 1);
            if (fl.is_projection) REQUIRE(mul_mod(a, a, n) == a);
            if (fl.is_nilpotent)
                REQUIRE(pow_mod(static_cast<long long>(a), n, n) == 0);
        }
    }
}

TEST_CASE("n = 1 degenerate ring") {
    const ZnContext ctx(1);
    const auto fl = classify(ctx, 0);
    CHECK(fl.is_unit);
    CHECK(fl.is_nilpotent);
    CHECK(fl.is_projection);
    CHECK(fl.is_gp);
    CHECK(element_sets(ctx).gp == std::vector<u64>{0});
    CHECK(hasse(ctx).edges.empty());
}

TEST_CASE("regularity criteria examples") {
    const ZnContext z9(9), z12(12);
    CHECK(is_regular_gcd(z9, 2));
    CHECK_FALSE(is_regular_gcd(z9, 3));
    CHECK(is_regular_gcd(z9, 0));
    CHECK(is_regular_power(z12, 8));
    CHECK_FALSE(is_regular_power(z12, 2));
    CHECK(is_regular_power(z12, 1));
}

TEST_CASE("regularity equivalences agree") {
    for (u64 n = 1; n <= 200; ++n) {
        const ZnContext ctx(n);
        const auto some_power = brute_regular_some_power(ctx);
        for (u64 a = 0; a < n; ++a) {
            const bool gp = classify(ctx, a).is_gp;
            REQUIRE(gp == is_regular_gcd(ctx, a));
            REQUIRE(gp == is_regular_power(ctx, a));
            REQUIRE(gp == std::binary_search(some_power.begin(), some_power.end(), a));
        }
    }
}

TEST_CASE("GP is everything exactly for square-free n") {
    for (u64 n = 1; n <= 500; ++n) {
        const ZnContext ctx(n);
        REQUIRE((element_sets(ctx).gp.size() == n) == square_free(ctx));
    }
}

TEST_CASE("hasse diagrams of the worked examples") {
    CHECK(hasse(ZnContext(4)).edges ==
          std::vector<std::pair<u64, u64>>{{0, 2}, {2, 3}, {3, 1}});
    const std::set<std::pair<u64, u64>> z8{{0, 2}, {0, 4}, {0, 6}, {2, 5}, {4, 5}, {6, 5},
                                           {4, 3}, {4, 7}, {3, 1}, {7, 1}, {5, 1}};
    const auto d8 = hasse(ZnContext(8));
    CHECK(std::set<std::pair<u64, u64>>(d8.edges.begin(), d8.edges.end()) == z8);
    CHECK(d8.edges.size() == 11);
    CHECK(std::is_sorted(d8.edges.begin(), d8.edges.end()));
    CHECK_THROWS_AS(hasse(ZnContext(10), 9), std::length_error);
}

TEST_CASE("hasse equals the brute-force cover relation") {
    for (u64 n = 1; n <= 120; ++n) {
        const ZnContext ctx(n);
        std::vector<std::pair<u64, u64>> covers;
        for (u64 a = 0; a < n; ++a)
            for (u64 b = 0; b < n; ++b) {
                if (a == b || !leq(ctx, a, b)) continue;
                bool cover = true;
                for (u64 c = 0; c < n && cover; ++c)
                    cover = c == a || c == b || !(leq(ctx, a, c) && leq(ctx, c, b));
                if (cover) covers.emplace_back(a, b);
            }
        std::sort(covers.begin(), covers.end());
        REQUIRE(hasse(ctx).edges == covers);
    }
}
