#include "zn/poset.hpp"

#include <algorithm>

namespace zn {

bool leq(const ZnContext& ctx, u64 a, u64 b) {
    return a == b || mul_mod(a, b, ctx.n) == a;
}

Comparison compare(const ZnContext& ctx, u64 a, u64 b) {
    if (a == b) return Comparison::Equal;
    const u64 p = mul_mod(a, b, ctx.n);
    if (p == a) return Comparison::Less;
    if (p == b) return Comparison::Greater;
    return Comparison::Incomparable;
}

ClassificationFlags classify(const ZnContext& ctx, u64 a) {
    ClassificationFlags fl{true, true, false, true};
    for (const auto& pp : ctx.factorization.factors) {
        const u64 r = a % pp.value;
        const bool unit = r % pp.prime != 0;
        if (!unit) fl.is_unit = false;
        if (a % pp.prime != 0) fl.is_nilpotent = false;
        if (r != 0 && !unit) fl.is_gp = false;
    }
    fl.is_projection = mul_mod(a, a, ctx.n) == a;
    return fl;
}

bool is_regular_gcd(const ZnContext& ctx, u64 a) {
    return gcd(a, ctx.n) == gcd(mul_mod(a, a, ctx.n), ctx.n);
}

bool is_regular_power(const ZnContext& ctx, u64 a) {
    return pow_mod(static_cast<long long>(a), ctx.phi + 1, ctx.n) == a % ctx.n;
}

ElementSets element_sets(const ZnContext& ctx) {
    ElementSets s;
    for (u64 a = 0; a < ctx.n; ++a) {
        const auto fl = classify(ctx, a);
        if (fl.is_gp) s.gp.push_back(a);
        if (fl.is_projection) s.projections.push_back(a);
        if (fl.is_unit) s.units.push_back(a);
        if (fl.is_nilpotent) s.nilpotents.push_back(a);
    }
    return s;
}

HasseDiagram hasse(const ZnContext& ctx, u64 cap) {
    if (ctx.n > cap) throw std::length_error("hasse: n exceeds the configured cap");
    const u64 n = ctx.n;
    HasseDiagram d{n, {}};
    if (n <= 1) return d;

    // Strict upper sets; |up[a]| = gcd(a, n), so the double scan below is
    // quadratic in n overall.
    std::vector<std::vector<u64>> up(n);
    for (u64 a = 0; a < n; ++a)
        for (u64 b = 0; b < n; ++b)
            if (a != b && mul_mod(a, b, n) == a) up[a].push_back(b);

    for (u64 a = 0; a < n; ++a) {
        for (u64 b : up[a]) {
            bool cover = true;
            for (u64 c : up[a]) {
                if (c != b && mul_mod(c, b, n) == c) {  // a < c < b
                    cover = false;
                    break;
                }
            }
            if (cover) d.edges.emplace_back(a, b);
        }
    }
    std::sort(d.edges.begin(), d.edges.end());
    return d;
}

}  // namespace zn
