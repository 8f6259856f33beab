#include "zn/oracle.hpp"

#include <stdexcept>

namespace zn::oracle {

std::optional<u64> brute_join(const ZnContext& ctx, u64 a, u64 b) {
    std::vector<u64> ub;
    for (u64 c = 0; c < ctx.n; ++c)
        if (leq(ctx, a, c) && leq(ctx, b, c)) ub.push_back(c);
    for (u64 e : ub) {
        bool least = true;
        for (u64 x : ub)
            if (!leq(ctx, e, x)) {
                least = false;
                break;
            }
        if (least) return e;
    }
    return std::nullopt;
}

std::optional<u64> brute_meet(const ZnContext& ctx, u64 a, u64 b) {
    std::vector<u64> lb;
    for (u64 c = 0; c < ctx.n; ++c)
        if (leq(ctx, c, a) && leq(ctx, c, b)) lb.push_back(c);
    for (u64 e : lb) {
        bool greatest = true;
        for (u64 x : lb)
            if (!leq(ctx, x, e)) {
                greatest = false;
                break;
            }
        if (greatest) return e;
    }
    return std::nullopt;
}

namespace {

// Row-per-element bit matrix of the order relation.
struct Relation {
    u64 n;
    std::size_t words;
    std::vector<u64> up;    // up[a*words..] : set of c with a <= c
    std::vector<u64> down;  // down[a*words..] : set of c with c <= a

    explicit Relation(const ZnContext& ctx)
        : n(ctx.n), words((ctx.n + 63) / 64), up(n * words, 0), down(n * words, 0) {
        for (u64 a = 0; a < n; ++a)
            for (u64 b = 0; b < n; ++b)
                if (leq(ctx, a, b)) {
                    up[a * words + b / 64] |= u64{1} << (b % 64);
                    down[b * words + a / 64] |= u64{1} << (a % 64);
                }
    }

    const u64* up_row(u64 a) const { return up.data() + a * words; }
    const u64* down_row(u64 a) const { return down.data() + a * words; }
};

// Is there an e in `set` whose row covers `set` (i.e. e related to all of it)?
bool has_extreme(const u64* rows_base, std::size_t words, const std::vector<u64>& set) {
    for (std::size_t w = 0; w < words; ++w) {
        u64 bits = set[w];
        while (bits != 0) {
            const u64 e = w * 64 + static_cast<u64>(__builtin_ctzll(bits));
            bits &= bits - 1;
            const u64* row = rows_base + e * words;
            bool ok = true;
            for (std::size_t v = 0; v < words && ok; ++v) ok = (set[v] & ~row[v]) == 0;
            if (ok) return true;
        }
    }
    return false;
}

}  // namespace

LatticeWitness brute_is_lattice(const ZnContext& ctx, u64 cap) {
    if (ctx.n > cap) throw std::length_error("brute_is_lattice: n exceeds the configured cap");
    const u64 n = ctx.n;
    if (n <= 2) return {true, false, 0, 0};

    const Relation rel(ctx);
    std::vector<u64> scratch(rel.words);
    for (u64 a = 0; a < n; ++a) {
        for (u64 b = a + 1; b < n; ++b) {
            if (leq(ctx, a, b) || leq(ctx, b, a)) continue;
            for (std::size_t w = 0; w < rel.words; ++w)
                scratch[w] = rel.up_row(a)[w] & rel.up_row(b)[w];
            if (!has_extreme(rel.up.data(), rel.words, scratch))
                return {false, true, a, b};
            for (std::size_t w = 0; w < rel.words; ++w)
                scratch[w] = rel.down_row(a)[w] & rel.down_row(b)[w];
            if (!has_extreme(rel.down.data(), rel.words, scratch))
                return {false, false, a, b};
        }
    }
    return {true, false, 0, 0};
}

std::pair<u64, u64> brute_covering_projections(const ZnContext& ctx, u64 a) {
    const u64 n = ctx.n;
    if (a >= n) throw std::invalid_argument("residue out of range");
    if (gcd(a, n) != gcd(mul_mod(a, a, n), n))
        throw std::invalid_argument("element is not a generalized projection");

    std::vector<u64> below, above;
    for (u64 e = 0; e < n; ++e) {
        if (mul_mod(e, e, n) != e) continue;
        if (leq(ctx, e, a)) below.push_back(e);
        if (leq(ctx, a, e)) above.push_back(e);
    }

    u64 lower = 0, upper = 0;
    int maximal = 0, minimal = 0;
    for (u64 e : below) {
        bool is_max = true;
        for (u64 f : below)
            if (f != e && leq(ctx, e, f)) {
                is_max = false;
                break;
            }
        if (is_max) {
            ++maximal;
            lower = e;
        }
    }
    for (u64 e : above) {
        bool is_min = true;
        for (u64 f : above)
            if (f != e && leq(ctx, f, e)) {
                is_min = false;
                break;
            }
        if (is_min) {
            ++minimal;
            upper = e;
        }
    }
    if (maximal != 1 || minimal != 1)
        throw std::logic_error("brute_covering_projections: cover not unique");
    return {lower, upper};
}

std::optional<u64> brute_extreme(const ZnContext& ctx, const std::vector<u64>& members,
                                 Extreme direction) {
    if (members.empty()) throw std::invalid_argument("brute_extreme: empty member set");
    for (u64 e : members) {
        bool ok = true;
        for (u64 x : members) {
            const bool rel = direction == Extreme::Smallest ? leq(ctx, e, x) : leq(ctx, x, e);
            if (!rel) {
                ok = false;
                break;
            }
        }
        if (ok) return e;
    }
    return std::nullopt;
}

}  // namespace zn::oracle
