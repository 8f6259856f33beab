#pragma once

#include <utility>
#include <vector>

#include "zn/arith.hpp"

namespace zn {

/// A modulus bundled with its factorization and phi(n). Immutable after
/// construction; safe to share across threads.
struct ZnContext {
    u64 n;
    Factorization factorization;
    u64 phi;

    explicit ZnContext(u64 modulus)
        : n(modulus), factorization(factorize(modulus)), phi(euler_phi(factorization)) {}
};

enum class Comparison { Equal, Less, Greater, Incomparable };

struct ClassificationFlags {
    bool is_unit = false;
    bool is_nilpotent = false;
    bool is_projection = false;
    bool is_gp = false;

    friend bool operator==(const ClassificationFlags&, const ClassificationFlags&) = default;
};

struct ElementSets {
    std::vector<u64> gp;
    std::vector<u64> projections;
    std::vector<u64> units;
    std::vector<u64> nilpotents;
};

/// Cover relation of (Z_n, <=); edges are (lower, upper) pairs sorted by
/// (lower, upper).
struct HasseDiagram {
    u64 n = 1;
    std::vector<std::pair<u64, u64>> edges;
};

/// The order: a <= b iff a = b or a*b = a (mod n).
bool leq(const ZnContext& ctx, u64 a, u64 b);

Comparison compare(const ZnContext& ctx, u64 a, u64 b);

/// CRT-componentwise classification: unit iff every component is a unit,
/// nilpotent iff every component is 0 mod p_i, generalized projection iff
/// every component is 0 or a unit mod p_i^{a_i}; projection iff a^2 = a.
ClassificationFlags classify(const ZnContext& ctx, u64 a);

/// Regularity via gcd(a, n) = gcd(a^2, n).
bool is_regular_gcd(const ZnContext& ctx, u64 a);

/// Regularity via a^{phi(n)+1} = a (mod n).
bool is_regular_power(const ZnContext& ctx, u64 a);

ElementSets element_sets(const ZnContext& ctx);

inline constexpr u64 kHasseCap = 5000;

/// Throws std::length_error when n exceeds the cap.
HasseDiagram hasse(const ZnContext& ctx, u64 cap = kHasseCap);

}  // namespace zn
