#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zn/poset.hpp"

// Definition-level brute-force references. Everything here is derived from
// the order relation (zn::leq) and gcd alone; none of it calls into
// zn::structure, so the two sides of every cross-check stay independent.
namespace zn::oracle {

inline constexpr u64 kOracleCap = 1000;

/// sup{a, b} by scanning all common upper bounds for a least one.
std::optional<u64> brute_join(const ZnContext& ctx, u64 a, u64 b);

/// inf{a, b}, dually.
std::optional<u64> brute_meet(const ZnContext& ctx, u64 a, u64 b);

struct LatticeWitness {
    bool is_lattice = false;
    bool missing_join = false;  // when not a lattice: join vs meet failure
    u64 a = 0;
    u64 b = 0;  // lexicographically first failing pair
};

/// All-pairs sup/inf existence check. Throws std::length_error above the cap.
LatticeWitness brute_is_lattice(const ZnContext& ctx, u64 cap = kOracleCap);

/// Scans all projections for the unique maximal one below a and the unique
/// minimal one above a. Non-uniqueness raises std::logic_error.
/// Returns (lower, upper).
std::pair<u64, u64> brute_covering_projections(const ZnContext& ctx, u64 a);

enum class Extreme { Smallest, Largest };

/// Member of `members` comparable below (resp. above) every member, if any.
std::optional<u64> brute_extreme(const ZnContext& ctx, const std::vector<u64>& members,
                                 Extreme direction);

}  // namespace zn::oracle
