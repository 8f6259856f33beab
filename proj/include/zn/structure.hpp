#pragma once

#include "zn/poset.hpp"

namespace zn::structure {

struct ExtremeResult {
    bool exists = false;
    u64 element = 0;
};

enum class MeetJoinPath { Comparable, CosetSmallest, IdealLargest };

struct MeetJoinResult {
    bool exists = false;
    u64 value = 0;
    MeetJoinPath path = MeetJoinPath::Comparable;
    u64 d = 0;  // gcd used on the coset/ideal path, 0 on the comparable path
};

struct LatticeReport {
    bool is_lattice = false;
    u64 failing_ideal = 0;  // divisor >= 3 whose ideal has no largest element
};

/// Componentwise criterion for a < e with a a generalized projection and e a
/// projection other than 1: wherever e vanishes mod p_i^{a_i}, so must a.
bool below_projection(const ZnContext& ctx, u64 a, u64 e);

/// Dual criterion for f < a: wherever f does not vanish mod p_j^{a_j}, a must
/// be 1 there.
bool above_projection(const ZnContext& ctx, u64 a, u64 f);

/// The unique projection covering a in the GP poset: a itself for
/// projections, 1 for non-projection units, otherwise b^{phi(n/b)} with b the
/// product of the prime powers on which a vanishes.
u64 upper_covering_projection(const ZnContext& ctx, u64 a);

/// Same value through the power route: the smallest k >= 2 with a^k = a gives
/// a^{k-1}.
u64 upper_covering_via_power(const ZnContext& ctx, u64 a);

/// The unique projection covered by a: a for projections, otherwise
/// b^{phi(n/b)} with b the product of the prime powers where a is not 1.
u64 lower_covering_projection(const ZnContext& ctx, u64 a);

/// Largest element of the ideal (g), found by direct scan of its n/g members.
ExtremeResult ideal_largest(const ZnContext& ctx, u64 g);

/// Smallest element of the coset (g)+1, by direct scan.
ExtremeResult coset_smallest(const ZnContext& ctx, u64 g);

/// sup{a, b}: the larger element when comparable, otherwise the smallest
/// element of the coset (n/d)+1 with d = gcd(gcd(a,b), n).
MeetJoinResult join(const ZnContext& ctx, u64 a, u64 b);

/// inf{a, b}: the smaller element when comparable, otherwise the largest
/// element of the ideal (n/d) with d = gcd(gcd(a-1,b-1), n).
MeetJoinResult meet(const ZnContext& ctx, u64 a, u64 b);

/// join restricted to generalized projections; existence and GP membership of
/// the result are asserted (std::logic_error on violation).
u64 gp_join(const ZnContext& ctx, u64 a, u64 b);

/// meet under the precondition a, b, a-1, b-1 all generalized projections;
/// precondition failures raise std::invalid_argument, internal-consistency
/// failures std::logic_error.
u64 gp_meet(const ZnContext& ctx, u64 a, u64 b);

/// Z_n is a lattice iff every ideal (n1) with n1 >= 3 and n1 | n has a
/// largest element.
LatticeReport is_lattice(const ZnContext& ctx);

}  // namespace zn::structure
