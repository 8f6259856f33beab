#pragma once

#include <cstddef>
#include <vector>

#include "zn/arith.hpp"

namespace zn::verify {

struct VerifyOptions {
    u64 lo = 1;
    u64 hi = 1;
    unsigned jobs = 1;
    u64 pair_cap = 200;     // exhaustive join/meet cross-check up to this n
    u64 oracle_cap = 1000;  // brute-force lattice check refuses beyond this
};

struct VerifyRow {
    u64 n = 0;
    bool is_lattice_theorem = false;
    bool is_lattice_oracle = false;
    bool agree = false;
    bool has_witness = false;
    u64 witness_a = 0;
    u64 witness_b = 0;
    std::size_t gp_count = 0;
    std::size_t p_count = 0;
    std::size_t n_count = 0;
    std::size_t u_count = 0;
};

struct VerifyReport {
    u64 lo = 1;
    u64 hi = 1;
    std::vector<VerifyRow> per_n;  // ascending by n
    std::size_t lattices = 0;
    std::size_t non_lattices = 0;
    std::size_t disagreements = 0;
};

/// Cross-checks the theorem-based paths against the brute-force oracle for
/// every n in [lo, hi]: lattice verdicts, join/meet over all pairs (for
/// n <= pair_cap), and covering projections over all GP elements. Workers
/// share only immutable inputs; rows merge in ascending n.
VerifyReport run(const VerifyOptions& opt);

}  // namespace zn::verify
