#include "zn/verify.hpp"

#include <atomic>
#include <thread>

#include "zn/oracle.hpp"
#include "zn/structure.hpp"

namespace zn::verify {

namespace {

VerifyRow verify_one(u64 n, const VerifyOptions& opt) {
    const ZnContext ctx(n);
    VerifyRow row;
    row.n = n;

    const auto theorem = structure::is_lattice(ctx);
    const auto brute = oracle::brute_is_lattice(ctx, opt.oracle_cap);
    row.is_lattice_theorem = theorem.is_lattice;
    row.is_lattice_oracle = brute.is_lattice;
    bool agree = theorem.is_lattice == brute.is_lattice;
    if (!brute.is_lattice) {
        row.has_witness = true;
        row.witness_a = brute.a;
        row.witness_b = brute.b;
    }

    const auto sets = element_sets(ctx);
    row.gp_count = sets.gp.size();
    row.p_count = sets.projections.size();
    row.n_count = sets.nilpotents.size();
    row.u_count = sets.units.size();

    if (n <= opt.pair_cap) {
        for (u64 a = 0; a < n && agree; ++a) {
            for (u64 b = a; b < n && agree; ++b) {
                const auto sj = structure::join(ctx, a, b);
                const auto bj = oracle::brute_join(ctx, a, b);
                agree = sj.exists == bj.has_value() && (!sj.exists || sj.value == *bj);
                if (!agree) break;
                const auto sm = structure::meet(ctx, a, b);
                const auto bm = oracle::brute_meet(ctx, a, b);
                agree = sm.exists == bm.has_value() && (!sm.exists || sm.value == *bm);
            }
        }
    }

    for (u64 a : sets.gp) {
        if (!agree) break;
        const u64 fu = structure::upper_covering_projection(ctx, a);
        const u64 pu = structure::upper_covering_via_power(ctx, a);
        const u64 fl = structure::lower_covering_projection(ctx, a);
        const auto [bl, bu] = oracle::brute_covering_projections(ctx, a);
        agree = fu == pu && fu == bu && fl == bl;
    }

    row.agree = agree;
    return row;
}

}  // namespace

VerifyReport run(const VerifyOptions& opt) {
    if (opt.lo < 1 || opt.lo > opt.hi) throw std::invalid_argument("verify: bad range");
    VerifyReport rep;
    rep.lo = opt.lo;
    rep.hi = opt.hi;
    rep.per_n.resize(opt.hi - opt.lo + 1);

    const unsigned jobs = std::max(1u, opt.jobs);
    std::atomic<u64> next{opt.lo};
    auto worker = [&] {
        for (u64 n = next.fetch_add(1); n <= opt.hi; n = next.fetch_add(1))
            rep.per_n[n - opt.lo] = verify_one(n, opt);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const auto& row : rep.per_n) {
        if (row.is_lattice_oracle)
            ++rep.lattices;
        else
            ++rep.non_lattices;
        if (!row.agree) ++rep.disagreements;
    }
    return rep;
}

}  // namespace zn::verify
