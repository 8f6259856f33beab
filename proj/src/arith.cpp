#include "zn/arith.hpp"

#include <numeric>
#include <utility>

namespace zn {

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    if (n > kMaxModulus) throw std::domain_error("factorize: modulus exceeds supported range");
    Factorization f;
    f.n = n;
    u64 m = n;
    for (u64 p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        PrimePower pp{p, 0, 1};
        while (m % p == 0) {
            m /= p;
            ++pp.exponent;
            pp.value *= p;
        }
        f.factors.push_back(pp);
    }
    if (m > 1) f.factors.push_back({m, 1, m});
    return f;
}

u64 euler_phi(const Factorization& f) {
    u64 phi = 1;
    for (const auto& pp : f.factors) phi *= (pp.value / pp.prime) * (pp.prime - 1);
    return phi;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 mul_mod(u64 a, u64 b, u64 n) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % n);
}

u64 pow_mod(long long base, u64 exp, u64 n) {
    if (n == 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    long long r = base % static_cast<long long>(n);
    u64 b = static_cast<u64>(r < 0 ? r + static_cast<long long>(n) : r);
    u64 acc = 1 % n;
    while (exp != 0) {
        if (exp & 1) acc = mul_mod(acc, b, n);
        b = mul_mod(b, b, n);
        exp >>= 1;
    }
    return acc;
}

ResidueVector residue_decompose(u64 a, const Factorization& f) {
    ResidueVector rv;
    rv.components.reserve(f.factors.size());
    for (const auto& pp : f.factors) rv.components.push_back({pp.value, a % pp.value});
    return rv;
}

namespace {

u64 inv_mod(u64 a, u64 m) {
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
    while (nr != 0) {
        long long q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) throw std::domain_error("inv_mod: argument not invertible");
    return static_cast<u64>(t < 0 ? t + static_cast<long long>(m) : t);
}

}  // namespace

u64 crt_recombine(const ResidueVector& rv, const Factorization& f) {
    if (rv.components.size() != f.factors.size())
        throw std::invalid_argument("crt_recombine: component count mismatch");
    const u64 n = f.n;
    u64 x = 0;
    for (std::size_t i = 0; i < rv.components.size(); ++i) {
        const u64 q = f.factors[i].value;
        const u64 m = n / q;  // coprime to q
        const u64 c = mul_mod(m % n, inv_mod(m % q, q), n);
        x = (x + mul_mod(rv.components[i].residue, c, n)) % n;
    }
    return x;
}

}  // namespace zn
