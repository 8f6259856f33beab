#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zn {

using u64 = std::uint64_t;

// Largest supported modulus. Trial division and exhaustive scans stay cheap
// well below this bound.
inline constexpr u64 kMaxModulus = 1'000'000'000'000ULL;

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;
    u64 value = 0;  // prime^exponent

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive modulus, primes strictly increasing.
/// For n = 1 the factor list is empty.
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;
};

/// Deterministic trial division. Throws std::invalid_argument for n = 0 and
/// std::domain_error above kMaxModulus.
Factorization factorize(u64 n);

/// Euler totient from a factorization; euler_phi of 1 is 1.
u64 euler_phi(const Factorization& f);

/// gcd with the conventions gcd(0,0) = 0 and gcd(0,m) = m.
u64 gcd(u64 a, u64 b);

/// Exact modular product (double-width intermediate).
u64 mul_mod(u64 a, u64 b, u64 n);

/// Canonical residue of base^exp mod n; negative bases are reduced on entry.
/// x^0 = 1 mod n, so pow_mod(x, 0, 1) = 0.
u64 pow_mod(long long base, u64 exp, u64 n);

struct ResidueComponent {
    u64 prime_power = 0;
    u64 residue = 0;

    friend bool operator==(const ResidueComponent&, const ResidueComponent&) = default;
};

/// Per-prime-power remainders of a residue, one component per factor of the
/// owning Factorization, in the same order.
struct ResidueVector {
    std::vector<ResidueComponent> components;
};

ResidueVector residue_decompose(u64 a, const Factorization& f);

/// Inverse of residue_decompose on [0, n).
u64 crt_recombine(const ResidueVector& rv, const Factorization& f);

}  // namespace zn
