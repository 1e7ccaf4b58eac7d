#pragma once

#include <optional>
#include <vector>

#include "goodint/common.hpp"

namespace goodint {

struct PrimePower {
    u64 prime = 0;
    u32 exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of a positive integer; primes strictly increasing,
/// value == product of prime^exponent (empty list for 1).
struct FactoredInt {
    u64 value = 1;
    std::vector<PrimePower> factors;
};

/// Deterministic Miller-Rabin (exact for all 64-bit inputs).
bool is_prime(u64 n);

/// Trial division over a sieve up to 2^20, then Pollard rho with
/// deterministic parameters. n must be >= 1 and < 2^63.
FactoredInt factorize(u64 n);

/// Largest i with 2^i | n (n >= 1).
u32 two_adic_valuation(u64 n);

u64 euler_phi(const FactoredInt& n);
u64 euler_phi(u64 n);

/// All divisors of n, ascending.
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const FactoredInt& n);

/// q = p^k with p prime, k >= 1, if such a decomposition exists.
std::optional<PrimePower> as_prime_power(u64 q);

/// Residue of a in [0, n); n >= 1.
u64 mod_reduce(i64 a, u64 n);
u64 mod_mul(u64 a, u64 b, u64 n);
u64 mod_pow(u64 base, u64 exp, u64 n);
/// Inverse of a modulo n; requires gcd(a, n) = 1.
u64 mod_inverse(i64 a, u64 n);

/// Least k >= 1 with a^k = 1 (mod N); requires gcd(a, N) = 1.
/// Computed by divisor refinement of phi(N), not linear scan.
u64 mult_order(i64 a, u64 N);

/// ord_N(a/b) = mult_order(a * b^{-1} mod N); requires gcd(a,N) = gcd(b,N) = 1.
u64 mult_order_ratio(i64 a, i64 b, u64 N);

}  // namespace goodint
