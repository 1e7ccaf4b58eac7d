#include "goodint/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace goodint {

namespace {

constexpr u64 kSieveBound = 1u << 20;
constexpr u64 kMaxInput = (u64(1) << 63) - 1;

struct Sieve {
    std::vector<u32> spf;  // smallest prime factor, 0 means prime-or-1
    std::vector<u32> primes;
    Sieve() : spf(kSieveBound + 1, 0) {
        for (u64 i = 2; i <= kSieveBound; ++i) {
            if (spf[i] == 0) {
                spf[i] = static_cast<u32>(i);
                primes.push_back(static_cast<u32>(i));
            }
            for (u32 p : primes) {
                if (p > spf[i] || i * p > kSieveBound) break;
                spf[i * p] = p;
            }
        }
    }
};

const Sieve& sieve() {
    static const Sieve s;
    return s;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

}  // namespace

u64 mod_reduce(i64 a, u64 n) {
    if (n == 0) throw DomainError("mod_reduce: modulus must be positive");
    i128 r = static_cast<i128>(a) % static_cast<i128>(n);
    if (r < 0) r += static_cast<i128>(n);
    return static_cast<u64>(r);
}

u64 mod_mul(u64 a, u64 b, u64 n) {
    return static_cast<u64>(static_cast<u128>(a) * b % n);
}

u64 mod_pow(u64 base, u64 exp, u64 n) {
    if (n == 1) return 0;
    u64 result = 1;
    base %= n;
    while (exp > 0) {
        if (exp & 1) result = mod_mul(result, base, n);
        base = mod_mul(base, base, n);
        exp >>= 1;
    }
    return result;
}

u64 mod_inverse(i64 a, u64 n) {
    if (n == 1) return 0;
    u64 r = mod_reduce(a, n);
    // extended Euclid on (r, n)
    i128 old_r = r, cur_r = n;
    i128 old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        i128 q = old_r / cur_r;
        i128 tmp = old_r - q * cur_r;
        old_r = cur_r;
        cur_r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
    }
    if (old_r != 1) throw DomainError("mod_inverse: arguments are not coprime");
    i128 inv = old_s % static_cast<i128>(n);
    if (inv < 0) inv += static_cast<i128>(n);
    return static_cast<u64>(inv);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    u32 r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // exact for n < 3.3 * 10^24, hence for all u64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (u32 i = 1; i < r; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

// Brent-style rho with deterministic parameter sweep; n odd composite, no
// factor below the sieve bound.
u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 saved_x = x;
        u64 product = 1;
        const u32 block = 128;
        u64 power = 1, lam = 0;
        auto step = [&](u64 v) { return (mod_mul(v, v, n) + c) % n; };
        while (d == 1) {
            if (lam == power) {
                saved_x = y;
                power <<= 1;
                lam = 0;
                product = 1;
            }
            for (u32 i = 0; i < block && lam < power; ++i, ++lam) {
                y = step(y);
                product = mod_mul(product, saved_x > y ? saved_x - y : y - saved_x, n);
            }
            d = gcd_u64(product, n);
        }
        if (d != n) return d;
        // backtrack step by step
        y = saved_x;
        d = 1;
        while (d == 1) {
            y = step(y);
            d = gcd_u64(saved_x > y ? saved_x - y : y - saved_x, n);
        }
        if (d != n) return d;
        (void)x;
    }
}

void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

FactoredInt factorize(u64 n) {
    if (n == 0) throw DomainError("factorize: input must be positive");
    if (n > kMaxInput) throw SizeError("factorize: input exceeds 2^63 - 1");
    FactoredInt result;
    result.value = n;
    std::vector<u64> primes_found;
    if (n <= kSieveBound) {
        while (n > 1) {
            primes_found.push_back(sieve().spf[n]);
            n /= sieve().spf[n];
        }
    } else {
        for (u32 p : sieve().primes) {
            if (static_cast<u64>(p) * p > n) break;
            while (n % p == 0) {
                primes_found.push_back(p);
                n /= p;
            }
            if (n == 1) break;
        }
        factor_into(n == 1 ? 1 : n, primes_found);
    }
    std::sort(primes_found.begin(), primes_found.end());
    for (u64 p : primes_found) {
        if (!result.factors.empty() && result.factors.back().prime == p) {
            ++result.factors.back().exponent;
        } else {
            result.factors.push_back({p, 1});
        }
    }
    return result;
}

u32 two_adic_valuation(u64 n) {
    if (n == 0) throw DomainError("two_adic_valuation: input must be positive");
    u32 v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    return v;
}

u64 euler_phi(const FactoredInt& n) {
    u64 phi = 1;
    for (const auto& [p, e] : n.factors) {
        phi *= p - 1;
        for (u32 i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

std::vector<u64> divisors(const FactoredInt& n) {
    std::vector<u64> result{1};
    for (const auto& [p, e] : n.factors) {
        size_t have = result.size();
        u64 pk = 1;
        for (u32 i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < have; ++j) result.push_back(result[j] * pk);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

std::optional<PrimePower> as_prime_power(u64 q) {
    if (q < 2) return std::nullopt;
    FactoredInt f = factorize(q);
    if (f.factors.size() != 1) return std::nullopt;
    return f.factors.front();
}

u64 mult_order(i64 a, u64 N) {
    if (N == 0) throw DomainError("mult_order: modulus must be positive");
    if (N == 1) return 1;
    u64 r = mod_reduce(a, N);
    if (gcd_u64(r, N) != 1) throw DomainError("mult_order: arguments are not coprime");
    u64 k = euler_phi(factorize(N));
    for (const auto& [p, e] : factorize(k).factors) {
        (void)e;
        while (k % p == 0 && mod_pow(r, k / p, N) == 1) k /= p;
    }
    return k;
}

u64 mult_order_ratio(i64 a, i64 b, u64 N) {
    if (N == 1) return 1;
    u64 ra = mod_reduce(a, N);
    u64 rb = mod_reduce(b, N);
    if (gcd_u64(ra, N) != 1 || gcd_u64(rb, N) != 1)
        throw DomainError("mult_order_ratio: a and b must be units mod N");
    return mult_order(static_cast<i64>(mod_mul(ra, mod_inverse(static_cast<i64>(rb), N), N)), N);
}

}  // namespace goodint
