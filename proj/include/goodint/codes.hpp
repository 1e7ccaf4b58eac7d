#pragma once

#include <memory>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "goodint/factorizer.hpp"

namespace goodint {

using CodeCount = boost::multiprecision::cpp_int;

/// A cyclic code of length table->n in factored-generator form: one exponent
/// per factor record, each in [0, multiplicity]. The generator polynomial is
/// the product of poly_i^exponents_i; dimension = n - deg(g). Codes stay in
/// exponent form (every structural theorem is stated on exponents);
/// expansion to g(x) happens on demand.
struct CyclicCode {
    std::shared_ptr<const FactorTable> table;
    std::vector<u64> exponents;
};

/// Validates exponent bounds.
CyclicCode make_code(std::shared_ptr<const FactorTable> table, std::vector<u64> exponents);

FqPoly generator_poly(const CyclicCode& c);
u64 dimension(const CyclicCode& c);

/// The dual's generator is h*(x) (Euclidean) or h†(x) (Hermitian) with
/// h = (x^n - 1)/g: record i's dual exponent is multiplicity minus the
/// exponent of i's (conjugate-)reciprocal partner record.
CyclicCode dual_code(const CyclicCode& c);

/// gcd(g, h*) = 1: every SelfDual exponent in {0, p^t} and every pair
/// jointly (0,0) or (p^t, p^t).
bool is_lcd(const CyclicCode& c);

/// g = h*: every SelfDual exponent equals p^t / 2 (so p = 2, t >= 1) and
/// every pair satisfies s + s' = p^t. Returns false when existence fails.
bool is_self_dual(const CyclicCode& c);

/// Counting formulas over divisors d | N, no polynomial construction:
/// LCD codes number 2^(sum over good d of gamma_d + sum over bad d of
/// gamma_d/2); self-dual codes number (1+2^t)^(sum over bad d of gamma_d/2)
/// when p = 2 and t >= 1, else 0. "Good" means d in G_{(p^m,1)} for
/// Euclidean tables and d in OG_{(p^m,1)} for Hermitian ones, and gamma_d =
/// Phi(d)/ord_d(q) with q the coefficient field order.
CodeCount count_lcd(u64 n, u64 p, u32 m, Duality duality);
CodeCount count_self_dual(u64 n, u64 p, u32 m, Duality duality);

/// Structural cross-checks against a built table: 2^(#SelfDual + #pairs) and
/// (1+2^t)^(#pairs).
CodeCount count_lcd_from_table(const FactorTable& table);
CodeCount count_self_dual_from_table(const FactorTable& table);

enum class CodeFamily { Lcd, SelfDual };

/// Streams every code of the family in lexicographic exponent-vector order;
/// yields exactly count_*(...) codes, capped at `limit` (default 10^6;
/// nullopt = unbounded).
class CodeEnumerator {
public:
    CodeEnumerator(std::shared_ptr<const FactorTable> table, CodeFamily family,
                   std::optional<u64> limit = u64(1000000));
    std::optional<CyclicCode> next();
    const CodeCount& total() const { return total_; }

private:
    std::shared_ptr<const FactorTable> table_;
    CodeFamily family_;
    std::optional<u64> limit_;
    u64 yielded_ = 0;
    bool exhausted_ = false;
    bool started_ = false;
    CodeCount total_;
    // state: one counter per free slot (SelfDual record or pair), in record order
    struct Slot {
        size_t primary;                    // record index
        std::optional<size_t> secondary;   // set for pairs
        u64 value = 0;
        u64 max = 0;                       // inclusive
    };
    std::vector<Slot> slots_;
    std::vector<u64> base_exponents_;
    CyclicCode current() const;
    bool advance();
};

struct VerifyReport {
    u64 dim = 0;
    u64 dim_dual = 0;
    u64 dim_intersection = 0;
    bool self_dual = false;
    bool lcd = false;
};

/// Independent linear-algebra oracle: builds the k x n generator matrix from
/// cyclic shifts of g, solves the (conjugated, for Hermitian) orthogonality
/// system for a dual basis, and reads the flags off dimensions. Guarded at
/// n <= 256.
VerifyReport brute_verify(const CyclicCode& c);

}  // namespace goodint
