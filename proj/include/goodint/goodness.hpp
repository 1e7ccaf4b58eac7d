#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goodint/numtheory.hpp"

namespace goodint {

/// Is ell a divisor of a^k + b^k for some positive k (and of which parity)?
struct GoodnessQuery {
    i64 a = 0;
    i64 b = 0;
    u64 ell = 1;
};

enum class GoodClass { Good, Oddly, Evenly };

/// Stable trace vocabulary: one tag per decision branch. Tests assert the
/// decision path through these, not just the verdict. Per-prime order notes
/// of the form "v2(ord_p(a/b)) = s" accompany the branch tags.
namespace trace_tag {
inline constexpr const char* shared_factor = "bad: gcd(ab, ell) > 1";
inline constexpr const char* ell_one = "ell = 1: oddly & evenly";
inline constexpr const char* ell_two = "ell = 2, ab odd: oddly & evenly";
inline constexpr const char* pow2_good = "2^beta | (a+b): 2^beta oddly-good";
inline constexpr const char* pow2_bad = "bad: 2^beta does not divide a+b";
inline constexpr const char* odd_part_oddly = "S = {1}: odd part oddly-good";
inline constexpr const char* odd_part_evenly = "S = {s}, s >= 2: odd part evenly-good";
inline constexpr const char* odd_part_bad_zero = "bad: S = {0}";
inline constexpr const char* odd_part_bad_mixed = "bad: |S| >= 2";
inline constexpr const char* doubling = "2d transfer: ord_2d(a/b) = ord_d(a/b)";
inline constexpr const char* beta2_ok = "beta >= 2 requires 2^beta | (a+b) and S = {1}: holds";
inline constexpr const char* beta2_bad_s = "bad: beta >= 2 requires S = {1}";
inline constexpr const char* beta2_bad_div = "bad: beta >= 2 requires 2^beta | (a+b)";
}  // namespace trace_tag

struct Classification {
    bool good = false;
    bool oddly = false;
    bool evenly = false;
    /// Present iff good; ell | a^witness_k + b^witness_k. For ell in {1,2}
    /// this is 1, otherwise ord_ell(a/b)/2 (always a valid witness, not
    /// necessarily the minimal one; minimality is witness_search's job).
    std::optional<u64> witness_k;
    std::vector<std::string> trace;
};

/// Classify ell as good / oddly-good / evenly-good / bad with respect to the
/// coprime pair (a, b). Inputs sharing a factor with ell yield a "bad"
/// classification, not an error. Throws DomainError for a*b = 0 or
/// gcd(a, b) != 1.
Classification classify(const GoodnessQuery& q);

struct Witness {
    u64 k = 0;
    bool odd = false;
};

/// Smallest k <= k_max with ell | a^k + b^k, by modular exponentiation scan.
/// Complete when k_max >= ord_ell(a/b): if no witness exists in that range,
/// none exists. Requires gcd(a*b, ell) = 1.
std::optional<Witness> witness_search(const GoodnessQuery& q, u64 k_max);

/// All ell <= bound in the requested class, ascending.
std::vector<u64> good_table(i64 a, i64 b, u64 bound, GoodClass cls);

}  // namespace goodint
