#pragma once

#include <map>
#include <vector>

#include "goodint/numtheory.hpp"

namespace goodint {

/// q-cyclotomic coset of Z_N: the orbit of rep under multiplication by q.
/// rep is the minimum element; add_order = N / gcd(N, rep) is the additive
/// order of rep in Z_N; the coset size equals ord_{add_order}(q).
struct CyclotomicCoset {
    u64 rep = 0;
    std::vector<u64> elements;  // sorted
    u64 add_order = 1;
    u64 size() const { return elements.size(); }
};

/// The complete partition of Z_N into q-cyclotomic cosets, ordered by
/// (add_order, rep) ascending.
struct CosetPartition {
    u64 N = 1;
    u64 q = 2;
    std::vector<CyclotomicCoset> cosets;
    /// Divisor d of N -> indices of the cosets whose add_order is d
    /// (the A_d grouping); each list has Phi(d)/ord_d(q) entries.
    std::map<u64, std::vector<size_t>> by_divisor;

    size_t index_of(u64 residue) const;
    const CyclotomicCoset& coset_of(u64 residue) const { return cosets[index_of(residue)]; }

private:
    friend CosetPartition cosets(u64 N, u64 q);
    std::vector<size_t> index_of_residue_;
};

/// Requires q a prime power with gcd(N, q) = 1; N is guarded at 2^26 since
/// the partition materializes Z_N.
CosetPartition cosets(u64 N, u64 q);

/// Euclidean type I / Hermitian type I' when a coset is its own partner
/// under negation (resp. negation composed with multiplication by p^m).
struct CosetDuality {
    bool self_paired = false;
    u64 partner_rep = 0;  // == own rep when self_paired
};

/// Type I iff -rep lies in the coset; otherwise partner = rep of C_q(-rep).
CosetDuality euclidean_type(const CyclotomicCoset& c, const CosetPartition& part);

/// Type I' iff -sub_order * rep lies in the coset, where the partition's q
/// must equal sub_order^2; otherwise partner = rep of C_q(-sub_order * rep).
CosetDuality hermitian_type(const CyclotomicCoset& c, const CosetPartition& part, u64 sub_order);

/// The goodness bridge: classify(a_base, 1, add_order). Euclidean callers
/// test `good` with a_base = q, Hermitian callers test `oddly` with
/// a_base = p^m = sqrt(q).
bool coset_goodness_bridge(const CyclotomicCoset& c, u64 a_base, bool oddly);

}  // namespace goodint
