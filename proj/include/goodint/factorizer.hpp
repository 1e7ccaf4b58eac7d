#pragma once

#include <memory>

#include "goodint/cyclotomic.hpp"
#include "goodint/galois.hpp"

namespace goodint {

enum class Duality { Euclidean, Hermitian };

enum class FactorKind { SelfDual, PairPrimary, PairSecondary };

/// One irreducible factor of x^n - 1, tied to the cyclotomic coset that
/// induces it. SelfDual records are fixed by the (conjugate-)reciprocal
/// transform; the members of a pair map to each other.
struct FactorRecord {
    FqPoly poly;
    u64 coset_rep = 0;
    u64 add_order = 1;
    FactorKind kind = FactorKind::SelfDual;
    u64 partner_rep = 0;  // == coset_rep for SelfDual
    u64 multiplicity = 1;  // p^t, shared by every record of a table
};

/// The complete factorization of x^n - 1 over F_{p^m} (Euclidean) or
/// F_{p^{2m}} (Hermitian), with n = N p^t and p not dividing N. Records are
/// ordered SelfDual first (by add_order, then rep), then pairs (by
/// add_order, then primary rep; primary = smaller rep, listed before its
/// secondary).
struct FactorTable {
    u64 n = 1;
    u64 N = 1;
    u64 p = 2;
    u32 m = 1;  // base parameter: the coefficient field is p^m or p^{2m}
    u32 t = 0;
    Duality duality = Duality::Euclidean;
    u64 sub_order = 2;  // p^m (the Hermitian conjugation base)
    std::shared_ptr<const Field> field;
    std::vector<FactorRecord> records;

    u64 multiplicity() const { return records.empty() ? 1 : records.front().multiplicity; }
    size_t index_of_rep(u64 rep) const;
    /// Index of the record whose polynomial is the (conjugate-)reciprocal of
    /// record i; i itself for SelfDual records.
    size_t partner_index(size_t i) const;
};

/// Minimal polynomial of alpha^rep over the base field, alpha a primitive
/// N-th root of unity in F_{q^e}, e = ord_N(q): the product of (x - alpha^i)
/// over the coset, verified to land in the base field and mapped down.
/// The root of unity is pinned deterministically: alpha = u^((q^e - 1)/N)
/// for the least u (coordinate-value order) whose power has order exactly N.
FqPoly min_poly(const CyclotomicCoset& coset, const Field& base, u64 N);

/// Factor x^n - 1 over F_{p^m} (Euclidean) or F_{p^{2m}} (Hermitian) into
/// minimal polynomials with multiplicity p^t, grouped by duality type.
FactorTable factor_table(u64 n, u64 p, u32 m, Duality duality);

}  // namespace goodint
