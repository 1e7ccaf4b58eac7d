#pragma once

#include <memory>
#include <string>
#include <vector>

#include "goodint/numtheory.hpp"

namespace goodint {

/// Element of F_{p^m} as coordinates in the power basis of the field
/// modulus: value = sum c[i] * g^i with c[i] in [0, p), c.size() == m.
struct FqElement {
    std::vector<u64> c;
    bool operator==(const FqElement&) const = default;
};

/// Dense univariate polynomial over F_{p^m}; coefficients low-degree first,
/// no trailing zeros (zero polynomial has an empty vector).
struct FqPoly {
    std::vector<FqElement> coeffs;
    bool operator==(const FqPoly&) const = default;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
};

/// F_{p^m} with the canonical modulus: the monic irreducible of degree m
/// over F_p with the smallest coefficient value sum(c_i p^i). For m = 1 the
/// modulus is the placeholder x and elements are residues mod p. Immutable
/// after construction and freely shareable between threads.
class Field {
public:
    Field(u64 p, u32 m);

    u64 p() const { return p_; }
    u32 m() const { return m_; }
    /// p^m; throws SizeError when it does not fit u64.
    u64 size() const;
    bool size_fits_u64() const { return size_fits_; }
    /// Low-first coefficients of the non-leading part of the modulus
    /// (the modulus is x^m + sum modulus()[i] x^i); empty-equivalent [0] for m = 1.
    const std::vector<u64>& modulus() const { return modulus_; }

    FqElement zero() const;
    FqElement one() const;
    FqElement from_scalar(u64 v) const;  // v mod p, embedded as a constant
    /// The power-basis generator g (class of x); equals from_scalar for m = 1.
    FqElement gen() const;

    bool is_zero(const FqElement& a) const;
    FqElement add(const FqElement& a, const FqElement& b) const;
    FqElement sub(const FqElement& a, const FqElement& b) const;
    FqElement neg(const FqElement& a) const;
    FqElement mul(const FqElement& a, const FqElement& b) const;
    FqElement inv(const FqElement& a) const;
    FqElement pow(const FqElement& a, u64 e) const;
    /// a^(p^k), the k-fold Frobenius.
    FqElement frobenius(const FqElement& a, u32 k = 1) const;

    /// Coordinate value sum(c_i p^i); requires p^m <= 2^63.
    u64 encode(const FqElement& a) const;
    FqElement decode(u64 v) const;
    /// Value-order comparison, usable for any m.
    bool less(const FqElement& a, const FqElement& b) const;
    /// Advance a through the field in value order; false after the last element.
    bool next_element(FqElement& a) const;

    /// Least primitive element in value order; basis of the `a^j` text form.
    /// Computed lazily (requires factoring p^m - 1, so p^m must fit u64).
    const FqElement& canonical_generator() const;
    /// Discrete log base canonical_generator() (baby-step giant-step).
    u64 dlog(const FqElement& a) const;

private:
    u64 p_;
    u32 m_;
    bool size_fits_;
    u64 size_u64_ = 0;
    std::vector<u64> modulus_;
    mutable std::shared_ptr<const FqElement> canon_;  // lazily pinned
    mutable std::shared_ptr<const std::vector<PrimePower>> unit_group_factors_;
    void ensure_canonical() const;
};

/// Shared, cached field instances keyed by (p, m).
std::shared_ptr<const Field> field_make(u64 p, u32 m);

FqPoly poly_zero();
FqPoly poly_one(const Field& f);
FqPoly poly_x(const Field& f);
FqPoly poly_from_coeffs(const Field& f, std::vector<FqElement> coeffs);  // trims
FqPoly poly_scalar(const Field& f, u64 v);

FqPoly poly_add(const Field& f, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const Field& f, const FqPoly& a, const FqPoly& b);
FqPoly poly_mul(const Field& f, const FqPoly& a, const FqPoly& b);
FqPoly poly_scale(const Field& f, const FqPoly& a, const FqElement& s);
struct PolyDivMod {
    FqPoly quotient;
    FqPoly remainder;
};
PolyDivMod poly_divmod(const Field& f, const FqPoly& a, const FqPoly& b);
/// Monic gcd.
FqPoly poly_gcd(const Field& f, const FqPoly& a, const FqPoly& b);
FqPoly poly_pow(const Field& f, const FqPoly& a, u64 e);
FqPoly poly_make_monic(const Field& f, const FqPoly& a);
FqElement poly_eval(const Field& f, const FqPoly& a, const FqElement& x);

/// f*(x) = f(0)^{-1} x^deg f(1/x); requires f(0) != 0.
FqPoly reciprocal(const Field& f, const FqPoly& a);
/// f†(x): coefficient reversal composed with the Frobenius x -> x^{p^{m/2}},
/// normalized monic-compatible by f(0)^{-p^{m/2}}. Requires a field of
/// square order (m even) and f(0) != 0.
FqPoly conj_reciprocal(const Field& f, const FqPoly& a);

/// Rabin irreducibility test (f over the given field).
bool is_irreducible(const Field& f, const FqPoly& a);

/// Canonical text: terms high-degree first, "x^k" powers, prime-field
/// coefficients as decimal residues, extension coefficients as powers a^j of
/// the canonical generator, e.g. "x^4 + 2*x^3 + 1", "x^2 + a^2*x + a^2".
std::string poly_to_string(const Field& f, const FqPoly& a);
std::string elem_to_string(const Field& f, const FqElement& a);
/// Parses the canonical form (plus "α" as an alias for "a", optional
/// whitespace, and products of scalar factors).
FqPoly poly_parse(const Field& f, const std::string& text);

}  // namespace goodint
