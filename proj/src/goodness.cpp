#include "goodint/goodness.hpp"

#include <numeric>
#include <set>

namespace goodint {

namespace {

u64 abs_u64(i64 x) {
    return x < 0 ? ~static_cast<u64>(x) + 1 : static_cast<u64>(x);
}

void check_pair(const GoodnessQuery& q) {
    if (q.a == 0 || q.b == 0) throw DomainError("classify: a and b must be nonzero");
    if (std::gcd(abs_u64(q.a), abs_u64(q.b)) != 1)
        throw DomainError("classify: a and b must be coprime");
    if (q.ell == 0) throw DomainError("classify: ell must be positive");
}

// 2^beta | (a + b), evaluated without overflow; beta <= 62 since ell < 2^63.
bool pow2_divides_sum(i64 a, i64 b, u32 beta) {
    u64 mod = u64(1) << beta;
    return (mod_reduce(a, mod) + mod_reduce(b, mod)) % mod == 0;
}

}  // namespace

Classification classify(const GoodnessQuery& q) {
    check_pair(q);
    Classification out;
    const u64 ell = q.ell;

    if (ell == 1) {
        out.good = out.oddly = out.evenly = true;
        out.witness_k = 1;
        out.trace.push_back(trace_tag::ell_one);
        return out;
    }

    if (std::gcd(mod_reduce(q.a, ell), ell) != 1 || std::gcd(mod_reduce(q.b, ell), ell) != 1) {
        out.trace.push_back(trace_tag::shared_factor);
        return out;
    }
    // From here a and b are units mod ell; in particular ab odd when 2 | ell.

    const u32 beta = two_adic_valuation(ell);
    const u64 d = ell >> beta;

    if (d == 1) {
        // ell = 2^beta, beta >= 1
        if (!pow2_divides_sum(q.a, q.b, beta)) {
            out.trace.push_back(trace_tag::pow2_bad);
            return out;
        }
        out.good = true;
        if (beta == 1) {
            out.oddly = out.evenly = true;
            out.witness_k = 1;
            out.trace.push_back(trace_tag::ell_two);
        } else {
            // a/b = -1 (mod 2^beta), so the order is 2 and k = 1 works
            out.oddly = true;
            out.witness_k = mult_order_ratio(q.a, q.b, ell) / 2;
            out.trace.push_back(trace_tag::pow2_good);
        }
        return out;
    }

    // Odd part: S = { v2(ord_p(a/b)) : p | d }
    std::set<u32> s_set;
    for (const auto& [p, e] : factorize(d).factors) {
        (void)e;
        u64 op = mult_order_ratio(q.a, q.b, p);
        u32 v = two_adic_valuation(op);
        s_set.insert(v);
        out.trace.push_back("v2(ord_" + std::to_string(p) + "(a/b)) = " + std::to_string(v));
    }
    const bool uniform = s_set.size() == 1;
    const u32 s = *s_set.begin();

    if (beta <= 1) {
        if (!uniform || s == 0) {
            out.trace.push_back(!uniform ? trace_tag::odd_part_bad_mixed : trace_tag::odd_part_bad_zero);
            return out;
        }
        out.good = true;
        if (s == 1) {
            out.oddly = true;
            out.trace.push_back(trace_tag::odd_part_oddly);
        } else {
            out.evenly = true;
            out.trace.push_back(trace_tag::odd_part_evenly);
        }
        if (beta == 1) out.trace.push_back(trace_tag::doubling);
        out.witness_k = mult_order_ratio(q.a, q.b, ell) / 2;
        return out;
    }

    // beta >= 2: need S = {1} and 2^beta | (a + b); verdict is oddly-good
    if (!uniform || s != 1) {
        out.trace.push_back(trace_tag::beta2_bad_s);
        return out;
    }
    if (!pow2_divides_sum(q.a, q.b, beta)) {
        out.trace.push_back(trace_tag::beta2_bad_div);
        return out;
    }
    out.good = true;
    out.oddly = true;
    out.witness_k = mult_order_ratio(q.a, q.b, ell) / 2;
    out.trace.push_back(trace_tag::beta2_ok);
    return out;
}

std::optional<Witness> witness_search(const GoodnessQuery& q, u64 k_max) {
    if (q.ell == 0) throw DomainError("witness_search: ell must be positive");
    const u64 ell = q.ell;
    u64 ra = mod_reduce(q.a, ell);
    u64 rb = mod_reduce(q.b, ell);
    if (ell > 1 &&
        (std::gcd(ra, ell) != 1 || std::gcd(rb, ell) != 1))
        throw DomainError("witness_search: gcd(ab, ell) must be 1");
    u64 pa = ra, pb = rb;
    for (u64 k = 1; k <= k_max; ++k) {
        if ((pa + pb) % ell == 0) return Witness{k, (k & 1) != 0};
        pa = mod_mul(pa, ra, ell);
        pb = mod_mul(pb, rb, ell);
    }
    return std::nullopt;
}

std::vector<u64> good_table(i64 a, i64 b, u64 bound, GoodClass cls) {
    std::vector<u64> out;
    for (u64 ell = 1; ell <= bound; ++ell) {
        Classification c = classify({a, b, ell});
        bool keep = cls == GoodClass::Good ? c.good : cls == GoodClass::Oddly ? c.oddly : c.evenly;
        if (keep) out.push_back(ell);
    }
    return out;
}

}  // namespace goodint
