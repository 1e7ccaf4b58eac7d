#include "goodint/factorizer.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace goodint {

namespace {

using BigInt = boost::multiprecision::cpp_int;

FqElement pow_big(const Field& f, const FqElement& a, const BigInt& e) {
    FqElement result = f.one();
    FqElement base = a;
    BigInt exp = e;
    while (exp > 0) {
        if (boost::multiprecision::bit_test(exp, 0)) result = f.mul(result, base);
        base = f.mul(base, base);
        exp >>= 1;
    }
    return result;
}

// Least element u (value order) for which u^((Q-1)/r) has multiplicative
// order exactly r; returns that power. Needs only the factorization of r.
FqElement subgroup_generator(const Field& big, const BigInt& group_order, u64 r) {
    BigInt exp = group_order / r;
    std::vector<u64> r_primes;
    for (const auto& pp : factorize(r).factors) r_primes.push_back(pp.prime);
    FqElement u = big.zero();
    while (big.next_element(u)) {
        FqElement cand = pow_big(big, u, exp);
        if (big.is_zero(cand)) continue;
        bool exact = true;
        for (u64 rp : r_primes) {
            if (big.pow(cand, r / rp) == big.one()) {
                exact = false;
                break;
            }
        }
        if (exact) return cand;
    }
    throw DomainError("subgroup_generator: no element of the requested order");
}

// Everything needed to evaluate min_poly for one (base field, N) pair.
struct SplittingContext {
    std::shared_ptr<const Field> base;
    std::shared_ptr<const Field> big;
    u32 e = 1;
    FqElement alpha;                       // primitive N-th root of unity in big
    std::vector<FqElement> embed_table;    // base elements by value -> big
    std::map<std::vector<u64>, u64> down;  // big coords -> base element value

    FqElement embed(const FqElement& x) const { return embed_table[base->encode(x)]; }

    FqElement down_map(const FqElement& x) const {
        auto it = down.find(x.c);
        if (it == down.end())
            throw std::logic_error("min_poly: coefficient escaped the base field (embedding bug)");
        return base->decode(it->second);
    }
};

std::shared_ptr<const SplittingContext> splitting_context(const Field& base, u64 N) {
    static std::mutex mu;
    static std::map<std::tuple<u64, u32, u64>, std::shared_ptr<const SplittingContext>> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_tuple(base.p(), base.m(), N);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto ctx = std::make_shared<SplittingContext>();
    ctx->base = field_make(base.p(), base.m());
    u64 q = ctx->base->size();
    ctx->e = static_cast<u32>(mult_order(static_cast<i64>(q % N == 0 ? 1 : q % N), N));
    ctx->big = field_make(base.p(), base.m() * ctx->e);

    BigInt Q = boost::multiprecision::pow(BigInt(base.p()), ctx->big->m());
    BigInt group_order = Q - 1;
    ctx->alpha = N == 1 ? ctx->big->one() : subgroup_generator(*ctx->big, group_order, N);

    // Embedding F_q -> F_{q^e}: scalars map to scalars; for m > 1, send the
    // power-basis generator to the least root of the base modulus inside the
    // (unique) subfield of size q.
    u64 table_size = q;
    ctx->embed_table.resize(table_size);
    if (ctx->base->m() == 1) {
        for (u64 v = 0; v < q; ++v) ctx->embed_table[v] = ctx->big->from_scalar(v);
    } else {
        FqPoly base_mod;  // the base modulus, coefficients lifted to big scalars
        {
            std::vector<FqElement> cs;
            for (u64 c : ctx->base->modulus()) cs.push_back(ctx->big->from_scalar(c));
            cs.push_back(ctx->big->one());
            base_mod = poly_from_coeffs(*ctx->big, std::move(cs));
        }
        std::vector<FqElement> subfield{ctx->big->zero()};
        if (ctx->e == 1) {
            FqElement x = ctx->big->zero();
            while (ctx->big->next_element(x)) subfield.push_back(x);
        } else {
            FqElement beta = subgroup_generator(*ctx->big, group_order, q - 1);
            FqElement cur = ctx->big->one();
            for (u64 j = 0; j + 1 < q; ++j) {
                subfield.push_back(cur);
                cur = ctx->big->mul(cur, beta);
            }
        }
        std::vector<FqElement> roots;
        for (const auto& cand : subfield) {
            if (ctx->big->is_zero(poly_eval(*ctx->big, base_mod, cand))) roots.push_back(cand);
        }
        if (roots.size() != ctx->base->m())
            throw std::logic_error("min_poly: base modulus does not split in the subfield");
        std::sort(roots.begin(), roots.end(),
                  [&](const FqElement& x, const FqElement& y) { return ctx->big->less(x, y); });
        const FqElement& rho = roots.front();
        FqElement x = ctx->base->zero();
        // Horner in rho over every base element, in value order
        for (u64 v = 0;; ++v) {
            FqElement lifted = ctx->big->zero();
            for (u32 i = ctx->base->m(); i-- > 0;)
                lifted = ctx->big->add(ctx->big->mul(lifted, rho), ctx->big->from_scalar(x.c[i]));
            ctx->embed_table[v] = lifted;
            if (!ctx->base->next_element(x)) break;
        }
    }
    for (u64 v = 0; v < table_size; ++v) ctx->down.emplace(ctx->embed_table[v].c, v);

    cache.emplace(key, ctx);
    return ctx;
}

}  // namespace

FqPoly min_poly(const CyclotomicCoset& coset, const Field& base, u64 N) {
    if (N == 0) throw DomainError("min_poly: N must be positive");
    if (!base.size_fits_u64()) throw SizeError("min_poly: base field too large");
    if (std::gcd(N, base.size()) != 1) throw DomainError("min_poly: gcd(N, q) must be 1");
    auto ctx = splitting_context(base, N);
    const Field& big = *ctx->big;

    FqPoly f = poly_one(big);
    for (u64 i : coset.elements) {
        FqPoly linear = poly_from_coeffs(big, {big.neg(big.pow(ctx->alpha, i)), big.one()});
        f = poly_mul(big, f, linear);
    }
    std::vector<FqElement> down;
    down.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) down.push_back(ctx->down_map(c));
    return poly_from_coeffs(base, std::move(down));
}

size_t FactorTable::index_of_rep(u64 rep) const {
    for (size_t i = 0; i < records.size(); ++i)
        if (records[i].coset_rep == rep) return i;
    throw DomainError("FactorTable: no record for the given representative");
}

size_t FactorTable::partner_index(size_t i) const {
    const FactorRecord& r = records.at(i);
    return r.kind == FactorKind::SelfDual ? i : index_of_rep(r.partner_rep);
}

FactorTable factor_table(u64 n, u64 p, u32 m, Duality duality) {
    if (n == 0) throw DomainError("factor_table: n must be positive");
    if (!is_prime(p)) throw DomainError("factor_table: p must be prime");
    if (m == 0) throw DomainError("factor_table: m must be positive");

    FactorTable table;
    table.n = n;
    table.p = p;
    table.m = m;
    table.duality = duality;
    table.N = n;
    table.t = 0;
    while (table.N % p == 0) {
        table.N /= p;
        ++table.t;
    }
    u64 multiplicity = 1;
    for (u32 i = 0; i < table.t; ++i) multiplicity *= p;

    const u32 field_m = duality == Duality::Hermitian ? 2 * m : m;
    table.field = field_make(p, field_m);
    if (!table.field->size_fits_u64())
        throw SizeError("factor_table: coefficient field exceeds 64 bits");
    table.sub_order = 1;
    for (u32 i = 0; i < m; ++i) table.sub_order *= p;
    const u64 q = table.field->size();

    CosetPartition part = cosets(table.N, q);
    std::vector<FactorRecord> self_dual, pairs;
    std::vector<bool> done(part.cosets.size(), false);
    for (size_t i = 0; i < part.cosets.size(); ++i) {
        if (done[i]) continue;
        const CyclotomicCoset& c = part.cosets[i];
        CosetDuality type = duality == Duality::Euclidean
                                ? euclidean_type(c, part)
                                : hermitian_type(c, part, table.sub_order);
        done[i] = true;
        if (type.self_paired) {
            self_dual.push_back({min_poly(c, *table.field, table.N), c.rep, c.add_order,
                                 FactorKind::SelfDual, c.rep, multiplicity});
            continue;
        }
        size_t j = part.index_of(type.partner_rep);
        done[j] = true;
        const CyclotomicCoset& cp = part.cosets[j];
        const CyclotomicCoset& prim = c.rep < cp.rep ? c : cp;
        const CyclotomicCoset& sec = c.rep < cp.rep ? cp : c;
        pairs.push_back({min_poly(prim, *table.field, table.N), prim.rep, prim.add_order,
                         FactorKind::PairPrimary, sec.rep, multiplicity});
        pairs.push_back({min_poly(sec, *table.field, table.N), sec.rep, sec.add_order,
                         FactorKind::PairSecondary, prim.rep, multiplicity});
    }
    auto by_order_rep = [](const FactorRecord& x, const FactorRecord& y) {
        return std::tie(x.add_order, x.coset_rep) < std::tie(y.add_order, y.coset_rep);
    };
    std::sort(self_dual.begin(), self_dual.end(), by_order_rep);
    // sort pairs by (add_order, primary rep), keeping primary/secondary adjacent
    std::vector<std::pair<FactorRecord, FactorRecord>> grouped;
    for (size_t i = 0; i < pairs.size(); i += 2) grouped.emplace_back(pairs[i], pairs[i + 1]);
    std::sort(grouped.begin(), grouped.end(), [&](const auto& x, const auto& y) {
        return by_order_rep(x.first, y.first);
    });
    table.records = std::move(self_dual);
    for (auto& [prim, sec] : grouped) {
        table.records.push_back(std::move(prim));
        table.records.push_back(std::move(sec));
    }
    return table;
}

}  // namespace goodint
