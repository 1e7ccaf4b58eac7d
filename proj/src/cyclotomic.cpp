#include "goodint/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "goodint/goodness.hpp"

namespace goodint {

namespace {
constexpr u64 kMaxN = u64(1) << 26;
}

size_t CosetPartition::index_of(u64 residue) const {
    if (residue >= N) throw DomainError("CosetPartition: residue out of range");
    return index_of_residue_[residue];
}

CosetPartition cosets(u64 N, u64 q) {
    if (N == 0) throw DomainError("cosets: N must be positive");
    if (N > kMaxN) throw SizeError("cosets: N exceeds the 2^26 guard");
    if (!as_prime_power(q)) throw DomainError("cosets: q must be a prime power");
    if (std::gcd(N, q) != 1) throw DomainError("cosets: gcd(N, q) must be 1");

    CosetPartition part;
    part.N = N;
    part.q = q;
    const u64 qr = q % N;

    std::vector<bool> seen(N, false);
    for (u64 a = 0; a < N; ++a) {
        if (seen[a]) continue;
        CyclotomicCoset c;
        c.rep = a;
        u64 x = a;
        do {
            seen[x] = true;
            c.elements.push_back(x);
            x = mod_mul(x, qr, N);
        } while (x != a);
        std::sort(c.elements.begin(), c.elements.end());
        c.add_order = N / std::gcd(N, a);
        part.cosets.push_back(std::move(c));
    }
    // a-scan order already yields rep = min(elements); normalize ordering
    std::sort(part.cosets.begin(), part.cosets.end(), [](const auto& x, const auto& y) {
        return std::tie(x.add_order, x.rep) < std::tie(y.add_order, y.rep);
    });
    part.index_of_residue_.assign(N, 0);
    for (size_t i = 0; i < part.cosets.size(); ++i) {
        part.by_divisor[part.cosets[i].add_order].push_back(i);
        for (u64 e : part.cosets[i].elements) part.index_of_residue_[e] = i;
    }
    return part;
}

CosetDuality euclidean_type(const CyclotomicCoset& c, const CosetPartition& part) {
    u64 neg = (part.N - c.rep % part.N) % part.N;
    const CyclotomicCoset& partner = part.coset_of(neg);
    if (partner.rep == c.rep) return {true, c.rep};
    return {false, partner.rep};
}

CosetDuality hermitian_type(const CyclotomicCoset& c, const CosetPartition& part, u64 sub_order) {
    if (sub_order == 0 || sub_order > (u64(1) << 31) || sub_order * sub_order != part.q)
        throw DomainError("hermitian_type: partition's q must equal sub_order^2");
    u64 neg = (part.N - c.rep % part.N) % part.N;
    u64 target = mod_mul(neg, sub_order % part.N, part.N);
    const CyclotomicCoset& partner = part.coset_of(target);
    if (partner.rep == c.rep) return {true, c.rep};
    return {false, partner.rep};
}

bool coset_goodness_bridge(const CyclotomicCoset& c, u64 a_base, bool oddly) {
    Classification cls = classify({static_cast<i64>(a_base), 1, c.add_order});
    return oddly ? cls.oddly : cls.good;
}

}  // namespace goodint
