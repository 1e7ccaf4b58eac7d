#include "goodint/galois.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <unordered_map>

namespace goodint {

namespace {

constexpr u64 kMaxPrime = (u64(1) << 31) - 1;

// --- arithmetic on raw F_p coefficient vectors (low-first, trimmed) ---

void trim(std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int vdeg(const std::vector<u64>& v) { return static_cast<int>(v.size()) - 1; }

std::vector<u64> vsub(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    std::vector<u64> r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

std::vector<u64> vmul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

// a mod b, b nonzero
std::vector<u64> vmod(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
    u64 lead_inv = mod_inverse(static_cast<i64>(b.back()), p);
    while (vdeg(a) >= vdeg(b)) {
        u64 c = mod_mul(a.back(), lead_inv, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - mod_mul(c, b[i], p)) % p;
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

std::vector<u64> vpow_mod(std::vector<u64> h, u64 e, const std::vector<u64>& f, u64 p) {
    std::vector<u64> result{1};
    while (e > 0) {
        if (e & 1) result = vmod(vmul(result, h, p), f, p);
        h = vmod(vmul(h, h, p), f, p);
        e >>= 1;
    }
    return result;
}

std::vector<u64> vgcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
    while (!b.empty()) {
        std::vector<u64> r = vmod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin test on a raw F_p coefficient vector; the FqElement-based version
// funnels through this for prime fields.
bool is_irreducible_fp(const std::vector<u64>& a, u64 p) {
    int n = vdeg(a);
    if (n <= 0) return false;
    if (n == 1) return true;
    if (a[0] == 0) return false;
    std::vector<u64> checkpoints;
    for (const auto& pp : factorize(static_cast<u64>(n)).factors)
        checkpoints.push_back(static_cast<u64>(n) / pp.prime);
    std::vector<u64> h{0, 1};
    const std::vector<u64> x{0, 1};
    for (u64 i = 1; i <= static_cast<u64>(n); ++i) {
        h = vpow_mod(std::move(h), p, a, p);
        if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
            if (vdeg(vgcd(vsub(h, x, p), a, p)) != 0) return false;
        }
    }
    return h == x;
}

// inverse of a modulo the monic modulus f over F_p
std::vector<u64> vinv_mod(const std::vector<u64>& a, const std::vector<u64>& f, u64 p) {
    std::vector<u64> r0 = f, r1 = a;
    std::vector<u64> s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // r0 = q*r1 + r, computed by repeated leading-term elimination
        std::vector<u64> q;
        std::vector<u64> rem = r0;
        u64 lead_inv = mod_inverse(static_cast<i64>(r1.back()), p);
        while (vdeg(rem) >= vdeg(r1)) {
            u64 c = mod_mul(rem.back(), lead_inv, p);
            size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = (rem[shift + i] + p - mod_mul(c, r1[i], p)) % p;
            trim(rem);
            if (rem.empty()) break;
        }
        std::vector<u64> s2 = vsub(s0, vmul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (vdeg(r0) != 0) throw DomainError("field inverse of a non-unit");
    u64 scale = mod_inverse(static_cast<i64>(r0[0]), p);
    for (u64& x : s0) x = mod_mul(x, scale, p);
    s0 = vmod(std::move(s0), f, p);
    return s0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field::Field(u64 p, u32 m) : p_(p), m_(m) {
    if (!is_prime(p)) throw DomainError("Field: p must be prime");
    if (p > kMaxPrime) throw SizeError("Field: characteristic above 2^31 is unsupported");
    if (m == 0) throw DomainError("Field: m must be positive");

    size_fits_ = true;
    size_u64_ = 1;
    for (u32 i = 0; i < m; ++i) {
        if (size_u64_ > ((u64(1) << 63) - 1) / p) {
            size_fits_ = false;
            size_u64_ = 0;
            break;
        }
        size_u64_ *= p;
    }

    if (m == 1) {
        modulus_.assign(1, 0);  // placeholder x - 0
        return;
    }
    // smallest monic irreducible of degree m, by coefficient value
    std::vector<u64> c(m, 0);
    c[0] = 1;  // constant 0 would make x a factor
    for (;;) {
        if (c[0] != 0) {
            std::vector<u64> cand = c;
            cand.push_back(1);
            if (is_irreducible_fp(cand, p)) {
                modulus_ = c;
                return;
            }
        }
        // odometer in base p
        u32 i = 0;
        while (i < m && ++c[i] == p) c[i++] = 0;
        if (i == m) throw DomainError("Field: no irreducible modulus found");
    }
}

u64 Field::size() const {
    if (!size_fits_) throw SizeError("Field: p^m does not fit in 64 bits");
    return size_u64_;
}

FqElement Field::zero() const { return FqElement{std::vector<u64>(m_, 0)}; }

FqElement Field::one() const { return from_scalar(1); }

FqElement Field::from_scalar(u64 v) const {
    FqElement e = zero();
    e.c[0] = v % p_;
    return e;
}

FqElement Field::gen() const {
    if (m_ == 1) throw DomainError("Field::gen: prime field has no power-basis generator");
    FqElement e = zero();
    e.c[1] = 1;
    return e;
}

bool Field::is_zero(const FqElement& a) const {
    for (u64 x : a.c)
        if (x != 0) return false;
    return true;
}

FqElement Field::add(const FqElement& a, const FqElement& b) const {
    FqElement r = zero();
    for (u32 i = 0; i < m_; ++i) r.c[i] = (a.c[i] + b.c[i]) % p_;
    return r;
}

FqElement Field::sub(const FqElement& a, const FqElement& b) const {
    FqElement r = zero();
    for (u32 i = 0; i < m_; ++i) r.c[i] = (a.c[i] + p_ - b.c[i]) % p_;
    return r;
}

FqElement Field::neg(const FqElement& a) const {
    FqElement r = zero();
    for (u32 i = 0; i < m_; ++i) r.c[i] = a.c[i] == 0 ? 0 : p_ - a.c[i];
    return r;
}

FqElement Field::mul(const FqElement& a, const FqElement& b) const {
    if (m_ == 1) return FqElement{{mod_mul(a.c[0], b.c[0], p_)}};
    std::vector<u64> buf(2 * m_ - 1, 0);
    for (u32 i = 0; i < m_; ++i) {
        if (a.c[i] == 0) continue;
        for (u32 j = 0; j < m_; ++j) buf[i + j] = (buf[i + j] + a.c[i] * b.c[j]) % p_;
    }
    for (u32 k = 2 * m_ - 2; k >= m_; --k) {
        u64 c = buf[k];
        if (c == 0) continue;
        buf[k] = 0;
        for (u32 i = 0; i < m_; ++i) {
            if (modulus_[i] == 0) continue;
            buf[k - m_ + i] = (buf[k - m_ + i] + (p_ - modulus_[i]) * c) % p_;
        }
    }
    buf.resize(m_);
    return FqElement{std::move(buf)};
}

FqElement Field::inv(const FqElement& a) const {
    if (is_zero(a)) throw DomainError("field inverse of zero");
    if (m_ == 1) return FqElement{{mod_inverse(static_cast<i64>(a.c[0]), p_)}};
    std::vector<u64> f = modulus_;
    f.push_back(1);
    std::vector<u64> av = a.c;
    trim(av);
    std::vector<u64> r = vinv_mod(av, f, p_);
    r.resize(m_, 0);
    return FqElement{std::move(r)};
}

FqElement Field::pow(const FqElement& a, u64 e) const {
    FqElement result = one();
    FqElement base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FqElement Field::frobenius(const FqElement& a, u32 k) const {
    FqElement r = a;
    for (u32 i = 0; i < k; ++i) r = pow(r, p_);
    return r;
}

u64 Field::encode(const FqElement& a) const {
    if (!size_fits_) throw SizeError("Field::encode: p^m does not fit in 64 bits");
    u64 v = 0;
    for (u32 i = m_; i-- > 0;) v = v * p_ + a.c[i];
    return v;
}

FqElement Field::decode(u64 v) const {
    FqElement e = zero();
    for (u32 i = 0; i < m_; ++i) {
        e.c[i] = v % p_;
        v /= p_;
    }
    if (v != 0) throw DomainError("Field::decode: value out of range");
    return e;
}

bool Field::less(const FqElement& a, const FqElement& b) const {
    for (u32 i = m_; i-- > 0;) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

bool Field::next_element(FqElement& a) const {
    for (u32 i = 0; i < m_; ++i) {
        if (++a.c[i] < p_) return true;
        a.c[i] = 0;
    }
    return false;
}

void Field::ensure_canonical() const {
    static std::mutex mu;
    std::scoped_lock lock(mu);
    if (canon_) return;
    u64 q = size();  // throws if too big
    auto facs = std::make_shared<std::vector<PrimePower>>(factorize(q - 1).factors);
    FqElement cand = zero();
    while (next_element(cand)) {
        bool primitive = true;
        for (const auto& [r, e] : *facs) {
            (void)e;
            FqElement t = pow(cand, (q - 1) / r);
            if (t == one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            unit_group_factors_ = facs;
            canon_ = std::make_shared<const FqElement>(cand);
            return;
        }
    }
    throw DomainError("Field: no primitive element found");  // unreachable
}

const FqElement& Field::canonical_generator() const {
    ensure_canonical();
    return *canon_;
}

u64 Field::dlog(const FqElement& a) const {
    if (is_zero(a)) throw DomainError("dlog of zero");
    const FqElement& g = canonical_generator();
    u64 n = size() - 1;
    u64 step = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::unordered_map<u64, u64> baby;
    FqElement cur = one();
    for (u64 j = 0; j < step; ++j) {
        baby.emplace(encode(cur), j);
        cur = mul(cur, g);
    }
    FqElement giant = inv(pow(g, step));
    cur = a;
    for (u64 i = 0; i <= n / step + 1; ++i) {
        auto it = baby.find(encode(cur));
        if (it != baby.end()) return (i * step + it->second) % n;
        cur = mul(cur, giant);
    }
    throw DomainError("dlog: element not in the unit group");  // unreachable
}

std::shared_ptr<const Field> field_make(u64 p, u32 m) {
    static std::mutex mu;
    static std::map<std::pair<u64, u32>, std::shared_ptr<const Field>> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(p, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const Field>(p, m);
    cache.emplace(key, f);
    return f;
}

// ---------------------------------------------------------------------------
// Polynomials

FqPoly poly_zero() { return FqPoly{}; }

FqPoly poly_one(const Field& f) { return FqPoly{{f.one()}}; }

FqPoly poly_x(const Field& f) { return FqPoly{{f.zero(), f.one()}}; }

FqPoly poly_from_coeffs(const Field& f, std::vector<FqElement> coeffs) {
    while (!coeffs.empty() && f.is_zero(coeffs.back())) coeffs.pop_back();
    return FqPoly{std::move(coeffs)};
}

FqPoly poly_scalar(const Field& f, u64 v) {
    return poly_from_coeffs(f, {f.from_scalar(v)});
}

FqPoly poly_add(const Field& f, const FqPoly& a, const FqPoly& b) {
    std::vector<FqElement> r(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.coeffs.size()) r[i] = f.add(r[i], a.coeffs[i]);
        if (i < b.coeffs.size()) r[i] = f.add(r[i], b.coeffs[i]);
    }
    return poly_from_coeffs(f, std::move(r));
}

FqPoly poly_sub(const Field& f, const FqPoly& a, const FqPoly& b) {
    std::vector<FqElement> r(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.coeffs.size()) r[i] = f.add(r[i], a.coeffs[i]);
        if (i < b.coeffs.size()) r[i] = f.sub(r[i], b.coeffs[i]);
    }
    return poly_from_coeffs(f, std::move(r));
}

FqPoly poly_mul(const Field& f, const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return poly_zero();
    std::vector<FqElement> r(a.coeffs.size() + b.coeffs.size() - 1, f.zero());
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (f.is_zero(a.coeffs[i])) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    }
    return poly_from_coeffs(f, std::move(r));
}

FqPoly poly_scale(const Field& f, const FqPoly& a, const FqElement& s) {
    std::vector<FqElement> r = a.coeffs;
    for (auto& c : r) c = f.mul(c, s);
    return poly_from_coeffs(f, std::move(r));
}

PolyDivMod poly_divmod(const Field& f, const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {poly_zero(), a};
    FqElement lead_inv = f.inv(b.coeffs.back());
    std::vector<FqElement> rem = a.coeffs;
    std::vector<FqElement> quot(a.coeffs.size() - b.coeffs.size() + 1, f.zero());
    while (rem.size() >= b.coeffs.size()) {
        FqElement c = f.mul(rem.back(), lead_inv);
        size_t shift = rem.size() - b.coeffs.size();
        quot[shift] = c;
        for (size_t i = 0; i < b.coeffs.size(); ++i)
            rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b.coeffs[i]));
        while (!rem.empty() && f.is_zero(rem.back())) rem.pop_back();
    }
    return {poly_from_coeffs(f, std::move(quot)), poly_from_coeffs(f, std::move(rem))};
}

FqPoly poly_make_monic(const Field& f, const FqPoly& a) {
    if (a.is_zero()) return a;
    if (a.coeffs.back() == f.one()) return a;
    return poly_scale(f, a, f.inv(a.coeffs.back()));
}

FqPoly poly_gcd(const Field& f, const FqPoly& a, const FqPoly& b) {
    FqPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        FqPoly rem = poly_divmod(f, r0, r1).remainder;
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    return poly_make_monic(f, r0);
}

FqPoly poly_pow(const Field& f, const FqPoly& a, u64 e) {
    FqPoly result = poly_one(f);
    FqPoly base = a;
    while (e > 0) {
        if (e & 1) result = poly_mul(f, result, base);
        base = poly_mul(f, base, base);
        e >>= 1;
    }
    return result;
}

FqElement poly_eval(const Field& f, const FqPoly& a, const FqElement& x) {
    FqElement acc = f.zero();
    for (size_t i = a.coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.coeffs[i]);
    return acc;
}

FqPoly reciprocal(const Field& f, const FqPoly& a) {
    if (a.is_zero() || f.is_zero(a.coeffs.front()))
        throw DomainError("reciprocal: constant term must be nonzero");
    std::vector<FqElement> r(a.coeffs.rbegin(), a.coeffs.rend());
    FqElement scale = f.inv(a.coeffs.front());
    for (auto& c : r) c = f.mul(c, scale);
    return poly_from_coeffs(f, std::move(r));
}

FqPoly conj_reciprocal(const Field& f, const FqPoly& a) {
    if (f.m() % 2 != 0)
        throw DomainError("conj_reciprocal: field must have square order");
    if (a.is_zero() || f.is_zero(a.coeffs.front()))
        throw DomainError("conj_reciprocal: constant term must be nonzero");
    const u32 half = f.m() / 2;
    std::vector<FqElement> r(a.coeffs.rbegin(), a.coeffs.rend());
    for (auto& c : r) c = f.frobenius(c, half);
    FqElement scale = f.inv(f.frobenius(a.coeffs.front(), half));
    for (auto& c : r) c = f.mul(c, scale);
    return poly_from_coeffs(f, std::move(r));
}

namespace {

// h^(p^m) mod f, one Frobenius application per pow-p step
FqPoly poly_pow_p_mod(const Field& k, FqPoly h, const FqPoly& f) {
    u64 e = k.p();
    FqPoly result = poly_one(k);
    while (e > 0) {
        if (e & 1) result = poly_divmod(k, poly_mul(k, result, h), f).remainder;
        h = poly_divmod(k, poly_mul(k, h, h), f).remainder;
        e >>= 1;
    }
    return result;
}

FqPoly poly_frobenius_mod(const Field& k, const FqPoly& h, const FqPoly& f) {
    FqPoly r = h;
    for (u32 i = 0; i < k.m(); ++i) r = poly_pow_p_mod(k, r, f);
    return r;
}

}  // namespace

bool is_irreducible(const Field& k, const FqPoly& a) {
    int n = a.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    if (k.is_zero(a.coeffs.front())) return false;  // divisible by x
    if (k.m() == 1) {
        std::vector<u64> raw;
        raw.reserve(a.coeffs.size());
        for (const auto& c : a.coeffs) raw.push_back(c.c[0]);
        return is_irreducible_fp(raw, k.p());
    }
    // Rabin: x^{q^n} = x mod a, and gcd(x^{q^{n/r}} - x, a) = 1 for prime r | n
    std::vector<u64> checkpoints;
    for (const auto& [r, e] : factorize(static_cast<u64>(n)).factors) {
        (void)e;
        checkpoints.push_back(static_cast<u64>(n) / r);
    }
    FqPoly h = poly_x(k);
    const FqPoly x = poly_x(k);
    for (u64 i = 1; i <= static_cast<u64>(n); ++i) {
        h = poly_frobenius_mod(k, h, a);
        if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
            FqPoly g = poly_gcd(k, poly_sub(k, h, x), a);
            if (g.degree() != 0) return false;
        }
    }
    return h == x;
}

// ---------------------------------------------------------------------------
// Text form

std::string elem_to_string(const Field& f, const FqElement& a) {
    if (f.m() == 1) return std::to_string(a.c[0]);
    if (f.is_zero(a)) return "0";
    u64 j = f.dlog(a);
    if (j == 0) return "1";
    if (j == 1) return "a";
    return "a^" + std::to_string(j);
}

std::string poly_to_string(const Field& f, const FqPoly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (size_t i = a.coeffs.size(); i-- > 0;) {
        const FqElement& c = a.coeffs[i];
        if (f.is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        std::string cs = elem_to_string(f, c);
        if (i == 0) {
            out += cs;
        } else {
            std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
            out += cs == "1" ? xs : cs + "*" + xs;
        }
    }
    return out;
}

namespace {

struct Parser {
    const Field& f;
    std::string s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    u64 parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw DomainError("poly_parse: expected a number at position " + std::to_string(pos));
        u64 v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return v;
    }

    bool at_alpha() {
        skip_ws();
        if (pos >= s.size()) return false;
        if (s[pos] == 'a') return true;
        // UTF-8 for the Greek alpha
        return pos + 1 < s.size() && static_cast<unsigned char>(s[pos]) == 0xCE &&
               static_cast<unsigned char>(s[pos + 1]) == 0xB1;
    }

    void eat_alpha() {
        if (s[pos] == 'a')
            ++pos;
        else
            pos += 2;
    }

    // term := factor ('*' factor)*, factors: uint | a[^j] | x[^k]
    struct Term {
        FqElement coeff;
        u64 xpow = 0;
    };

    Term parse_term() {
        Term t{f.one(), 0};
        bool first = true;
        for (;;) {
            skip_ws();
            if (!first && !eat('*')) break;
            skip_ws();
            if (pos >= s.size()) {
                if (first) throw DomainError("poly_parse: empty term");
                break;
            }
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                t.coeff = f.mul(t.coeff, f.from_scalar(parse_uint()));
            } else if (s[pos] == 'x') {
                ++pos;
                u64 k = 1;
                if (eat('^')) k = parse_uint();
                t.xpow += k;
            } else if (at_alpha()) {
                eat_alpha();
                u64 j = 1;
                if (eat('^')) j = parse_uint();
                if (f.m() == 1)
                    throw DomainError("poly_parse: generator symbol in a prime field");
                t.coeff = f.mul(t.coeff, f.pow(f.canonical_generator(), j));
            } else {
                if (first) throw DomainError("poly_parse: unexpected character at position " +
                                             std::to_string(pos));
                break;
            }
            first = false;
        }
        return t;
    }
};

}  // namespace

FqPoly poly_parse(const Field& f, const std::string& text) {
    Parser p{f, text};
    std::vector<FqElement> coeffs;
    bool negate = false;
    p.skip_ws();
    if (p.eat('-')) negate = true;
    for (;;) {
        auto t = p.parse_term();
        if (negate) t.coeff = f.neg(t.coeff);
        if (coeffs.size() <= t.xpow) coeffs.resize(t.xpow + 1, f.zero());
        coeffs[t.xpow] = f.add(coeffs[t.xpow], t.coeff);
        p.skip_ws();
        if (p.pos >= p.s.size()) break;
        if (p.eat('+'))
            negate = false;
        else if (p.eat('-'))
            negate = true;
        else
            throw DomainError("poly_parse: expected '+' at position " + std::to_string(p.pos));
    }
    return poly_from_coeffs(f, std::move(coeffs));
}

}  // namespace goodint
