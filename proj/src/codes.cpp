#include "goodint/codes.hpp"

#include <algorithm>

#include "goodint/goodness.hpp"

namespace goodint {

CyclicCode make_code(std::shared_ptr<const FactorTable> table, std::vector<u64> exponents) {
    if (!table) throw DomainError("make_code: null table");
    if (exponents.size() != table->records.size())
        throw DomainError("make_code: one exponent per factor record required");
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > table->records[i].multiplicity)
            throw DomainError("make_code: exponent exceeds multiplicity");
    return {std::move(table), std::move(exponents)};
}

FqPoly generator_poly(const CyclicCode& c) {
    const Field& f = *c.table->field;
    FqPoly g = poly_one(f);
    for (size_t i = 0; i < c.exponents.size(); ++i) {
        if (c.exponents[i] == 0) continue;
        g = poly_mul(f, g, poly_pow(f, c.table->records[i].poly, c.exponents[i]));
    }
    return g;
}

u64 dimension(const CyclicCode& c) {
    u64 deg = 0;
    for (size_t i = 0; i < c.exponents.size(); ++i)
        deg += c.exponents[i] * static_cast<u64>(c.table->records[i].poly.degree());
    return c.table->n - deg;
}

CyclicCode dual_code(const CyclicCode& c) {
    const FactorTable& t = *c.table;
    std::vector<u64> dual(c.exponents.size());
    for (size_t i = 0; i < c.exponents.size(); ++i) {
        size_t j = t.partner_index(i);
        dual[i] = t.records[i].multiplicity - c.exponents[j];
    }
    return {c.table, std::move(dual)};
}

bool is_lcd(const CyclicCode& c) {
    const FactorTable& t = *c.table;
    for (size_t i = 0; i < c.exponents.size(); ++i) {
        const FactorRecord& r = t.records[i];
        u64 e = c.exponents[i];
        if (r.kind == FactorKind::SelfDual) {
            if (e != 0 && e != r.multiplicity) return false;
        } else if (r.kind == FactorKind::PairPrimary) {
            u64 e2 = c.exponents[t.partner_index(i)];
            bool both_zero = e == 0 && e2 == 0;
            bool both_full = e == r.multiplicity && e2 == r.multiplicity;
            if (!both_zero && !both_full) return false;
        }
    }
    return true;
}

bool is_self_dual(const CyclicCode& c) {
    const FactorTable& t = *c.table;
    if (t.p != 2 || t.t == 0) return false;
    const u64 mult = t.multiplicity();
    for (size_t i = 0; i < c.exponents.size(); ++i) {
        const FactorRecord& r = t.records[i];
        u64 e = c.exponents[i];
        if (r.kind == FactorKind::SelfDual) {
            if (e != mult / 2) return false;
        } else if (r.kind == FactorKind::PairPrimary) {
            if (e + c.exponents[t.partner_index(i)] != mult) return false;
        }
    }
    return true;
}

namespace {

struct DivisorSplit {
    u64 good_slots = 0;  // sum of gamma_d over d in the class
    u64 pair_slots = 0;  // sum of gamma_d / 2 over d outside the class
    u32 t = 0;
    u64 p = 2;
};

DivisorSplit divisor_split(u64 n, u64 p, u32 m, Duality duality) {
    if (n == 0) throw DomainError("code counting: n must be positive");
    if (!is_prime(p)) throw DomainError("code counting: p must be prime");
    if (m == 0) throw DomainError("code counting: m must be positive");
    DivisorSplit out;
    out.p = p;
    u64 N = n;
    while (N % p == 0) {
        N /= p;
        ++out.t;
    }
    const u64 limit = (u64(1) << 62);
    u64 base = 1;  // p^m, the goodness base
    for (u32 i = 0; i < m; ++i) {
        if (base > limit / p) throw SizeError("code counting: p^m exceeds 2^62");
        base = base * p;
    }
    u64 q = base;  // coefficient field order
    if (duality == Duality::Hermitian) {
        if (q > limit / base) throw SizeError("code counting: p^2m exceeds 2^62");
        q = q * base;
    }
    for (u64 d : divisors(N)) {
        u64 gamma = euler_phi(d) / mult_order(static_cast<i64>(q % d == 0 ? 0 : q % d), d);
        Classification cls = classify({static_cast<i64>(base), 1, d});
        bool in_class = duality == Duality::Euclidean ? cls.good : cls.oddly;
        if (in_class)
            out.good_slots += gamma;
        else
            out.pair_slots += gamma / 2;
    }
    return out;
}

}  // namespace

CodeCount count_lcd(u64 n, u64 p, u32 m, Duality duality) {
    DivisorSplit s = divisor_split(n, p, m, duality);
    return CodeCount(1) << (s.good_slots + s.pair_slots);
}

CodeCount count_self_dual(u64 n, u64 p, u32 m, Duality duality) {
    DivisorSplit s = divisor_split(n, p, m, duality);
    if (p != 2 || s.t == 0) return 0;
    CodeCount base = (CodeCount(1) << s.t) + 1;
    return boost::multiprecision::pow(base, static_cast<unsigned>(s.pair_slots));
}

CodeCount count_lcd_from_table(const FactorTable& table) {
    u64 slots = 0;
    for (const auto& r : table.records)
        if (r.kind != FactorKind::PairSecondary) ++slots;
    return CodeCount(1) << slots;
}

CodeCount count_self_dual_from_table(const FactorTable& table) {
    if (table.p != 2 || table.t == 0) return 0;
    u64 pairs = 0;
    for (const auto& r : table.records)
        if (r.kind == FactorKind::PairPrimary) ++pairs;
    CodeCount base = (CodeCount(1) << table.t) + 1;
    return boost::multiprecision::pow(base, static_cast<unsigned>(pairs));
}

// ---------------------------------------------------------------------------
// Enumeration

CodeEnumerator::CodeEnumerator(std::shared_ptr<const FactorTable> table, CodeFamily family,
                               std::optional<u64> limit)
    : table_(std::move(table)), family_(family), limit_(limit) {
    const FactorTable& t = *table_;
    const u64 mult = t.multiplicity();
    base_exponents_.assign(t.records.size(), 0);
    if (family_ == CodeFamily::SelfDual) {
        if (t.p != 2 || t.t == 0) {
            exhausted_ = true;
            total_ = 0;
            return;
        }
        total_ = count_self_dual_from_table(t);
        for (size_t i = 0; i < t.records.size(); ++i) {
            const FactorRecord& r = t.records[i];
            if (r.kind == FactorKind::SelfDual)
                base_exponents_[i] = mult / 2;
            else if (r.kind == FactorKind::PairPrimary)
                slots_.push_back({i, t.partner_index(i), 0, mult});
        }
    } else {
        total_ = count_lcd_from_table(t);
        for (size_t i = 0; i < t.records.size(); ++i) {
            const FactorRecord& r = t.records[i];
            if (r.kind == FactorKind::SelfDual)
                slots_.push_back({i, std::nullopt, 0, 1});
            else if (r.kind == FactorKind::PairPrimary)
                slots_.push_back({i, t.partner_index(i), 0, 1});
        }
    }
}

CyclicCode CodeEnumerator::current() const {
    std::vector<u64> exps = base_exponents_;
    const u64 mult = table_->multiplicity();
    for (const Slot& s : slots_) {
        if (family_ == CodeFamily::SelfDual) {
            exps[s.primary] = s.value;
            exps[*s.secondary] = mult - s.value;
        } else {
            u64 e = s.value == 0 ? 0 : mult;
            exps[s.primary] = e;
            if (s.secondary) exps[*s.secondary] = e;
        }
    }
    return {table_, std::move(exps)};
}

bool CodeEnumerator::advance() {
    // odometer with the last slot fastest: lexicographic over exponent vectors
    for (size_t i = slots_.size(); i-- > 0;) {
        if (slots_[i].value < slots_[i].max) {
            ++slots_[i].value;
            for (size_t j = i + 1; j < slots_.size(); ++j) slots_[j].value = 0;
            return true;
        }
    }
    return false;
}

std::optional<CyclicCode> CodeEnumerator::next() {
    if (exhausted_) return std::nullopt;
    if (limit_ && yielded_ >= *limit_) return std::nullopt;
    if (!started_) {
        started_ = true;
    } else if (!advance()) {
        exhausted_ = true;
        return std::nullopt;
    }
    ++yielded_;
    return current();
}

// ---------------------------------------------------------------------------
// Brute-force verification

namespace {

using Matrix = std::vector<std::vector<FqElement>>;

// Row-reduce in place; returns the rank.
u64 row_reduce(const Field& f, Matrix& mat) {
    u64 rank = 0;
    size_t cols = mat.empty() ? 0 : mat[0].size();
    for (size_t col = 0; col < cols && rank < mat.size(); ++col) {
        size_t pivot = rank;
        while (pivot < mat.size() && f.is_zero(mat[pivot][col])) ++pivot;
        if (pivot == mat.size()) continue;
        std::swap(mat[rank], mat[pivot]);
        FqElement inv = f.inv(mat[rank][col]);
        for (auto& x : mat[rank]) x = f.mul(x, inv);
        for (size_t r = 0; r < mat.size(); ++r) {
            if (r == rank || f.is_zero(mat[r][col])) continue;
            FqElement c = mat[r][col];
            for (size_t j = 0; j < cols; ++j)
                mat[r][j] = f.sub(mat[r][j], f.mul(c, mat[rank][j]));
        }
        ++rank;
    }
    return rank;
}

// Basis of { x : M x = 0 }.
Matrix nullspace(const Field& f, Matrix mat, size_t cols) {
    u64 rank = row_reduce(f, mat);
    (void)rank;
    std::vector<std::optional<size_t>> pivot_of_col(cols);
    size_t r = 0;
    for (size_t col = 0; col < cols && r < mat.size(); ++col) {
        if (!f.is_zero(mat[r][col])) {
            pivot_of_col[col] = r;
            ++r;
        }
    }
    Matrix basis;
    for (size_t col = 0; col < cols; ++col) {
        if (pivot_of_col[col]) continue;
        std::vector<FqElement> v(cols, f.zero());
        v[col] = f.one();
        for (size_t c2 = 0; c2 < col; ++c2) {
            if (pivot_of_col[c2]) v[c2] = f.neg(mat[*pivot_of_col[c2]][col]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

VerifyReport brute_verify(const CyclicCode& c) {
    const FactorTable& t = *c.table;
    if (t.n > 256) throw SizeError("brute_verify: length is guarded at 256");
    const Field& f = *t.field;
    const size_t n = static_cast<size_t>(t.n);

    FqPoly g = generator_poly(c);
    const size_t k = n - static_cast<size_t>(g.degree());

    Matrix gen(k, std::vector<FqElement>(n, f.zero()));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < g.coeffs.size(); ++j) gen[i][i + j] = g.coeffs[j];

    // orthogonality system: conjugate entries for the Hermitian product
    Matrix system = gen;
    if (t.duality == Duality::Hermitian) {
        const u32 half = f.m() / 2;
        for (auto& row : system)
            for (auto& x : row) x = f.frobenius(x, half);
    }
    Matrix dual_basis = nullspace(f, std::move(system), n);

    VerifyReport report;
    report.dim = k;
    report.dim_dual = dual_basis.size();

    Matrix stacked = gen;
    for (auto& row : dual_basis) stacked.push_back(row);
    u64 stacked_rank = row_reduce(f, stacked);
    report.dim_intersection = report.dim + report.dim_dual - stacked_rank;
    report.lcd = report.dim_intersection == 0;
    report.self_dual = report.dim == report.dim_dual && report.dim_intersection == report.dim;
    return report;
}

}  // namespace goodint
