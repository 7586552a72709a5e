#include "lineideal/exact_rank.hpp"

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <utility>

namespace lineideal {

namespace {

struct Overflow {};

struct CheckedInt64 {
    using Scalar = std::int64_t;

    static Scalar from(std::int64_t v) { return v; }
    static bool is_zero(const Scalar& v) { return v == 0; }
    static bool is_one(const Scalar& v) { return v == 1; }
    static bool is_negative(const Scalar& v) { return v < 0; }
    static Scalar mul(const Scalar& a, const Scalar& b) {
        Scalar r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static Scalar sub(const Scalar& a, const Scalar& b) {
        Scalar r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static Scalar neg(const Scalar& a) { return sub(0, a); }
    static Scalar gcd(const Scalar& a, const Scalar& b) {
        if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
        return std::gcd(a, b);
    }
    static Scalar div_exact(const Scalar& a, const Scalar& b) { return a / b; }
};

struct BigInt {
    using Scalar = mpz_class;

    static Scalar from(std::int64_t v) { return Scalar(static_cast<long>(v)); }
    static bool is_zero(const Scalar& v) { return sgn(v) == 0; }
    static bool is_one(const Scalar& v) { return v == 1; }
    static bool is_negative(const Scalar& v) { return sgn(v) < 0; }
    static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
    static Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
    static Scalar neg(const Scalar& a) { return -a; }
    static Scalar gcd(const Scalar& a, const Scalar& b) {
        Scalar r;
        mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }
    static Scalar div_exact(const Scalar& a, const Scalar& b) {
        Scalar r;
        mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }
};

// Incremental row echelon basis over the integers. Pivot rows are primitive
// with a positive leading coefficient.
template <class Ops>
class IntegerEchelon {
    using Scalar = typename Ops::Scalar;
    struct Entry {
        std::uint32_t col;
        Scalar value;
    };
    using Row = std::vector<Entry>;

public:
    std::size_t rank(std::span<const SparseRow> rows) {
        std::size_t r = 0;
        for (const SparseRow& input : rows) {
            Row row;
            row.reserve(input.size());
            for (const SparseEntry& e : input)
                if (e.value != 0) row.push_back({e.col, Ops::from(e.value)});
            if (insert(std::move(row))) ++r;
        }
        return r;
    }

private:
    bool insert(Row row) {
        while (!row.empty()) {
            const std::uint32_t lead = row.front().col;
            if (lead >= pivots_.size()) pivots_.resize(lead + 1);
            Row& pivot = pivots_[lead];
            if (pivot.empty()) {
                make_primitive(row);
                pivot = std::move(row);
                return true;
            }
            row = eliminate(row, pivot);
        }
        return false;
    }

    // b*row - a*pivot with the leading terms cancelling; b is the pivot lead.
    static Row eliminate(const Row& row, const Row& pivot) {
        Scalar a = row.front().value;
        Scalar b = pivot.front().value;
        if (!Ops::is_one(b)) {
            const Scalar g = Ops::gcd(a, b);
            a = Ops::div_exact(a, g);
            b = Ops::div_exact(b, g);
        }
        const bool scale_row = !Ops::is_one(b);

        Row out;
        out.reserve(row.size() + pivot.size());
        std::size_t i = 1;
        std::size_t j = 1;
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
                out.push_back({row[i].col, scale_row ? Ops::mul(b, row[i].value) : row[i].value});
                ++i;
            } else if (i == row.size() || pivot[j].col < row[i].col) {
                out.push_back({pivot[j].col, Ops::neg(Ops::mul(a, pivot[j].value))});
                ++j;
            } else {
                const Scalar lhs = scale_row ? Ops::mul(b, row[i].value) : row[i].value;
                Scalar v = Ops::sub(lhs, Ops::mul(a, pivot[j].value));
                if (!Ops::is_zero(v)) out.push_back({row[i].col, std::move(v)});
                ++i;
                ++j;
            }
        }
        if (scale_row) make_primitive(out);
        return out;
    }

    static void make_primitive(Row& row) {
        if (row.empty()) return;
        Scalar g = row.front().value;
        for (std::size_t k = 1; k < row.size() && !Ops::is_one(g); ++k) g = Ops::gcd(g, row[k].value);
        if (Ops::is_negative(g)) g = Ops::neg(g);
        if (Ops::is_negative(row.front().value)) g = Ops::neg(g);
        if (Ops::is_one(g)) return;
        for (Entry& e : row) e.value = Ops::div_exact(e.value, g);
    }

    std::vector<Row> pivots_;
};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (exp != 0) {
        if (exp & 1U) r = r * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return r;
}

std::size_t rank_mod_p(std::span<const SparseRow> rows, std::uint64_t p) {
    struct Entry {
        std::uint32_t col;
        std::uint64_t value;
    };
    using Row = std::vector<Entry>;
    std::vector<Row> pivots;  // leading coefficient 1
    std::size_t rank = 0;

    for (const SparseRow& input : rows) {
        Row row;
        for (const SparseEntry& e : input) {
            const auto m = static_cast<std::int64_t>(p);
            const auto v = static_cast<std::uint64_t>(((e.value % m) + m) % m);
            if (v != 0) row.push_back({e.col, v});
        }
        while (!row.empty()) {
            const std::uint32_t lead = row.front().col;
            if (lead >= pivots.size()) pivots.resize(lead + 1);
            Row& pivot = pivots[lead];
            if (pivot.empty()) {
                const std::uint64_t inv = mod_pow(row.front().value, p - 2, p);
                for (Entry& e : row) e.value = e.value * inv % p;
                pivot = std::move(row);
                ++rank;
                break;
            }
            const std::uint64_t a = row.front().value;
            Row out;
            std::size_t i = 1;
            std::size_t j = 1;
            while (i < row.size() || j < pivot.size()) {
                if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
                    out.push_back(row[i++]);
                } else if (i == row.size() || pivot[j].col < row[i].col) {
                    out.push_back({pivot[j].col, (p - a * pivot[j].value % p) % p});
                    ++j;
                } else {
                    const std::uint64_t v = (row[i].value + p - a * pivot[j].value % p) % p;
                    if (v != 0) out.push_back({row[i].col, v});
                    ++i;
                    ++j;
                }
            }
            row = std::move(out);
        }
    }
    return rank;
}

} // namespace

std::size_t exact_rank(std::span<const SparseRow> rows, Field field) {
    if (!field.is_rational()) return rank_mod_p(rows, field.characteristic());
    try {
        return IntegerEchelon<CheckedInt64>{}.rank(rows);
    } catch (const Overflow&) {
        return exact_rank_bignum(rows);
    }
}

std::size_t exact_rank_bignum(std::span<const SparseRow> rows) {
    return IntegerEchelon<BigInt>{}.rank(rows);
}

} // namespace lineideal
