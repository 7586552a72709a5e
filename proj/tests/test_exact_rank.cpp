#include <doctest.h>

#include <random>

#include "lineideal/exact_rank.hpp"
#include "support/oracles.hpp"

using namespace lineideal;

namespace {

std::vector<SparseRow> to_sparse(const std::vector<std::vector<long long>>& dense) {
    std::vector<SparseRow> rows;
    for (const auto& r : dense) {
        SparseRow s;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) s.push_back({static_cast<std::uint32_t>(c), r[c]});
        rows.push_back(std::move(s));
    }
    return rows;
}

std::size_t oracle_rank(const std::vector<std::vector<long long>>& dense) {
    std::vector<std::vector<oracle::Rational>> m;
    for (const auto& r : dense) {
        std::vector<oracle::Rational> row;
        for (long long v : r) row.emplace_back(v);
        m.push_back(std::move(row));
    }
    return oracle::dense_rank(std::move(m));
}

} // namespace

TEST_CASE("exact rank on small fixed matrices") {
    CHECK(exact_rank(to_sparse({{1, 2}, {2, 4}})) == 1);
    CHECK(exact_rank(to_sparse({{2, 3}, {4, 5}})) == 2);
    CHECK(exact_rank(to_sparse({})) == 0);
    CHECK(exact_rank(to_sparse({{0, 0}, {0, 0}})) == 0);
    // Over GF(2) the rows 1 1 / 1 -1 coincide.
    CHECK(exact_rank(to_sparse({{1, 1}, {1, -1}})) == 2);
    CHECK(exact_rank(to_sparse({{1, 1}, {1, -1}}), Field::prime(2)) == 1);
}

TEST_CASE("exact rank agrees with a dense rational oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(1, 9);
    std::uniform_int_distribution<int> val(-4, 4);
    std::bernoulli_distribution sparse(0.55);
    for (int t = 0; t < 300; ++t) {
        const int r = dim(rng);
        const int c = dim(rng);
        std::vector<std::vector<long long>> m(static_cast<std::size_t>(r), std::vector<long long>(static_cast<std::size_t>(c)));
        for (auto& row : m)
            for (auto& x : row) x = sparse(rng) ? 0 : val(rng);
        // Some rows as combinations of others to force rank deficiency.
        if (r >= 3) {
            for (std::size_t k = 0; k < m[0].size(); ++k) m[2][k] = 3 * m[0][k] - 2 * m[1][k];
        }
        const auto rows = to_sparse(m);
        const std::size_t expected = oracle_rank(m);
        CHECK(exact_rank(rows) == expected);
        CHECK(exact_rank_bignum(rows) == expected);
    }
}

TEST_CASE("int64 overflow falls back to big integers") {
    // Pivots are large primes so cross-multiplication overflows 64 bits.
    const long long big = 3037000493LL;  // > sqrt(2^63)
    const std::vector<std::vector<long long>> m = {
        {big, 1, 0, 0},
        {big + 2, 0, 1, 0},
        {big + 6, 0, 0, 1},
        {3 * big + 8, 1, 1, 1},
    };
    CHECK(exact_rank(to_sparse(m)) == 3);
    CHECK(exact_rank_bignum(to_sparse(m)) == 3);
}

TEST_CASE("Field parsing") {
    CHECK(Field::parse("QQ").is_rational());
    CHECK(Field::parse("0").is_rational());
    CHECK(Field::parse("2").characteristic() == 2);
    CHECK(Field::parse("101").name() == "GF(101)");
    CHECK_THROWS_AS(Field::parse("4"), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse("x"), std::invalid_argument);
}
