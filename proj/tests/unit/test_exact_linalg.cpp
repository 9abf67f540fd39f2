#include <algorithm>
#include <numeric>
#include <random>

#include <doctest.h>

#include "fixtures.hpp"
#include "mcomb/error.hpp"
#include "mcomb/exact_linalg.hpp"
#include "mcomb/invariants.hpp"

using namespace mcomb;

namespace {

// Textbook Gauss-Jordan over Q, used as the reference.
std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<Rational>> a;
    for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
    const std::size_t m = a.size(), n = m ? a[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<std::int64_t>> random_matrix(std::mt19937_64& rng, std::size_t rows,
                                                     std::size_t cols, int target_rank) {
    // Product of random rows x r and r x cols factors, so rank <= r.
    std::uniform_int_distribution<int> small(-3, 3);
    std::vector<std::vector<std::int64_t>> left(rows, std::vector<std::int64_t>(target_rank));
    std::vector<std::vector<std::int64_t>> right(target_rank, std::vector<std::int64_t>(cols));
    for (auto& r : left)
        for (auto& v : r) v = small(rng);
    for (auto& r : right)
        for (auto& v : r) v = small(rng);
    std::vector<std::vector<std::int64_t>> out(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (int t = 0; t < target_rank; ++t) out[i][j] += left[i][t] * right[t][j];
    return out;
}

}  // namespace

TEST_CASE("rank of small fixed matrices") {
    CHECK(rank(ExactMatrix(0, 0)) == 0);
    CHECK(rank(ExactMatrix(3, 4)) == 0);
    CHECK(rank(ExactMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(ExactMatrix::from_rows({{0, 1}, {1, 0}})) == 2);
    CHECK(rank(ExactMatrix::from_rows({{0, 0, 1}, {0, 0, 2}, {1, 0, 0}})) == 2);
    CHECK(rank(ExactMatrix::from_rows({{2, 4, 6}, {1, 2, 3}, {0, 0, 5}})) == 2);
    CHECK_THROWS_AS(ExactMatrix::from_rows({{1, 2}, {3}}), Error);
}

TEST_CASE("Bareiss rank agrees with a rational oracle and its symmetries") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        const int r = static_cast<int>(rng() % (std::min(rows, cols) + 1));
        auto a = random_matrix(rng, rows, cols, r);
        const std::size_t expected = rational_rank(a);
        CHECK(static_cast<int>(expected) <= r);
        const auto m = ExactMatrix::from_rows(a);
        REQUIRE(rank(m) == expected);
        CHECK(rank(m.transposed()) == expected);

        std::vector<std::size_t> perm(rows);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<std::int64_t>> permuted;
        for (auto p : perm) permuted.push_back(a[p]);
        for (auto& row : permuted)
            for (std::size_t c = 0; c < cols; ++c) row[c] *= static_cast<std::int64_t>(c % 3 + 1) * (c % 2 ? -1 : 1);
        CHECK(rank(ExactMatrix::from_rows(permuted)) == expected);
    }
}

TEST_CASE("large entries do not overflow") {
    const std::int64_t big = 3'000'000'000'000LL;
    CHECK(rank(ExactMatrix::from_rows({{big, big + 1}, {big + 1, big + 2}})) == 2);
    CHECK(rank(ExactMatrix::from_rows({{big, 2 * big}, {3 * big, 6 * big}})) == 1);
}

TEST_CASE("boundary ranks agree with the rational oracle") {
    for (const auto& [k, m] : genus2_complex().matrices) {
        CAPTURE(k);
        CHECK(rank(ExactMatrix::from_boundary(m)) == rational_rank(m.dense()));
    }
}

TEST_CASE("genus-2 ranks and Betti numbers") {
    const BettiReport report = betti(genus2_complex(), 4);
    CHECK(report.rank_of(8) == 8);
    CHECK(report.rank_of(7) == 20);
    CHECK(report.rank_of(6) == 27);
    CHECK(report.rank_of(5) == 18);
    CHECK(report.rank_of(4) == 3);
    const std::int64_t expected[] = {1, 0, 0, 5, 1, 1};
    for (int dim = 3; dim <= 8; ++dim) CHECK(report.betti_of(dim) == expected[dim - 3]);
    CHECK(report.euler_cells == 4);
    CHECK(report.euler_betti == 4);
}

TEST_CASE("genus-1 Betti numbers") {
    const auto cc = build_chain_complex(genus1_catalog());
    const BettiReport report = betti(cc);
    CHECK(report.betti_of(1) == 1);
    CHECK(report.betti_of(2) == 1);
}

TEST_CASE("inconsistent complexes are caught as negative Betti numbers") {
    ChainComplexData fake = genus2_complex();
    std::mt19937_64 rng(5);
    for (int k : {5, 6}) {
        auto& m = fake.matrices.at(k);
        m.entries.clear();
        for (std::size_t c = 0; c < m.cols.size(); ++c)
            for (std::size_t r = 0; r < m.rows.size(); ++r)
                m.entries.push_back({r, c, static_cast<std::int64_t>(rng() % 7) - 3});
    }
    try {
        betti(fake);
        FAIL("expected NegativeBetti");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NegativeBetti);
    }
}
