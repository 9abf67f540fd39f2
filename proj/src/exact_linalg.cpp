#include "mcomb/exact_linalg.hpp"

#include <map>

#include "mcomb/error.hpp"
#include "parallel.hpp"

namespace mcomb {

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorCode::Internal, "ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

ExactMatrix ExactMatrix::from_boundary(const BoundaryMatrix& b) {
    ExactMatrix m(b.rows.size(), b.cols.size());
    for (const auto& e : b.entries) m(e.row, e.col) = e.value;
    return m;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::size_t rank(ExactMatrix m) {
    // Every entry below the pivot rows stays a minor of the input, so the
    // division by the previous pivot is exact.
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    BigInt previous = 1;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t found = pivot_row;
        while (found < rows && m(found, col) == 0) ++found;
        if (found == rows) continue;
        if (found != pivot_row)
            for (std::size_t c = col; c < cols; ++c) std::swap(m(found, c), m(pivot_row, c));

        const BigInt pivot = m(pivot_row, col);
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            const BigInt factor = m(r, col);
            for (std::size_t c = col + 1; c < cols; ++c)
                m(r, c) = (pivot * m(r, c) - factor * m(pivot_row, c)) / previous;
            m(r, col) = 0;
        }
        previous = pivot;
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t BettiReport::rank_of(int k) const {
    for (const auto& row : rows)
        if (row.dim == k) return row.rank_out;
    return 0;
}

std::int64_t BettiReport::betti_of(int dim) const {
    for (const auto& row : rows)
        if (row.dim == dim) return row.betti;
    return 0;
}

BettiReport betti(const ChainComplexData& complex, unsigned jobs) {
    if (complex.catalog == nullptr) throw Error(ErrorCode::Internal, "complex without catalog");

    std::vector<int> ks;
    for (const auto& [k, m] : complex.matrices) ks.push_back(k);
    std::vector<std::size_t> ranks(ks.size());
    detail::parallel_for(ks.size(), jobs, [&](std::size_t i) {
        ranks[i] = rank(ExactMatrix::from_boundary(complex.matrices.at(ks[i])));
    });
    std::map<int, std::size_t> rank_by_k;
    for (std::size_t i = 0; i < ks.size(); ++i) rank_by_k[ks[i]] = ranks[i];
    auto rank_at = [&](int k) -> std::size_t {
        auto it = rank_by_k.find(k);
        return it == rank_by_k.end() ? 0 : it->second;
    };

    BettiReport report;
    for (int dim : complex.catalog->dims()) {
        BettiRow row;
        row.dim = dim;
        row.cells = complex.catalog->cells(dim).size();
        row.rank_out = rank_at(dim);
        row.rank_in = rank_at(dim + 1);
        row.betti = static_cast<std::int64_t>(row.cells) - static_cast<std::int64_t>(row.rank_out) -
                    static_cast<std::int64_t>(row.rank_in);
        if (row.betti < 0)
            throw Error(ErrorCode::NegativeBetti, "b_" + std::to_string(dim) + " = " +
                                                      std::to_string(row.betti));
        const std::int64_t sign = dim % 2 == 0 ? 1 : -1;
        report.euler_cells += sign * static_cast<std::int64_t>(row.cells);
        report.euler_betti += sign * row.betti;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace mcomb
