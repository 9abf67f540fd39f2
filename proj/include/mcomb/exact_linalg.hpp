#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcomb/chain_complex.hpp"

namespace mcomb {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
    static ExactMatrix from_boundary(const BoundaryMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ExactMatrix transposed() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(ExactMatrix m);

struct BettiRow {
    int dim = 0;
    std::size_t cells = 0;
    std::size_t rank_out = 0;  // rk d_dim
    std::size_t rank_in = 0;   // rk d_{dim+1}
    std::int64_t betti = 0;
};

struct BettiReport {
    std::vector<BettiRow> rows;  // ascending dim
    std::int64_t euler_cells = 0;
    std::int64_t euler_betti = 0;

    std::size_t rank_of(int k) const;
    std::int64_t betti_of(int dim) const;
};

/// b_k = dim C_k - rk d_k - rk d_{k+1}.  Throws NegativeBetti.
BettiReport betti(const ChainComplexData& complex, unsigned jobs = 1);

}  // namespace mcomb
