#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "supercoset/scalar.hpp"

namespace supercoset {

/// Dense matrix over the Gaussian rationals; just enough exact linear
/// algebra for differentials (rank, inverse, deterministic pivoting).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix operator*(const Matrix& o) const;

    /// Horizontal concatenation [this | o].
    Matrix hcat(const Matrix& o) const;

    std::size_t rank() const;
    bool isInvertible() const { return rows_ == cols_ && rank() == rows_; }
    Matrix inverse() const;  // throws on a singular matrix

    /// Row-echelon pivot columns with rows processed in order and no row
    /// swaps: row r is reduced by the previous pivots and its leftmost
    /// nonzero column becomes its pivot. Empty result if some row dies.
    std::optional<std::vector<std::size_t>> rowPivotColumns() const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace supercoset
