#include "supercoset/matrix.hpp"

#include <sstream>

namespace supercoset {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("Matrix: dimension mismatch in product");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).isZero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

Matrix Matrix::hcat(const Matrix& o) const {
    if (rows_ != o.rows_) throw Error("Matrix: row mismatch in hcat");
    Matrix out(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
    }
    return out;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && m.at(pivot, col).isZero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        Scalar inv = m.at(rank, col).inverse();
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            if (m.at(i, col).isZero()) continue;
            Scalar factor = m.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j)
                m.at(i, j) -= factor * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw Error("Matrix: inverse of a non-square matrix");
    Matrix m = *this;
    Matrix inv = identity(rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m.at(pivot, col).isZero()) ++pivot;
        if (pivot == rows_) throw Error("Matrix: singular matrix has no inverse");
        if (pivot != col)
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Scalar scale = m.at(col, col).inverse();
        for (std::size_t j = 0; j < cols_; ++j) {
            m.at(col, j) *= scale;
            inv.at(col, j) *= scale;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == col || m.at(i, col).isZero()) continue;
            Scalar factor = m.at(i, col);
            for (std::size_t j = 0; j < cols_; ++j) {
                m.at(i, j) -= factor * m.at(col, j);
                inv.at(i, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::optional<std::vector<std::size_t>> Matrix::rowPivotColumns() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < rows_; ++r) {
        // Clear the previously chosen pivot columns from this row.
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            Scalar factor = m.at(r, pivots[k]) / m.at(k, pivots[k]);
            if (factor.isZero()) continue;
            for (std::size_t j = 0; j < cols_; ++j) m.at(r, j) -= factor * m.at(k, j);
        }
        std::size_t col = 0;
        while (col < cols_ && m.at(r, col).isZero()) ++col;
        if (col == cols_) return std::nullopt;
        pivots.push_back(col);
    }
    return pivots;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

}  // namespace supercoset
