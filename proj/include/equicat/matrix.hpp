// Dense matrices over Rational, with the exact elimination routines the
// rest of the library is built on. A linear map is identified with its
// matrix: domain dimension = cols, codomain dimension = rows. Zero-row and
// zero-column shapes are legal everywhere; dimension-0 spaces show up
// routinely as kernels and images.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "equicat/rational.hpp"

namespace equicat {

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> grid) {
        rows_ = grid.size();
        cols_ = rows_ == 0 ? 0 : grid.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : grid) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (const auto& e : row) entries_.push_back(e);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Matrix column(std::size_t c) const {
        Matrix v(rows_, 1);
        for (std::size_t r = 0; r < rows_; ++r) v.at(r, 0) = at(r, c);
        return v;
    }

    /// Columns [first, first + count) as a new matrix.
    Matrix columns(std::size_t first, std::size_t count) const {
        Matrix m(rows_, count);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < count; ++c) m.at(r, c) = at(r, first + c);
        return m;
    }

    /// Rows [first, first + count) as a new matrix.
    Matrix row_block(std::size_t first, std::size_t count) const {
        Matrix m(count, cols_);
        for (std::size_t r = 0; r < count; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(first + r, c);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& e : m.entries_) e = -e;
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "add");
        Matrix m = a;
        for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "subtract");
        Matrix m = a;
        for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] -= b.entries_[i];
        return m;
    }

    friend Matrix operator*(const Rational& s, const Matrix& a) {
        Matrix m = a;
        for (auto& e : m.entries_) e *= s;
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix: product shape mismatch (" + a.shape_str() +
                                        " * " + b.shape_str() + ")");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& ark = a.at(r, k);
                if (ark.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) m.at(r, c) += ark * b.at(k, c);
            }
        return m;
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument(std::string("Matrix: ") + op + " shape mismatch (" +
                                        a.shape_str() + " vs " + b.shape_str() + ")");
    }

    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

// A linear map is its matrix; the names below are used where code reads as
// maps between spaces rather than as grids.
using LinearMap = Matrix;

inline LinearMap compose(const LinearMap& g, const LinearMap& f) { return g * f; }

inline Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
    }
    return m;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m.at(a.rows() + r, c) = b.at(r, c);
    return m;
}

inline Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m.at(a.rows() + r, a.cols() + c) = b.at(r, c);
    return m;
}

namespace detail {

// In-place reduced row echelon form. Pivot choice is the first nonzero
// entry scanning top to bottom; with exact arithmetic no other pivoting is
// needed and the result is the unique RREF of the row span. Returns the
// pivot column indices in order.
inline std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < m.rows() && m.at(pivot_row, col).is_zero()) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        if (pivot_row != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m.at(row, c), m.at(pivot_row, c));
        Rational inv_pivot = Rational(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv_pivot;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rational factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) -= factor * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(const Matrix& m) {
    Matrix work = m;
    return detail::rref_in_place(work).size();
}

inline Rational det(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
    Matrix work = m;
    std::size_t n = work.rows();
    Rational result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        while (pivot_row < n && work.at(pivot_row, col).is_zero()) ++pivot_row;
        if (pivot_row == n) return Rational(0);
        if (pivot_row != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(work.at(col, c), work.at(pivot_row, c));
            result = -result;
        }
        result *= work.at(col, col);
        Rational inv_pivot = Rational(1) / work.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (work.at(r, col).is_zero()) continue;
            Rational factor = work.at(r, col) * inv_pivot;
            for (std::size_t c = col; c < n; ++c) work.at(r, c) -= factor * work.at(col, c);
        }
    }
    return result;
}

inline bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
    std::size_t n = m.rows();
    Matrix work = hstack(m, Matrix::identity(n));
    auto pivots = detail::rref_in_place(work);
    // A pivot inside the identity block means the left block lost rank.
    for (std::size_t p : pivots)
        if (p >= n) throw std::domain_error("inverse: singular matrix");
    return work.columns(n, n);
}

/// Solves A*X = B exactly. Returns std::nullopt when the system is
/// inconsistent; otherwise one solution (the one with all free variables
/// zero, which is the unique solution when A has full column rank).
inline std::optional<Matrix> try_solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("try_solve: row count mismatch");
    Matrix work = hstack(a, b);
    auto pivots = detail::rref_in_place(work);
    // A pivot in the right block means some RHS column is outside the
    // column span of A.
    for (std::size_t p : pivots)
        if (p >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t c = 0; c < b.cols(); ++c) x.at(pivots[i], c) = work.at(i, a.cols() + c);
    return x;
}

}  // namespace equicat
