/*
   Copyright 2026 The sextic-strata Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SEXTIC_MATRIX_HPP
#define SEXTIC_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace sextic {

/// Dense row-major matrix of field elements.
template <class K>
class Matrix {
   public:
    using Field = K;
    using Scalar = typename K::value_type;
    using Vector = std::vector<Scalar>;

    Matrix() = default;
    Matrix(K field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}
    Matrix(K field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows * cols) throw ShapeError("Matrix: entry count does not match shape");
    }

    static Matrix identity(const K& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }
    static Matrix from_ints(const K& field, const std::vector<std::vector<long long>>& rows) {
        const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        Matrix m(field, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw ShapeError("Matrix::from_ints: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
        }
        return m;
    }

    const K& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<Scalar>& entries() const { return a_; }

    Vector row(std::size_t i) const { return Vector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    Vector column(std::size_t j) const {
        Vector out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("Matrix product: inner dimensions differ");
        Matrix c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& x = a(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
            }
        return c;
    }

    Vector apply(const Vector& v) const {
        if (v.size() != cols_) throw ShapeError("Matrix::apply: vector length does not match column count");
        Vector out(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool is_zero_matrix() const {
        for (const auto& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Places b to the right of a.
    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw ShapeError("hstack: row counts differ");
        Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
        }
        return out;
    }
    /// Places b below a.
    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw ShapeError("vstack: column counts differ");
        Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
        std::copy(a.a_.begin(), a.a_.end(), out.a_.begin());
        std::copy(b.a_.begin(), b.a_.end(), out.a_.begin() + static_cast<std::ptrdiff_t>(a.a_.size()));
        return out;
    }
    /// Copies b into this matrix with its top-left corner at (r, c).
    void place(const Matrix& b, std::size_t r, std::size_t c) {
        if (r + b.rows_ > rows_ || c + b.cols_ > cols_) throw ShapeError("place: block does not fit");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r + i, c + j) = b(i, j);
    }

   private:
    K field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_{};
};

/// Reduced row echelon form together with its pivot columns.
template <class K>
struct Echelon {
    Matrix<K> reduced;
    std::vector<std::size_t> pivots;
};

template <class K>
Echelon<K> rref(Matrix<K> m) {
    using Scalar = typename K::value_type;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Scalar inv = m.field().one() / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

/// Rank by forward elimination (no back substitution).
template <class K>
std::size_t rank(Matrix<K> m) {
    using Scalar = typename K::value_type;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Scalar inv = m.field().one() / m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, c))) continue;
            const Scalar f = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Basis of the right kernel {v : M v = 0}, one vector per free column of the echelon form.
template <class K>
std::vector<typename Matrix<K>::Vector> kernel_basis(const Matrix<K>& m) {
    const auto [red, pivots] = rref(m);
    const K& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<typename Matrix<K>::Vector> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        typename Matrix<K>::Vector v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
        out.push_back(std::move(v));
    }
    return out;
}

/// A solution of M x = b with every free variable set to zero, or nullopt if inconsistent.
template <class K>
std::optional<typename Matrix<K>::Vector> solve(const Matrix<K>& m, const typename Matrix<K>::Vector& b) {
    if (b.size() != m.rows()) throw ShapeError("solve: right-hand side length does not match row count");
    Matrix<K> aug(m.field(), m.rows(), m.cols() + 1);
    aug.place(m, 0, 0);
    for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
    const auto [red, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    typename Matrix<K>::Vector x(m.cols(), m.field().zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
    return x;
}

/// Matrix whose columns are the given vectors.
template <class K>
Matrix<K> from_columns(const K& field, std::size_t rows, const std::vector<typename Matrix<K>::Vector>& cols) {
    Matrix<K> m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw ShapeError("from_columns: vector length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

}  // namespace sextic

#endif
