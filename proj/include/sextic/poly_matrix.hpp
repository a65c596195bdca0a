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

#ifndef SEXTIC_POLY_MATRIX_HPP
#define SEXTIC_POLY_MATRIX_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "form.hpp"

namespace sextic {

/// Matrix of homogeneous forms; cells may have different degrees.
template <class K>
class PolyMatrix {
   public:
    using Field = K;
    using FormT = Form<K>;

    PolyMatrix() = default;
    PolyMatrix(K field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, FormT(field_, 0)) {}
    PolyMatrix(K field, std::size_t rows, std::size_t cols, std::vector<FormT> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows * cols) throw ShapeError("PolyMatrix: entry count does not match shape");
    }
    static PolyMatrix from_rows(const K& field, const std::vector<std::vector<FormT>>& rows) {
        const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        PolyMatrix m(field, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw ShapeError("PolyMatrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    const K& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FormT& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const FormT& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<FormT>& entries() const { return a_; }

    PolyMatrix transpose() const {
        PolyMatrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        PolyMatrix s(field_, rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
        return s;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("PolyMatrix product: inner dimensions differ");
        PolyMatrix c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) {
                FormT acc(a.field_, 0);
                for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
                c(i, j) = acc;
            }
        return c;
    }

    /// Cell-wise equality of forms (zero forms of any degree are equal).
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

   private:
    K field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FormT> a_{};
};

/*
 * Determinant by Laplace expansion along rows, memoized on the set of columns
 * still available. Matrices here are at most 5x5, so the memo holds at most
 * 2^5 entries.
 */
template <class K>
Form<K> det_poly(const PolyMatrix<K>& m) {
    if (m.rows() != m.cols()) throw ShapeError("det_poly: matrix is not square");
    const std::size_t n = m.rows();
    if (n > 20) throw ShapeError("det_poly: matrix too large for cofactor expansion");
    std::unordered_map<std::uint32_t, Form<K>> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> Form<K> {
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
        if (row == n) return Form<K>::constant(m.field(), m.field().one());
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        Form<K> acc(m.field(), 0);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const Form<K>& e = m(row, c);
            if (!e.is_zero()) {
                Form<K> term = e * self(self, mask & ~(1u << c));
                if (sign > 0)
                    acc += term;
                else
                    acc -= term;
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1));
}

/// All maximal minors of a tall matrix, row subsets in lexicographic order.
template <class K>
std::vector<Form<K>> maximal_minors(const PolyMatrix<K>& m) {
    if (m.rows() < m.cols()) throw ShapeError("maximal_minors: fewer rows than columns");
    const std::size_t k = m.cols();
    std::vector<std::size_t> cols(k);
    for (std::size_t j = 0; j < k; ++j) cols[j] = j;
    std::vector<Form<K>> out;
    std::vector<std::size_t> sel(k);
    for (std::size_t j = 0; j < k; ++j) sel[j] = j;
    while (true) {
        out.push_back(det_poly(m.submatrix(sel, cols)));
        std::size_t i = k;
        while (i > 0 && sel[i - 1] == m.rows() - k + (i - 1)) --i;
        if (i == 0) break;
        ++sel[i - 1];
        for (std::size_t j = i; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
    return out;
}

}  // namespace sextic

#endif
