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

#ifndef SEXTIC_PRESENTATION_HPP
#define SEXTIC_PRESENTATION_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "form.hpp"
#include "poly_matrix.hpp"

namespace sextic {

using TwistVector = std::vector<int>;

/*
 * A two-term resolution 0 -> (+) O(s_j) -> (+) O(d_i) -> F -> 0.
 *
 * The matrix has one row per target summand and one column per source
 * summand; cell (i, j) is a form of degree d_i - s_j. Zero cells are stored
 * with the degree the grid asks for, so two presentations of the same map
 * compare equal cell by cell.
 */
template <class K>
class Presentation {
   public:
    using Field = K;
    using FormT = Form<K>;

    Presentation() = default;
    Presentation(TwistVector source, TwistVector target, PolyMatrix<K> matrix)
        : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
        if (matrix_.rows() != target_.size() || matrix_.cols() != source_.size())
            throw ShapeError("Presentation: matrix is " + std::to_string(matrix_.rows()) + "x" +
                             std::to_string(matrix_.cols()) + " but twists need " + std::to_string(target_.size()) +
                             "x" + std::to_string(source_.size()));
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j)
                if (matrix_(i, j).is_zero()) matrix_(i, j) = FormT(field(), expected_degree(i, j));
    }

    const K& field() const { return matrix_.field(); }
    const TwistVector& source() const { return source_; }
    const TwistVector& target() const { return target_; }
    const PolyMatrix<K>& matrix() const { return matrix_; }
    const FormT& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }
    std::size_t rows() const { return target_.size(); }
    std::size_t cols() const { return source_.size(); }
    bool is_square() const { return rows() == cols(); }
    int expected_degree(std::size_t i, std::size_t j) const { return target_[i] - source_[j]; }

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
    }

   private:
    TwistVector source_{};
    TwistVector target_{};
    PolyMatrix<K> matrix_{};
};

/// Degree grid check only: every cell homogeneous of degree d_i - s_j, zero where that is negative.
template <class K>
Violations validate_grid(const Presentation<K>& p) {
    Violations out;
    if (p.source().empty()) out.push_back("empty source twist vector");
    if (p.target().empty()) out.push_back("empty target twist vector");
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) {
            const auto& e = p(i, j);
            if (e.is_zero()) continue;
            const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (p.expected_degree(i, j) < 0)
                out.push_back("nonzero entry in forced-zero cell " + at);
            else if (e.degree() != p.expected_degree(i, j))
                out.push_back("degree mismatch at " + at + ": expected " + std::to_string(p.expected_degree(i, j)) +
                              ", got " + std::to_string(e.degree()));
        }
    return out;
}

/// Degree grid, squareness and injectivity (nonzero determinant).
template <class K>
Violations validate(const Presentation<K>& p) {
    Violations out = validate_grid(p);
    if (!out.empty()) return out;
    if (!p.is_square()) {
        out.push_back("not square: " + std::to_string(p.rows()) + "x" + std::to_string(p.cols()));
        return out;
    }
    if (det_poly(p.matrix()).is_zero()) out.push_back("not injective: determinant is zero");
    return out;
}

/// Determinant of a square presentation matrix; its zero set is the support.
template <class K>
Form<K> fitting_determinant(const Presentation<K>& p) {
    if (!p.is_square()) throw ShapeError("fitting_determinant: presentation is not square");
    return det_poly(p.matrix());
}

/// P(m) = r*m + chi.
struct HilbertPoly {
    Rational r;
    Rational chi;

    Rational operator()(long long m) const { return r * Rational(m) + chi; }
    friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;
};

/// chi(O(e)) on the plane.
inline Rational chi_line_bundle(long long e) { return Rational((e + 1) * (e + 2)) / Rational(2); }

template <class K>
Rational euler_characteristic(const Presentation<K>& p, long long t) {
    Rational out(0);
    for (int d : p.target()) out += chi_line_bundle(d + t);
    for (int s : p.source()) out -= chi_line_bundle(s + t);
    return out;
}

template <class K>
HilbertPoly hilbert_polynomial(const Presentation<K>& p) {
    const Rational p0 = euler_characteristic(p, 0), p1 = euler_characteristic(p, 1), p2 = euler_characteristic(p, 2);
    if (!(p2 - p1 - p1 + p0).is_zero())
        throw ShapeError("hilbert_polynomial: cokernel is not supported on a curve (quadratic term)");
    return {p1 - p0, p0};
}

/*
 * Dual presentation with twists t -> -2 - t. Both twist vectors are reversed
 * and the matrix is anti-transposed, so increasing twist order is preserved;
 * applying dual twice returns the original presentation exactly.
 */
template <class K>
Presentation<K> dual(const Presentation<K>& p) {
    const std::size_t n = p.rows(), m = p.cols();
    TwistVector src, tgt;
    for (std::size_t i = n; i-- > 0;) src.push_back(-2 - p.target()[i]);
    for (std::size_t j = m; j-- > 0;) tgt.push_back(-2 - p.source()[j]);
    PolyMatrix<K> q(p.field(), m, n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < n; ++b) q(a, b) = p(n - 1 - b, m - 1 - a);
    return Presentation<K>(std::move(src), std::move(tgt), std::move(q));
}

}  // namespace sextic

#endif
