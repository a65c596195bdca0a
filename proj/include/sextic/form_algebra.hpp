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

#ifndef SEXTIC_FORM_ALGEBRA_HPP
#define SEXTIC_FORM_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "form.hpp"
#include "matrix.hpp"
#include "monomial.hpp"

namespace sextic {

/// Matrix of S^b -> S^{a+b}, m |-> f*m; column j holds the coefficients of f times the j-th monomial.
template <class K>
Matrix<K> mult_map(const Form<K>& f, int b) {
    if (b < 0) throw ShapeError("mult_map: negative source degree " + std::to_string(b));
    const int a = f.degree();
    Matrix<K> m(f.field(), monomial_count(a + b), monomial_count(b));
    if (a < 0) return m;
    for (std::size_t i = 0; i < monomial_count(a); ++i) {
        if (is_zero(f[i])) continue;
        const Exponent ea = monomial_at(a, i);
        for (std::size_t j = 0; j < monomial_count(b); ++j) m(monomial_index(ea + monomial_at(b, j)), j) = f[i];
    }
    return m;
}

/// Coefficient vectors of equal-degree forms as the columns of a matrix.
template <class K>
Matrix<K> coefficient_matrix(const K& field, const std::vector<Form<K>>& forms) {
    if (forms.empty()) return Matrix<K>(field, 0, 0);
    const int d = forms.front().degree();
    Matrix<K> m(field, d < 0 ? 0 : monomial_count(d), forms.size());
    for (std::size_t j = 0; j < forms.size(); ++j) {
        if (forms[j].degree() != d) {
            if (forms[j].is_zero()) continue;
            throw ShapeError("coefficient_matrix: forms of mixed degrees");
        }
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = forms[j][i];
    }
    return m;
}

template <class K>
std::size_t forms_rank(const std::vector<Form<K>>& forms) {
    if (forms.empty()) return 0;
    // a leading zero form may carry any nominal degree; use the first nonzero one
    const Form<K>* ref = &forms.front();
    for (const auto& f : forms)
        if (!f.is_zero()) {
            ref = &f;
            break;
        }
    std::vector<Form<K>> aligned;
    aligned.reserve(forms.size());
    for (const auto& f : forms) {
        if (f.degree() != ref->degree() && !f.is_zero()) throw ShapeError("forms_rank: forms of mixed degrees");
        aligned.push_back(f.with_degree(ref->degree()));
    }
    return rank(coefficient_matrix(ref->field(), aligned));
}

/// True iff target lies in the span of the given forms of the same degree.
template <class K>
bool in_span(const std::vector<Form<K>>& spanning, const Form<K>& target) {
    if (target.is_zero()) return true;
    std::vector<Form<K>> with = spanning;
    with.push_back(target);
    return forms_rank(with) == forms_rank(spanning);
}

/// True iff q lies in l * S^{d-1}.
template <class K>
bool divides(const Form<K>& l, const Form<K>& q) {
    if (l.degree() != 1) throw ShapeError("divides: divisor must be a linear form");
    if (l.is_zero()) throw ShapeError("divides: divisor is the zero form");
    if (q.is_zero()) return true;
    if (q.degree() < 1) return false;
    const Matrix<K> image = mult_map(l, q.degree() - 1);
    Matrix<K> aug(q.field(), image.rows(), image.cols() + 1);
    aug.place(image, 0, 0);
    for (std::size_t i = 0; i < image.rows(); ++i) aug(i, image.cols()) = q[i];
    return rank(aug) == rank(image);
}

/*
 * True iff q1 and q2 share a non-constant factor. For forms of degree d this
 * holds exactly when a1*q1 + a2*q2 = 0 has a nonzero solution with a1, a2 of
 * degree d-1 (unique factorization).
 */
template <class K>
bool common_factor(const Form<K>& q1, const Form<K>& q2) {
    const bool z1 = q1.is_zero(), z2 = q2.is_zero();
    if (z1 && z2) throw ShapeError("common_factor: both forms are zero");
    if (z1 || z2) return (z1 ? q2 : q1).degree() > 0;
    if (q1.degree() != q2.degree()) throw ShapeError("common_factor: forms of different degrees");
    const int d = q1.degree();
    if (d == 0) return false;
    const Matrix<K> syz = Matrix<K>::hstack(mult_map(q1, d - 1), mult_map(q2, d - 1));
    return rank(syz) < syz.cols();
}

}  // namespace sextic

#endif
