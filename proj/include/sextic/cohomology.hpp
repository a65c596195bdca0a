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

#ifndef SEXTIC_COHOMOLOGY_HPP
#define SEXTIC_COHOMOLOGY_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "form.hpp"
#include "form_algebra.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "presentation.hpp"

namespace sextic {

/*
 * Cohomology of F = coker(phi) from the resolution alone. Line bundles on the
 * plane have no H^1, so
 *
 *   H^0(F(t)) = coker(H^0(A(t)) -> H^0(B(t)))
 *   H^1(F(t)) = ker(H^2(A(t)) -> H^2(B(t)))
 *
 * and H^2(O(e)) is dual to H^0(O(-3-e)), which turns the second map into the
 * transpose of a global-sections map.
 */

namespace detail {

inline std::size_t total_sections(const TwistVector& twists, int t) {
    std::size_t n = 0;
    for (int d : twists) n += monomial_count(d + t);
    return n;
}

inline std::vector<std::size_t> section_offsets(const TwistVector& twists, int t) {
    std::vector<std::size_t> out;
    std::size_t acc = 0;
    for (int d : twists) {
        out.push_back(acc);
        acc += monomial_count(d + t);
    }
    return out;
}

template <class K>
void require_square(const Presentation<K>& p, const char* op) {
    if (!p.is_square()) throw ShapeError(std::string(op) + ": cohomology needs a square presentation");
}

}  // namespace detail

/// H^0(A(t)) -> H^0(B(t)) as a scalar matrix.
template <class K>
Matrix<K> section_map(const Presentation<K>& p, int t) {
    const auto row_off = detail::section_offsets(p.target(), t);
    const auto col_off = detail::section_offsets(p.source(), t);
    Matrix<K> m(p.field(), detail::total_sections(p.target(), t), detail::total_sections(p.source(), t));
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) {
            const int b = p.source()[j] + t;
            if (b < 0 || p(i, j).is_zero()) continue;
            m.place(mult_map(p(i, j), b), row_off[i], col_off[j]);
        }
    return m;
}

/// Transpose map H^0(B^v(-3-t)) -> H^0(A^v(-3-t)), the Serre dual of H^2(A(t)) -> H^2(B(t)).
template <class K>
Matrix<K> serre_dual_map(const Presentation<K>& p, int t) {
    TwistVector a_dual, b_dual;
    for (int s : p.source()) a_dual.push_back(-3 - t - s);
    for (int d : p.target()) b_dual.push_back(-3 - t - d);
    const auto row_off = detail::section_offsets(a_dual, 0);
    const auto col_off = detail::section_offsets(b_dual, 0);
    Matrix<K> m(p.field(), detail::total_sections(a_dual, 0), detail::total_sections(b_dual, 0));
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) {
            const int b = b_dual[i];
            if (b < 0 || p(i, j).is_zero()) continue;
            m.place(mult_map(p(i, j), b), row_off[j], col_off[i]);
        }
    return m;
}

template <class K>
std::size_t h0(const Presentation<K>& p, int t) {
    detail::require_square(p, "h0");
    return detail::total_sections(p.target(), t) - rank(section_map(p, t));
}

template <class K>
std::size_t h1(const Presentation<K>& p, int t) {
    detail::require_square(p, "h1");
    const Matrix<K> m = serre_dual_map(p, t);
    return m.rows() - rank(m);
}

/*
 * h^0(F (x) Omega^1(1)) as the kernel of H^0(F)^3 -> H^0(F(1)),
 * (s1, s2, s3) |-> X s1 + Y s2 + Z s3, from the Euler sequence. With
 * M0, M1 the section maps at t = 0, 1 and mu the contraction on H^0(B)^3,
 * the kernel is mu^{-1}(im M1) / (im M0)^3, of dimension
 *
 *   3 N0 + rank M1 - rank [mu | M1] - 3 rank M0.
 */
template <class K>
std::size_t h0_omega(const Presentation<K>& p) {
    detail::require_square(p, "h0_omega");
    const Matrix<K> m0 = section_map(p, 0);
    const Matrix<K> m1 = section_map(p, 1);
    const std::size_t n0 = m0.rows();
    const auto off0 = detail::section_offsets(p.target(), 0);
    const auto off1 = detail::section_offsets(p.target(), 1);
    Matrix<K> mu(p.field(), m1.rows(), 3 * n0);
    for (int v = 0; v < 3; ++v) {
        const Form<K> x = Form<K>::variable(p.field(), v);
        for (std::size_t i = 0; i < p.rows(); ++i) {
            const int d = p.target()[i];
            if (d < 0) continue;
            mu.place(mult_map(x, d), off1[i], static_cast<std::size_t>(v) * n0 + off0[i]);
        }
    }
    const std::size_t r_aug = rank(Matrix<K>::hstack(mu, m1));
    return 3 * n0 + rank(m1) - r_aug - 3 * rank(m0);
}

/// (h^0 F(-1), h^1 F, h^0 F(x)Omega^1(1), h^1 F(1)).
struct CohomologyProfile {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    std::size_t e = 0;

    friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
    std::array<std::size_t, 4> as_array() const { return {a, b, c, e}; }
    std::string str() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(e) +
               ")";
    }
};

template <class K>
CohomologyProfile profile(const Presentation<K>& p) {
    return {h0(p, -1), h1(p, 0), h0_omega(p), h1(p, 1)};
}

struct CohomologyRow {
    int t;
    std::size_t h0;
    std::size_t h1;
    Rational chi;
};

template <class K>
std::vector<CohomologyRow> cohomology_table(const Presentation<K>& p, int tmin, int tmax) {
    std::vector<CohomologyRow> out;
    for (int t = tmin; t <= tmax; ++t) out.push_back({t, h0(p, t), h1(p, t), euler_characteristic(p, t)});
    return out;
}

}  // namespace sextic

#endif
