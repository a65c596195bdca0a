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

#ifndef SEXTIC_STRATA_HPP
#define SEXTIC_STRATA_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cohomology.hpp"
#include "error.hpp"
#include "field.hpp"
#include "form.hpp"
#include "form_algebra.hpp"
#include "kronecker.hpp"
#include "matrix.hpp"
#include "poly_matrix.hpp"
#include "presentation.hpp"

namespace sextic {

enum class Stratum { X0, X1, X2, X3, X4, X5 };

inline constexpr std::array<Stratum, 6> all_strata{Stratum::X0, Stratum::X1, Stratum::X2,
                                                   Stratum::X3, Stratum::X4, Stratum::X5};

inline std::string stratum_name(Stratum s) { return "X" + std::to_string(static_cast<int>(s)); }

inline Stratum parse_stratum(std::string_view text) {
    for (Stratum s : all_strata)
        if (text == stratum_name(s) || (text.size() == 1 && text[0] == '0' + static_cast<int>(s))) return s;
    throw ParseError("unknown stratum '" + std::string(text) + "' (expected X0..X5)");
}

struct Shape {
    TwistVector source;
    TwistVector target;
    friend bool operator==(const Shape&, const Shape&) = default;
};

/// Twist shape of each stratum's resolution; X4 uses the three-term form covering both cases.
inline Shape stratum_shape(Stratum s) {
    switch (s) {
        case Stratum::X0:
            return {{-2, -2, -2, -2, -2}, {-1, -1, -1, -1, 0}};
        case Stratum::X1:
            return {{-3, -2, -2}, {-1, 0, 0}};
        case Stratum::X2:
            return {{-3, -2, -2, -1}, {-1, -1, 0, 0}};
        case Stratum::X3:
            return {{-3, -3, -1, -1}, {-2, 0, 0, 0}};
        case Stratum::X4:
            return {{-3, -3, -2}, {-2, -1, 1}};
        case Stratum::X5:
            return {{-4, -1}, {0, 1}};
    }
    throw Error("bad stratum");
}

/// The short form 2O(-3) -> O(-1) (+) O(1) of X4 case (i).
inline Shape x4_short_shape() { return {{-3, -3}, {-1, 1}}; }

/// Table row (h^0 F(-1), h^1 F, h^0 F(x)Omega^1(1), h^1 F(1)).
inline CohomologyProfile expected_profile(Stratum s) {
    switch (s) {
        case Stratum::X0:
            return {0, 0, 0, 0};
        case Stratum::X1:
            return {0, 1, 0, 0};
        case Stratum::X2:
            return {0, 1, 1, 0};
        case Stratum::X3:
            return {0, 2, 2, 0};
        case Stratum::X4:
            return {1, 2, 3, 0};
        case Stratum::X5:
            return {1, 3, 4, 1};
    }
    throw Error("bad stratum");
}

class ProfileNotInTable : public Error {
   public:
    explicit ProfileNotInTable(const CohomologyProfile& p)
        : Error("cohomology profile " + p.str() + " is not a row of the stratum table"), profile(p) {}
    CohomologyProfile profile;
};

/// Table lookup on (a, b, c); the e component must be positive exactly for X5.
inline std::optional<Stratum> stratum_of_profile(const CohomologyProfile& p) {
    for (Stratum s : all_strata) {
        const auto row = expected_profile(s);
        if (row.a == p.a && row.b == p.b && row.c == p.c) {
            if ((p.e > 0) != (s == Stratum::X5)) return std::nullopt;
            return s;
        }
    }
    return std::nullopt;
}

/// Cohomological classification; throws ProfileNotInTable for profiles outside the table.
template <class K>
Stratum classify(const Presentation<K>& p) {
    if (auto v = validate(p); !v.empty()) throw ShapeError("classify: invalid presentation: " + v.front());
    const CohomologyProfile prof = profile(p);
    if (auto s = stratum_of_profile(prof)) return *s;
    throw ProfileNotInTable(prof);
}

// ------------------------------------------------------------------ helpers

namespace detail {

template <class K>
Violations shape_violations(const Presentation<K>& p, const Shape& want, const std::string& label) {
    Violations out;
    if (p.source() != want.source || p.target() != want.target) out.push_back("twist shape does not match " + label);
    return out;
}

template <class K>
void require_shape(const Presentation<K>& p, const Shape& want, const char* op) {
    if (p.source() != want.source || p.target() != want.target)
        throw ShapeError(std::string(op) + ": wrong twist shape");
}

/// The products X_v * l for v = X, Y, Z.
template <class K>
std::vector<Form<K>> times_variables(const Form<K>& l, int degree) {
    std::vector<Form<K>> out;
    for (int v = 0; v < 3; ++v) out.push_back((Form<K>::variable(l.field(), v) * l).with_degree(degree));
    return out;
}

/// Places coefficient vectors of forms as a column block starting at (row, col).
template <class K>
void put_column(Matrix<K>& m, const Form<K>& f, std::size_t row, std::size_t col) {
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) m(row + i, col) = f[i];
}

/// Points (a : b) of P^1 that are common zeros of the binary quadratics A a^2 + B ab + C b^2.
inline std::vector<std::array<ModP, 2>> p1_common_zeros(const PrimeField& f,
                                                        const std::vector<std::array<ModP, 3>>& quads) {
    std::vector<std::array<ModP, 2>> out;
    auto zero_at = [&](const ModP& a, const ModP& b) {
        for (const auto& q : quads)
            if (!is_zero(q[0] * a * a + q[1] * a * b + q[2] * b * b)) return false;
        return true;
    };
    if (zero_at(f.one(), f.zero())) out.push_back({f.one(), f.zero()});
    for (std::uint32_t x = 0; x < f.p; ++x)
        if (zero_at(f.element(x), f.one())) out.push_back({f.element(x), f.one()});
    return out;
}

inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < Rational(0)) return std::nullopt;
    using boost::multiprecision::cpp_int;
    const cpp_int n = r.numerator(), d = r.denominator();
    const cpp_int sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

inline std::vector<std::array<Rational, 2>> p1_common_zeros(const RationalField&,
                                                            const std::vector<std::array<Rational, 3>>& quads) {
    auto zero_at = [&](const Rational& a, const Rational& b) {
        for (const auto& q : quads)
            if (!(q[0] * a * a + q[1] * a * b + q[2] * b * b).is_zero()) return false;
        return true;
    };
    const std::array<Rational, 3>* first = nullptr;
    for (const auto& q : quads)
        if (!q[0].is_zero() || !q[1].is_zero() || !q[2].is_zero()) {
            first = &q;
            break;
        }
    std::vector<std::array<Rational, 2>> cand;
    if (first == nullptr) {
        cand.push_back({Rational(1), Rational(0)});  // every point works; one suffices
        return cand;
    }
    const auto& [A, B, C] = *first;
    if (A.is_zero()) {
        cand.push_back({Rational(1), Rational(0)});
        if (!B.is_zero()) cand.push_back({-C / B, Rational(1)});
    } else if (auto s = rational_sqrt(B * B - Rational(4) * A * C)) {
        cand.push_back({(-B + *s) / (Rational(2) * A), Rational(1)});
        cand.push_back({(-B - *s) / (Rational(2) * A), Rational(1)});
    }
    std::vector<std::array<Rational, 2>> out;
    for (const auto& c : cand)
        if (zero_at(c[0], c[1])) out.push_back(c);
    return out;
}

}  // namespace detail

// ------------------------------------------------------------------ X0

template <class K>
PolyMatrix<K> x0_linear_block(const Presentation<K>& p) {
    detail::require_shape(p, stratum_shape(Stratum::X0), "x0_condition");
    return p.matrix().submatrix({0, 1, 2, 3}, {0, 1, 2, 3, 4});
}

/// Semistability verdict for the 4 x 5 linear block.
template <class K>
StabilityResult<K> x0_stability(const Presentation<K>& p, KroneckerMode mode = KroneckerMode::exact_pruned) {
    return is_semistable(KroneckerModule<K>(x0_linear_block(p)), mode);
}

/// True iff the linear block is (certified) semistable as a Kronecker module.
template <class K>
bool x0_condition(const Presentation<K>& p) {
    return x0_stability(p).status == Stability::semistable;
}

// ------------------------------------------------------------------ X1

enum class Pattern { P1, P2, P3, P4 };
inline constexpr std::array<Pattern, 4> all_patterns{Pattern::P1, Pattern::P2, Pattern::P3, Pattern::P4};
inline std::string pattern_name(Pattern p) { return "P" + std::to_string(static_cast<int>(p) + 1); }

/*
 * Membership of the X1 matrix
 *
 *     [ q  l1  l2  ]
 *     [ f1 q11 q12 ]
 *     [ f2 q21 q22 ]
 *
 * in the orbit of each forbidden zero pattern. Allowed operations: scale the
 * first column and add linear multiples of columns 2, 3 to it; mix columns
 * 2, 3 by GL2; scale the first row; mix rows 2, 3 by GL2 and add linear
 * multiples of the first row to them.
 *
 *   P1 (row 1 cols 2,3 zero):  l1 = l2 = 0
 *   P2 (col 3 rows 1,2 zero):  some (a,b) != 0 with a l1 + b l2 = 0 and
 *                              a(q11,q21) + b(q12,q22) dependent
 *   P3 (row 3 cols 2,3 zero):  alpha (q11,q12) + beta (q21,q22) + v (l1,l2) = 0
 *                              with (alpha, beta) != 0, v linear
 *   P4 (row 1 cols 1,2 zero):  l1, l2 dependent and q in <l1, l2> V*
 */
template <class K>
std::set<Pattern> x1_patterns(const Presentation<K>& p) {
    detail::require_shape(p, stratum_shape(Stratum::X1), "x1_patterns");
    using Scalar = typename K::value_type;
    const K& f = p.field();
    const Form<K>& q = p(0, 0);
    const Form<K>& l1 = p(0, 1);
    const Form<K>& l2 = p(0, 2);
    const Form<K>&q11 = p(1, 1), &q12 = p(1, 2), &q21 = p(2, 1), &q22 = p(2, 2);
    std::set<Pattern> out;

    const std::size_t lrank = forms_rank<K>({l1, l2});
    if (lrank == 0) out.insert(Pattern::P1);

    // P2
    {
        auto dependent = [&](const Scalar& a, const Scalar& b) {
            return forms_rank<K>({q11 * a + q12 * b, q21 * a + q22 * b}) <= 1;
        };
        bool hit = false;
        if (lrank == 1) {
            const Matrix<K> lm = coefficient_matrix(f, {l1.with_degree(1), l2.with_degree(1)});
            const auto ker = kernel_basis(lm);
            hit = dependent(ker[0][0], ker[0][1]);
        } else if (lrank == 0) {
            // rank <= 1 of the 2 x 6 matrix [a c11 + b c12 ; a c21 + b c22]: all 2x2 minors vanish
            std::vector<std::array<Scalar, 3>> quads;
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = i + 1; j < 6; ++j) {
                    const Scalar a1 = q11[i], b1 = q12[i], a2 = q21[j], b2 = q22[j];
                    const Scalar a3 = q11[j], b3 = q12[j], a4 = q21[i], b4 = q22[i];
                    quads.push_back({a1 * a2 - a3 * a4, a1 * b2 + b1 * a2 - a3 * b4 - b3 * a4, b1 * b2 - b3 * b4});
                }
            hit = !detail::p1_common_zeros(f, quads).empty();
        }
        if (hit) out.insert(Pattern::P2);
    }

    // P3: unknowns (alpha, beta, v_X, v_Y, v_Z); 12 equations in S^2 (+) S^2
    {
        Matrix<K> sys(f, 12, 5);
        detail::put_column(sys, q11, 0, 0);
        detail::put_column(sys, q12, 6, 0);
        detail::put_column(sys, q21, 0, 1);
        detail::put_column(sys, q22, 6, 1);
        const auto v1 = detail::times_variables(l1, 2), v2 = detail::times_variables(l2, 2);
        for (std::size_t k = 0; k < 3; ++k) {
            detail::put_column(sys, v1[k], 0, 2 + k);
            detail::put_column(sys, v2[k], 6, 2 + k);
        }
        for (const auto& v : kernel_basis(sys))
            if (!is_zero(v[0]) || !is_zero(v[1])) {
                out.insert(Pattern::P3);
                break;
            }
    }

    // P4
    if (lrank <= 1) {
        std::vector<Form<K>> span = detail::times_variables(l1, 2);
        for (auto& g : detail::times_variables(l2, 2)) span.push_back(std::move(g));
        if (in_span(span, q.with_degree(2))) out.insert(Pattern::P4);
    }
    return out;
}

// ------------------------------------------------------------------ X2

/*
 *     [ q1 l11 l12 0  ]
 *     [ q2 l21 l22 0  ]
 *     [ f1 q11 q12 l1 ]
 *     [ f2 q21 q22 l2 ]
 */
template <class K>
Violations x2_conditions(const Presentation<K>& p) {
    detail::require_shape(p, stratum_shape(Stratum::X2), "x2_conditions");
    Violations out;
    if (!p(0, 3).is_zero() || !p(1, 3).is_zero()) out.push_back("zero block in rows 1-2, column 4 is nonzero");
    const Form<K>&q1 = p(0, 0), &q2 = p(1, 0);
    const Form<K>&l11 = p(0, 1), &l12 = p(0, 2), &l21 = p(1, 1), &l22 = p(1, 2);
    if (forms_rank<K>({p(2, 3), p(3, 3)}) != 2) out.push_back("l_1, l_2 dependent");
    const Form<K> delta = (l11 * l22 - l12 * l21).with_degree(2);
    if (delta.is_zero()) {
        out.push_back("l11 l22 - l12 l21 is zero");
        return out;
    }
    const Form<K> m1 = (q1 * l21 - q2 * l11).with_degree(3);
    const Form<K> m2 = (q1 * l22 - q2 * l12).with_degree(3);
    std::vector<Form<K>> gens{m1, m2};
    for (auto& g : detail::times_variables(delta, 3)) gens.push_back(std::move(g));
    if (forms_rank(gens) != 5) out.push_back("minors dependent mod (delta)V*");
    return out;
}

// ------------------------------------------------------------------ X3

/*
 *     [ l1  l2  0   0   ]      phi_11 = (l1, l2)
 *     [ f   f   l   l   ]      phi_22 = lower right 3 x 2 linear block
 *     [ f   f   l   l   ]
 *     [ f   f   l   l   ]
 */
template <class K>
Violations x3_conditions(const Presentation<K>& p) {
    detail::require_shape(p, stratum_shape(Stratum::X3), "x3_conditions");
    Violations out;
    if (forms_rank<K>({p(0, 0), p(0, 1)}) != 2) out.push_back("phi_11 entries dependent");
    const auto minors = maximal_minors(p.matrix().submatrix({1, 2, 3}, {2, 3}));
    std::vector<Form<K>> aligned;
    for (const auto& m : minors) aligned.push_back(m.with_degree(2));
    if (forms_rank(aligned) != 3) out.push_back("phi_22 maximal minors dependent");
    return out;
}

// ------------------------------------------------------------------ X4

enum class X4Case { i, ii };
inline std::string x4_case_name(X4Case c) { return c == X4Case::i ? "i" : "ii"; }

/// Case (i) when the constant entry O(-2) -> O(-2) is nonzero (or the short shape is used).
template <class K>
X4Case x4_case(const Presentation<K>& p) {
    if (p.source() == x4_short_shape().source && p.target() == x4_short_shape().target) return X4Case::i;
    detail::require_shape(p, stratum_shape(Stratum::X4), "x4_conditions");
    return p(0, 2).is_zero() ? X4Case::ii : X4Case::i;
}

/*
 * Three-term form
 *
 *     [ l1 l2 c ]
 *     [ q1 q2 l ]
 *     [ g1 g2 h ]
 *
 * With c != 0 the O(-2) summands cancel and the remaining 2 x 2 matrix has
 * first row q_j - l l_j / c. With c = 0 this is case (ii).
 */
template <class K>
Violations x4_conditions(const Presentation<K>& p) {
    Violations out;
    const X4Case kind = x4_case(p);
    if (kind == X4Case::i) {
        Form<K> q1 = p(0, 0), q2 = p(0, 1);
        if (p.rows() == 3) {
            const auto inv = p.field().one() / p(0, 2)[0];
            q1 = (p(1, 0) - p(1, 2) * p(0, 0) * inv).with_degree(2);
            q2 = (p(1, 1) - p(1, 2) * p(0, 1) * inv).with_degree(2);
        }
        if (q1.is_zero() && q2.is_zero())
            out.push_back("q_1, q_2 are both zero");
        else if (common_factor(q1.with_degree(2), q2.with_degree(2)))
            out.push_back("q_1, q_2 have a common factor");
        return out;
    }
    const Form<K>&l1 = p(0, 0), &l2 = p(0, 1), &l = p(1, 2), &q1 = p(1, 0), &q2 = p(1, 1);
    if (forms_rank<K>({l1, l2}) != 2) out.push_back("l_1, l_2 dependent");
    if (l.is_zero()) out.push_back("l is zero");
    // (q1, q2) = u (l1, l2) + l (v1, v2): unknowns u, v1, v2 (three coefficients each)
    const K& f = p.field();
    Matrix<K> sys(f, 12, 9);
    const auto ul1 = detail::times_variables(l1, 2), ul2 = detail::times_variables(l2, 2);
    const auto lv = detail::times_variables(l, 2);
    for (std::size_t k = 0; k < 3; ++k) {
        detail::put_column(sys, ul1[k], 0, k);
        detail::put_column(sys, ul2[k], 6, k);
        detail::put_column(sys, lv[k], 0, 3 + k);
        detail::put_column(sys, lv[k], 6, 6 + k);
    }
    std::vector<typename K::value_type> rhs(12, f.zero());
    const Form<K> a = q1.with_degree(2), b = q2.with_degree(2);
    for (std::size_t i = 0; i < 6; ++i) {
        rhs[i] = a[i];
        rhs[6 + i] = b[i];
    }
    if (solve(sys, rhs)) out.push_back("(q_1, q_2) = u (l_1, l_2) + l (v_1, v_2) has a solution");
    return out;
}

// ------------------------------------------------------------------ X5

/*
 *     [ h l ]
 *     [ g q ]
 */
template <class K>
Violations x5_conditions(const Presentation<K>& p) {
    detail::require_shape(p, stratum_shape(Stratum::X5), "x5_conditions");
    Violations out;
    const Form<K>&l = p(0, 1), &q = p(1, 1);
    if (l.is_zero()) {
        out.push_back("l is zero");
        return out;
    }
    if (divides(l, q)) out.push_back("l divides q");
    return out;
}

// ------------------------------------------------------------------ dispatch

/// Degree grid, injectivity, exact twist shape, forced zeros and the stratum's algebraic conditions.
template <class K>
Violations validate_shape(const Presentation<K>& p, Stratum label) {
    Violations out = validate(p);
    if (!out.empty()) return out;
    const Shape want = stratum_shape(label);
    const bool short_x4 = label == Stratum::X4 && p.source() == x4_short_shape().source &&
                          p.target() == x4_short_shape().target;
    if (!short_x4 && (p.source() != want.source || p.target() != want.target)) {
        out.push_back("twist shape does not match " + stratum_name(label));
        return out;
    }
    Violations more;
    switch (label) {
        case Stratum::X0:
            if (!x0_condition(p)) more.push_back("phi_11 is not semistable as a Kronecker module");
            break;
        case Stratum::X1:
            for (Pattern pat : x1_patterns(p)) more.push_back("matrix is equivalent to forbidden pattern " + pattern_name(pat));
            break;
        case Stratum::X2:
            more = x2_conditions(p);
            break;
        case Stratum::X3:
            more = x3_conditions(p);
            break;
        case Stratum::X4:
            more = x4_conditions(p);
            break;
        case Stratum::X5:
            more = x5_conditions(p);
            break;
    }
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

/// Everything the classify command reports.
struct ClassificationReport {
    std::optional<Stratum> label;
    std::optional<CohomologyProfile> profile;
    std::optional<HilbertPoly> hilbert;
    int det_degree = -1;
    Violations violations;
    bool profile_in_table = false;
};

template <class K>
ClassificationReport classification_report(const Presentation<K>& p) {
    ClassificationReport r;
    r.violations = validate(p);
    if (!r.violations.empty()) return r;
    r.hilbert = hilbert_polynomial(p);
    r.det_degree = fitting_determinant(p).degree();
    r.profile = profile(p);
    r.label = stratum_of_profile(*r.profile);
    r.profile_in_table = r.label.has_value();
    if (!r.label) {
        r.violations.push_back(ProfileNotInTable(*r.profile).what());
        return r;
    }
    if (p.source() == stratum_shape(*r.label).source && p.target() == stratum_shape(*r.label).target)
        for (auto& v : validate_shape(p, *r.label)) r.violations.push_back(std::move(v));
    return r;
}

}  // namespace sextic

#endif
