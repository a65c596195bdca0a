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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "test_support.hpp"

using namespace sextic;
using testsupport::Sparse;

TEST(Rational, ArithmeticAndNormalization) {
    const Rational a = Rational::parse("6/8"), b = Rational::parse("-1/4");
    EXPECT_EQ(a.str(), "3/4");
    EXPECT_EQ((a + b).str(), "1/2");
    EXPECT_EQ((a * b).str(), "-3/16");
    EXPECT_EQ((a / b).str(), "-3");
    EXPECT_EQ(Rational::parse("+7").str(), "7");
    EXPECT_LT(b, a);
    EXPECT_THROW(a / Rational(0), DivisionByZero);
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("x"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, LargeValuesStayExact) {
    Rational x(1);
    for (int i = 0; i < 40; ++i) x = x * Rational(1000003);
    for (int i = 0; i < 40; ++i) x = x / Rational(1000003);
    EXPECT_EQ(x, Rational(1));
}

TEST(ModP, InverseOfEveryUnit) {
    const PrimeField f(101);
    for (std::uint64_t v = 1; v < 101; ++v) EXPECT_EQ(f.element(v) * f.element(v).inverse(), f.one());
    EXPECT_THROW(f.zero().inverse(), DivisionByZero);
    EXPECT_EQ(f.from_int(-1), f.element(100));
    EXPECT_THROW(ModP(1, 5) + ModP(1, 7), std::invalid_argument);
}

TEST(Field, ParseSpecs) {
    EXPECT_TRUE(std::holds_alternative<RationalField>(parse_field("q")));
    EXPECT_EQ(std::get<PrimeField>(parse_field("p:32003")).p, 32003u);
    EXPECT_THROW(parse_field("p:100"), ParseError);
    EXPECT_THROW(parse_field("p:"), ParseError);
    EXPECT_THROW(parse_field("r"), ParseError);
    EXPECT_THROW(PrimeField(91), std::invalid_argument);
    EXPECT_EQ(field_spec_string(AnyField(PrimeField(7))), "p:7");
}

TEST(Monomial, IndexRoundTripAndOrder) {
    for (int d = 0; d <= 9; ++d) {
        const auto basis = monomial_basis(d);
        ASSERT_EQ(basis.size(), monomial_count(d));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            EXPECT_EQ(monomial_index(basis[i]), i);
            EXPECT_EQ(monomial_at(d, i), basis[i]);
            EXPECT_EQ(basis[i].degree(), d);
            if (i > 0) {  // graded lex, X > Y > Z
                EXPECT_GT(basis[i - 1], basis[i]);
            }
        }
    }
    const auto q = monomial_basis(2);
    EXPECT_EQ(monomial_string(q[0]), "X^2");
    EXPECT_EQ(monomial_string(q[1]), "X*Y");
    EXPECT_EQ(monomial_string(q[5]), "Z^2");
    EXPECT_EQ(monomial_count(-1), 0u);
    EXPECT_THROW(monomial_basis(-1), std::invalid_argument);
}

TEST(Form, ProductMatchesSparseOracle) {
    const PrimeField f(101);
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int da = static_cast<int>(rng.uniform_below(5)), db = static_cast<int>(rng.uniform_below(5));
        const auto a = random_form(rng, f, da), b = random_form(rng, f, db);
        const auto c = random_form(rng, f, da);
        EXPECT_EQ(testsupport::to_sparse(a * b),
                  testsupport::sparse_mul(testsupport::to_sparse(a), testsupport::to_sparse(b), 101));
        EXPECT_EQ(testsupport::to_sparse(a + c), testsupport::sparse_add(testsupport::to_sparse(a),
                                                                         testsupport::to_sparse(c), 101));
        EXPECT_EQ(testsupport::to_sparse(a - c), testsupport::sparse_add(testsupport::to_sparse(a),
                                                                         testsupport::to_sparse(c), 101, -1));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + c) * b, a * b + c * b);
    }
}

TEST(Form, ZeroHandlingAndRendering) {
    const RationalField q;
    const auto x = Form<RationalField>::variable(q, 0), y = Form<RationalField>::variable(q, 1),
               z = Form<RationalField>::variable(q, 2);
    EXPECT_EQ((x * x * x * x * x * x + y * y * y * y * y * y).to_string(), "X^6 + Y^6");
    EXPECT_EQ((x * y * Rational(2) - z * z).to_string(), "2*X*Y - Z^2");
    EXPECT_EQ(Form<RationalField>(q, 3).to_string(), "0");
    EXPECT_EQ(Form<RationalField>(q, 3), Form<RationalField>(q, 0));
    EXPECT_EQ(Form<RationalField>(q, 2) + x, x);  // zero of another degree adopts the other degree
    EXPECT_THROW(x + x * y, ShapeError);
    EXPECT_THROW((x * y).with_degree(3), ShapeError);
    EXPECT_EQ((x - x).with_degree(5).degree(), 5);
    EXPECT_EQ(Form<RationalField>::linear(q, 1, 2, 3).coefficient({0, 1, 0}), Rational(2));
}

TEST(Matrix, RankAgreesWithBareissOracle) {
    using boost::multiprecision::cpp_int;
    Rng rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t r = 1 + rng.uniform_below(7), c = 1 + rng.uniform_below(7);
        // low-rank products make rank deficiency common
        const std::size_t k = 1 + rng.uniform_below(std::min(r, c));
        std::vector<std::vector<long long>> a(r, std::vector<long long>(k)), b(k, std::vector<long long>(c));
        for (auto& row : a)
            for (auto& x : row) x = rng.uniform_int(-4, 4);
        for (auto& row : b)
            for (auto& x : row) x = rng.uniform_int(-4, 4);
        std::vector<std::vector<long long>> m(r, std::vector<long long>(c, 0));
        std::vector<std::vector<cpp_int>> big(r, std::vector<cpp_int>(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                for (std::size_t t = 0; t < k; ++t) m[i][j] += a[i][t] * b[t][j];
                big[i][j] = m[i][j];
            }
        const std::size_t oracle = testsupport::bareiss_rank(big);
        EXPECT_EQ(rank(Matrix<RationalField>::from_ints(RationalField{}, m)), oracle);
        EXPECT_EQ(rref(Matrix<RationalField>::from_ints(RationalField{}, m)).pivots.size(), oracle);
        // reductions can only lose rank, and 32003 is large enough to keep it here
        EXPECT_LE(rank(Matrix<PrimeField>::from_ints(PrimeField(101), m)), oracle);
        EXPECT_EQ(rank(Matrix<PrimeField>::from_ints(PrimeField(32003), m)), oracle);
    }
}

TEST(Matrix, KernelAndSolve) {
    const PrimeField f(7);
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + rng.uniform_below(6), c = 1 + rng.uniform_below(6);
        Matrix<PrimeField> m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.coin() ? random_scalar(rng, f) : f.zero();
        const auto ker = kernel_basis(m);
        EXPECT_EQ(ker.size() + rank(m), c);
        for (const auto& v : ker)
            for (const auto& x : m.apply(v)) EXPECT_TRUE(is_zero(x));
        if (!ker.empty()) {
            EXPECT_EQ(rank(from_columns(f, c, ker)), ker.size());
        }
        std::vector<ModP> x0(c);
        for (auto& x : x0) x = random_scalar(rng, f);
        const auto b = m.apply(x0);
        const auto x = solve(m, b);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(m.apply(*x), b);
    }
    const auto m = Matrix<PrimeField>::from_ints(f, {{1, 1}, {2, 2}});
    EXPECT_FALSE(solve(m, {f.one(), f.one()}).has_value());
    EXPECT_THROW(solve(m, {f.one()}), ShapeError);
}

TEST(Matrix, ProductAndStacking) {
    const RationalField q;
    const auto a = Matrix<RationalField>::from_ints(q, {{1, 2}, {3, 4}});
    const auto i2 = Matrix<RationalField>::identity(q, 2);
    EXPECT_EQ(a * i2, a);
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_EQ(Matrix<RationalField>::hstack(a, i2).cols(), 4u);
    EXPECT_EQ(Matrix<RationalField>::vstack(a, i2).rows(), 4u);
    EXPECT_THROW(Matrix<RationalField>::from_ints(q, {{1}, {1, 2}}), ShapeError);
}

namespace {

/// Leibniz expansion over all permutations, independent of the memoized Laplace routine.
Sparse leibniz(const PolyMatrix<PrimeField>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Sparse total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Sparse term{{{0, 0, 0}, 1}};
        for (std::size_t i = 0; i < n; ++i) term = testsupport::sparse_mul(term, testsupport::to_sparse(m(i, perm[i])), 101);
        total = testsupport::sparse_add(total, term, 101, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST(PolyMatrix, DeterminantMatchesLeibniz) {
    const PrimeField f(101);
    Rng rng(3);
    const std::vector<std::pair<TwistVector, TwistVector>> shapes{
        {{-2, -2, -2, -2, -2}, {-1, -1, -1, -1, 0}}, {{-3, -2, -2}, {-1, 0, 0}}, {{-3, -3, -1, -1}, {-2, 0, 0, 0}},
        {{-4, -1}, {0, 1}}};
    for (int trial = 0; trial < 12; ++trial)
        for (const auto& [src, tgt] : shapes) {
            const auto p = testsupport::random_presentation(rng, f, src, tgt);
            const auto d = det_poly(p.matrix());
            EXPECT_EQ(testsupport::to_sparse(d), leibniz(p.matrix()));
            if (!d.is_zero()) {
                EXPECT_EQ(d.degree(), 6);
            }
        }
    EXPECT_THROW(det_poly(PolyMatrix<PrimeField>(f, 2, 3)), ShapeError);
}

TEST(PolyMatrix, MaximalMinors) {
    const PrimeField f(101);
    Rng rng(4);
    PolyMatrix<PrimeField> m(f, 4, 2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = random_form(rng, f, 1);
    const auto minors = maximal_minors(m);
    ASSERT_EQ(minors.size(), 6u);
    EXPECT_EQ(minors[0], det_poly(m.submatrix({0, 1}, {0, 1})));
    EXPECT_EQ(minors[5], det_poly(m.submatrix({2, 3}, {0, 1})));
    EXPECT_THROW(maximal_minors(m.transpose()), ShapeError);
}

TEST(FormAlgebra, MultMapColumnsAreProducts) {
    const PrimeField f(101);
    Rng rng(8);
    const auto g = random_form(rng, f, 2);
    const auto m = mult_map(g, 3);
    const auto basis = monomial_basis(3);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto prod = g * Form<PrimeField>::monomial(f, basis[j], f.one());
        EXPECT_EQ(m.column(j), std::vector<ModP>(prod.coefficients().begin(), prod.coefficients().end()));
    }
    EXPECT_THROW(mult_map(g, -1), ShapeError);
}

namespace {

std::vector<Form<PrimeField>> all_forms(const PrimeField& f, int degree) {
    const std::size_t n = monomial_count(degree);
    std::vector<Form<PrimeField>> out;
    std::vector<std::uint32_t> c(n, 0);
    while (true) {
        std::vector<ModP> v;
        for (auto x : c) v.push_back(f.element(x));
        out.emplace_back(f, degree, v);
        std::size_t i = 0;
        while (i < n && ++c[i] == f.p) c[i++] = 0;
        if (i == n) break;
    }
    return out;
}

}  // namespace

TEST(FormAlgebra, DividesAgreesWithBruteForceOverF5) {
    const PrimeField f(5);
    Rng rng(12);
    const auto linears = all_forms(f, 1);
    for (int trial = 0; trial < 150; ++trial) {
        Form<PrimeField> l = random_form(rng, f, 1);
        if (l.is_zero()) continue;
        Form<PrimeField> q = rng.coin() ? random_form(rng, f, 2) : l * random_form(rng, f, 1);
        bool brute = false;
        for (const auto& g : linears) brute = brute || l * g == q;
        EXPECT_EQ(divides(l, q), brute);
    }
    EXPECT_THROW(divides(Form<PrimeField>(f, 1), Form<PrimeField>::variable(f, 0)), ShapeError);
}

TEST(FormAlgebra, CommonFactorAgreesWithBruteForceOverF5) {
    const PrimeField f(5);
    Rng rng(13);
    auto linears = all_forms(f, 1);
    linears.erase(linears.begin());  // drop zero
    for (int trial = 0; trial < 200; ++trial) {
        Form<PrimeField> q1 = random_form(rng, f, 2), q2 = random_form(rng, f, 2);
        switch (rng.uniform_below(3)) {
            case 0: {
                const auto l = random_form(rng, f, 1);
                q1 = l * random_form(rng, f, 1);
                q2 = l * random_form(rng, f, 1);
                break;
            }
            case 1:
                q2 = q1 * random_scalar(rng, f);
                break;
            default:
                break;
        }
        if (q1.is_zero() || q2.is_zero()) continue;
        bool brute = forms_rank<PrimeField>({q1, q2}) == 1;  // proportional quadrics share themselves
        for (const auto& l : linears) brute = brute || (divides(l, q1) && divides(l, q2));
        EXPECT_EQ(common_factor(q1, q2), brute);
    }
    EXPECT_THROW(common_factor(Form<PrimeField>(f, 2), Form<PrimeField>(f, 2)), ShapeError);
    EXPECT_TRUE(common_factor(Form<PrimeField>(f, 2), Form<PrimeField>::variable(f, 0) * Form<PrimeField>::variable(f, 1)));
}

TEST(FormAlgebra, SpanAndRank) {
    const RationalField q;
    const auto x = Form<RationalField>::variable(q, 0), y = Form<RationalField>::variable(q, 1);
    EXPECT_EQ(forms_rank<RationalField>({x, y, x + y}), 2u);
    EXPECT_TRUE(in_span<RationalField>({x, y}, x * Rational(3) - y));
    EXPECT_FALSE(in_span<RationalField>({x}, y));
    EXPECT_EQ(forms_rank<RationalField>({Form<RationalField>(q, 0), x}), 1u);
}
