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

#include <cstdlib>

#include "test_support.hpp"

using namespace sextic;

namespace {

std::string bytes(const Sample<PrimeField>& s) {
    return presentation_to_json(s.presentation, metadata_to_json(s.metadata)).dump();
}

Form<PrimeField> parse_terms(const PrimeField& f, int degree, const std::vector<std::pair<long long, Exponent>>& t) {
    Form<PrimeField> out(f, degree);
    for (const auto& [c, e] : t) out.set_coefficient(e, f.from_int(c));
    return out;
}

}  // namespace

TEST(Sampler, SameSeedSameBytes) {
    const PrimeField f(101);
    for (Stratum s : all_strata) {
        const auto a = sample(f, SampleRequest{s, 12345});
        const auto b = sample(f, SampleRequest{s, 12345});
        EXPECT_EQ(bytes(a), bytes(b));
        EXPECT_NE(bytes(a), bytes(sample(f, SampleRequest{s, 12346})));
        EXPECT_EQ(a.metadata.stratum, s);
        EXPECT_EQ(a.metadata.seed, 12345u);
        EXPECT_EQ(a.metadata.field, "p:101");
        EXPECT_EQ(a.metadata.x4_case.has_value(), s == Stratum::X4);
    }
}

TEST(Sampler, BatchDoesNotDependOnWorkers) {
    const PrimeField f(101);
    SampleRequest req{Stratum::X2, 70};
    const auto one = sample_batch(f, req, 6, 1);
    const auto three = sample_batch(f, req, 6, 3);
    ASSERT_EQ(one.size(), 6u);
    for (std::size_t k = 0; k < 6; ++k) {
        EXPECT_EQ(bytes(one[k]), bytes(three[k]));
        SampleRequest single = req;
        single.seed = req.seed + k;
        EXPECT_EQ(bytes(one[k]), bytes(sample(f, single)));
    }
}

TEST(Sampler, WorkerCountFromEnvironment) {
    ::setenv("SEXTIC_STRATA_THREADS", "3", 1);
    EXPECT_EQ(worker_count(), 3u);
    ::setenv("SEXTIC_STRATA_THREADS", "junk", 1);
    EXPECT_GE(worker_count(), 1u);
    ::unsetenv("SEXTIC_STRATA_THREADS");
}

TEST(Sampler, LowRejectionRateAtF101) {
    const PrimeField f(101);
    for (Stratum s : {Stratum::X0, Stratum::X2, Stratum::X3, Stratum::X5}) {
        std::size_t rejects = 0;
        const int n = 40;
        for (const auto& smp : sample_batch(f, SampleRequest{s, 500}, n, 1)) rejects += smp.metadata.rejects;
        EXPECT_LT(static_cast<double>(rejects) / (n + rejects), 0.05) << stratum_name(s);
    }
}

TEST(Sampler, X4CasesAreBalanced) {
    const PrimeField f(101);
    int case_i = 0;
    const int n = 200;
    for (const auto& smp : sample_batch(f, SampleRequest{Stratum::X4, 900}, n, 1)) {
        ASSERT_TRUE(smp.metadata.x4_case.has_value());
        EXPECT_EQ(x4_case(smp.presentation), *smp.metadata.x4_case);
        case_i += *smp.metadata.x4_case == X4Case::i;
    }
    // binomial(200, 1/2): five standard deviations either side
    EXPECT_GT(case_i, 65);
    EXPECT_LT(case_i, 135);
}

TEST(Sampler, RejectionBudgetOverF2) {
    const PrimeField f(2);
    int thrown = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        SampleRequest req{Stratum::X3, seed, 1};
        try {
            const auto s = sample(f, req);
            EXPECT_EQ(s.metadata.rejects, 0u);
        } catch (const RejectionBudgetExceeded& e) {
            ++thrown;
            EXPECT_EQ(e.rejects, 1u);
            EXPECT_FALSE(e.last_violation.empty());
        }
    }
    EXPECT_GT(thrown, 0);
    EXPECT_THROW(sample(f, SampleRequest{Stratum::X0, 0, 0}), Error);
}

TEST(Sampler, RationalNeedsOptIn) {
    EXPECT_THROW(sample(RationalField{}, SampleRequest{Stratum::X5, 1}), Error);
    SampleRequest req{Stratum::X5, 1};
    req.allow_rational = true;
    EXPECT_EQ(sample(RationalField{}, req).metadata.field, "q");
}

TEST(ConstructX5, FermatSextic) {
    const PrimeField f(101);
    const auto x = Form<PrimeField>::variable(f, 0), y = Form<PrimeField>::variable(f, 1);
    const auto sextic = parse_terms(f, 6, {{1, {6, 0, 0}}, {1, {0, 6, 0}}});
    const auto p = construct_x5(sextic, x, y * y);
    EXPECT_EQ(fitting_determinant(p).to_string(), "X^6 + Y^6");
    EXPECT_EQ(fitting_determinant(p), sextic);
    EXPECT_TRUE(validate_shape(p, Stratum::X5).empty());
    EXPECT_EQ(classify(p), Stratum::X5);
}

TEST(ConstructX5, Failures) {
    const PrimeField f(101);
    const auto x = Form<PrimeField>::variable(f, 0), y = Form<PrimeField>::variable(f, 1);
    const auto sextic = parse_terms(f, 6, {{1, {6, 0, 0}}, {1, {0, 6, 0}}});
    EXPECT_THROW(construct_x5(sextic, x, x * y), DivisibilityFailure);
    EXPECT_THROW(construct_x5(sextic, Form<PrimeField>(f, 1), y * y), DivisibilityFailure);
    const auto z6 = parse_terms(f, 6, {{1, {0, 0, 6}}});
    EXPECT_THROW(construct_x5(z6, x, y * y), MembershipFailure);
    EXPECT_THROW(construct_x5(x * y, x, y * y), ShapeError);
}

TEST(ConstructX5, RandomMembersOfTheIdeal) {
    const PrimeField f(101);
    Rng rng(51);
    for (int trial = 0; trial < 10; ++trial) {
        const auto l = random_form(rng, f, 1), q = random_form(rng, f, 2);
        const auto g0 = random_form(rng, f, 5), h0 = random_form(rng, f, 4);
        // l g0 alone, then a general member h0 q - l g0
        const auto pure = (l * g0).with_degree(6);
        const auto sextic = (h0 * q - l * g0).with_degree(6);
        for (const auto& target : {pure, sextic}) {
            const auto p = construct_x5(target, l, q);
            EXPECT_EQ(fitting_determinant(p), target);
            EXPECT_EQ(p(0, 1), l);
            EXPECT_EQ(p(1, 1), q);
        }
    }
}

TEST(ConstructX5, OverTheRationals) {
    const RationalField q;
    const auto x = Form<RationalField>::variable(q, 0), y = Form<RationalField>::variable(q, 1),
               z = Form<RationalField>::variable(q, 2);
    auto l = x + z * Rational(2);
    auto quad = y * y - x * z * (Rational(1) / Rational(3));
    const auto sextic = (quad * x * x * x * x - l * y * y * y * y * z * Rational(5)).with_degree(6);
    const auto p = construct_x5(sextic, l, quad);
    EXPECT_EQ(fitting_determinant(p), sextic);
    EXPECT_TRUE(validate_shape(p, Stratum::X5).empty());
}

TEST(Sampler, DualShapes) {
    EXPECT_EQ(dual_shape(Stratum::X3).source, (TwistVector{-2, -2, -2, 0}));
    EXPECT_EQ(dual_shape(Stratum::X3).target, (TwistVector{-1, -1, 1, 1}));
    EXPECT_EQ(dual_shape(Stratum::X5).source, (TwistVector{-3, -2}));
    EXPECT_EQ(dual_shape(Stratum::X5).target, (TwistVector{-1, 2}));
}

TEST(GroupAction, AutomorphismDeterminantIsAConstant) {
    const PrimeField f(101);
    Rng rng(52);
    for (Stratum s : all_strata)
        for (const auto& tw : {stratum_shape(s).source, stratum_shape(s).target}) {
            const auto g = random_automorphism(rng, f, tw);
            const auto d = det_poly(g);
            EXPECT_FALSE(d.is_zero());
            EXPECT_EQ(d.degree(), 0);
        }
}
