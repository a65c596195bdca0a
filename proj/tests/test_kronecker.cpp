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

#include <set>

#include "test_support.hpp"

using namespace sextic;

namespace {

KroneckerModule<PrimeField> sparse_module(Rng& rng, const PrimeField& f, std::size_t n, std::size_t m) {
    std::array<Matrix<PrimeField>, 3> a{Matrix<PrimeField>(f, n, m), Matrix<PrimeField>(f, n, m),
                                        Matrix<PrimeField>(f, n, m)};
    const std::uint64_t density = 1 + rng.uniform_below(4);  // keep 1/4 .. 4/4 of the entries
    for (auto& x : a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (rng.uniform_below(4) < density) x(i, j) = random_scalar(rng, f);
    return KroneckerModule<PrimeField>(f, a);
}

}  // namespace

TEST(Grassmannian, CountMatchesEnumeration) {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::size_t m = 1; m <= 4; ++m)
            for (std::size_t k = 0; k <= m; ++k) {
                std::set<std::vector<std::vector<std::uint64_t>>> seen;
                std::uint64_t visited = 0;
                for_each_subspace(PrimeField(p), k, m, [&](const std::vector<std::vector<ModP>>& b) {
                    ++visited;
                    EXPECT_EQ(b.size(), k);
                    std::vector<std::vector<std::uint64_t>> key;
                    for (const auto& v : row_space(PrimeField(p), m, b)) {
                        key.emplace_back();
                        for (const auto& c : v) key.back().push_back(c.value());
                    }
                    seen.insert(key);
                    return true;
                });
                EXPECT_EQ(visited, grassmannian_count(k, m, p)) << "p=" << p << " k=" << k << " m=" << m;
                EXPECT_EQ(seen.size(), visited);
            }
    EXPECT_EQ(grassmannian_count(2, 4, 2), 35u);
    EXPECT_EQ(grassmannian_count(5, 4, 2), 0u);
}

TEST(Kronecker, SmallfieldMatchesTargetSideOracle) {
    Rng rng(31);
    for (std::uint32_t p : {2u, 3u}) {
        const PrimeField f(p);
        for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {3, 3}, {3, 4}}) {
            const auto targets = detail::all_subspaces(p, n);
            for (int trial = 0; trial < 40; ++trial) {
                const auto mod = sparse_module(rng, f, n, m);
                const auto r = semistable_exact_smallfield(mod);
                EXPECT_EQ(r.status == Stability::unstable, detail::target_side_unstable(mod, targets));
                if (r.witness) {
                    EXPECT_TRUE(verify_witness(mod, *r.witness).empty());
                }
            }
        }
    }
}

TEST(Kronecker, PrunedAgreesWithSmallfield) {
    Rng rng(32);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const PrimeField f(p);
        for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 5}, {3, 4}, {2, 3}, {3, 3}, {3, 2}}) {
            if (p == 5 && n * m > 12) continue;
            for (int trial = 0; trial < 25; ++trial) {
                const auto mod = sparse_module(rng, f, n, m);
                const auto a = semistable_exact_smallfield(mod);
                const auto b = semistable_exact_pruned(mod);
                EXPECT_EQ(a.status, b.status) << "p=" << p << " " << n << "x" << m << " trial " << trial;
                if (b.witness) {
                    EXPECT_TRUE(verify_witness(mod, *b.witness).empty());
                }
            }
        }
    }
}

TEST(Kronecker, PlantedDestabilizersAtF101) {
    Rng rng(33);
    const PrimeField f(101);
    for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {2, 1}, {3, 2}, {4, 3}}) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto mod = detail::planted_module(rng, f, a, b);
            const auto r = semistable_exact_pruned(mod);
            ASSERT_EQ(r.status, Stability::unstable);
            ASSERT_TRUE(r.witness.has_value());
            EXPECT_TRUE(verify_witness(mod, *r.witness).empty());
            EXPECT_GT(r.witness->slope_deficit, 0);
            // a random change of basis hides the block but not the instability
            Matrix<PrimeField> h(f, 4, 4), g(f, 5, 5);
            do {
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j) h(i, j) = random_scalar(rng, f);
            } while (rank(h) < 4);
            do {
                for (std::size_t i = 0; i < 5; ++i)
                    for (std::size_t j = 0; j < 5; ++j) g(i, j) = random_scalar(rng, f);
            } while (rank(g) < 5);
            const auto moved = mod.transformed(h, g);
            const auto r2 = semistable_exact_pruned(moved);
            EXPECT_EQ(r2.status, Stability::unstable);
            if (r2.witness) {
                EXPECT_TRUE(verify_witness(moved, *r2.witness).empty());
            }
        }
    }
}

TEST(Kronecker, GenericModulesAreSemistableAtF101) {
    Rng rng(34);
    const PrimeField f(101);
    for (int trial = 0; trial < 5; ++trial) {
        const auto mod = detail::random_module(rng, f, 4, 5);
        EXPECT_EQ(semistable_exact_pruned(mod).status, Stability::semistable);
        const auto r = semistable_randomized(mod, {.budget = 0, .trials = 200, .seed = 5, .direct_limit = 0});
        EXPECT_NE(r.status, Stability::semistable);  // randomized mode never certifies
    }
}

TEST(Kronecker, RandomizedWitnessesAreVerified) {
    Rng rng(35);
    const PrimeField f(101);
    const auto mod = detail::planted_module(rng, f, 2, 1);
    const auto r = semistable_randomized(mod, {.budget = 0, .trials = 5000, .seed = 2, .direct_limit = 0});
    if (r.status == Stability::unstable) {
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_TRUE(verify_witness(mod, *r.witness).empty());
    } else {
        EXPECT_EQ(r.status, Stability::unknown);
    }
}

TEST(Kronecker, ZeroModuleWitnessIsTheWholeSource) {
    const PrimeField f(3);
    std::array<Matrix<PrimeField>, 3> a{Matrix<PrimeField>(f, 2, 3), Matrix<PrimeField>(f, 2, 3),
                                        Matrix<PrimeField>(f, 2, 3)};
    const KroneckerModule<PrimeField> zero(f, a);
    const auto r = semistable_exact_smallfield(zero);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->dimS, 3u);
    EXPECT_EQ(r.witness->dimT, 0u);
    const auto pr = semistable_exact_pruned(zero);
    ASSERT_TRUE(pr.witness.has_value());
    EXPECT_EQ(pr.witness->dimS, 3u);
}

TEST(Kronecker, BudgetIsEnforced) {
    Rng rng(36);
    const auto mod = detail::random_module(rng, PrimeField(101), 4, 5);
    EXPECT_THROW(semistable_exact_smallfield(mod), BudgetExceeded);
    KroneckerOptions tiny;
    tiny.budget = 10;
    EXPECT_THROW(semistable_exact_smallfield(detail::random_module(rng, PrimeField(3), 2, 3), tiny), BudgetExceeded);
}

TEST(Kronecker, WitnessVerificationRejectsBogusPairs) {
    Rng rng(37);
    const PrimeField f(101);
    const auto mod = detail::random_module(rng, f, 4, 5);
    Witness<PrimeField> w = make_witness(mod, {{f.one(), f.zero(), f.zero(), f.zero(), f.zero()}});
    EXPECT_FALSE(verify_witness(mod, w).empty());  // a generic vector does not destabilize
}

TEST(Kronecker, RationalModules) {
    const RationalField q;
    Rng rng(38);
    PolyMatrix<RationalField> m(q, 4, 5);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 5; ++j) m(i, j) = random_form(rng, q, 1);
    const KroneckerModule<RationalField> generic(m);
    EXPECT_EQ(is_semistable(generic, KroneckerMode::exact_pruned).status, Stability::semistable);
    for (std::size_t i = 0; i < 4; ++i) m(i, 0) = Form<RationalField>(q, 1);
    const auto r = is_semistable(KroneckerModule<RationalField>(m), KroneckerMode::exact_pruned);
    EXPECT_EQ(r.status, Stability::unstable);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(verify_witness(KroneckerModule<RationalField>(m), *r.witness).empty());
    EXPECT_EQ(reduce_mod(Rational(1) / Rational(101), 101), std::nullopt);
    EXPECT_EQ(*reduce_mod(Rational(-1) / Rational(2), 7), PrimeField(7).element(3));
}

TEST(Kronecker, NonLinearEntriesRejected) {
    const PrimeField f(101);
    PolyMatrix<PrimeField> m(f, 1, 1);
    m(0, 0) = Form<PrimeField>::variable(f, 0) * Form<PrimeField>::variable(f, 1);
    EXPECT_THROW(KroneckerModule<PrimeField>{m}, ShapeError);
    Rng rng(1);
    const auto lin = detail::random_module(rng, f, 2, 3);
    const KroneckerModule<PrimeField> back(lin.to_poly());
    for (int v = 0; v < 3; ++v) EXPECT_EQ(back.coefficient(v), lin.coefficient(v));
}

TEST(Kronecker, ModuliDimensions) {
    EXPECT_EQ(moduli_dimension(3, 5, 4), 20);
    EXPECT_EQ(moduli_dimension(3, 2, 3), 6);
    EXPECT_EQ(moduli_dimension(3, 1, 1), 2);
}

TEST(Polarization, WindowsAtSeveralGrids) {
    const auto w100 = polarization_window_42(100);
    ASSERT_FALSE(w100.six.empty());
    EXPECT_EQ(w100.six.front(), 26);
    EXPECT_EQ(w100.six.back(), 49);
    const auto w700 = polarization_window_42(700);
    EXPECT_EQ(w700.six.front(), 176);
    EXPECT_EQ(w700.six.back(), 349);
    EXPECT_EQ(w700.six.size(), 174u);
    EXPECT_EQ(w700.augmented.front(), 301);
    EXPECT_EQ(w700.augmented.back(), 349);
    EXPECT_THROW(polarization_window_42(99), ShapeError);
    const auto mu = polarization_window_22(700);
    EXPECT_EQ(mu.front(), 1);
    EXPECT_EQ(mu.back(), 139);
}

TEST(Polarization, BoundaryPointsAreExcluded) {
    EXPECT_FALSE(polarization_valid_42(normalized_polarization(Rational(1) / Rational(4))));
    EXPECT_FALSE(polarization_valid_42(normalized_polarization(Rational(1) / Rational(2))));
    EXPECT_TRUE(polarization_valid_42(normalized_polarization(Rational(1) / Rational(3))));
    EXPECT_FALSE(polarization_valid_augmented(normalized_polarization(Rational(3) / Rational(7))));
    EXPECT_TRUE(polarization_valid_augmented(normalized_polarization(Rational(4) / Rational(9))));
    EXPECT_FALSE(polarization_valid_22(Rational(1) / Rational(5)));
    EXPECT_TRUE(polarization_valid_22(Rational(1) / Rational(6)));
    EXPECT_FALSE(polarization_valid_22(Rational(0)));
}

TEST(Polarization, AugmentedImpliesSix) {
    for (long long k = 1; k < 350; ++k) {
        const auto p = normalized_polarization(Rational(k) / Rational(700));
        if (polarization_valid_augmented(p)) {
            EXPECT_TRUE(polarization_valid_42(p));
        }
    }
}

TEST(Kronecker, SmallExamples) {
    const PrimeField f(3);
    const auto x = Form<PrimeField>::variable(f, 0), y = Form<PrimeField>::variable(f, 1),
               z = Form<PrimeField>::variable(f, 2);
    const Form<PrimeField> zero(f, 1);
    const KroneckerModule<PrimeField> staircase(PolyMatrix<PrimeField>::from_rows(f, {{x, zero}, {y, x}, {z, y}}));
    EXPECT_EQ(semistable_exact_smallfield(staircase).status, Stability::semistable);
    EXPECT_EQ(semistable_exact_pruned(staircase).status, Stability::semistable);

    // a zero column j destabilizes with S = e_j, T = 0
    Rng rng(39);
    for (std::uint32_t p : {3u, 101u}) {
        const PrimeField g(p);
        PolyMatrix<PrimeField> m = detail::random_module(rng, g, 4, 5).to_poly();
        for (std::size_t i = 0; i < 4; ++i) m(i, 2) = Form<PrimeField>(g, 1);
        const KroneckerModule<PrimeField> col(m);
        const auto r = p == 3 ? semistable_exact_smallfield(col) : semistable_exact_pruned(col);
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_EQ(r.witness->dimT, 0u);
        std::vector<ModP> e2(5, g.zero());
        e2[2] = g.one();
        ASSERT_EQ(r.witness->S.size(), 1u);
        EXPECT_EQ(r.witness->S[0], e2);
    }
}
