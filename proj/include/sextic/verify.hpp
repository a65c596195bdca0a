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

#ifndef SEXTIC_VERIFY_HPP
#define SEXTIC_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cohomology.hpp"
#include "dimensions.hpp"
#include "error.hpp"
#include "field.hpp"
#include "form.hpp"
#include "kronecker.hpp"
#include "orbit_oracle.hpp"
#include "polarization.hpp"
#include "presentation.hpp"
#include "random.hpp"
#include "sampler.hpp"
#include "strata.hpp"

namespace sextic {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::vector<std::string> details;
    double seconds = 0;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t table_samples = 200;
    std::size_t involution_samples = 100;
    std::size_t oracle_matrices = 1000;
    std::size_t kronecker_modules = 200;
    std::size_t x5_instances = 100;
    std::size_t negative_cases = 100;
};

namespace detail {

class Check {
   public:
    explicit Check(CriterionResult& r) : r_(r) {}
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            r_.passed = false;
            if (failures_++ < 20) r_.details.push_back("FAIL " + what);
        }
    }
    void note(const std::string& s) { r_.details.push_back(s); }

   private:
    CriterionResult& r_;
    std::size_t failures_ = 0;
};

template <class Body>
CriterionResult run_criterion(int id, std::string name, Body&& body) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.passed = true;
    const auto t0 = std::chrono::steady_clock::now();
    Check c(r);
    try {
        body(c);
    } catch (const std::exception& e) {
        r.passed = false;
        r.details.push_back(std::string("FAIL exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::string tuple_str(std::initializer_list<long long> xs) {
    std::string s = "(";
    bool first = true;
    for (long long x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

/// Samples reused by several criteria, keyed by stratum.
class SampleCache {
   public:
    SampleCache(const PrimeField& f, const VerifyOptions& o) : f_(f), o_(o) {}
    const std::vector<Sample<PrimeField>>& get(Stratum s) {
        auto it = cache_.find(s);
        if (it != cache_.end()) return it->second;
        SampleRequest req;
        req.label = s;
        req.seed = o_.seed;
        return cache_[s] = sample_batch(f_, req, o_.table_samples);
    }

   private:
    PrimeField f_;
    VerifyOptions o_;
    std::map<Stratum, std::vector<Sample<PrimeField>>> cache_;
};

// Target-side semistability oracle: all subspaces T of k^n by closure, S_T by brute force.
inline std::vector<std::vector<std::uint32_t>> all_vectors(std::uint32_t p, std::size_t dim) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> v(dim, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < dim && ++v[i] == p) v[i++] = 0;
        if (i == dim) break;
    }
    return out;
}

inline std::size_t vector_code(const std::vector<std::uint32_t>& v, std::uint32_t p) {
    std::size_t c = 0;
    for (std::size_t i = v.size(); i-- > 0;) c = c * p + v[i];
    return c;
}

/// Every subspace of F_p^dim as a sorted set of vector codes, found by closing spans.
inline std::set<std::set<std::size_t>> all_subspaces(std::uint32_t p, std::size_t dim) {
    const auto vecs = all_vectors(p, dim);
    auto close = [&](std::set<std::size_t> gens) {
        std::set<std::size_t> span{0};
        for (std::size_t g : gens) {
            std::set<std::size_t> next = span;
            for (std::size_t s : span)
                for (std::uint32_t c = 1; c < p; ++c) {
                    std::vector<std::uint32_t> w(dim);
                    for (std::size_t i = 0; i < dim; ++i) w[i] = (vecs[s][i] + c * vecs[g][i]) % p;
                    next.insert(vector_code(w, p));
                }
            span = std::move(next);
        }
        return span;
    };
    std::set<std::set<std::size_t>> out{{0}};
    std::vector<std::set<std::size_t>> frontier{{0}};
    while (!frontier.empty()) {
        std::vector<std::set<std::size_t>> next;
        for (const auto& s : frontier)
            for (std::size_t v = 1; v < vecs.size(); ++v) {
                if (s.count(v)) continue;
                std::set<std::size_t> gens(s.begin(), s.end());
                gens.insert(v);
                auto t = close(gens);
                if (out.insert(t).second) next.push_back(std::move(t));
            }
        frontier = std::move(next);
    }
    return out;
}

inline std::size_t log_p(std::size_t size, std::uint32_t p) {
    std::size_t d = 0;
    while (size > 1) {
        size /= p;
        ++d;
    }
    return d;
}

/// True iff some T has n dim S_T > m dim T, where S_T = { v : A_k v in T for all k }.
inline bool target_side_unstable(const KroneckerModule<PrimeField>& mod,
                                 const std::set<std::set<std::size_t>>& target_subspaces) {
    const std::uint32_t p = mod.field().p;
    const std::size_t n = mod.rows(), m = mod.cols();
    const auto sources = all_vectors(p, m);
    for (const auto& T : target_subspaces) {
        std::size_t count = 0;
        for (const auto& v : sources) {
            bool inside = true;
            for (int k = 0; k < 3 && inside; ++k) {
                std::vector<std::uint32_t> w(n, 0);
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t acc = 0;
                    for (std::size_t j = 0; j < m; ++j) acc += std::uint64_t(mod.coefficient(k)(i, j).value()) * v[j];
                    w[i] = static_cast<std::uint32_t>(acc % p);
                }
                inside = T.count(vector_code(w, p)) > 0;
            }
            if (inside) ++count;
        }
        if (n * log_p(count, p) > m * log_p(T.size(), p)) return true;
    }
    return false;
}

inline KroneckerModule<PrimeField> random_module(Rng& rng, const PrimeField& f, std::size_t n, std::size_t m) {
    std::array<Matrix<PrimeField>, 3> a{Matrix<PrimeField>(f, n, m), Matrix<PrimeField>(f, n, m),
                                        Matrix<PrimeField>(f, n, m)};
    for (auto& x : a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) x(i, j) = random_scalar(rng, f);
    return KroneckerModule<PrimeField>(f, a);
}

/// 4 x 5 module whose first a columns map into the first b rows.
inline KroneckerModule<PrimeField> planted_module(Rng& rng, const PrimeField& f, std::size_t a, std::size_t b) {
    auto mod = random_module(rng, f, 4, 5);
    std::array<Matrix<PrimeField>, 3> c{mod.coefficient(0), mod.coefficient(1), mod.coefficient(2)};
    for (auto& x : c)
        for (std::size_t i = b; i < 4; ++i)
            for (std::size_t j = 0; j < a; ++j) x(i, j) = f.zero();
    return KroneckerModule<PrimeField>(f, c);
}

}  // namespace detail

// ------------------------------------------------------------------ criteria

inline CriterionResult criterion_table(detail::SampleCache& cache) {
    return detail::run_criterion(1, "table reproduction", [&](detail::Check& c) {
        for (Stratum s : all_strata) {
            const auto& batch = cache.get(s);
            std::size_t ok = 0;
            for (const auto& smp : batch) {
                const auto prof = profile(smp.presentation);
                const bool match = prof == expected_profile(s);
                c.expect(match, stratum_name(s) + " seed " + std::to_string(smp.metadata.seed) + " profile " +
                                    prof.str() + " expected " + expected_profile(s).str());
                c.expect((prof.e > 0) == (s == Stratum::X5), stratum_name(s) + " h1 F(1) = " + std::to_string(prof.e));
                const auto label = classify(smp.presentation);
                c.expect(label == s, stratum_name(s) + " sample classified as " + stratum_name(label));
                if (match && label == s) ++ok;
            }
            c.note(stratum_name(s) + ": " + std::to_string(ok) + "/" + std::to_string(batch.size()) + " samples with " +
                   expected_profile(s).str());
        }
    });
}

inline CriterionResult criterion_hilbert(detail::SampleCache& cache) {
    return detail::run_criterion(2, "Hilbert polynomial 6m+1", [&](detail::Check& c) {
        std::size_t checked = 0;
        for (Stratum s : all_strata)
            for (const auto& smp : cache.get(s)) {
                const auto& p = smp.presentation;
                const auto hp = hilbert_polynomial(p);
                c.expect(hp.r == Rational(6) && hp.chi == Rational(1), stratum_name(s) + " Hilbert polynomial");
                for (int m = -5; m <= 5; ++m) {
                    const long long lhs = static_cast<long long>(h0(p, m)) - static_cast<long long>(h1(p, m));
                    c.expect(lhs == 6 * m + 1, stratum_name(s) + " seed " + std::to_string(smp.metadata.seed) +
                                                   " m=" + std::to_string(m) + ": h0-h1=" + std::to_string(lhs));
                    ++checked;
                }
            }
        c.note(std::to_string(checked) + " (sample, m) pairs checked");
    });
}

inline CriterionResult criterion_duality(detail::SampleCache& cache, const VerifyOptions& o) {
    return detail::run_criterion(3, "duality", [&](detail::Check& c) {
        const TwistVector want_src{-2, -2, -2, 0}, want_tgt{-1, -1, 1, 1};
        for (const auto& smp : cache.get(Stratum::X3)) {
            const auto g = dual(smp.presentation);
            c.expect(g.source() == want_src && g.target() == want_tgt, "X3 dual twist shape");
            c.expect(h0(g, -1) == 2, "h0(G(-1)) = " + std::to_string(h0(g, -1)));
            c.expect(h1(g, 0) == 0, "h1(G) = " + std::to_string(h1(g, 0)));
        }
        c.note("X3 duals: shape 3O(-2)+O -> 2O(-1)+2O(1), h0(G(-1)) = 2, h1(G) = 0 on " +
               std::to_string(cache.get(Stratum::X3).size()) + " samples");

        // involution on random presentations of random shapes
        Rng rng(o.seed ^ 0x5eed0d0aULL);
        const PrimeField f(101);
        std::size_t done = 0;
        for (std::size_t k = 0; k < o.involution_samples; ++k) {
            const std::size_t n = 1 + rng.uniform_below(5), m = 1 + rng.uniform_below(5);
            TwistVector src, tgt;
            for (std::size_t j = 0; j < m; ++j) src.push_back(static_cast<int>(rng.uniform_int(-5, 1)));
            for (std::size_t i = 0; i < n; ++i) tgt.push_back(static_cast<int>(rng.uniform_int(-3, 2)));
            PolyMatrix<PrimeField> mat(f, n, m);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < m; ++j) mat(i, j) = random_form(rng, f, tgt[i] - src[j]);
            const Presentation<PrimeField> p(src, tgt, mat);
            c.expect(dual(dual(p)) == p, "dual(dual(p)) != p for a " + std::to_string(n) + "x" + std::to_string(m) +
                                              " presentation");
            ++done;
        }
        c.note("dual o dual = id on " + std::to_string(done) + " random presentations");

        std::vector<Shape> shapes;
        for (Stratum s : all_strata) shapes.push_back(stratum_shape(s));
        shapes.push_back(x4_short_shape());
        for (const auto& s : shapes) {
            const PolyMatrix<PrimeField> zero(f, s.target.size(), s.source.size());
            const Presentation<PrimeField> p(s.source, s.target, zero);
            const Rational total = euler_characteristic(p, 0) + euler_characteristic(dual(p), 0);
            c.expect(total == Rational(6), "chi + chi(dual) = " + total.str());
        }
        c.note("chi + chi(dual) = 6 on all " + std::to_string(shapes.size()) + " shapes");
    });
}

inline CriterionResult criterion_dimensions() {
    return detail::run_criterion(4, "dimension arithmetic", [](detail::Check& c) {
        c.expect(moduli_dimension(3, 5, 4) == 20, "moduli_dimension(3,5,4)");
        c.expect(moduli_dimension(3, 2, 3) == 6, "moduli_dimension(3,2,3)");
        const std::map<Stratum, std::array<long long, 3>> expected{
            {Stratum::X0, {0, 20, 17}}, {Stratum::X1, {2, 35, 0}},  {Stratum::X2, {4, 12, 21}},
            {Stratum::X3, {6, 8, 23}},  {Stratum::X4, {6, 8, 23}}, {Stratum::X5, {8, 4, 25}}};
        for (const auto& r : stratum_dimensions()) {
            const auto& e = expected.at(r.label);
            c.expect(r.codim == e[0] && r.base_dim == e[1] && r.fibre_dim == e[2],
                     stratum_name(r.label) + " row " + detail::tuple_str({r.codim, r.base_dim, r.fibre_dim}));
            c.expect(r.dim() == moduli_space_dimension - r.codim, stratum_name(r.label) + " base + fibre != 37 - codim");
            c.expect(r.dim() == stratum_quotient_dimension(r.label),
                     stratum_name(r.label) + " quotient count " + std::to_string(stratum_quotient_dimension(r.label)));
            c.note(stratum_name(r.label) + ": " + std::to_string(r.base_dim) + " + " + std::to_string(r.fibre_dim) +
                   " = " + std::to_string(r.dim()) + " = 37 - " + std::to_string(r.codim));
        }
    });
}

inline CriterionResult criterion_windows() {
    return detail::run_criterion(5, "polarization windows", [](detail::Check& c) {
        const long long grid = 700;
        const auto w = polarization_window_42(grid);
        const auto six = grid_points_open(Rational(1) / Rational(4), Rational(1) / Rational(2), grid);
        const auto aug = grid_points_open(Rational(3) / Rational(7), Rational(1) / Rational(2), grid);
        c.expect(w.six == six, "six-inequality window differs from (1/4, 1/2)");
        c.expect(w.augmented == aug, "augmented window differs from (3/7, 1/2)");
        c.expect(polarization_window_22(grid) == grid_points_open(Rational(0), Rational(1) / Rational(5), grid),
                 "mu2 window differs from (0, 1/5)");
        auto span = [&](const std::vector<long long>& ks) {
            return ks.empty() ? std::string("empty")
                              : std::to_string(ks.front()) + "/700 .. " + std::to_string(ks.back()) + "/700";
        };
        c.note("six inequalities: " + span(w.six));
        c.note("augmented: " + span(w.augmented));
        c.note("mu2: " + span(polarization_window_22(grid)));
    });
}

inline CriterionResult criterion_x1_oracle(const VerifyOptions& o) {
    return detail::run_criterion(6, "X1 orbit oracle", [&](detail::Check& c) {
        const X1OrbitOracle oracle;
        Rng rng(o.seed ^ 0x0f2ULL);
        std::map<std::string, std::size_t> hits;
        for (std::size_t k = 0; k < o.oracle_matrices; ++k) {
            auto p = random_x1_f2(rng);
            // odd draws: clear each cell with probability 1/2 so degenerate orbits are well represented
            if (k % 2 == 1) {
                PolyMatrix<PrimeField> m = p.matrix();
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j)
                        if (rng.coin()) m(i, j) = Form<PrimeField>(p.field(), p.expected_degree(i, j));
                p = Presentation<PrimeField>(p.source(), p.target(), m);
            }
            const auto fast = x1_patterns(p);
            const auto slow = oracle.patterns(p);
            std::string names;
            for (Pattern q : slow) names += pattern_name(q);
            ++hits[names.empty() ? "none" : names];
            c.expect(fast == slow, "matrix " + std::to_string(k) + " disagrees");
        }
        std::string summary = std::to_string(o.oracle_matrices) + " matrices;";
        for (const auto& [k, v] : hits) summary += " " + k + ":" + std::to_string(v);
        c.note(summary);
    });
}

inline CriterionResult criterion_kronecker(const VerifyOptions& o) {
    return detail::run_criterion(7, "Kronecker oracle", [&](detail::Check& c) {
        const PrimeField f3(3);
        Rng rng(o.seed ^ 0x3ULL);
        const auto targets = detail::all_subspaces(3, 4);
        std::size_t unstable = 0;
        for (std::size_t k = 0; k < o.kronecker_modules; ++k) {
            const auto mod = detail::random_module(rng, f3, 4, 5);
            const auto r = semistable_exact_smallfield(mod);
            const bool oracle_unstable = detail::target_side_unstable(mod, targets);
            c.expect((r.status == Stability::unstable) == oracle_unstable,
                     "module " + std::to_string(k) + " verdict " + stability_name(r.status) + " vs target-side oracle");
            if (r.witness) {
                ++unstable;
                const auto v = verify_witness(mod, *r.witness);
                c.expect(v.empty(), "module " + std::to_string(k) + " witness: " + (v.empty() ? "" : v.front()));
            }
        }
        c.note(std::to_string(o.kronecker_modules) + " random 4x5 modules over F_3, " + std::to_string(unstable) +
               " unstable, all verdicts match the target-side oracle");

        const std::array<std::pair<std::size_t, std::size_t>, 4> blocks{{{1, 0}, {2, 1}, {3, 2}, {4, 3}}};
        for (const auto& [a, b] : blocks) {
            for (const PrimeField& f : {PrimeField(3), PrimeField(101)}) {
                const auto mod = detail::planted_module(rng, f, a, b);
                const auto r = f.p == 3 ? semistable_exact_smallfield(mod) : semistable_exact_pruned(mod);
                const std::string tag = "block " + detail::tuple_str({(long long)a, (long long)b}) + " over " + f.name();
                c.expect(r.status == Stability::unstable && r.witness.has_value(), tag + " not reported unstable");
                if (!r.witness) continue;
                c.expect(verify_witness(mod, *r.witness).empty(), tag + " witness fails re-verification");
                c.expect(r.witness->dimS == a && r.witness->dimT == b,
                         tag + " witness dims " +
                             detail::tuple_str({(long long)r.witness->dimS, (long long)r.witness->dimT}));
                c.note(tag + ": unstable, witness " +
                       detail::tuple_str({(long long)r.witness->dimS, (long long)r.witness->dimT}) + " via " +
                       mode_name(r.mode));
            }
        }
    });
}

inline CriterionResult criterion_x5_roundtrip(const VerifyOptions& o) {
    return detail::run_criterion(8, "X5 constructor roundtrip", [&](detail::Check& c) {
        const PrimeField f(101);
        Rng rng(o.seed ^ 0x5ULL);
        std::size_t ok = 0;
        for (std::size_t k = 0; k < o.x5_instances; ++k) {
            Form<PrimeField> l = random_form(rng, f, 1), q = random_form(rng, f, 2);
            while (l.is_zero() || divides(l, q)) {
                l = random_form(rng, f, 1);
                q = random_form(rng, f, 2);
            }
            const Form<PrimeField> f6 = l * random_form(rng, f, 5) + q * random_form(rng, f, 4);
            const auto p = construct_x5(f6, l, q);
            const bool same = fitting_determinant(p) == f6;
            c.expect(same, "instance " + std::to_string(k) + ": determinant differs from f");
            c.expect(validate_shape(p, Stratum::X5).empty(), "instance " + std::to_string(k) + " fails X5 validation");
            if (same) ++ok;
        }
        c.note(std::to_string(ok) + "/" + std::to_string(o.x5_instances) + " determinants equal f");
    });
}

/// Classifies negative controls; a case passes if the profile leaves the shape's table row.
inline CriterionResult criterion_negative_controls(const VerifyOptions& o) {
    return detail::run_criterion(9, "negative controls", [&](detail::Check& c) {
        const PrimeField f(101);
        Rng rng(o.seed ^ 0x9ULL);
        auto run = [&](Stratum s, auto&& make) {
            std::size_t off_row = 0;
            std::map<std::string, std::size_t> seen;
            for (std::size_t k = 0; k < o.negative_cases; ++k) {
                Presentation<PrimeField> p = make();
                while (!validate(p).empty()) p = make();
                std::string outcome;
                try {
                    const Stratum got = classify(p);
                    outcome = "classified " + stratum_name(got) + " " + profile(p).str();
                    if (profile(p) != expected_profile(s)) ++off_row;
                } catch (const ProfileNotInTable& e) {
                    outcome = "not in table " + e.profile.str();
                    ++off_row;
                }
                ++seen[outcome];
            }
            const std::string tag = stratum_name(s) == "X3" ? "X3 with dependent phi_11" : "X5 with l | q";
            std::string summary = tag + ": " + std::to_string(off_row) + "/" + std::to_string(o.negative_cases) +
                                  " leave the table row;";
            for (const auto& [k, v] : seen) summary += " [" + k + "] x" + std::to_string(v);
            c.note(summary);
            c.expect(off_row == o.negative_cases, tag + ": only " + std::to_string(off_row) + " of " +
                                                      std::to_string(o.negative_cases) + " leave the table row");
        };
        run(Stratum::X3, [&] {
            const Shape s = stratum_shape(Stratum::X3);
            PolyMatrix<PrimeField> m = detail::random_cells(rng, f, s);
            const Form<PrimeField> l = random_form(rng, f, 1);
            m(0, 0) = l;
            m(0, 1) = l * random_scalar(rng, f);
            return Presentation<PrimeField>(s.source, s.target, m);
        });
        run(Stratum::X5, [&] {
            const Shape s = stratum_shape(Stratum::X5);
            PolyMatrix<PrimeField> m = detail::random_cells(rng, f, s);
            m(1, 1) = m(0, 1) * random_form(rng, f, 1);
            return Presentation<PrimeField>(s.source, s.target, m);
        });
    });
}

// ------------------------------------------------------------------ suites

inline const std::map<std::string, std::vector<int>>& suite_table() {
    static const std::map<std::string, std::vector<int>> t{
        {"table", {1, 2}}, {"duality", {3}},  {"dims", {4, 5}},     {"oracle", {6, 7}},
        {"x5", {8}},       {"negative", {9}}, {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9}}};
    return t;
}

inline std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, const VerifyOptions& o = {}) {
    const PrimeField f(101);
    detail::SampleCache cache(f, o);
    std::vector<CriterionResult> out;
    for (int id : ids) {
        switch (id) {
            case 1:
                out.push_back(criterion_table(cache));
                break;
            case 2:
                out.push_back(criterion_hilbert(cache));
                break;
            case 3:
                out.push_back(criterion_duality(cache, o));
                break;
            case 4:
                out.push_back(criterion_dimensions());
                break;
            case 5:
                out.push_back(criterion_windows());
                break;
            case 6:
                out.push_back(criterion_x1_oracle(o));
                break;
            case 7:
                out.push_back(criterion_kronecker(o));
                break;
            case 8:
                out.push_back(criterion_x5_roundtrip(o));
                break;
            case 9:
                out.push_back(criterion_negative_controls(o));
                break;
            default:
                throw Error("unknown criterion " + std::to_string(id));
        }
    }
    return out;
}

inline std::vector<CriterionResult> run_suite(const std::string& name, const VerifyOptions& o = {}) {
    const auto it = suite_table().find(name);
    if (it == suite_table().end()) throw ParseError("unknown suite '" + name + "'");
    return run_criteria(it->second, o);
}

}  // namespace sextic

#endif
