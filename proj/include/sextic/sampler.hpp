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

#ifndef SEXTIC_SAMPLER_HPP
#define SEXTIC_SAMPLER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "form.hpp"
#include "form_algebra.hpp"
#include "matrix.hpp"
#include "poly_matrix.hpp"
#include "presentation.hpp"
#include "random.hpp"
#include "strata.hpp"

namespace sextic {

class RejectionBudgetExceeded : public BudgetExceeded {
   public:
    RejectionBudgetExceeded(std::size_t rejects, std::string last)
        : BudgetExceeded("sampler gave up after " + std::to_string(rejects) + " rejections; last: " + last),
          rejects(rejects),
          last_violation(std::move(last)) {}
    std::size_t rejects;
    std::string last_violation;
};

class MembershipFailure : public Error {
   public:
    MembershipFailure() : Error("construct_x5: f is not in the degree-6 part of the ideal (l, q)") {}
};

class DivisibilityFailure : public Error {
   public:
    DivisibilityFailure() : Error("construct_x5: l divides q") {}
};

struct SampleRequest {
    Stratum label = Stratum::X0;
    std::uint64_t seed = 0;
    std::size_t max_rejects = 1000;
    bool allow_rational = false;
};

struct SampleMetadata {
    Stratum stratum = Stratum::X0;
    std::uint64_t seed = 0;
    std::string field;
    std::size_t rejects = 0;
    std::optional<X4Case> x4_case;
};

template <class K>
struct Sample {
    Presentation<K> presentation;
    SampleMetadata metadata;
};

namespace detail {

template <class K>
PolyMatrix<K> random_cells(Rng& rng, const K& f, const Shape& s) {
    PolyMatrix<K> m(f, s.target.size(), s.source.size());
    for (std::size_t i = 0; i < s.target.size(); ++i)
        for (std::size_t j = 0; j < s.source.size(); ++j) m(i, j) = random_form(rng, f, s.target[i] - s.source[j]);
    return m;
}

/// One draw of the normal form; X4 flips a coin for the case first.
template <class K>
Presentation<K> draw_normal_form(Rng& rng, const K& f, Stratum label, std::optional<X4Case>& kase) {
    const Shape s = stratum_shape(label);
    PolyMatrix<K> m = random_cells(rng, f, s);
    switch (label) {
        case Stratum::X2:
            m(0, 3) = Form<K>(f, 0);
            m(1, 3) = Form<K>(f, 0);
            break;
        case Stratum::X4:
            kase = rng.coin() ? X4Case::i : X4Case::ii;
            if (*kase == X4Case::i) {
                m(0, 0) = Form<K>(f, 1);
                m(0, 1) = Form<K>(f, 1);
                m(0, 2) = Form<K>::constant(f, f.one());
                m(1, 2) = Form<K>(f, 1);
                m(2, 2) = Form<K>(f, 3);
            } else {
                m(0, 2) = Form<K>(f, 0);
            }
            break;
        default:
            break;
    }
    return Presentation<K>(s.source, s.target, std::move(m));
}

}  // namespace detail

/*
 * Rejection sampler over the free cells of the stratum's normal form.
 * Deterministic in (seed, field, label): the Rng stream is consumed in cell
 * order, row by row, once per attempt.
 */
template <class K>
Sample<K> sample(const K& f, const SampleRequest& req) {
    if constexpr (!K::is_finite)
        if (!req.allow_rational) throw Error("sample: rational sampling is disabled (set allow_rational)");
    if (req.max_rejects < 1) throw Error("sample: max_rejects must be at least 1");
    Rng rng(req.seed);
    std::size_t rejects = 0;
    std::string last;
    while (rejects < req.max_rejects) {
        std::optional<X4Case> kase;
        Presentation<K> p = detail::draw_normal_form(rng, f, req.label, kase);
        const Violations v = validate_shape(p, req.label);
        if (v.empty()) return {std::move(p), {req.label, req.seed, field_spec_string(f), rejects, kase}};
        last = v.front();
        ++rejects;
    }
    throw RejectionBudgetExceeded(rejects, last);
}

/// Worker count from SEXTIC_STRATA_THREADS, else the hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("SEXTIC_STRATA_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Sample k of a batch uses seed + k, so results do not depend on the worker count.
template <class K>
std::vector<Sample<K>> sample_batch(const K& f, SampleRequest req, std::size_t count, unsigned workers = 0) {
    if (workers == 0) workers = worker_count();
    std::vector<std::optional<Sample<K>>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    auto run = [&](unsigned w) {
        for (std::size_t k = w; k < count; k += workers) {
            SampleRequest r = req;
            r.seed = req.seed + k;
            try {
                slots[k] = sample(f, r);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    if (workers == 1 || count < 2) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::vector<Sample<K>> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        if (errors[k]) std::rethrow_exception(errors[k]);
        out.push_back(std::move(*slots[k]));
    }
    return out;
}

/*
 * The X5 presentation [[h, l], [g, q]] with h q - l g = f, found by solving
 * the 28 x 36 linear system in the coefficients of h (degree 4) and g
 * (degree 5); free variables of the echelon form are set to zero.
 */
template <class K>
Presentation<K> construct_x5(const Form<K>& f, const Form<K>& l, const Form<K>& q) {
    if (l.degree() != 1 || q.degree() != 2 || f.degree() != 6)
        throw ShapeError("construct_x5: expected degrees (6, 1, 2)");
    if (l.is_zero() || divides(l, q)) throw DivisibilityFailure();
    const K& field = f.field();
    Form<K> lneg = l;
    lneg *= -field.one();
    const Matrix<K> sys = Matrix<K>::hstack(mult_map(q, 4), mult_map(lneg, 5));
    const std::vector<typename K::value_type> rhs(f.coefficients().begin(), f.coefficients().end());
    const auto x = solve(sys, rhs);
    if (!x) throw MembershipFailure();
    const std::size_t nh = monomial_count(4);
    Form<K> h(field, 4, std::vector<typename K::value_type>(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(nh)));
    Form<K> g(field, 5, std::vector<typename K::value_type>(x->begin() + static_cast<std::ptrdiff_t>(nh), x->end()));
    const Shape s = stratum_shape(Stratum::X5);
    return Presentation<K>(s.source, s.target, PolyMatrix<K>::from_rows(field, {{h, l}, {g, q}}));
}

/// Twist shape of the dual stratum.
inline Shape dual_shape(Stratum label) {
    const Shape s = stratum_shape(label);
    const PolyMatrix<PrimeField> zero(PrimeField(2), s.target.size(), s.source.size());
    const Presentation<PrimeField> d = dual(Presentation<PrimeField>(s.source, s.target, zero));
    return {d.source(), d.target()};
}

}  // namespace sextic

#endif
