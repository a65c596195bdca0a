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

#ifndef SEXTIC_RANDOM_HPP
#define SEXTIC_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "field.hpp"
#include "form.hpp"
#include "monomial.hpp"

namespace sextic {

/*
 * Seedable generator with a frozen stream: std::mt19937_64 (whose output
 * sequence is fixed by the C++ standard) seeded with the 64-bit seed, and
 * integers in [0, n) drawn by rejection. A raw draw x is accepted when
 * x < 2^64 - (2^64 mod n) and mapped to x mod n. Nothing else consumes the
 * stream, so the same seed reproduces the same sample on any platform.
 */
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    std::uint64_t uniform_below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x > limit);
        return x % n;
    }

    /// Integer in [lo, hi].
    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(uniform_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return uniform_below(2) == 1; }

   private:
    std::mt19937_64 gen_;
};

/// Uniform element of F_p, or an integer in [-9, 9] over Q.
inline ModP random_scalar(Rng& rng, const PrimeField& f) { return f.element(rng.uniform_below(f.p)); }
inline Rational random_scalar(Rng& rng, const RationalField&) { return Rational(rng.uniform_int(-9, 9)); }

template <class K>
typename K::value_type random_nonzero_scalar(Rng& rng, const K& f) {
    while (true) {
        auto s = random_scalar(rng, f);
        if (!is_zero(s)) return s;
    }
}

/// Every coefficient drawn independently; degree < 0 gives the zero form.
template <class K>
Form<K> random_form(Rng& rng, const K& f, int degree) {
    std::vector<typename K::value_type> c;
    c.reserve(monomial_count(degree));
    for (std::size_t i = 0; i < monomial_count(degree); ++i) c.push_back(random_scalar(rng, f));
    return Form<K>(f, degree, std::move(c));
}

}  // namespace sextic

#endif
