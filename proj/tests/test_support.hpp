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

#ifndef SEXTIC_TEST_SUPPORT_HPP
#define SEXTIC_TEST_SUPPORT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sextic/sextic.hpp"

namespace testsupport {

using sextic::Form;
using sextic::ModP;
using sextic::PrimeField;
using sextic::Rational;
using sextic::RationalField;

/// Sparse polynomial over Z/p keyed by exponent triple; an oracle independent of dense Form storage.
using Sparse = std::map<std::array<int, 3>, long long>;

inline Sparse to_sparse(const Form<PrimeField>& f) {
    Sparse out;
    for (const auto& [e, c] : f.terms()) out[{e.x, e.y, e.z}] = c.value();
    return out;
}

inline Sparse sparse_mul(const Sparse& a, const Sparse& b, long long p) {
    Sparse out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            auto& slot = out[{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}];
            slot = (slot + ca * cb) % p;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline Sparse sparse_add(Sparse a, const Sparse& b, long long p, long long sign = 1) {
    for (const auto& [e, c] : b) {
        auto& slot = a[e];
        slot = ((slot + sign * c) % p + p) % p;
    }
    for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
    return a;
}

/// Rank of an integer matrix by fraction-free Bareiss elimination over Z.
inline std::size_t bareiss_rank(std::vector<std::vector<boost::multiprecision::cpp_int>> a) {
    using boost::multiprecision::cpp_int;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    cpp_int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

template <class K>
sextic::Presentation<K> random_presentation(sextic::Rng& rng, const K& f, const sextic::TwistVector& src,
                                            const sextic::TwistVector& tgt) {
    sextic::PolyMatrix<K> m(f, tgt.size(), src.size());
    for (std::size_t i = 0; i < tgt.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) m(i, j) = sextic::random_form(rng, f, tgt[i] - src[j]);
    return sextic::Presentation<K>(src, tgt, m);
}

/// Reduction of a rational presentation with integer coefficients modulo p.
inline sextic::Presentation<PrimeField> reduce(const sextic::Presentation<RationalField>& p, std::uint32_t prime) {
    const PrimeField f(prime);
    sextic::PolyMatrix<PrimeField> m(f, p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) {
            Form<PrimeField> g(f, p(i, j).degree());
            for (const auto& [e, c] : p(i, j).terms()) g.set_coefficient(e, *sextic::reduce_mod(c, prime));
            m(i, j) = g;
        }
    return sextic::Presentation<PrimeField>(p.source(), p.target(), m);
}

inline Form<PrimeField> form_from_ints(const PrimeField& f, int degree, const std::vector<long long>& c) {
    std::vector<ModP> v;
    for (long long x : c) v.push_back(f.from_int(x));
    return Form<PrimeField>(f, degree, v);
}

}  // namespace testsupport

#endif
