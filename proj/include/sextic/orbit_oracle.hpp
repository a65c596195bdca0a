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

#ifndef SEXTIC_ORBIT_ORACLE_HPP
#define SEXTIC_ORBIT_ORACLE_HPP

#include <array>
#include <cstdint>
#include <set>

#include "error.hpp"
#include "field.hpp"
#include "presentation.hpp"
#include "random.hpp"
#include "strata.hpp"

namespace sextic {

/*
 * Brute-force orbit search for the X1 zero patterns over F_2. Forms are bit
 * masks over a locally enumerated monomial basis, so nothing here shares code
 * with x1_patterns. The column group (col 1 += u2 col 2 + u3 col 3, GL2 on
 * cols 2, 3) and the row group (GL2 on rows 2, 3, row i += v_i row 1) have
 * 384 elements each; every pair is tried.
 */
class X1OrbitOracle {
   public:
    X1OrbitOracle() {
        for (int d = 0; d <= 3; ++d) {
            int k = 0;
            for (int a = d; a >= 0; --a)
                for (int b = d - a; b >= 0; --b) {
                    const int c = d - a - b;
                    basis_[d][k] = {a, b, c};
                    index_[a][b][c] = k++;
                }
            size_[d] = k;
        }
        for (unsigned x = 0; x < 8; ++x) {
            for (unsigned y = 0; y < 8; ++y) mul11_[x][y] = multiply(x, 1, y, 1);
            for (unsigned y = 0; y < 64; ++y) mul12_[x][y] = multiply(x, 1, y, 2);
        }
        // GL2(F_2) as (a, b, c, d) with ad + bc = 1
        int n = 0;
        for (unsigned m = 0; m < 16; ++m) {
            const unsigned a = m & 1, b = (m >> 1) & 1, c = (m >> 2) & 1, d = (m >> 3) & 1;
            if (((a & d) ^ (b & c)) == 1) gl2_[n++] = {a, b, c, d};
        }
    }

    std::set<Pattern> patterns(const Presentation<PrimeField>& p) const {
        if (p.field().p != 2) throw ShapeError("X1OrbitOracle: field must be F_2");
        if (p.source() != stratum_shape(Stratum::X1).source || p.target() != stratum_shape(Stratum::X1).target)
            throw ShapeError("X1OrbitOracle: wrong twist shape");
        // e[i][j] as masks; degrees: row 0 (2,1,1), rows 1-2 (3,2,2)
        std::array<std::array<unsigned, 3>, 3> e{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) e[i][j] = encode(p(i, j));

        std::set<Pattern> found;
        for (unsigned u1 = 0; u1 < 8; ++u1)
            for (unsigned u2 = 0; u2 < 8; ++u2)
                for (const auto& g : gl2_) {
                    // columns: new col 0 = col0 + u1 col1 + u2 col2; (col1, col2) * [[a, b], [c, d]]
                    std::array<std::array<unsigned, 3>, 3> m{};
                    for (int i = 0; i < 3; ++i) {
                        const unsigned c1 = e[i][1], c2 = e[i][2];
                        m[i][0] = e[i][0] ^ (i == 0 ? (mul11_[u1][c1] ^ mul11_[u2][c2])
                                                    : (mul12_[u1][c1] ^ mul12_[u2][c2]));
                        m[i][1] = (g[0] ? c1 : 0) ^ (g[2] ? c2 : 0);
                        m[i][2] = (g[1] ? c1 : 0) ^ (g[3] ? c2 : 0);
                    }
                    // row 0 is fixed by the row group
                    if (m[0][1] == 0 && m[0][2] == 0) found.insert(Pattern::P1);
                    if (m[0][0] == 0 && m[0][1] == 0) found.insert(Pattern::P4);
                    for (const auto& h : gl2_)
                        for (unsigned v1 = 0; v1 < 8; ++v1)
                            for (unsigned v2 = 0; v2 < 8; ++v2) {
                                auto row = [&](int which, int col) {
                                    const unsigned a = which == 1 ? h[0] : h[2];
                                    const unsigned b = which == 1 ? h[1] : h[3];
                                    const unsigned v = which == 1 ? v1 : v2;
                                    return (a ? m[1][col] : 0) ^ (b ? m[2][col] : 0) ^ mul11_[v][m[0][col]];
                                };
                                if (m[0][2] == 0 && row(1, 2) == 0) found.insert(Pattern::P2);
                                if (row(2, 1) == 0 && row(2, 2) == 0) found.insert(Pattern::P3);
                                if (found.size() == 4) return found;
                            }
                }
        return found;
    }

   private:
    unsigned encode(const Form<PrimeField>& f) const {
        if (f.is_zero() || f.degree() < 0 || f.degree() > 3) return 0;
        unsigned mask = 0;
        for (int k = 0; k < size_[f.degree()]; ++k) {
            const auto& x = basis_[f.degree()][k];
            if (!is_zero(f.coefficient(Exponent{x[0], x[1], x[2]}))) mask |= 1u << k;
        }
        return mask;
    }

    unsigned multiply(unsigned x, int dx, unsigned y, int dy) const {
        unsigned out = 0;
        for (int i = 0; i < size_[dx]; ++i) {
            if (!((x >> i) & 1)) continue;
            for (int j = 0; j < size_[dy]; ++j) {
                if (!((y >> j) & 1)) continue;
                const auto& a = basis_[dx][i];
                const auto& b = basis_[dy][j];
                out ^= 1u << index_[a[0] + b[0]][a[1] + b[1]][a[2] + b[2]];
            }
        }
        return out;
    }

    std::array<std::array<std::array<int, 3>, 10>, 4> basis_{};
    std::array<std::array<std::array<int, 4>, 4>, 4> index_{};
    std::array<int, 4> size_{};
    std::array<std::array<unsigned, 8>, 8> mul11_{};
    std::array<std::array<unsigned, 64>, 8> mul12_{};
    std::array<std::array<unsigned, 4>, 6> gl2_{};
};

/// Whether the X1 matrix over F_2 lies in the orbit of the given forbidden pattern.
inline bool orbit_pattern_oracle(const Presentation<PrimeField>& p, Pattern pattern) {
    static const X1OrbitOracle oracle;
    return oracle.patterns(p).count(pattern) > 0;
}

/// Uniformly random X1-shaped matrix over F_2 (every cell free, no injectivity filter).
inline Presentation<PrimeField> random_x1_f2(Rng& rng) {
    const PrimeField f(2);
    const Shape s = stratum_shape(Stratum::X1);
    PolyMatrix<PrimeField> m(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = random_form(rng, f, s.target[i] - s.source[j]);
    return Presentation<PrimeField>(s.source, s.target, std::move(m));
}

}  // namespace sextic

#endif
