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

#ifndef SEXTIC_DIMENSIONS_HPP
#define SEXTIC_DIMENSIONS_HPP

#include <cstddef>
#include <vector>

#include "kronecker.hpp"
#include "monomial.hpp"
#include "presentation.hpp"
#include "strata.hpp"

namespace sextic {

/// dim Hom(O(a_1) + ... , O(b_1) + ...).
inline long long hom_dimension(const TwistVector& from, const TwistVector& to) {
    long long n = 0;
    for (int b : to)
        for (int a : from) n += static_cast<long long>(monomial_count(b - a));
    return n;
}

/*
 * Dimension of W / G for W the open set of injective morphisms A -> B with
 * the given cells forced to zero and G = (Aut A x Aut B) / scalars. The
 * stabilizer of a point has dimension dim Hom(B, A) (homotopies), hence
 *
 *   dim W - dim G + dim Hom(B, A).
 */
inline long long quotient_dimension(const Shape& s, long long forced_zero = 0) {
    const long long w = hom_dimension(s.source, s.target) - forced_zero;
    const long long g = hom_dimension(s.source, s.source) + hom_dimension(s.target, s.target) - 1;
    return w - g + hom_dimension(s.target, s.source);
}

/// Quotient dimension of each stratum's parameter space; X4 uses the short shape of case (i).
inline long long stratum_quotient_dimension(Stratum s) {
    switch (s) {
        case Stratum::X2:
            return quotient_dimension(stratum_shape(s), 2);
        case Stratum::X4:
            return quotient_dimension(x4_short_shape());
        default:
            return quotient_dimension(stratum_shape(s));
    }
}

struct StratumDimension {
    Stratum label;
    long long codim;
    long long base_dim;
    long long fibre_dim;
    long long dim() const { return base_dim + fibre_dim; }
};

inline constexpr long long moduli_space_dimension = 37;

/*
 * Each stratum as a fibration over a smaller moduli problem:
 *   X0: Kronecker moduli N(3;5,4), fibre open in a projective space
 *   X1: the quotient itself (no further fibration)
 *   X2: pairs (Y, point of P^2), Y = Hom(O(-3) + 2O(-2), 2O(-1)) / group
 *   X3: P^2 x N(3;2,3)
 *   X4: Grassmannian of planes in the quadrics
 *   X5: length-two subschemes, fibre the sextics through them
 */
inline std::vector<StratumDimension> stratum_dimensions() {
    const long long y = hom_dimension({-3, -2, -2}, {-1, -1}) - (hom_dimension({-3, -2, -2}, {-3, -2, -2}) +
                                                                hom_dimension({-1, -1}, {-1, -1}) - 1);
    const long long sextics = static_cast<long long>(monomial_count(6)) - 1;
    return {
        {Stratum::X0, 0, moduli_dimension(3, 5, 4), 17},
        {Stratum::X1, 2, stratum_quotient_dimension(Stratum::X1), 0},
        {Stratum::X2, 4, y + 2, 21},
        {Stratum::X3, 6, 2 + moduli_dimension(3, 2, 3), 23},
        {Stratum::X4, 6, 2 * (6 - 2), 23},
        {Stratum::X5, 8, 4, sextics - 2},
    };
}

}  // namespace sextic

#endif
