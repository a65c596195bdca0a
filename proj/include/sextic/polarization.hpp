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

#ifndef SEXTIC_POLARIZATION_HPP
#define SEXTIC_POLARIZATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace sextic {

/*
 * King-type polarization checks for the action on
 * Hom(O(-3) (+) 2O(-2), 2O(-1)) with weights (lambda1, lambda2, lambda2) on
 * the source and (mu1, mu1) on the target.
 */
struct Polarization {
    Rational lambda1;
    Rational lambda2;
    Rational mu1;
};

/// Normalized weights lambda1 = 1 - 2 lambda2, mu1 = 1/2.
inline Polarization normalized_polarization(const Rational& lambda2) {
    return {Rational(1) - Rational(2) * lambda2, lambda2, Rational(1) / Rational(2)};
}

/// The six zero-submatrix inequalities plus positivity of every weight.
inline bool polarization_valid_42(const Polarization& p) {
    const Rational one(1), two(2);
    const Rational zero(0);
    if (!(p.lambda1 > zero && p.lambda2 > zero && p.mu1 > zero)) return false;
    return p.mu1 + two * p.lambda2 > one && two * p.mu1 + p.lambda2 > one && p.mu1 + p.lambda1 + p.lambda2 > one &&
           two * p.mu1 + p.lambda1 > one && p.mu1 + p.lambda1 < one && p.mu1 + p.lambda2 < one;
}

/// Quoted constant from the quotient-existence theory for two-step resolutions; not derived here.
inline Rational c1_two() { return Rational(1) / Rational(5); }

/// a21 = dim Hom(O(-3), O(-2)).
inline constexpr long long a21 = 3;

/*
 * Sufficient conditions for a projective good quotient:
 *   alpha1 = lambda1 > 0, alpha2 = lambda2 - a21 lambda1 > 0,
 *   lambda2 >= (a21 / 2) c1(2), lambda2 >= c1(2) a21 mu1.
 */
inline bool polarization_valid_augmented(const Polarization& p) {
    if (!polarization_valid_42(p)) return false;
    const Rational zero(0);
    const Rational alpha1 = p.lambda1;
    const Rational alpha2 = p.lambda2 - Rational(a21) * p.lambda1;
    return alpha1 > zero && alpha2 > zero && p.lambda2 >= Rational(a21) / Rational(2) * c1_two() &&
           p.lambda2 >= c1_two() * Rational(a21) * p.mu1;
}

/// Constraint on the second target weight for Hom(5O(-2), 4O(-1) (+) O).
inline bool polarization_valid_22(const Rational& mu2) {
    return mu2 > Rational(0) && mu2 < Rational(1) / Rational(5);
}

struct WindowReport {
    long long grid = 0;
    std::vector<long long> six;        // numerators k of accepted lambda2 = k / grid
    std::vector<long long> augmented;  // same for the augmented system
};

/// Sweeps lambda2 = k / grid over (0, 1/2] with the normalized relations.
inline WindowReport polarization_window_42(long long grid) {
    if (grid < 100) throw ShapeError("polarization_window_42: grid denominator must be at least 100");
    WindowReport out;
    out.grid = grid;
    for (long long k = 1; 2 * k <= grid; ++k) {
        const Polarization p = normalized_polarization(Rational(k) / Rational(grid));
        if (polarization_valid_42(p)) out.six.push_back(k);
        if (polarization_valid_augmented(p)) out.augmented.push_back(k);
    }
    return out;
}

/// Numerators k with lo < k / grid < hi, i.e. the grid points of an open interval.
inline std::vector<long long> grid_points_open(const Rational& lo, const Rational& hi, long long grid) {
    std::vector<long long> out;
    for (long long k = 0; k <= grid; ++k) {
        const Rational x = Rational(k) / Rational(grid);
        if (x > lo && x < hi) out.push_back(k);
    }
    return out;
}

/// Numerators k in [0, grid] with polarization_valid_22(k / grid).
inline std::vector<long long> polarization_window_22(long long grid) {
    std::vector<long long> out;
    for (long long k = 0; k <= grid; ++k)
        if (polarization_valid_22(Rational(k) / Rational(grid))) out.push_back(k);
    return out;
}

}  // namespace sextic

#endif
