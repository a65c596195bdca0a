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

#ifndef SEXTIC_GROUP_ACTION_HPP
#define SEXTIC_GROUP_ACTION_HPP

#include <cstddef>
#include <utility>

#include "error.hpp"
#include "matrix.hpp"
#include "poly_matrix.hpp"
#include "presentation.hpp"
#include "random.hpp"

namespace sextic {

/*
 * Random automorphism of O(d_1) + ... + O(d_k): cell (i, j) is a form of
 * degree d_i - d_j, and blocks of equal twist form an invertible scalar
 * matrix. Such a matrix is block triangular after sorting by twist, so its
 * determinant is the product of the diagonal block determinants.
 */
template <class K>
PolyMatrix<K> random_automorphism(Rng& rng, const K& f, const TwistVector& twists) {
    const std::size_t k = twists.size();
    while (true) {
        PolyMatrix<K> g(f, k, k);
        Matrix<K> scalars(f, k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const int d = twists[i] - twists[j];
                g(i, j) = random_form(rng, f, d);
                if (d == 0) scalars(i, j) = g(i, j)[0];
            }
        // the equal-twist blocks are invertible iff the scalar part restricted to them is
        Matrix<K> blocks(f, k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (twists[i] == twists[j]) blocks(i, j) = scalars(i, j);
        if (rank(blocks) == k) return g;
    }
}

/// phi -> h phi g for graded automorphisms g of the source and h of the target.
template <class K>
Presentation<K> act(const Presentation<K>& p, const PolyMatrix<K>& h, const PolyMatrix<K>& g) {
    return Presentation<K>(p.source(), p.target(), h * p.matrix() * g);
}

template <class K>
Presentation<K> random_group_action(Rng& rng, const Presentation<K>& p) {
    const auto g = random_automorphism(rng, p.field(), p.source());
    const auto h = random_automorphism(rng, p.field(), p.target());
    return act(p, h, g);
}

}  // namespace sextic

#endif
