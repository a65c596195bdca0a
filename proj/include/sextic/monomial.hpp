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

#ifndef SEXTIC_MONOMIAL_HPP
#define SEXTIC_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sextic {

/// Exponent triple (e_X, e_Y, e_Z) of a monomial X^a Y^b Z^c.
struct Exponent {
    int x = 0;
    int y = 0;
    int z = 0;

    constexpr int degree() const { return x + y + z; }
    constexpr int operator[](int var) const { return var == 0 ? x : (var == 1 ? y : z); }
    friend constexpr Exponent operator+(Exponent a, Exponent b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr bool operator==(const Exponent&, const Exponent&) = default;
    friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Number of monomials of degree d in three variables; 0 for d < 0.
constexpr std::size_t monomial_count(int d) {
    return d < 0 ? 0 : static_cast<std::size_t>((d + 1) * (d + 2) / 2);
}

/*
 * Position of a monomial in the graded-lex basis of its degree (X > Y > Z).
 * Monomials with larger e_X come first; ties are broken by larger e_Y. With
 * k = e_Y + e_Z the block of exponent e_X starts at k(k+1)/2 and e_Z offsets
 * inside the block. This ordering is part of the file format.
 */
constexpr std::size_t monomial_index(Exponent e) {
    const int k = e.y + e.z;
    return static_cast<std::size_t>(k * (k + 1) / 2 + e.z);
}

constexpr Exponent monomial_at(int degree, std::size_t index) {
    int k = 0;
    while (static_cast<std::size_t>((k + 1) * (k + 2) / 2) <= index) ++k;
    const int z = static_cast<int>(index) - k * (k + 1) / 2;
    return {degree - k, k - z, z};
}

inline std::vector<Exponent> monomial_basis(int d) {
    if (d < 0) throw std::invalid_argument("monomial_basis: negative degree " + std::to_string(d));
    std::vector<Exponent> out;
    out.reserve(monomial_count(d));
    for (int x = d; x >= 0; --x)
        for (int y = d - x; y >= 0; --y) out.push_back({x, y, d - x - y});
    return out;
}

inline std::string monomial_string(Exponent e) {
    static constexpr std::array<const char*, 3> names{"X", "Y", "Z"};
    std::string out;
    for (int v = 0; v < 3; ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[static_cast<std::size_t>(v)];
        if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace sextic

#endif
