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

#ifndef SEXTIC_KRONECKER_HPP
#define SEXTIC_KRONECKER_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "form.hpp"
#include "matrix.hpp"
#include "poly_matrix.hpp"
#include "random.hpp"

namespace sextic {

/*
 * A Kronecker module k^m -> k^n (x) V*, stored as three n x m coefficient
 * matrices A_X, A_Y, A_Z: entry (i, j) of the linear-form matrix is
 * A_X(i,j) X + A_Y(i,j) Y + A_Z(i,j) Z.
 *
 * Slope convention: for a source subspace S with minimal target span T
 * (the smallest T with A_v S inside T for all v) the module is destabilized
 * when n dim S > m dim T. Equality is allowed (semistable).
 */
template <class K>
class KroneckerModule {
   public:
    using Scalar = typename K::value_type;
    using Vector = std::vector<Scalar>;

    explicit KroneckerModule(const PolyMatrix<K>& m)
        : field_(m.field()),
          n_(m.rows()),
          m_(m.cols()),
          a_{Matrix<K>(field_, n_, m_), Matrix<K>(field_, n_, m_), Matrix<K>(field_, n_, m_)} {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < m_; ++j) {
                const auto& e = m(i, j);
                if (e.is_zero()) continue;
                if (e.degree() != 1)
                    throw ShapeError("KroneckerModule: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") is not a linear form");
                for (int v = 0; v < 3; ++v) a_[v](i, j) = e[static_cast<std::size_t>(v)];
            }
    }
    KroneckerModule(K field, std::array<Matrix<K>, 3> coefficients)
        : field_(std::move(field)), n_(coefficients[0].rows()), m_(coefficients[0].cols()), a_(std::move(coefficients)) {
        for (const auto& c : a_)
            if (c.rows() != n_ || c.cols() != m_) throw ShapeError("KroneckerModule: coefficient shapes differ");
    }

    const K& field() const { return field_; }
    std::size_t rows() const { return n_; }
    std::size_t cols() const { return m_; }
    const Matrix<K>& coefficient(int v) const { return a_[static_cast<std::size_t>(v)]; }

    /// phi_X A_X + phi_Y A_Y + phi_Z A_Z.
    Matrix<K> pencil(const Vector& phi) const {
        Matrix<K> out(field_, n_, m_);
        for (int v = 0; v < 3; ++v) {
            if (is_zero(phi[static_cast<std::size_t>(v)])) continue;
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < m_; ++j) out(i, j) += phi[static_cast<std::size_t>(v)] * a_[v](i, j);
        }
        return out;
    }

    PolyMatrix<K> to_poly() const {
        PolyMatrix<K> out(field_, n_, m_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < m_; ++j)
                out(i, j) = Form<K>::linear(field_, a_[0](i, j), a_[1](i, j), a_[2](i, j));
        return out;
    }

    /// h A_v g for all v (h is n x n, g is m x m).
    KroneckerModule transformed(const Matrix<K>& h, const Matrix<K>& g) const {
        return KroneckerModule(field_, {h * a_[0] * g, h * a_[1] * g, h * a_[2] * g});
    }

   private:
    K field_;
    std::size_t n_;
    std::size_t m_;
    std::array<Matrix<K>, 3> a_;
};

template <class K>
struct Witness {
    std::vector<std::vector<typename K::value_type>> S;
    std::vector<std::vector<typename K::value_type>> T;
    std::size_t dimS = 0;
    std::size_t dimT = 0;
    /// n dim S - m dim T; positive for a destabilizing pair.
    long long slope_deficit = 0;
};

enum class KroneckerMode { exact_smallfield, exact_pruned, randomized };

inline std::string mode_name(KroneckerMode m) {
    switch (m) {
        case KroneckerMode::exact_smallfield:
            return "exact_smallfield";
        case KroneckerMode::exact_pruned:
            return "exact_pruned";
        case KroneckerMode::randomized:
            return "randomized";
    }
    return "?";
}

enum class Stability { semistable, unstable, unknown };

inline std::string stability_name(Stability s) {
    switch (s) {
        case Stability::semistable:
            return "semistable";
        case Stability::unstable:
            return "unstable";
        case Stability::unknown:
            return "unknown";
    }
    return "?";
}

template <class K>
struct StabilityResult {
    Stability status = Stability::unknown;
    std::optional<Witness<K>> witness;
    KroneckerMode mode = KroneckerMode::exact_smallfield;
    std::uint64_t checked = 0;  // subspaces or trials examined
    std::string note;
};

struct KroneckerOptions {
    std::uint64_t budget = 10'000'000;  // cap on enumerated subspaces
    std::uint64_t trials = 2000;        // randomized mode
    std::uint64_t seed = 1;
    std::uint64_t direct_limit = 50'000;  // pruned mode: enumerate T directly below this count
};

// ---------------------------------------------------------------- subspaces

/// Nonzero rows of the reduced echelon form of the given vectors.
template <class K>
std::vector<std::vector<typename K::value_type>> row_space(const K& field, std::size_t dim,
                                                           const std::vector<std::vector<typename K::value_type>>& vs) {
    Matrix<K> m(field, vs.size(), dim);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = vs[i][j];
    const auto e = rref(std::move(m));
    std::vector<std::vector<typename K::value_type>> out;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row(i));
    return out;
}

/// Minimal target span of a source subspace: row-reduced basis of span{A_v s}.
template <class K>
std::vector<std::vector<typename K::value_type>> target_span(const KroneckerModule<K>& mod,
                                                             const std::vector<std::vector<typename K::value_type>>& S) {
    std::vector<std::vector<typename K::value_type>> images;
    for (const auto& s : S)
        for (int v = 0; v < 3; ++v) images.push_back(mod.coefficient(v).apply(s));
    return row_space(mod.field(), mod.rows(), images);
}

/// Largest source subspace S_T with A_v S_T inside T for all v.
template <class K>
std::vector<std::vector<typename K::value_type>> max_source(const KroneckerModule<K>& mod,
                                                            const std::vector<std::vector<typename K::value_type>>& T) {
    const K& f = mod.field();
    const std::size_t n = mod.rows(), m = mod.cols();
    // annihilator of T: functionals w with w . tau = 0 for every tau in T
    std::vector<std::vector<typename K::value_type>> ann;
    if (T.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<typename K::value_type> e(n, f.zero());
            e[i] = f.one();
            ann.push_back(std::move(e));
        }
    } else {
        Matrix<K> tm(f, T.size(), n);
        for (std::size_t i = 0; i < T.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) tm(i, j) = T[i][j];
        ann = kernel_basis(tm);
    }
    Matrix<K> stack(f, 3 * ann.size(), m);
    for (std::size_t k = 0; k < ann.size(); ++k)
        for (int v = 0; v < 3; ++v) {
            const auto row = mod.coefficient(v).transpose().apply(ann[k]);
            for (std::size_t j = 0; j < m; ++j) stack(3 * k + static_cast<std::size_t>(v), j) = row[j];
        }
    return kernel_basis(stack);
}

template <class K>
Witness<K> make_witness(const KroneckerModule<K>& mod, std::vector<std::vector<typename K::value_type>> S) {
    Witness<K> w;
    w.S = row_space(mod.field(), mod.cols(), S);
    w.T = target_span(mod, w.S);
    w.dimS = w.S.size();
    w.dimT = w.T.size();
    w.slope_deficit = static_cast<long long>(mod.rows() * w.dimS) - static_cast<long long>(mod.cols() * w.dimT);
    return w;
}

/// Checks a claimed destabilizing witness from scratch; empty result means valid.
template <class K>
Violations verify_witness(const KroneckerModule<K>& mod, const Witness<K>& w) {
    Violations out;
    const K& f = mod.field();
    auto as_matrix = [&](const std::vector<std::vector<typename K::value_type>>& vs, std::size_t dim) {
        Matrix<K> m(f, vs.size(), dim);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (vs[i].size() != dim) throw ShapeError("verify_witness: basis vector of wrong length");
            for (std::size_t j = 0; j < dim; ++j) m(i, j) = vs[i][j];
        }
        return m;
    };
    const Matrix<K> sm = as_matrix(w.S, mod.cols()), tm = as_matrix(w.T, mod.rows());
    if (w.S.empty()) out.push_back("S is zero");
    if (rank(sm) != w.S.size() || w.S.size() != w.dimS) out.push_back("S basis is not independent or dimS is wrong");
    if (rank(tm) != w.T.size() || w.T.size() != w.dimT) out.push_back("T basis is not independent or dimT is wrong");
    for (const auto& s : w.S)
        for (int v = 0; v < 3; ++v) {
            const auto img = mod.coefficient(v).apply(s);
            Matrix<K> aug(f, w.T.size() + 1, mod.rows());
            aug.place(tm, 0, 0);
            for (std::size_t j = 0; j < mod.rows(); ++j) aug(w.T.size(), j) = img[j];
            if (rank(aug) != w.T.size()) out.push_back("image of S is not contained in T");
        }
    const long long deficit =
        static_cast<long long>(mod.rows() * w.dimS) - static_cast<long long>(mod.cols() * w.dimT);
    if (deficit != w.slope_deficit) out.push_back("slope_deficit does not match dims");
    if (deficit <= 0) out.push_back("pair does not violate the slope inequality");
    return out;
}

/// Number of k-dimensional subspaces of F_p^m (saturating at 2^63).
inline std::uint64_t grassmannian_count(std::size_t k, std::size_t m, std::uint64_t p) {
    if (k > m) return 0;
    // sum over pivot patterns of p^(free cells); free cells = k(m-k) minus the pattern's inversions
    // computed through the q-binomial recursion [m,k] = [m-1,k-1] + p^k [m-1,k]
    constexpr std::uint64_t cap = std::uint64_t{1} << 63;
    std::vector<std::vector<std::uint64_t>> c(m + 1, std::vector<std::uint64_t>(k + 1, 0));
    auto sat_mul = [&](std::uint64_t a, std::uint64_t b) {
        if (a == 0 || b == 0) return std::uint64_t{0};
        return a > cap / b ? cap : a * b;
    };
    for (std::size_t i = 0; i <= m; ++i) {
        c[i][0] = 1;
        for (std::size_t j = 1; j <= std::min(i, k); ++j) {
            std::uint64_t pj = 1;
            for (std::size_t r = 0; r < j; ++r) pj = sat_mul(pj, p);
            const std::uint64_t right = j <= i - 1 ? sat_mul(pj, c[i - 1][j]) : 0;
            c[i][j] = std::min(cap, c[i - 1][j - 1] + right);
        }
    }
    return c[m][k];
}

/*
 * Visits every k-dimensional subspace of F_p^m once, as a k x m reduced
 * echelon basis. Order: pivot column sets in lexicographic order, then the
 * free cells (row-major) as a base-p counter with the last cell fastest.
 * The visitor returns false to stop; the function then returns false.
 */
template <class Visit>
bool for_each_subspace(const PrimeField& f, std::size_t k, std::size_t m, Visit&& visit) {
    if (k > m) return true;
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_piv(m, false);
        for (auto c : piv) is_piv[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = piv[i] + 1; c < m; ++c)
                if (!is_piv[c]) free.emplace_back(i, c);
        std::vector<std::uint32_t> digit(free.size(), 0);
        while (true) {
            std::vector<std::vector<ModP>> basis(k, std::vector<ModP>(m, f.zero()));
            for (std::size_t i = 0; i < k; ++i) basis[i][piv[i]] = f.one();
            for (std::size_t q = 0; q < free.size(); ++q) basis[free[q].first][free[q].second] = f.element(digit[q]);
            if (!visit(basis)) return false;
            std::size_t q = free.size();
            while (q > 0 && digit[q - 1] == f.p - 1) digit[--q] = 0;
            if (q == 0) break;
            ++digit[q - 1];
        }
        std::size_t i = k;
        while (i > 0 && piv[i - 1] == m - k + (i - 1)) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    return true;
}

// ---------------------------------------------------------------- decisions

namespace detail {

inline std::vector<ModP> combine(const PrimeField& f, const std::vector<std::vector<ModP>>& basis,
                                 const std::vector<ModP>& coeffs, std::size_t dim) {
    std::vector<ModP> out(dim, f.zero());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!is_zero(coeffs[i]))
            for (std::size_t j = 0; j < dim; ++j) out[j] += coeffs[i] * basis[i][j];
    return out;
}

inline std::vector<ModP> normalized(std::vector<ModP> v) {
    for (const auto& x : v)
        if (!is_zero(x)) {
            const ModP inv = x.inverse();
            for (auto& y : v) y *= inv;
            break;
        }
    return v;
}

/// rank of span{w A_X, w A_Y, w A_Z, ...} for a set of functionals w.
inline std::size_t functional_rank(const KroneckerModule<PrimeField>& mod, const std::vector<std::vector<ModP>>& ws) {
    Matrix<PrimeField> stack(mod.field(), 3 * ws.size(), mod.cols());
    for (std::size_t k = 0; k < ws.size(); ++k)
        for (int v = 0; v < 3; ++v)
            for (std::size_t j = 0; j < mod.cols(); ++j) {
                ModP acc = mod.field().zero();
                for (std::size_t i = 0; i < mod.rows(); ++i) acc += ws[k][i] * mod.coefficient(v)(i, j);
                stack(3 * k + static_cast<std::size_t>(v), j) = acc;
            }
    return rank(std::move(stack));
}

}  // namespace detail

/// Exhaustive enumeration of all source subspaces by increasing dimension; the witness is S_T for the first hit.
inline StabilityResult<PrimeField> semistable_exact_smallfield(const KroneckerModule<PrimeField>& mod,
                                                               const KroneckerOptions& opt = {}) {
    StabilityResult<PrimeField> res;
    res.mode = KroneckerMode::exact_smallfield;
    const std::size_t n = mod.rows(), m = mod.cols();
    std::uint64_t total = 0;
    for (std::size_t a = 1; a <= m; ++a) total = std::min(total + grassmannian_count(a, m, mod.field().p), std::uint64_t{1} << 63);
    if (total > opt.budget)
        throw BudgetExceeded("exact_smallfield: " + std::to_string(total) + " source subspaces over " +
                             mod.field().name() + " exceed the budget of " + std::to_string(opt.budget));
    for (std::size_t a = 1; a <= m && !res.witness; ++a) {
        for_each_subspace(mod.field(), a, m, [&](const std::vector<std::vector<ModP>>& S) {
            ++res.checked;
            const auto T = target_span(mod, S);
            if (n * a > m * T.size()) {
                res.witness = make_witness(mod, max_source(mod, T));  // enlarged to S_T
                return false;
            }
            return true;
        });
    }
    res.status = res.witness ? Stability::unstable : Stability::semistable;
    return res;
}

/*
 * Exact decision without enumerating every subspace. A destabilizing pair can
 * be taken with S = S_T maximal for its T, so it suffices to scan target
 * subspaces T by dimension t. For each t one of these is used:
 *
 *  - t = 0: S_0 is the common kernel of A_X, A_Y, A_Z.
 *  - few T of dimension t: enumerate them.
 *  - W = T^perp has dimension r and S_T has codimension rho(W) = rank of the
 *    stacked w A_v. Destabilizing means n rho < m r. Every w in such a W has
 *    rho(w) <= rho(W); when that bound is at most 2 the three vectors w A_v
 *    are dependent, i.e. w lies in the left kernel of a pencil member
 *    A(phi) = sum phi_v A_v. W is then spanned by such points.
 *  - t = 1: a 2-dimensional S inside S_T maps into tau (x) V*, so some pencil
 *    member kills it and has kernel dimension >= 2.
 *
 * The pencil members are enumerated over P^2(F_p) once.
 */
inline StabilityResult<PrimeField> semistable_exact_pruned(const KroneckerModule<PrimeField>& mod,
                                                           const KroneckerOptions& opt = {}) {
    using Vec = std::vector<ModP>;
    using Basis = std::vector<Vec>;
    StabilityResult<PrimeField> res;
    res.mode = KroneckerMode::exact_pruned;
    const PrimeField& f = mod.field();
    const std::size_t n = mod.rows(), m = mod.cols();
    auto destabilizes = [&](std::size_t s, std::size_t t) { return n * s > m * t; };
    auto found = [&](const Basis& S) {
        res.witness = make_witness(mod, S);
        res.status = Stability::unstable;
        return res;
    };

    const Basis s0 = max_source(mod, {});
    ++res.checked;
    if (!s0.empty()) return found(s0);

    struct PencilPoint {
        Basis right;
        Basis left;
    };
    std::vector<PencilPoint> pencil;
    bool pencil_ready = false;
    auto build_pencil = [&]() {
        if (pencil_ready) return;
        pencil_ready = true;
        for_each_subspace(f, 1, 3, [&](const Basis& phi) {
            ++res.checked;
            const Matrix<PrimeField> a = mod.pencil(phi[0]);
            const std::size_t rk = rank(a);
            if (m - rk < 2 && n == rk) return true;
            PencilPoint pt{kernel_basis(a), kernel_basis(a.transpose())};
            if (pt.right.size() >= 2 || !pt.left.empty()) pencil.push_back(std::move(pt));
            return true;
        });
    };

    for (std::size_t t = 1; t < n; ++t) {
        const std::size_t r = n - t;
        const std::size_t rho_max = (m * r - 1) / n;
        const std::uint64_t direct = grassmannian_count(t, n, f.p);

        if (direct <= opt.direct_limit) {
            Basis hit;
            for_each_subspace(f, t, n, [&](const Basis& T) {
                ++res.checked;
                Basis S = max_source(mod, T);
                if (destabilizes(S.size(), t)) {
                    hit = std::move(S);
                    return false;
                }
                return true;
            });
            if (!hit.empty()) return found(hit);
            continue;
        }

        if (rho_max <= 2) {
            build_pencil();
            std::set<std::vector<std::uint32_t>> seen;
            Basis cand;
            for (const auto& pt : pencil) {
                if (pt.left.empty()) continue;
                if (grassmannian_count(1, pt.left.size(), f.p) > opt.budget)
                    throw BudgetExceeded("exact_pruned: degenerate pencil with a large left kernel");
                for_each_subspace(f, 1, pt.left.size(), [&](const Basis& c) {
                    ++res.checked;
                    Vec w = detail::normalized(detail::combine(f, pt.left, c[0], n));
                    std::vector<std::uint32_t> key;
                    for (const auto& x : w) key.push_back(x.value());
                    if (!seen.insert(key).second) return true;
                    if (detail::functional_rank(mod, {w}) <= rho_max) cand.push_back(std::move(w));
                    return true;
                });
            }
            // depth-first choice of r independent candidates keeping rho <= rho_max
            Basis chosen;
            Basis hit;
            auto dfs = [&](auto&& self, std::size_t start) -> bool {
                if (chosen.size() == r) {
                    Matrix<PrimeField> wm(f, r, n);
                    for (std::size_t i = 0; i < r; ++i)
                        for (std::size_t j = 0; j < n; ++j) wm(i, j) = chosen[i][j];
                    const Basis T = kernel_basis(wm);
                    Basis S = max_source(mod, T);
                    if (destabilizes(S.size(), T.size())) {
                        hit = std::move(S);
                        return true;
                    }
                    return false;
                }
                for (std::size_t i = start; i < cand.size(); ++i) {
                    if (++res.checked > opt.budget) throw BudgetExceeded("exact_pruned: candidate search exceeded the budget");
                    chosen.push_back(cand[i]);
                    Matrix<PrimeField> wm(f, chosen.size(), n);
                    for (std::size_t a = 0; a < chosen.size(); ++a)
                        for (std::size_t j = 0; j < n; ++j) wm(a, j) = chosen[a][j];
                    const bool ok = rank(std::move(wm)) == chosen.size() && detail::functional_rank(mod, chosen) <= rho_max;
                    if (ok && self(self, i + 1)) return true;
                    chosen.pop_back();
                }
                return false;
            };
            if (dfs(dfs, 0)) return found(hit);
            continue;
        }

        if (t == 1 && m >= n) {
            build_pencil();
            Basis hit;
            for (const auto& pt : pencil) {
                if (pt.right.size() < 2) continue;
                if (grassmannian_count(2, pt.right.size(), f.p) > opt.budget)
                    throw BudgetExceeded("exact_pruned: degenerate pencil with a large kernel");
                for_each_subspace(f, 2, pt.right.size(), [&](const Basis& c) {
                    ++res.checked;
                    const Basis S2{detail::combine(f, pt.right, c[0], m), detail::combine(f, pt.right, c[1], m)};
                    const Basis T = target_span(mod, S2);
                    if (T.size() != 1) return true;
                    Basis S = max_source(mod, T);
                    if (destabilizes(S.size(), 1)) {
                        hit = std::move(S);
                        return false;
                    }
                    return true;
                });
                if (!hit.empty()) return found(hit);
            }
            continue;
        }

        if (direct > opt.budget)
            throw BudgetExceeded("exact_pruned: " + std::to_string(direct) + " target subspaces of dimension " +
                                 std::to_string(t) + " exceed the budget");
        Basis hit;
        for_each_subspace(f, t, n, [&](const Basis& T) {
            ++res.checked;
            Basis S = max_source(mod, T);
            if (destabilizes(S.size(), t)) {
                hit = std::move(S);
                return false;
            }
            return true;
        });
        if (!hit.empty()) return found(hit);
    }
    res.status = Stability::semistable;
    return res;
}

/// Random target and source subspaces; only a verified witness is conclusive.
template <class K>
StabilityResult<K> semistable_randomized(const KroneckerModule<K>& mod, const KroneckerOptions& opt = {}) {
    StabilityResult<K> res;
    res.mode = KroneckerMode::randomized;
    const std::size_t n = mod.rows(), m = mod.cols();
    const K& f = mod.field();
    auto check = [&](std::vector<std::vector<typename K::value_type>> S) {
        if (S.empty()) return false;
        Witness<K> w = make_witness(mod, std::move(S));
        if (w.slope_deficit > 0 && verify_witness(mod, w).empty()) {
            res.witness = std::move(w);
            return true;
        }
        return false;
    };
    ++res.checked;
    if (check(max_source(mod, {}))) {
        res.status = Stability::unstable;
        return res;
    }
    Rng rng(opt.seed);
    for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
        ++res.checked;
        if (trial % 2 == 0 && n > 1) {
            const std::size_t t = 1 + rng.uniform_below(n - 1);
            std::vector<std::vector<typename K::value_type>> T;
            for (std::size_t i = 0; i < t; ++i) {
                std::vector<typename K::value_type> v;
                for (std::size_t j = 0; j < n; ++j) v.push_back(random_scalar(rng, f));
                T.push_back(std::move(v));
            }
            if (check(max_source(mod, row_space(f, n, T)))) break;
        } else {
            const std::size_t s = 1 + rng.uniform_below(m);
            std::vector<std::vector<typename K::value_type>> S;
            for (std::size_t i = 0; i < s; ++i) {
                std::vector<typename K::value_type> v;
                for (std::size_t j = 0; j < m; ++j) v.push_back(random_scalar(rng, f));
                S.push_back(std::move(v));
            }
            if (check(S)) break;
        }
    }
    res.status = res.witness ? Stability::unstable : Stability::unknown;
    if (!res.witness) res.note = "no witness in " + std::to_string(opt.trials) + " trials";
    return res;
}

inline StabilityResult<PrimeField> is_semistable(const KroneckerModule<PrimeField>& mod, KroneckerMode mode,
                                                 const KroneckerOptions& opt = {}) {
    switch (mode) {
        case KroneckerMode::exact_smallfield:
            return semistable_exact_smallfield(mod, opt);
        case KroneckerMode::exact_pruned:
            return semistable_exact_pruned(mod, opt);
        case KroneckerMode::randomized:
            return semistable_randomized(mod, opt);
    }
    throw Error("unknown Kronecker mode");
}

/// Residue of a rational number mod p, or nullopt when p divides the denominator.
inline std::optional<ModP> reduce_mod(const Rational& r, std::uint32_t p) {
    const auto den = r.denominator() % p;
    if (den == 0) return std::nullopt;
    auto num = r.numerator() % p;
    if (num < 0) num += p;
    return ModP(static_cast<std::uint64_t>(num), p) / ModP(static_cast<std::uint64_t>(den), p);
}

inline std::optional<KroneckerModule<PrimeField>> reduce_mod(const KroneckerModule<RationalField>& mod, std::uint32_t p) {
    const PrimeField f(p);
    std::array<Matrix<PrimeField>, 3> a{Matrix<PrimeField>(f, mod.rows(), mod.cols()),
                                        Matrix<PrimeField>(f, mod.rows(), mod.cols()),
                                        Matrix<PrimeField>(f, mod.rows(), mod.cols())};
    for (int v = 0; v < 3; ++v)
        for (std::size_t i = 0; i < mod.rows(); ++i)
            for (std::size_t j = 0; j < mod.cols(); ++j) {
                auto x = reduce_mod(mod.coefficient(v)(i, j), p);
                if (!x) return std::nullopt;
                a[static_cast<std::size_t>(v)](i, j) = *x;
            }
    return KroneckerModule<PrimeField>(f, std::move(a));
}

/*
 * Over Q: semistable if some reduction mod p is semistable (the unstable
 * locus is closed and defined over the integers). Unstable only with a
 * rational witness; otherwise unknown.
 */
inline StabilityResult<RationalField> is_semistable(const KroneckerModule<RationalField>& mod, KroneckerMode mode,
                                                    const KroneckerOptions& opt = {}) {
    StabilityResult<RationalField> res;
    res.mode = mode;
    if (mode == KroneckerMode::randomized) return semistable_randomized(mod, opt);
    const auto s0 = max_source(mod, {});
    if (!s0.empty()) {
        res.status = Stability::unstable;
        res.witness = make_witness(mod, s0);
        return res;
    }
    for (std::uint32_t p : {101u, 103u, 107u}) {
        auto red = reduce_mod(mod, p);
        if (!red) continue;
        auto r = is_semistable(*red, mode == KroneckerMode::exact_smallfield ? KroneckerMode::exact_pruned : mode, opt);
        res.checked += r.checked;
        if (r.status == Stability::semistable) {
            res.status = Stability::semistable;
            res.note = "certified by reduction mod " + std::to_string(p);
            return res;
        }
    }
    res.status = Stability::unknown;
    res.note = "unstable modulo 101, 103 and 107; no rational witness found";
    return res;
}

// ---------------------------------------------------------------- numerics

/// Expected dimension q m n - m^2 - n^2 + 1 of the moduli space of semistable Kronecker modules.
constexpr long long moduli_dimension(long long q, long long m, long long n) { return q * m * n - m * m - n * n + 1; }

}  // namespace sextic

#endif
