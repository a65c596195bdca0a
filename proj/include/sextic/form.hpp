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

#ifndef SEXTIC_FORM_HPP
#define SEXTIC_FORM_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "monomial.hpp"

namespace sextic {

/*
 * Homogeneous polynomial of fixed degree in X, Y, Z.
 *
 * Coefficients are stored densely in monomial_basis(degree) order. Forms of
 * negative degree exist only as zero (they arise as forced-zero entries of
 * presentation matrices). Every zero form compares equal to every other
 * zero form regardless of its nominal degree.
 */
template <class K>
class Form {
   public:
    using Field = K;
    using Scalar = typename K::value_type;

    Form() = default;
    Form(K field, int degree) : field_(std::move(field)), degree_(degree), c_(monomial_count(degree), field_.zero()) {}
    Form(K field, int degree, std::vector<Scalar> coefficients)
        : field_(std::move(field)), degree_(degree), c_(std::move(coefficients)) {
        if (c_.size() != monomial_count(degree))
            throw ShapeError("Form: expected " + std::to_string(monomial_count(degree)) + " coefficients for degree " +
                             std::to_string(degree));
    }

    static Form constant(const K& field, const Scalar& c) { return Form(field, 0, {c}); }
    static Form monomial(const K& field, Exponent e, const Scalar& c) {
        Form f(field, e.degree());
        f.c_[monomial_index(e)] = c;
        return f;
    }
    /// X (var 0), Y (var 1) or Z (var 2).
    static Form variable(const K& field, int var) {
        Exponent e{var == 0 ? 1 : 0, var == 1 ? 1 : 0, var == 2 ? 1 : 0};
        return monomial(field, e, field.one());
    }
    /// Linear form a X + b Y + c Z.
    static Form linear(const K& field, const Scalar& a, const Scalar& b, const Scalar& c) {
        return Form(field, 1, {a, b, c});
    }

    const K& field() const { return field_; }
    int degree() const { return degree_; }
    std::span<const Scalar> coefficients() const { return c_; }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar coefficient(Exponent e) const {
        if (e.degree() != degree_) return field_.zero();
        return c_[monomial_index(e)];
    }
    void set_coefficient(Exponent e, const Scalar& value) {
        if (e.degree() != degree_) throw ShapeError("set_coefficient: exponent degree does not match form degree");
        c_[monomial_index(e)] = value;
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return sextic::is_zero(s); });
    }

    /// Nonzero terms in basis order.
    std::vector<std::pair<Exponent, Scalar>> terms() const {
        std::vector<std::pair<Exponent, Scalar>> out;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!sextic::is_zero(c_[i])) out.emplace_back(monomial_at(degree_, i), c_[i]);
        return out;
    }

    /// Same polynomial with a different nominal degree; only legal for zero forms or an unchanged degree.
    Form with_degree(int degree) const {
        if (degree == degree_) return *this;
        if (!is_zero()) throw ShapeError("with_degree: cannot re-degree a nonzero form");
        return Form(field_, degree);
    }

    Form operator-() const {
        Form out = *this;
        for (auto& s : out.c_) s = -s;
        return out;
    }
    Form& operator+=(const Form& o) { return accumulate(o, false); }
    Form& operator-=(const Form& o) { return accumulate(o, true); }
    Form& operator*=(const Scalar& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Form a, const Scalar& s) { return a *= s; }
    friend Form operator*(const Scalar& s, Form a) { return a *= s; }

    friend Form operator*(const Form& a, const Form& b) {
        Form out(a.field_, a.degree_ + b.degree_);
        if (out.c_.empty()) return out;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (sextic::is_zero(a.c_[i])) continue;
            const Exponent ea = monomial_at(a.degree_, i);
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (sextic::is_zero(b.c_[j])) continue;
                out.c_[monomial_index(ea + monomial_at(b.degree_, j))] += a.c_[i] * b.c_[j];
            }
        }
        return out;
    }

    friend bool operator==(const Form& a, const Form& b) {
        const bool za = a.is_zero(), zb = b.is_zero();
        if (za || zb) return za && zb;
        return a.degree_ == b.degree_ && a.c_ == b.c_;
    }

    /// Human-readable rendering, e.g. "X^6 + Y^6" or "2*X*Y - Z^2" (over Q).
    std::string to_string() const {
        std::string out;
        for (const auto& [e, c] : terms()) {
            std::string coef = c.str();
            bool negative = !coef.empty() && coef[0] == '-';
            if (negative) coef.erase(0, 1);
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const bool unit = coef == "1";
            if (e.degree() == 0)
                out += coef;
            else if (unit)
                out += monomial_string(e);
            else
                out += coef + "*" + monomial_string(e);
        }
        return out.empty() ? "0" : out;
    }

   private:
    Form& accumulate(const Form& o, bool subtract) {
        if (o.is_zero()) return *this;
        if (is_zero() && degree_ != o.degree_) {
            *this = subtract ? -o : o;
            return *this;
        }
        if (degree_ != o.degree_)
            throw ShapeError("Form: adding forms of degrees " + std::to_string(degree_) + " and " +
                             std::to_string(o.degree_));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (subtract)
                c_[i] -= o.c_[i];
            else
                c_[i] += o.c_[i];
        }
        return *this;
    }

    K field_{};
    int degree_ = 0;
    std::vector<Scalar> c_{};
};

}  // namespace sextic

#endif
