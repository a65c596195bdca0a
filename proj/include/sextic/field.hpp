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

#ifndef SEXTIC_FIELD_HPP
#define SEXTIC_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "error.hpp"

namespace sextic {

/*
 * Exact scalars. Two fields are supported: the rationals (arbitrary precision)
 * and prime fields F_p with p < 2^32. Generic code is written against a field
 * descriptor K exposing
 *
 *   K::value_type, zero(), one(), from_int(long long), name()
 *
 * and value types supporting + - * / unary-, == and is_zero().
 */

class Rational {
   public:
    using Integer = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw DivisionByZero();
        v_ = boost::multiprecision::cpp_rational(num, den);
    }

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }
    bool is_zero() const { return v_ == 0; }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "n" for integers, "n/d" otherwise.
    std::string str() const {
        if (denominator() == 1) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    static Rational parse(std::string_view text) {
        auto parse_int = [&](std::string_view s) {
            if (s.empty()) throw ParseError("empty integer in rational '" + std::string(text) + "'");
            std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (start == s.size()) throw ParseError("bad rational '" + std::string(text) + "'");
            for (std::size_t i = start; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') throw ParseError("bad rational '" + std::string(text) + "'");
            return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text), Integer(1));
        Integer den = parse_int(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(parse_int(text.substr(0, slash)), den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

   private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Residue modulo a prime; carries its modulus so values are self-describing.
class ModP {
   public:
    ModP() = default;
    ModP(std::uint64_t value, std::uint32_t p) : v_(static_cast<std::uint32_t>(value % p)), p_(p) {}

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    ModP operator-() const { return ModP(v_ == 0 ? 0 : p_ - v_, p_, raw_tag{}); }
    ModP& operator+=(const ModP& o) {
        check(o);
        std::uint64_t s = std::uint64_t(v_) + o.v_;
        v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
        return *this;
    }
    ModP& operator-=(const ModP& o) {
        check(o);
        v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + p_ - o.v_);
        return *this;
    }
    ModP& operator*=(const ModP& o) {
        check(o);
        v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_);
        return *this;
    }
    ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }
    friend ModP operator+(ModP a, const ModP& b) { return a += b; }
    friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
    friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
    friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
    friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

    ModP inverse() const {
        if (v_ == 0) throw DivisionByZero();
        // extended Euclid on (v, p)
        std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (t < 0) t += p_;
        return ModP(static_cast<std::uint32_t>(t), p_, raw_tag{});
    }

    std::string str() const { return std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const ModP& a) { return os << a.v_; }

   private:
    struct raw_tag {};
    ModP(std::uint32_t v, std::uint32_t p, raw_tag) : v_(v), p_(p) {}
    void check(const ModP& o) const {
        if (p_ != o.p_) throw std::invalid_argument("mixed moduli in F_p arithmetic");
    }
    std::uint32_t v_{0};
    std::uint32_t p_{0};
};

inline bool is_zero(const ModP& a) { return a.is_zero(); }

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct RationalField {
    using value_type = Rational;
    static constexpr bool is_finite = false;

    value_type zero() const { return Rational(0); }
    value_type one() const { return Rational(1); }
    value_type from_int(long long n) const { return Rational(n); }
    std::string name() const { return "Q"; }
    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

struct PrimeField {
    using value_type = ModP;
    static constexpr bool is_finite = true;

    PrimeField() : PrimeField(101) {}
    explicit PrimeField(std::uint64_t prime) : p(static_cast<std::uint32_t>(prime)) {
        if (prime > 0xFFFFFFFFull || !is_prime(prime))
            throw std::invalid_argument("F_p needs a prime p < 2^32, got " + std::to_string(prime));
    }

    value_type zero() const { return ModP(0, p); }
    value_type one() const { return ModP(1, p); }
    value_type from_int(long long n) const {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += p;
        return ModP(static_cast<std::uint64_t>(r), p);
    }
    value_type element(std::uint64_t v) const { return ModP(v, p); }
    std::string name() const { return "F_" + std::to_string(p); }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }

    std::uint32_t p;
};

/// A field chosen at run time (file formats and the CLI).
using AnyField = std::variant<RationalField, PrimeField>;

/// Parses "q" / "Q" / "rational" or "p:<prime>".
inline AnyField parse_field(std::string_view text) {
    if (text == "q" || text == "Q" || text == "rational") return RationalField{};
    if (text.size() > 2 && (text.substr(0, 2) == "p:" || text.substr(0, 2) == "P:")) {
        std::uint64_t p = 0;
        for (char c : text.substr(2)) {
            if (c < '0' || c > '9') throw ParseError("bad field descriptor '" + std::string(text) + "'");
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
            if (p > 0xFFFFFFFFull) throw ParseError("prime too large in '" + std::string(text) + "'");
        }
        if (!is_prime(p)) throw ParseError("field modulus is not prime: " + std::to_string(p));
        return PrimeField(p);
    }
    throw ParseError("bad field descriptor '" + std::string(text) + "' (expected q or p:<prime>)");
}

inline std::string field_spec_string(const AnyField& f) {
    if (const auto* pf = std::get_if<PrimeField>(&f)) return "p:" + std::to_string(pf->p);
    return "q";
}

template <class K>
std::string field_spec_string(const K& f) {
    return field_spec_string(AnyField(f));
}

}  // namespace sextic

#endif
