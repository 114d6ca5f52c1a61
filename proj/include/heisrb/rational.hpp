/*
 *   Copyright 2026 The heisrb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HEISRB_RATIONAL_HPP
#define HEISRB_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace heisrb {

/// Arbitrary-precision rational number in lowest terms with positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every constructor canonicalizes so
/// the stored representation is unique.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpz_class num, mpz_class den = 1);
    explicit Rational(mpq_class value);

    /// Parses "n" or "n/d" in base 10.
    static Rational from_string(const std::string &text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class &raw() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return value_ == 1; }
    bool is_integer() const noexcept { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }

    Rational abs() const { return Rational(::abs(value_)); }
    Rational inverse() const;

    /// Exact square root if this is the square of a rational.
    std::optional<Rational> sqrt() const;

    std::string to_string() const { return value_.get_str(); }

    Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
    Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
    Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

} // namespace heisrb

#endif
