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

#ifndef HEISRB_SCALAR_HPP
#define HEISRB_SCALAR_HPP

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "heisrb/gaussian.hpp"
#include "heisrb/poly.hpp"

namespace heisrb {

/// Reduced fraction of polynomials over Q(i).
///
/// Invariants: denominator nonzero with leading coefficient 1, and
/// gcd(numerator, denominator) = 1.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(Poly num); // NOLINT(google-explicit-constructor)
    /// Reduces num/den; throws DivisionByZero when den is zero.
    RatFunc(Poly num, Poly den);

    const Poly &numerator() const noexcept { return num_; }
    const Poly &denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

    RatFunc inverse() const;

    friend RatFunc operator+(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b) { return a * b.inverse(); }
    friend RatFunc operator-(const RatFunc &a);

    friend bool operator==(const RatFunc &, const RatFunc &) = default;

private:
    struct Reduced {};
    RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

class Scalar;
using Assignment = std::map<std::string, Scalar>;

/// Exact scalar: a Gaussian rational, or a rational function in named indeterminates.
///
/// A rational function that reduces to a constant is always stored as a
/// Gaussian rational, so equal values have identical representations.
class Scalar {
public:
    Scalar() = default;
    Scalar(GaussianRational value) : value_(std::move(value)) {} // NOLINT(google-explicit-constructor)
    Scalar(Rational value) : value_(GaussianRational(std::move(value))) {} // NOLINT(google-explicit-constructor)
    Scalar(std::int64_t value) : value_(GaussianRational(value)) {} // NOLINT(google-explicit-constructor)
    Scalar(int value) : Scalar(static_cast<std::int64_t>(value)) {} // NOLINT(google-explicit-constructor)
    Scalar(RatFunc value); // NOLINT(google-explicit-constructor)
    Scalar(Poly value) : Scalar(RatFunc(std::move(value))) {} // NOLINT(google-explicit-constructor)

    /// The indeterminate `name`; must match [a-z][a-z0-9]* and differ from "i".
    static Scalar var(const std::string &name);
    static Scalar imaginary_unit() { return GaussianRational::i(); }
    static Scalar ratio(std::int64_t num, std::int64_t den) { return Rational(num, den); }

    /// Parses the scalar grammar; throws ParseError.
    static Scalar parse(std::string_view text);

    bool is_numeric() const noexcept { return std::holds_alternative<GaussianRational>(value_); }
    bool is_symbolic() const noexcept { return !is_numeric(); }
    const GaussianRational &numeric() const;
    const RatFunc &symbolic() const;
    /// The value as a fraction (numeric values become constant fractions).
    RatFunc as_ratfunc() const;

    /// Decision procedure for equality with zero in the field.
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Sorted names of the indeterminates occurring in the value.
    std::vector<std::string> variables() const;

    Scalar inverse() const;
    Scalar pow(std::uint32_t n) const;

    /// Replace indeterminates by values; unassigned names stay symbolic.
    /// Throws DenominatorVanishes when the denominator evaluates to zero.
    Scalar substitute(const Assignment &assignment) const;

    /// Canonical, re-parseable rendering.
    std::string to_string() const;

    Scalar &operator+=(const Scalar &o) { return *this = *this + o; }
    Scalar &operator-=(const Scalar &o) { return *this = *this - o; }
    Scalar &operator*=(const Scalar &o) { return *this = *this * o; }
    Scalar &operator/=(const Scalar &o) { return *this = *this / o; }

    friend Scalar operator+(const Scalar &a, const Scalar &b);
    friend Scalar operator-(const Scalar &a, const Scalar &b);
    friend Scalar operator*(const Scalar &a, const Scalar &b);
    friend Scalar operator/(const Scalar &a, const Scalar &b);
    friend Scalar operator-(const Scalar &a);

    /// Structural equality; by canonicity this is equality in the field.
    friend bool operator==(const Scalar &, const Scalar &) = default;

    friend std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

private:
    std::variant<GaussianRational, RatFunc> value_;
};

inline Scalar scalar_add(const Scalar &x, const Scalar &y) { return x + y; }
inline Scalar scalar_mul(const Scalar &x, const Scalar &y) { return x * y; }
inline bool scalar_is_zero(const Scalar &x) { return x.is_zero(); }
inline Scalar scalar_parse(std::string_view text) { return Scalar::parse(text); }
inline Scalar scalar_substitute(const Scalar &x, const Assignment &assignment) { return x.substitute(assignment); }

} // namespace heisrb

#endif
