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

#ifndef HEISRB_GAUSSIAN_HPP
#define HEISRB_GAUSSIAN_HPP

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include "heisrb/rational.hpp"

namespace heisrb {

/// Element re + im*i of the Gaussian rationals Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im = Rational(0)) // NOLINT(google-explicit-constructor)
        : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(std::int64_t re) : re_(re) {} // NOLINT(google-explicit-constructor)

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational &re() const noexcept { return re_; }
    const Rational &im() const noexcept { return im_; }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    /// Exact square root in Q(i), if one exists. Of the two roots the one
    /// with positive real part (or positive imaginary part when the real part is 0) is returned.
    std::optional<GaussianRational> sqrt() const;

    /// True when the first nonzero of (re, im) is negative.
    bool is_negative() const noexcept { return re_.sign() < 0 || (re_.is_zero() && im_.sign() < 0); }

    /// Canonical text: "3/2", "-i", "1/2*i", "3/2+1/2*i".
    std::string to_string() const;

    GaussianRational &operator+=(const GaussianRational &o);
    GaussianRational &operator-=(const GaussianRational &o);
    GaussianRational &operator*=(const GaussianRational &o);
    GaussianRational &operator/=(const GaussianRational &o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational &a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const GaussianRational &, const GaussianRational &) = default;

    /// Lexicographic on (re, im); the order used to sort eigenvalues.
    friend std::strong_ordering operator<=>(const GaussianRational &a, const GaussianRational &b)
    {
        if (auto c = a.re_ <=> b.re_; c != 0)
            return c;
        return a.im_ <=> b.im_;
    }

    friend std::ostream &operator<<(std::ostream &os, const GaussianRational &z) { return os << z.to_string(); }

private:
    Rational re_;
    Rational im_;
};

} // namespace heisrb

#endif
