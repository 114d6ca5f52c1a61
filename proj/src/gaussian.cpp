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

#include "heisrb/gaussian.hpp"

#include "heisrb/error.hpp"

namespace heisrb {

GaussianRational &GaussianRational::operator+=(const GaussianRational &o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o)
{
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o)
{
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

std::optional<GaussianRational> GaussianRational::sqrt() const
{
    if (is_zero())
        return GaussianRational();
    // (x + yi)^2 = p + qi  =>  x^2 - y^2 = p, 2xy = q, x^2 + y^2 = |z|
    auto modulus = norm().sqrt();
    if (!modulus)
        return std::nullopt;
    auto x = ((re_ + *modulus) / Rational(2)).sqrt();
    if (!x)
        return std::nullopt;
    GaussianRational root;
    if (!x->is_zero()) {
        root = {*x, im_ / (Rational(2) * *x)};
    } else {
        auto y = (-re_).sqrt();
        if (!y)
            return std::nullopt;
        root = {Rational(0), *y};
    }
    if (root * root != *this)
        return std::nullopt;
    return root;
}

std::string GaussianRational::to_string() const
{
    if (im_.is_zero())
        return re_.to_string();
    std::string imag;
    if (im_.is_one())
        imag = "i";
    else if (im_ == Rational(-1))
        imag = "-i";
    else
        imag = im_.to_string() + "*i";
    if (re_.is_zero())
        return imag;
    return re_.to_string() + (im_.sign() > 0 ? "+" : "") + imag;
}

} // namespace heisrb
