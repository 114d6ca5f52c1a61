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

#include "heisrb/rational.hpp"

#include "heisrb/error.hpp"

namespace heisrb {

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)))
{
}

Rational::Rational(mpz_class num, mpz_class den)
{
    if (den == 0)
        throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_string(const std::string &text)
{
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("malformed rational '" + text + "'", 0);
    if (q.get_den() == 0)
        throw DivisionByZero();
    return Rational(std::move(q));
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    return Rational(mpq_class(1 / value_));
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero())
        throw DivisionByZero();
    value_ /= o.value_;
    return *this;
}

std::optional<Rational> Rational::sqrt() const
{
    if (sign() < 0)
        return std::nullopt;
    const mpz_class &n = value_.get_num();
    const mpz_class &d = value_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn;
    mpz_class rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

} // namespace heisrb
