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

#include "heisrb/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "heisrb/error.hpp"

namespace heisrb {

// ---------------------------------------------------------------------------
// RatFunc

namespace {

Poly quotient(const Poly &a, const Poly &b)
{
    auto q = Poly::divide_exact(a, b);
    if (!q)
        throw Error("internal: inexact polynomial division");
    return *std::move(q);
}

} // namespace

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(Poly num, Poly den)
{
    if (den.is_zero())
        throw DivisionByZero();
    if (num.is_zero()) {
        den_ = Poly(1);
        return;
    }
    const Poly g = gcd(num, den);
    if (!g.is_constant()) {
        num = quotient(num, g);
        den = quotient(den, g);
    }
    const GaussianRational lc = den.leading_coefficient();
    if (!lc.is_one()) {
        const GaussianRational s = lc.inverse();
        num *= s;
        den *= s;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RatFunc RatFunc::inverse() const
{
    if (num_.is_zero())
        throw DivisionByZero();
    const GaussianRational s = num_.leading_coefficient().inverse();
    return RatFunc(den_ * s, num_ * s, Reduced{});
}

RatFunc operator-(const RatFunc &a) { return RatFunc(-a.num_, a.den_, RatFunc::Reduced{}); }

RatFunc operator+(const RatFunc &a, const RatFunc &b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_) {
        Poly n = a.num_ + b.num_;
        if (a.den_.is_constant())
            return RatFunc(std::move(n), a.den_, RatFunc::Reduced{});
        return RatFunc(std::move(n), a.den_);
    }
    // Henrici: only the common factor of the denominators can cancel.
    const Poly g = gcd(a.den_, b.den_);
    if (g.is_constant())
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Reduced{});
    const Poly da = quotient(a.den_, g);
    const Poly db = quotient(b.den_, g);
    Poly n = a.num_ * db + b.num_ * da;
    Poly d = a.den_ * db;
    if (n.is_zero())
        return RatFunc();
    const Poly g2 = gcd(n, g);
    if (g2.is_constant())
        return RatFunc(std::move(n), std::move(d), RatFunc::Reduced{});
    return RatFunc(quotient(n, g2), quotient(d, g2), RatFunc::Reduced{});
}

RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }

RatFunc operator*(const RatFunc &a, const RatFunc &b)
{
    if (a.is_zero() || b.is_zero())
        return RatFunc();
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    const Poly an = g1.is_constant() ? a.num_ : quotient(a.num_, g1);
    const Poly bd = g1.is_constant() ? b.den_ : quotient(b.den_, g1);
    const Poly bn = g2.is_constant() ? b.num_ : quotient(b.num_, g2);
    const Poly ad = g2.is_constant() ? a.den_ : quotient(a.den_, g2);
    return RatFunc(an * bn, ad * bd, RatFunc::Reduced{});
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(RatFunc value)
{
    if (value.is_constant())
        value_ = value.numerator().constant_value() / value.denominator().constant_value();
    else
        value_ = std::move(value);
}

namespace {

bool valid_identifier(const std::string &name)
{
    if (name.empty() || name == "i" || !std::islower(static_cast<unsigned char>(name.front())))
        return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
    });
}

} // namespace

Scalar Scalar::var(const std::string &name)
{
    if (!valid_identifier(name))
        throw Error("invalid indeterminate name '" + name + "'");
    return Scalar(Poly::variable(name));
}

const GaussianRational &Scalar::numeric() const
{
    if (!is_numeric())
        throw Error("scalar " + to_string() + " is not numeric");
    return std::get<GaussianRational>(value_);
}

const RatFunc &Scalar::symbolic() const
{
    if (is_numeric())
        throw Error("scalar " + to_string() + " is not symbolic");
    return std::get<RatFunc>(value_);
}

RatFunc Scalar::as_ratfunc() const
{
    if (is_numeric())
        return RatFunc(Poly(std::get<GaussianRational>(value_)));
    return std::get<RatFunc>(value_);
}

bool Scalar::is_zero() const noexcept
{
    if (const auto *z = std::get_if<GaussianRational>(&value_))
        return z->is_zero();
    return std::get<RatFunc>(value_).is_zero();
}

bool Scalar::is_one() const noexcept
{
    const auto *z = std::get_if<GaussianRational>(&value_);
    return z != nullptr && z->is_one();
}

std::vector<std::string> Scalar::variables() const
{
    if (is_numeric())
        return {};
    const auto &f = std::get<RatFunc>(value_);
    std::vector<std::string> out;
    std::set_union(f.numerator().variables().begin(), f.numerator().variables().end(),
                   f.denominator().variables().begin(), f.denominator().variables().end(), std::back_inserter(out));
    return out;
}

Scalar Scalar::inverse() const
{
    if (is_numeric())
        return std::get<GaussianRational>(value_).inverse();
    return std::get<RatFunc>(value_).inverse();
}

Scalar Scalar::pow(std::uint32_t n) const
{
    Scalar result(1);
    Scalar base = *this;
    while (n != 0) {
        if (n & 1U)
            result *= base;
        n >>= 1U;
        if (n != 0)
            base *= base;
    }
    return result;
}

Scalar operator+(const Scalar &a, const Scalar &b)
{
    if (a.is_numeric() && b.is_numeric())
        return a.numeric() + b.numeric();
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    return a.as_ratfunc() + b.as_ratfunc();
}

Scalar operator-(const Scalar &a, const Scalar &b)
{
    if (a.is_numeric() && b.is_numeric())
        return a.numeric() - b.numeric();
    return a + (-b);
}

Scalar operator*(const Scalar &a, const Scalar &b)
{
    if (a.is_numeric() && b.is_numeric())
        return a.numeric() * b.numeric();
    if (a.is_zero() || b.is_zero())
        return Scalar();
    if (a.is_one())
        return b;
    if (b.is_one())
        return a;
    return a.as_ratfunc() * b.as_ratfunc();
}

Scalar operator/(const Scalar &a, const Scalar &b)
{
    if (a.is_numeric() && b.is_numeric())
        return a.numeric() / b.numeric();
    return a * b.inverse();
}

Scalar operator-(const Scalar &a)
{
    if (a.is_numeric())
        return -a.numeric();
    return -a.symbolic();
}

namespace {

Scalar evaluate(const Poly &p, const Assignment &assignment)
{
    const auto &vars = p.variables();
    std::vector<Scalar> values;
    values.reserve(vars.size());
    for (const auto &v : vars) {
        auto it = assignment.find(v);
        values.push_back(it != assignment.end() ? it->second : Scalar::var(v));
    }
    Scalar sum;
    for (const auto &t : p.terms()) {
        Scalar term(t.coeff);
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (t.exps[i] != 0)
                term *= values[i].pow(t.exps[i]);
        sum += term;
    }
    return sum;
}

} // namespace

Scalar Scalar::substitute(const Assignment &assignment) const
{
    if (is_numeric())
        return *this;
    const auto &f = std::get<RatFunc>(value_);
    Scalar den = evaluate(f.denominator(), assignment);
    if (den.is_zero())
        throw DenominatorVanishes(f.denominator().to_string());
    return evaluate(f.numerator(), assignment) / den;
}

std::string Scalar::to_string() const
{
    if (const auto *z = std::get_if<GaussianRational>(&value_))
        return z->to_string();
    const auto &f = std::get<RatFunc>(value_);
    if (f.denominator().is_constant())
        return f.numerator().to_string();
    std::string num = f.numerator().to_string();
    // a constant numerator like 1-2*i is a sum too
    const auto &nt = f.numerator().terms();
    if (nt.size() > 1 || (f.numerator().is_constant() && !nt.front().coeff.re().is_zero() &&
                          !nt.front().coeff.im().is_zero()))
        num = "(" + num + ")";
    std::string den = f.denominator().to_string();
    const auto &dt = f.denominator().terms();
    const bool bare = dt.size() == 1 && f.denominator().variables().size() == 1 && dt.front().exps.front() == 1 &&
                      dt.front().coeff.is_one();
    if (!bare)
        den = "(" + den + ")";
    return num + "/" + den;
}

// ---------------------------------------------------------------------------
// Parser
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'i' | identifier | '(' expr ')'

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Scalar parse_all()
    {
        Scalar s = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return s;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr()
    {
        Scalar acc = term();
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Scalar term()
    {
        Scalar acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Scalar d = unary();
                if (d.is_zero())
                    throw ParseError("division by zero", at);
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    Scalar unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    Scalar power()
    {
        Scalar base = primary();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            std::string digits = read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
            if (digits.empty() || digits.size() > 6)
                throw ParseError("expected small non-negative exponent", start);
            base = base.pow(static_cast<std::uint32_t>(std::stoul(digits)));
        }
        return base;
    }

    Scalar primary()
    {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar inner = expr();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = read_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
            return Rational(mpz_class(digits, 10));
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            std::string name = read_while([](char ch) {
                return std::islower(static_cast<unsigned char>(ch)) || std::isdigit(static_cast<unsigned char>(ch));
            });
            if (name == "i")
                return Scalar::imaginary_unit();
            return Scalar::var(name);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    template <class Pred>
    std::string read_while(Pred pred)
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && pred(text_[pos_]))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text).parse_all(); }

} // namespace heisrb
