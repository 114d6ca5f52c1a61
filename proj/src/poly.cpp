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

#include "heisrb/poly.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>

#include "heisrb/error.hpp"

namespace heisrb {

namespace {

std::uint32_t degree_of(const Exponents &e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

/// Descending graded lexicographic comparison.
struct GrlexGreater {
    bool operator()(const Exponents &a, const Exponents &b) const
    {
        const auto da = degree_of(a);
        const auto db = degree_of(b);
        if (da != db)
            return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

using Names = std::vector<std::string>;

Names name_union(const Names &a, const Names &b)
{
    Names out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Names name_intersection(const Names &a, const Names &b)
{
    Names out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Names name_difference(const Names &a, const Names &b)
{
    Names out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

Poly::Poly(GaussianRational constant)
{
    if (!constant.is_zero())
        terms_.push_back({Exponents{}, std::move(constant)});
}

Poly::Poly(std::vector<std::string> vars, std::vector<Term> terms) : vars_(std::move(vars)), terms_(std::move(terms))
{
    canonicalize();
}

Poly Poly::variable(const std::string &name) { return power_of(name, 1); }

Poly Poly::power_of(const std::string &name, std::uint32_t power)
{
    if (power == 0)
        return Poly(1);
    return Poly({name}, {Term{{power}, GaussianRational(1)}});
}

Poly Poly::from_coefficients(const std::string &name, const std::vector<Poly> &coefficients)
{
    Poly out;
    for (std::size_t k = 0; k < coefficients.size(); ++k)
        if (!coefficients[k].is_zero())
            out += coefficients[k] * power_of(name, static_cast<std::uint32_t>(k));
    return out;
}

void Poly::canonicalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const Term &a, const Term &b) { return GrlexGreater{}(a.exps, b.exps); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto &t : terms_) {
        if (!merged.empty() && merged.back().exps == t.exps)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term &t) { return t.coeff.is_zero(); });
    terms_ = std::move(merged);

    std::vector<bool> used(vars_.size(), false);
    for (const auto &t : terms_)
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (t.exps[i] != 0)
                used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; }))
        return;
    Names vars;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i])
            vars.push_back(vars_[i]);
    for (auto &t : terms_) {
        Exponents e;
        e.reserve(vars.size());
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (used[i])
                e.push_back(t.exps[i]);
        t.exps = std::move(e);
    }
    vars_ = std::move(vars);
}

std::vector<Term> Poly::terms_over(const std::vector<std::string> &vars) const
{
    if (vars == vars_)
        return terms_;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        pos[i] = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin());
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) {
        Exponents e(vars.size(), 0);
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            e[pos[i]] = t.exps[i];
        out.push_back({std::move(e), t.coeff});
    }
    return out;
}

GaussianRational Poly::constant_value() const
{
    if (!is_constant())
        throw Error("constant_value of a non-constant polynomial");
    return terms_.empty() ? GaussianRational() : terms_.front().coeff;
}

GaussianRational Poly::leading_coefficient() const { return terms_.empty() ? GaussianRational() : terms_.front().coeff; }

std::uint32_t Poly::total_degree() const { return terms_.empty() ? 0 : degree_of(terms_.front().exps); }

bool Poly::has_variable(const std::string &name) const { return std::binary_search(vars_.begin(), vars_.end(), name); }

std::uint32_t Poly::degree_in(const std::string &name) const
{
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name)
        return 0;
    const auto idx = static_cast<std::size_t>(it - vars_.begin());
    std::uint32_t d = 0;
    for (const auto &t : terms_)
        d = std::max(d, t.exps[idx]);
    return d;
}

std::vector<Poly> Poly::coefficients_in(const std::string &name) const
{
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name)
        return {*this};
    const auto idx = static_cast<std::size_t>(it - vars_.begin());
    Names rest = vars_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
    std::vector<std::vector<Term>> buckets(degree_in(name) + 1);
    for (const auto &t : terms_) {
        Exponents e = t.exps;
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(idx));
        buckets[t.exps[idx]].push_back({std::move(e), t.coeff});
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto &b : buckets)
        out.push_back(Poly(rest, std::move(b)));
    return out;
}

std::vector<Poly> Poly::coefficients_over(const std::vector<std::string> &names) const
{
    std::vector<bool> eliminated(vars_.size());
    Names rest;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        eliminated[i] = std::find(names.begin(), names.end(), vars_[i]) != names.end();
        if (!eliminated[i])
            rest.push_back(vars_[i]);
    }
    std::map<Exponents, std::vector<Term>> groups;
    for (const auto &t : terms_) {
        Exponents key;
        Exponents e;
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            (eliminated[i] ? key : e).push_back(t.exps[i]);
        groups[std::move(key)].push_back({std::move(e), t.coeff});
    }
    std::vector<Poly> out;
    out.reserve(groups.size());
    for (auto &[key, terms] : groups)
        out.push_back(Poly(rest, std::move(terms)));
    return out;
}

Poly Poly::monic() const
{
    if (is_zero() || leading_coefficient().is_one())
        return *this;
    return *this * leading_coefficient().inverse();
}

Poly Poly::pow(std::uint32_t n) const
{
    Poly result(1);
    Poly base = *this;
    while (n != 0) {
        if (n & 1U)
            result *= base;
        n >>= 1U;
        if (n != 0)
            base *= base;
    }
    return result;
}

Poly &Poly::operator+=(const Poly &o)
{
    if (o.is_zero())
        return *this;
    Names vars = name_union(vars_, o.vars_);
    std::vector<Term> terms = terms_over(vars);
    std::vector<Term> other = o.terms_over(vars);
    terms.insert(terms.end(), std::make_move_iterator(other.begin()), std::make_move_iterator(other.end()));
    *this = Poly(std::move(vars), std::move(terms));
    return *this;
}

Poly &Poly::operator-=(const Poly &o) { return *this += -o; }

Poly operator-(const Poly &a)
{
    Poly out = a;
    for (auto &t : out.terms_)
        t.coeff = -t.coeff;
    return out;
}

Poly &Poly::operator*=(const GaussianRational &c)
{
    if (c.is_zero()) {
        *this = Poly();
        return *this;
    }
    for (auto &t : terms_)
        t.coeff *= c;
    return *this;
}

Poly &Poly::operator*=(const Poly &o) { return *this = *this * o; }

Poly operator*(const Poly &a, const Poly &b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    if (b.is_constant())
        return a * b.constant_value();
    if (a.is_constant())
        return b * a.constant_value();
    Names vars = name_union(a.vars_, b.vars_);
    const auto ta = a.terms_over(vars);
    const auto tb = b.terms_over(vars);
    std::vector<Term> out;
    out.reserve(ta.size() * tb.size());
    for (const auto &x : ta) {
        for (const auto &y : tb) {
            Exponents e(vars.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = x.exps[i] + y.exps[i];
            out.push_back({std::move(e), x.coeff * y.coeff});
        }
    }
    return Poly(std::move(vars), std::move(out));
}

std::optional<Poly> Poly::divide_exact(const Poly &dividend, const Poly &divisor)
{
    if (divisor.is_zero())
        throw DivisionByZero();
    if (dividend.is_zero())
        return Poly();
    if (divisor.is_constant())
        return dividend * divisor.constant_value().inverse();
    if (dividend == divisor)
        return Poly(1);
    Names vars = name_union(dividend.vars_, divisor.vars_);
    const auto b = divisor.terms_over(vars);
    std::map<Exponents, GaussianRational, GrlexGreater> rem;
    for (auto &t : dividend.terms_over(vars))
        rem.emplace(std::move(t.exps), std::move(t.coeff));
    const Term &lead = b.front();
    const GaussianRational lead_inv = lead.coeff.inverse();
    std::vector<Term> quotient;
    while (!rem.empty()) {
        auto top = rem.begin();
        Exponents shift(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (top->first[i] < lead.exps[i])
                return std::nullopt;
            shift[i] = top->first[i] - lead.exps[i];
        }
        const GaussianRational factor = top->second * lead_inv;
        for (const auto &t : b) {
            Exponents e(vars.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = t.exps[i] + shift[i];
            auto [it, inserted] = rem.try_emplace(std::move(e));
            it->second -= factor * t.coeff;
            if (it->second.is_zero())
                rem.erase(it);
        }
        quotient.push_back({std::move(shift), factor});
    }
    return Poly(std::move(vars), std::move(quotient));
}

namespace {

Poly exact_quotient(const Poly &a, const Poly &b)
{
    auto q = Poly::divide_exact(a, b);
    if (!q)
        throw Error("internal: inexact polynomial division");
    return *std::move(q);
}

Poly content(const std::vector<Poly> &coefficients)
{
    Poly g;
    for (const auto &c : coefficients) {
        if (c.is_zero())
            continue;
        g = gcd(g, c);
        if (g.is_constant())
            return Poly(1);
    }
    return g;
}

Poly primitive_part(const Poly &p, const std::string &x)
{
    return exact_quotient(p, content(p.coefficients_in(x))).monic();
}

/// Pseudo-remainder of a by b as univariate polynomials in x.
Poly pseudo_remainder(Poly a, const Poly &b, const std::string &x)
{
    const auto db = b.degree_in(x);
    const Poly lcb = b.coefficients_in(x)[db];
    while (!a.is_zero() && a.degree_in(x) >= db) {
        const auto da = a.degree_in(x);
        const Poly lca = a.coefficients_in(x)[da];
        a = lcb * a - lca * Poly::power_of(x, da - db) * b;
    }
    return a;
}

Poly monomial_gcd(const Poly &mono, const Poly &other)
{
    const auto &mv = mono.variables();
    const auto &me = mono.terms().front().exps;
    Poly out(1);
    for (std::size_t i = 0; i < mv.size(); ++i) {
        std::uint32_t e = me[i];
        const auto &ov = other.variables();
        auto it = std::lower_bound(ov.begin(), ov.end(), mv[i]);
        if (it == ov.end() || *it != mv[i])
            continue;
        const auto idx = static_cast<std::size_t>(it - ov.begin());
        for (const auto &t : other.terms())
            e = std::min(e, t.exps[idx]);
        if (e != 0)
            out *= Poly::power_of(mv[i], e);
    }
    return out;
}

} // namespace

Poly gcd(const Poly &a, const Poly &b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return Poly(1);
    if (a == b)
        return a.monic();
    if (a.is_monomial())
        return monomial_gcd(a, b);
    if (b.is_monomial())
        return monomial_gcd(b, a);

    const Names common = name_intersection(a.vars_, b.vars_);
    if (common.empty())
        return Poly(1);
    // Variables private to one side cannot occur in the gcd: reduce through coefficients.
    for (const auto *p : {&a, &b}) {
        const Poly &other = (p == &a) ? b : a;
        if (p->vars_.size() == common.size())
            continue;
        Poly g = other;
        for (const auto &c : p->coefficients_over(name_difference(p->vars_, common))) {
            g = gcd(c, g);
            if (g.is_constant())
                return Poly(1);
        }
        return g;
    }

    std::string x = common.front();
    auto best = std::max(a.degree_in(x), b.degree_in(x));
    for (const auto &v : common) {
        const auto d = std::max(a.degree_in(v), b.degree_in(v));
        if (d < best) {
            best = d;
            x = v;
        }
    }

    const Poly ca = content(a.coefficients_in(x));
    const Poly cb = content(b.coefficients_in(x));
    const Poly c = gcd(ca, cb);
    Poly pa = exact_quotient(a, ca).monic();
    Poly pb = exact_quotient(b, cb).monic();
    if (pa.degree_in(x) < pb.degree_in(x))
        std::swap(pa, pb);
    // A primitive polynomial of degree 1 in x is irreducible.
    if (pb.degree_in(x) == 1)
        return ((Poly::divide_exact(pa, pb) ? pb : Poly(1)) * c).monic();
    while (true) {
        Poly r = pseudo_remainder(pa, pb, x);
        if (r.is_zero())
            break;
        if (r.degree_in(x) == 0) {
            pb = Poly(1);
            break;
        }
        pa = std::move(pb);
        pb = primitive_part(r, x);
    }
    if (!pb.is_constant())
        pb = primitive_part(pb, x);
    return (pb * c).monic();
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &t : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::uint32_t k = 0; k < t.exps[i]; ++k)
                mono += (mono.empty() ? "" : "*") + vars_[i];
        if (mono.empty()) {
            std::string s = t.coeff.to_string();
            out += (first || s.front() == '-') ? s : "+" + s;
            first = false;
            continue;
        }
        const bool negative = t.coeff.is_negative();
        const GaussianRational mag = negative ? -t.coeff : t.coeff;
        std::string body;
        if (mag.is_one())
            body = mono;
        else if (mag.is_real())
            body = mag.re().to_string() + "*" + mono;
        else if (mag.re().is_zero())
            body = (mag.im().is_one() ? std::string("i") : mag.im().to_string() + "*i") + "*" + mono;
        else
            body = "(" + mag.to_string() + ")*" + mono;
        out += negative ? "-" : (first ? "" : "+");
        out += body;
        first = false;
    }
    return out;
}

} // namespace heisrb
