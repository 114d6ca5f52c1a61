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

#include "heisrb/rbo_group.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "heisrb/error.hpp"
#include "heisrb/semidirect.hpp"

namespace heisrb {

namespace {

const Scalar kHalf = Scalar::ratio(1, 2);

void require_shape(const OperatorMatrix &R)
{
    if (!R.has_classified_shape())
        throw UnsupportedShape("induced group operators need r31 = r32 = 0, got r31 = " + R.r(3, 1).to_string() +
                               ", r32 = " + R.r(3, 2).to_string());
}

void require_rbo(const OperatorMatrix &R)
{
    if (auto verdict = is_rbo_weight1(R); !verdict)
        throw NotAnRbo("not a weight-1 Rota-Baxter operator: identity fails on (" + verdict.witness->pair + ")");
}

bool same(const GroupElement &g, const GroupElement &h) { return g == h; }

GroupElement random_element(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 9);
    auto q = [&] { return Scalar(Rational(num(rng), den(rng))); };
    return {q(), q(), q()};
}

} // namespace

GroupOperator::GroupOperator(OperatorMatrix source) : source_(std::move(source))
{
    auto r = [&](int i, int j) -> const Scalar & { return source_.r(i, j); };
    k_bb_ = kHalf * r(2, 1) * (r(2, 2) - r(3, 3));
    k_aa_ = kHalf * r(1, 2) * (r(1, 1) + r(3, 3));
    k_ab_ = kHalf * (r(1, 2) * r(2, 1) + r(1, 1) * (r(2, 2) - r(3, 3)) + (r(2, 2) - 1) * r(3, 3));
}

GroupElement GroupOperator::operator()(const GroupElement &g) const
{
    auto r = [&](int i, int j) -> const Scalar & { return source_.r(i, j); };
    return {g.a * r(1, 1) + g.b * r(2, 1), g.a * r(1, 2) + g.b * r(2, 2),
            g.a * r(1, 3) + g.b * r(2, 3) + g.c * r(3, 3) + k_aa_ * g.a * g.a + k_bb_ * g.b * g.b +
                k_ab_ * g.a * g.b};
}

GroupMap GroupOperator::as_map() const
{
    return [op = *this](const GroupElement &g) { return op(g); };
}

GroupOperator induce(const OperatorMatrix &R, bool check_rbo)
{
    require_shape(R);
    if (check_rbo)
        require_rbo(R);
    return GroupOperator(R);
}

GroupElement induce_via_exp(const OperatorMatrix &R, const GroupElement &g, bool check_rbo)
{
    require_shape(R);
    if (check_rbo)
        require_rbo(R);
    return exp(apply(R, p_inverse(R, log(g))));
}

// ---------------------------------------------------------------------------

GroupElement circle_via_definition(const GroupMap &F, const GroupElement &g, const GroupElement &h)
{
    const GroupElement fg = F(g);
    return grp_mul(grp_mul(g, fg), grp_mul(h, grp_inv(fg)));
}

namespace {

GroupRboVerdict check_group_identity(const GroupMap &F, const GroupElement &g, const GroupElement &h)
{
    const GroupElement lhs = grp_mul(F(g), F(h));
    const GroupElement rhs = F(circle_via_definition(F, g, h));
    if (same(lhs, rhs))
        return {true, std::nullopt};
    return {false, std::array<GroupElement, 4>{lhs, rhs, g, h}};
}

} // namespace

GroupRboVerdict is_group_rbo(const GroupMap &F)
{
    return check_group_identity(F, GroupElement::symbolic("a1", "b1", "c1"), GroupElement::symbolic("a2", "b2", "c2"));
}

GroupRboVerdict is_group_rbo_sampled(const GroupMap &F, int samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples; ++k) {
        const GroupElement g = random_element(rng);
        const GroupElement h = random_element(rng);
        auto verdict = check_group_identity(F, g, h);
        if (!verdict)
            return verdict;
    }
    return {true, std::nullopt};
}

GroupElement descendant_mul(const OperatorMatrix &R, const GroupElement &g, const GroupElement &h)
{
    require_shape(R);
    auto r = [&](int i, int j) -> const Scalar & { return R.r(i, j); };
    return {g.a + h.a, g.b + h.b,
            g.c + h.c + g.a * (h.b * (1 + r(1, 1)) - h.a * r(1, 2)) + g.b * (h.b * r(2, 1) - h.a * r(2, 2))};
}

Scalar theorem_main_table(const FamilyTag &tag)
{
    switch (tag.family) {
    case Family::P1:
    case Family::P2:
    case Family::P3:
    case Family::P4:
        break;
    default:
        throw Error("the circle table covers P1-P4, not " + std::string(to_string(tag.family)));
    }
    return descendant_mul(make_family(tag), GroupElement::symbolic("a1", "b1", "c1"),
                          GroupElement::symbolic("a2", "b2", "c2"))
        .c;
}

namespace {

/// A '+' or '-' outside parentheses, other than a leading sign.
bool has_top_level_sum(const std::string &text)
{
    int depth = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char ch = text[k];
        depth += ch == '(' ? 1 : ch == ')' ? -1 : 0;
        if (depth == 0 && k > 0 && (ch == '+' || ch == '-'))
            return true;
    }
    return false;
}

} // namespace

std::string render_circle_table(const Scalar &q)
{
    static const std::vector<std::string> coordinates{"a1", "a2", "b1", "b2", "c1", "c2"};
    const RatFunc f = q.as_ratfunc();
    const Poly &num = f.numerator();
    const auto &vars = num.variables();

    // coordinate monomial (degree, rendering) -> parameter coefficient
    std::map<std::pair<std::uint32_t, std::string>, Poly> groups;
    for (const Term &t : num.terms()) {
        std::uint32_t degree = 0;
        std::string monomial;
        Poly coeff(t.coeff);
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if (t.exps[k] == 0)
                continue;
            if (std::find(coordinates.begin(), coordinates.end(), vars[k]) != coordinates.end()) {
                degree += t.exps[k];
                for (std::uint32_t e = 0; e < t.exps[k]; ++e)
                    monomial += (monomial.empty() ? "" : "*") + vars[k];
            } else {
                coeff *= Poly::power_of(vars[k], t.exps[k]);
            }
        }
        groups[{degree, monomial}] += coeff;
    }

    std::string out;
    for (const auto &[key, coeff_poly] : groups) {
        const std::string &monomial = key.second;
        const Scalar coeff = Scalar(RatFunc(coeff_poly, f.denominator()));
        if (coeff.is_zero())
            continue;
        std::string piece;
        if (monomial.empty()) {
            piece = coeff.to_string();
        } else if (coeff.is_one()) {
            piece = monomial;
        } else if ((-coeff).is_one()) {
            piece = "-" + monomial;
        } else {
            const bool negative = coeff.to_string()[0] == '-' && !has_top_level_sum((-coeff).to_string());
            const std::string c = (negative ? -coeff : coeff).to_string();
            if (has_top_level_sum(c))
                piece = monomial + "*(" + c + ")";
            else if (coeff.is_numeric())
                piece = c + "*" + monomial;
            else
                piece = monomial + "*" + c;
            if (negative)
                piece = "-" + piece;
        }
        if (!out.empty() && piece[0] != '-')
            out += "+";
        out += piece;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

BraceStructure descendant_brace(const GroupOperator &F)
{
    BraceStructure brace;
    brace.additive = [](const GroupElement &g, const GroupElement &h) { return grp_mul(g, h); };
    brace.circle = [F](const GroupElement &g, const GroupElement &h) { return circle_via_definition(F.as_map(), g, h); };
    // g o x = e  <=>  x = F(g)^-1 g^-1 F(g)
    brace.circle_inverse = [F](const GroupElement &g) {
        const GroupElement fg = F(g);
        return grp_mul(grp_mul(grp_inv(fg), grp_inv(g)), fg);
    };
    return brace;
}

namespace {

using Triple = std::array<GroupElement, 3>;

/// Both sides of one brace axiom, evaluated at (a, b, c).
using Axiom = std::function<std::pair<GroupElement, GroupElement>(const Triple &)>;

std::vector<std::pair<std::string, Axiom>> brace_axioms(const BraceStructure &s)
{
    const auto e = GroupElement::identity();
    return {
        {"associativity",
         [&s](const Triple &t) {
             return std::pair{s.circle(s.circle(t[0], t[1]), t[2]), s.circle(t[0], s.circle(t[1], t[2]))};
         }},
        {"identity", [&s, e](const Triple &t) { return std::pair{s.circle(e, t[0]), t[0]}; }},
        {"identity", [&s, e](const Triple &t) { return std::pair{s.circle(t[0], e), t[0]}; }},
        {"inverse", [&s, e](const Triple &t) { return std::pair{s.circle(t[0], s.circle_inverse(t[0])), e}; }},
        {"inverse", [&s, e](const Triple &t) { return std::pair{s.circle(s.circle_inverse(t[0]), t[0]), e}; }},
        {"compatibility",
         [&s](const Triple &t) {
             const GroupElement lhs = s.circle(t[0], s.additive(t[1], t[2]));
             const GroupElement rhs = s.additive(s.additive(s.circle(t[0], t[1]), grp_inv(t[0])), s.circle(t[0], t[2]));
             return std::pair{lhs, rhs};
         }},
    };
}

} // namespace

BraceVerdict brace_check(const BraceStructure &brace, std::uint64_t seed)
{
    const Triple generic{GroupElement::symbolic("a1", "b1", "c1"), GroupElement::symbolic("a2", "b2", "c2"),
                         GroupElement::symbolic("a3", "b3", "c3")};
    for (const auto &[name, axiom] : brace_axioms(brace)) {
        const auto [lhs, rhs] = axiom(generic);
        if (lhs == rhs)
            continue;
        BraceVerdict verdict{false, name, std::nullopt};
        std::mt19937_64 rng(seed);
        for (int attempt = 0; attempt < 100 && !verdict.witness; ++attempt) {
            const Triple t{random_element(rng), random_element(rng), random_element(rng)};
            try {
                const auto [l, r] = axiom(t);
                if (l != r)
                    verdict.witness = t;
            } catch (const DivisionByZero &) {
            }
        }
        return verdict;
    }
    return {true, {}, std::nullopt};
}

// ---------------------------------------------------------------------------

TransferReport equivalence_transfer_experiment(const OperatorMatrix &R, const AlgebraAutomorphism &psi)
{
    const GroupOperator F = induce(R);
    const OperatorMatrix conjugated = conjugate(R, psi);
    const GroupOperator G = induce(conjugated);

    const GroupMap forward = aut_to_group(psi);
    const GroupMap backward = aut_to_group(aut_inverse(psi));
    const GroupElement g = GroupElement::symbolic("a", "b", "c");
    const GroupElement lhs = forward(F(backward(g)));
    const GroupElement rhs = G(g);

    TransferReport report;
    report.op = R;
    report.automorphism = psi;
    report.conjugated = conjugated;
    report.transfers = lhs == rhs;
    if (!report.transfers)
        report.witness = std::array<Scalar, 3>{lhs.a - rhs.a, lhs.b - rhs.b, lhs.c - rhs.c};
    return report;
}

} // namespace heisrb
