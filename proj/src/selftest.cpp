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

#include "heisrb/selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "heisrb/error.hpp"
#include "heisrb/rbo_group.hpp"
#include "heisrb/semidirect.hpp"

namespace heisrb {

namespace {

using Rng = std::mt19937_64;

struct Outcome {
    bool passed = true;
    std::string detail;

    /// Records the first failure only.
    void require(bool condition, const std::string &what)
    {
        if (!condition && passed) {
            passed = false;
            detail = what;
        }
    }
};

struct Check {
    std::string id;
    std::string name;
    std::function<Outcome(Rng &)> body;
};

constexpr Family kAllFamilies[] = {Family::R1, Family::R2, Family::R3, Family::R4,
                                   Family::P1, Family::P2, Family::P3, Family::P4};
constexpr Family kPFamilies[] = {Family::P1, Family::P2, Family::P3, Family::P4};

Scalar v(const char *name) { return Scalar::var(name); }

Rational random_rational(Rng &rng, std::int64_t bound = 9)
{
    return {std::uniform_int_distribution<std::int64_t>(-bound, bound)(rng),
            std::uniform_int_distribution<std::int64_t>(1, bound)(rng)};
}

Scalar random_numeric(Rng &rng)
{
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
        return GaussianRational(random_rational(rng), random_rational(rng));
    return random_rational(rng);
}

AlgebraElement random_algebra(Rng &rng) { return {random_numeric(rng), random_numeric(rng), random_numeric(rng)}; }

OperatorMatrix random_matrix(Rng &rng)
{
    OperatorMatrix m;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            m.r(i, j) = random_numeric(rng);
    return m;
}

FamilyTag random_tag(Rng &rng, Family f)
{
    while (true) {
        std::map<std::string, Scalar> params;
        for (const auto &name : family_parameters(f))
            params.emplace(name, Scalar(random_rational(rng, 5)));
        try {
            return complete_family(f, params);
        } catch (const SideConditionViolated &) {
        }
    }
}

AlgebraAutomorphism random_automorphism(Rng &rng)
{
    auto q = [&] { return Scalar(random_rational(rng, 4)); };
    while (true) {
        try {
            return {q(), q(), q(), q(), q(), q()};
        } catch (const SingularAutomorphism &) {
        }
    }
}

std::string name_of(Family f) { return std::string(to_string(f)); }

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// acceptance properties

Outcome family_soundness(Rng &)
{
    Outcome out;
    for (Family f : kAllFamilies) {
        const auto start = std::chrono::steady_clock::now();
        const bool holds = is_rbo_weight1(make_family(f)).holds;
        const double took = seconds_since(start);
        out.require(holds, name_of(f) + " fails the weight-1 identity");
        out.require(took < 1.0, name_of(f) + " took " + std::to_string(took) + " s");
    }
    return out;
}

Outcome exhaustive_search(Rng &)
{
    Outcome out;
    int found = 0;
    std::map<Family, int> counts;
    for (int code = 0; code < 19683; ++code) {
        OperatorMatrix R;
        int c = code;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                R.r(i, j) = c % 3 - 1;
                c /= 3;
            }
        if (!is_rbo_weight1(R))
            continue;
        ++found;
        out.require(R.has_classified_shape(), "RBO with r31 or r32 nonzero: " + to_string(R));
        if (!R.has_classified_shape())
            continue;
        const auto cls = classify(R);
        out.require(make_family(cls.r_family) == R, "classify mismatch for " + to_string(R));
        ++counts[cls.r_family.family];
    }
    if (out.passed) {
        std::ostringstream s;
        s << found << " RBOs of 19683:";
        for (const auto &[f, n] : counts)
            s << " " << to_string(f) << "=" << n;
        out.detail = s.str();
    }
    return out;
}

Outcome derivation_equations(Rng &)
{
    Outcome out;
    // diagonal-plus-upper shape
    OperatorMatrix diagonal = OperatorMatrix::generic();
    diagonal.r(1, 2) = 0;
    diagonal.r(2, 1) = 0;
    const Scalar first_eq = v("r11") * v("r22") - (v("r11") + v("r22") + 1) * v("r33");
    // Jordan-block shape
    OperatorMatrix block = OperatorMatrix::generic();
    block.r(1, 2) = 1;
    block.r(2, 1) = 0;
    block.r(2, 2) = v("r11");
    const Scalar block_eq = v("r11") * v("r11") - (2 * v("r11") + 1) * v("r33");

    for (const auto &[shape, equation, label] :
         {std::tuple{diagonal, first_eq, "diagonal"}, std::tuple{block, block_eq, "Jordan block"}}) {
        const auto verdict = is_rbo_weight1(shape);
        out.require(!verdict.holds && verdict.witness && verdict.witness->pair == "X,Y",
                    std::string(label) + ": generic shape should fail only through (X,Y)");
        if (!verdict.witness)
            continue;
        const AlgebraElement diff = verdict.witness->lhs - verdict.witness->rhs;
        out.require(diff.a.is_zero() && diff.b.is_zero() && diff.c == equation,
                    std::string(label) + ": Z-coefficient difference is " + diff.c.to_string());
        // the remaining pairs hold identically, so the identity is equivalent to the equation
        for (const auto &[x, y] : {std::pair{AlgebraElement::X(), AlgebraElement::Z()},
                                   std::pair{AlgebraElement::Y(), AlgebraElement::Z()}}) {
            const auto rx = apply(shape, x);
            const auto ry = apply(shape, y);
            out.require(bracket(rx, ry) == apply(shape, bracket(rx, y) + bracket(x, ry) + bracket(x, y)),
                        std::string(label) + ": pair with Z does not vanish");
        }
    }
    // converse through the constructors
    const auto p1 = make_family(Family::P1);
    out.require(is_rbo_weight1(p1).holds, "P1 fails");
    out.require((p1.r(1, 1) * p1.r(2, 2) - (p1.r(1, 1) + p1.r(2, 2) + 1) * p1.r(3, 3)).is_zero(),
                "P1 entries violate the diagonal equation");
    const auto p4 = make_family(Family::P4);
    out.require(is_rbo_weight1(p4).holds, "P4 fails");
    out.require((p4.r(1, 1) * p4.r(1, 1) - (2 * p4.r(1, 1) + 1) * p4.r(3, 3)).is_zero(),
                "P4 entries violate the block equation");
    return out;
}

Outcome bch_law(Rng &rng)
{
    Outcome out;
    const Scalar half = Scalar::ratio(1, 2);
    const auto x = AlgebraElement::symbolic("a1", "b1", "c1");
    const auto y = AlgebraElement::symbolic("a2", "b2", "c2");
    out.require(grp_mul(exp(x), exp(y)) == exp(x + y + half * bracket(x, y)), "symbolic BCH fails");
    for (int k = 0; k < 1000 && out.passed; ++k) {
        const auto p = random_algebra(rng);
        const auto q = random_algebra(rng);
        out.require(grp_mul(exp(p), exp(q)) == exp(p + q + half * bracket(p, q)),
                    "BCH fails at x=" + to_string(p) + ", y=" + to_string(q));
    }
    return out;
}

Outcome semidirect_exponential(Rng &)
{
    Outcome out;
    const SemiAlgebraElement u{AlgebraElement::symbolic("a1", "b1", "c1"), AlgebraElement::symbolic("a2", "b2", "c2")};
    const auto general = exp_semi_general(u);
    const auto closed = exp_semi(u);
    out.require(general == closed, "general " + to_string(general) + " vs closed " + to_string(closed));
    return out;
}

Outcome graph_closure(Rng &)
{
    Outcome out;
    const auto x = AlgebraElement::symbolic("a1", "b1", "c1");
    const auto y = AlgebraElement::symbolic("a2", "b2", "c2");
    for (Family f : kAllFamilies) {
        const auto R = make_family(f);
        out.require(semi_grp_mul(exp_graph(R, x), exp_graph(R, y)) == exp_graph(R, graph_product_parameter(R, x, y)),
                    name_of(f) + ": exp-graph product does not close with z");
        const auto br = semi_alg_bracket(graph(R, x), graph(R, y));
        out.require(br == graph(R, br.second), name_of(f) + ": graph is not a subalgebra");
    }
    return out;
}

Outcome p_bijection(Rng &)
{
    Outcome out;
    const auto R = OperatorMatrix::generic();
    const auto x = AlgebraElement::symbolic("a", "b", "c");
    out.require(p_map(R, p_inverse(R, x)) == x, "p_map after p_inverse is not the identity");
    out.require(p_inverse(R, p_map(R, x)) == x, "p_inverse after p_map is not the identity");
    return out;
}

Outcome induced_oracles(Rng &)
{
    Outcome out;
    const auto g = GroupElement::symbolic("a", "b", "c");
    const auto R = OperatorMatrix::generic();
    const auto closed = induce(R, false)(g);
    const auto routed = induce_via_exp(R, g, false);
    out.require(closed == routed, "closed form " + to_string(closed) + " vs exp route " + to_string(routed));
    out.require(induce(-OperatorMatrix::identity())(g) == grp_inv(g), "induce(-I) is not inversion");
    out.require(induce(OperatorMatrix::zero())(g).is_identity(), "induce(0) is not constant");
    return out;
}

Outcome group_axiom(Rng &)
{
    Outcome out;
    for (Family f : kAllFamilies)
        out.require(is_group_rbo(induce(make_family(f)).as_map()).holds, name_of(f) + ": group identity fails");
    return out;
}

Outcome descendant_law(Rng &)
{
    Outcome out;
    const auto g = GroupElement::symbolic("a1", "b1", "c1");
    const auto h = GroupElement::symbolic("a2", "b2", "c2");
    const auto R = OperatorMatrix::generic();
    out.require(descendant_mul(R, g, h) == circle_via_definition(induce(R, false).as_map(), g, h),
                "closed circle product differs from the definition");
    for (Family f : kAllFamilies)
        out.require(descendant_mul(make_family(f), g, h) ==
                        circle_via_definition(induce(make_family(f)).as_map(), g, h),
                    name_of(f) + ": circle product differs from the definition");
    const std::pair<Family, const char *> table[] = {
        {Family::P1, "c1+c2+a1*(b2*(1+(1+r22)*r33/(r22-r33)))-b1*a2*r22"},
        {Family::P2, "c1+c2+a1*b2*(1+r11)+b1*a2"},
        {Family::P3, "c1+c2+a1*b2*(1+r11)"},
        {Family::P4, "c1+c2+a1*(b2*(1+r11)-a2)-b1*a2*r11"},
    };
    for (const auto &[f, literal] : table) {
        const std::string got = theorem_main_table(complete_family(f)).to_string();
        const std::string want = Scalar::parse(literal).to_string();
        out.require(got == want, name_of(f) + ": " + got + " != " + want);
    }
    return out;
}

Outcome brace_compatibility(Rng &rng)
{
    Outcome out;
    const std::uint64_t seed = rng();
    for (Family f : kAllFamilies) {
        const auto verdict = brace_check(descendant_brace(induce(make_family(f))), seed);
        out.require(verdict.holds, name_of(f) + ": brace axiom " + verdict.failed + " fails");
    }
    for (Family f : kPFamilies) {
        const auto R = make_family(f);
        OperatorMatrix shifted = R;
        shifted.r(1, 1) = R.r(1, 1) + 1;
        BraceStructure bad = descendant_brace(induce(R));
        bad.circle = [shifted](const GroupElement &g, const GroupElement &h) { return descendant_mul(shifted, g, h); };
        const auto verdict = brace_check(bad, seed);
        out.require(!verdict.holds && verdict.witness.has_value(), name_of(f) + ": mutated circle not caught");
    }
    return out;
}

Outcome weight_duality(Rng &rng)
{
    Outcome out;
    for (int k = 0; k < 500 && out.passed; ++k) {
        // a third are genuine RBOs so both verdicts occur
        OperatorMatrix R = k % 3 == 0 ? make_family(random_tag(rng, kAllFamilies[k % 8])) : random_matrix(rng);
        if (k % 3 == 1) {
            R.r(3, 1) = 0;
            R.r(3, 2) = 0;
        }
        out.require(is_rbo_weight1(R).holds == is_rbo_weight_minus1(-R).holds,
                    "duality fails for " + to_string(R));
    }
    return out;
}

Outcome jordan_stability(Rng &rng)
{
    Outcome out;
    for (int k = 0; k < 100 && out.passed; ++k) {
        const auto R = make_family(random_tag(rng, kPFamilies[k % 4]));
        const auto psi = random_automorphism(rng);
        const auto C = conjugate(R, psi);
        if (!C.has_classified_shape())
            continue;
        const auto a = classify(R);
        const auto b = classify(C);
        out.require(a.jordan && b.jordan, "Jordan form missing for " + to_string(R));
        if (!a.jordan || !b.jordan)
            continue;
        auto multiset = [](const JordanForm &j) {
            auto e = j.eigenvalues;
            if (e[0] < e[1])
                std::swap(e[0], e[1]);
            return e;
        };
        out.require(multiset(*a.jordan) == multiset(*b.jordan) && a.jordan->note == b.jordan->note,
                    "classification changed under " + to_string(psi) + " for " + to_string(R));
    }
    return out;
}

// ---------------------------------------------------------------------------
// per-module invariants beyond the acceptance list

Outcome scalar_invariants(Rng &rng)
{
    Outcome out;
    for (int k = 0; k < 50; ++k) {
        const Scalar p = random_numeric(rng) * v("x") + random_numeric(rng);
        const Scalar q = random_numeric(rng) + v("y");
        const Scalar s = (p * q + 1) / q;
        out.require(Scalar::parse(s.to_string()) == s, "render/parse round trip fails for " + s.to_string());
        out.require((p + q) * s == p * s + q * s, "distributivity fails");
        if (!q.is_zero())
            out.require(s * q / q == s, "division fails");
    }
    return out;
}

Outcome heisenberg_invariants(Rng &rng)
{
    Outcome out;
    const auto x = AlgebraElement::symbolic("a1", "b1", "c1");
    const auto y = AlgebraElement::symbolic("a2", "b2", "c2");
    const auto z = AlgebraElement::symbolic("a3", "b3", "c3");
    out.require((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero(),
                "Jacobi identity fails");
    const auto g = exp(x);
    const auto h = exp(y);
    const auto k = exp(z);
    out.require(grp_mul(grp_mul(g, h), k) == grp_mul(g, grp_mul(h, k)), "group law is not associative");
    out.require(log(exp(x)) == x && exp(log(g)) == g, "exp and log are not inverse");
    for (int t = 0; t < 20; ++t) {
        const auto psi = random_automorphism(rng);
        const auto big = aut_to_group(psi);
        out.require(big(grp_mul(g, h)) == grp_mul(big(g), big(h)), "automorphism is not a group homomorphism");
    }
    return out;
}

Outcome rbo_algebra_invariants(Rng &rng)
{
    Outcome out;
    for (int k = 0; k < 100; ++k) {
        const Family f = kAllFamilies[k % 8];
        const auto tag = random_tag(rng, f);
        const auto C = conjugate(make_family(tag), random_automorphism(rng));
        out.require(is_rbo_weight1(C).holds, "conjugate of " + name_of(f) + " is not an RBO");
        const auto cls = classify(C);
        if (cls.p_family && cls.to_canonical)
            out.require(conjugate(C, *cls.to_canonical) == make_family(*cls.p_family),
                        "canonical automorphism does not reach the P-family");
    }
    return out;
}

Outcome semidirect_invariants(Rng &)
{
    Outcome out;
    const SemiAlgebraElement u{AlgebraElement::symbolic("a1", "b1", "c1"), AlgebraElement::symbolic("d1", "e1", "f1")};
    const SemiAlgebraElement w{AlgebraElement::symbolic("a2", "b2", "c2"), AlgebraElement::symbolic("d2", "e2", "f2")};
    const SemiAlgebraElement s{AlgebraElement::symbolic("a3", "b3", "c3"), AlgebraElement::symbolic("d3", "e3", "f3")};
    out.require((semi_alg_bracket(u, semi_alg_bracket(w, s)) + semi_alg_bracket(w, semi_alg_bracket(s, u)) +
                 semi_alg_bracket(s, semi_alg_bracket(u, w)))
                    .is_zero(),
                "semidirect Jacobi identity fails");
    const auto [p1, q1] = phi_alg(u);
    const auto [p2, q2] = phi_alg(w);
    out.require(phi_alg(semi_alg_bracket(u, w)) == AlgebraPair{bracket(p1, p2), bracket(q1, q2)},
                "phi_alg is not a Lie homomorphism");
    const SemiGroupElement g{exp(u.first), exp(u.second)};
    const SemiGroupElement h{exp(w.first), exp(w.second)};
    const auto [x1, y1] = phi_grp(g);
    const auto [x2, y2] = phi_grp(h);
    out.require(phi_grp(semi_grp_mul(g, h)) == GroupPair{grp_mul(x1, x2), grp_mul(y1, y2)},
                "phi_grp is not a group homomorphism");
    return out;
}

Outcome rbo_group_invariants(Rng &rng)
{
    Outcome out;
    const auto g = GroupElement::symbolic("a", "b", "c");
    for (Family f : kAllFamilies) {
        const auto R = make_family(f);
        out.require(induce(R)(g) == induce_via_exp(R, g), name_of(f) + ": closed form and exp route differ");
    }
    int transfers = 0;
    for (int k = 0; k < 20; ++k) {
        const auto R = make_family(random_tag(rng, kAllFamilies[k % 8]));
        if (equivalence_transfer_experiment(R, random_automorphism(rng)).transfers)
            ++transfers;
    }
    if (out.passed)
        out.detail = "equivalence experiment: " + std::to_string(transfers) + "/20 random pairs transfer";
    return out;
}

std::vector<Check> acceptance_checks()
{
    return {
        {"1", "family soundness", family_soundness},
        {"2", "exhaustive {-1,0,1} search", exhaustive_search},
        {"3", "derivation equations", derivation_equations},
        {"4", "BCH law", bch_law},
        {"5", "semidirect exponential", semidirect_exponential},
        {"6", "graph group closure", graph_closure},
        {"7", "P-map bijection", p_bijection},
        {"8", "induced operator oracles", induced_oracles},
        {"9", "group RB identity", group_axiom},
        {"10", "descendant law and circle tables", descendant_law},
        {"11", "brace compatibility", brace_compatibility},
        {"12", "weight duality", weight_duality},
        {"13", "Jordan classification stability", jordan_stability},
    };
}

std::vector<Check> module_checks()
{
    return {
        {"m:scalar", "scalar invariants", scalar_invariants},
        {"m:heisenberg", "heisenberg invariants", heisenberg_invariants},
        {"m:rbo_algebra", "rbo_algebra invariants", rbo_algebra_invariants},
        {"m:semidirect", "semidirect invariants", semidirect_invariants},
        {"m:rbo_group", "rbo_group invariants", rbo_group_invariants},
    };
}

std::vector<CheckResult> run_checks(const std::vector<Check> &checks, std::uint64_t seed, const CheckCallback &cb)
{
    std::vector<CheckResult> results;
    for (std::size_t k = 0; k < checks.size(); ++k) {
        // each check gets its own stream so results do not depend on which others ran
        Rng rng(seed + 0x9e3779b97f4a7c15ULL * (k + 1));
        const auto start = std::chrono::steady_clock::now();
        CheckResult r{checks[k].id, checks[k].name};
        try {
            const Outcome o = checks[k].body(rng);
            r.passed = o.passed;
            r.detail = o.detail;
        } catch (const std::exception &e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = seconds_since(start);
        if (cb)
            cb(r);
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace

std::vector<CheckResult> run_acceptance(std::uint64_t seed, const CheckCallback &on_result)
{
    return run_checks(acceptance_checks(), seed, on_result);
}

std::vector<CheckResult> run_selftest(std::uint64_t seed, const CheckCallback &on_result)
{
    auto checks = acceptance_checks();
    for (auto &c : module_checks())
        checks.push_back(std::move(c));
    return run_checks(checks, seed, on_result);
}

} // namespace heisrb
