#include "doctest.h"

#include "heisrb/error.hpp"
#include "heisrb/rbo_group.hpp"
#include "support.hpp"

using namespace heisrb;
using heisrb::testing::Rng;

namespace {

Scalar v(const char *name) { return Scalar::var(name); }

const GroupElement g1 = GroupElement::symbolic("a1", "b1", "c1");
const GroupElement g2 = GroupElement::symbolic("a2", "b2", "c2");

constexpr Family kAllFamilies[] = {Family::R1, Family::R2, Family::R3, Family::R4,
                                   Family::P1, Family::P2, Family::P3, Family::P4};

GroupElement constant_identity(const GroupElement &) { return GroupElement::identity(); }

AlgebraAutomorphism random_automorphism(Rng &rng)
{
    auto q = [&] { return Scalar(heisrb::testing::random_rational(rng, 4)); };
    while (true) {
        try {
            return {q(), q(), q(), q(), q(), q()};
        } catch (const SingularAutomorphism &) {
        }
    }
}

} // namespace

TEST_CASE("induce closed form")
{
    const auto zero = induce(OperatorMatrix::zero());
    CHECK(zero(g1).is_identity());
    CHECK(zero(GroupElement{1, 2, 3}).is_identity());

    const auto inv = induce(-OperatorMatrix::identity());
    CHECK(inv(g1) == grp_inv(g1));
    CHECK(inv(GroupElement{1, 1, 1}) == GroupElement{-1, -1, 0});

    // generic R against the displayed matrix, written out independently
    const auto R = OperatorMatrix::generic();
    const auto F = induce(R, false);
    const Scalar a = v("a"), b = v("b"), c = v("c");
    const Scalar r11 = v("r11"), r12 = v("r12"), r13 = v("r13"), r21 = v("r21"), r22 = v("r22"), r23 = v("r23"),
                 r33 = v("r33");
    const GroupElement expected{
        a * r11 + b * r21, a * r12 + b * r22,
        (2 * a * r13 + 2 * b * r23 + b * b * r21 * (r22 - r33) + 2 * c * r33 + a * a * r12 * (r11 + r33) +
         a * b * (r12 * r21 + r11 * (r22 - r33) + (r22 - 1) * r33)) /
            2};
    CHECK(F(GroupElement::symbolic("a", "b", "c")) == expected);

    CHECK_THROWS_AS(induce(R), NotAnRbo);
    CHECK_THROWS_AS(induce(OperatorMatrix::identity()), NotAnRbo);
    CHECK_THROWS_AS(induce(OperatorMatrix::generic(false), false), UnsupportedShape);
    CHECK_THROWS_AS(induce_via_exp(OperatorMatrix::generic(false), g1, false), UnsupportedShape);
}

TEST_CASE("induce_via_exp")
{
    const auto minus = -OperatorMatrix::identity();
    CHECK(induce_via_exp(minus, GroupElement::identity()).is_identity());
    CHECK(induce_via_exp(minus, GroupElement{1, 1, 1}) == GroupElement{-1, -1, 0});

    // 3 coordinates + 7 parameters
    const auto R = OperatorMatrix::generic();
    const auto g = GroupElement::symbolic("a", "b", "c");
    CHECK(induce(R, false)(g) == induce_via_exp(R, g, false));

    for (Family f : kAllFamilies) {
        CAPTURE(to_string(f));
        const auto Rf = make_family(f);
        CHECK(induce(Rf)(g) == induce_via_exp(Rf, g));
    }
}

TEST_CASE("group RB identity")
{
    CHECK(is_group_rbo(constant_identity));
    CHECK(is_group_rbo([](const GroupElement &g) { return grp_inv(g); }));
    const auto id = is_group_rbo([](const GroupElement &g) { return g; });
    REQUIRE_FALSE(id);
    REQUIRE(id.witness);
    CHECK((*id.witness)[0] != (*id.witness)[1]);
    // by hand: g = h = (1,0,0) satisfies the identity, g = (1,0,0), h = (0,1,0) does not:
    // F(g)F(h) = (1,1,1) but g g h g^-1 = (1,1,2)
    auto self = [](const GroupElement &g) { return g; };
    const GroupElement x{1, 0, 0};
    const GroupElement y{0, 1, 0};
    CHECK(grp_mul(x, x) == circle_via_definition(self, x, x));
    CHECK(grp_mul(x, y) == GroupElement{1, 1, 1});
    CHECK(circle_via_definition(self, x, y) == GroupElement{1, 1, 2});

    for (Family f : kAllFamilies) {
        CAPTURE(to_string(f));
        CHECK(is_group_rbo(induce(make_family(f)).as_map()));
    }
    CHECK_FALSE(is_group_rbo(induce(OperatorMatrix::generic(), false).as_map()));

    const auto p4 = induce(make_family(Family::P4, {{"r11", 2}, {"r13", 1}, {"r23", -3}}));
    CHECK(is_group_rbo_sampled(p4.as_map(), 50, 7));
    CHECK_FALSE(is_group_rbo_sampled([](const GroupElement &g) { return g; }, 50, 7));
}

TEST_CASE("descendant multiplication")
{
    // fully symbolic: 6 coordinates + 7 parameters
    const auto R = OperatorMatrix::generic();
    const auto F = induce(R, false);
    CHECK(descendant_mul(R, g1, g2) == circle_via_definition(F.as_map(), g1, g2));

    const auto zero = induce(OperatorMatrix::zero());
    CHECK(circle_via_definition(zero.as_map(), g1, g2) == grp_mul(g1, g2));
    OperatorMatrix upper = OperatorMatrix::zero();
    upper.r(1, 3) = v("r13");
    upper.r(2, 3) = v("r23");
    CHECK(is_rbo_weight1(upper));
    CHECK(descendant_mul(upper, g1, g2) == grp_mul(g1, g2));

    const auto minus = -OperatorMatrix::identity();
    CHECK(descendant_mul(minus, g1, g2) == circle_via_definition(induce(minus).as_map(), g1, g2));
    CHECK(descendant_mul(minus, g1, g2) == grp_mul(g2, g1));

    CHECK(circle_via_definition(F.as_map(), GroupElement::identity(), g2) == g2);

    // leading coordinates add
    const auto prod = descendant_mul(make_family(Family::P4), g1, g2);
    CHECK(prod.a == g1.a + g2.a);
    CHECK(prod.b == g1.b + g2.b);
}

TEST_CASE("circle tables")
{
    auto table = [](Family f, std::map<std::string, Scalar> params = {}) {
        return theorem_main_table(complete_family(f, std::move(params)));
    };
    CHECK(table(Family::P1) == Scalar::parse("c1+c2+a1*(b2*(1+(1+r22)*r33/(r22-r33)))-b1*a2*r22"));
    CHECK(table(Family::P2) == Scalar::parse("c1+c2+a1*b2*(1+r11)+b1*a2"));
    CHECK(table(Family::P3) == Scalar::parse("c1+c2+a1*b2*(1+r11)"));
    CHECK(table(Family::P4) == Scalar::parse("c1+c2+a1*(b2*(1+r11)-a2)-b1*a2*r11"));
    CHECK(table(Family::P2) == Scalar::parse("c1+c2+a1*b2*(1+r11)+a2*b1"));

    CHECK(table(Family::P4, {{"r11", 0}}) == Scalar::parse("c1+c2+a1*(b2-a2)"));
    CHECK(table(Family::P3, {{"r11", 0}}) == Scalar::parse("c1+c2+a1*b2"));
    CHECK(table(Family::P1, {{"r22", 2}, {"r33", 1}}) == Scalar::parse("c1+c2+4*a1*b2-2*b1*a2"));
    CHECK_THROWS_AS(table(Family::R1), Error);
    CHECK_THROWS_AS(table(Family::P1, {{"r22", 1}, {"r33", 1}}), SideConditionViolated);
}

TEST_CASE("brace check")
{
    CHECK(brace_check(descendant_brace(induce(OperatorMatrix::zero()))));
    for (Family f : kAllFamilies) {
        CAPTURE(to_string(f));
        CHECK(brace_check(descendant_brace(induce(make_family(f)))));
    }

    // circle inverse is (-a, -b, .)
    const auto brace = descendant_brace(induce(make_family(Family::P1)));
    const auto inv = brace.circle_inverse(g1);
    CHECK(inv.a == -g1.a);
    CHECK(inv.b == -g1.b);

    // corrupted circle: r11 -> r11 + 1 in the closed form, F unchanged
    for (Family f : {Family::P1, Family::P2, Family::P3, Family::P4}) {
        CAPTURE(to_string(f));
        const auto R = make_family(f);
        OperatorMatrix shifted = R;
        shifted.r(1, 1) = R.r(1, 1) + 1;
        BraceStructure bad = descendant_brace(induce(R));
        bad.circle = [shifted](const GroupElement &g, const GroupElement &h) { return descendant_mul(shifted, g, h); };
        const auto verdict = brace_check(bad, 11);
        CHECK_FALSE(verdict);
        CHECK_FALSE(verdict.failed.empty());
        REQUIRE(verdict.witness);
        for (const auto &w : *verdict.witness)
            CHECK(w.a.is_numeric());
    }
}

TEST_CASE("equivalence transfer experiment")
{
    const auto p1 = make_family(Family::P1, {{"r22", 2}, {"r33", 1}});
    const auto same = equivalence_transfer_experiment(p1, AlgebraAutomorphism::identity());
    CHECK(same.transfers);
    CHECK_FALSE(same.witness);

    Rng rng(4);
    const auto minus = -OperatorMatrix::identity();
    for (int k = 0; k < 5; ++k)
        CHECK(equivalence_transfer_experiment(minus, random_automorphism(rng)).transfers);

    const auto report = equivalence_transfer_experiment(p1, AlgebraAutomorphism(2, 0, 0, 3));
    CHECK(report.transfers == !report.witness.has_value());
    CHECK(report.conjugated == conjugate(p1, AlgebraAutomorphism(2, 0, 0, 3)));
    MESSAGE("P1(2,1) under diag(2,3): ", std::string(report.transfers ? "transfers" : "does not transfer"));

    CHECK_THROWS_AS(equivalence_transfer_experiment(OperatorMatrix::identity(), AlgebraAutomorphism::identity()),
                    NotAnRbo);
}

TEST_CASE("circle table rendering")
{
    CHECK(render_circle_table(theorem_main_table(complete_family(Family::P2))) == "c1+c2+a1*b2*(r11+1)+a2*b1");
    CHECK(render_circle_table(theorem_main_table(complete_family(Family::P4, {{"r11", 0}}))) == "c1+c2-a1*a2+a1*b2");
    CHECK(render_circle_table(Scalar(0)) == "0");
    for (Family f : {Family::P1, Family::P2, Family::P3, Family::P4}) {
        const Scalar q = theorem_main_table(complete_family(f));
        CHECK(Scalar::parse(render_circle_table(q)) == q);
    }
    Rng rng(6);
    for (int k = 0; k < 30; ++k) {
        const Scalar q = heisrb::testing::random_poly(rng, {"a1", "b2", "r11"}, 4, 2) /
                         (Scalar(heisrb::testing::random_rational(rng)) + v("r22"));
        CHECK(Scalar::parse(render_circle_table(q)) == q);
    }
}

TEST_CASE("equivalence experiment with symbolic automorphism")
{
    // the outcome is recorded, not assumed
    const AlgebraAutomorphism psi(v("m11"), v("m12"), v("m21"), v("m22"), v("m13"), v("m23"));
    for (Family f : kAllFamilies) {
        const auto report = equivalence_transfer_experiment(make_family(f), psi);
        CHECK(report.transfers == !report.witness.has_value());
        MESSAGE(to_string(f), " under a generic automorphism: ",
                std::string(report.transfers ? "transfers" : "does not transfer"));
    }
}
