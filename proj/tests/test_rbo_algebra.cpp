#include "doctest.h"

#include "heisrb/error.hpp"
#include "heisrb/rbo_algebra.hpp"
#include "support.hpp"

using namespace heisrb;
using heisrb::testing::Rng;

namespace {

Scalar v(const char *name) { return Scalar::var(name); }

OperatorMatrix diag(Scalar p, Scalar q, Scalar s)
{
    OperatorMatrix m;
    m.r(1, 1) = std::move(p);
    m.r(2, 2) = std::move(q);
    m.r(3, 3) = std::move(s);
    return m;
}

OperatorMatrix random_matrix(Rng &rng, bool classified_shape)
{
    OperatorMatrix m;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            m.r(i, j) = heisrb::testing::random_numeric(rng);
    if (classified_shape) {
        m.r(3, 1) = 0;
        m.r(3, 2) = 0;
    }
    return m;
}

AlgebraElement random_element(Rng &rng)
{
    return {heisrb::testing::random_numeric(rng), heisrb::testing::random_numeric(rng),
            heisrb::testing::random_numeric(rng)};
}

AlgebraAutomorphism random_automorphism(Rng &rng, bool translations = true)
{
    auto q = [&] { return Scalar(heisrb::testing::random_rational(rng, 4)); };
    while (true) {
        try {
            return {q(), q(), q(), q(), translations ? q() : Scalar(0), translations ? q() : Scalar(0)};
        } catch (const SingularAutomorphism &) {
        }
    }
}

// Oracle: the RB identity on arbitrary elements, evaluated directly.
bool axiom_on(const OperatorMatrix &R, const AlgebraElement &x, const AlgebraElement &y)
{
    const auto rx = apply(R, x);
    const auto ry = apply(R, y);
    return bracket(rx, ry) == apply(R, bracket(rx, y) + bracket(x, ry) + bracket(x, y));
}

// Oracle: psi R psi^-1 column by column through aut_apply.
OperatorMatrix conjugate_oracle(const OperatorMatrix &R, const AlgebraAutomorphism &psi)
{
    const auto inv = aut_inverse(psi);
    const AlgebraElement basis[] = {AlgebraElement::X(), AlgebraElement::Y(), AlgebraElement::Z()};
    OperatorMatrix out;
    for (int i = 0; i < 3; ++i) {
        const auto img = aut_apply(psi, apply(R, aut_apply(inv, basis[i])));
        out.r(i + 1, 1) = img.a;
        out.r(i + 1, 2) = img.b;
        out.r(i + 1, 3) = img.c;
    }
    return out;
}

Block2 mul2(const Block2 &p, const Block2 &q)
{
    Block2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
    return out;
}

Block2 inv2(const Block2 &p)
{
    const Scalar det = p[0][0] * p[1][1] - p[0][1] * p[1][0];
    return {{{p[1][1] / det, -p[0][1] / det}, {-p[1][0] / det, p[0][0] / det}}};
}

Block2 block(Scalar p, Scalar q, Scalar s, Scalar t) { return {{{p, q}, {s, t}}}; }

constexpr Family kAllFamilies[] = {Family::R1, Family::R2, Family::R3, Family::R4,
                                   Family::P1, Family::P2, Family::P3, Family::P4};

/// Random numeric parameters that respect the family's side condition.
FamilyTag random_tag(Rng &rng, Family f)
{
    while (true) {
        std::map<std::string, Scalar> params;
        for (const auto &name : family_parameters(f))
            params.emplace(name, Scalar(heisrb::testing::random_rational(rng, 5)));
        try {
            return complete_family(f, params);
        } catch (const SideConditionViolated &) {
        }
    }
}

} // namespace

TEST_CASE("apply")
{
    CHECK(apply(OperatorMatrix::zero(), AlgebraElement{1, 2, 3}).is_zero());
    OperatorMatrix only;
    only.r(1, 1) = 1;
    CHECK(apply(only, AlgebraElement::X()) == AlgebraElement::X());

    const auto R = OperatorMatrix::generic();
    const auto x = AlgebraElement::symbolic("a", "b", "c");
    CHECK(apply(R, x) == AlgebraElement{v("a") * v("r11") + v("b") * v("r21"), v("a") * v("r12") + v("b") * v("r22"),
                                        v("a") * v("r13") + v("b") * v("r23") + v("c") * v("r33")});
    CHECK(apply(R, AlgebraElement::X()) == AlgebraElement{v("r11"), v("r12"), v("r13")});
}

TEST_CASE("RB identity examples")
{
    CHECK(is_rbo_weight1(OperatorMatrix::zero()));
    CHECK(is_rbo_weight1(-OperatorMatrix::identity()));
    const auto id = is_rbo_weight1(OperatorMatrix::identity());
    REQUIRE_FALSE(id);
    REQUIRE(id.witness);
    CHECK(id.witness->pair == "X,Y");
    CHECK(id.witness->lhs == AlgebraElement{0, 0, 1});
    CHECK(id.witness->rhs == AlgebraElement{0, 0, 3});

    CHECK(is_rbo_weight_minus1(OperatorMatrix::zero()));
    CHECK(is_rbo_weight_minus1(OperatorMatrix::identity()));
    CHECK_FALSE(is_rbo_weight_minus1(-OperatorMatrix::identity()));
}

TEST_CASE("basis pairs decide the identity")
{
    Rng rng(17);
    int agree = 0;
    for (int k = 0; k < 200; ++k) {
        // half of the samples are RBOs so both verdicts get exercised
        const OperatorMatrix R = k % 2 == 0 ? random_matrix(rng, k % 4 == 0)
                                            : make_family(random_tag(rng, kAllFamilies[k / 2 % 8]));
        const bool verdict = is_rbo_weight1(R).holds;
        bool all = true;
        for (int t = 0; t < 5; ++t)
            all = all && axiom_on(R, random_element(rng), random_element(rng));
        CHECK(verdict == all);
        agree += verdict ? 1 : 0;
    }
    CHECK(agree >= 100);
}

TEST_CASE("family examples")
{
    const auto p1 = make_family(Family::P1, {{"r22", 2}, {"r33", 1}});
    CHECK(p1.r(1, 1) == Scalar(3));
    CHECK(p1.r(2, 2) == Scalar(2));
    CHECK(p1.r(3, 3) == Scalar(1));
    CHECK(p1.r(1, 3) == v("r13"));
    CHECK(p1.r(2, 3) == v("r23"));
    CHECK((3 + 2 + 1) * 1 == 3 * 2);
    CHECK(is_rbo_weight1(p1));

    const auto p4 = make_family(Family::P4, {{"r11", 1}});
    CHECK(p4.r(3, 3) == Scalar::ratio(1, 3));
    CHECK(p4.r(1, 2) == Scalar(1));

    CHECK(make_family(Family::P3, {{"r11", 0}, {"r13", 0}, {"r23", 0}}) == OperatorMatrix::zero());

    CHECK_THROWS_AS(make_family(Family::P1, {{"r22", 2}, {"r33", 2}}), SideConditionViolated);
    CHECK_THROWS_AS(make_family(Family::P4, {{"r11", Scalar::ratio(-1, 2)}}), SideConditionViolated);
    CHECK_THROWS_AS(make_family(Family::R2, {{"r21", 0}}), SideConditionViolated);
    CHECK_THROWS_AS(make_family(Family::R1, {{"r11", v("t")}, {"r33", v("t")}}), SideConditionViolated);
    CHECK_THROWS_AS(make_family(Family::P2, {{"r22", 1}}), Error);
    CHECK_THROWS_AS(family_from_string("P5"), Error);
    CHECK(family_from_string("R3") == Family::R3);
    CHECK(to_string(Family::P4) == "P4");

    const auto tag = complete_family(Family::P1);
    REQUIRE(tag.excluded.size() == 1);
    CHECK(tag.excluded[0] == v("r22") - v("r33"));
    CHECK(complete_family(Family::P1, {{"r22", 2}, {"r33", 1}}).excluded.empty());
    CHECK(complete_family(Family::P3).excluded.empty());
}

TEST_CASE("family soundness")
{
    for (Family f : kAllFamilies) {
        CAPTURE(to_string(f));
        const auto R = make_family(f);
        CHECK(is_rbo_weight1(R));
        CHECK(R.has_classified_shape());
    }
    // partially specialised families stay sound
    CHECK(is_rbo_weight1(make_family(Family::R1, {{"r33", -1}, {"r12", Scalar::imaginary_unit()}})));
    CHECK(is_rbo_weight1(make_family(Family::P4, {{"r11", Scalar::ratio(2, 7)}})));
}

TEST_CASE("derivation equations")
{
    // diagonal-plus-upper shape with r12 = r21 = 0
    OperatorMatrix diagonal = OperatorMatrix::generic();
    diagonal.r(1, 2) = 0;
    diagonal.r(2, 1) = 0;
    const auto dv = is_rbo_weight1(diagonal);
    REQUIRE_FALSE(dv);
    REQUIRE(dv.witness);
    CHECK(dv.witness->pair == "X,Y");
    CHECK(dv.witness->lhs.c - dv.witness->rhs.c == v("r11") * v("r22") - (v("r11") + v("r22") + 1) * v("r33"));
    // the other basis pairs hold identically on this shape
    CHECK(axiom_on(diagonal, AlgebraElement::X(), AlgebraElement::Z()));
    CHECK(axiom_on(diagonal, AlgebraElement::Y(), AlgebraElement::Z()));

    OperatorMatrix jordan = OperatorMatrix::generic();
    jordan.r(1, 2) = 1;
    jordan.r(2, 1) = 0;
    jordan.r(2, 2) = v("r11");
    const auto jv = is_rbo_weight1(jordan);
    REQUIRE_FALSE(jv);
    CHECK(jv.witness->lhs.c - jv.witness->rhs.c == v("r11") * v("r11") - (2 * v("r11") + 1) * v("r33"));

    // solving the equations gives exactly P1 and P4
    CHECK(is_rbo_weight1(make_family(Family::P1)));
    CHECK(is_rbo_weight1(make_family(Family::P4)));

    Rng rng(5);
    for (int k = 0; k < 100; ++k) {
        const Scalar p = heisrb::testing::random_rational(rng, 3);
        const Scalar q = heisrb::testing::random_rational(rng, 3);
        const Scalar s = heisrb::testing::random_rational(rng, 3);
        const auto R = diag(p, q, s);
        CHECK(is_rbo_weight1(R).holds == ((p + q + 1) * s == p * q));
    }
}

TEST_CASE("conjugate")
{
    const auto R = make_family(Family::R1, {{"r11", 2}, {"r12", 1}, {"r13", 3}, {"r21", 1}, {"r23", -1}, {"r33", 1}});
    CHECK(conjugate(R, AlgebraAutomorphism::identity()) == R);
    Rng rng(8);
    const auto minus = -OperatorMatrix::identity();
    for (int k = 0; k < 5; ++k)
        CHECK(conjugate(minus, random_automorphism(rng)) == minus);

    const auto p1 = make_family(Family::P1, {{"r22", 2}, {"r33", 1}, {"r13", 0}, {"r23", 0}});
    const AlgebraAutomorphism swap(0, 1, 1, 0);
    const auto swapped = conjugate(p1, swap);
    CHECK(swapped == diag(2, 3, 1));
    const auto cls = classify(swapped);
    REQUIRE(cls.jordan);
    CHECK(cls.jordan->eigenvalues[0] == GaussianRational(3));
    CHECK(cls.jordan->eigenvalues[1] == GaussianRational(2));

    const AlgebraAutomorphism generic(v("m11"), v("m12"), v("m21"), v("m22"), v("m13"), v("m23"));
    CHECK(conjugate(OperatorMatrix::generic(false), generic) ==
          conjugate_oracle(OperatorMatrix::generic(false), generic));
}

TEST_CASE("conjugation closure")
{
    Rng rng(21);
    for (int k = 0; k < 100; ++k) {
        const Family f = kAllFamilies[k % 8];
        const auto R = make_family(random_tag(rng, f));
        const auto psi = random_automorphism(rng);
        const auto C = conjugate(R, psi);
        CHECK(C == conjugate_oracle(R, psi));
        CHECK(is_rbo_weight1(C));
        CHECK(C.has_classified_shape());
    }
    // symbolic family under a symbolic automorphism
    const AlgebraAutomorphism generic(v("m11"), v("m12"), v("m21"), v("m22"), v("m13"), v("m23"));
    CHECK(is_rbo_weight1(conjugate(make_family(Family::P2), generic)));
}

TEST_CASE("jordan_2x2")
{
    const auto d = jordan_2x2(block(3, 0, 0, 2));
    CHECK(d.note == JordanNote::Diagonalizable);
    CHECK(d.form == block(3, 0, 0, 2));

    const auto n = jordan_2x2(block(0, 1, 0, 0));
    CHECK(n.note == JordanNote::Defective);
    CHECK(n.form == block(0, 1, 0, 0));

    const auto e = jordan_2x2(block(5, 1, 4, 2));
    CHECK(e.form == block(6, 0, 0, 1));
    CHECK(e.eigenvalues[0] == GaussianRational(6));

    CHECK(jordan_2x2(block(7, 0, 0, 7)).note == JordanNote::Scalar);
    CHECK_THROWS_AS(jordan_2x2(block(0, 1, 2, 0)), IrrationalEigenvalues);
    CHECK_THROWS_AS(jordan_2x2(block(v("t"), 0, 0, 1)), Error);

    // rotation: eigenvalues +-i, ordered by imaginary part
    const auto rot = jordan_2x2(block(0, -1, 1, 0));
    CHECK(rot.eigenvalues[0] == GaussianRational::i());
    CHECK(rot.eigenvalues[1] == -GaussianRational::i());

    // B^-1 M B = J on random blocks with split characteristic polynomial
    Rng rng(13);
    int checked = 0;
    for (int k = 0; k < 300; ++k) {
        const auto M = block(heisrb::testing::random_numeric(rng), heisrb::testing::random_numeric(rng),
                             heisrb::testing::random_numeric(rng), heisrb::testing::random_numeric(rng));
        JordanForm j;
        try {
            j = jordan_2x2(M);
        } catch (const IrrationalEigenvalues &) {
            continue;
        }
        ++checked;
        CHECK(mul2(mul2(inv2(j.basis), M), j.basis) == j.form);
        CHECK_FALSE(j.eigenvalues[0] < j.eigenvalues[1]);
    }
    // defective samples: lambda I + nilpotent conjugated
    for (int k = 0; k < 50; ++k) {
        const Scalar l = heisrb::testing::random_numeric(rng);
        const Scalar p = heisrb::testing::random_rational(rng), q = heisrb::testing::random_rational(rng);
        const Scalar s = heisrb::testing::random_rational(rng), t = heisrb::testing::random_rational(rng);
        if ((p * t - q * s).is_zero())
            continue;
        const auto P = block(p, q, s, t);
        const auto M = mul2(mul2(P, block(l, 1, 0, l)), inv2(P));
        const auto j = jordan_2x2(M);
        CHECK(j.note == JordanNote::Defective);
        CHECK(j.form == block(l, 1, 0, l));
        CHECK(mul2(mul2(inv2(j.basis), M), j.basis) == j.form);
    }
    CHECK(checked > 5);
}

TEST_CASE("classify examples")
{
    const auto zero = classify(OperatorMatrix::zero());
    CHECK(zero.r_family.family == Family::R4);
    for (const auto &[name, value] : zero.r_family.params)
        CHECK(value.is_zero());
    REQUIRE(zero.p_family);
    CHECK(zero.p_family->family == Family::P3);
    CHECK(zero.p_family->params.at("r11").is_zero());

    const auto minus = classify(-OperatorMatrix::identity());
    CHECK(minus.r_family.family == Family::R3);
    CHECK(minus.r_family.params.at("r12").is_zero());
    CHECK(minus.r_family.params.at("r22") == Scalar(-1));
    REQUIRE(minus.p_family);
    CHECK(minus.p_family->family == Family::P2);
    CHECK(minus.p_family->params.at("r11") == Scalar(-1));

    const auto d = classify(diag(3, 2, 1));
    CHECK(d.r_family.family == Family::R1);
    CHECK(d.r_family.params.at("r11") == Scalar(3));
    CHECK(d.r_family.params.at("r33") == Scalar(1));
    REQUIRE(d.p_family);
    CHECK(d.p_family->family == Family::P1);
    CHECK(d.p_family->params.at("r22") == Scalar(2));

    CHECK_THROWS_AS(classify(OperatorMatrix::identity()), NotAnRbo);
    OperatorMatrix bad = OperatorMatrix::zero();
    bad.r(3, 1) = 1;
    CHECK_THROWS_AS(classify(bad), NotAnRbo);
    CHECK_THROWS_AS(classify(make_family(Family::P3)), Error);

    // R1 with irrational eigenvalues still gets its R-family
    // block [[2,1],[1,4]] has discriminant 8
    const auto irr = make_family(Family::R1, {{"r11", 2}, {"r12", 1}, {"r13", 0}, {"r21", 1}, {"r23", 0}, {"r33", 1}});
    REQUIRE(is_rbo_weight1(irr));
    CHECK(irr.r(2, 2) == Scalar(4));
    const auto ci = classify(irr);
    CHECK(ci.r_family.family == Family::R1);
    CHECK_FALSE(ci.p_family);
    CHECK_FALSE(ci.jordan);
    CHECK_FALSE(ci.p_family_error.empty());
    CHECK_THROWS_AS(jordan_2x2(leading_block(irr)), IrrationalEigenvalues);
}

TEST_CASE("classify recovers families")
{
    Rng rng(34);
    for (int k = 0; k < 160; ++k) {
        const Family f = kAllFamilies[k % 8];
        const auto tag = random_tag(rng, f);
        const auto R = make_family(tag);
        const auto c = classify(R);
        CHECK(make_family(c.r_family) == R);
        if (static_cast<int>(f) < 4)
            CHECK(c.r_family.family == f);
        if (c.p_family) {
            REQUIRE(c.to_canonical);
            CHECK(conjugate(R, *c.to_canonical) == make_family(*c.p_family));
        }
        if (f == Family::P4)
            CHECK(c.p_family->family == Family::P4);
    }
}

TEST_CASE("Jordan invariance under conjugation")
{
    Rng rng(55);
    const Family pf[] = {Family::P1, Family::P2, Family::P3, Family::P4};
    for (int k = 0; k < 100; ++k) {
        const auto R = make_family(random_tag(rng, pf[k % 4]));
        const auto psi = random_automorphism(rng);
        const auto C = conjugate(R, psi);
        REQUIRE(C.has_classified_shape());
        const auto a = classify(R);
        const auto b = classify(C);
        REQUIRE(a.jordan);
        REQUIRE(b.jordan);
        CHECK(a.jordan->eigenvalues == b.jordan->eigenvalues);
        CHECK(a.jordan->note == b.jordan->note);
        CHECK(a.p_family->family == b.p_family->family);
    }
}

TEST_CASE("weight duality")
{
    Rng rng(89);
    for (int k = 0; k < 500; ++k) {
        const OperatorMatrix R = k % 3 == 0 ? make_family(random_tag(rng, kAllFamilies[k % 8]))
                                            : random_matrix(rng, k % 3 == 1);
        CHECK(is_rbo_weight1(R).holds == is_rbo_weight_minus1(-R).holds);
    }
    const auto G = OperatorMatrix::generic(false);
    const auto a = is_rbo_weight1(G);
    const auto b = is_rbo_weight_minus1(-G);
    CHECK(a.holds == b.holds);
}

TEST_CASE("exhaustive small search")
{
    int found = 0;
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
        REQUIRE(R.has_classified_shape());
        const auto cls = classify(R);
        CHECK(make_family(cls.r_family) == R);
    }
    CHECK(found > 0);
}
