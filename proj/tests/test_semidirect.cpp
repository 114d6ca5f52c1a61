#include "doctest.h"

#include "heisrb/error.hpp"
#include "heisrb/semidirect.hpp"
#include "support.hpp"

using namespace heisrb;
using heisrb::testing::Rng;

namespace {

Scalar v(const char *name) { return Scalar::var(name); }

SemiAlgebraElement sym_alg(const std::string &k)
{
    return {AlgebraElement::symbolic("a" + k, "b" + k, "c" + k), AlgebraElement::symbolic("d" + k, "e" + k, "f" + k)};
}

SemiGroupElement sym_grp(const std::string &k)
{
    return {GroupElement::symbolic("a" + k, "b" + k, "c" + k), GroupElement::symbolic("d" + k, "e" + k, "f" + k)};
}

constexpr Family kAllFamilies[] = {Family::R1, Family::R2, Family::R3, Family::R4,
                                   Family::P1, Family::P2, Family::P3, Family::P4};

} // namespace

TEST_CASE("semidirect bracket")
{
    const auto X = AlgebraElement::X();
    const auto Y = AlgebraElement::Y();
    const auto Z = AlgebraElement::Z();
    const AlgebraElement O{};
    CHECK(semi_alg_bracket({X, Y}, {X, Y}).is_zero());
    CHECK(semi_alg_bracket({X, O}, {Y, O}) == SemiAlgebraElement{Z, O});
    CHECK(semi_alg_bracket({X, Y}, {Y, X}) == SemiAlgebraElement{Z, -Z});

    const auto u = sym_alg("1");
    const auto w = sym_alg("2");
    const auto s = sym_alg("3");
    CHECK(semi_alg_bracket(u, u).is_zero());
    CHECK(semi_alg_bracket(u, w) == Scalar(-1) * semi_alg_bracket(w, u));
    const auto jacobi = semi_alg_bracket(u, semi_alg_bracket(w, s)) + semi_alg_bracket(w, semi_alg_bracket(s, u)) +
                        semi_alg_bracket(s, semi_alg_bracket(u, w));
    CHECK(jacobi.is_zero());

    // phi_alg intertwines with the componentwise bracket
    const auto [p1, q1] = phi_alg(u);
    const auto [p2, q2] = phi_alg(w);
    CHECK(phi_alg(semi_alg_bracket(u, w)) == AlgebraPair{bracket(p1, p2), bracket(q1, q2)});
    CHECK(phi_alg_inverse(phi_alg(u)) == u);
    CHECK(phi_alg(SemiAlgebraElement{u.first, O}) == AlgebraPair{u.first, u.first});
}

TEST_CASE("semidirect group")
{
    const auto e = SemiGroupElement::identity();
    const auto u = sym_grp("1");
    const auto w = sym_grp("2");
    const auto s = sym_grp("3");
    CHECK(semi_grp_mul(e, u) == u);
    CHECK(semi_grp_mul(u, e) == u);
    CHECK(semi_grp_mul(semi_grp_mul(u, w), s) == semi_grp_mul(u, semi_grp_mul(w, s)));
    CHECK(semi_grp_mul(u, semi_grp_inv(u)).is_identity());
    CHECK(semi_grp_mul(semi_grp_inv(u), u).is_identity());

    const auto g = u.first;
    const auto h = w.second;
    const auto id = GroupElement::identity();
    CHECK(semi_grp_mul({g, id}, {id, h}) == SemiGroupElement{g, grp_mul(grp_mul(g, h), grp_inv(g))});

    CHECK(phi_grp({id, g}) == GroupPair{g, id});
    const auto [x1, y1] = phi_grp(u);
    const auto [x2, y2] = phi_grp(w);
    CHECK(phi_grp(semi_grp_mul(u, w)) == GroupPair{grp_mul(x1, x2), grp_mul(y1, y2)});
    CHECK(phi_grp_inverse(phi_grp(u)) == u);
    CHECK(phi_grp(phi_grp_inverse({g, h})) == GroupPair{g, h});
}

TEST_CASE("semidirect exponential")
{
    const auto y = AlgebraElement::symbolic("d", "e", "f");
    const auto x = AlgebraElement::symbolic("a", "b", "c");
    CHECK(exp_semi({AlgebraElement{}, y}) == SemiGroupElement{GroupElement::identity(), exp(y)});
    CHECK(exp_semi({x, AlgebraElement{}}) == SemiGroupElement{exp(x), GroupElement::identity()});

    // general form through the direct product vs the closed form, and the BCH expansion by hand
    const SemiAlgebraElement u{x, y};
    CHECK(exp_semi_general(u) == exp_semi(u));
    CHECK(exp_semi(u).second == grp_mul(exp(x + y), grp_inv(exp(x))));

    // one-parameter property with rational t, s
    Rng rng(3);
    for (int k = 0; k < 20; ++k) {
        const Scalar t = heisrb::testing::random_rational(rng);
        const Scalar s = heisrb::testing::random_rational(rng);
        CHECK(exp_semi((t + s) * u) == semi_grp_mul(exp_semi(t * u), exp_semi(s * u)));
    }
    // commuting pairs: u and 2u
    CHECK(exp_semi(u + Scalar(2) * u) == semi_grp_mul(exp_semi(u), exp_semi(Scalar(2) * u)));
}

TEST_CASE("graphs")
{
    const auto x = AlgebraElement::symbolic("a", "b", "c");
    CHECK(graph(OperatorMatrix::zero(), x) == SemiAlgebraElement{AlgebraElement{}, x});
    CHECK(graph(-OperatorMatrix::identity(), x) == SemiAlgebraElement{-x, x});
    CHECK(graph_point(OperatorMatrix::identity(), x).as_pair() == graph(OperatorMatrix::identity(), x));

    const auto x1 = AlgebraElement::symbolic("a1", "b1", "c1");
    const auto x2 = AlgebraElement::symbolic("a2", "b2", "c2");
    for (Family f : kAllFamilies) {
        CAPTURE(to_string(f));
        const auto R = make_family(f);
        const auto br = semi_alg_bracket(graph(R, x1), graph(R, x2));
        CHECK(br == graph(R, br.second));
    }
    // a non-RBO graph is not closed
    const auto I = OperatorMatrix::identity();
    const auto br = semi_alg_bracket(graph(I, x1), graph(I, x2));
    CHECK_FALSE(br == graph(I, br.second));
}

TEST_CASE("p_map")
{
    const auto x = AlgebraElement::symbolic("a", "b", "c");
    CHECK(p_map(OperatorMatrix::zero(), x) == x);
    const AlgebraElement centre{0, 0, v("c")};
    CHECK(p_map(OperatorMatrix::generic(), centre) == centre);

    const auto R = OperatorMatrix::generic();
    const Scalar a = v("a"), b = v("b"), c = v("c");
    const Scalar shift = (b * (a * v("r11") + b * v("r21")) - a * (a * v("r12") + b * v("r22"))) / 2;
    CHECK(p_map(R, x) == AlgebraElement{a, b, c + shift});
    CHECK(p_inverse(R, x) == AlgebraElement{a, b, c - shift});
    CHECK(p_inverse(R, p_map(R, x)) == x);
    CHECK(p_map(R, p_inverse(R, x)) == x);
    CHECK(p_inverse(OperatorMatrix::zero(), x) == x);

    const auto p1 = make_family(Family::P1, {{"r22", 2}, {"r33", 1}});
    CHECK(p_map(p1, AlgebraElement{1, 1, 0}) == AlgebraElement{1, 1, Scalar::ratio(1, 2)});
    CHECK(p_inverse(p1, AlgebraElement{1, 1, Scalar::ratio(1, 2)}) == AlgebraElement{1, 1, 0});

    CHECK_THROWS_AS(p_map(OperatorMatrix::generic(false), x), UnsupportedShape);
}

TEST_CASE("exp_graph closure")
{
    CHECK(exp_graph(make_family(Family::P2), AlgebraElement{}).is_identity());
    const auto x = AlgebraElement::symbolic("a1", "b1", "c1");
    const auto y = AlgebraElement::symbolic("a2", "b2", "c2");

    const auto minus = -OperatorMatrix::identity();
    CHECK(graph_product_parameter(minus, x, y) == x + y - Scalar::ratio(1, 2) * bracket(x, y));

    for (Family f : kAllFamilies) {
        CAPTURE(to_string(f));
        const auto R = make_family(f);
        CHECK(exp_graph(R, x).second == exp(p_map(R, x)));
        CHECK(semi_grp_mul(exp_graph(R, x), exp_graph(R, y)) == exp_graph(R, graph_product_parameter(R, x, y)));
    }
    const auto I = OperatorMatrix::identity();
    CHECK_FALSE(semi_grp_mul(exp_graph(I, x), exp_graph(I, y)) == exp_graph(I, graph_product_parameter(I, x, y)));
}
