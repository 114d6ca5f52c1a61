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

#include "heisrb/rbo_algebra.hpp"

#include <algorithm>

#include "heisrb/error.hpp"

namespace heisrb {

OperatorMatrix OperatorMatrix::identity()
{
    OperatorMatrix m;
    for (int i = 1; i <= 3; ++i)
        m.r(i, i) = 1;
    return m;
}

OperatorMatrix OperatorMatrix::generic(bool classified_shape)
{
    OperatorMatrix m;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            m.r(i, j) = Scalar::var("r" + std::to_string(i) + std::to_string(j));
    if (classified_shape) {
        m.r(3, 1) = 0;
        m.r(3, 2) = 0;
    }
    return m;
}

bool OperatorMatrix::is_numeric() const
{
    for (const auto &row : r_)
        for (const auto &e : row)
            if (!e.is_numeric())
                return false;
    return true;
}

OperatorMatrix OperatorMatrix::substitute(const Assignment &assignment) const
{
    OperatorMatrix out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out.r_[i][j] = r_[i][j].substitute(assignment);
    return out;
}

OperatorMatrix operator-(const OperatorMatrix &m)
{
    OperatorMatrix out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out.r_[i][j] = -m.r_[i][j];
    return out;
}

std::string to_string(const OperatorMatrix &m)
{
    std::string out = "[";
    for (int i = 1; i <= 3; ++i) {
        out += i == 1 ? "[" : ",[";
        for (int j = 1; j <= 3; ++j)
            out += (j == 1 ? "" : ",") + m.r(i, j).to_string();
        out += "]";
    }
    return out + "]";
}

AlgebraElement apply(const OperatorMatrix &R, const AlgebraElement &x) { return row_times(x, R.entries()); }

RboVerdict check_rbo_identity(const OperatorMatrix &R, const Scalar &weight)
{
    struct Pair {
        const char *name;
        AlgebraElement x;
        AlgebraElement y;
    };
    const Pair pairs[] = {{"X,Y", AlgebraElement::X(), AlgebraElement::Y()},
                          {"X,Z", AlgebraElement::X(), AlgebraElement::Z()},
                          {"Y,Z", AlgebraElement::Y(), AlgebraElement::Z()}};
    for (const auto &[name, x, y] : pairs) {
        const AlgebraElement rx = apply(R, x);
        const AlgebraElement ry = apply(R, y);
        const AlgebraElement lhs = bracket(rx, ry);
        const AlgebraElement rhs = apply(R, bracket(rx, y) + bracket(x, ry) + weight * bracket(x, y));
        if (!(lhs - rhs).is_zero())
            return {false, AxiomWitness{name, lhs, rhs}};
    }
    return {true, std::nullopt};
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::string_view, 8> kFamilyNames{"R1", "R2", "R3", "R4", "P1", "P2", "P3", "P4"};

/// Expression that must be nonzero for the family to be defined.
std::optional<Scalar> side_condition(Family f, const std::map<std::string, Scalar> &p)
{
    switch (f) {
    case Family::R1:
        return p.at("r11") - p.at("r33");
    case Family::R2:
        return p.at("r21");
    case Family::P1:
        return p.at("r22") - p.at("r33");
    case Family::P4:
        return 1 + 2 * p.at("r11");
    default:
        return std::nullopt;
    }
}

std::map<std::string, Scalar> symbolic_parameters(Family f);

} // namespace

std::string_view to_string(Family f) { return kFamilyNames.at(static_cast<std::size_t>(f)); }

Family family_from_string(std::string_view name)
{
    for (std::size_t k = 0; k < kFamilyNames.size(); ++k)
        if (kFamilyNames[k] == name)
            return static_cast<Family>(k);
    throw InputError("unknown family '" + std::string(name) + "' (expected R1-R4 or P1-P4)");
}

const std::vector<std::string> &family_parameters(Family f)
{
    static const std::vector<std::string> r1{"r11", "r12", "r13", "r21", "r23", "r33"};
    static const std::vector<std::string> r2{"r13", "r21", "r22", "r23", "r33"};
    static const std::vector<std::string> r34{"r12", "r13", "r22", "r23"};
    static const std::vector<std::string> p1{"r13", "r22", "r23", "r33"};
    static const std::vector<std::string> p234{"r11", "r13", "r23"};
    switch (f) {
    case Family::R1:
        return r1;
    case Family::R2:
        return r2;
    case Family::R3:
    case Family::R4:
        return r34;
    case Family::P1:
        return p1;
    default:
        return p234;
    }
}

namespace {

std::map<std::string, Scalar> symbolic_parameters(Family f)
{
    std::map<std::string, Scalar> out;
    for (const auto &name : family_parameters(f))
        out.emplace(name, Scalar::var(name));
    return out;
}

} // namespace

FamilyTag complete_family(Family family, std::map<std::string, Scalar> params)
{
    const auto &names = family_parameters(family);
    for (const auto &[name, value] : params)
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw InputError("family " + std::string(to_string(family)) + " has no parameter '" + name + "'");
    for (const auto &name : names)
        if (!params.contains(name))
            params.emplace(name, Scalar::var(name));

    FamilyTag tag{family, std::move(params), {}};
    if (auto side = side_condition(family, tag.params)) {
        if (side->is_zero())
            throw SideConditionViolated("family " + std::string(to_string(family)) + " requires " +
                                        side_condition(family, symbolic_parameters(family))->to_string() +
                                        " != 0");
        if (side->is_symbolic())
            tag.excluded.push_back(*side);
    }
    return tag;
}

OperatorMatrix make_family(const FamilyTag &incomplete)
{
    const FamilyTag tag = complete_family(incomplete.family, incomplete.params);
    auto p = [&](const char *name) { return tag.params.at(name); };
    OperatorMatrix m;
    switch (tag.family) {
    case Family::R1:
        m = OperatorMatrix({{{p("r11"), p("r12"), p("r13")},
                             {p("r21"), (p("r33") * p("r11") + p("r33") + p("r21") * p("r12")) / (p("r11") - p("r33")),
                              p("r23")},
                             {0, 0, p("r33")}}});
        break;
    case Family::R2:
        m = OperatorMatrix({{{p("r33"), -(p("r33") + p("r33") * p("r33")) / p("r21"), p("r13")},
                             {p("r21"), p("r22"), p("r23")},
                             {0, 0, p("r33")}}});
        break;
    case Family::R3:
        m = OperatorMatrix({{{-1, p("r12"), p("r13")}, {0, p("r22"), p("r23")}, {0, 0, -1}}});
        break;
    case Family::R4:
        m = OperatorMatrix({{{0, p("r12"), p("r13")}, {0, p("r22"), p("r23")}, {0, 0, 0}}});
        break;
    case Family::P1:
        m = OperatorMatrix({{{(1 + p("r22")) * p("r33") / (p("r22") - p("r33")), 0, p("r13")},
                             {0, p("r22"), p("r23")},
                             {0, 0, p("r33")}}});
        break;
    case Family::P2:
        m = OperatorMatrix({{{p("r11"), 0, p("r13")}, {0, -1, p("r23")}, {0, 0, -1}}});
        break;
    case Family::P3:
        m = OperatorMatrix({{{p("r11"), 0, p("r13")}, {0, 0, p("r23")}, {0, 0, 0}}});
        break;
    case Family::P4:
        m = OperatorMatrix({{{p("r11"), 1, p("r13")},
                             {0, p("r11"), p("r23")},
                             {0, 0, p("r11") * p("r11") / (1 + 2 * p("r11"))}}});
        break;
    }
    return m;
}

OperatorMatrix conjugate(const OperatorMatrix &R, const AlgebraAutomorphism &psi)
{
    // psi R psi^-1 acts on row vectors as x -> x M^-1 R M
    return OperatorMatrix(matmul(matmul(aut_inverse(psi).matrix(), R.entries()), psi.matrix()));
}

// ---------------------------------------------------------------------------

std::string_view to_string(JordanNote note)
{
    switch (note) {
    case JordanNote::Diagonalizable:
        return "diagonalizable";
    case JordanNote::Defective:
        return "defective";
    default:
        return "scalar";
    }
}

Block2 leading_block(const OperatorMatrix &R) { return {{{R.r(1, 1), R.r(1, 2)}, {R.r(2, 1), R.r(2, 2)}}}; }

namespace {

using Vec2 = std::array<GaussianRational, 2>;

/// Nonzero kernel vector of the singular matrix [[p, q], [s, t]], if any.
std::optional<Vec2> kernel_vector(const GaussianRational &p, const GaussianRational &q, const GaussianRational &s,
                                  const GaussianRational &t)
{
    if (!p.is_zero() || !q.is_zero())
        return Vec2{q, -p};
    if (!s.is_zero() || !t.is_zero())
        return Vec2{t, -s};
    return std::nullopt;
}

Block2 columns(const Vec2 &first, const Vec2 &second)
{
    return {{{Scalar(first[0]), Scalar(second[0])}, {Scalar(first[1]), Scalar(second[1])}}};
}

} // namespace

JordanForm jordan_2x2(const Block2 &m)
{
    for (const auto &row : m)
        for (const auto &e : row)
            if (!e.is_numeric())
                throw Error("jordan_2x2 requires numeric entries, got " + e.to_string());
    const GaussianRational &p = m[0][0].numeric();
    const GaussianRational &q = m[0][1].numeric();
    const GaussianRational &s = m[1][0].numeric();
    const GaussianRational &t = m[1][1].numeric();

    const GaussianRational trace = p + t;
    const GaussianRational det = p * t - q * s;
    const GaussianRational disc = trace * trace - GaussianRational(4) * det;
    const auto root = disc.sqrt();
    if (!root)
        throw IrrationalEigenvalues("eigenvalues of the leading block need sqrt(" + disc.to_string() +
                                    "), which is not in Q(i)");

    const GaussianRational half(Rational(1, 2));
    JordanForm out;
    if (root->is_zero()) {
        const GaussianRational lambda = trace * half;
        out.eigenvalues = {lambda, lambda};
        const GaussianRational dp = p - lambda;
        const GaussianRational dt = t - lambda;
        if (dp.is_zero() && q.is_zero() && s.is_zero() && dt.is_zero()) {
            out.note = JordanNote::Scalar;
            out.form = {{{Scalar(lambda), Scalar(0)}, {Scalar(0), Scalar(lambda)}}};
            out.basis = {{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}};
            return out;
        }
        // B = [b1 b2] with (M - lambda) b2 = b1 and b2 outside the kernel.
        Vec2 b2{GaussianRational(1), GaussianRational(0)};
        Vec2 b1{dp, s};
        if (b1[0].is_zero() && b1[1].is_zero()) {
            b2 = {GaussianRational(0), GaussianRational(1)};
            b1 = {q, dt};
        }
        out.note = JordanNote::Defective;
        out.form = {{{Scalar(lambda), Scalar(1)}, {Scalar(0), Scalar(lambda)}}};
        out.basis = columns(b1, b2);
        return out;
    }

    GaussianRational l1 = (trace + *root) * half;
    GaussianRational l2 = (trace - *root) * half;
    if (l1 < l2)
        std::swap(l1, l2);
    out.eigenvalues = {l1, l2};
    out.note = JordanNote::Diagonalizable;
    out.form = {{{Scalar(l1), Scalar(0)}, {Scalar(0), Scalar(l2)}}};
    const auto v1 = kernel_vector(p - l1, q, s, t - l1);
    const auto v2 = kernel_vector(p - l2, q, s, t - l2);
    if (!v1 || !v2)
        throw Error("internal: missing eigenvector");
    out.basis = columns(*v1, *v2);
    return out;
}

namespace {

FamilyTag match_r_family(const OperatorMatrix &R)
{
    auto e = [&](int i, int j) { return R.r(i, j); };
    FamilyTag tag;
    if (!(e(1, 1) - e(3, 3)).is_zero()) {
        tag = complete_family(Family::R1, {{"r11", e(1, 1)}, {"r12", e(1, 2)}, {"r13", e(1, 3)},
                                           {"r21", e(2, 1)}, {"r23", e(2, 3)}, {"r33", e(3, 3)}});
    } else if (!e(2, 1).is_zero()) {
        tag = complete_family(Family::R2, {{"r13", e(1, 3)}, {"r21", e(2, 1)}, {"r22", e(2, 2)},
                                           {"r23", e(2, 3)}, {"r33", e(3, 3)}});
    } else {
        const Family f = e(3, 3) == Scalar(-1) ? Family::R3 : Family::R4;
        tag = complete_family(f, {{"r12", e(1, 2)}, {"r13", e(1, 3)}, {"r22", e(2, 2)}, {"r23", e(2, 3)}});
    }
    if (make_family(tag) != R)
        throw Error("internal: operator " + to_string(R) + " does not match family " +
                    std::string(to_string(tag.family)));
    return tag;
}

} // namespace

Classification classify(const OperatorMatrix &R)
{
    if (!R.is_numeric())
        throw Error("classify requires numeric entries");
    if (!R.has_classified_shape())
        throw NotAnRbo("unclassifiable shape: r31 = " + R.r(3, 1).to_string() + ", r32 = " + R.r(3, 2).to_string() +
                       " but every weight-1 Rota-Baxter operator has r31 = r32 = 0");
    if (auto verdict = is_rbo_weight1(R); !verdict)
        throw NotAnRbo("not a weight-1 Rota-Baxter operator: identity fails on (" + verdict.witness->pair + ")");

    Classification out;
    out.r_family = match_r_family(R);

    JordanForm jordan;
    try {
        jordan = jordan_2x2(leading_block(R));
    } catch (const IrrationalEigenvalues &e) {
        out.p_family_error = e.what();
        return out;
    }
    const AlgebraAutomorphism psi(jordan.basis[0][0], jordan.basis[0][1], jordan.basis[1][0], jordan.basis[1][1]);
    const OperatorMatrix canonical = conjugate(R, psi);
    const Scalar &r33 = canonical.r(3, 3);

    FamilyTag tag;
    if (jordan.note == JordanNote::Defective) {
        tag = complete_family(Family::P4, {{"r11", canonical.r(1, 1)}, {"r13", canonical.r(1, 3)},
                                           {"r23", canonical.r(2, 3)}});
    } else if (canonical.r(2, 2) != r33) {
        tag = complete_family(Family::P1, {{"r13", canonical.r(1, 3)}, {"r22", canonical.r(2, 2)},
                                           {"r23", canonical.r(2, 3)}, {"r33", r33}});
    } else {
        // r22 = r33 forces r33 (r33 + 1) = 0
        const Family f = r33 == Scalar(-1) ? Family::P2 : Family::P3;
        tag = complete_family(f, {{"r11", canonical.r(1, 1)}, {"r13", canonical.r(1, 3)}, {"r23", canonical.r(2, 3)}});
    }
    if (make_family(tag) != canonical)
        throw Error("internal: Jordan form " + to_string(canonical) + " does not match family " +
                    std::string(to_string(tag.family)));
    out.p_family = std::move(tag);
    out.jordan = std::move(jordan);
    out.to_canonical = psi;
    return out;
}

} // namespace heisrb
