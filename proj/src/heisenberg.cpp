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

#include "heisrb/heisenberg.hpp"

#include "heisrb/error.hpp"

namespace heisrb {

AlgebraElement AlgebraElement::symbolic(const std::string &a, const std::string &b, const std::string &c)
{
    return {Scalar::var(a), Scalar::var(b), Scalar::var(c)};
}

AlgebraElement AlgebraElement::substitute(const Assignment &assignment) const
{
    return {a.substitute(assignment), b.substitute(assignment), c.substitute(assignment)};
}

Matrix3 AlgebraElement::matrix() const
{
    Matrix3 m{};
    m[0][1] = a;
    m[1][2] = b;
    m[0][2] = c;
    return m;
}

GroupElement GroupElement::symbolic(const std::string &a, const std::string &b, const std::string &c)
{
    return {Scalar::var(a), Scalar::var(b), Scalar::var(c)};
}

GroupElement GroupElement::substitute(const Assignment &assignment) const
{
    return {a.substitute(assignment), b.substitute(assignment), c.substitute(assignment)};
}

Matrix3 GroupElement::matrix() const
{
    Matrix3 m{};
    for (int i = 0; i < 3; ++i)
        m[i][i] = 1;
    m[0][1] = a;
    m[1][2] = b;
    m[0][2] = c;
    return m;
}

std::string to_string(const AlgebraElement &x)
{
    return "(" + x.a.to_string() + "," + x.b.to_string() + "," + x.c.to_string() + ")";
}

std::string to_string(const GroupElement &g)
{
    return "(" + g.a.to_string() + "," + g.b.to_string() + "," + g.c.to_string() + ")";
}

AlgebraElement bracket(const AlgebraElement &x, const AlgebraElement &y)
{
    return {0, 0, x.a * y.b - x.b * y.a};
}

GroupElement grp_mul(const GroupElement &g, const GroupElement &h)
{
    return {g.a + h.a, g.b + h.b, g.c + h.c + g.a * h.b};
}

GroupElement grp_inv(const GroupElement &g) { return {-g.a, -g.b, g.a * g.b - g.c}; }

GroupElement exp(const AlgebraElement &x) { return {x.a, x.b, x.c + x.a * x.b / 2}; }

AlgebraElement log(const GroupElement &g) { return {g.a, g.b, g.c - g.a * g.b / 2}; }

// ---------------------------------------------------------------------------

AlgebraAutomorphism::AlgebraAutomorphism(Scalar m11, Scalar m12, Scalar m21, Scalar m22, Scalar m13, Scalar m23)
    : m11_(std::move(m11)), m12_(std::move(m12)), m13_(std::move(m13)), m21_(std::move(m21)), m22_(std::move(m22)),
      m23_(std::move(m23))
{
    if (m33().is_zero())
        throw SingularAutomorphism("automorphism block has zero determinant");
}

Matrix3 AlgebraAutomorphism::matrix() const
{
    return {{{m11_, m12_, m13_}, {m21_, m22_, m23_}, {0, 0, m33()}}};
}

std::string to_string(const AlgebraAutomorphism &psi)
{
    return "[[" + psi.m11().to_string() + "," + psi.m12().to_string() + "," + psi.m13().to_string() + "],[" +
           psi.m21().to_string() + "," + psi.m22().to_string() + "," + psi.m23().to_string() + "],[0,0," +
           psi.m33().to_string() + "]]";
}

AlgebraElement row_times(const AlgebraElement &x, const Matrix3 &m)
{
    return {x.a * m[0][0] + x.b * m[1][0] + x.c * m[2][0], x.a * m[0][1] + x.b * m[1][1] + x.c * m[2][1],
            x.a * m[0][2] + x.b * m[1][2] + x.c * m[2][2]};
}

Matrix3 matmul(const Matrix3 &p, const Matrix3 &q)
{
    Matrix3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (!p[i][k].is_zero() && !q[k][j].is_zero())
                    out[i][j] += p[i][k] * q[k][j];
    return out;
}

AlgebraElement aut_apply(const AlgebraAutomorphism &psi, const AlgebraElement &x) { return row_times(x, psi.matrix()); }

AlgebraAutomorphism aut_compose(const AlgebraAutomorphism &psi, const AlgebraAutomorphism &phi)
{
    // x -> (x M_phi) M_psi
    const Matrix3 m = matmul(phi.matrix(), psi.matrix());
    return {m[0][0], m[0][1], m[1][0], m[1][1], m[0][2], m[1][2]};
}

AlgebraAutomorphism aut_inverse(const AlgebraAutomorphism &psi)
{
    const Scalar det = psi.m33();
    if (det.is_zero())
        throw SingularAutomorphism("cannot invert a singular automorphism");
    // [[B, u], [0, d]]^-1 = [[B^-1, -B^-1 u / d], [0, 1/d]]
    const Scalar n11 = psi.m22() / det;
    const Scalar n12 = -psi.m12() / det;
    const Scalar n21 = -psi.m21() / det;
    const Scalar n22 = psi.m11() / det;
    const Scalar n13 = -(n11 * psi.m13() + n12 * psi.m23()) / det;
    const Scalar n23 = -(n21 * psi.m13() + n22 * psi.m23()) / det;
    return {n11, n12, n21, n22, n13, n23};
}

GroupMap aut_to_group(const AlgebraAutomorphism &psi)
{
    return [psi](const GroupElement &g) { return exp(aut_apply(psi, log(g))); };
}

} // namespace heisrb
