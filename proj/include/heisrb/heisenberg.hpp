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

#ifndef HEISRB_HEISENBERG_HPP
#define HEISRB_HEISENBERG_HPP

#include <array>
#include <functional>
#include <ostream>
#include <string>

#include "heisrb/scalar.hpp"

namespace heisrb {

using Matrix3 = std::array<std::array<Scalar, 3>, 3>;

/// x = a X + b Y + c Z in the Heisenberg Lie algebra, [X, Y] = Z, Z central.
struct AlgebraElement {
    Scalar a;
    Scalar b;
    Scalar c;

    static AlgebraElement X() { return {1, 0, 0}; }
    static AlgebraElement Y() { return {0, 1, 0}; }
    static AlgebraElement Z() { return {0, 0, 1}; }
    /// (a, b, c) with each coordinate the indeterminate of the given name.
    static AlgebraElement symbolic(const std::string &a, const std::string &b, const std::string &c);

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    AlgebraElement substitute(const Assignment &assignment) const;
    /// Strictly upper-triangular matrix [[0,a,c],[0,0,b],[0,0,0]].
    Matrix3 matrix() const;

    friend AlgebraElement operator+(const AlgebraElement &x, const AlgebraElement &y)
    {
        return {x.a + y.a, x.b + y.b, x.c + y.c};
    }
    friend AlgebraElement operator-(const AlgebraElement &x, const AlgebraElement &y)
    {
        return {x.a - y.a, x.b - y.b, x.c - y.c};
    }
    friend AlgebraElement operator-(const AlgebraElement &x) { return {-x.a, -x.b, -x.c}; }
    friend AlgebraElement operator*(const Scalar &t, const AlgebraElement &x) { return {t * x.a, t * x.b, t * x.c}; }

    friend bool operator==(const AlgebraElement &, const AlgebraElement &) = default;
};

/// Unitriangular matrix [[1,a,c],[0,1,b],[0,0,1]] of the Heisenberg group.
struct GroupElement {
    Scalar a;
    Scalar b;
    Scalar c;

    static GroupElement identity() { return {0, 0, 0}; }
    static GroupElement symbolic(const std::string &a, const std::string &b, const std::string &c);

    bool is_identity() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    GroupElement substitute(const Assignment &assignment) const;
    Matrix3 matrix() const;

    friend bool operator==(const GroupElement &, const GroupElement &) = default;
};

std::string to_string(const AlgebraElement &x);
std::string to_string(const GroupElement &g);
inline std::ostream &operator<<(std::ostream &os, const AlgebraElement &x) { return os << to_string(x); }
inline std::ostream &operator<<(std::ostream &os, const GroupElement &g) { return os << to_string(g); }

/// [x, y] = (x.a y.b - x.b y.a) Z
AlgebraElement bracket(const AlgebraElement &x, const AlgebraElement &y);

GroupElement grp_mul(const GroupElement &g, const GroupElement &h);
GroupElement grp_inv(const GroupElement &g);

/// exp(x) = I + x + x^2/2, i.e. (a, b, c + ab/2).
GroupElement exp(const AlgebraElement &x);
/// Inverse of exp: (a, b, c - ab/2).
AlgebraElement log(const GroupElement &g);

using GroupMap = std::function<GroupElement(const GroupElement &)>;

/// Lie algebra automorphism of the Heisenberg algebra, stored in the same
/// row convention as operator matrices:
///
///     psi(X) = m11 X + m12 Y + m13 Z
///     psi(Y) = m21 X + m22 Y + m23 Z
///     psi(Z) = m33 Z,  m33 = m11 m22 - m21 m12 != 0
class AlgebraAutomorphism {
public:
    /// Throws SingularAutomorphism when the 2x2 block is singular.
    AlgebraAutomorphism(Scalar m11, Scalar m12, Scalar m21, Scalar m22, Scalar m13 = 0, Scalar m23 = 0);

    static AlgebraAutomorphism identity() { return {1, 0, 0, 1}; }

    const Scalar &m11() const noexcept { return m11_; }
    const Scalar &m12() const noexcept { return m12_; }
    const Scalar &m13() const noexcept { return m13_; }
    const Scalar &m21() const noexcept { return m21_; }
    const Scalar &m22() const noexcept { return m22_; }
    const Scalar &m23() const noexcept { return m23_; }
    Scalar m33() const { return m11_ * m22_ - m21_ * m12_; }

    /// Full 3x3 matrix; row i holds the image of the i-th basis vector.
    Matrix3 matrix() const;

    friend bool operator==(const AlgebraAutomorphism &, const AlgebraAutomorphism &) = default;

private:
    Scalar m11_, m12_, m13_;
    Scalar m21_, m22_, m23_;
};

std::string to_string(const AlgebraAutomorphism &psi);

AlgebraElement aut_apply(const AlgebraAutomorphism &psi, const AlgebraElement &x);
/// (psi o phi)(x) = psi(phi(x))
AlgebraAutomorphism aut_compose(const AlgebraAutomorphism &psi, const AlgebraAutomorphism &phi);
AlgebraAutomorphism aut_inverse(const AlgebraAutomorphism &psi);
/// exp o psi o log, an automorphism of the Heisenberg group.
GroupMap aut_to_group(const AlgebraAutomorphism &psi);

/// Row-vector times 3x3 matrix, the coordinate action shared by operators and automorphisms.
AlgebraElement row_times(const AlgebraElement &x, const Matrix3 &m);
Matrix3 matmul(const Matrix3 &p, const Matrix3 &q);

} // namespace heisrb

#endif
