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

#ifndef HEISRB_SEMIDIRECT_HPP
#define HEISRB_SEMIDIRECT_HPP

#include <utility>

#include "heisrb/heisenberg.hpp"
#include "heisrb/rbo_algebra.hpp"

namespace heisrb {

/// (x, y) in the semidirect product algebra of h with itself under ad.
struct SemiAlgebraElement {
    AlgebraElement first;
    AlgebraElement second;

    bool is_zero() const { return first.is_zero() && second.is_zero(); }
    friend SemiAlgebraElement operator+(const SemiAlgebraElement &u, const SemiAlgebraElement &v)
    {
        return {u.first + v.first, u.second + v.second};
    }
    friend SemiAlgebraElement operator*(const Scalar &t, const SemiAlgebraElement &u)
    {
        return {t * u.first, t * u.second};
    }
    friend bool operator==(const SemiAlgebraElement &, const SemiAlgebraElement &) = default;
};

/// (x, y) in the semidirect product group of H with itself under conjugation.
struct SemiGroupElement {
    GroupElement first;
    GroupElement second;

    static SemiGroupElement identity() { return {GroupElement::identity(), GroupElement::identity()}; }
    bool is_identity() const { return first.is_identity() && second.is_identity(); }
    friend bool operator==(const SemiGroupElement &, const SemiGroupElement &) = default;
};

/// A point (R(x), x) of the graph of an operator.
struct GraphPoint {
    AlgebraElement base;  // x
    AlgebraElement value; // R(x)

    SemiAlgebraElement as_pair() const { return {value, base}; }
    friend bool operator==(const GraphPoint &, const GraphPoint &) = default;
};

using AlgebraPair = std::pair<AlgebraElement, AlgebraElement>;
using GroupPair = std::pair<GroupElement, GroupElement>;

std::string to_string(const SemiAlgebraElement &u);
std::string to_string(const SemiGroupElement &u);

/// ([x1,x2], [x1,y2] + [y1,x2] + [y1,y2])
SemiAlgebraElement semi_alg_bracket(const SemiAlgebraElement &u, const SemiAlgebraElement &v);

/// (x1 x2, y1 x1 y2 x1^-1)
SemiGroupElement semi_grp_mul(const SemiGroupElement &u, const SemiGroupElement &v);
SemiGroupElement semi_grp_inv(const SemiGroupElement &u);

/// Isomorphisms onto the direct products: (x, y) -> (y + x, x) and (h, g) -> (g h, h).
AlgebraPair phi_alg(const SemiAlgebraElement &u);
SemiAlgebraElement phi_alg_inverse(const AlgebraPair &p);
GroupPair phi_grp(const SemiGroupElement &u);
SemiGroupElement phi_grp_inverse(const GroupPair &p);

/// Exponential of the semidirect product, (exp x, exp(y + [x,y]/2)).
SemiGroupElement exp_semi(const SemiAlgebraElement &u);
/// The same map through the direct product, (exp x, exp(x+y) exp(x)^-1).
SemiGroupElement exp_semi_general(const SemiAlgebraElement &u);

/// (R(x), x)
SemiAlgebraElement graph(const OperatorMatrix &R, const AlgebraElement &x);
GraphPoint graph_point(const OperatorMatrix &R, const AlgebraElement &x);

/// x + [R(x), x]/2. Requires r31 = r32 = 0 (UnsupportedShape otherwise).
AlgebraElement p_map(const OperatorMatrix &R, const AlgebraElement &x);
/// Inverse of p_map: x - [R(x), x]/2.
AlgebraElement p_inverse(const OperatorMatrix &R, const AlgebraElement &x);

/// exp_semi(graph(R, x)) = (exp R(x), exp p_map(R, x)).
SemiGroupElement exp_graph(const OperatorMatrix &R, const AlgebraElement &x);
/// z with exp_graph(R, x) exp_graph(R, y) = exp_graph(R, z) for a weight-1 operator:
/// x + y + ([Rx, y] + [x, Ry] + [x, y])/2.
AlgebraElement graph_product_parameter(const OperatorMatrix &R, const AlgebraElement &x, const AlgebraElement &y);

} // namespace heisrb

#endif
