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

#include "heisrb/semidirect.hpp"

#include "heisrb/error.hpp"

namespace heisrb {

namespace {

const Scalar kHalf = Scalar::ratio(1, 2);

void require_shape(const OperatorMatrix &R)
{
    if (!R.has_classified_shape())
        throw UnsupportedShape("operator needs r31 = r32 = 0, got r31 = " + R.r(3, 1).to_string() +
                               ", r32 = " + R.r(3, 2).to_string());
}

} // namespace

std::string to_string(const SemiAlgebraElement &u) { return "(" + to_string(u.first) + "," + to_string(u.second) + ")"; }
std::string to_string(const SemiGroupElement &u) { return "(" + to_string(u.first) + "," + to_string(u.second) + ")"; }

SemiAlgebraElement semi_alg_bracket(const SemiAlgebraElement &u, const SemiAlgebraElement &v)
{
    return {bracket(u.first, v.first),
            bracket(u.first, v.second) + bracket(u.second, v.first) + bracket(u.second, v.second)};
}

SemiGroupElement semi_grp_mul(const SemiGroupElement &u, const SemiGroupElement &v)
{
    return {grp_mul(u.first, v.first), grp_mul(grp_mul(u.second, u.first), grp_mul(v.second, grp_inv(u.first)))};
}

SemiGroupElement semi_grp_inv(const SemiGroupElement &u)
{
    const GroupElement inv = grp_inv(u.first);
    return {inv, grp_mul(grp_mul(inv, grp_inv(u.second)), u.first)};
}

AlgebraPair phi_alg(const SemiAlgebraElement &u) { return {u.second + u.first, u.first}; }
SemiAlgebraElement phi_alg_inverse(const AlgebraPair &p) { return {p.second, p.first - p.second}; }

GroupPair phi_grp(const SemiGroupElement &u) { return {grp_mul(u.second, u.first), u.first}; }
SemiGroupElement phi_grp_inverse(const GroupPair &p) { return {p.second, grp_mul(p.first, grp_inv(p.second))}; }

SemiGroupElement exp_semi(const SemiAlgebraElement &u)
{
    return {exp(u.first), exp(u.second + kHalf * bracket(u.first, u.second))};
}

SemiGroupElement exp_semi_general(const SemiAlgebraElement &u)
{
    const auto [sum, base] = phi_alg(u);
    return phi_grp_inverse({exp(sum), exp(base)});
}

SemiAlgebraElement graph(const OperatorMatrix &R, const AlgebraElement &x) { return {apply(R, x), x}; }
GraphPoint graph_point(const OperatorMatrix &R, const AlgebraElement &x) { return {x, apply(R, x)}; }

AlgebraElement p_map(const OperatorMatrix &R, const AlgebraElement &x)
{
    require_shape(R);
    return x + kHalf * bracket(apply(R, x), x);
}

AlgebraElement p_inverse(const OperatorMatrix &R, const AlgebraElement &x)
{
    // the correction only sees the X, Y part, which p_map leaves alone
    require_shape(R);
    return x - kHalf * bracket(apply(R, x), x);
}

SemiGroupElement exp_graph(const OperatorMatrix &R, const AlgebraElement &x) { return exp_semi(graph(R, x)); }

AlgebraElement graph_product_parameter(const OperatorMatrix &R, const AlgebraElement &x, const AlgebraElement &y)
{
    const auto rx = apply(R, x);
    const auto ry = apply(R, y);
    return x + y + kHalf * (bracket(rx, y) + bracket(x, ry) + bracket(x, y));
}

} // namespace heisrb
