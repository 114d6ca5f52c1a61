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

#ifndef HEISRB_RBO_GROUP_HPP
#define HEISRB_RBO_GROUP_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "heisrb/heisenberg.hpp"
#include "heisrb/rbo_algebra.hpp"

namespace heisrb {

/// Rota-Baxter operator on the Heisenberg group induced by an algebra operator R
/// with r31 = r32 = 0. Maps (a, b, c) to
///
///     (a r11 + b r21,  a r12 + b r22,  a r13 + b r23 + c r33 + k_aa a^2 + k_bb b^2 + k_ab ab)
///
/// with the quadratic coefficients k computed once from R.
class GroupOperator {
public:
    const OperatorMatrix &source() const noexcept { return source_; }
    const Scalar &coeff_aa() const noexcept { return k_aa_; }
    const Scalar &coeff_bb() const noexcept { return k_bb_; }
    const Scalar &coeff_ab() const noexcept { return k_ab_; }

    GroupElement operator()(const GroupElement &g) const;
    GroupMap as_map() const;

private:
    explicit GroupOperator(OperatorMatrix source);
    friend GroupOperator induce(const OperatorMatrix &R, bool require_rbo);

    OperatorMatrix source_;
    Scalar k_aa_, k_bb_, k_ab_;
};

/// Closed-form induced operator. Throws UnsupportedShape when r31 or r32 is
/// nonzero and, if require_rbo, NotAnRbo when R fails the weight-1 identity.
/// With require_rbo = false the map is still defined but need not be an RBO.
GroupOperator induce(const OperatorMatrix &R, bool require_rbo = true);

/// exp(R(p_inverse(log g))), the route through the algebra. Same errors as induce.
GroupElement induce_via_exp(const OperatorMatrix &R, const GroupElement &g, bool require_rbo = true);

struct GroupRboVerdict {
    bool holds = false;
    /// Failing instance: both sides F(g)F(h) and F(g F(g) h F(g)^-1), with g and h.
    std::optional<std::array<GroupElement, 4>> witness;

    explicit operator bool() const noexcept { return holds; }
};

/// F(g) F(h) = F(g F(g) h F(g)^-1) with g, h generic (coordinates a1..c2).
GroupRboVerdict is_group_rbo(const GroupMap &F);
/// The same identity on random numeric g, h; every parameter of F must be numeric.
GroupRboVerdict is_group_rbo_sampled(const GroupMap &F, int samples, std::uint64_t seed);

/// g F(g) h F(g)^-1
GroupElement circle_via_definition(const GroupMap &F, const GroupElement &g, const GroupElement &h);

/// Closed form of the circle product of the induced operator of R.
GroupElement descendant_mul(const OperatorMatrix &R, const GroupElement &g, const GroupElement &h);

/// Third coordinate of the circle product for a P-family, in the coordinates
/// g = (a1, b1, c1), h = (a2, b2, c2). Throws Error for R-families.
Scalar theorem_main_table(const FamilyTag &tag);

/// q grouped by monomials in the coordinates a1..c2 with parameter
/// coefficients, e.g. "c1+c2+a1*b2*(r11+1)+a2*b1". Parses back to q.
std::string render_circle_table(const Scalar &q);

using GroupLaw = std::function<GroupElement(const GroupElement &, const GroupElement &)>;

/// Two group laws on the Heisenberg group: the usual product ("+") and a circle product.
struct BraceStructure {
    GroupLaw additive;
    GroupLaw circle;
    GroupMap circle_inverse;
};

/// The skew brace of the descendant group of F: g o h = g F(g) h F(g)^-1.
BraceStructure descendant_brace(const GroupOperator &F);

struct BraceVerdict {
    bool holds = false;
    /// Name of the first failing axiom ("associativity", "identity", "inverse", "compatibility").
    std::string failed;
    /// Numeric (a, b, c) at which the failing axiom is violated.
    std::optional<std::array<GroupElement, 3>> witness;

    explicit operator bool() const noexcept { return holds; }
};

/// Circle group axioms and a o (b + c) = a o b - a + a o c, all with generic
/// symbolic a, b, c. On failure a numeric witness is searched from `seed`.
BraceVerdict brace_check(const BraceStructure &brace, std::uint64_t seed = 0);

struct TransferReport {
    bool transfers = false;
    /// The three coordinate differences when they do not all vanish.
    std::optional<std::array<Scalar, 3>> witness;
    OperatorMatrix op;
    AlgebraAutomorphism automorphism = AlgebraAutomorphism::identity();
    OperatorMatrix conjugated;
};

/// Compares psi o F_R o psi^-1 with F_{psi R psi^-1} at a generic (a, b, c).
TransferReport equivalence_transfer_experiment(const OperatorMatrix &R, const AlgebraAutomorphism &psi);

} // namespace heisrb

#endif
