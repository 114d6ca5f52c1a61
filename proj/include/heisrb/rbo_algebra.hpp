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

#ifndef HEISRB_RBO_ALGEBRA_HPP
#define HEISRB_RBO_ALGEBRA_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heisrb/heisenberg.hpp"
#include "heisrb/scalar.hpp"

namespace heisrb {

/// Linear operator on the Heisenberg algebra in the row convention
///
///     R(X) = r11 X + r12 Y + r13 Z
///     R(Y) = r21 X + r22 Y + r23 Z
///     R(Z) = r31 X + r32 Y + r33 Z
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(Matrix3 r) : r_(std::move(r)) {}

    static OperatorMatrix zero() { return {}; }
    static OperatorMatrix identity();
    /// Every entry r_ij is the indeterminate "rij"; r31 = r32 = 0 when `classified_shape`.
    static OperatorMatrix generic(bool classified_shape = true);

    /// Entry r_ij with 1-based indices.
    const Scalar &r(int i, int j) const { return r_.at(i - 1).at(j - 1); }
    Scalar &r(int i, int j) { return r_.at(i - 1).at(j - 1); }
    const Matrix3 &entries() const noexcept { return r_; }

    /// r31 = r32 = 0, the only shape a weight-1 operator can have.
    bool has_classified_shape() const { return r_[2][0].is_zero() && r_[2][1].is_zero(); }
    bool is_numeric() const;
    OperatorMatrix substitute(const Assignment &assignment) const;

    friend OperatorMatrix operator-(const OperatorMatrix &m);
    friend bool operator==(const OperatorMatrix &, const OperatorMatrix &) = default;

private:
    Matrix3 r_{};
};

std::string to_string(const OperatorMatrix &m);
inline std::ostream &operator<<(std::ostream &os, const OperatorMatrix &m) { return os << to_string(m); }

AlgebraElement apply(const OperatorMatrix &R, const AlgebraElement &x);

/// Basis pair on which the Rota-Baxter identity fails, with both sides.
struct AxiomWitness {
    std::string pair; // "X,Y", "X,Z" or "Y,Z"
    AlgebraElement lhs;
    AlgebraElement rhs;
};

struct RboVerdict {
    bool holds = false;
    std::optional<AxiomWitness> witness;

    explicit operator bool() const noexcept { return holds; }
};

/// [Rx, Ry] = R([Rx, y] + [x, Ry] + weight [x, y]) on the three basis pairs,
/// which by bilinearity is the identity on all of the algebra.
RboVerdict check_rbo_identity(const OperatorMatrix &R, const Scalar &weight);
inline RboVerdict is_rbo_weight1(const OperatorMatrix &R) { return check_rbo_identity(R, 1); }
inline RboVerdict is_rbo_weight_minus1(const OperatorMatrix &R) { return check_rbo_identity(R, -1); }

// ---------------------------------------------------------------------------
// Classified families

enum class Family { R1, R2, R3, R4, P1, P2, P3, P4 };

std::string_view to_string(Family f);
/// Throws Error for unknown names.
Family family_from_string(std::string_view name);
/// Free parameters of a family, e.g. P1 -> {r13, r22, r23, r33}.
const std::vector<std::string> &family_parameters(Family f);

struct FamilyTag {
    Family family = Family::P3;
    std::map<std::string, Scalar> params;
    /// Side-condition expressions that must be nonzero but were left symbolic.
    std::vector<Scalar> excluded;

    friend bool operator==(const FamilyTag &, const FamilyTag &) = default;
};

/// Fills unspecified parameters with the indeterminate of the same name,
/// validates parameter names and checks the family's side condition.
/// Throws SideConditionViolated when the condition expression is zero.
FamilyTag complete_family(Family family, std::map<std::string, Scalar> params = {});

/// Matrix of the family for the (completed) tag.
OperatorMatrix make_family(const FamilyTag &tag);
inline OperatorMatrix make_family(Family family, std::map<std::string, Scalar> params = {})
{
    return make_family(complete_family(family, std::move(params)));
}

/// psi o R o psi^-1 in the basis.
OperatorMatrix conjugate(const OperatorMatrix &R, const AlgebraAutomorphism &psi);

// ---------------------------------------------------------------------------
// Jordan reduction of the leading 2x2 block

using Block2 = std::array<std::array<Scalar, 2>, 2>;

enum class JordanNote { Diagonalizable, Defective, Scalar };
std::string_view to_string(JordanNote note);

struct JordanForm {
    Block2 form;
    JordanNote note = JordanNote::Diagonalizable;
    /// Sorted larger first (lexicographic on real, imaginary part).
    std::array<GaussianRational, 2> eigenvalues;
    /// Invertible B with B^-1 M B = form.
    Block2 basis;
};

/// Exact Jordan form of a numeric 2x2 block; throws IrrationalEigenvalues when
/// the eigenvalues are not in Q(i).
JordanForm jordan_2x2(const Block2 &m);

Block2 leading_block(const OperatorMatrix &R);

struct Classification {
    FamilyTag r_family;
    /// Present when the Jordan reduction stays inside Q(i).
    std::optional<FamilyTag> p_family;
    std::optional<JordanForm> jordan;
    /// Automorphism taking R to make_family(*p_family) under conjugate().
    std::optional<AlgebraAutomorphism> to_canonical;
    /// Reason the P-family is missing.
    std::string p_family_error;
};

/// Matches a numeric weight-1 operator against R1-R4 and its Jordan
/// canonical form against P1-P4. Throws NotAnRbo.
Classification classify(const OperatorMatrix &R);

} // namespace heisrb

#endif
