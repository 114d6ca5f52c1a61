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

#ifndef HEISRB_POLY_HPP
#define HEISRB_POLY_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "heisrb/gaussian.hpp"

namespace heisrb {

using Exponents = std::vector<std::uint32_t>;

struct Term {
    Exponents exps;
    GaussianRational coeff;

    friend bool operator==(const Term &, const Term &) = default;
};

/// Sparse multivariate polynomial over Q(i).
///
/// Canonical form: `variables()` lists exactly the indeterminates that occur,
/// sorted by name; `terms()` holds nonzero coefficients in descending graded
/// lexicographic order (earlier names are more significant). Two polynomials
/// are equal iff their stored representations are identical.
class Poly {
public:
    Poly() = default;
    Poly(GaussianRational constant); // NOLINT(google-explicit-constructor)
    Poly(std::int64_t constant) : Poly(GaussianRational(constant)) {} // NOLINT(google-explicit-constructor)

    static Poly variable(const std::string &name);
    /// name^power
    static Poly power_of(const std::string &name, std::uint32_t power);
    /// Sum of coefficients[k] * name^k; coefficients must not contain `name`.
    static Poly from_coefficients(const std::string &name, const std::vector<Poly> &coefficients);

    const std::vector<std::string> &variables() const noexcept { return vars_; }
    const std::vector<Term> &terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return vars_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// Value of a constant polynomial.
    GaussianRational constant_value() const;
    /// Coefficient of the grlex-leading term; zero for the zero polynomial.
    GaussianRational leading_coefficient() const;

    std::uint32_t total_degree() const;
    std::uint32_t degree_in(const std::string &name) const;
    bool has_variable(const std::string &name) const;

    /// Coefficients of this as a univariate polynomial in `name`, indexed by power.
    std::vector<Poly> coefficients_in(const std::string &name) const;
    /// Nonzero coefficients of this viewed as a polynomial in `names` over the
    /// remaining variables (one entry per distinct monomial in `names`).
    std::vector<Poly> coefficients_over(const std::vector<std::string> &names) const;

    /// Scaled so the leading coefficient is 1 (zero stays zero).
    Poly monic() const;
    Poly pow(std::uint32_t n) const;

    /// Quotient when `divisor` divides `dividend` exactly, otherwise nullopt.
    static std::optional<Poly> divide_exact(const Poly &dividend, const Poly &divisor);

    /// Greatest common divisor, normalized to leading coefficient 1 (gcd(0, 0) = 0).
    friend Poly gcd(const Poly &a, const Poly &b);

    /// Canonical rendering per the scalar grammar (powers written as repeated products).
    std::string to_string() const;

    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const Poly &o);
    Poly &operator*=(const GaussianRational &c);

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const GaussianRational &c) { return a *= c; }
    friend Poly operator-(const Poly &a);

    friend bool operator==(const Poly &, const Poly &) = default;

    friend std::ostream &operator<<(std::ostream &os, const Poly &p) { return os << p.to_string(); }

private:
    Poly(std::vector<std::string> vars, std::vector<Term> terms);

    /// Sort, combine like terms, drop zeros and unused variables.
    void canonicalize();
    /// Re-express exponent vectors over `vars` (a superset of vars_).
    std::vector<Term> terms_over(const std::vector<std::string> &vars) const;

    std::vector<std::string> vars_;
    std::vector<Term> terms_;
};

} // namespace heisrb

#endif
