// Shared generators for the property-style tests.

#ifndef HEISRB_TESTS_SUPPORT_HPP
#define HEISRB_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "heisrb/scalar.hpp"

namespace heisrb::testing {

using Rng = std::mt19937_64;

inline std::int64_t small_int(Rng &rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational random_rational(Rng &rng, std::int64_t bound = 9)
{
    return Rational(small_int(rng, -bound, bound), small_int(rng, 1, bound));
}

inline GaussianRational random_gaussian(Rng &rng, bool complex = true)
{
    if (!complex || small_int(rng, 0, 2) == 0)
        return random_rational(rng);
    return {random_rational(rng), random_rational(rng)};
}

inline Scalar random_numeric(Rng &rng) { return random_gaussian(rng); }

/// Small random polynomial in the given names.
inline Scalar random_poly(Rng &rng, const std::vector<std::string> &names, int terms = 3, int max_degree = 2)
{
    Scalar out;
    for (int t = 0; t < terms; ++t) {
        Scalar term = random_gaussian(rng);
        for (const auto &n : names) {
            const auto e = small_int(rng, 0, max_degree);
            term *= Scalar::var(n).pow(static_cast<std::uint32_t>(e));
        }
        out += term;
    }
    return out;
}

/// Small random rational function: a sparse numerator over an affine-linear denominator.
inline Scalar random_symbolic(Rng &rng, const std::vector<std::string> &names)
{
    Scalar num = random_poly(rng, names, 2, 2);
    Scalar den = Scalar(random_rational(rng));
    den += Scalar::var(names[static_cast<std::size_t>(small_int(rng, 0, static_cast<std::int64_t>(names.size()) - 1))]);
    return num / den;
}

} // namespace heisrb::testing

#endif
