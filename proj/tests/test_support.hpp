#pragma once

#include "tiltcert/chern.hpp"
#include "tiltcert/polynomial.hpp"
#include "tiltcert/rational.hpp"

#include <random>

namespace tiltcert::testing {

/// Seeded source of small random rationals and polynomials.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long num_bound = 20, long den_bound = 12) {
        return Rational(integer(-num_bound, num_bound), integer(1, den_bound));
    }

    /// Uniform-ish rational in [lo, hi].
    Rational rational_in(const Rational& lo, const Rational& hi, long steps = 997) {
        return lo + (hi - lo) * Rational(integer(0, steps), steps);
    }

    BivariatePoly poly(unsigned max_degree = 3, int terms = 5) {
        BivariatePoly p;
        for (int i = 0; i < terms; ++i) {
            const auto da = static_cast<unsigned>(integer(0, max_degree));
            const auto db = static_cast<unsigned>(integer(0, max_degree - da));
            p += BivariatePoly::monomial(rational(9, 6), da, db);
        }
        return p;
    }

    ChernCharacter character() { return {rational(6, 3), rational(6, 3), rational(6, 6), rational(6, 6)}; }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace tiltcert::testing
