#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "redux/field.hpp"

namespace redux {

/// Independent generator for sample `index` of a run seeded with `seed`.
/// Sample streams do not depend on how samples are spread over threads.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// Numerator uniform in [-bound, bound], denominator uniform in [1, bound].
Rational random_rational(std::mt19937_64& rng, long bound);
/// Numerator uniform in [1, bound], denominator uniform in [1, bound].
Rational random_positive_rational(std::mt19937_64& rng, long bound);
std::vector<Rational> random_rationals(std::mt19937_64& rng, std::size_t n, long bound);
std::vector<Rational> random_positive_rationals(std::mt19937_64& rng, std::size_t n, long bound);
/// Uniform canonical element of GF(p); rationals fall back to random_rational.
Rational random_element(std::mt19937_64& rng, const Field& field, long bound = 10);

}  // namespace redux
