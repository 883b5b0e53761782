#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "redux/polynomial.hpp"

namespace redux::corpus {

/// Seeded instance generators shared by the acceptance suite, the tests and
/// the benchmark.

/// Random system: each polynomial has 1..max_terms terms of degree <= max_degree.
PolySystem random_system(std::mt19937_64& rng, const Field& field, std::size_t nvars, std::size_t npolys,
                         unsigned max_degree, std::size_t max_terms);

/// Degree <= 2 system over `field` with `root` as a common zero. At least
/// one polynomial carries a nonzero constant when root != 0.
PolySystem planted_quadratic_system(std::mt19937_64& rng, const Field& field, std::span<const Rational> root,
                                    std::size_t npolys);

/// Five fixed degree <= 2 systems over GF(67) with no common root.
std::vector<PolySystem> unsat_gf67();

/// Systems over Q with a root at the origin.
std::vector<PolySystem> origin_root_systems();

/// Systems over Q with no real root in the ball of radius sqrt(3/2).
std::vector<PolySystem> ball_infeasible_systems();

/// Layout X.1..X.n, Y.1..Y.n.
LayoutPtr bipartite_layout(std::size_t n);
std::vector<std::string> x_names(std::size_t n);
std::vector<std::string> y_names(std::size_t n);

/// Random biquadratic form on bipartite_layout(n) with integer coefficients in [-bound, bound].
Polynomial random_biquadratic(std::mt19937_64& rng, std::size_t n, long bound);

/// Random bilinear form sum c_ij X_i Y_j, never zero.
Polynomial random_bilinear(std::mt19937_64& rng, std::size_t n, long bound);

/// Sum of `k` squares of random bilinear forms.
Polynomial bilinear_square_sum(std::mt19937_64& rng, std::size_t n, std::size_t k, long bound);

/// Random quartic (not necessarily homogeneous) in `nvars` variables x.1..
Polynomial random_quartic(std::mt19937_64& rng, std::size_t nvars, long bound);

}  // namespace redux::corpus
