#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redux/parallel.hpp"
#include "redux/poly_json.hpp"
#include "redux/polynomial.hpp"

namespace redux {

struct SampleConfig {
  std::size_t count = 100;
  std::uint64_t seed = 0;
  long bound = 10;
  bool positive = false;  ///< sample points from the open positive orthant
};

/// Outcome of a sampled property check. `index` counts directed samples
/// first, then random ones.
struct Verdict {
  bool violation = false;
  std::size_t checked = 0;
  std::optional<std::size_t> index;
  std::vector<Rational> point;      ///< x, or b for stability
  std::vector<Rational> direction;  ///< a for stability, z for convexity
  Rational value;
  std::string note;

  json to_json() const;
};

/// Enumeration guard, 10^8 unless REDUX_MAX_ENUM is set.
std::uint64_t enumeration_limit();

/// First common root in lexicographic order (x.1 most significant).
/// Throws GuardExceeded when p^n exceeds the guard.
std::optional<std::vector<Rational>> brute_force_hn(const PolySystem& system, Exec exec = Exec::parallel);

/// First shift in lexicographic order that strictly lowers the monomial count.
std::optional<std::vector<Rational>> brute_force_sparseshift(const Polynomial& f, Exec exec = Exec::parallel);

/// Dense coefficients, index k multiplies t^k. The polynomial may involve
/// at most one variable.
std::vector<Rational> univariate_coefficients(const Polynomial& u);

/// Distinct real roots of a nonzero univariate polynomial.
std::size_t count_distinct_real_roots(const std::vector<Rational>& coeffs);

/// True iff every complex root is real. Throws InputError on zero.
bool sturm_real_rooted(const std::vector<Rational>& coeffs);
bool sturm_real_rooted(const Polynomial& u);

/// Coefficients of t -> p(a t + b).
std::vector<Rational> line_restriction(const Polynomial& p, std::span<const Rational> a, std::span<const Rational> b);

Verdict sample_nonneg(const Polynomial& p, const SampleConfig& cfg, Exec exec = Exec::parallel,
                      const std::vector<std::vector<Rational>>& directed = {});

/// Restrictions p(a t + b) with a > 0; directed entries are (a, b) pairs.
Verdict sample_real_stability(const Polynomial& p, const SampleConfig& cfg, Exec exec = Exec::parallel,
                              const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>>& directed = {});

/// p(e) > 0 and p(x + t e) real-rooted; directed entries are points x.
Verdict sample_hyperbolicity(const Polynomial& p, std::span<const Rational> e, const SampleConfig& cfg,
                             Exec exec = Exec::parallel, const std::vector<std::vector<Rational>>& directed = {});

/// z^T H_f(x) z >= 0; directed entries are (x, z) pairs.
Verdict sample_convexity(const Polynomial& f, const SampleConfig& cfg, Exec exec = Exec::parallel,
                         const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>>& directed = {});

}  // namespace redux
