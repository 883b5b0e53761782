#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "redux/polynomial.hpp"

namespace redux {

/// A fresh variable and the product of two earlier variables it stands for.
struct VarDefinition {
  std::string name;
  std::string left;
  std::string right;
};

struct FoldPivot {
  std::size_t index;  ///< position of the pivot polynomial in the system
  Rational constant;  ///< its (nonzero) constant term
};

struct NormalizationTrace {
  std::vector<VarDefinition> new_var_defs;
  std::optional<FoldPivot> fold_pivot;
};

struct NormalizedSystem {
  PolySystem system;
  NormalizationTrace trace;
};

/// Rewrites S into an equisatisfiable system of degree <= 2 by introducing
/// u = v1*v2 definitions. The original variables stay a prefix of the output
/// layout; definitions come first in the output, rewritten inputs after.
NormalizedSystem normalize_degree2(const PolySystem& system);

struct FoldResult {
  PolySystem system;
  std::optional<FoldPivot> pivot;
};

/// With pivot g1 (first polynomial with constant c1 != 0), replaces every
/// other g_j with constant c_j != 0 by c1*g_j - c_j*g1.
FoldResult fold_constants(const PolySystem& system);

/// normalize_degree2 followed by fold_constants, with the combined trace.
NormalizedSystem normalize(const PolySystem& system);

/// Appends x^q - x = 0 for every variable. Only q = p is supported.
PolySystem add_subfield_constraints(const PolySystem& system, const Integer& q);

/// Extends a solution of the original system to the normalized layout by
/// evaluating the definitions in order.
std::vector<Rational> extend_solution(const NormalizationTrace& trace, const PolySystem& original,
                                      const PolySystem& normalized, std::span<const Rational> solution);

/// Restricts a solution of the normalized system to the original variables.
std::vector<Rational> restrict_solution(const PolySystem& original, const PolySystem& normalized,
                                        std::span<const Rational> solution);

/// Number of polynomials with a nonzero constant term.
std::size_t constant_bearing_count(const PolySystem& system);

}  // namespace redux
