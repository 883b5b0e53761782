#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "redux/poly_json.hpp"
#include "redux/polynomial.hpp"

namespace redux::sparseshift {

struct Params {
  std::size_t n;  ///< original variable count
  std::size_t t;  ///< number of equations
  std::size_t N;  ///< copies of each auxiliary beta block, n^2 + 2n + 1
  std::size_t M;  ///< size of each Z_i block, n^2 + 2n + 1
  std::size_t r;  ///< number of weighted quadratics g_1..g_r
  std::size_t s;  ///< number of linear constraints L_1..L_s
  std::size_t y1_size;
  std::size_t y2_size;
};

/// Which consistency quadratic g_i encodes: alpha_{ij} - alpha_i alpha_j
/// (k == 0) or beta_{k,ij} - alpha_i alpha_j. Indices are 1-based, i <= j.
struct QuadraticTag {
  int k;
  int i;
  int j;
  bool diagonal() const { return i == j; }
};

/// The HN -> SparseShift gadget with its bookkeeping.
///
/// Layout order: alpha.0, alpha.i, alpha.i.j (i <= j), beta.k.i.j, w.i,
/// y1.i, y2.i, z.i.j. Q_S = P_S + sum_i LIN(Z_i) * L_i holds exactly.
struct Artifact {
  PolySystem source;
  Field field;
  LayoutPtr layout;
  Params params;

  Polynomial ps;
  Polynomial qs;
  Polynomial part1;  ///< LIN(Y1) * g0(alpha)
  Polynomial part2;  ///< sum_i w_i [g_i + gamma_i (alpha_0 + sum_j alpha_j)]
  Polynomial part3;  ///< LIN(Y2) * sum_i alpha_i^2
  Polynomial g0;
  std::vector<Polynomial> g;  ///< g_1..g_r
  std::vector<QuadraticTag> g_index;
  std::vector<Rational> gammas;
  std::vector<Polynomial> linear_constraints;  ///< L_1..L_s
  std::size_t pivot;                           ///< index of the constant-bearing equation in `source`

  std::size_t alpha0() const;
  std::size_t alpha_x(std::size_t i) const;                 ///< 1-based
  std::size_t alpha_xx(std::size_t i, std::size_t j) const; ///< 1-based, any order
};

/// Builds Q_S for a normalized system: degree <= 2 with exactly one
/// equation carrying a nonzero constant. Over GF(p) requires p > 4 n^4.
Artifact build(const PolySystem& system);

/// Shift over the full layout derived from a solution of the source system.
std::vector<Rational> forward_witness(const Artifact& art, std::span<const Rational> solution);

struct Extraction {
  std::optional<std::vector<Rational>> solution;
  std::size_t before = 0;
  std::size_t after = 0;
  std::optional<std::size_t> violated_constraint;  ///< 0-based index into L
  std::string diagnostic;
};

/// Recovers a solution of the source system from a sparsifying shift, or
/// refuses when the shift does not reduce the monomial count of Q_S.
/// Throws InvariantViolation if a sparsifying shift yields a non-solution.
Extraction extract_solution(const Artifact& art, std::span<const Rational> shift);

struct PartDeltas {
  long d1 = 0;  ///< exact Part 1 count change
  long d2 = 0;  ///< exact Part 2 count change
  long d3 = 0;  ///< exact Part 3 count change
  std::size_t v1 = 0;  ///< #{i : g_i(a,b) != 0}
  std::size_t v2 = 0;  ///< #{j : a_j equals some gamma_i}
  /// Monomials of Part 2 actually cancelled by the shift: off-diagonal
  /// w_i alpha_p with a_q = gamma_i, and diagonal w_i alpha_p with
  /// 2 a_p = gamma_i.
  std::size_t part2_losses = 0;
  bool eq3_holds = false;  ///< a_0 + sum_j a_j == 0
  bool g0_vanishes = false;
};

/// Per-part monomial count changes for the (alpha, beta) component of a
/// shift; the Y and Z components are treated as zero.
PartDeltas monomial_delta_parts(const Artifact& art, std::span<const Rational> shift);

/// Index of the first L_i with L_i(a,b) != 0.
std::optional<std::size_t> first_violated_constraint(const Artifact& art, std::span<const Rational> shift);

/// a satisfies S1 u S2 u S3 (alpha part of the point only).
bool satisfies_lifted_system(const Artifact& art, std::span<const Rational> point);

json artifact_to_json(const Artifact& art);
/// Rebuilds from the embedded source and checks the stored Q_S matches.
Artifact artifact_from_json(const json& j);

/// Shift vector from JSON: an array aligned with the layout or an object
/// mapping variable names to values (missing entries are zero).
std::vector<Rational> shift_from_json(const Artifact& art, const json& j);

}  // namespace redux::sparseshift
