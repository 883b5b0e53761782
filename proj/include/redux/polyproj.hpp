#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "redux/poly_json.hpp"
#include "redux/polynomial.hpp"

namespace redux::polyproj {

using Matrix = std::vector<std::vector<Rational>>;

/// The HN -> PolyProj pair (f, g) over Y = (x.0..x.n, w.1..w.t, z.1..z.t).
struct Artifact {
  PolySystem source;
  Field field;
  LayoutPtr layout;
  std::size_t n;
  std::size_t t;
  std::vector<unsigned> d;  ///< d_i = i + 1, i = 1..t
  std::vector<unsigned> D;  ///< D_i = i + 2(t + 1), i = 1..n
  Polynomial f;
  Polynomial g;

  std::size_t x(std::size_t i) const { return i; }          ///< 0..n
  std::size_t w(std::size_t i) const { return n + i; }      ///< 1..t
  std::size_t z(std::size_t i) const { return n + t + i; }  ///< 1..t
};

/// Rejects degree > 2 inputs, t = 0 and n = 0.
Artifact build(const PolySystem& system);

struct AffineMap {
  Matrix A;
  std::vector<Rational> b;
};

AffineMap forward_witness(const Artifact& art, std::span<const Rational> solution);

/// f(A y + b) == g as canonical polynomials.
bool verify_projection(const Artifact& art, const Matrix& A, std::span<const Rational> b);

struct Extraction {
  std::optional<std::vector<Rational>> solution;
  std::string diagnostic;
};

/// Reads the constant rows for x.1..x.n off a verified projection.
/// Throws InvariantViolation when an accepted projection breaks the
/// constancy claim or the rows fail the source system.
Extraction extract_solution(const Artifact& art, const Matrix& A, std::span<const Rational> b);

/// Checks made on an accepted projection: the x.1..x.n forms are constant,
/// and (P_k Q_k)^{d_k} = (w_k z_k)^{d_k} where P_k, Q_k replace w_k, z_k.
/// `literal_products` records whether P_k Q_k = w_k z_k holds outright.
struct ClaimReport {
  bool constant_rows = false;
  bool product_powers = false;
  bool literal_products = false;
};
ClaimReport check_claims(const Artifact& art, const Matrix& A, std::span<const Rational> b);

Matrix identity(std::size_t size);

json artifact_to_json(const Artifact& art);
Artifact artifact_from_json(const json& j);
json matrix_to_json(const Matrix& A);
Matrix matrix_from_json(const json& j, const Field& field);

}  // namespace redux::polyproj
