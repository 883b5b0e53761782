#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "redux/polynomial.hpp"

namespace redux {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Square matrix of polynomials on one layout, symmetric by construction.
struct SymmetricPolyMatrix {
  std::size_t dim = 0;
  std::vector<std::vector<Polynomial>> entries;

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries[i][j]; }
  bool is_symmetric() const;
  RationalMatrix evaluate(std::span<const Rational> point) const;
};

/// Exact determinant by Gaussian elimination over Q.
Rational determinant(const RationalMatrix& A);

/// PSD test for a symmetric rational matrix: every principal minor >= 0.
bool is_psd(const RationalMatrix& A);

bool psd_at_point(const SymmetricPolyMatrix& A, std::span<const Rational> point);

/// Second partial derivatives over every variable of f's layout.
SymmetricPolyMatrix hessian(const Polynomial& f);

/// z^T A z.
Rational quadratic_form(const RationalMatrix& A, std::span<const Rational> z);

}  // namespace redux
