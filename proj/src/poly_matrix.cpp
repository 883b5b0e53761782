#include "redux/poly_matrix.hpp"

#include "redux/errors.hpp"

namespace redux {

bool SymmetricPolyMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (!(entries[i][j] == entries[j][i])) return false;
    }
  }
  return true;
}

RationalMatrix SymmetricPolyMatrix::evaluate(std::span<const Rational> point) const {
  RationalMatrix out(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      out[i][j] = entries[i][j].evaluate(point);
      out[j][i] = out[i][j];
    }
  }
  return out;
}

Rational determinant(const RationalMatrix& A) {
  const std::size_t n = A.size();
  RationalMatrix M = A;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(M[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(M[r][c]) == 0) continue;
      Rational f = M[r][c] / M[c][c];
      for (std::size_t k = c; k < n; ++k) M[r][k] -= f * M[c][k];
    }
  }
  return det;
}

bool is_psd(const RationalMatrix& A) {
  const std::size_t n = A.size();
  if (n > 20) throw InputError("is_psd: principal-minor test limited to dimension 20");
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) idx.push_back(i);
    }
    RationalMatrix sub(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = A[idx[i]][idx[j]];
    }
    if (sgn(determinant(sub)) < 0) return false;
  }
  return true;
}

bool psd_at_point(const SymmetricPolyMatrix& A, std::span<const Rational> point) {
  return is_psd(A.evaluate(point));
}

SymmetricPolyMatrix hessian(const Polynomial& f) {
  const std::size_t n = f.layout()->size();
  SymmetricPolyMatrix H;
  H.dim = n;
  H.entries.assign(n, std::vector<Polynomial>(n, Polynomial(f.field(), f.layout())));
  std::vector<Polynomial> first;
  for (std::size_t i = 0; i < n; ++i) first.push_back(partial_derivative(f, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      H.entries[i][j] = partial_derivative(first[i], j);
      H.entries[j][i] = H.entries[i][j];
    }
  }
  return H;
}

Rational quadratic_form(const RationalMatrix& A, std::span<const Rational> z) {
  Rational out = 0;
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (sgn(z[i]) == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < A.size(); ++j) row += A[i][j] * z[j];
    out += z[i] * row;
  }
  return out;
}

}  // namespace redux
