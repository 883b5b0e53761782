#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "redux/poly_json.hpp"
#include "redux/poly_matrix.hpp"
#include "redux/polynomial.hpp"

namespace redux::hyperbolic {

/// p = h^4 - beta h^2 |x|^2 + Q with h a fresh variable placed first.
struct HyperbolicityArtifact {
  Polynomial source_q;
  Polynomial p;
  std::vector<Rational> e;  ///< (1, 0, ..., 0)
  Rational beta;
  Rational C;
  std::size_t n;
  std::string h_name;
};

/// Q must be a nonzero quartic form over the rationals.
HyperbolicityArtifact build_hyperbolicity(const Polynomial& Q);

/// 4x4 parametrized Bezoutian of a quartic form in direction e.
SymmetricPolyMatrix bezoutian(const Polynomial& p, std::span<const Rational> e);

/// The expected Bezoutian on h = 0, written in terms of Q, beta and |x|^2.
SymmetricPolyMatrix hyperplane_matrix(const HyperbolicityArtifact& art);

/// Bezoutian with the homogenizing variable set to zero.
SymmetricPolyMatrix restrict_to_hyperplane(const HyperbolicityArtifact& art, const SymmetricPolyMatrix& B);

struct SchurConditions {
  Polynomial cond_a;  ///< Q
  Polynomial cond_b;  ///< beta^2/4 |x|^4 - Q
};
/// Both on p's layout.
SchurConditions schur_condition(const HyperbolicityArtifact& art);

struct StabilityArtifact {
  Polynomial ptilde;  ///< over u.1..u.2n
  RationalMatrix M;   ///< (n+1) x 2n, columns e0 + eps e_i, e0 - eps e_i
  Rational eps;
  unsigned long K;    ///< eps = 1/K
};

/// Smallest K with K > 2n and K^2 > 2 beta.
unsigned long choose_eps_denominator(std::size_t n, const Rational& beta);

StabilityArtifact build_stability(const HyperbolicityArtifact& art);

/// (1 - beta eps^2) |x|^4 + eps^4 Q on Q's layout.
Polynomial eps_positivity_poly(const HyperbolicityArtifact& art, const Rational& eps);

struct ConvexityArtifact {
  Polynomial b;
  Polynomial f;
  Rational gamma;
  std::size_t n;
  std::vector<std::string> xs;
  std::vector<std::string> ys;
};

/// b biquadratic on (xs, ys) with |xs| = |ys|.
ConvexityArtifact build_convexity(const Polynomial& b, const std::vector<std::string>& xs,
                                  const std::vector<std::string>& ys);

json hyperbolicity_to_json(const HyperbolicityArtifact& art);
HyperbolicityArtifact hyperbolicity_from_json(const json& j);
json stability_to_json(const HyperbolicityArtifact& art, const StabilityArtifact& st);
json convexity_to_json(const ConvexityArtifact& art);
ConvexityArtifact convexity_from_json(const json& j);

}  // namespace redux::hyperbolic
