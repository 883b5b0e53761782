#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "redux/poly_json.hpp"
#include "redux/polynomial.hpp"

namespace redux::biquadratic {

struct ChainParams {
  unsigned m = 6;
  Rational weight{400};
  Rational seed0{1, 16};
  Rational y0{1, 4};
};

/// Largest chain length accepted by check_chain. y_0 is raised to
/// (2^{m+2}+2)/3 exactly, which outgrows memory well before this.
inline constexpr unsigned kMaxChainLength = 20;

struct ChainCheck {
  bool hypothesis = false;
  bool side_conditions = false;
  bool bound = false;
  Rational lhs;  ///< 400 (sum (y_k - y_{k-1} z_{k-1})^2 + sum (y_k - z_k)^2)
};

/// ys and zs are y_0..y_m and z_0..z_m.
ChainCheck check_chain(const std::vector<Rational>& ys, const std::vector<Rational>& zs);

/// y_k = z_k = 4^{-2^k}, k = 0..m.
std::vector<Rational> canonical_chain(unsigned m);

/// log2 of the distance bound 2^{-2^{L+5}}.
Integer gap_bound_log2(unsigned L);

struct Artifact {
  PolySystem source;
  ChainParams chain;
  std::size_t n;
  Polynomial g;  ///< over x.0..x.n, w.0..w.n
  Polynomial h;  ///< over x.0..x.{n+1}, w.0..w.{n+1}, y.1..y.m, z.1..z.m
  Polynomial Q;  ///< h's layout plus alpha, beta
  std::vector<std::string> part_a;  ///< x, y, alpha
  std::vector<std::string> part_b;  ///< w, z, beta
};

Polynomial build_g(const PolySystem& system);
Polynomial build_h(const Polynomial& g, std::size_t n, const ChainParams& chain);
Artifact build(const PolySystem& system, unsigned m);

/// Point on Q's layout with Q(point) < 0, from a rational root whose
/// complement 1 - sum root_i^2 is the square of a rational.
std::vector<Rational> forward_witness(const Artifact& art, std::span<const Rational> root);

json artifact_to_json(const Artifact& art);
Artifact artifact_from_json(const json& j);

}  // namespace redux::biquadratic
