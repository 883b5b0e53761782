#include "redux/sparseshift.hpp"

#include <algorithm>

#include "redux/errors.hpp"

namespace redux::sparseshift {

namespace {

std::size_t pair_count(std::size_t n) { return n * (n + 1) / 2; }

// Position of (i, j), 1 <= i <= j <= n, in row-major upper-triangular order.
std::size_t pair_rank(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  // Pairs (a, b) with a < i: sum_{a=1}^{i-1} (n - a + 1).
  std::size_t before = (i - 1) * n - (i - 1) * (i - 2) / 2;
  return before + (j - i);
}

Polynomial lin(const Field& field, const LayoutPtr& layout, std::size_t first, std::size_t count) {
  std::vector<Term> terms;
  terms.reserve(count);
  for (std::size_t k = 0; k < count; ++k) terms.push_back({Monomial::of(static_cast<std::uint32_t>(first + k)), 1});
  return Polynomial::from_terms(field, layout, std::move(terms));
}

}  // namespace

std::size_t Artifact::alpha0() const { return 0; }

std::size_t Artifact::alpha_x(std::size_t i) const { return i; }

std::size_t Artifact::alpha_xx(std::size_t i, std::size_t j) const {
  return 1 + params.n + pair_rank(params.n, i, j);
}

Artifact build(const PolySystem& system) {
  const Field& field = system.field;
  const std::size_t n = system.num_vars();
  const std::size_t t = system.polys.size();

  if (system.max_degree() > 2) throw InputError("hn-to-sparseshift: system not normalized (degree > 2)");
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < t; ++i) {
    if (sgn(system.polys[i].constant_term()) != 0) {
      if (pivot) throw InputError("hn-to-sparseshift: system not normalized (several nonzero constant terms)");
      pivot = i;
    }
  }
  if (!pivot) {
    throw InputError("hn-to-sparseshift: zero constant term everywhere (trivially satisfiable by the origin)");
  }
  if (field.is_prime_field()) {
    Integer bound = 4;
    for (int k = 0; k < 4; ++k) bound *= static_cast<unsigned long>(n);
    if (field.modulus() <= bound) {
      throw InputError("hn-to-sparseshift: field too small, need p > 4n^4 = " + bound.get_str());
    }
  }

  Params params{};
  params.n = n;
  params.t = t;
  params.N = n * n + 2 * n + 1;
  params.M = n * n + 2 * n + 1;
  const std::size_t pairs = pair_count(n);
  params.r = (params.N + 1) * pairs;
  params.s = (t - 1) + params.N * pairs + 1;
  params.y1_size = n * n + n + 1;
  params.y2_size = n;

  // Layout.
  std::vector<VarName> names;
  names.push_back(var("alpha", {0}));
  for (std::size_t i = 1; i <= n; ++i) names.push_back(var("alpha", {int(i)}));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) names.push_back(var("alpha", {int(i), int(j)}));
  }
  const std::size_t beta_start = names.size();
  for (std::size_t k = 1; k <= params.N; ++k) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) names.push_back(var("beta", {int(k), int(i), int(j)}));
    }
  }
  const std::size_t w_start = names.size();
  for (std::size_t i = 1; i <= params.r; ++i) names.push_back(var("w", {int(i)}));
  const std::size_t y1_start = names.size();
  for (std::size_t i = 1; i <= params.y1_size; ++i) names.push_back(var("y1", {int(i)}));
  const std::size_t y2_start = names.size();
  for (std::size_t i = 1; i <= params.y2_size; ++i) names.push_back(var("y2", {int(i)}));
  const std::size_t z_start = names.size();
  for (std::size_t i = 1; i <= params.s; ++i) {
    for (std::size_t j = 1; j <= params.M; ++j) names.push_back(var("z", {int(i), int(j)}));
  }
  LayoutPtr layout = make_layout(names);

  Artifact art{system, field, layout, params,
               Polynomial(field, layout), Polynomial(field, layout), Polynomial(field, layout),
               Polynomial(field, layout), Polynomial(field, layout), Polynomial(field, layout),
               {}, {}, {}, {}, *pivot};

  auto alpha = [&](std::size_t pos) { return Polynomial::variable(field, layout, pos); };
  auto beta = [&](std::size_t k, std::size_t i, std::size_t j) {
    return Polynomial::variable(field, layout, beta_start + (k - 1) * pairs + pair_rank(n, i, j));
  };

  // f -> c + sum_m c_m alpha_m.
  auto lift = [&](const Polynomial& f) {
    std::vector<Term> terms;
    for (const auto& term : f.terms()) {
      const auto& fs = term.mono.factors();
      Monomial m;
      if (fs.empty()) {
        m = Monomial{};
      } else if (term.mono.degree() == 1) {
        m = Monomial::of(static_cast<std::uint32_t>(art.alpha_x(fs[0].var + 1)));
      } else if (fs.size() == 1) {
        m = Monomial::of(static_cast<std::uint32_t>(art.alpha_xx(fs[0].var + 1, fs[0].var + 1)));
      } else {
        m = Monomial::of(static_cast<std::uint32_t>(art.alpha_xx(fs[0].var + 1, fs[1].var + 1)));
      }
      terms.push_back({m, term.coeff});
    }
    return Polynomial::from_terms(field, layout, std::move(terms));
  };

  art.g0 = lift(system.polys[*pivot]);

  // g_1..g_r: consistency quadratics first, then the beta copies.
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      art.g.push_back(alpha(art.alpha_xx(i, j)) - alpha(art.alpha_x(i)) * alpha(art.alpha_x(j)));
      art.g_index.push_back({0, int(i), int(j)});
    }
  }
  for (std::size_t k = 1; k <= params.N; ++k) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        art.g.push_back(beta(k, i, j) - alpha(art.alpha_x(i)) * alpha(art.alpha_x(j)));
        art.g_index.push_back({int(k), int(i), int(j)});
      }
    }
  }

  for (std::size_t i = 1; i <= params.r; ++i) art.gammas.push_back(field.element(i));

  Polynomial s3 = alpha(art.alpha0());
  for (std::size_t i = 1; i <= n; ++i) s3 += alpha(art.alpha_x(i));

  art.part1 = lin(field, layout, y1_start, params.y1_size) * art.g0;
  {
    TermAccumulator acc(field, layout);
    for (std::size_t i = 0; i < params.r; ++i) {
      Polynomial w = Polynomial::variable(field, layout, w_start + i);
      acc.add(w * (art.g[i] + s3.scaled(art.gammas[i])));
    }
    art.part2 = std::move(acc).finish();
  }
  {
    Polynomial squares(field, layout);
    for (std::size_t i = 1; i <= n; ++i) squares += alpha(art.alpha_x(i)).pow(2);
    art.part3 = lin(field, layout, y2_start, params.y2_size) * squares;
  }
  art.ps = art.part1 + art.part2 + art.part3;

  // L_1..L_s: remaining equations of S1, then alpha_ij - beta_kij, then S3.
  for (std::size_t j = 0; j < t; ++j) {
    if (j != *pivot) art.linear_constraints.push_back(lift(system.polys[j]));
  }
  for (std::size_t k = 1; k <= params.N; ++k) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) art.linear_constraints.push_back(alpha(art.alpha_xx(i, j)) - beta(k, i, j));
    }
  }
  art.linear_constraints.push_back(s3);
  if (art.linear_constraints.size() != params.s) throw InvariantViolation("sparseshift: constraint count != s");

  TermAccumulator acc(field, layout);
  acc.add(art.ps);
  for (std::size_t i = 0; i < params.s; ++i) {
    const auto& L = art.linear_constraints[i];
    if (sgn(L.constant_term()) != 0) throw InvariantViolation("sparseshift: L_" + std::to_string(i + 1) + " has a constant");
    acc.add(lin(field, layout, z_start + i * params.M, params.M) * L);
  }
  art.qs = std::move(acc).finish();
  return art;
}

std::vector<Rational> forward_witness(const Artifact& art, std::span<const Rational> solution) {
  const auto n = art.params.n;
  if (solution.size() != n) throw InputError("forward_witness: expected " + std::to_string(n) + " coordinates");
  const Field& field = art.field;
  std::vector<Rational> u;
  for (const auto& v : solution) u.push_back(field.reduce(v));
  if (!art.source.is_satisfied_by(u)) throw InputError("forward_witness: point does not satisfy the system");

  std::vector<Rational> shift(art.layout->size(), 0);
  Rational sum = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    shift[art.alpha_x(i)] = u[i - 1];
    sum = field.add(sum, u[i - 1]);
    for (std::size_t j = i; j <= n; ++j) shift[art.alpha_xx(i, j)] = field.mul(u[i - 1], u[j - 1]);
  }
  shift[art.alpha0()] = field.neg(sum);
  const std::size_t pairs = pair_count(n);
  const std::size_t beta_start = 1 + n + pairs;
  for (std::size_t k = 1; k <= art.params.N; ++k) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        shift[beta_start + (k - 1) * pairs + pair_rank(n, i, j)] = shift[art.alpha_xx(i, j)];
      }
    }
  }
  return shift;
}

std::optional<std::size_t> first_violated_constraint(const Artifact& art, std::span<const Rational> shift) {
  for (std::size_t i = 0; i < art.linear_constraints.size(); ++i) {
    if (sgn(art.linear_constraints[i].evaluate(shift)) != 0) return i;
  }
  return std::nullopt;
}

bool satisfies_lifted_system(const Artifact& art, std::span<const Rational> point) {
  if (sgn(art.g0.evaluate(point)) != 0) return false;
  // The first t-1 constraints are the rest of S1; the last one is S3.
  for (std::size_t i = 0; i + 1 < art.params.t; ++i) {
    if (sgn(art.linear_constraints[i].evaluate(point)) != 0) return false;
  }
  if (sgn(art.linear_constraints.back().evaluate(point)) != 0) return false;
  const Field& field = art.field;
  for (std::size_t i = 1; i <= art.params.n; ++i) {
    for (std::size_t j = i; j <= art.params.n; ++j) {
      if (point[art.alpha_xx(i, j)] != field.mul(point[art.alpha_x(i)], point[art.alpha_x(j)])) return false;
    }
  }
  return true;
}

Extraction extract_solution(const Artifact& art, std::span<const Rational> shift) {
  if (shift.size() != art.layout->size()) throw InputError("extract_solution: shift length mismatch");
  Extraction out;
  out.before = art.qs.monomial_count();
  out.after = shift_substitute(art.qs, shift).monomial_count();
  out.violated_constraint = first_violated_constraint(art, shift);
  if (out.after >= out.before) {
    out.diagnostic = "shift does not sparsify Q_S (" + std::to_string(out.before) + " -> " +
                     std::to_string(out.after) + " monomials)";
    if (out.violated_constraint) out.diagnostic += "; violates L_" + std::to_string(*out.violated_constraint + 1);
    return out;
  }
  if (out.violated_constraint) {
    throw InvariantViolation("sparsifying shift violates L_" + std::to_string(*out.violated_constraint + 1));
  }
  if (!satisfies_lifted_system(art, shift)) {
    throw InvariantViolation("sparsifying shift does not satisfy S1 u S2 u S3");
  }
  std::vector<Rational> solution;
  for (std::size_t i = 1; i <= art.params.n; ++i) solution.push_back(art.field.reduce(shift[art.alpha_x(i)]));
  if (!art.source.is_satisfied_by(solution)) throw InvariantViolation("extracted point does not satisfy the system");
  out.solution = std::move(solution);
  out.diagnostic = "sparsifying shift; solution recovered";
  return out;
}

PartDeltas monomial_delta_parts(const Artifact& art, std::span<const Rational> shift) {
  if (shift.size() != art.layout->size()) throw InputError("monomial_delta_parts: shift length mismatch");
  const Field& field = art.field;
  const auto n = art.params.n;
  // Keep only the alpha and beta components.
  const std::size_t ab_size = 1 + n + pair_count(n) + art.params.N * pair_count(n);
  std::vector<Rational> point(shift.size(), 0);
  for (std::size_t i = 0; i < ab_size; ++i) point[i] = field.reduce(shift[i]);

  auto delta = [&](const Polynomial& part) {
    return static_cast<long>(shift_substitute(part, point).monomial_count()) -
           static_cast<long>(part.monomial_count());
  };
  PartDeltas d;
  d.d1 = delta(art.part1);
  d.d2 = delta(art.part2);
  d.d3 = delta(art.part3);
  for (const auto& gi : art.g) {
    if (sgn(gi.evaluate(point)) != 0) ++d.v1;
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const auto& a = point[art.alpha_x(j)];
    if (std::find(art.gammas.begin(), art.gammas.end(), a) != art.gammas.end()) ++d.v2;
  }
  for (std::size_t i = 0; i < art.g.size(); ++i) {
    const auto& tag = art.g_index[i];
    const auto& gamma = art.gammas[i];
    const auto& ap = point[art.alpha_x(tag.i)];
    const auto& aq = point[art.alpha_x(tag.j)];
    if (tag.diagonal()) {
      if (field.add(ap, ap) == gamma) ++d.part2_losses;
    } else {
      if (ap == gamma) ++d.part2_losses;
      if (aq == gamma) ++d.part2_losses;
    }
  }
  d.eq3_holds = sgn(art.linear_constraints.back().evaluate(point)) == 0;
  d.g0_vanishes = sgn(art.g0.evaluate(point)) == 0;
  return d;
}

json artifact_to_json(const Artifact& art) {
  json constraints = json::array();
  for (const auto& L : art.linear_constraints) constraints.push_back(terms_to_json(L));
  json g_index = json::array();
  for (const auto& tag : art.g_index) g_index.push_back({{"k", tag.k}, {"i", tag.i}, {"j", tag.j}});
  const auto& p = art.params;
  return {{"kind", "hn-to-sparseshift"},
          {"field", field_to_json(art.field)},
          {"vars", art.layout->names()},
          {"source", system_to_json(art.source)},
          {"params",
           {{"n", p.n}, {"t", p.t}, {"N", p.N}, {"M", p.M}, {"r", p.r}, {"s", p.s}, {"Y1", p.y1_size},
            {"Y2", p.y2_size}}},
          {"gammas", rationals_to_json(art.gammas)},
          {"g_index", g_index},
          {"pivot", art.pivot},
          {"PS", terms_to_json(art.ps)},
          {"QS", terms_to_json(art.qs)},
          {"constraints", constraints}};
}

Artifact artifact_from_json(const json& j) {
  try {
    if (j.value("kind", "") != "hn-to-sparseshift") throw InputError("not a hn-to-sparseshift artifact");
    Artifact art = build(system_from_json(j.at("source")));
    if (j.contains("QS")) {
      Polynomial stored = terms_from_json(j.at("QS"), art.field, art.layout);
      if (!(stored == art.qs)) throw InputError("artifact Q_S does not match its embedded source system");
    }
    return art;
  } catch (const json::exception& e) {
    throw InputError(std::string("sparseshift artifact JSON: ") + e.what());
  }
}

std::vector<Rational> shift_from_json(const Artifact& art, const json& j) {
  if (j.is_object() && j.contains("shift")) return shift_from_json(art, j.at("shift"));
  if (j.is_array()) {
    auto v = rationals_from_json(j, art.field);
    if (v.size() != art.layout->size()) {
      throw InputError("shift has " + std::to_string(v.size()) + " entries, layout has " +
                       std::to_string(art.layout->size()));
    }
    return v;
  }
  if (j.is_object()) {
    std::vector<Rational> v(art.layout->size(), 0);
    for (const auto& [name, value] : j.items()) v[art.layout->index(name)] = rational_from_json(value, art.field);
    return v;
  }
  throw InputError("shift: expected an array or a name -> value object");
}

}  // namespace redux::sparseshift
