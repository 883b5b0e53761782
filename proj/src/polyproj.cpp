#include "redux/polyproj.hpp"

#include "redux/errors.hpp"

namespace redux::polyproj {

namespace {

std::vector<Polynomial> affine_forms(const Artifact& art, const Matrix& A, std::span<const Rational> b) {
  const std::size_t size = art.layout->size();
  if (A.size() != size || b.size() != size) {
    throw InputError("projection: expected a " + std::to_string(size) + "x" + std::to_string(size) +
                     " matrix and a length-" + std::to_string(size) + " vector");
  }
  std::vector<Polynomial> forms;
  forms.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (A[i].size() != size) throw InputError("projection: row " + std::to_string(i) + " has wrong length");
    std::vector<Term> terms;
    for (std::size_t j = 0; j < size; ++j) {
      if (sgn(A[i][j]) != 0) terms.push_back({Monomial::of(static_cast<std::uint32_t>(j)), A[i][j]});
    }
    if (sgn(b[i]) != 0) terms.push_back({Monomial{}, b[i]});
    forms.push_back(Polynomial::from_terms(art.field, art.layout, std::move(terms)));
  }
  return forms;
}

}  // namespace

Artifact build(const PolySystem& system) {
  if (system.max_degree() > 2) throw InputError("hn-to-polyproj: degree > 2 polynomial present (normalize first)");
  const std::size_t n = system.num_vars();
  const std::size_t t = system.polys.size();
  if (t == 0) throw InputError("hn-to-polyproj: empty system (t = 0)");
  if (n == 0) throw InputError("hn-to-polyproj: no variables (n = 0)");
  const Field& field = system.field;

  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back(var("x", {int(i)}).str());
  for (std::size_t i = 1; i <= t; ++i) names.push_back(var("w", {int(i)}).str());
  for (std::size_t i = 1; i <= t; ++i) names.push_back(var("z", {int(i)}).str());
  LayoutPtr layout = make_layout(names);

  Artifact art{system, field, layout, n, t, {}, {}, Polynomial(field, layout), Polynomial(field, layout)};
  for (std::size_t i = 1; i <= t; ++i) art.d.push_back(static_cast<unsigned>(i + 1));
  for (std::size_t i = 1; i <= n; ++i) art.D.push_back(static_cast<unsigned>(i + 2 * (t + 1)));

  // Source variable i sits at x.(i+1) in the new layout.
  std::vector<Polynomial> embed;
  for (std::size_t i = 1; i <= n; ++i) embed.push_back(Polynomial::variable(field, layout, art.x(i)));

  auto v = [&](std::size_t pos) { return Polynomial::variable(field, layout, pos); };
  Polynomial f = v(art.x(0));
  Polynomial g = v(art.x(0));
  for (std::size_t i = 1; i <= t; ++i) {
    Polynomial wd = v(art.w(i)).pow(art.d[i - 1]);
    Polynomial zd = v(art.z(i)).pow(art.d[i - 1]);
    f += wd * (affine_substitute(system.polys[i - 1], embed) + zd);
    g += wd * zd;
  }
  for (std::size_t i = 1; i <= n; ++i) f += v(art.x(i)).pow(art.D[i - 1]);
  art.f = std::move(f);
  art.g = std::move(g);

  if (!(2 * art.d.back() < art.D.front())) throw InvariantViolation("polyproj: degree ladder gap");
  if (art.g.total_degree() != int(2 * art.d.back())) throw InvariantViolation("polyproj: deg g != 2 d_t");
  if (art.f.total_degree() != int(art.D.back())) throw InvariantViolation("polyproj: deg f != D_n");
  return art;
}

Matrix identity(std::size_t size) {
  Matrix A(size, std::vector<Rational>(size, 0));
  for (std::size_t i = 0; i < size; ++i) A[i][i] = 1;
  return A;
}

AffineMap forward_witness(const Artifact& art, std::span<const Rational> solution) {
  if (solution.size() != art.n) throw InputError("forward_witness: expected " + std::to_string(art.n) + " coordinates");
  const Field& field = art.field;
  std::vector<Rational> a;
  for (const auto& v : solution) a.push_back(field.reduce(v));
  if (!art.source.is_satisfied_by(a)) throw InputError("forward_witness: point does not satisfy the system");

  const std::size_t size = art.layout->size();
  AffineMap out{identity(size), std::vector<Rational>(size, 0)};
  Rational shift = 0;
  for (std::size_t i = 1; i <= art.n; ++i) {
    out.A[art.x(i)][art.x(i)] = 0;
    out.b[art.x(i)] = a[i - 1];
    shift = field.add(shift, field.pow(a[i - 1], art.D[i - 1]));
  }
  out.b[art.x(0)] = field.neg(shift);
  return out;
}

bool verify_projection(const Artifact& art, const Matrix& A, std::span<const Rational> b) {
  auto forms = affine_forms(art, A, b);
  return affine_substitute(art.f, forms) == art.g;
}

ClaimReport check_claims(const Artifact& art, const Matrix& A, std::span<const Rational> b) {
  auto forms = affine_forms(art, A, b);
  ClaimReport rep;
  rep.constant_rows = true;
  for (std::size_t i = 1; i <= art.n; ++i) {
    if (forms[art.x(i)].total_degree() > 0) rep.constant_rows = false;
  }
  rep.product_powers = true;
  rep.literal_products = true;
  for (std::size_t k = 1; k <= art.t; ++k) {
    Polynomial pq = forms[art.w(k)] * forms[art.z(k)];
    Polynomial wz = Polynomial::variable(art.field, art.layout, art.w(k)) *
                    Polynomial::variable(art.field, art.layout, art.z(k));
    if (!(pq == wz)) rep.literal_products = false;
    if (!(pq.pow(art.d[k - 1]) == wz.pow(art.d[k - 1]))) rep.product_powers = false;
  }
  return rep;
}

Extraction extract_solution(const Artifact& art, const Matrix& A, std::span<const Rational> b) {
  Extraction out;
  if (!verify_projection(art, A, b)) {
    out.diagnostic = "projection rejected: f(Ay+b) != g";
    return out;
  }
  auto forms = affine_forms(art, A, b);
  std::vector<Rational> sol;
  for (std::size_t i = 1; i <= art.n; ++i) {
    const auto& L = forms[art.x(i)];
    if (L.total_degree() > 0) {
      throw InvariantViolation("accepted projection has a non-constant form for x." + std::to_string(i));
    }
    sol.push_back(L.constant_term());
  }
  if (!art.source.is_satisfied_by(sol)) throw InvariantViolation("constant rows of an accepted projection fail the system");
  out.solution = std::move(sol);
  out.diagnostic = "projection verified; solution recovered";
  return out;
}

json matrix_to_json(const Matrix& A) {
  json rows = json::array();
  for (const auto& row : A) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const Field& field) {
  if (!j.is_array()) throw InputError("matrix: expected an array of rows");
  Matrix A;
  for (const auto& row : j) {
    A.push_back(rationals_from_json(row, field));
    if (A.back().size() != A.front().size()) throw InputError("matrix: ragged rows");
  }
  return A;
}

json artifact_to_json(const Artifact& art) {
  return {{"kind", "hn-to-polyproj"},
          {"field", field_to_json(art.field)},
          {"vars", art.layout->names()},
          {"source", system_to_json(art.source)},
          {"params", {{"n", art.n}, {"t", art.t}, {"d", art.d}, {"D", art.D}}},
          {"f", terms_to_json(art.f)},
          {"g", terms_to_json(art.g)}};
}

Artifact artifact_from_json(const json& j) {
  try {
    if (j.value("kind", "") != "hn-to-polyproj") throw InputError("not a hn-to-polyproj artifact");
    Artifact art = build(system_from_json(j.at("source")));
    if (j.contains("f") && !(terms_from_json(j.at("f"), art.field, art.layout) == art.f)) {
      throw InputError("artifact f does not match its embedded source system");
    }
    return art;
  } catch (const json::exception& e) {
    throw InputError(std::string("polyproj artifact JSON: ") + e.what());
  }
}

}  // namespace redux::polyproj
