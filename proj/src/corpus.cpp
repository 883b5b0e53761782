#include "redux/corpus.hpp"

#include "redux/random.hpp"

namespace redux::corpus {

namespace {

LayoutPtr x_layout(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(var("x", {int(i)}).str());
  return make_layout(names);
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(nvars - 1));
  std::vector<VarPower> f;
  for (unsigned d = deg(rng); d > 0; --d) f.push_back({pick(rng), 1});
  return Monomial::from_factors(std::move(f));
}

Rational nonzero_element(std::mt19937_64& rng, const Field& field, long bound) {
  while (true) {
    Rational c = random_element(rng, field, bound);
    if (sgn(c) != 0) return c;
  }
}

Polynomial poly(const Field& field, const LayoutPtr& layout, std::initializer_list<std::pair<long, std::vector<std::uint32_t>>> terms) {
  std::vector<Term> out;
  for (const auto& [c, e] : terms) out.push_back({Monomial::from_dense(e), Rational(c)});
  return Polynomial::from_terms(field, layout, std::move(out));
}

}  // namespace

PolySystem random_system(std::mt19937_64& rng, const Field& field, std::size_t nvars, std::size_t npolys,
                         unsigned max_degree, std::size_t max_terms) {
  LayoutPtr layout = x_layout(nvars);
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::vector<Polynomial> polys;
  for (std::size_t k = 0; k < npolys; ++k) {
    std::vector<Term> terms;
    for (std::size_t j = nterms(rng); j > 0; --j) {
      terms.push_back({random_monomial(rng, nvars, max_degree), nonzero_element(rng, field, 5)});
    }
    polys.push_back(Polynomial::from_terms(field, layout, std::move(terms)));
  }
  return PolySystem(field, layout, std::move(polys));
}

PolySystem planted_quadratic_system(std::mt19937_64& rng, const Field& field, std::span<const Rational> root,
                                    std::size_t npolys) {
  const std::size_t n = root.size();
  LayoutPtr layout = x_layout(n);
  std::vector<Polynomial> polys;
  std::uniform_int_distribution<std::size_t> nterms(1, 3);
  for (std::size_t k = 0; k < npolys; ++k) {
    Polynomial f(field, layout);
    while (f.total_degree() < 1) {
      std::vector<Term> terms;
      for (std::size_t j = nterms(rng); j > 0; --j) {
        Monomial m = random_monomial(rng, n, 2);
        if (m.degree() == 0) m = Monomial::of(0);
        terms.push_back({m, nonzero_element(rng, field, 5)});
      }
      f = Polynomial::from_terms(field, layout, std::move(terms));
    }
    f -= Polynomial::constant(field, layout, f.evaluate(root));
    polys.push_back(std::move(f));
  }
  return PolySystem(field, layout, std::move(polys));
}

std::vector<PolySystem> unsat_gf67() {
  Field F = Field::prime(67);
  auto L1 = x_layout(1);
  auto L2 = x_layout(2);
  std::vector<PolySystem> out;
  // 2, 3 and -1 are quadratic non-residues mod 67.
  out.emplace_back(F, L1, std::vector<Polynomial>{poly(F, L1, {{1, {2}}, {-2, {0}}})});
  out.emplace_back(F, L1, std::vector<Polynomial>{poly(F, L1, {{1, {2}}, {1, {0}}})});
  out.emplace_back(F, L2, std::vector<Polynomial>{poly(F, L2, {{1, {2, 0}}, {-3, {0, 0}}}), poly(F, L2, {{1, {0, 1}}, {-1, {1, 0}}})});
  out.emplace_back(F, L2, std::vector<Polynomial>{poly(F, L2, {{1, {1, 1}}, {-1, {0, 0}}}), poly(F, L2, {{1, {1, 0}}})});
  out.emplace_back(F, L1, std::vector<Polynomial>{poly(F, L1, {{1, {1}}, {-1, {0}}}), poly(F, L1, {{1, {1}}, {-2, {0}}})});
  return out;
}

std::vector<PolySystem> origin_root_systems() {
  Field Q = Field::rationals();
  auto L1 = x_layout(1);
  auto L2 = x_layout(2);
  std::vector<PolySystem> out;
  out.emplace_back(Q, L1, std::vector<Polynomial>{poly(Q, L1, {{1, {1}}})});
  out.emplace_back(Q, L1, std::vector<Polynomial>{poly(Q, L1, {{1, {2}}, {1, {1}}})});
  out.emplace_back(Q, L2, std::vector<Polynomial>{poly(Q, L2, {{1, {1, 1}}}), poly(Q, L2, {{1, {0, 1}}})});
  out.emplace_back(Q, L2, std::vector<Polynomial>{poly(Q, L2, {{1, {2, 0}}, {-1, {1, 1}}}), poly(Q, L2, {{1, {1, 0}}, {1, {0, 1}}})});
  out.emplace_back(Q, L2, std::vector<Polynomial>{poly(Q, L2, {{1, {1, 0}}, {2, {0, 1}}}), poly(Q, L2, {{1, {0, 2}}, {-3, {0, 1}}})});
  return out;
}

std::vector<PolySystem> ball_infeasible_systems() {
  Field Q = Field::rationals();
  auto L1 = x_layout(1);
  auto L2 = x_layout(2);
  std::vector<PolySystem> out;
  out.emplace_back(Q, L1, std::vector<Polynomial>{poly(Q, L1, {{1, {1}}, {-2, {0}}})});
  out.emplace_back(Q, L1, std::vector<Polynomial>{poly(Q, L1, {{1, {2}}, {1, {0}}})});
  out.emplace_back(Q, L2, std::vector<Polynomial>{poly(Q, L2, {{1, {2, 0}}, {-4, {0, 0}}}), poly(Q, L2, {{1, {0, 1}}})});
  return out;
}

std::vector<std::string> x_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(var("X", {int(i)}).str());
  return out;
}

std::vector<std::string> y_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(var("Y", {int(i)}).str());
  return out;
}

LayoutPtr bipartite_layout(std::size_t n) {
  auto names = x_names(n);
  auto ys = y_names(n);
  names.insert(names.end(), ys.begin(), ys.end());
  return make_layout(names);
}

Polynomial random_biquadratic(std::mt19937_64& rng, std::size_t n, long bound) {
  Field Q = Field::rationals();
  LayoutPtr layout = bipartite_layout(n);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Term> terms;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        for (std::uint32_t d = c; d < n; ++d) {
          Monomial m = Monomial::from_factors({{a, 1}, {b, 1}, {std::uint32_t(n + c), 1}, {std::uint32_t(n + d), 1}});
          terms.push_back({m, Rational(coeff(rng))});
        }
      }
    }
  }
  Polynomial out = Polynomial::from_terms(Q, layout, std::move(terms));
  if (out.is_zero()) {
    out = Polynomial::monomial(Q, layout, Monomial::from_factors({{0, 2}, {std::uint32_t(n), 2}}), 1);
  }
  return out;
}

Polynomial random_bilinear(std::mt19937_64& rng, std::size_t n, long bound) {
  Field Q = Field::rationals();
  LayoutPtr layout = bipartite_layout(n);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Term> terms;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      terms.push_back({Monomial::of(i) * Monomial::of(std::uint32_t(n + j)), Rational(coeff(rng))});
    }
  }
  Polynomial out = Polynomial::from_terms(Q, layout, std::move(terms));
  if (out.is_zero()) out = Polynomial::monomial(Q, layout, Monomial::of(0) * Monomial::of(std::uint32_t(n)), 1);
  return out;
}

Polynomial bilinear_square_sum(std::mt19937_64& rng, std::size_t n, std::size_t k, long bound) {
  Polynomial out(Field::rationals(), bipartite_layout(n));
  for (std::size_t i = 0; i < k; ++i) out += random_bilinear(rng, n, bound).pow(2);
  return out;
}

Polynomial random_quartic(std::mt19937_64& rng, std::size_t nvars, long bound) {
  Field Q = Field::rationals();
  LayoutPtr layout = x_layout(nvars);
  std::vector<Term> terms;
  for (int j = 0; j < 6; ++j) terms.push_back({random_monomial(rng, nvars, 4), random_rational(rng, bound)});
  terms.push_back({Monomial::of(0, 4), random_rational(rng, bound) + 2 * bound});
  return Polynomial::from_terms(Q, layout, std::move(terms));
}

}  // namespace redux::corpus
