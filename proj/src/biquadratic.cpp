#include "redux/biquadratic.hpp"

#include "redux/errors.hpp"

namespace redux::biquadratic {

namespace {

std::vector<std::string> h_names(std::size_t n, unsigned m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n + 1; ++i) names.push_back(var("x", {int(i)}).str());
  for (std::size_t i = 0; i <= n + 1; ++i) names.push_back(var("w", {int(i)}).str());
  for (unsigned k = 1; k <= m; ++k) names.push_back(var("y", {int(k)}).str());
  for (unsigned k = 1; k <= m; ++k) names.push_back(var("z", {int(k)}).str());
  return names;
}

Rational power(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& v) {
  if (sgn(v) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t())) return std::nullopt;
  Rational r;
  mpz_sqrt(r.get_num_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(r.get_den_mpz_t(), v.get_den_mpz_t());
  r.canonicalize();
  return r;
}

}  // namespace

ChainCheck check_chain(const std::vector<Rational>& ys, const std::vector<Rational>& zs) {
  if (ys.size() != zs.size() || ys.empty()) throw InputError("check_chain: ys and zs must both hold y_0..y_m");
  const std::size_t m = ys.size() - 1;
  if (m > kMaxChainLength) throw InputError("check_chain: m > " + std::to_string(kMaxChainLength));
  ChainCheck out;
  Rational sum = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    Rational d = ys[k] - ys[k - 1] * zs[k - 1];
    sum += d * d;
  }
  for (std::size_t k = 0; k <= m; ++k) {
    Rational d = ys[k] - zs[k];
    sum += d * d;
  }
  out.lhs = 400 * sum;
  const Rational ym2 = ys[m] * ys[m];
  out.hypothesis = out.lhs < ym2;
  out.side_conditions = sgn(ys[0]) > 0 && ys[0] < Rational(1, 2) && abs(zs[m]) < 1;
  // (2^{m+2} + 2) / 3 is an integer for every m.
  const unsigned long e = ((1UL << (m + 2)) + 2) / 3;
  out.bound = ym2 <= power(ys[0], e);
  return out;
}

std::vector<Rational> canonical_chain(unsigned m) {
  if (m > kMaxChainLength) throw InputError("canonical_chain: m > " + std::to_string(kMaxChainLength));
  std::vector<Rational> ys;
  for (unsigned k = 0; k <= m; ++k) ys.push_back(power(Rational(1, 4), 1UL << k));
  return ys;
}

Integer gap_bound_log2(unsigned L) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, L + 5);
  return -v;
}

Polynomial build_g(const PolySystem& system) {
  if (system.field.is_prime_field()) throw InputError("quad-to-biquadratic: system must be over the rationals");
  if (system.max_degree() > 2) throw InputError("quad-to-biquadratic: degree > 2 polynomial present");
  const std::size_t n = system.num_vars();
  const Field& field = system.field;
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back(var("x", {int(i)}).str());
  for (std::size_t i = 0; i <= n; ++i) names.push_back(var("w", {int(i)}).str());
  LayoutPtr layout = make_layout(names);
  auto x = [&](std::size_t i) { return static_cast<std::uint32_t>(i); };
  auto w = [&](std::size_t i) { return static_cast<std::uint32_t>(n + 1 + i); };
  auto v = [&](std::uint32_t pos) { return Polynomial::variable(field, layout, pos); };

  Polynomial g(field, layout);
  for (const auto& f : system.polys) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      const auto& fs = t.mono.factors();
      Monomial m;
      if (fs.empty()) {
        m = Monomial::of(x(0)) * Monomial::of(w(0));
      } else if (t.mono.degree() == 1) {
        m = Monomial::of(x(fs[0].var + 1)) * Monomial::of(w(0));
      } else if (fs.size() == 1) {
        m = Monomial::of(x(fs[0].var + 1)) * Monomial::of(w(fs[0].var + 1));
      } else {
        m = Monomial::of(x(fs[0].var + 1)) * Monomial::of(w(fs[1].var + 1));
      }
      terms.push_back({m, t.coeff});
    }
    g += Polynomial::from_terms(field, layout, std::move(terms)).pow(2);
  }
  for (std::size_t i = 1; i <= n; ++i) g += (v(x(i)) - v(w(i))).pow(2);
  Polynomial one = Polynomial::constant(field, layout, 1);
  g += (v(x(0)) - one).pow(2);
  g += (v(w(0)) - one).pow(2);
  return g;
}

Polynomial build_h(const Polynomial& g, std::size_t n, const ChainParams& chain) {
  if (chain.m < 1) throw InputError("quad-to-biquadratic: chain length m must be >= 1");
  const Field& field = g.field();
  LayoutPtr layout = make_layout(h_names(n, chain.m));
  auto v = [&](const std::string& family, int i) { return Polynomial::variable(field, layout, var(family, {i}).str()); };
  auto c = [&](const Rational& q) { return Polynomial::constant(field, layout, q); };

  Polynomial h = g.relayout(layout);
  Polynomial dot(field, layout);
  for (std::size_t i = 1; i <= n + 1; ++i) dot += v("x", int(i)) * v("w", int(i));
  h += (dot - c(1)).pow(2);
  h += (v("x", int(n + 1)) - v("w", int(n + 1))).pow(2);

  Polynomial chain_sum = (v("y", 1) - c(chain.seed0)).pow(2);
  for (unsigned k = 2; k <= chain.m; ++k) {
    chain_sum += (v("y", int(k)) - v("y", int(k - 1)) * v("z", int(k - 1))).pow(2);
  }
  for (unsigned k = 1; k <= chain.m; ++k) chain_sum += (v("y", int(k)) - v("z", int(k))).pow(2);
  h += chain_sum.scaled(chain.weight);

  Polynomial ym = v("y", int(chain.m));
  Polynomial zm = v("z", int(chain.m));
  h -= (ym * zm).scaled(2) - zm.pow(2) - (ym * zm).pow(2);
  return h;
}

Artifact build(const PolySystem& system, unsigned m) {
  ChainParams chain;
  chain.m = m;
  const std::size_t n = system.num_vars();
  Polynomial g = build_g(system);
  Polynomial h = build_h(g, n, chain);

  std::vector<std::string> xy, wz;
  for (std::size_t i = 0; i <= n + 1; ++i) {
    xy.push_back(var("x", {int(i)}).str());
    wz.push_back(var("w", {int(i)}).str());
  }
  for (unsigned k = 1; k <= m; ++k) {
    xy.push_back(var("y", {int(k)}).str());
    wz.push_back(var("z", {int(k)}).str());
  }
  if (!is_semi_biquadratic(h, xy, wz)) throw InvariantViolation("biquadratic: h is not semi-biquadratic");
  Polynomial Q = homogenize_bipartite(h, xy, wz, "alpha", "beta");
  auto part_a = xy;
  auto part_b = wz;
  part_a.push_back("alpha");
  part_b.push_back("beta");
  if (!is_biquadratic(Q, part_a, part_b)) throw InvariantViolation("biquadratic: Q is not biquadratic");
  return Artifact{system, chain, n, std::move(g), std::move(h), std::move(Q), std::move(part_a), std::move(part_b)};
}

std::vector<Rational> forward_witness(const Artifact& art, std::span<const Rational> root) {
  if (root.size() != art.n) throw InputError("forward_witness: expected " + std::to_string(art.n) + " coordinates");
  if (!art.source.is_satisfied_by(root)) throw InputError("forward_witness: point is not a root of the system");
  Rational rest = 1;
  for (const auto& r : root) rest -= r * r;
  auto top = rational_sqrt(rest);
  if (!top) throw InputError("forward_witness: 1 - |root|^2 = " + rest.get_str() + " is not the square of a rational");

  const auto& L = *art.Q.layout();
  std::vector<Rational> point(L.size(), 0);
  auto set = [&](const std::string& name, const Rational& value) { point[L.index(name)] = value; };
  set("x.0", 1);
  set("w.0", 1);
  for (std::size_t i = 1; i <= art.n; ++i) {
    set(var("x", {int(i)}).str(), root[i - 1]);
    set(var("w", {int(i)}).str(), root[i - 1]);
  }
  set(var("x", {int(art.n + 1)}).str(), *top);
  set(var("w", {int(art.n + 1)}).str(), *top);
  auto chain = canonical_chain(art.chain.m);
  for (unsigned k = 1; k <= art.chain.m; ++k) {
    set(var("y", {int(k)}).str(), chain[k]);
    set(var("z", {int(k)}).str(), chain[k]);
  }
  set("alpha", 1);
  set("beta", 1);
  if (sgn(art.Q.evaluate(point)) >= 0) throw InvariantViolation("biquadratic forward witness: Q(point) >= 0");
  return point;
}

json artifact_to_json(const Artifact& art) {
  return {{"kind", "quad-to-biquadratic"},
          {"field", field_to_json(art.Q.field())},
          {"vars", art.Q.layout()->names()},
          {"source", system_to_json(art.source)},
          {"params", {{"n", art.n}, {"m", art.chain.m}, {"weight", art.chain.weight.get_str()},
                      {"seed0", art.chain.seed0.get_str()}, {"y0", art.chain.y0.get_str()}}},
          {"partition", {art.part_a, art.part_b}},
          {"g", polynomial_to_json(art.g)},
          {"h", polynomial_to_json(art.h)},
          {"Q", terms_to_json(art.Q)}};
}

Artifact artifact_from_json(const json& j) {
  try {
    if (j.value("kind", "") != "quad-to-biquadratic") throw InputError("not a quad-to-biquadratic artifact");
    Artifact art = build(system_from_json(j.at("source")), j.at("params").at("m").get<unsigned>());
    if (j.contains("Q") && !(terms_from_json(j.at("Q"), art.Q.field(), art.Q.layout()) == art.Q)) {
      throw InputError("artifact Q does not match its embedded source system");
    }
    return art;
  } catch (const json::exception& e) {
    throw InputError(std::string("biquadratic artifact JSON: ") + e.what());
  }
}

}  // namespace redux::biquadratic
