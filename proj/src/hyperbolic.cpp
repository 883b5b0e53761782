#include "redux/hyperbolic.hpp"

#include <algorithm>

#include "redux/errors.hpp"

namespace redux::hyperbolic {

namespace {

std::string fresh_name(const std::vector<std::string>& taken, const std::vector<std::string>& candidates,
                       const std::string& family) {
  for (const auto& c : candidates) {
    if (std::find(taken.begin(), taken.end(), c) == taken.end()) return c;
  }
  for (int k = 0;; ++k) {
    std::string c = var(family, {k}).str();
    if (std::find(taken.begin(), taken.end(), c) == taken.end()) return c;
  }
}

// Coefficients of p as a polynomial in `v`; entry k multiplies v^k.
std::vector<Polynomial> split_by(const Polynomial& p, std::size_t v) {
  std::vector<TermAccumulator> parts;
  for (const auto& t : p.terms()) {
    auto e = t.mono.exponent(static_cast<std::uint32_t>(v));
    while (parts.size() <= e) parts.emplace_back(p.field(), p.layout());
    parts[e].add(t.mono.with_exponent(static_cast<std::uint32_t>(v), 0), t.coeff);
  }
  std::vector<Polynomial> out;
  for (auto& a : parts) out.push_back(std::move(a).finish());
  return out;
}

Polynomial squared_norm(const Field& field, const LayoutPtr& layout, std::size_t first) {
  Polynomial out(field, layout);
  for (std::size_t i = first; i < layout->size(); ++i) out += Polynomial::variable(field, layout, i).pow(2);
  return out;
}

}  // namespace

HyperbolicityArtifact build_hyperbolicity(const Polynomial& Q) {
  if (Q.field().is_prime_field()) throw InputError("biquadratic-to-hyperbolic: Q must be over the rationals");
  if (Q.is_zero()) throw InputError("biquadratic-to-hyperbolic: Q = 0 (beta would vanish)");
  if (!Q.is_homogeneous(4)) throw InputError("biquadratic-to-hyperbolic: Q must be a quartic form");
  const auto& qnames = Q.layout()->names();
  if (qnames.empty()) throw InputError("biquadratic-to-hyperbolic: Q has no variables");

  HyperbolicityArtifact art{Q, Polynomial(Q.field(), Q.layout()), {}, 0, 0, qnames.size(), ""};
  art.h_name = fresh_name(qnames, {"x.0", "h.0"}, "h");
  std::vector<std::string> names{art.h_name};
  names.insert(names.end(), qnames.begin(), qnames.end());
  LayoutPtr layout = make_layout(names);

  for (const auto& t : Q.terms()) art.C = std::max(art.C, Rational(abs(t.coeff)));
  art.beta = 2 * Rational(art.n * art.n) * art.C;

  const Field& field = Q.field();
  Polynomial h = Polynomial::variable(field, layout, std::size_t{0});
  Polynomial norm2 = squared_norm(field, layout, 1);
  art.p = h.pow(4) - (h.pow(2) * norm2).scaled(art.beta) + Q.relayout(layout);
  art.e.assign(layout->size(), 0);
  art.e[0] = 1;
  if (art.p.evaluate(art.e) != 1) throw InvariantViolation("hyperbolicity: p(e) != 1");
  return art;
}

SymmetricPolyMatrix bezoutian(const Polynomial& p, std::span<const Rational> e) {
  const int d = p.total_degree();
  if (d < 1 || !p.is_homogeneous(static_cast<unsigned>(d))) throw InputError("bezoutian: p must be a nonzero form");
  if (d != 4) throw InputError("bezoutian: expected a quartic form");
  const auto& base = p.layout();
  if (e.size() != base->size()) throw InputError("bezoutian: direction length mismatch");
  const Field& field = p.field();

  auto names = base->names();
  std::string tn = fresh_name(names, {"t"}, "t");
  names.push_back(tn);
  std::string sn = fresh_name(names, {"s"}, "s");
  names.push_back(sn);
  LayoutPtr ext = make_layout(names);
  const std::size_t ti = base->size();
  const std::size_t si = ti + 1;
  Polynomial t = Polynomial::variable(field, ext, ti);
  Polynomial s = Polynomial::variable(field, ext, si);

  std::vector<Polynomial> along_t, along_s;
  for (std::size_t i = 0; i < base->size(); ++i) {
    Polynomial xi = Polynomial::variable(field, ext, i);
    along_t.push_back(xi + t.scaled(e[i]));
    along_s.push_back(xi + s.scaled(e[i]));
  }
  Polynomial dp(field, base);
  for (std::size_t i = 0; i < base->size(); ++i) {
    if (sgn(e[i]) != 0) dp += partial_derivative(p, i).scaled(e[i]);
  }
  Polynomial num = affine_substitute(p, along_t) * affine_substitute(dp, along_s) -
                   affine_substitute(p, along_s) * affine_substitute(dp, along_t);

  // Synthetic division by (t - s) with coefficients in the other variables.
  auto c = split_by(num, ti);
  SymmetricPolyMatrix B;
  B.dim = static_cast<std::size_t>(d);
  B.entries.assign(B.dim, std::vector<Polynomial>(B.dim, Polynomial(field, base)));
  if (c.empty()) return B;
  const std::size_t top = c.size() - 1;
  std::vector<Polynomial> q(std::max<std::size_t>(top, 1), Polynomial(field, ext));
  if (top >= 1) {
    q[top - 1] = c[top];
    for (std::size_t k = top - 1; k >= 1; --k) q[k - 1] = c[k] + s * q[k];
  }
  Polynomial rem = c[0] + (top >= 1 ? s * q[0] : Polynomial(field, ext));
  if (!rem.is_zero()) throw InvariantViolation("bezoutian: numerator not divisible by t - s");

  for (std::size_t i = 0; i < q.size(); ++i) {
    auto cols = split_by(q[i], si);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].is_zero()) continue;
      if (i >= B.dim || j >= B.dim) throw InvariantViolation("bezoutian: index beyond degree");
      B.entries[i][j] = cols[j].relayout(base);
    }
  }
  if (!B.is_symmetric()) throw InvariantViolation("bezoutian: result not symmetric");
  return B;
}

SymmetricPolyMatrix hyperplane_matrix(const HyperbolicityArtifact& art) {
  const Field& field = art.p.field();
  const LayoutPtr& layout = art.p.layout();
  Polynomial Q = art.source_q.relayout(layout);
  Polynomial n2 = squared_norm(field, layout, 1);
  const Rational& b = art.beta;
  SymmetricPolyMatrix B;
  B.dim = 4;
  B.entries.assign(4, std::vector<Polynomial>(4, Polynomial(field, layout)));
  B.entries[0][0] = (n2 * Q).scaled(2 * b);
  B.entries[0][2] = Q.scaled(-4);
  B.entries[2][0] = B.entries[0][2];
  B.entries[1][1] = n2.pow(2).scaled(2 * b * b) - Q.scaled(4);
  B.entries[1][3] = n2.scaled(-2 * b);
  B.entries[3][1] = B.entries[1][3];
  B.entries[2][2] = n2.scaled(2 * b);
  B.entries[3][3] = Polynomial::constant(field, layout, 4);
  return B;
}

SymmetricPolyMatrix restrict_to_hyperplane(const HyperbolicityArtifact& art, const SymmetricPolyMatrix& B) {
  std::vector<std::pair<std::size_t, Rational>> zero{{art.p.layout()->index(art.h_name), Rational(0)}};
  SymmetricPolyMatrix out = B;
  for (auto& row : out.entries) {
    for (auto& entry : row) entry = entry.substitute_values(zero);
  }
  return out;
}

SchurConditions schur_condition(const HyperbolicityArtifact& art) {
  const Field& field = art.p.field();
  const LayoutPtr& layout = art.p.layout();
  Polynomial Q = art.source_q.relayout(layout);
  Polynomial n2 = squared_norm(field, layout, 1);
  return {Q, n2.pow(2).scaled(art.beta * art.beta / 4) - Q};
}

unsigned long choose_eps_denominator(std::size_t n, const Rational& beta) {
  unsigned long K = 2 * n + 1;
  while (Rational(K * K) <= 2 * beta) ++K;
  return K;
}

StabilityArtifact build_stability(const HyperbolicityArtifact& art) {
  const std::size_t n = art.n;
  if (n == 0) throw InputError("hyperbolic-to-stable: n must be >= 1");
  StabilityArtifact st{Polynomial(art.p.field(), art.p.layout()), {}, 0, 0};
  st.K = choose_eps_denominator(n, art.beta);
  st.eps = Rational(1, st.K);
  if (!(st.eps * st.eps * 2 * art.beta < 1) || !(2 * Rational(n) * st.eps < 1)) {
    throw InvariantViolation("stability: eps bound violated");
  }

  st.M.assign(n + 1, std::vector<Rational>(2 * n, 0));
  for (std::size_t j = 0; j < 2 * n; ++j) st.M[0][j] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    st.M[i][2 * i - 2] = st.eps;
    st.M[i][2 * i - 1] = -st.eps;
  }

  std::vector<std::string> names;
  for (std::size_t j = 1; j <= 2 * n; ++j) names.push_back(var("u", {int(j)}).str());
  LayoutPtr layout = make_layout(names);
  const Field& field = art.p.field();
  std::vector<Polynomial> forms;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < 2 * n; ++j) {
      if (sgn(st.M[i][j]) != 0) terms.push_back({Monomial::of(static_cast<std::uint32_t>(j)), st.M[i][j]});
    }
    forms.push_back(Polynomial::from_terms(field, layout, std::move(terms)));
  }
  st.ptilde = affine_substitute(art.p, forms);
  return st;
}

Polynomial eps_positivity_poly(const HyperbolicityArtifact& art, const Rational& eps) {
  const Polynomial& Q = art.source_q;
  Polynomial n2 = squared_norm(Q.field(), Q.layout(), 0);
  Rational e2 = eps * eps;
  return n2.pow(2).scaled(1 - art.beta * e2) + Q.scaled(e2 * e2);
}

ConvexityArtifact build_convexity(const Polynomial& b, const std::vector<std::string>& xs,
                                  const std::vector<std::string>& ys) {
  if (xs.size() != ys.size()) throw InputError("biquadratic-to-convexity: unbalanced partition");
  if (b.field().is_prime_field()) throw InputError("biquadratic-to-convexity: b must be over the rationals");
  if (!is_biquadratic(b, xs, ys)) throw InputError("biquadratic-to-convexity: b is not biquadratic on the partition");
  const std::size_t n = xs.size();
  const auto& L = *b.layout();

  ConvexityArtifact art{b, b, 0, n, xs, ys};
  for (const auto& xi : xs) {
    Polynomial dx = partial_derivative(b, xi);
    for (const auto& yj : ys) {
      Polynomial dxy = partial_derivative(dx, yj);
      for (const auto& t : dxy.terms()) {
        Rational c = abs(t.coeff);
        if (c > art.gamma) art.gamma = c;
      }
    }
  }

  const Field& field = b.field();
  auto v = [&](const std::string& name) { return Polynomial::variable(field, b.layout(), L.index(name)); };
  Polynomial pad(field, b.layout());
  for (std::size_t i = 0; i < n; ++i) pad += v(xs[i]).pow(4) + v(ys[i]).pow(4);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pad += v(xs[i]).pow(2) * v(xs[j]).pow(2) + v(ys[i]).pow(2) * v(ys[j]).pow(2);
    }
  }
  art.f = b + pad.scaled(Rational(n * n) * art.gamma / 2);
  return art;
}

json hyperbolicity_to_json(const HyperbolicityArtifact& art) {
  return {{"kind", "biquadratic-to-hyperbolic"},
          {"Q", polynomial_to_json(art.source_q)},
          {"p", polynomial_to_json(art.p)},
          {"e", rationals_to_json(art.e)},
          {"beta", art.beta.get_str()},
          {"C", art.C.get_str()},
          {"n", art.n},
          {"h", art.h_name}};
}

HyperbolicityArtifact hyperbolicity_from_json(const json& j) {
  try {
    if (j.value("kind", "") != "biquadratic-to-hyperbolic") throw InputError("not a biquadratic-to-hyperbolic artifact");
    auto art = build_hyperbolicity(polynomial_from_json(j.at("Q")));
    if (j.contains("p") && !(polynomial_from_json(j.at("p")) == art.p)) {
      throw InputError("artifact p does not match its embedded Q");
    }
    return art;
  } catch (const json::exception& e) {
    throw InputError(std::string("hyperbolicity artifact JSON: ") + e.what());
  }
}

json stability_to_json(const HyperbolicityArtifact& art, const StabilityArtifact& st) {
  json M = json::array();
  for (const auto& row : st.M) M.push_back(rationals_to_json(row));
  return {{"kind", "hyperbolic-to-stable"},
          {"hyperbolic", hyperbolicity_to_json(art)},
          {"ptilde", polynomial_to_json(st.ptilde)},
          {"M", M},
          {"eps", st.eps.get_str()},
          {"K", st.K}};
}

json convexity_to_json(const ConvexityArtifact& art) {
  return {{"kind", "biquadratic-to-convexity"},
          {"b", polynomial_to_json(art.b)},
          {"f", polynomial_to_json(art.f)},
          {"gamma", art.gamma.get_str()},
          {"n", art.n},
          {"partition", {art.xs, art.ys}}};
}

ConvexityArtifact convexity_from_json(const json& j) {
  try {
    if (j.value("kind", "") != "biquadratic-to-convexity") throw InputError("not a biquadratic-to-convexity artifact");
    auto parts = j.at("partition");
    return build_convexity(polynomial_from_json(j.at("b")), parts.at(0).get<std::vector<std::string>>(),
                           parts.at(1).get<std::vector<std::string>>());
  } catch (const json::exception& e) {
    throw InputError(std::string("convexity artifact JSON: ") + e.what());
  }
}

}  // namespace redux::hyperbolic
