#include "redux/verifiers.hpp"

#include <cstdlib>
#include <functional>

#include "redux/errors.hpp"
#include "redux/poly_matrix.hpp"
#include "redux/random.hpp"

namespace redux {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 small_prime(const Field& field, const char* who) {
  if (!field.is_prime_field()) throw InputError(std::string(who) + ": needs a prime field GF(p)");
  if (!field.modulus().fits_ulong_p() || field.modulus() > Integer("4294967296")) {
    throw GuardExceeded(std::string(who) + ": modulus too large to enumerate");
  }
  return field.modulus().get_ui();
}

u64 search_space(u64 p, std::size_t n, const char* who) {
  const u64 limit = enumeration_limit();
  u64 total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > limit / p) {
      throw GuardExceeded(std::string(who) + ": search space " + std::to_string(p) + "^" + std::to_string(n) +
                          " exceeds the enumeration guard " + std::to_string(limit) + " (set REDUX_MAX_ENUM)");
    }
    total *= p;
  }
  return total;
}

// Digits of `index` in base p, first variable most significant.
void decode(u64 index, u64 p, std::vector<u64>& digits) {
  for (std::size_t j = digits.size(); j-- > 0;) {
    digits[j] = index % p;
    index /= p;
  }
}

struct ModTerm {
  u64 coeff;
  std::vector<VarPower> factors;
};

std::vector<ModTerm> mod_terms(const Polynomial& f) {
  std::vector<ModTerm> out;
  for (const auto& t : f.terms()) {
    Rational c = f.field().reduce(t.coeff);
    out.push_back({c.get_num().get_ui(), t.mono.factors()});
  }
  return out;
}

std::vector<Rational> to_rationals(const std::vector<u64>& v) {
  std::vector<Rational> out;
  for (auto x : v) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

// Univariate arithmetic on dense coefficient vectors, lowest degree first.
using Uni = std::vector<Rational>;

void trim(Uni& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int degree(const Uni& a) { return static_cast<int>(a.size()) - 1; }

Uni derivative(const Uni& a) {
  Uni d;
  for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<Uni, Uni> divmod(Uni a, const Uni& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Uni q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

// Divides by the positive content so signs survive.
void make_primitive(Uni& a) {
  if (a.empty()) return;
  Integer lcm_den = 1, gcd_num = 0;
  for (const auto& c : a) lcm_den = lcm(lcm_den, Integer(c.get_den()));
  for (const auto& c : a) gcd_num = gcd(gcd_num, Integer(c.get_num() * (lcm_den / c.get_den())));
  if (gcd_num == 0) return;
  Rational scale(lcm_den, gcd_num);
  scale.canonicalize();
  for (auto& c : a) c *= scale;
}

Uni poly_gcd(Uni a, Uni b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Uni r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
    make_primitive(b);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

Uni square_free_part(const Uni& u) {
  Uni d = derivative(u);
  if (d.empty()) return u;
  Uni g = poly_gcd(u, d);
  return divmod(u, g).first;
}

int sign_at_infinity(const Uni& a, bool positive) {
  int s = sgn(a.back());
  if (!positive && degree(a) % 2 == 1) s = -s;
  return s;
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Runs `check(i, out)` over directed-then-random indices and reports the
// first violation; `out` is filled only on the final re-check.
Verdict run_samples(std::size_t total, const std::function<bool(std::size_t, Verdict*)>& check, Exec exec) {
  Verdict v;
  auto hit = first_match(total, [&](std::size_t i) { return check(i, nullptr); }, exec);
  if (!hit) {
    v.checked = total;
    return v;
  }
  v.violation = true;
  v.index = *hit;
  v.checked = *hit + 1;
  check(*hit, &v);
  return v;
}

std::vector<Rational> draw(std::mt19937_64& rng, std::size_t n, const SampleConfig& cfg) {
  return cfg.positive ? random_positive_rationals(rng, n, cfg.bound) : random_rationals(rng, n, cfg.bound);
}

}  // namespace

json Verdict::to_json() const {
  json violations = json::array();
  if (violation) {
    json entry{{"point", rationals_to_json(point)}, {"value", value.get_str()}};
    if (index) entry["index"] = *index;
    if (!direction.empty()) entry["direction"] = rationals_to_json(direction);
    violations.push_back(entry);
  }
  json j{{"verdict", violation ? "counterexample" : "noViolation"}, {"checked", checked}, {"violations", violations}};
  if (!note.empty()) j["note"] = note;
  return j;
}

std::uint64_t enumeration_limit() {
  if (const char* env = std::getenv("REDUX_MAX_ENUM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw InputError("REDUX_MAX_ENUM must be a positive integer");
  }
  return 100000000ULL;
}

std::optional<std::vector<Rational>> brute_force_hn(const PolySystem& system, Exec exec) {
  const u64 p = small_prime(system.field, "brute_force_hn");
  const std::size_t n = system.num_vars();
  const u64 total = search_space(p, n, "brute_force_hn");
  std::vector<std::vector<ModTerm>> polys;
  for (const auto& f : system.polys) polys.push_back(mod_terms(f));

  auto satisfies = [&](std::size_t index) {
    std::vector<u64> x(n);
    decode(index, p, x);
    for (const auto& f : polys) {
      u64 acc = 0;
      for (const auto& t : f) {
        u64 m = t.coeff;
        for (const auto& [v, e] : t.factors) m = mulmod(m, powmod(x[v], e, p), p);
        acc = (acc + m) % p;
      }
      if (acc != 0) return false;
    }
    return true;
  };
  auto hit = first_match(total, satisfies, exec);
  if (!hit) return std::nullopt;
  std::vector<u64> x(n);
  decode(*hit, p, x);
  return to_rationals(x);
}

std::optional<std::vector<Rational>> brute_force_sparseshift(const Polynomial& f, Exec exec) {
  const u64 p = small_prime(f.field(), "brute_force_sparseshift");
  const std::size_t n = f.layout()->size();
  const u64 total = search_space(p, n, "brute_force_sparseshift");
  const std::size_t before = f.monomial_count();
  if (before == 0) return std::nullopt;

  std::vector<std::uint32_t> maxdeg(n, 0);
  for (const auto& t : f.terms()) {
    for (const auto& [v, e] : t.mono.factors()) maxdeg[v] = std::max(maxdeg[v], e);
  }
  std::vector<u64> stride(n, 1);
  u64 dense = 1;
  for (std::size_t i = n; i-- > 0;) {
    stride[i] = dense;
    dense *= maxdeg[i] + 1;
    if (dense > 10000000ULL) throw GuardExceeded("brute_force_sparseshift: dense exponent box too large");
  }

  // Binomial expansion of every term, fixed up front: c * prod C(e_i, k_i)
  // lands on x^k with weight a^(e - k).
  std::uint32_t top = 0;
  for (auto d : maxdeg) top = std::max(top, d);
  std::vector<std::vector<u64>> binom(top + 1, std::vector<u64>(top + 1, 0));
  for (std::uint32_t a = 0; a <= top; ++a) {
    binom[a][0] = 1 % p;
    for (std::uint32_t b = 1; b <= a; ++b) binom[a][b] = (binom[a - 1][b - 1] + (b < a ? binom[a - 1][b] : 0)) % p;
  }
  struct Piece {
    u64 target;
    u64 weight;
    std::vector<std::uint32_t> rest;
  };
  std::vector<Piece> pieces;
  for (const auto& t : mod_terms(f)) {
    std::vector<std::uint32_t> e(n, 0);
    for (const auto& [v, x] : t.factors) e[v] = x;
    std::vector<std::uint32_t> k(n, 0);
    while (true) {
      u64 w = t.coeff, target = 0;
      std::vector<std::uint32_t> rest(n);
      for (std::size_t i = 0; i < n; ++i) {
        w = mulmod(w, binom[e[i]][k[i]], p);
        target += k[i] * stride[i];
        rest[i] = e[i] - k[i];
      }
      if (w != 0) pieces.push_back({target, w, std::move(rest)});
      std::size_t i = 0;
      while (i < n && k[i] == e[i]) k[i++] = 0;
      if (i == n) break;
      ++k[i];
    }
  }

  auto sparsifies = [&](std::size_t index) {
    std::vector<u64> a(n);
    decode(index, p, a);
    std::vector<std::vector<u64>> pw(n);
    for (std::size_t i = 0; i < n; ++i) {
      pw[i].assign(maxdeg[i] + 1, 1 % p);
      for (std::uint32_t k = 1; k <= maxdeg[i]; ++k) pw[i][k] = mulmod(pw[i][k - 1], a[i], p);
    }
    std::vector<u64> acc(dense, 0);
    for (const auto& piece : pieces) {
      u64 w = piece.weight;
      for (std::size_t i = 0; i < n && w; ++i) w = mulmod(w, pw[i][piece.rest[i]], p);
      acc[piece.target] = (acc[piece.target] + w) % p;
    }
    std::size_t after = 0;
    for (auto c : acc) after += c != 0;
    return after < before;
  };
  auto hit = first_match(total, sparsifies, exec);
  if (!hit) return std::nullopt;
  std::vector<u64> a(n);
  decode(*hit, p, a);
  return to_rationals(a);
}

std::vector<Rational> univariate_coefficients(const Polynomial& u) {
  auto support = u.support();
  if (support.size() > 1) throw InputError("univariate polynomial expected, found " + std::to_string(support.size()) + " variables");
  Uni out;
  for (const auto& t : u.terms()) {
    std::uint32_t e = support.empty() ? 0 : t.mono.exponent(static_cast<std::uint32_t>(support[0]));
    if (out.size() <= e) out.resize(e + 1, 0);
    out[e] = t.coeff;
  }
  return out;
}

std::size_t count_distinct_real_roots(const std::vector<Rational>& coeffs) {
  Uni u = coeffs;
  trim(u);
  if (u.empty()) throw InputError("sturm: zero polynomial");
  Uni sf = square_free_part(u);
  if (degree(sf) <= 0) return 0;
  std::vector<Uni> chain{sf, derivative(sf)};
  make_primitive(chain[0]);
  make_primitive(chain[1]);
  while (true) {
    Uni r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    make_primitive(r);
    chain.push_back(std::move(r));
  }
  std::vector<int> neg, pos;
  for (const auto& s : chain) {
    neg.push_back(sign_at_infinity(s, false));
    pos.push_back(sign_at_infinity(s, true));
  }
  return variations(neg) - variations(pos);
}

bool sturm_real_rooted(const std::vector<Rational>& coeffs) {
  Uni u = coeffs;
  trim(u);
  if (u.empty()) throw InputError("sturm: zero polynomial");
  Uni sf = square_free_part(u);
  if (degree(sf) <= 0) return true;
  return count_distinct_real_roots(sf) == static_cast<std::size_t>(degree(sf));
}

bool sturm_real_rooted(const Polynomial& u) { return sturm_real_rooted(univariate_coefficients(u)); }

std::vector<Rational> line_restriction(const Polynomial& p, std::span<const Rational> a, std::span<const Rational> b) {
  const std::size_t n = p.layout()->size();
  if (a.size() != n || b.size() != n) throw InputError("line_restriction: length mismatch");
  static const LayoutPtr line = make_layout(std::vector<std::string>{"t"});
  std::vector<Polynomial> forms;
  forms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    forms.push_back(Polynomial::from_terms(p.field(), line, {{Monomial::of(0), a[i]}, {Monomial{}, b[i]}}));
  }
  return univariate_coefficients(affine_substitute(p, forms));
}

Verdict sample_nonneg(const Polynomial& p, const SampleConfig& cfg, Exec exec,
                      const std::vector<std::vector<Rational>>& directed) {
  const std::size_t n = p.layout()->size();
  auto point_of = [&](std::size_t i) {
    if (i < directed.size()) return directed[i];
    auto rng = sample_rng(cfg.seed, i - directed.size());
    return draw(rng, n, cfg);
  };
  return run_samples(
      directed.size() + cfg.count,
      [&](std::size_t i, Verdict* out) {
        auto x = point_of(i);
        Rational value = p.evaluate(x);
        if (out) {
          out->point = x;
          out->value = value;
          out->note = "negative value";
        }
        return sgn(value) < 0;
      },
      exec);
}

Verdict sample_real_stability(const Polynomial& p, const SampleConfig& cfg, Exec exec,
                              const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>>& directed) {
  const std::size_t n = p.layout()->size();
  auto line_of = [&](std::size_t i) {
    if (i < directed.size()) return directed[i];
    auto rng = sample_rng(cfg.seed, i - directed.size());
    auto a = random_positive_rationals(rng, n, cfg.bound);
    auto b = random_rationals(rng, n, cfg.bound);
    return std::make_pair(std::move(a), std::move(b));
  };
  return run_samples(
      directed.size() + cfg.count,
      [&](std::size_t i, Verdict* out) {
        auto [a, b] = line_of(i);
        Uni q = line_restriction(p, a, b);
        trim(q);
        bool bad = q.empty() || !sturm_real_rooted(q);
        if (out) {
          out->direction = a;
          out->point = b;
          out->note = q.empty() ? "restriction identically zero" : "restriction has non-real roots";
        }
        return bad;
      },
      exec);
}

Verdict sample_hyperbolicity(const Polynomial& p, std::span<const Rational> e, const SampleConfig& cfg, Exec exec,
                             const std::vector<std::vector<Rational>>& directed) {
  const std::size_t n = p.layout()->size();
  if (e.size() != n) throw InputError("sample_hyperbolicity: direction length mismatch");
  Rational pe = p.evaluate(e);
  if (sgn(pe) <= 0) {
    Verdict v;
    v.violation = true;
    v.point.assign(e.begin(), e.end());
    v.value = pe;
    v.note = "p(e) <= 0";
    return v;
  }
  auto point_of = [&](std::size_t i) {
    if (i < directed.size()) return directed[i];
    auto rng = sample_rng(cfg.seed, i - directed.size());
    return draw(rng, n, cfg);
  };
  return run_samples(
      directed.size() + cfg.count,
      [&](std::size_t i, Verdict* out) {
        auto x = point_of(i);
        Uni q = line_restriction(p, e, x);
        trim(q);
        bool bad = q.empty() || !sturm_real_rooted(q);
        if (out) {
          out->point = x;
          out->direction.assign(e.begin(), e.end());
          out->note = "p(x + t e) has non-real roots";
        }
        return bad;
      },
      exec);
}

Verdict sample_convexity(const Polynomial& f, const SampleConfig& cfg, Exec exec,
                         const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>>& directed) {
  const std::size_t n = f.layout()->size();
  const SymmetricPolyMatrix H = hessian(f);
  auto pair_of = [&](std::size_t i) {
    if (i < directed.size()) return directed[i];
    auto rng = sample_rng(cfg.seed, i - directed.size());
    auto x = draw(rng, n, cfg);
    auto z = random_rationals(rng, n, cfg.bound);
    return std::make_pair(std::move(x), std::move(z));
  };
  return run_samples(
      directed.size() + cfg.count,
      [&](std::size_t i, Verdict* out) {
        auto [x, z] = pair_of(i);
        Rational value = quadratic_form(H.evaluate(x), z);
        if (out) {
          out->point = x;
          out->direction = z;
          out->value = value;
          out->note = "z^T H_f(x) z < 0";
        }
        return sgn(value) < 0;
      },
      exec);
}

}  // namespace redux
