#include "redux/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "redux/biquadratic.hpp"
#include "redux/corpus.hpp"
#include "redux/errors.hpp"
#include "redux/hyperbolic.hpp"
#include "redux/normalizer.hpp"
#include "redux/poly_matrix.hpp"
#include "redux/polyproj.hpp"
#include "redux/random.hpp"
#include "redux/sparseshift.hpp"
#include "redux/verifiers.hpp"

namespace redux::acceptance {

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string str(std::size_t v) { return std::to_string(v); }

Field gf67() { return Field::prime(67); }

// A satisfiable normalized system with exactly one constant-bearing equation,
// together with the planted root.
struct Planted {
  PolySystem system;
  std::vector<Rational> root;
};

Planted planted_instance(std::uint64_t seed, std::uint64_t index, const Field& field, std::size_t n,
                         std::size_t max_t) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    auto rng = sample_rng(seed, index * 1000 + attempt);
    std::vector<Rational> root;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      root.push_back(random_element(rng, field, 4));
      nonzero = nonzero || sgn(root.back()) != 0;
    }
    if (!nonzero) continue;
    std::uniform_int_distribution<std::size_t> tdist(1, max_t);
    PolySystem raw = corpus::planted_quadratic_system(rng, field, root, tdist(rng));
    PolySystem norm = normalize(raw).system;
    if (constant_bearing_count(norm) != 1) continue;
    return {norm, root};
  }
}

std::size_t beta_position(const sparseshift::Artifact& art, std::size_t k, std::size_t i, std::size_t j) {
  return art.layout->index(var("beta", {int(k), int(i), int(j)}).str());
}

// Random (alpha, beta) shift with a_0 = -sum a_x; `consistent` also sets
// a_xx = a_i a_j and every beta copy to a_xx. Y and Z stay zero.
std::vector<Rational> eq3_shift(std::mt19937_64& rng, const sparseshift::Artifact& art, bool consistent) {
  const Field& F = art.field;
  const auto n = art.params.n;
  std::vector<Rational> s(art.layout->size(), 0);
  const std::size_t pairs = n * (n + 1) / 2;
  const std::size_t ab = 1 + n + pairs + art.params.N * pairs;
  for (std::size_t i = 0; i < ab; ++i) s[i] = random_element(rng, F);
  Rational sum = 0;
  for (std::size_t i = 1; i <= n; ++i) sum = F.add(sum, s[art.alpha_x(i)]);
  s[art.alpha0()] = F.neg(sum);
  if (consistent) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        Rational v = F.mul(s[art.alpha_x(i)], s[art.alpha_x(j)]);
        s[art.alpha_xx(i, j)] = v;
        for (std::size_t k = 1; k <= art.params.N; ++k) s[beta_position(art, k, i, j)] = v;
      }
    }
  }
  return s;
}

// 1. Normalizer equivalence.
Outcome normalizer_equivalence(Exec exec) {
  const unsigned primes[] = {3, 5, 7};
  std::size_t sat = 0, mismatches = 0, lift_failures = 0;
  std::string first;
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(1001, i);
    Field F = Field::prime(primes[i % 3]);
    std::uniform_int_distribution<std::size_t> nv(1, 3), np(1, 3);
    std::size_t nvars = nv(rng), npolys = np(rng);
    PolySystem S = corpus::random_system(rng, F, nvars, npolys, 3, 3);
    auto N = normalize(S);
    auto before = brute_force_hn(S, exec);
    auto after = brute_force_hn(N.system, exec);
    if (before.has_value() != after.has_value()) {
      ++mismatches;
      if (first.empty()) first = "; first mismatch at system " + str(i);
    }
    if (before) {
      ++sat;
      auto lifted = extend_solution(N.trace, S, N.system, *before);
      if (!N.system.is_satisfied_by(lifted)) ++lift_failures;
    }
    if (after) {
      auto down = restrict_solution(S, N.system, *after);
      if (!S.is_satisfied_by(down)) ++lift_failures;
    }
  }
  return {mismatches == 0 && lift_failures == 0,
          "100 systems (" + str(sat) + " satisfiable), verdict mismatches " + str(mismatches) +
              ", solution transfer failures " + str(lift_failures) + first};
}

// 2. Structure guarantees on every normalized output.
Outcome structure_guarantees() {
  const unsigned primes[] = {3, 5, 7};
  std::size_t checked = 0, bad = 0;
  auto check = [&](const PolySystem& S) {
    auto N = normalize(S).system;
    ++checked;
    if (N.max_degree() > 2 || constant_bearing_count(N) > 1) ++bad;
  };
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(1001, i);
    Field F = Field::prime(primes[i % 3]);
    std::uniform_int_distribution<std::size_t> nv(1, 3), np(1, 3);
    std::size_t nvars = nv(rng), npolys = np(rng);
    check(corpus::random_system(rng, F, nvars, npolys, 3, 3));
  }
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = sample_rng(2002, i);
    Field F = i % 2 ? Field::rationals() : gf67();
    std::uniform_int_distribution<std::size_t> nv(1, 4), np(1, 4);
    std::size_t nvars = nv(rng), npolys = np(rng);
    check(corpus::random_system(rng, F, nvars, npolys, 6, 4));
  }
  for (const auto& S : corpus::unsat_gf67()) check(S);
  return {bad == 0, str(checked) + " normalized outputs, " + str(bad) + " with degree > 2 or several constants"};
}

// 3. SparseShift completeness.
Outcome sparseshift_completeness() {
  std::size_t failures = 0;
  std::string first;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const std::size_t n = 1 + i % 2;
    auto inst = planted_instance(3003, i, gf67(), n, 3);
    auto art = sparseshift::build(inst.system);
    auto shift = sparseshift::forward_witness(art, inst.root);
    auto ex = sparseshift::extract_solution(art, shift);
    auto parts = sparseshift::monomial_delta_parts(art, shift);
    const long expected_d1 = -static_cast<long>(n * n + n + 1);
    bool ok = ex.after < ex.before && parts.d1 == expected_d1 && ex.solution && *ex.solution == inst.root;
    if (!ok) {
      ++failures;
      if (first.empty()) {
        first = "; instance " + str(i) + ": " + str(ex.before) + " -> " + str(ex.after) + ", d1 = " +
                std::to_string(parts.d1);
      }
    }
  }
  return {failures == 0, "20 instances over GF(67), n <= 2, failures " + str(failures) + first};
}

// 4. SparseShift soundness, sampled.
Outcome sparseshift_soundness(Exec exec) {
  std::size_t sparsifying = 0, total = 0;
  std::string note;
  auto systems = corpus::unsat_gf67();
  for (std::size_t s = 0; s < systems.size(); ++s) {
    if (brute_force_hn(systems[s], exec)) return {false, "corpus system " + str(s) + " is satisfiable"};
    auto art = sparseshift::build(normalize(systems[s]).system);
    const std::size_t before = art.qs.monomial_count();
    std::atomic<std::size_t> hits{0};
    for_each_index(
        1000,
        [&](std::size_t k) {
          auto rng = sample_rng(4004 + s, k);
          std::vector<Rational> shift;
          if (k % 3 == 0) {
            for (std::size_t i = 0; i < art.layout->size(); ++i) shift.push_back(random_element(rng, art.field));
          } else {
            shift = eq3_shift(rng, art, k % 3 == 2);
          }
          if (shift_substitute(art.qs, shift).monomial_count() < before) ++hits;
        },
        exec);
    sparsifying += hits;
    total += 1000;
  }
  return {sparsifying == 0, str(total) + " shifts over 5 unsatisfiable systems, sparsifying " + str(sparsifying)};
}

// 5. SparseShift delta lemma (items 2-3).
Outcome sparseshift_delta_lemma(Exec exec) {
  std::vector<sparseshift::Artifact> arts;
  for (std::uint64_t i = 0; i < 4; ++i) arts.push_back(sparseshift::build(planted_instance(5005, i, gf67(), 1 + i % 2, 2).system));
  std::atomic<std::size_t> bound_fail{0}, d3_fail{0}, identity_fail{0};
  std::atomic<std::size_t> first_fail{~std::size_t{0}};
  for_each_index(
      500,
      [&](std::size_t k) {
        const auto& art = arts[k % arts.size()];
        auto rng = sample_rng(5005, k);
        auto shift = eq3_shift(rng, art, k % 2 == 1);
        auto d = sparseshift::monomial_delta_parts(art, shift);
        const long n = static_cast<long>(art.params.n);
        if (d.d2 < static_cast<long>(d.v1) - static_cast<long>(d.v2)) {
          ++bound_fail;
          std::size_t cur = first_fail.load();
          while (k < cur && !first_fail.compare_exchange_weak(cur, k)) {
          }
        }
        if (!(d.d3 == 0 || (d.d3 >= 2 * n && d.d3 <= (n + 1) * n))) ++d3_fail;
        if (d.d2 != static_cast<long>(d.v1) - static_cast<long>(d.part2_losses)) ++identity_fail;
      },
      exec);
  std::string detail = "500 shifts with a_0 + sum a_x = 0: Part-2 change < v1 - v2 in " + str(bound_fail) +
                       ", Part-3 change outside {0} u [2n, (n+1)n] in " + str(d3_fail) +
                       "; exact identity Part-2 change = v1 - losses fails in " + str(identity_fail);
  if (bound_fail) {
    detail += " (first at shift " + str(first_fail) +
              "; diagonal g_i loses w_i alpha_p when 2 a_p = gamma_i, which v2 does not count)";
  }
  return {bound_fail == 0 && d3_fail == 0, detail};
}

// 6. PolyProj completeness and exactness.
Outcome polyproj_completeness() {
  std::size_t failures = 0;
  std::string first;
  for (std::uint64_t i = 0; i < 20; ++i) {
    Field F = i % 2 ? Field::rationals() : gf67();
    auto inst = planted_instance(6006, i, F, 1 + i % 2, 2);
    auto art = polyproj::build(inst.system);
    auto w = polyproj::forward_witness(art, inst.root);
    bool ok = polyproj::verify_projection(art, w.A, w.b);
    auto ex = polyproj::extract_solution(art, w.A, w.b);
    auto claims = polyproj::check_claims(art, w.A, w.b);
    ok = ok && ex.solution && *ex.solution == inst.root && claims.constant_rows && claims.product_powers;
    ok = ok && !polyproj::verify_projection(art, polyproj::identity(art.layout->size()),
                                            std::vector<Rational>(art.layout->size(), 0));
    if (!ok) {
      ++failures;
      if (first.empty()) first = "; first failure at instance " + str(i);
    }
  }
  return {failures == 0, "20 planted systems over GF(67) and Q, failures " + str(failures) + first};
}

// 7. PolyProj soundness, sampled.
Outcome polyproj_soundness(Exec exec) {
  Field F = gf67();
  LayoutPtr L1 = make_layout(std::vector<std::string>{"x.1"});
  Polynomial x = Polynomial::variable(F, L1, std::size_t{0});
  auto c = [&](long v) { return Polynomial::constant(F, L1, v); };
  std::vector<PolySystem> systems;
  for (long r : {2, 3, 5}) systems.emplace_back(F, L1, std::vector<Polynomial>{x.pow(2) - c(r)});
  systems.emplace_back(F, L1, std::vector<Polynomial>{x.pow(2) + c(1)});
  systems.emplace_back(F, L1, std::vector<Polynomial>{x - c(1), x - c(2)});

  std::size_t accepted = 0, total = 0;
  for (std::size_t s = 0; s < systems.size(); ++s) {
    if (brute_force_hn(systems[s], exec)) return {false, "system " + str(s) + " is satisfiable"};
    auto art = polyproj::build(systems[s]);
    const std::size_t size = art.layout->size();
    std::atomic<std::size_t> hits{0};
    for_each_index(
        1100,
        [&](std::size_t k) {
          auto rng = sample_rng(7007 + s, k);
          polyproj::Matrix A(size, std::vector<Rational>(size, 0));
          std::vector<Rational> b(size);
          if (k < 1000) {
            for (auto& row : A) {
              for (auto& v : row) v = random_element(rng, F);
            }
          } else {
            // Scaled permutation.
            std::vector<std::size_t> perm(size);
            for (std::size_t i = 0; i < size; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            for (std::size_t i = 0; i < size; ++i) {
              Rational v = 0;
              while (sgn(v) == 0) v = random_element(rng, F);
              A[i][perm[i]] = v;
            }
          }
          for (auto& v : b) v = random_element(rng, F);
          if (polyproj::verify_projection(art, A, b)) ++hits;
        },
        exec);
    accepted += hits;
    total += 1100;
  }
  return {accepted == 0, str(total) + " candidates (1000 random + 100 scaled permutations per system), accepted " +
                             str(accepted)};
}

// 8. Chain lemma.
Outcome chain_lemma(Exec exec) {
  for (unsigned m = 1; m <= 8; ++m) {
    auto ys = biquadratic::canonical_chain(m);
    auto r = biquadratic::check_chain(ys, ys);
    if (!(r.side_conditions && r.bound && r.hypothesis && sgn(r.lhs) == 0)) {
      return {false, "canonical chain fails at m = " + str(m)};
    }
  }
  std::atomic<std::size_t> hyp{0}, falsified{0};
  for_each_index(
      10000,
      [&](std::size_t k) {
        auto rng = sample_rng(8008, k);
        std::uniform_int_distribution<unsigned> mdist(1, 6);
        const unsigned m = mdist(rng);
        std::vector<Rational> ys(m + 1), zs(m + 1);
        if (k % 4 == 0) {
          ys = random_rationals(rng, m + 1, 10);
          zs = random_rationals(rng, m + 1, 10);
        } else {
          // Perturbed chain y_k = y_{k-1} z_{k-1}, z_k = y_k with noise of
          // size 2^-j, j spread so the hypothesis holds in some samples.
          std::uniform_int_distribution<int> jdist(2, 40 + 20 * static_cast<int>(k % 4));
          auto noise = [&] {
            Rational e = random_rational(rng, 8);
            mpz_mul_2exp(e.get_den_mpz_t(), e.get_den_mpz_t(), jdist(rng));
            e.canonicalize();
            return e;
          };
          ys[0] = random_positive_rational(rng, 10);
          if (ys[0] >= Rational(1, 2)) ys[0] /= 3;
          zs[0] = ys[0] + noise();
          for (unsigned i = 1; i <= m; ++i) {
            ys[i] = ys[i - 1] * zs[i - 1] + noise();
            zs[i] = ys[i] + noise();
          }
        }
        auto r = biquadratic::check_chain(ys, zs);
        if (r.hypothesis && r.side_conditions) {
          ++hyp;
          if (!r.bound) ++falsified;
        }
      },
      exec);
  return {falsified == 0, "canonical chains m = 1..8 hold with zero LHS; 10000 sequences, " + str(hyp) +
                              " meet hypothesis and side conditions, " + str(falsified) + " violate the bound"};
}

// 9. Biquadratic structure and witness.
Outcome biquadratic_witness(Exec exec) {
  std::size_t structure_bad = 0, witness_bad = 0;
  for (const auto& S : corpus::origin_root_systems()) {
    auto art = biquadratic::build(S, 4);
    if (!is_biquadratic(art.Q, art.part_a, art.part_b)) ++structure_bad;
    std::vector<Rational> root(S.num_vars(), 0);
    auto point = biquadratic::forward_witness(art, root);
    Rational ym = biquadratic::canonical_chain(4)[4];
    Rational expected = -(ym * ym - ym * ym * ym * ym);
    if (!(art.Q.evaluate(point) == expected && sgn(expected) < 0)) ++witness_bad;
  }
  std::size_t violations = 0, sampled = 0;
  auto infeasible = corpus::ball_infeasible_systems();
  for (std::size_t s = 0; s < infeasible.size(); ++s) {
    auto art = biquadratic::build(infeasible[s], 4);
    if (!is_biquadratic(art.Q, art.part_a, art.part_b)) ++structure_bad;
    SampleConfig cfg{2000, 9009 + s, 10, false};
    auto v = sample_nonneg(art.Q, cfg, exec);
    sampled += v.checked;
    if (v.violation) ++violations;
  }
  return {structure_bad == 0 && witness_bad == 0 && violations == 0,
          "8 builds, non-biquadratic " + str(structure_bad) + "; 5 origin-root witnesses (m = 4), wrong sign or value " +
              str(witness_bad) + "; " + str(sampled) + " samples on 3 ball-infeasible systems, negative " +
              str(violations)};
}

std::vector<Polynomial> bezoutian_instances() {
  std::vector<Polynomial> out;
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto rng = sample_rng(10010, i);
    const std::size_t n = 1 + i % 2;
    out.push_back(i % 4 == 0 ? corpus::bilinear_square_sum(rng, n, 1 + i % 3, 3) : corpus::random_biquadratic(rng, n, 4));
  }
  return out;
}

// 10. Bezoutian closed form.
Outcome bezoutian_closed_form() {
  std::size_t bad = 0;
  for (const auto& Q : bezoutian_instances()) {
    auto art = hyperbolic::build_hyperbolicity(Q);
    auto B = hyperbolic::restrict_to_hyperplane(art, hyperbolic::bezoutian(art.p, art.e));
    auto E = hyperbolic::hyperplane_matrix(art);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (!(B.at(i, j) == E.at(i, j))) ++bad;
      }
    }
  }
  return {bad == 0, "20 random biquadratic Q, mismatching entries " + str(bad) + " of 320"};
}

// 11. Schur equivalence.
Outcome schur_equivalence(Exec exec) {
  std::size_t mismatches = 0, condb_negative = 0, psd_count = 0;
  auto instances = bezoutian_instances();
  for (std::size_t q = 0; q < instances.size(); ++q) {
    auto art = hyperbolic::build_hyperbolicity(instances[q]);
    auto B = hyperbolic::bezoutian(art.p, art.e);
    auto conds = hyperbolic::schur_condition(art);
    std::atomic<std::size_t> mm{0}, neg{0}, psd{0};
    for_each_index(
        200,
        [&](std::size_t k) {
          auto rng = sample_rng(11011 + q, k);
          std::vector<Rational> x = random_rationals(rng, art.p.layout()->size(), 6);
          x[0] = 0;
          bool lhs = psd_at_point(B, x);
          Rational a = conds.cond_a.evaluate(x), b = conds.cond_b.evaluate(x);
          bool rhs = sgn(a) >= 0 && sgn(b) >= 0;
          if (lhs != rhs) ++mm;
          if (sgn(b) < 0) ++neg;
          if (lhs) ++psd;
        },
        exec);
    mismatches += mm;
    condb_negative += neg;
    psd_count += psd;
  }
  return {mismatches == 0 && condb_negative == 0,
          "4000 points (" + str(psd_count) + " PSD), equivalence mismatches " + str(mismatches) +
              ", condB < 0 at " + str(condb_negative)};
}

// 12. Hyperbolicity and stability transfer.
Outcome hyperbolic_transfer(Exec exec) {
  std::vector<Polynomial> nonneg;
  for (std::uint64_t i = 0; i < 3; ++i) {
    auto rng = sample_rng(12012, i);
    nonneg.push_back(corpus::random_bilinear(rng, 1 + i % 2, 3).pow(2));
  }
  // Negative instances with a known point x* where Q(x*) < 0.
  Field QQ = Field::rationals();
  auto L2 = corpus::bipartite_layout(2);
  auto v = [&](std::size_t i) { return Polynomial::variable(QQ, L2, i); };
  std::vector<std::pair<Polynomial, std::vector<Rational>>> negative{
      {(v(0) * v(2)).pow(2) - (v(0) * v(3)).pow(2).scaled(2), {1, 0, 0, 1}},
      {(v(0) * v(2) + v(1) * v(3)).pow(2) - (v(1) * v(2)).pow(2).scaled(3), {0, 1, 1, 0}}};

  std::string problems;
  std::size_t eps_bad = 0;
  auto eps_check = [&](const hyperbolic::HyperbolicityArtifact& art, const hyperbolic::StabilityArtifact& st,
                       std::uint64_t seed) {
    Polynomial q = hyperbolic::eps_positivity_poly(art, st.eps);
    auto hit = first_match(
        1000,
        [&](std::size_t k) {
          auto rng = sample_rng(seed, k);
          auto x = random_rationals(rng, q.layout()->size(), 10);
          if (std::all_of(x.begin(), x.end(), [](const Rational& r) { return sgn(r) == 0; })) x[0] = 1;
          return sgn(q.evaluate(x)) <= 0;
        },
        exec);
    if (hit) ++eps_bad;
  };

  for (std::size_t i = 0; i < nonneg.size(); ++i) {
    auto art = hyperbolic::build_hyperbolicity(nonneg[i]);
    auto st = hyperbolic::build_stability(art);
    auto hv = sample_hyperbolicity(art.p, art.e, SampleConfig{500, 12100 + i, 10, false}, exec);
    auto sv = sample_real_stability(st.ptilde, SampleConfig{200, 12200 + i, 10, false}, exec);
    if (hv.violation) problems += " hyperbolicity violation on nonneg " + str(i) + ";";
    if (sv.violation) problems += " stability violation on nonneg " + str(i) + ";";
    eps_check(art, st, 12300 + i);
  }
  for (std::size_t i = 0; i < negative.size(); ++i) {
    const auto& [Q, xs] = negative[i];
    if (sgn(Q.evaluate(xs)) >= 0) return {false, "negative instance " + str(i) + " is not negative at x*"};
    auto art = hyperbolic::build_hyperbolicity(Q);
    auto st = hyperbolic::build_stability(art);
    std::vector<Rational> hx{0};
    hx.insert(hx.end(), xs.begin(), xs.end());
    auto hv = sample_hyperbolicity(art.p, art.e, SampleConfig{1, 12400 + i, 10, false}, exec, {hx});
    std::vector<Rational> a(2 * art.n, 1), b(2 * art.n);
    for (std::size_t j = 0; j < art.n; ++j) {
      b[2 * j] = xs[j] / (2 * st.eps);
      b[2 * j + 1] = -xs[j] / (2 * st.eps);
    }
    auto sv = sample_real_stability(st.ptilde, SampleConfig{1, 12500 + i, 10, false}, exec, {{a, b}});
    if (!hv.violation || *hv.index != 0) problems += " no hyperbolicity counterexample on negative " + str(i) + ";";
    if (!sv.violation || *sv.index != 0) problems += " no stability counterexample on negative " + str(i) + ";";
    eps_check(art, st, 12600 + i);
  }
  if (eps_bad) problems += " eps-positivity fails on " + str(eps_bad) + " instances;";
  return {problems.empty(), problems.empty() ? "3 nonnegative Q: 500 lines + 200 stability lines clean; 2 negative Q: "
                                               "directed counterexamples found; eps-positivity at 5000 points"
                                             : problems};
}

// 13. Convexity gadget.
Outcome convexity_gadget(Exec exec) {
  std::size_t violations = 0;
  for (std::uint64_t i = 0; i < 5; ++i) {
    auto rng = sample_rng(13013, i);
    const std::size_t n = 1 + i % 2;
    Polynomial b = corpus::bilinear_square_sum(rng, n, 1 + i % 2, 3);
    auto art = hyperbolic::build_convexity(b, corpus::x_names(n), corpus::y_names(n));
    auto v = sample_convexity(art.f, SampleConfig{500, 13100 + i, 10, false}, exec);
    if (v.violation) ++violations;
  }
  // n = 1 hand computation: b = X^2 Y^2, gamma = 4, f = X^2 Y^2 + 2 X^4 + 2 Y^4.
  Field QQ = Field::rationals();
  auto L = corpus::bipartite_layout(1);
  Polynomial X = Polynomial::variable(QQ, L, std::size_t{0});
  Polynomial Y = Polynomial::variable(QQ, L, std::size_t{1});
  auto art = hyperbolic::build_convexity(X.pow(2) * Y.pow(2), {"X.1"}, {"Y.1"});
  auto H = hessian(art.f);
  bool hand = art.gamma == 4 && art.f == X.pow(2) * Y.pow(2) + X.pow(4).scaled(2) + Y.pow(4).scaled(2) &&
              H.at(0, 0) == Y.pow(2).scaled(2) + X.pow(2).scaled(24) && H.at(0, 1) == (X * Y).scaled(4) &&
              H.at(1, 0) == (X * Y).scaled(4) && H.at(1, 1) == X.pow(2).scaled(2) + Y.pow(2).scaled(24);
  return {violations == 0 && hand, "5 nonnegative b x 500 samples, violations " + str(violations) +
                                       "; n = 1 Hessian " + (hand ? "matches" : "differs")};
}

// 14. complex_split identities.
Outcome complex_split_identities() {
  std::size_t bad = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = sample_rng(14014, i);
    const std::size_t n = 1 + i % 3;
    Polynomial p = corpus::random_quartic(rng, n, 5);
    std::vector<std::string> re_names = p.layout()->names(), im_names;
    for (std::size_t k = 1; k <= n; ++k) im_names.push_back(var("y", {int(k)}).str());
    auto parts = complex_split(p, re_names, im_names);
    const LayoutPtr& T = parts.re.layout();

    std::vector<std::pair<std::size_t, Rational>> zero;
    for (std::size_t k = 0; k < n; ++k) zero.push_back({n + k, Rational(0)});
    bool ok = parts.re.substitute_values(zero) == p.relayout(T) && parts.im.substitute_values(zero).is_zero();

    // Oracle: substitute x + I y symbolically, then reduce with I^2 = -1.
    auto names = T->names();
    names.push_back("I");
    LayoutPtr TI = make_layout(names);
    const std::uint32_t I = static_cast<std::uint32_t>(2 * n);
    std::vector<Polynomial> forms;
    for (std::size_t k = 0; k < n; ++k) {
      forms.push_back(Polynomial::variable(p.field(), TI, k) +
                      Polynomial::variable(p.field(), TI, n + k) * Polynomial::variable(p.field(), TI, std::size_t{I}));
    }
    Polynomial expanded(p.field(), TI);
    for (const auto& t : p.terms()) {
      Polynomial prod = Polynomial::constant(p.field(), TI, t.coeff);
      for (const auto& [v, e] : t.mono.factors()) prod *= forms[v].pow(e);
      expanded += prod;
    }
    std::vector<Term> re, im;
    for (const auto& t : expanded.terms()) {
      const auto e = t.mono.exponent(I);
      Rational c = (e % 4 >= 2) ? Rational(-t.coeff) : t.coeff;
      (e % 2 ? im : re).push_back({t.mono.with_exponent(I, 0), c});
    }
    ok = ok && Polynomial::from_terms(p.field(), TI, std::move(re)) == parts.re.relayout(TI) &&
         Polynomial::from_terms(p.field(), TI, std::move(im)) == parts.im.relayout(TI);
    if (!ok) ++bad;
  }
  return {bad == 0, "50 random quartics, identity failures " + str(bad)};
}

struct Spec {
  int id;
  const char* title;
  double limit;
  std::function<Outcome(Exec)> run;
};

}  // namespace

std::string format_line(const CriterionResult& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + ": " + r.detail +
         " (" + buf + " s)";
}

std::vector<CriterionResult> run(const Options& options, const std::function<void(const CriterionResult&)>& on_result) {
  const std::vector<Spec> specs{
      {1, "normalizer equivalence", 60, normalizer_equivalence},
      {2, "structure guarantees", 60, [](Exec) { return structure_guarantees(); }},
      {3, "SparseShift completeness", 120, [](Exec) { return sparseshift_completeness(); }},
      {4, "SparseShift soundness (sampled)", 300, sparseshift_soundness},
      {5, "SparseShift delta lemma", 300, sparseshift_delta_lemma},
      {6, "PolyProj completeness + exactness", 60, [](Exec) { return polyproj_completeness(); }},
      {7, "PolyProj soundness (sampled)", 300, polyproj_soundness},
      {8, "chain lemma", 60, chain_lemma},
      {9, "biquadratic structure + witness", 300, biquadratic_witness},
      {10, "Bezoutian closed form", 60, [](Exec) { return bezoutian_closed_form(); }},
      {11, "Schur equivalence", 300, schur_equivalence},
      {12, "hyperbolicity/stability transfer", 300, hyperbolic_transfer},
      {13, "convexity gadget", 300, convexity_gadget},
      {14, "complex_split identities", 60, [](Exec) { return complex_split_identities(); }},
  };
  std::vector<CriterionResult> results;
  for (const auto& s : specs) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), s.id) == options.only.end()) {
      continue;
    }
    CriterionResult r{s.id, s.title, false, "", 0, s.limit};
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = s.run(options.exec);
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.limit) {
      r.pass = false;
      r.detail += "; over the " + std::to_string(static_cast<int>(r.limit)) + " s budget";
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace redux::acceptance
