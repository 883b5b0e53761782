#include <gtest/gtest.h>

#include <cstdlib>

#include "redux/corpus.hpp"
#include "redux/errors.hpp"
#include "redux/hyperbolic.hpp"
#include "redux/random.hpp"
#include "redux/verifiers.hpp"
#include "test_util.hpp"

using namespace redux;
using redux::tu::P;

namespace {

const Field QQ = Field::rationals();

TEST(BruteForceHN, Examples) {
  Field F = Field::prime(5);
  auto l = tu::L({"x.1", "x.2"});
  PolySystem S(F, l, {P(F, l, "x.1*x.2 - 1"), P(F, l, "x.1 + x.2 - 2")});
  auto r = brute_force_hn(S);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, tu::Q({"1", "1"}));

  Field F3 = Field::prime(3);
  auto l1 = tu::L({"x.1"});
  EXPECT_FALSE(brute_force_hn(PolySystem(F3, l1, {P(F3, l1, "x.1^2 + 1")})));
  EXPECT_THROW(brute_force_hn(PolySystem(QQ, l1, {P(QQ, l1, "x.1")})), InputError);
}

TEST(BruteForceHN, LexFirstRoot) {
  Field F = Field::prime(7);
  auto l = tu::L({"x.1", "x.2"});
  // Roots of x.1^2 = x.2^2 with x.1 != 0: lex-first is (1, 1).
  PolySystem S(F, l, {P(F, l, "x.1^2 - x.2^2"), P(F, l, "x.1^6 - 1")});
  EXPECT_EQ(*brute_force_hn(S, Exec::serial), tu::Q({"1", "1"}));
  EXPECT_EQ(*brute_force_hn(S, Exec::parallel), tu::Q({"1", "1"}));
}

TEST(BruteForceHN, GuardFromEnvironment) {
  Field F = Field::prime(67);
  auto l = tu::L({"x.1", "x.2", "x.3"});
  PolySystem S(F, l, {P(F, l, "x.1 + x.2 + x.3 - 1")});
  ::setenv("REDUX_MAX_ENUM", "1000", 1);
  EXPECT_THROW(brute_force_hn(S), GuardExceeded);
  ::setenv("REDUX_MAX_ENUM", "junk", 1);
  EXPECT_THROW(enumeration_limit(), InputError);
  ::unsetenv("REDUX_MAX_ENUM");
  EXPECT_TRUE(brute_force_hn(S));
}

TEST(BruteForceSparseShift, NoShiftForTwoTerms) {
  Field F = Field::prime(5);
  auto l = tu::L({"x"});
  Polynomial f = P(F, l, "x^2 - 2*x");
  EXPECT_FALSE(brute_force_sparseshift(f));
  // (x+a)^2 - 2(x+a) = x^2 + (2a-2)x + (a^2-2a).
  for (long a = 0; a < 5; ++a) {
    std::size_t count = 1 + ((2 * a - 2) % 5 != 0) + ((a * a - 2 * a) % 5 != 0);
    std::vector<Rational> off{Rational(a)};
    EXPECT_EQ(shift_substitute(f, off).monomial_count(), count) << a;
    EXPECT_GE(count, 2u);
  }
}

TEST(BruteForceSparseShift, FirstShift) {
  Field F = Field::prime(5);
  auto l = tu::L({"x", "y"});
  auto r = brute_force_sparseshift(P(F, l, "x^2 + 2*x + 1 + y"));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, tu::Q({"0", "4"}));
}

TEST(BruteForceSparseShift, Degenerate) {
  Field F = Field::prime(5);
  auto l = tu::L({"x"});
  EXPECT_FALSE(brute_force_sparseshift(P(F, l, "3*x^4")));
  EXPECT_FALSE(brute_force_sparseshift(P(F, l, "2")));
  EXPECT_FALSE(brute_force_sparseshift(Polynomial(F, l)));
}

// Coefficient vectors from factored form.
using Coeffs = std::vector<Rational>;
Coeffs mul(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}
Coeffs lin(Rational root) { return {-root, 1}; }
Coeffs irr(Rational c) { return {c, 0, 1}; }  // t^2 + c, c > 0

struct SturmCase {
  std::vector<Coeffs> factors;
  std::size_t distinct;
  bool rooted;
};

TEST(Sturm, FactoredCatalogue) {
  const Rational h(1, 2), th(1, 3);
  std::vector<SturmCase> cases = {
      {{lin(0)}, 1, true},
      {{lin(3)}, 1, true},
      {{lin(1), lin(2)}, 2, true},
      {{lin(1), lin(1)}, 1, true},
      {{lin(-1), lin(1)}, 2, true},
      {{irr(1)}, 0, false},
      {{irr(h)}, 0, false},
      {{lin(0), irr(2)}, 1, false},
      {{lin(1), lin(2), lin(3)}, 3, true},
      {{lin(1), lin(1), lin(1)}, 1, true},
      {{lin(h), lin(th)}, 2, true},
      {{lin(h), lin(Rational(1, 2))}, 1, true},
      {{irr(1), irr(4)}, 0, false},
      {{lin(-2), irr(3), lin(5)}, 2, false},
      {{lin(0), lin(0), lin(0), lin(0)}, 1, true},
      {{lin(1), lin(-1), lin(2), lin(-2)}, 4, true},
      {{lin(1), lin(-1), lin(1), lin(-1)}, 2, true},
      {{lin(Rational(1, 100)), lin(Rational(1, 101))}, 2, true},
      {{lin(Rational(-7, 3)), lin(Rational(5, 4)), lin(0)}, 3, true},
      {{irr(Rational(1, 1000))}, 0, false},
      {{irr(1), irr(1)}, 0, false},
      {{lin(2), lin(2), irr(1)}, 1, false},
      {{lin(1), lin(2), lin(3), lin(4), lin(5)}, 5, true},
      {{lin(1), lin(2), lin(3), lin(4), irr(9)}, 4, false},
      {{lin(-3), lin(-3), lin(4), lin(4), lin(4)}, 2, true},
      {{lin(10), lin(-10), lin(Rational(1, 10))}, 3, true},
      {{lin(0), irr(1), irr(2)}, 1, false},
      {{lin(7), lin(7), lin(7), lin(7), lin(7), lin(7)}, 1, true},
      {{lin(1), lin(2), irr(5), lin(3), lin(1)}, 3, false},
      {{lin(h), lin(-h), lin(th), lin(-th), lin(0)}, 5, true},
  };
  ASSERT_EQ(cases.size(), 30u);
  for (std::size_t k = 0; k < cases.size(); ++k) {
    Coeffs c{1};
    for (const auto& f : cases[k].factors) c = mul(c, f);
    // Scaling by a negative constant changes nothing.
    Coeffs neg = c;
    for (auto& v : neg) v *= -3;
    EXPECT_EQ(count_distinct_real_roots(c), cases[k].distinct) << k;
    EXPECT_EQ(sturm_real_rooted(c), cases[k].rooted) << k;
    EXPECT_EQ(sturm_real_rooted(neg), cases[k].rooted) << k;
  }
}

TEST(Sturm, SpecExamples) {
  auto l = tu::L({"t"});
  EXPECT_FALSE(sturm_real_rooted(P(QQ, l, "t^2 + 1")));
  EXPECT_TRUE(sturm_real_rooted(P(QQ, l, "t^3 - 3*t + 2")));  // (t-1)^2 (t+2)
  EXPECT_TRUE(sturm_real_rooted(P(QQ, l, "t^4 - 16*t^2 + 1")));
  EXPECT_TRUE(sturm_real_rooted(P(QQ, l, "5")));
  EXPECT_THROW(sturm_real_rooted(Polynomial(QQ, l)), InputError);
  EXPECT_THROW(univariate_coefficients(P(QQ, tu::L({"a", "b"}), "a*b")), InputError);
}

TEST(LineRestriction, Coefficients) {
  auto l = tu::L({"x", "y"});
  auto c = line_restriction(P(QQ, l, "x*y"), tu::Q({"1", "2"}), tu::Q({"3", "0"}));
  // (t + 3)(2t) = 2t^2 + 6t
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], 0);
  EXPECT_EQ(c[1], 6);
  EXPECT_EQ(c[2], 2);
}

SampleConfig cfg(std::size_t count, std::uint64_t seed, bool positive = false) {
  SampleConfig c;
  c.count = count;
  c.seed = seed;
  c.positive = positive;
  return c;
}

TEST(Samplers, Nonneg) {
  auto l = tu::L({"x"});
  EXPECT_FALSE(sample_nonneg(P(QQ, l, "x^2"), cfg(1000, 1)).violation);
  auto v = sample_nonneg(P(QQ, l, "x^2 - 1"), cfg(1000, 1));
  EXPECT_TRUE(v.violation);
  EXPECT_LT(P(QQ, l, "x^2 - 1").evaluate(v.point), 0);

  auto art = hyperbolic::build_hyperbolicity(P(QQ, tu::L({"x.1", "x.2"}), "x.1^2*x.2^2"));
  auto conds = hyperbolic::schur_condition(art);
  EXPECT_FALSE(sample_nonneg(conds.cond_b, cfg(1000, 2)).violation);
}

TEST(Samplers, RealStability) {
  auto l = tu::L({"x.1", "x.2"});
  EXPECT_FALSE(sample_real_stability(P(QQ, l, "x.1*x.2"), cfg(500, 3)).violation);
  auto v = sample_real_stability(P(QQ, l, "x.1^2 + x.2^2"), cfg(500, 3));
  EXPECT_TRUE(v.violation);
  EXPECT_FALSE(sturm_real_rooted(line_restriction(P(QQ, l, "x.1^2 + x.2^2"), v.direction, v.point)));
}

TEST(Samplers, Hyperbolicity) {
  auto l = tu::L({"x.0", "x.1"});
  EXPECT_FALSE(sample_hyperbolicity(P(QQ, l, "x.0^4"), tu::Q({"1", "0"}), cfg(300, 4)).violation);

  auto art = hyperbolic::build_hyperbolicity(P(QQ, tu::L({"x.1", "x.2"}), "-x.1^2*x.2^2"));
  auto v = sample_hyperbolicity(art.p, art.e, cfg(0, 4), Exec::parallel, {tu::Q({"0", "1", "1"})});
  EXPECT_TRUE(v.violation);
  EXPECT_EQ(v.index, 0u);

  auto bad = sample_hyperbolicity(P(QQ, l, "-x.0^4"), tu::Q({"1", "0"}), cfg(300, 4));
  EXPECT_TRUE(bad.violation);
  EXPECT_EQ(bad.checked, 0u);
}

TEST(Samplers, Convexity) {
  auto l = tu::L({"x"});
  EXPECT_FALSE(sample_convexity(P(QQ, l, "x^4"), cfg(300, 5)).violation);
  EXPECT_TRUE(sample_convexity(P(QQ, l, "-x^2"), cfg(300, 5)).violation);

  auto bl = corpus::bipartite_layout(1);
  auto conv = hyperbolic::build_convexity(P(QQ, bl, "X.1^2*Y.1^2"), {"X.1"}, {"Y.1"});
  EXPECT_FALSE(sample_convexity(conv.f, cfg(500, 6)).violation);

  // b(X, Y) = -X^2 Y^2 is negative at (1, 1): directed x = (1, 0), z = (0, 1).
  auto neg = hyperbolic::build_convexity(P(QQ, bl, "-X.1^2*Y.1^2"), {"X.1"}, {"Y.1"});
  auto v = sample_convexity(neg.f, cfg(0, 6), Exec::parallel, {{tu::Q({"1", "0"}), tu::Q({"0", "1"})}});
  EXPECT_TRUE(v.violation);
  EXPECT_EQ(v.value, -2);
}

TEST(Samplers, SerialMatchesParallel) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto rng = sample_rng(200, s);
    Polynomial q = corpus::random_quartic(rng, 3, 3);
    auto a = sample_nonneg(q, cfg(400, s), Exec::serial);
    auto b = sample_nonneg(q, cfg(400, s), Exec::parallel);
    EXPECT_EQ(a.violation, b.violation);
    EXPECT_EQ(a.index, b.index);
    EXPECT_EQ(a.point, b.point);
    auto c = sample_nonneg(q, cfg(400, s), Exec::parallel);
    EXPECT_EQ(b.index, c.index);

    auto sa = sample_real_stability(q, cfg(200, s), Exec::serial);
    auto sb = sample_real_stability(q, cfg(200, s), Exec::parallel);
    EXPECT_EQ(sa.index, sb.index);
  }
  Field F = Field::prime(7);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto rng = sample_rng(201, s);
    auto S = corpus::random_system(rng, F, 3, 2, 2, 3);
    EXPECT_EQ(brute_force_hn(S, Exec::serial), brute_force_hn(S, Exec::parallel));
    EXPECT_EQ(brute_force_sparseshift(S.polys[0], Exec::serial), brute_force_sparseshift(S.polys[0], Exec::parallel));
  }
}

TEST(Verdict, Json) {
  auto l = tu::L({"x"});
  auto v = sample_nonneg(P(QQ, l, "x^2 - 1"), cfg(100, 1));
  auto j = v.to_json();
  EXPECT_EQ(j.at("verdict"), "counterexample");
  ASSERT_EQ(j.at("violations").size(), 1u);
  EXPECT_TRUE(j["violations"][0].contains("point"));
}

}  // namespace
