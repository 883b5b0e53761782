#include <gtest/gtest.h>

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

Polynomial x1sq_x2sq() { return P(QQ, tu::L({"x.1", "x.2"}), "x.1^2*x.2^2"); }

TEST(BuildHyperbolicity, ProductOfSquares) {
  auto art = hyperbolic::build_hyperbolicity(x1sq_x2sq());
  EXPECT_EQ(art.C, 1);
  EXPECT_EQ(art.beta, 8);
  EXPECT_EQ(art.h_name, "x.0");
  EXPECT_EQ(art.p, P(QQ, art.p.layout(), "x.0^4 - 8*x.0^2*x.1^2 - 8*x.0^2*x.2^2 + x.1^2*x.2^2"));
  EXPECT_EQ(art.p.evaluate(art.e), 1);
}

TEST(BuildHyperbolicity, Preconditions) {
  auto l = tu::L({"x.1", "x.2"});
  EXPECT_THROW(hyperbolic::build_hyperbolicity(Polynomial(QQ, l)), InputError);
  EXPECT_THROW(hyperbolic::build_hyperbolicity(P(QQ, l, "x.1^3*x.2 + x.1")), InputError);
  Field F = Field::prime(5);
  EXPECT_THROW(hyperbolic::build_hyperbolicity(P(F, l, "x.1^4")), InputError);
}

TEST(BuildHyperbolicity, FreshVariableAvoidsClash) {
  auto l = tu::L({"x.0", "x.1"});
  auto art = hyperbolic::build_hyperbolicity(P(QQ, l, "x.0^2*x.1^2"));
  EXPECT_NE(art.h_name, "x.0");
  EXPECT_EQ(art.p.layout()->name(0), art.h_name);
}

// The closed form written out directly from Q, beta and |x|^2.
TEST(Bezoutian, HyperplaneEntries) {
  for (std::uint64_t i = 0; i < 8; ++i) {
    auto rng = sample_rng(101, i);
    Polynomial Q = corpus::random_biquadratic(rng, 1 + i % 2, 5);
    auto art = hyperbolic::build_hyperbolicity(Q);
    auto B = hyperbolic::restrict_to_hyperplane(art, hyperbolic::bezoutian(art.p, art.e));
    auto l = art.p.layout();
    Polynomial q = Q.relayout(l);
    Polynomial norm2(QQ, l);
    for (std::size_t k = 1; k < l->size(); ++k) norm2 += Polynomial::variable(QQ, l, k).pow(2);
    const Rational b = art.beta;
    Polynomial zero(QQ, l);
    std::vector<std::vector<Polynomial>> E(4, std::vector<Polynomial>(4, zero));
    E[0][0] = (norm2 * q).scaled(2 * b);
    E[0][2] = E[2][0] = q.scaled(-4);
    E[1][1] = norm2.pow(2).scaled(2 * b * b) - q.scaled(4);
    E[1][3] = E[3][1] = norm2.scaled(-2 * b);
    E[2][2] = norm2.scaled(2 * b);
    E[3][3] = Polynomial::constant(QQ, l, 4);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) EXPECT_EQ(B.at(r, c), E[r][c]) << r << "," << c;
    }
    auto H = hyperbolic::hyperplane_matrix(art);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) EXPECT_EQ(H.at(r, c), E[r][c]);
    }
  }
}

TEST(Bezoutian, SymmetricForRandomQuartics) {
  for (std::uint64_t i = 0; i < 6; ++i) {
    auto rng = sample_rng(102, i);
    Polynomial Q = corpus::random_biquadratic(rng, 2, 3);
    auto art = hyperbolic::build_hyperbolicity(Q);
    auto rng2 = sample_rng(103, i);
    auto e = random_rationals(rng2, art.p.layout()->size(), 4);
    EXPECT_TRUE(hyperbolic::bezoutian(art.p, e).is_symmetric());
  }
}

// p(x + t e) = (x.0 + t)^4, so B(s, t) = 4 (x.0 + s)^3 (x.0 + t)^3.
TEST(Bezoutian, PureFourthPower) {
  auto l = tu::L({"x.0", "x.1"});
  auto B = hyperbolic::bezoutian(P(QQ, l, "x.0^4"), tu::Q({"1", "0"}));
  const int binom[4] = {1, 3, 3, 1};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Polynomial expect = P(QQ, l, "x.0").pow(6 - i - j).scaled(4 * binom[i] * binom[j]);
      EXPECT_EQ(B.at(i, j), expect);
    }
  }
  auto at0 = B.evaluate(tu::Q({"0", "0"}));
  EXPECT_EQ(at0[3][3], 4);
  EXPECT_EQ(at0[0][0], 0);
}

TEST(Schur, KnownPoints) {
  auto art = hyperbolic::build_hyperbolicity(x1sq_x2sq());
  auto B = hyperbolic::bezoutian(art.p, art.e);
  EXPECT_TRUE(psd_at_point(B, tu::Q({"0", "1", "0"})));
  auto conds = hyperbolic::schur_condition(art);
  EXPECT_EQ(conds.cond_b, P(QQ, art.p.layout(), "16*x.1^4 + 32*x.1^2*x.2^2 + 16*x.2^4 - x.1^2*x.2^2"));
  // x = 0: only the corner entry survives.
  auto zero = B.evaluate(tu::Q({"0", "0", "0"}));
  EXPECT_TRUE(is_psd(zero));

  auto neg = hyperbolic::build_hyperbolicity(P(QQ, tu::L({"x.1", "x.2"}), "-x.1^2*x.2^2"));
  auto nconds = hyperbolic::schur_condition(neg);
  EXPECT_EQ(nconds.cond_a.evaluate(tu::Q({"0", "1", "1"})), -1);
  EXPECT_FALSE(psd_at_point(hyperbolic::bezoutian(neg.p, neg.e), tu::Q({"0", "1", "1"})));
}

TEST(Schur, EquivalenceAtRandomPoints) {
  for (std::uint64_t i = 0; i < 6; ++i) {
    auto rng = sample_rng(104, i);
    Polynomial Q = i % 2 ? corpus::random_biquadratic(rng, 2, 4) : corpus::bilinear_square_sum(rng, 2, 2, 3);
    auto art = hyperbolic::build_hyperbolicity(Q);
    auto B = hyperbolic::bezoutian(art.p, art.e);
    auto conds = hyperbolic::schur_condition(art);
    for (std::uint64_t k = 0; k < 40; ++k) {
      auto r = sample_rng(105 + i, k);
      auto x = random_rationals(r, art.p.layout()->size(), 5);
      x[0] = 0;
      const bool rhs = sgn(conds.cond_a.evaluate(x)) >= 0 && sgn(conds.cond_b.evaluate(x)) >= 0;
      EXPECT_EQ(psd_at_point(B, x), rhs);
    }
  }
}

TEST(Stability, EpsChoice) {
  EXPECT_EQ(hyperbolic::choose_eps_denominator(2, 8), 5u);
  EXPECT_EQ(hyperbolic::choose_eps_denominator(1, 2), 3u);
  // K must exceed 2n even when beta is tiny.
  EXPECT_EQ(hyperbolic::choose_eps_denominator(3, Rational(1, 100)), 7u);
}

TEST(Stability, MatrixShape) {
  auto Q = P(QQ, tu::L({"x.1"}), "x.1^4");
  auto art = hyperbolic::build_hyperbolicity(Q);
  auto st = hyperbolic::build_stability(art);
  ASSERT_EQ(st.M.size(), 2u);
  ASSERT_EQ(st.M[0].size(), 2u);
  EXPECT_EQ(st.M[0][0], 1);
  EXPECT_EQ(st.M[0][1], 1);
  EXPECT_EQ(st.M[1][0], st.eps);
  EXPECT_EQ(st.M[1][1], -st.eps);
}

TEST(Stability, CompositionIdentity) {
  for (std::uint64_t i = 0; i < 4; ++i) {
    auto rng = sample_rng(106, i);
    auto art = hyperbolic::build_hyperbolicity(corpus::random_biquadratic(rng, 1 + i % 2, 4));
    auto st = hyperbolic::build_stability(art);
    const std::size_t n = art.n;
    for (std::uint64_t k = 0; k < 10; ++k) {
      auto r = sample_rng(107 + i, k);
      Rational t = random_rational(r, 6);
      auto x = random_rationals(r, 2 * n, 6);
      std::vector<Rational> u(2 * n);
      for (std::size_t j = 0; j < 2 * n; ++j) u[j] = t / Rational(2 * n) + x[j];
      std::vector<Rational> y(n + 1, 0);
      y[0] = t;
      for (std::size_t row = 0; row <= n; ++row) {
        for (std::size_t col = 0; col < 2 * n; ++col) y[row] += st.M[row][col] * x[col];
      }
      EXPECT_EQ(st.ptilde.evaluate(u), art.p.evaluate(y));
    }
  }
}

TEST(EpsPositivity, Values) {
  auto art = hyperbolic::build_hyperbolicity(x1sq_x2sq());
  auto q = hyperbolic::eps_positivity_poly(art, Rational(1, 5));
  EXPECT_EQ(q.evaluate(tu::Q({"0", "0"})), 0);
  EXPECT_EQ(q.evaluate(tu::Q({"1", "1"})), Rational(68, 25) + Rational(1, 625));
  for (std::uint64_t k = 0; k < 200; ++k) {
    auto r = sample_rng(108, k);
    auto x = random_rationals(r, 2, 10);
    if (sgn(x[0]) == 0 && sgn(x[1]) == 0) continue;
    EXPECT_GT(q.evaluate(x), 0);
  }
}

TEST(Convexity, HandComputedExample) {
  auto l = corpus::bipartite_layout(1);
  auto art = hyperbolic::build_convexity(P(QQ, l, "X.1^2*Y.1^2"), {"X.1"}, {"Y.1"});
  EXPECT_EQ(art.gamma, 4);
  EXPECT_EQ(art.f, P(QQ, l, "X.1^2*Y.1^2 + 2*X.1^4 + 2*Y.1^4"));
  EXPECT_EQ(art.f.total_degree(), 4);
  Polynomial extra = art.f - art.b;
  for (const auto& t : extra.terms()) {
    EXPECT_GT(t.coeff, 0);
    for (const auto& [v, e] : t.mono.factors()) EXPECT_EQ(e % 2, 0u);
  }
  auto H = hessian(art.f);
  EXPECT_EQ(H.at(0, 0), P(QQ, l, "2*Y.1^2 + 24*X.1^2"));
  EXPECT_EQ(H.at(0, 1), P(QQ, l, "4*X.1*Y.1"));
  EXPECT_EQ(H.at(1, 1), P(QQ, l, "2*X.1^2 + 24*Y.1^2"));
}

TEST(Convexity, GammaIsLargestMixedCoefficient) {
  auto l = corpus::bipartite_layout(2);
  auto art = hyperbolic::build_convexity(P(QQ, l, "X.1^2*Y.1^2 - 3*X.1*X.2*Y.1*Y.2 + 5*X.2^2*Y.1*Y.2"),
                                         {"X.1", "X.2"}, {"Y.1", "Y.2"});
  // d^2/dX.2 dY.1 of 5 X.2^2 Y.1 Y.2 is 10 X.2 Y.2.
  EXPECT_EQ(art.gamma, 10);
}

TEST(Convexity, Preconditions) {
  auto l = corpus::bipartite_layout(1);
  EXPECT_THROW(hyperbolic::build_convexity(P(QQ, l, "X.1^3*Y.1"), {"X.1"}, {"Y.1"}), InputError);
  EXPECT_THROW(hyperbolic::build_convexity(P(QQ, l, "X.1^2*Y.1^2"), {"X.1"}, {"Y.1", "X.1"}), InputError);
}

TEST(HyperbolicJson, RoundTrips) {
  auto art = hyperbolic::build_hyperbolicity(x1sq_x2sq());
  auto back = hyperbolic::hyperbolicity_from_json(hyperbolic::hyperbolicity_to_json(art));
  EXPECT_EQ(back.p, art.p);
  auto l = corpus::bipartite_layout(1);
  auto conv = hyperbolic::build_convexity(P(QQ, l, "X.1^2*Y.1^2"), {"X.1"}, {"Y.1"});
  EXPECT_EQ(hyperbolic::convexity_from_json(hyperbolic::convexity_to_json(conv)).f, conv.f);
  auto j = hyperbolic::hyperbolicity_to_json(art);
  j["p"]["terms"][0]["coeff"] = "7";
  EXPECT_THROW(hyperbolic::hyperbolicity_from_json(j), InputError);
}

}  // namespace
