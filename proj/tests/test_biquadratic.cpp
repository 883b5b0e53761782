#include <gtest/gtest.h>

#include "redux/biquadratic.hpp"
#include "redux/errors.hpp"
#include "test_util.hpp"

using namespace redux;
using redux::tu::P;

namespace {

const Field QQ = Field::rationals();

PolySystem x1_is_zero() {
  auto l = tu::L({"x.1"});
  return PolySystem(QQ, l, {P(QQ, l, "x.1")});
}

Rational power(Rational base, unsigned e) {
  Rational r = 1;
  while (e--) r *= base;
  return r;
}

TEST(Chain, CanonicalWitnessM4) {
  auto ys = biquadratic::canonical_chain(4);
  ASSERT_EQ(ys.size(), 5u);
  EXPECT_EQ(ys[0], Rational(1, 4));
  EXPECT_EQ(ys[4], power(Rational(1, 4), 16));
  auto r = biquadratic::check_chain(ys, ys);
  EXPECT_EQ(r.lhs, 0);
  EXPECT_TRUE(r.hypothesis);
  EXPECT_TRUE(r.side_conditions);
  EXPECT_TRUE(r.bound);
}

TEST(Chain, AllZerosFailHypothesis) {
  std::vector<Rational> zeros(4, 0);
  EXPECT_FALSE(biquadratic::check_chain(zeros, zeros).hypothesis);
}

TEST(Chain, LargeSeedFailsSideConditions) {
  auto ys = biquadratic::canonical_chain(3);
  ys[0] = Rational(3, 4);
  EXPECT_FALSE(biquadratic::check_chain(ys, ys).side_conditions);
}

TEST(Chain, RejectsBadShapes) {
  EXPECT_THROW(biquadratic::check_chain({1, 2}, {1}), InputError);
  std::vector<Rational> long_chain(biquadratic::kMaxChainLength + 2, Rational(1, 4));
  EXPECT_THROW(biquadratic::check_chain(long_chain, long_chain), InputError);
}

TEST(GapBound, Examples) {
  EXPECT_EQ(biquadratic::gap_bound_log2(0), -32);
  EXPECT_EQ(biquadratic::gap_bound_log2(1), -64);
  EXPECT_EQ(biquadratic::gap_bound_log2(5), -1024);
}

TEST(BuildG, SingleLinearEquation) {
  auto g = biquadratic::build_g(x1_is_zero());
  EXPECT_EQ(g.layout()->names(), (std::vector<std::string>{"x.0", "x.1", "w.0", "w.1"}));
  EXPECT_EQ(g, P(QQ, g.layout(),
                 "x.1^2*w.0^2 + x.1^2 - 2*x.1*w.1 + w.1^2 + x.0^2 - 2*x.0 + 1 + w.0^2 - 2*w.0 + 1"));
}

TEST(BuildG, RootsMapToRoots) {
  auto l = tu::L({"x.1", "x.2"});
  PolySystem S(QQ, l, {P(QQ, l, "x.1*x.2 - 1/3"), P(QQ, l, "x.1^2 + 2*x.2 - 5/3")});
  auto g = biquadratic::build_g(S);
  // Root (1, 1/3): 1/3 - 1/3 = 0, 1 + 2/3 - 5/3 = 0.
  auto u = tu::Q({"1", "1/3"});
  ASSERT_TRUE(S.is_satisfied_by(u));
  std::vector<Rational> point{1, u[0], u[1], 1, u[0], u[1]};
  EXPECT_EQ(g.evaluate(point), 0);
  EXPECT_THROW(biquadratic::build_g(PolySystem(Field::prime(5), l, {})), InputError);
}

TEST(BuildH, MatchesHandExpansion) {
  auto art = biquadratic::build(x1_is_zero(), 2);
  auto l = art.h.layout();
  auto E = [&](const char* s) { return P(QQ, l, s); };
  Polynomial expect = art.g.relayout(l);
  expect += E("x.1*w.1 + x.2*w.2 - 1").pow(2) + E("x.2 - w.2").pow(2);
  Polynomial chain = E("y.1 - 1/16").pow(2) + E("y.2 - y.1*z.1").pow(2) + E("y.1 - z.1").pow(2) + E("y.2 - z.2").pow(2);
  expect += chain.scaled(400);
  expect += E("-2*y.2*z.2 + z.2^2 + y.2^2*z.2^2");
  EXPECT_EQ(art.h, expect);
  std::vector<std::string> a, b;
  for (const auto& s : art.part_a) {
    if (s != "alpha") a.push_back(s);
  }
  for (const auto& s : art.part_b) {
    if (s != "beta") b.push_back(s);
  }
  EXPECT_TRUE(is_semi_biquadratic(art.h, a, b));
}

TEST(Build, LayoutAndHomogenization) {
  for (unsigned m : {1u, 2u, 3u}) {
    auto art = biquadratic::build(x1_is_zero(), m);
    EXPECT_TRUE(is_biquadratic(art.Q, art.part_a, art.part_b));
    EXPECT_EQ(art.Q.layout()->size(), 2 * (art.n + 2) + 2 * m + 2);
    // alpha = beta = 1 gives back h.
    const auto& L = *art.Q.layout();
    std::vector<std::pair<std::size_t, Rational>> ones{{L.index("alpha"), 1}, {L.index("beta"), 1}};
    EXPECT_EQ(art.Q.substitute_values(ones), art.h.relayout(art.Q.layout()));
  }
}

TEST(ForwardWitness, OriginRoot) {
  for (unsigned m : {1u, 2u, 4u}) {
    auto art = biquadratic::build(x1_is_zero(), m);
    auto point = biquadratic::forward_witness(art, tu::Q({"0"}));
    const auto& L = *art.Q.layout();
    EXPECT_EQ(point[L.index("x.2")], 1);
    EXPECT_EQ(point[L.index("w.2")], 1);
    Rational ym = power(Rational(1, 4), 1u << m);
    EXPECT_EQ(art.Q.evaluate(point), -(ym * ym) * (1 - ym * ym));
  }
}

TEST(ForwardWitness, MOneValue) {
  auto art = biquadratic::build(x1_is_zero(), 1);
  auto point = biquadratic::forward_witness(art, tu::Q({"0"}));
  const Rational y(1, 16);
  EXPECT_EQ(art.Q.evaluate(point), -(2 * y * y - y * y - y * y * y * y));
  EXPECT_LT(art.Q.evaluate(point), 0);
}

TEST(ForwardWitness, RejectsNonRoot) {
  auto art = biquadratic::build(x1_is_zero(), 2);
  EXPECT_THROW(biquadratic::forward_witness(art, tu::Q({"1/2"})), InputError);
}

TEST(ForwardWitness, RationalSphereCompletion) {
  auto l = tu::L({"x.1"});
  PolySystem S(QQ, l, {P(QQ, l, "x.1 - 3/5")});
  auto art = biquadratic::build(S, 2);
  auto point = biquadratic::forward_witness(art, tu::Q({"3/5"}));
  EXPECT_EQ(point[art.Q.layout()->index("x.2")], Rational(4, 5));
  EXPECT_LT(art.Q.evaluate(point), 0);
}

TEST(BiquadraticJson, RoundTrip) {
  auto art = biquadratic::build(x1_is_zero(), 2);
  auto j = biquadratic::artifact_to_json(art);
  EXPECT_EQ(biquadratic::artifact_from_json(j).Q, art.Q);
  j["Q"][0]["coeff"] = "12345";
  EXPECT_THROW(biquadratic::artifact_from_json(j), InputError);
}

}  // namespace
