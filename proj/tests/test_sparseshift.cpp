#include <gtest/gtest.h>

#include "redux/errors.hpp"
#include "redux/normalizer.hpp"
#include "redux/random.hpp"
#include "redux/sparseshift.hpp"
#include "test_util.hpp"

using namespace redux;
using redux::tu::P;

namespace {

const Field F67 = Field::prime(67);

PolySystem x_squared_minus_one() {
  auto l = tu::L({"x.1"});
  return PolySystem(F67, l, {P(F67, l, "x.1^2 - 1")});
}

PolySystem two_var_system() {
  auto l = tu::L({"x.1", "x.2"});
  // Root (2, 3).
  return PolySystem(F67, l, {P(F67, l, "x.1*x.2 - 6"), P(F67, l, "x.1^2 + x.2 - 7")});
}

std::string sum(const std::string& family, int count) {
  std::string s;
  for (int i = 1; i <= count; ++i) s += (i > 1 ? " + " : "") + family + "." + std::to_string(i);
  return s;
}

TEST(SparseShiftBuild, ParametersForOneVariable) {
  auto art = sparseshift::build(x_squared_minus_one());
  const auto& p = art.params;
  EXPECT_EQ(p.N, 4u);
  EXPECT_EQ(p.M, 4u);
  EXPECT_EQ(p.y1_size, 3u);
  EXPECT_EQ(p.y2_size, 1u);
  EXPECT_EQ(p.r, 5u);
  EXPECT_EQ(p.s, 5u);
  EXPECT_EQ(art.layout->size(), 3u + 4u + 5u + 3u + 1u + 20u);
}

TEST(SparseShiftBuild, GammasAreOneToR) {
  auto art = sparseshift::build(x_squared_minus_one());
  EXPECT_EQ(art.gammas, tu::Q({"1", "2", "3", "4", "5"}));
}

// Independent expansion of the gadget for {x.1^2 - 1} from its definition.
TEST(SparseShiftBuild, MatchesHandExpansion) {
  auto art = sparseshift::build(x_squared_minus_one());
  auto l = art.layout;
  auto E = [&](const std::string& s) { return P(F67, l, s); };
  Polynomial expect = E(sum("y1", 3)) * E("alpha.1.1 - 1");
  expect += E("w.1") * (E("alpha.1.1 - alpha.1^2") + E("alpha.0 + alpha.1"));
  for (int k = 1; k <= 4; ++k) {
    const std::string b = "beta." + std::to_string(k) + ".1.1";
    expect += E("w." + std::to_string(k + 1)) *
              (E(b + " - alpha.1^2") + E("alpha.0 + alpha.1").scaled(k + 1));
  }
  expect += E("y2.1") * E("alpha.1^2");
  EXPECT_EQ(art.ps, expect);
  for (int k = 1; k <= 4; ++k) {
    expect += E(sum("z." + std::to_string(k), 4)) * E("alpha.1.1 - beta." + std::to_string(k) + ".1.1");
  }
  expect += E(sum("z.5", 4)) * E("alpha.0 + alpha.1");
  EXPECT_EQ(art.qs, expect);
  EXPECT_EQ(art.ps.monomial_count(), 27u);
  EXPECT_EQ(art.qs.monomial_count(), 67u);
}

TEST(SparseShiftBuild, StoredIdentityHolds) {
  for (const auto& S : {x_squared_minus_one(), normalize(two_var_system()).system}) {
    auto art = sparseshift::build(S);
    const std::size_t M = art.params.M;
    Polynomial rebuilt = art.ps;
    for (std::size_t i = 0; i < art.params.s; ++i) {
      Polynomial lin(art.field, art.layout);
      for (std::size_t j = 1; j <= M; ++j) {
        lin += Polynomial::variable(art.field, art.layout, "z." + std::to_string(i + 1) + "." + std::to_string(j));
      }
      rebuilt += lin * art.linear_constraints[i];
    }
    EXPECT_EQ(rebuilt, art.qs);
    EXPECT_EQ(art.part1 + art.part2 + art.part3, art.ps);
    EXPECT_EQ(art.qs.total_degree(), 3);
  }
}

TEST(SparseShiftBuild, Preconditions) {
  auto l = tu::L({"x.1"});
  EXPECT_THROW(sparseshift::build(PolySystem(F67, l, {P(F67, l, "x.1^3 - 1")})), InputError);
  EXPECT_THROW(sparseshift::build(PolySystem(F67, l, {P(F67, l, "x.1 - 1"), P(F67, l, "x.1 - 2")})), InputError);
  EXPECT_THROW(sparseshift::build(PolySystem(F67, l, {P(F67, l, "x.1^2")})), InputError);
  Field F3 = Field::prime(3);
  EXPECT_THROW(sparseshift::build(PolySystem(F3, l, {P(F3, l, "x.1 - 1")})), InputError);
  // 4 n^4 = 64 < 67 is the largest n = 2 can go down to.
  auto l2 = tu::L({"x.1", "x.2"});
  Field F61 = Field::prime(61);
  EXPECT_THROW(sparseshift::build(PolySystem(F61, l2, {P(F61, l2, "x.1 - 1")})), InputError);
  EXPECT_NO_THROW(sparseshift::build(PolySystem(F67, l2, {P(F67, l2, "x.1 - 1")})));
}

TEST(SparseShiftWitness, ValuesForOneVariable) {
  auto art = sparseshift::build(x_squared_minus_one());
  auto shift = sparseshift::forward_witness(art, tu::Q({"1"}));
  EXPECT_EQ(shift[art.alpha_x(1)], 1);
  EXPECT_EQ(shift[art.alpha_xx(1, 1)], 1);
  EXPECT_EQ(shift[art.alpha0()], 66);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(shift[art.layout->index("beta." + std::to_string(k) + ".1.1")], 1);
  for (std::size_t i = art.layout->index("w.1"); i < shift.size(); ++i) EXPECT_EQ(shift[i], 0);
  const auto after = shift_substitute(art.qs, shift).monomial_count();
  EXPECT_LT(after, art.qs.monomial_count());
  auto d = sparseshift::monomial_delta_parts(art, shift);
  EXPECT_EQ(d.d1, -3);
}

TEST(SparseShiftWitness, RejectsNonSolution) {
  auto art = sparseshift::build(x_squared_minus_one());
  EXPECT_THROW(sparseshift::forward_witness(art, tu::Q({"2"})), InputError);
  EXPECT_THROW(sparseshift::forward_witness(art, tu::Q({"1", "1"})), InputError);
}

TEST(SparseShiftExtract, RoundTrip) {
  for (const auto& [S, root] : {std::pair{x_squared_minus_one(), tu::Q({"66"})},
                                std::pair{two_var_system(), tu::Q({"2", "3"})}}) {
    auto N = normalize(S);
    auto art = sparseshift::build(N.system);
    auto shift = sparseshift::forward_witness(art, extend_solution(N.trace, S, N.system, root));
    auto ex = sparseshift::extract_solution(art, shift);
    ASSERT_TRUE(ex.solution) << ex.diagnostic;
    EXPECT_EQ(restrict_solution(S, N.system, *ex.solution), root);
    EXPECT_LT(ex.after, ex.before);
  }
}

TEST(SparseShiftExtract, ZeroShiftRefused) {
  auto art = sparseshift::build(x_squared_minus_one());
  std::vector<Rational> zero(art.layout->size(), 0);
  auto ex = sparseshift::extract_solution(art, zero);
  EXPECT_FALSE(ex.solution);
  EXPECT_EQ(ex.after, ex.before);
  EXPECT_FALSE(ex.diagnostic.empty());
}

TEST(SparseShiftExtract, ViolatedConstraintReported) {
  auto art = sparseshift::build(x_squared_minus_one());
  auto shift = sparseshift::forward_witness(art, tu::Q({"1"}));
  shift[art.layout->index("beta.2.1.1")] = 5;  // alpha.1.1 - beta.2.1.1 != 0
  auto ex = sparseshift::extract_solution(art, shift);
  EXPECT_FALSE(ex.solution);
  ASSERT_TRUE(ex.violated_constraint);
  EXPECT_EQ(*ex.violated_constraint, 1u);
  EXPECT_GE(ex.after, ex.before);
}

TEST(SparseShiftDeltas, Part1WhenG0Vanishes) {
  auto art = sparseshift::build(x_squared_minus_one());
  std::vector<Rational> s(art.layout->size(), 0);
  s[art.alpha_xx(1, 1)] = 1;  // g0 = alpha.1.1 - 1
  auto d = sparseshift::monomial_delta_parts(art, s);
  EXPECT_TRUE(d.g0_vanishes);
  EXPECT_EQ(d.d1, -3);
}

TEST(SparseShiftDeltas, Part3UnchangedWithoutXShift) {
  auto art = sparseshift::build(normalize(two_var_system()).system);
  auto rng = sample_rng(5, 0);
  std::vector<Rational> s(art.layout->size(), 0);
  for (std::size_t i = 0; i < art.layout->index("w.1"); ++i) s[i] = random_element(rng, F67);
  s[art.alpha_x(1)] = 0;
  s[art.alpha_x(2)] = 0;
  EXPECT_EQ(sparseshift::monomial_delta_parts(art, s).d3, 0);
}

TEST(SparseShiftDeltas, Part3RangeAndExactSum) {
  auto art = sparseshift::build(normalize(two_var_system()).system);
  const long n = 2;
  for (std::uint64_t k = 0; k < 40; ++k) {
    auto rng = sample_rng(6, k);
    std::vector<Rational> s(art.layout->size(), 0);
    for (std::size_t i = 0; i < art.layout->index("w.1"); ++i) s[i] = random_element(rng, F67);
    if (sgn(s[art.alpha_x(1)]) == 0) s[art.alpha_x(1)] = 1;
    auto d = sparseshift::monomial_delta_parts(art, s);
    EXPECT_GE(d.d3, 2 * n);
    EXPECT_LE(d.d3, (n + 1) * n);
    // Each part's change matches direct re-expansion.
    auto change = [&](const Polynomial& part) {
      return static_cast<long>(shift_substitute(part, s).monomial_count()) - static_cast<long>(part.monomial_count());
    };
    EXPECT_EQ(d.d1, change(art.part1));
    EXPECT_EQ(d.d2, change(art.part2));
    EXPECT_EQ(d.d3, change(art.part3));
  }
}

// With a_0 + a_1 = 0 and 2 a_1 = gamma_1 the diagonal quadratic w_1 g_1 loses
// its w_1 alpha_1 monomial, which the v2 count does not see.
TEST(SparseShiftDeltas, DiagonalCancellationBelowStatedBound) {
  auto art = sparseshift::build(x_squared_minus_one());
  std::vector<Rational> s(art.layout->size(), 0);
  s[art.alpha_x(1)] = 34;  // 2 * 34 = 1 = gamma_1 mod 67
  s[art.alpha0()] = 33;
  auto d = sparseshift::monomial_delta_parts(art, s);
  EXPECT_TRUE(d.eq3_holds);
  EXPECT_EQ(d.v1, 5u);
  EXPECT_EQ(d.v2, 0u);
  EXPECT_EQ(d.part2_losses, 1u);
  EXPECT_EQ(d.d2, 4);
  EXPECT_LT(d.d2, static_cast<long>(d.v1) - static_cast<long>(d.v2));
}

TEST(SparseShiftDeltas, Part2IdentityWithEq3) {
  auto art = sparseshift::build(normalize(two_var_system()).system);
  for (std::uint64_t k = 0; k < 60; ++k) {
    auto rng = sample_rng(7, k);
    std::vector<Rational> s(art.layout->size(), 0);
    for (std::size_t i = 0; i < art.layout->index("w.1"); ++i) s[i] = random_element(rng, F67);
    s[art.alpha0()] = F67.neg(F67.add(s[art.alpha_x(1)], s[art.alpha_x(2)]));
    auto d = sparseshift::monomial_delta_parts(art, s);
    ASSERT_TRUE(d.eq3_holds);
    EXPECT_EQ(d.d2, static_cast<long>(d.v1) - static_cast<long>(d.part2_losses));
  }
}

TEST(SparseShiftJson, RoundTripAndTamper) {
  auto art = sparseshift::build(x_squared_minus_one());
  auto j = sparseshift::artifact_to_json(art);
  auto back = sparseshift::artifact_from_json(j);
  EXPECT_EQ(back.qs, art.qs);
  j["QS"][0]["coeff"] = "2";
  EXPECT_THROW(sparseshift::artifact_from_json(j), InputError);
  EXPECT_THROW(sparseshift::artifact_from_json(json{{"kind", "other"}}), InputError);
}

TEST(SparseShiftJson, ShiftFormats) {
  auto art = sparseshift::build(x_squared_minus_one());
  auto named = sparseshift::shift_from_json(art, json{{"alpha.1", "1"}, {"alpha.0", "-1"}});
  EXPECT_EQ(named[art.alpha_x(1)], 1);
  EXPECT_EQ(named[art.alpha0()], 66);
  auto full = sparseshift::forward_witness(art, tu::Q({"1"}));
  EXPECT_EQ(sparseshift::shift_from_json(art, rationals_to_json(full)), full);
  EXPECT_THROW(sparseshift::shift_from_json(art, json::array({"1"})), InputError);
  EXPECT_THROW(sparseshift::shift_from_json(art, json{{"nope", "1"}}), InputError);
}

}  // namespace
