#include <gtest/gtest.h>

#include "redux/errors.hpp"
#include "redux/polyproj.hpp"
#include "redux/random.hpp"
#include "test_util.hpp"

using namespace redux;
using redux::tu::P;

namespace {

const Field F67 = Field::prime(67);

PolySystem x_squared_minus_one(const Field& F = F67) {
  auto l = tu::L({"x.1"});
  return PolySystem(F, l, {P(F, l, "x.1^2 - 1")});
}

TEST(PolyProjBuild, OneVariableExample) {
  auto art = polyproj::build(x_squared_minus_one());
  EXPECT_EQ(art.d, std::vector<unsigned>{2});
  EXPECT_EQ(art.D, std::vector<unsigned>{5});
  EXPECT_EQ(art.layout->names(), (std::vector<std::string>{"x.0", "x.1", "w.1", "z.1"}));
  EXPECT_EQ(art.f, P(F67, art.layout, "w.1^2*x.1^2 - w.1^2 + w.1^2*z.1^2 + x.0 + x.1^5"));
  EXPECT_EQ(art.g, P(F67, art.layout, "w.1^2*z.1^2 + x.0"));
}

TEST(PolyProjBuild, DegreeLadder) {
  auto l = tu::L({"x.1", "x.2"});
  for (std::size_t t = 1; t <= 4; ++t) {
    std::vector<Polynomial> polys;
    for (std::size_t k = 0; k < t; ++k) polys.push_back(P(F67, l, "x.1*x.2 - " + std::to_string(k + 1)));
    auto art = polyproj::build(PolySystem(F67, l, polys));
    EXPECT_EQ(art.g.total_degree(), static_cast<int>(2 * t + 2));
    EXPECT_LT(2 * art.d.back(), art.D.front());
  }
}

TEST(PolyProjBuild, Preconditions) {
  auto l = tu::L({"x.1"});
  EXPECT_THROW(polyproj::build(PolySystem(F67, l, {})), InputError);
  EXPECT_THROW(polyproj::build(PolySystem(F67, l, {P(F67, l, "x.1^3")})), InputError);
  EXPECT_THROW(polyproj::build(PolySystem(F67, tu::L({}), {Polynomial::constant(F67, tu::L({}), 1)})),
               InputError);
}

TEST(PolyProjWitness, OneVariableExample) {
  auto art = polyproj::build(x_squared_minus_one());
  auto w = polyproj::forward_witness(art, tu::Q({"1"}));
  // x.0 -> x.0 - 1, x.1 -> 1, the rest fixed.
  polyproj::Matrix A = polyproj::identity(4);
  A[1][1] = 0;
  EXPECT_EQ(w.A, A);
  EXPECT_EQ(w.b, tu::Q({"66", "1", "0", "0"}));
  EXPECT_TRUE(polyproj::verify_projection(art, w.A, w.b));
  // The x.1 row vanishes, so A is singular.
  for (const auto& v : w.A[1]) EXPECT_EQ(v, 0);
}

TEST(PolyProjWitness, RejectsNonSolution) {
  auto art = polyproj::build(x_squared_minus_one());
  EXPECT_THROW(polyproj::forward_witness(art, tu::Q({"3"})), InputError);
}

TEST(PolyProjVerify, IdentityFails) {
  auto art = polyproj::build(x_squared_minus_one());
  EXPECT_FALSE(polyproj::verify_projection(art, polyproj::identity(4), std::vector<Rational>(4, 0)));
}

TEST(PolyProjVerify, RandomMapsOnUnsatisfiable) {
  auto l = tu::L({"x.1"});
  auto art = polyproj::build(PolySystem(F67, l, {P(F67, l, "x.1^2 + 1")}));
  for (std::uint64_t k = 0; k < 200; ++k) {
    auto rng = sample_rng(17, k);
    polyproj::Matrix A(4, std::vector<Rational>(4));
    std::vector<Rational> b(4);
    for (auto& row : A) {
      for (auto& v : row) v = random_element(rng, F67);
    }
    for (auto& v : b) v = random_element(rng, F67);
    EXPECT_FALSE(polyproj::verify_projection(art, A, b));
  }
}

TEST(PolyProjExtract, RoundTrip) {
  auto art = polyproj::build(x_squared_minus_one());
  auto w = polyproj::forward_witness(art, tu::Q({"1"}));
  auto ex = polyproj::extract_solution(art, w.A, w.b);
  ASSERT_TRUE(ex.solution);
  EXPECT_EQ(*ex.solution, tu::Q({"1"}));
}

TEST(PolyProjExtract, RoundTripOverRationals) {
  Field QQ = Field::rationals();
  auto l = tu::L({"x.1", "x.2"});
  PolySystem S(QQ, l, {P(QQ, l, "x.1*x.2 - 1/2"), P(QQ, l, "x.1^2 - 1/4")});
  auto art = polyproj::build(S);
  auto root = tu::Q({"1/2", "1"});
  auto w = polyproj::forward_witness(art, root);
  ASSERT_TRUE(polyproj::verify_projection(art, w.A, w.b));
  auto ex = polyproj::extract_solution(art, w.A, w.b);
  ASSERT_TRUE(ex.solution);
  EXPECT_EQ(*ex.solution, root);
}

TEST(PolyProjExtract, RejectedProjection) {
  auto art = polyproj::build(x_squared_minus_one());
  auto ex = polyproj::extract_solution(art, polyproj::identity(4), std::vector<Rational>(4, 0));
  EXPECT_FALSE(ex.solution);
  EXPECT_FALSE(ex.diagnostic.empty());
}

TEST(PolyProjClaims, ConstantRowsOnAcceptedMaps) {
  auto art = polyproj::build(x_squared_minus_one());
  auto w = polyproj::forward_witness(art, tu::Q({"66"}));
  auto c = polyproj::check_claims(art, w.A, w.b);
  EXPECT_TRUE(c.constant_rows);
  EXPECT_TRUE(c.product_powers);
  EXPECT_TRUE(c.literal_products);
}

// Scaling w.1 by a square root of unity keeps f(Ay + b) = g while
// P_1 Q_1 = -w.1 z.1.
TEST(PolyProjClaims, ProductsHoldUpToRootOfUnity) {
  auto art = polyproj::build(x_squared_minus_one());
  auto w = polyproj::forward_witness(art, tu::Q({"1"}));
  w.A[art.w(1)][art.w(1)] = 66;
  ASSERT_TRUE(polyproj::verify_projection(art, w.A, w.b));
  auto c = polyproj::check_claims(art, w.A, w.b);
  EXPECT_TRUE(c.constant_rows);
  EXPECT_TRUE(c.product_powers);
  EXPECT_FALSE(c.literal_products);
}

TEST(PolyProjJson, RoundTrip) {
  auto art = polyproj::build(x_squared_minus_one());
  auto back = polyproj::artifact_from_json(polyproj::artifact_to_json(art));
  EXPECT_EQ(back.f, art.f);
  EXPECT_EQ(back.g, art.g);
  auto w = polyproj::forward_witness(art, tu::Q({"1"}));
  EXPECT_EQ(polyproj::matrix_from_json(polyproj::matrix_to_json(w.A), F67), w.A);
  EXPECT_THROW(polyproj::matrix_from_json(json::array({json::array({"1"}), json::array({"1", "2"})}), F67), InputError);
}

}  // namespace
