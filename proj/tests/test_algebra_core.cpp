#include <random>

#include <gtest/gtest.h>

#include "lsing/polynomial.hpp"
#include "test_util.hpp"

namespace lsing {
namespace {

using testing_util::P;
using testing_util::random_poly;

TEST(Add, CancelsAndDoubles) {
  EXPECT_EQ(P("x+y") + P("-x"), P("y"));
  EXPECT_EQ(P("x^3+y^2") + Polynomial(2), P("x^3+y^2"));
  EXPECT_EQ(P("x^3+y^2") + P("x^3+y^2"), P("2*x^3+2*y^2"));
  EXPECT_TRUE((P("x") - P("x")).is_zero());
}

TEST(Add, RejectsDimensionMismatch) {
  EXPECT_THROW(Polynomial(2) + Polynomial(3), DimensionMismatch);
  EXPECT_THROW(Polynomial(2) * Polynomial(3), DimensionMismatch);
}

TEST(Mul, Basic) {
  EXPECT_EQ(P("x+y") * P("x-y"), P("x^2-y^2"));
  EXPECT_EQ(P("x^3+y^2") * P("1"), P("x^3+y^2"));
  EXPECT_EQ(P("x+1") * P("x"), P("x^2+x"));
}

TEST(PartialDerivative, Basic) {
  EXPECT_EQ(partial_derivative(P("x^3+y^2"), 0), P("3*x^2"));
  EXPECT_EQ(partial_derivative(P("x^3+y^2"), 1), P("2*y"));
  EXPECT_TRUE(partial_derivative(P("7"), 0).is_zero());
  EXPECT_THROW(partial_derivative(P("x"), 2), std::out_of_range);
}

TEST(JacobianMinor, Basic) {
  EXPECT_EQ(jacobian_minor(P("y"), P("x^3+y^2"), 0, 1), P("-3*x^2"));
  EXPECT_TRUE(jacobian_minor(P("x^3+y^2"), P("x^3+y^2"), 0, 1).is_zero());
  EXPECT_EQ(jacobian_minor(P("x+y"), P("x*y"), 0, 1), P("x-y"));
  EXPECT_THROW(jacobian_minor(P("x"), P("y"), 1, 1), std::invalid_argument);
}

TEST(JacobianMinor, Antisymmetric) {
  auto f = P("x^2*y+3*y^3"), g = P("x-y^2+x*y");
  EXPECT_EQ(jacobian_minor(f, g, 0, 1), -jacobian_minor(f, g, 1, 0));
  EXPECT_EQ(jacobian_minor(f, g, 0, 1), -jacobian_minor(g, f, 0, 1));
}

TEST(LeadingTerm, LowestDegreeLeads) {
  EXPECT_EQ(P("x+x^2").leading_monomial(), Monomial(2, {1, 0}));
  EXPECT_EQ(P("1+x").leading_monomial(), Monomial(2, {0, 0}));
  // Degree tie broken by reverse lex with x > y: x^2*y beats x*y^2.
  const auto tie = P("3*x^2*y+2*x*y^2");
  const auto& lt = tie.leading_term();
  EXPECT_EQ(lt.mono, Monomial(2, {2, 1}));
  EXPECT_EQ(lt.coeff, 3);
  EXPECT_THROW(Polynomial(2).leading_term(), std::domain_error);
}

TEST(Render, LocalOrderAndRationals) {
  const std::vector<std::string> v{"x", "y"};
  EXPECT_EQ(render(P("x^3+y^2"), v), "y^2+x^3");
  EXPECT_EQ(render(P("-3*x^2"), v), "-3*x^2");
  EXPECT_EQ(render(P("1/2*x*y-x+5"), v), "5-x+1/2*x*y");
  EXPECT_EQ(render(Polynomial(2), v), "0");
}

class RingProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20261019};
};

TEST_F(RingProperties, CommutativeRingAxioms) {
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST_F(RingProperties, DerivativeLinearAndLeibniz) {
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_poly(rng, 3), g = random_poly(rng, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      ASSERT_EQ((f + g).derivative(i), f.derivative(i) + g.derivative(i));
      ASSERT_EQ((f * g).derivative(i), f * g.derivative(i) + g * f.derivative(i));
    }
  }
}

TEST_F(RingProperties, LocalOrderIsMultiplicativeAndLocal) {
  std::uniform_int_distribution<int> e(0, 4);
  auto rnd = [&] { return Monomial(3, {e(rng), e(rng), e(rng)}); };
  for (int trial = 0; trial < 2000; ++trial) {
    auto m = rnd(), m1 = rnd(), m2 = rnd();
    if (LocalOrder::greater(m1, m2)) ASSERT_TRUE(LocalOrder::greater(m * m1, m * m2));
    if (!m.is_one()) ASSERT_TRUE(LocalOrder::greater(Monomial(3), m));
    // Totality.
    ASSERT_TRUE(LocalOrder::greater(m1, m2) || LocalOrder::greater(m2, m1) || m1 == m2);
  }
}

TEST_F(RingProperties, EcartNonNegative) {
  for (int trial = 0; trial < 500; ++trial) {
    auto f = random_poly(rng, 2);
    if (f.is_zero()) continue;
    ASSERT_GE(f.ecart(), 0);
    // The leading term has minimal degree.
    for (const auto& t : f.terms()) ASSERT_GE(t.mono.degree(), f.leading_monomial().degree());
  }
}

}  // namespace
}  // namespace lsing
