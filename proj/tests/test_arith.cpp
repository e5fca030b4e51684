#include <gtest/gtest.h>

#include "ftq/correspondence.hpp"
#include "ftq/errors.hpp"
#include "ftq/linalg.hpp"
#include "ftq/poly.hpp"
#include "ftq/rational.hpp"

using namespace ftq;

TEST(Rational, ParseAndPrintCanonical) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_TRUE(is_integer(parse_rational("8/4")));
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("abc"), InvalidInput);
}

TEST(Linalg, RankSolveAndKronecker) {
  RationalMatrix a(3, 2);
  a(0, 0) = 1; a(1, 0) = 2; a(2, 0) = 3;
  a(0, 1) = 0; a(1, 1) = 1; a(2, 1) = 1;
  EXPECT_EQ(rank(a), 2u);
  const std::vector<Rational> b = {2, 5, 7};
  auto x = solve(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  const std::vector<Rational> inconsistent = {1, 0, 0};
  EXPECT_FALSE(solve(a, inconsistent));

  RationalMatrix swap(2, 2);
  swap(0, 1) = 1; swap(1, 0) = 1;
  const auto k = kronecker(RationalMatrix::identity(2), swap);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k(0, 1), 1);  // left factor is the most significant digit
  EXPECT_EQ(k(2, 3), 1);
  EXPECT_EQ(k(0, 2), 0);
}

TEST(Polynomial, ParseArithmeticAndErrors) {
  const auto p = Polynomial::parse("(x + 1)^2 - 2*x");
  EXPECT_EQ(p, Polynomial::parse("x^2 + 1"));
  EXPECT_EQ(p.variables(), std::vector<std::string>{"x"});
  EXPECT_THROW(Polynomial::parse("x +"), SyntaxError);
  EXPECT_THROW(Polynomial::parse("x^y"), SyntaxError);
  EXPECT_THROW(Polynomial::parse("(x"), SyntaxError);
}

TEST(Polynomial, ModularEvaluation) {
  const auto p = Polynomial::parse("a*d + b*c - 1");
  const std::vector<std::string> order = {"a", "b", "c", "d"};
  ModularPolynomial m(p, order, 5);
  const std::vector<std::uint32_t> v = {2, 0, 0, 3};
  EXPECT_EQ(m.evaluate(v), 0u);  // 6 - 1 ≡ 0 mod 5
  EXPECT_THROW(ModularPolynomial(Polynomial::parse("z"), order, 5), InvalidInput);
}

TEST(PolyQ, ParseEvaluatePrint) {
  const auto p = PolyQ::parse("q^2*(q-2)*(q-1)");
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p.evaluate(Integer(3)), 9 * 1 * 2);
  EXPECT_EQ(p.to_string(), "q^4-3*q^3+2*q^2");
  EXPECT_EQ(PolyQ::parse(p.to_string()), p);
  EXPECT_TRUE(PolyQ::parse("q - q").is_zero());
  EXPECT_THROW(PolyQ::parse("x + q"), InvalidInput);
}

TEST(Interpolation, ReproducesPolynomialsFromSamples) {
  // Independent check: sample a known polynomial and recover its coefficients.
  const std::vector<Integer> xs = {2, 3, 5, 7, 11};
  std::vector<Rational> ys;
  for (const auto& x : xs) ys.push_back(Rational(x * x * (x * x - 3 * x + 3)));
  const auto coefficients = interpolate_values(xs, ys);
  const std::vector<Rational> expected = {0, 0, 3, -3, 1};
  EXPECT_EQ(coefficients, expected);
}
