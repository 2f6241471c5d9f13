#include <random>

#include <gtest/gtest.h>

#include "superkrull/errors.h"
#include "superkrull/polynomial.h"
#include "superkrull/scalar.h"
#include "test_util.h"

namespace superkrull {
namespace {

using testing::RandomPolynomial;

const Field kQ = Field::Rationals();

Polynomial X(std::size_t nvars, std::size_t i, Field f = kQ) {
  return Polynomial::Variable(f, nvars, i);
}
Polynomial C(std::size_t nvars, long c, Field f = kQ) { return Polynomial::Constant(f, nvars, c); }

TEST(Scalar, RationalArithmetic) {
  const Scalar a = Scalar::Parse(kQ, "1/2");
  const Scalar b = Scalar::Parse(kQ, "-2/6");
  EXPECT_EQ((a + b).ToString(), "1/6");
  EXPECT_EQ((a * b).ToString(), "-1/6");
  EXPECT_EQ((a / b).ToString(), "-3/2");
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_THROW(Scalar::Zero(kQ).Inverse(), ArgumentError);
}

TEST(Scalar, PrimeField) {
  const Field f = Field::Prime(7);
  EXPECT_EQ((Scalar::FromInt(f, 3) * Scalar::FromInt(f, 5)).ToString(), "1");
  EXPECT_EQ(Scalar::FromInt(f, -1).ToString(), "6");
  EXPECT_EQ(Scalar::Parse(f, "1/3"), Scalar::FromInt(f, 5));
  EXPECT_THROW(Field::Prime(9), ArgumentError);
  EXPECT_THROW(Scalar::One(f) + Scalar::One(kQ), ArgumentError);
}

TEST(Scalar, StringRoundTrip) {
  std::mt19937_64 rng(11);
  for (Field f : {kQ, Field::Prime(101)}) {
    for (int i = 0; i < 500; ++i) {
      Scalar s = testing::RandomScalar(f, rng, 1000);
      const Scalar d = testing::RandomScalar(f, rng, 1000);
      if (!d.is_zero()) s /= d;
      EXPECT_EQ(Scalar::Parse(f, s.ToString()), s);
    }
  }
}

TEST(PolyAdd, Examples) {
  const Polynomial x = X(1, 0);
  EXPECT_EQ((x + C(1, 1)) + (-x), C(1, 1));
  EXPECT_EQ(x + Polynomial(kQ, 1), x);
  const Field gf3 = Field::Prime(3);
  EXPECT_TRUE((X(1, 0, gf3).Scaled(Scalar::FromInt(gf3, 2)) + X(1, 0, gf3)).is_zero());
}

TEST(PolyMul, Examples) {
  const Polynomial x = X(2, 0), y = X(2, 1);
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
  EXPECT_EQ(x * C(2, 1), x);
  const Field gf2 = Field::Prime(2);
  const Polynomial z = X(1, 0, gf2) + C(1, 1, gf2);
  EXPECT_EQ(z * z, X(1, 0, gf2) * X(1, 0, gf2) + C(1, 1, gf2));
}

TEST(PolyMul, ArityMismatchThrows) {
  EXPECT_THROW(X(1, 0) * X(2, 0), ArgumentError);
}

TEST(LeadingTerm, Examples) {
  const Polynomial x = X(2, 0), y = X(2, 1);
  const Term t = LeadingTerm(x * x * y + x * y * y, MonomialOrder::Grevlex());
  EXPECT_EQ(t.monomial, Monomial({2, 1}));
  EXPECT_TRUE(t.coefficient.is_one());
  const Term c = LeadingTerm(C(2, 5), MonomialOrder::Grevlex());
  EXPECT_TRUE(c.monomial.is_one());
  EXPECT_EQ(c.coefficient, Scalar::FromInt(kQ, 5));
  EXPECT_EQ(LeadingTerm(x + y, MonomialOrder::Lex()).monomial, Monomial({1, 0}));
  EXPECT_THROW(LeadingTerm(Polynomial(kQ, 2), MonomialOrder::Lex()), ArgumentError);
}

TEST(MonomialOrder, GrevlexVersusLex) {
  // x1*x3^2 vs x2^3 have equal degree; grevlex looks at the last variable.
  const Monomial a({1, 0, 2}), b({0, 3, 0});
  EXPECT_TRUE(MonomialOrder::Grevlex().Greater(b, a));
  EXPECT_TRUE(MonomialOrder::Lex().Greater(a, b));
  EXPECT_TRUE(MonomialOrder::Lex().Greater(Monomial({1, 0, 0}), Monomial({0, 5, 5})));
}

TEST(PolyText, Canonical) {
  const Polynomial x1 = X(2, 0), x2 = X(2, 1);
  const Polynomial f = (x1 * x1 * x2).Scaled(Scalar::FromInt(kQ, 3)) - C(2, 1).Scaled(Scalar::Parse(kQ, "1/2"));
  EXPECT_EQ(f.ToString(), "3*x1^2*x2 - 1/2");
  EXPECT_EQ(Polynomial(kQ, 2).ToString(), "0");
}

TEST(ExactQuotient, DividesOrNot) {
  const Polynomial x = X(2, 0), y = X(2, 1);
  const auto q = ExactQuotient(x * x - y * y, x + y);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, x - y);
  EXPECT_FALSE(ExactQuotient(x * x + y, x).has_value());
}

TEST(PolyProperties, RingAxioms) {
  std::mt19937_64 rng(2024);
  for (Field f : {kQ, Field::Prime(5)}) {
    for (int i = 0; i < 300; ++i) {
      const Polynomial a = RandomPolynomial(f, 3, 4, 3, rng);
      const Polynomial b = RandomPolynomial(f, 3, 4, 3, rng);
      const Polynomial c = RandomPolynomial(f, 3, 4, 3, rng);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_TRUE((a - a).is_zero());
    }
  }
}

TEST(PolyProperties, LeadingTermMultiplicative) {
  std::mt19937_64 rng(7);
  for (const MonomialOrder& order : {MonomialOrder::Grevlex(), MonomialOrder::Lex()}) {
    for (int i = 0; i < 300; ++i) {
      const Polynomial a = RandomPolynomial(kQ, 3, 4, 3, rng);
      const Polynomial b = RandomPolynomial(kQ, 3, 4, 3, rng);
      if (a.is_zero() || b.is_zero()) continue;
      const Term ta = LeadingTerm(a, order), tb = LeadingTerm(b, order);
      const Term tab = LeadingTerm(a * b, order);
      ASSERT_EQ(tab.monomial, ta.monomial * tb.monomial);
      ASSERT_EQ(tab.coefficient, ta.coefficient * tb.coefficient);
    }
  }
}

TEST(PolyProperties, Derivative) {
  const Polynomial x = X(2, 0), y = X(2, 1);
  EXPECT_EQ((x * x * y).Derivative(0), (x * y).Scaled(Scalar::FromInt(kQ, 2)));
  EXPECT_TRUE(C(2, 4).Derivative(1).is_zero());
}

}  // namespace
}  // namespace superkrull
