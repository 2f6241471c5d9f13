#include <random>

#include <gtest/gtest.h>

#include "superkrull/errors.h"
#include "superkrull/parser.h"
#include "superkrull/superpoly.h"
#include "test_util.h"

namespace superkrull {
namespace {

const Field kQ = Field::Rationals();

class SuperpolyTest : public ::testing::Test {
 protected:
  // K[x1,x2 | y1..y4]
  SuperPresentation ring_{kQ, 2, 4};
  SuperPolynomial P(const char* text) const { return ParseSuperPolynomial(ring_, text); }
};

TEST_F(SuperpolyTest, KoszulProducts) {
  EXPECT_TRUE(SuperMul(P("y1"), P("y1")).is_zero());
  EXPECT_EQ(SuperMul(P("y2"), P("y1")), P("-y1*y2"));
  EXPECT_EQ(SuperMul(P("y3*y4"), P("y1*y2")), P("y1*y2*y3*y4"));
  EXPECT_EQ(KoszulSign(OddMonomial::FromIndices({2, 3}), OddMonomial::FromIndices({1})), 1);
  EXPECT_EQ(KoszulSign(OddMonomial::FromIndices({2}), OddMonomial::FromIndices({1})), -1);
  EXPECT_EQ(KoszulSign(OddMonomial::FromIndices({1}), OddMonomial::FromIndices({1, 2})), 0);
}

TEST_F(SuperpolyTest, Parity) {
  EXPECT_EQ(ParityOf(P("x1*y1*y2")), Parity::kEven);
  EXPECT_EQ(ParityOf(P("y1 + y1*y2*y3")), Parity::kOdd);
  EXPECT_EQ(ParityOf(P("x1 + y1")), Parity::kMixed);
  EXPECT_EQ(ParityOf(ring_.Zero()), Parity::kZero);
}

TEST_F(SuperpolyTest, Bar) {
  const Polynomial x1 = Polynomial::Variable(kQ, 2, 0);
  EXPECT_EQ(Bar(P("x1^2 + x1*y1*y2")), x1 * x1);
  EXPECT_TRUE(Bar(P("y1*y2")).is_zero());
  EXPECT_EQ(Bar(P("3")), Polynomial::Constant(kQ, 2, 3));
}

TEST_F(SuperpolyTest, ToVector) {
  const ModuleVector v = ToVector(P("x1*y1 + y2"));
  EXPECT_EQ(v.coordinates().size(), 2u);
  EXPECT_EQ(v.At(OddMonomial::FromIndices({1})), Polynomial::Variable(kQ, 2, 0));
  EXPECT_EQ(v.At(OddMonomial::FromIndices({2})), Polynomial::Constant(kQ, 2, 1));
  EXPECT_TRUE(ToVector(ring_.Zero()).is_zero());
  const ModuleVector w = ToVector(P("x1^2*y1*y2"));
  EXPECT_EQ(w.coordinates().size(), 1u);
  const Polynomial x1 = Polynomial::Variable(kQ, 2, 0);
  EXPECT_EQ(w.At(OddMonomial::FromIndices({1, 2})), x1 * x1);
}

TEST(Superpoly, SuperidealModuleGenerators) {
  const SuperPresentation ring(kQ, 0, 2);
  const std::vector<SuperPolynomial> y1 = {ring.Y(1)};
  const std::vector<ModuleVector> g = SuperidealModuleGenerators(y1);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], ToVector(ring.Y(1)));
  EXPECT_EQ(g[1], ToVector(-ring.YMonomial(OddMonomial::FromIndices({1, 2}))));

  EXPECT_TRUE(SuperidealModuleGenerators(std::span<const SuperPolynomial>{}).empty());

  const std::vector<SuperPolynomial> y12 = {ring.YMonomial(OddMonomial::FromIndices({1, 2}))};
  EXPECT_EQ(SuperidealModuleGenerators(y12).size(), 1u);

  const std::vector<SuperPolynomial> mixed = {ring.Constant(1) + ring.Y(1)};
  EXPECT_THROW(SuperidealModuleGenerators(mixed), ArgumentError);
}

TEST_F(SuperpolyTest, UnitInverse) {
  EXPECT_EQ(UnitInverse(P("1 + y1*y2")), P("1 - y1*y2"));
  EXPECT_EQ(UnitInverse(P("2")), P("1/2"));
  EXPECT_EQ(UnitInverse(P("1 + y1*y2 + y3*y4")), P("1 - y1*y2 - y3*y4 + 2*y1*y2*y3*y4"));
  EXPECT_THROW(UnitInverse(P("y1*y2")), ArgumentError);
  EXPECT_THROW(UnitInverse(P("1 + x1")), ArgumentError);
}

TEST(SuperpolyProperties, AssociativeAndSuperCommutative) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + testing::Below(rng, 6);
    const SuperPolynomial a = testing::RandomSuper(kQ, 2, n, 4, rng);
    const SuperPolynomial b = testing::RandomSuper(kQ, 2, n, 4, rng);
    const SuperPolynomial c = testing::RandomSuper(kQ, 2, n, 4, rng);
    ASSERT_EQ(SuperMul(SuperMul(a, b), c), SuperMul(a, SuperMul(b, c)));
    ASSERT_EQ(SuperMul(a, b + c), SuperMul(a, b) + SuperMul(a, c));

    const int pr = static_cast<int>(testing::Below(rng, 2));
    const int ps = static_cast<int>(testing::Below(rng, 2));
    const SuperPolynomial r = testing::RandomHomogeneous(kQ, 2, n, pr, 4, rng);
    const SuperPolynomial s = testing::RandomHomogeneous(kQ, 2, n, ps, 4, rng);
    const SuperPolynomial sr = SuperMul(s, r);
    ASSERT_EQ(SuperMul(r, s), (pr && ps) ? -sr : sr);
    if (pr == 1) {
      ASSERT_TRUE(SuperMul(r, r).is_zero());
    }
  }
}

TEST(SuperpolyProperties, VectorRoundTripAndLinearity) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const SuperPolynomial f = testing::RandomSuper(kQ, 2, 4, 5, rng);
    const SuperPolynomial g = testing::RandomSuper(kQ, 2, 4, 5, rng);
    const Polynomial a = testing::RandomPolynomial(kQ, 2, 3, 2, rng);
    ASSERT_EQ(SuperPolynomial::FromVector(ToVector(f), 4), f);
    ASSERT_EQ(ToVector(f + g.ScaledBy(a)), ToVector(f) + ToVector(g).Scaled(a));
  }
}

TEST(SuperpolyProperties, UnitInverseIsInverse) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    SuperPolynomial u = testing::RandomHomogeneous(kQ, 2, 5, 0, 5, rng);
    u = u - SuperPolynomial::FromEven(Bar(u), 5) +
        SuperPolynomial::Constant(kQ, 2, 5, 1 + static_cast<long>(testing::Below(rng, 5)));
    ASSERT_EQ(SuperMul(u, UnitInverse(u)), SuperPolynomial::Constant(kQ, 2, 5, 1));
  }
}

TEST(Superpoly, OddMonomialLimits) {
  EXPECT_THROW(OddMonomial::FromIndices({1, 1}), ArgumentError);
  EXPECT_THROW(SuperPolynomial(kQ, 0, kMaxOddVariables + 1), ArgumentError);
  EXPECT_TRUE(LexLess(OddMonomial::FromIndices({1, 3}), OddMonomial::FromIndices({2})));
}

}  // namespace
}  // namespace superkrull
