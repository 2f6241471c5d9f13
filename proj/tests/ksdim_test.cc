#include <random>

#include <gtest/gtest.h>

#include "superkrull/errors.h"
#include "superkrull/ksdim.h"
#include "superkrull/oracle.h"
#include "superkrull/parser.h"
#include "test_util.h"

namespace superkrull {
namespace {

using testing::Parse;

OddMonomial Odd(std::initializer_list<std::size_t> i) { return OddMonomial::FromIndices(i); }

constexpr const char* kFree = "field Q\neven x1 x2\nodd y1 y2 y3\n";
constexpr const char* kX1KillsY1 =
    "field Q\neven x1 x2\nodd y1 y2 y3\nrelations:\n"
    "x1*y1\nx1*y1*y2\nx1*y1*y3\nx1*y1*y2*y3\n";
constexpr const char* kX1KillsY1Small = "field Q\neven x1\nodd y1 y2\nrelations:\nx1*y1\nx1*y1*y2\n";
constexpr const char* kSquareZero = "field Q\neven x\nodd y1 y2\nrelations:\ny1*y2\n";

TEST(EvenDim, Examples) {
  EXPECT_EQ(EvenDim(Parse("field Q\neven x1 x2\nodd y1\n")), 2u);
  EXPECT_EQ(EvenDim(Parse(kX1KillsY1)), 2u);
  EXPECT_EQ(EvenDim(Parse("field Q\neven x\nodd y1\nrelations:\nx\n")), 0u);
  EXPECT_THROW(EvenDim(Parse("field Q\neven x\nodd y1\nrelations:\n1\n")), ZeroAlgebraError);
}

TEST(IsOddParameterSystem, Examples) {
  EXPECT_TRUE(IsOddParameterSystem(Parse("field Q\neven x\nodd y1\n"), Odd({1})));
  EXPECT_FALSE(IsOddParameterSystem(Parse("field Q\neven x1\nodd y1\nrelations:\nx1*y1\n"), Odd({1})));
  EXPECT_TRUE(IsOddParameterSystem(Parse(kX1KillsY1Small), Odd({2})));
  EXPECT_TRUE(IsOddParameterSystem(Parse(kFree), OddMonomial()));
}

TEST(OddDim, Examples) {
  EXPECT_EQ(OddDim(Parse(kFree)), std::make_pair(std::size_t{3}, Odd({1, 2, 3})));
  EXPECT_EQ(OddDim(Parse(kX1KillsY1)), std::make_pair(std::size_t{2}, Odd({2, 3})));
  EXPECT_EQ(OddDim(Parse("field Q\neven x2\nodd y1 y2 y3\n")),
            std::make_pair(std::size_t{3}, Odd({1, 2, 3})));
}

TEST(Ksdim, Examples) {
  EXPECT_EQ(Ksdim(Parse(kFree)).ToString(), "2|3");
  EXPECT_EQ(Ksdim(Parse(kX1KillsY1)).ToString(), "2|2");
  const SuperDim d = Ksdim(Parse(kSquareZero));
  EXPECT_EQ(d.ToString(), "1|1");
  EXPECT_EQ(d.witness, Odd({1}));
}

TEST(Ksdim, OrderDoesNotMatter) {
  for (const char* text : {kFree, kX1KillsY1, kSquareZero}) {
    KsdimSolver lex(Parse(text), MonomialOrder::Lex());
    EXPECT_EQ(lex.Ksdim(), Ksdim(Parse(text)));
  }
}

TEST(VerifyNoetherWitness, Examples) {
  EXPECT_TRUE(VerifyNoetherWitness(Parse(kFree), Odd({1, 2, 3})));
  EXPECT_TRUE(VerifyNoetherWitness(Parse(kX1KillsY1Small), Odd({2})));
  EXPECT_FALSE(VerifyNoetherWitness(Parse(kX1KillsY1Small), Odd({1})));
  EXPECT_THROW(VerifyNoetherWitness(Parse("field Q\neven x\nodd y1\nrelations:\nx\n"), Odd({1})),
               ScopeError);
}

TEST(QuotientPresentation, Examples) {
  const SuperPresentation free = Parse("field Q\neven x\nodd y1 y2\n");
  const std::vector<SuperPolynomial> y1 = {free.Y(1)};
  const SuperPresentation q = QuotientPresentation(free, y1);
  EXPECT_EQ(q.relations().size(), 1u);
  EXPECT_EQ(Ksdim(q).ToString(), "1|1");

  const std::vector<SuperPolynomial> zero = {free.Zero()};
  EXPECT_THROW(QuotientPresentation(free, zero), ArgumentError);

  const SuperPresentation a = Parse(kX1KillsY1);
  const std::vector<SuperPolynomial> x1 = {a.X(1)};
  const SuperPresentation c = QuotientPresentation(a, x1);
  EXPECT_EQ(Ksdim(c).ToString(), "1|3");
  EXPECT_GT(Ksdim(c).odd, Ksdim(a).odd);
}

TEST(SupermoduleSdim, Examples) {
  const SuperPresentation a = Parse(kX1KillsY1);
  EXPECT_EQ(SupermoduleSdim(a, {}), Ksdim(a));
  std::vector<SuperPolynomial> ys;
  for (std::size_t j = 1; j <= a.n(); ++j) ys.push_back(a.Y(j));
  EXPECT_EQ(SupermoduleSdim(a, ys).ToString(), "2|0");
  const SuperPresentation p = Parse("field Q\neven x\nodd y1\n");
  const std::vector<SuperPolynomial> x = {p.X(1)};
  EXPECT_EQ(SupermoduleSdim(p, x).ToString(), "0|1");
}

TEST(KsdimProperties, DecreasingByOddGenerators) {
  const SuperPresentation free = Parse("field Q\neven x1 x2\nodd y1 y2 y3 y4\n");
  std::vector<SuperPolynomial> extra;
  for (std::size_t t = 0; t <= 4; ++t) {
    const SuperPresentation q = QuotientPresentation(free, extra);
    EXPECT_EQ(Ksdim(q).ToString(), "2|" + std::to_string(4 - t));
    if (t < 4) extra.push_back(free.Y(t + 1));
  }
}

TEST(KsdimProperties, PruningIsMonotoneAndMatchesOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const SuperPresentation p = testing::RandomGenericPresentation(rng);
    KsdimSolver solver(p);
    const std::uint32_t full = (1u << p.n()) - 1;
    for (std::uint32_t a = 0; a <= full; ++a) {
      if (solver.IsOddParameterSystem(OddMonomial(a))) continue;
      for (std::uint32_t b = a; b <= full; ++b) {
        if ((a & b) == a) {
          ASSERT_FALSE(solver.IsOddParameterSystem(OddMonomial(b)));
        }
      }
    }
    ASSERT_EQ(solver.OddDim().first, OracleOddDim(p)) << p.ToString();
  }
}

}  // namespace
}  // namespace superkrull
