#include <random>

#include <gtest/gtest.h>

#include "superkrull/errors.h"
#include "superkrull/regular.h"
#include "test_util.h"

namespace superkrull {
namespace {

using testing::Parse;

constexpr const char* kFree = "field Q\neven x\nodd y1 y2\n";
constexpr const char* kSquareZero = "field Q\neven x\nodd y1 y2\nrelations:\ny1*y2\n";
constexpr const char* kTorsion = "field Q\neven x\nodd y1\nrelations:\nx*y1\n";

TEST(IaModIa2, Examples) {
  const FreenessCertificate free = IaModIa2Freeness(Parse(kFree));
  EXPECT_TRUE(free.free);
  EXPECT_EQ(free.rank, 2u);
  const FreenessCertificate sq = IaModIa2Freeness(Parse(kSquareZero));
  EXPECT_TRUE(sq.free);
  EXPECT_EQ(sq.rank, 2u);
  const FreenessCertificate tor = IaModIa2Freeness(Parse(kTorsion));
  EXPECT_FALSE(tor.free);
  EXPECT_EQ(tor.rank, 0u);
  ASSERT_EQ(tor.fitting_ideal.basis.size(), 1u);
  EXPECT_EQ(tor.fitting_ideal.basis[0], Polynomial::Variable(Field::Rationals(), 1, 0));
  EXPECT_EQ(IaModIa2(Parse(kTorsion)).generators.size(), 1u);
}

TEST(IaModIa2, NonzeroEvenReduction) {
  const GradedPiecePresentation g = IaModIa2(Parse("field Q\neven x\nodd y1\nrelations:\nx\n"));
  EXPECT_EQ(g.generators.size(), 1u);
  EXPECT_FALSE(g.relations.basis.empty());
  EXPECT_THROW(IaModIa2Freeness(Parse("field Q\neven x\nodd y1\nrelations:\nx\n")), ScopeError);
}

TEST(LambdaCheck, Examples) {
  for (std::size_t d = 1; d <= 2; ++d) EXPECT_TRUE(LambdaCheck(Parse(kFree), d));
  EXPECT_FALSE(LambdaCheck(Parse(kSquareZero), 2));
  EXPECT_TRUE(LambdaCheck(Parse("field Q\neven x\nodd y1\n"), 1));
  EXPECT_THROW(LambdaCheck(Parse(kTorsion), 1), ScopeError);
}

TEST(IsRegularGlobal, Examples) {
  EXPECT_EQ(IsRegularGlobal(Parse(kFree)).verdict, Verdict::kRegular);
  const RegularityVerdict sq = IsRegularGlobal(Parse(kSquareZero));
  EXPECT_EQ(sq.verdict, Verdict::kNotRegular);
  EXPECT_EQ(sq.failed_clause, FailedClause::kLambda);
  EXPECT_EQ(sq.failed_degree, 2u);
  const RegularityVerdict tor = IsRegularGlobal(Parse(kTorsion));
  EXPECT_EQ(tor.verdict, Verdict::kNotRegular);
  EXPECT_EQ(tor.failed_clause, FailedClause::kFreeness);
  EXPECT_FALSE(tor.certificate.empty());
}

TEST(IsRegularGlobal, OutOfScope) {
  // Regularity of K[X]/J̄ is only decided for J̄ = 0.
  const RegularityVerdict v = IsRegularGlobal(Parse("field Q\neven x\nodd y1\nrelations:\nx^2\n"));
  EXPECT_EQ(v.verdict, Verdict::kUnknownOutOfScope);
}

TEST(IsRegularGlobal, OddRegularSequenceQuotient) {
  const SuperPresentation p = Parse("field Q\neven x1 x2\nodd y1 y2 y3\nrelations:\ny1\ny3\n");
  EXPECT_EQ(IsRegularGlobal(p).verdict, Verdict::kRegular);
}

TEST(GenericNonsingular, Examples) {
  EXPECT_TRUE(GenericNonsingular(Parse(kFree)));
  EXPECT_FALSE(GenericNonsingular(Parse(kSquareZero)));
  EXPECT_TRUE(GenericNonsingular(Parse("field Q\neven x\nodd y1 y2\nrelations:\ny1\n")));
  EXPECT_EQ(GenericMinimalOddGenerators(Parse("field Q\neven x\nodd y1 y2\nrelations:\ny1\n")),
            (std::vector<std::size_t>{2}));
}

TEST(RegularProperties, LambdaPathsAgree) {
  std::mt19937_64 rng(61);
  int compared = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const SuperPresentation p = testing::RandomGenericPresentation(rng);
    if (!IaModIa2Freeness(p).free) continue;
    for (std::size_t d = 1; d <= p.n(); ++d) {
      ASSERT_EQ(LambdaCheck(p, d), LambdaCheckByRank(p, d)) << p.ToString() << " d=" << d;
      ++compared;
    }
  }
  EXPECT_GT(compared, 50);
}

TEST(RegularProperties, RegularImpliesGenericallyNonsingular) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 150; ++trial) {
    const SuperPresentation p = testing::RandomGenericPresentation(rng);
    if (IsRegularGlobal(p).verdict == Verdict::kRegular) {
      ASSERT_TRUE(GenericNonsingular(p)) << p.ToString();
    }
  }
}

TEST(RegularProperties, GradedPieceIsGeneratedByWedges) {
  const SuperPresentation p = Parse(kSquareZero);
  const GradedPiecePresentation g2 = GradedPiece(p, 2);
  ASSERT_EQ(g2.generators.size(), 1u);
  // y1*y2 = 0 in A, so the degree-2 piece is zero.
  EXPECT_TRUE(ModuleMembership(ModuleVector::Unit(p.field(), 1, g2.generators[0]), g2.relations));
}

}  // namespace
}  // namespace superkrull
