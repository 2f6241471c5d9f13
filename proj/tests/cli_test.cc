#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "superkrull/errors.h"
#include "superkrull/parser.h"
#include "superkrull/report.h"
#include "test_util.h"

namespace superkrull {
namespace {

std::string ReadData(const std::string& name) {
  std::ifstream in(std::string(SUPERKRULL_DATA_DIR) + "/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

template <typename Fn>
ParseError CaptureParseError(Fn fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError thrown";
  return ParseError("none", 0, 0);
}

TEST(ParsePresentation, Examples) {
  const SuperPresentation p = ParsePresentation("field Q\neven x1\nodd y1 y2\nrelations:\n x1*y1");
  EXPECT_EQ(p.m(), 1u);
  EXPECT_EQ(p.n(), 2u);
  ASSERT_EQ(p.relations().size(), 1u);

  const SuperPresentation q = ParsePresentation("field Q\neven\nodd y1 y2\nrelations:\ny2*y1\n");
  EXPECT_EQ(q.relations()[0], -SuperMul(q.Y(1), q.Y(2)));
  EXPECT_EQ(q.Format(q.relations()[0]), "-y1*y2");

  const ParseError e = CaptureParseError(
      [] { ParsePresentation("field Q\neven x1\nodd y1\nrelations:\nx1 + y1\n"); });
  EXPECT_EQ(e.line(), 5u);
  EXPECT_NE(std::string(e.what()).find("inhomogeneous"), std::string::npos);
}

TEST(ParsePresentation, Errors) {
  const ParseError unknown = CaptureParseError(
      [] { ParsePresentation("field Q\neven x\nodd y1\nrelations:\nx*z1\n"); });
  EXPECT_EQ(unknown.line(), 5u);
  EXPECT_EQ(unknown.column(), 3u);

  const ParseError modulus = CaptureParseError([] { ParsePresentation("field GF(9)\neven x\nodd y\n"); });
  EXPECT_EQ(modulus.line(), 1u);

  const ParseError syntax = CaptureParseError(
      [] { ParsePresentation("# header\nfield Q\neven x\nodd y1\nrelations:\nx*(y1\n"); });
  EXPECT_EQ(syntax.line(), 6u);

  EXPECT_THROW(ParsePresentation("field Q\neven x\nodd y1\nrelations:\ny1 - y1\n"), ParseError);
  EXPECT_THROW(ParsePresentation("even x\nodd y1\n"), ParseError);
  EXPECT_THROW(ParsePresentation("field Q\neven x\nodd x\n"), ParseError);
}

TEST(ParsePresentation, OddSquaresVanishAndFieldsParse) {
  const SuperPresentation p =
      ParsePresentation("field GF(5)\neven a b\nodd u v\nrelations:\n(u + v)^2 + u*v*a^2 # comment\n3/2*u\n");
  EXPECT_EQ(p.field().characteristic(), 5u);
  EXPECT_EQ(p.Format(p.relations()[0]), "a^2*u*v");
  EXPECT_EQ(p.Format(p.relations()[1]), "4*u");
}

TEST(ParsePresentation, RoundTrip) {
  std::mt19937_64 rng(3030);
  for (int i = 0; i < 300; ++i) {
    const SuperPresentation p = testing::RandomGenericPresentation(rng);
    const std::string text = p.ToString();
    const SuperPresentation q = ParsePresentation(text);
    ASSERT_EQ(q.ToString(), text);
    ASSERT_EQ(q.relations(), p.relations());
  }
  for (const char* name : {"free.sk", "x1_kills_y1.sk", "disjoint_triples.sk", "torsion.sk"}) {
    const SuperPresentation p = ParsePresentation(ReadData(name));
    EXPECT_EQ(ParsePresentation(p.ToString()).ToString(), p.ToString());
  }
}

TEST(RunCommand, KsdimOnFreeAlgebra) {
  const CommandReport r = RunCommand("ksdim", ParsePresentation(ReadData("free.sk")));
  EXPECT_EQ(r.result["even"], 2);
  EXPECT_EQ(r.result["odd"], 3);
  EXPECT_EQ(r.result["witness"], nlohmann::json::array({1, 2, 3}));
  EXPECT_EQ(r.input_digest.size(), 16u);
}

TEST(RunCommand, OneRel) {
  const CommandReport r = RunCommand("onerel", ParsePresentation(ReadData("two_term.sk")));
  EXPECT_EQ(r.result["index"], 1);
  EXPECT_EQ(r.result["exact"], 2);
  EXPECT_THROW(RunCommand("onerel", ParsePresentation(ReadData("free.sk"))), ArgumentError);
}

TEST(RunCommand, Regular) {
  const CommandReport r = RunCommand("regular", ParsePresentation(ReadData("square_zero.sk")));
  EXPECT_EQ(r.result["verdict"], "not_regular");
  EXPECT_EQ(r.result["failed_clause"], "iii");
}

TEST(RunCommand, ScopeErrorsSurfaceVerbatim) {
  const SuperPresentation p = ParsePresentation("field Q\neven x\nodd y1\nrelations:\nx\n");
  try {
    RunCommand("oracle", p);
    FAIL() << "expected ScopeError";
  } catch (const ScopeError& e) {
    EXPECT_NE(std::string(e.what()).find("J̄ ≠ 0: generic-point operations unavailable"),
              std::string::npos);
  }
  EXPECT_THROW(RunCommand("bogus", p), ArgumentError);
}

TEST(RunCommand, DeterministicApartFromTiming) {
  const SuperPresentation p = ParsePresentation(ReadData("two_term.sk"));
  CommandOptions options;
  options.seed = 12;
  options.trials = 20;
  for (const std::string& command : Commands()) {
    nlohmann::json a = RunCommand(command, p, options).ToJson();
    nlohmann::json b = RunCommand(command, p, options).ToJson();
    a.erase("timing");
    b.erase("timing");
    EXPECT_EQ(a.dump(), b.dump()) << command;
  }
}

TEST(InputDigest, DependsOnCanonicalText) {
  const SuperPresentation a = ParsePresentation("field Q\neven x\nodd y1 y2\nrelations:\ny2*y1\n");
  const SuperPresentation b = ParsePresentation("field Q\neven x\nodd y1 y2\nrelations:\n-y1*y2 # same\n");
  const SuperPresentation c = ParsePresentation("field Q\neven x\nodd y1 y2\nrelations:\ny1*y2\n");
  EXPECT_EQ(InputDigest(a), InputDigest(b));
  EXPECT_NE(InputDigest(a), InputDigest(c));
}

}  // namespace
}  // namespace superkrull
