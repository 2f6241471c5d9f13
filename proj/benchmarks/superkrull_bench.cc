#include <vector>

#include <benchmark/benchmark.h>

#include "superkrull/groebner.h"
#include "superkrull/kaehler.h"
#include "superkrull/ksdim.h"
#include "superkrull/onerel.h"
#include "superkrull/oracle.h"
#include "superkrull/parser.h"
#include "superkrull/regular.h"

namespace {

using namespace superkrull;

// Disjoint triples y1y2y3 + y4y5y6 + ... in s = 3k odd variables.
SuperPresentation Triples(std::size_t k) {
  std::string text = "field Q\neven\nodd";
  for (std::size_t i = 1; i <= 3 * k; ++i) text += " y" + std::to_string(i);
  text += "\nrelations:\n";
  for (std::size_t t = 0; t < k; ++t) {
    if (t) text += " + ";
    text += "y" + std::to_string(3 * t + 1) + "*y" + std::to_string(3 * t + 2) + "*y" +
            std::to_string(3 * t + 3);
  }
  return ParsePresentation(text + "\n");
}

const char* kCyclic =
    "field Q\neven a b c\nodd\nrelations:\na + b + c\na*b + b*c + c*a\na*b*c - 1\n";

void BM_BuchbergerCyclic3(benchmark::State& state) {
  const SuperPresentation p = ParsePresentation(kCyclic);
  const std::vector<Polynomial> gens = p.EvenReduction();
  const MonomialOrder order = state.range(0) ? MonomialOrder::Lex() : MonomialOrder::Grevlex();
  for (auto _ : state) benchmark::DoNotOptimize(Buchberger(gens, order));
}
BENCHMARK(BM_BuchbergerCyclic3)->Arg(0)->Arg(1);

void BM_ModuleBuchbergerTriples(benchmark::State& state) {
  const SuperPresentation p = Triples(static_cast<std::size_t>(state.range(0)));
  const std::vector<ModuleVector> gens = p.ModuleGenerators();
  for (auto _ : state) benchmark::DoNotOptimize(ModuleBuchberger(p.field(), 0, gens));
}
BENCHMARK(BM_ModuleBuchbergerTriples)->Arg(2)->Arg(3);

void BM_OracleOddDimTriples(benchmark::State& state) {
  const SuperPresentation p = Triples(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(OracleOddDim(p));
}
BENCHMARK(BM_OracleOddDimTriples)->Arg(2)->Arg(3)->Arg(4);

void BM_KsdimOddDimensionGrowsUnderQuotient(benchmark::State& state) {
  const SuperPresentation p = ParsePresentation(
      "field Q\neven x1 x2\nodd y1 y2 y3\nrelations:\nx1*y1\nx1*y1*y2\nx1*y1*y3\nx1*y1*y2*y3\n");
  for (auto _ : state) benchmark::DoNotOptimize(Ksdim(p));
}
BENCHMARK(BM_KsdimOddDimensionGrowsUnderQuotient);

void BM_KsdimPolynomialCoefficients(benchmark::State& state) {
  const SuperPresentation p = ParsePresentation(
      "field Q\neven x1 x2\nodd y1 y2 y3 y4 y5\nrelations:\n"
      "x1*y1*y2 + x2^2*y3*y4\n(x1 - x2)*y2*y5 + y1*y3\nx2*y1*y4*y5\n");
  for (auto _ : state) benchmark::DoNotOptimize(Ksdim(p));
}
BENCHMARK(BM_KsdimPolynomialCoefficients);

void BM_RegularitySquareZeroIsSingular(benchmark::State& state) {
  const SuperPresentation p = ParsePresentation("field Q\neven x\nodd y1 y2\nrelations:\ny1*y2\n");
  for (auto _ : state) {
    benchmark::DoNotOptimize(IsRegularGlobal(p));
    benchmark::DoNotOptimize(RegularityViaOmega(p));
  }
}
BENCHMARK(BM_RegularitySquareZeroIsSingular);

void BM_BasementExperiment(benchmark::State& state) {
  const std::vector<OddMonomial> basement = {OddMonomial::FromIndices({1, 2, 3}),
                                             OddMonomial::FromIndices({3, 4, 5}),
                                             OddMonomial::FromIndices({5, 6, 1})};
  for (auto _ : state) benchmark::DoNotOptimize(BasementExperiment(basement, 7, 20, 1));
}
BENCHMARK(BM_BasementExperiment);

}  // namespace

BENCHMARK_MAIN();
