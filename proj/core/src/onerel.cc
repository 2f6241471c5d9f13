#include "superkrull/onerel.h"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "superkrull/errors.h"
#include "superkrull/oracle.h"

namespace superkrull {
namespace {

constexpr std::size_t kMaxExperimentOdd = 16;

void CheckRelation(const SuperPolynomial& f, std::size_t s) {
  if (f.is_zero()) throw ArgumentError("the relation is zero");
  if (!f.Coefficient(OddMonomial()).is_zero()) {
    throw ArgumentError("the relation has a nonzero y-free term");
  }
  if (s != f.n()) {
    throw ArgumentError("s = " + std::to_string(s) + " but the relation has " +
                        std::to_string(f.n()) + " odd variables");
  }
}

bool LexOrder(OddMonomial a, OddMonomial b) { return LexLess(a, b); }

// Uniform in [0, bound) from a 64-bit engine, without std distributions so
// sequences agree across standard libraries.
std::uint64_t Draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Scalar RandomNonzero(Field field, std::mt19937_64& rng, long range) {
  for (;;) {
    const long v = static_cast<long>(Draw(rng, 2 * range + 1)) - range;
    Scalar c = Scalar::FromInt(field, v);
    if (!c.is_zero()) return c;
  }
}

}  // namespace

std::vector<OddMonomial> ExponentSet(const SuperPolynomial& f) {
  CheckRelation(f, f.n());
  std::vector<OddMonomial> out;
  for (const auto& [odd, c] : f.parts()) out.push_back(odd);
  std::sort(out.begin(), out.end(), LexOrder);
  return out;
}

std::vector<OddMonomial> Basement(const SuperPolynomial& f) {
  const std::vector<OddMonomial> exponents = ExponentSet(f);
  std::vector<OddMonomial> out;
  for (OddMonomial l : exponents) {
    const bool minimal = std::none_of(exponents.begin(), exponents.end(), [&](OddMonomial k) {
      return k != l && k.SubsetOf(l);
    });
    if (minimal) out.push_back(l);
  }
  return out;
}

std::pair<OddMonomial, std::size_t> ExtremalSetAndIndex(
    std::span<const OddMonomial> basement) {
  if (basement.empty()) throw ArgumentError("empty basement");
  OddMonomial all;
  for (OddMonomial l : basement) {
    if (l.empty()) throw ArgumentError("basement contains the empty set");
    all = all | l;
  }
  const std::vector<std::size_t> pool = all.Indices();
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      std::uint32_t mask = 0;
      for (std::size_t i : pick) mask |= 1u << (pool[i] - 1);
      const OddMonomial candidate(mask);
      if (std::all_of(basement.begin(), basement.end(),
                      [&](OddMonomial l) { return l.Meets(candidate); })) {
        return {candidate, k};
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == pool.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw InvariantError("no hitting set found");
}

std::pair<long, long> OddDimBounds(const SuperPolynomial& f, std::size_t s) {
  CheckRelation(f, s);
  const std::vector<OddMonomial> basement = Basement(f);
  const std::size_t index = ExtremalSetAndIndex(basement).second;
  return {static_cast<long>(s) - static_cast<long>(index), static_cast<long>(s) - 1};
}

std::optional<std::size_t> OddDimExactSmallT(const SuperPolynomial& f, std::size_t s) {
  CheckRelation(f, s);
  const std::vector<OddMonomial> b = Basement(f);
  if (b.size() == 1) return s - 1;
  if (b.size() == 2) {
    const bool lower = !b[0].Meets(b[1]) && b[0].size() >= 2 && b[1].size() >= 2;
    return lower ? s - 2 : s - 1;
  }
  return std::nullopt;
}

std::size_t OneRelOddDim(const SuperPolynomial& f, std::size_t s) {
  CheckRelation(f, s);
  const SuperPolynomial gens[] = {f};
  return OracleOddDim(ExteriorSpan(f.field(), f.m(), s, gens, true));
}

std::size_t OneRelOddDimScalarized(const SuperPolynomial& f, std::size_t s,
                                   std::uint64_t seed) {
  CheckRelation(f, s);
  std::mt19937_64 rng(seed);
  const Field field = f.field();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Scalar> point;
    for (std::size_t i = 0; i < f.m(); ++i) {
      const std::uint64_t bound = field.is_rational() ? 2001 : field.characteristic();
      const long shift = field.is_rational() ? 1000 : 0;
      point.push_back(Scalar::FromInt(field, static_cast<long>(Draw(rng, bound)) - shift));
    }
    SuperPolynomial g(field, 0, s);
    bool collision = false;
    for (const auto& [odd, c] : f.parts()) {
      const Scalar v = c.Evaluate(point);
      if (v.is_zero()) {
        collision = true;
        break;
      }
      g.AddTerm(odd, Polynomial::Constant(field, 0, v));
    }
    if (!collision) return OneRelOddDim(g, s);
  }
  throw ScopeError("no evaluation point keeps every coefficient nonzero");
}

SuperPolynomial ReducedForm(const SuperPolynomial& f, std::size_t index) {
  const std::vector<OddMonomial> basement = Basement(f);
  if (index >= basement.size()) throw ArgumentError("basement index out of range");
  const OddMonomial li = basement[index];
  // f = p y^{L_i} + h' where no term of h' contains L_i. Factoring on the
  // right keeps Af = A p^{-1} f when p has odd terms.
  SuperPolynomial p(f.field(), f.m(), f.n());
  for (const auto& [odd, c] : f.parts()) {
    if (!li.SubsetOf(odd)) continue;
    const OddMonomial rest(odd.mask() & ~li.mask());
    p.AddTerm(rest, KoszulSign(rest, li) > 0 ? c : -c);
  }
  const Polynomial lead = Bar(p);
  if (!lead.is_constant()) {
    throw ArgumentError("coefficient of the reducing basement element is not a unit");
  }
  return SuperMul(UnitInverse(p), f);
}

std::string ToString(OneRelMethod method) {
  switch (method) {
    case OneRelMethod::kSmallTFormula:
      return "t<=2-formula";
    case OneRelMethod::kOracle:
      return "oracle";
    case OneRelMethod::kBoundsOnly:
      return "bounds-only";
  }
  return "";
}

OneRelReport AnalyzeOneRelation(const SuperPolynomial& f, std::size_t s,
                                std::size_t oracle_cap) {
  CheckRelation(f, s);
  OneRelReport report;
  report.exponents = ExponentSet(f);
  report.basement = Basement(f);
  std::tie(report.extremal_set, report.index) = ExtremalSetAndIndex(report.basement);
  report.lower_bound = static_cast<long>(s) - static_cast<long>(report.index);
  report.upper_bound = static_cast<long>(s) - 1;
  if (auto exact = OddDimExactSmallT(f, s)) {
    report.exact_odd_dim = exact;
    report.method = OneRelMethod::kSmallTFormula;
  } else if (s <= oracle_cap) {
    report.exact_odd_dim = OneRelOddDim(f, s);
    report.method = OneRelMethod::kOracle;
  } else {
    if (report.lower_bound == report.upper_bound) {
      report.exact_odd_dim = static_cast<std::size_t>(report.lower_bound);
    }
    report.method = OneRelMethod::kBoundsOnly;
  }
  return report;
}

ExperimentReport BasementExperiment(std::span<const OddMonomial> basement, std::size_t s,
                                    std::size_t trials, std::uint64_t seed) {
  if (basement.empty()) throw ArgumentError("empty basement");
  if (s > kMaxExperimentOdd) {
    throw ArgumentError("experiments support at most " +
                        std::to_string(kMaxExperimentOdd) + " odd variables");
  }
  const std::size_t parity = basement.front().size() % 2;
  const bool homogeneous = std::all_of(basement.begin(), basement.end(),
                                       [&](OddMonomial l) { return l.size() % 2 == parity; });
  for (OddMonomial l : basement) {
    if (l.empty() || (l.mask() >> s) != 0) {
      throw ArgumentError("basement element " + l.ToString() + " is not a nonempty subset of {1.." +
                          std::to_string(s) + "}");
    }
    for (OddMonomial k : basement) {
      if (k != l && k.SubsetOf(l)) {
        throw ArgumentError("basement is not an antichain: " + k.ToString() + " ⊂ " +
                            l.ToString());
      }
    }
  }
  std::vector<OddMonomial> sorted(basement.begin(), basement.end());
  std::sort(sorted.begin(), sorted.end(), LexOrder);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("basement lists an element twice");
  }

  // Strict supersets of some basement element, of the common parity when
  // there is one.
  std::vector<OddMonomial> dominated;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << s); ++mask) {
    const OddMonomial l(mask);
    if (homogeneous && l.size() % 2 != parity) continue;
    if (std::any_of(sorted.begin(), sorted.end(),
                    [&](OddMonomial b) { return b != l && b.SubsetOf(l); })) {
      dominated.push_back(l);
    }
  }

  const Field field = Field::Rationals();
  ExperimentReport report{sorted, s, seed, {}, {}};
  std::mt19937_64 master(seed);
  std::set<std::size_t> observed;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = master();
    std::mt19937_64 rng(trial_seed);
    SuperPolynomial f(field, 0, s);
    for (OddMonomial l : sorted) {
      f.AddTerm(l, Polynomial::Constant(field, 0, RandomNonzero(field, rng, 9)));
    }
    const std::size_t extras = dominated.empty() ? 0 : Draw(rng, 4);
    std::set<OddMonomial> used;
    for (std::size_t e = 0; e < extras; ++e) {
      const OddMonomial l = dominated[Draw(rng, dominated.size())];
      if (!used.insert(l).second) continue;
      f.AddTerm(l, Polynomial::Constant(field, 0, RandomNonzero(field, rng, 9)));
    }
    if (Basement(f) != sorted) throw InvariantError("sampled relation changed its basement");
    const std::size_t d = OneRelOddDim(f, s);
    observed.insert(d);
    report.trials.push_back({trial_seed, std::move(f), d});
  }
  report.observed.assign(observed.begin(), observed.end());
  return report;
}

}  // namespace superkrull
