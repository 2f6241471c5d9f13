#ifndef SUPERKRULL_ONEREL_H_
#define SUPERKRULL_ONEREL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superkrull/superpoly.h"

namespace superkrull {

// One-relation quotients B = K[X|Y]/Af with f != 0 and no y-free term. For
// homogeneous f the left ideal Af is the super-ideal (f); mixed f is accepted
// and handled through Af. Throughout, s is the number of odd variables of f's
// ring.

// Supports L with c_L != 0, sorted lexicographically on index lists.
std::vector<OddMonomial> ExponentSet(const SuperPolynomial& f);
// Inclusion-minimal elements of ExponentSet(f), sorted the same way.
std::vector<OddMonomial> Basement(const SuperPolynomial& f);
// Lexicographically first minimum hitting set of a nonempty basement and
// its size, the index of f.
std::pair<OddMonomial, std::size_t> ExtremalSetAndIndex(
    std::span<const OddMonomial> basement);
// (s - index, s - 1).
std::pair<long, long> OddDimBounds(const SuperPolynomial& f, std::size_t s);
// Closed form for basements of size one or two; nullopt otherwise.
std::optional<std::size_t> OddDimExactSmallT(const SuperPolynomial& f, std::size_t s);
// max{|L| : y^L not in (f)} over K(X), by exact elimination.
std::size_t OneRelOddDim(const SuperPolynomial& f, std::size_t s);
// Same with each coefficient c_L(x) replaced by its value at a seeded random
// point; points where some c_L vanishes are redrawn. Fast but only
// correct with high probability when coefficients are not constant.
std::size_t OneRelOddDimScalarized(const SuperPolynomial& f, std::size_t s,
                                   std::uint64_t seed);
// Form of f reduced in basement element `index`: y^{L_i} + h with Af = Ag.
// Requires c_{L_i} to be a nonzero constant.
SuperPolynomial ReducedForm(const SuperPolynomial& f, std::size_t index);

enum class OneRelMethod { kSmallTFormula, kOracle, kBoundsOnly };
std::string ToString(OneRelMethod method);

struct OneRelReport {
  std::vector<OddMonomial> exponents;
  std::vector<OddMonomial> basement;
  OddMonomial extremal_set;
  std::size_t index = 0;
  long lower_bound = 0;
  long upper_bound = 0;
  std::optional<std::size_t> exact_odd_dim;
  OneRelMethod method = OneRelMethod::kBoundsOnly;
};

// Exact value by the closed form when it applies, by the oracle when
// s <= oracle_cap, and bounds alone otherwise.
OneRelReport AnalyzeOneRelation(const SuperPolynomial& f, std::size_t s,
                                std::size_t oracle_cap = 14);

struct ExperimentTrial {
  std::uint64_t seed = 0;
  SuperPolynomial relation;
  std::size_t odd_dim = 0;
};

struct ExperimentReport {
  std::vector<OddMonomial> basement;
  std::size_t s = 0;
  std::uint64_t seed = 0;
  std::vector<ExperimentTrial> trials;
  // Distinct odd dimensions seen, ascending. Two or more values answer the
  // determination question negatively for this basement.
  std::vector<std::size_t> observed;
};

// Samples `trials` relations over Q with the given basement: random nonzero
// coefficients on the basement plus random supersets, of the basement's
// parity when it has one. Fully determined by `seed`. Throws ArgumentError
// unless the basement is a nonempty antichain of subsets of {1..s}.
ExperimentReport BasementExperiment(std::span<const OddMonomial> basement, std::size_t s,
                                    std::size_t trials, std::uint64_t seed);

}  // namespace superkrull

#endif  // SUPERKRULL_ONEREL_H_
