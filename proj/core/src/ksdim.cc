#include "superkrull/ksdim.h"

#include <algorithm>

#include "superkrull/errors.h"

namespace superkrull {
namespace {

// Calls visit on each k-subset of `pool` (sorted ascending) in lexicographic
// order until visit returns true.
template <typename Visit>
bool ForEachCombination(const std::vector<std::size_t>& pool, std::size_t k, Visit visit) {
  if (k > pool.size()) return false;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    std::uint32_t mask = 0;
    for (std::size_t i : pick) mask |= 1u << (pool[i] - 1);
    if (visit(OddMonomial(mask))) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

KsdimSolver::KsdimSolver(SuperPresentation presentation, MonomialOrder order)
    : p_(std::move(presentation)), order_(std::move(order)) {}

const ModuleBasis& KsdimSolver::relation_module() {
  if (!module_) {
    module_ = ModuleBuchberger(p_.field(), p_.m(), p_.ModuleGenerators(),
                               ModuleOrder::TermOverPosition(order_));
  }
  return *module_;
}

std::size_t KsdimSolver::EvenDim() {
  if (!even_) {
    const IdealBasis& bar = Contraction(OddMonomial());
    const std::optional<std::size_t> d = IdealDimension(bar);
    if (!d) throw ZeroAlgebraError();
    even_ = *d;
  }
  return *even_;
}

const IdealBasis& KsdimSolver::Contraction(OddMonomial odd) {
  auto it = contractions_.find(odd);
  if (it == contractions_.end()) {
    if (odd.empty()) {
      // J ∩ K[X] e_∅ is J̄: the y-free part of each relation closure.
      it = contractions_.emplace(odd, Buchberger(p_.field(), p_.m(), p_.EvenReduction(),
                                                 order_)).first;
    } else {
      it = contractions_.emplace(odd, ContractionIdeal(relation_module(), odd)).first;
    }
  }
  return it->second;
}

bool KsdimSolver::IsOddParameterSystem(OddMonomial odd) {
  if (odd.mask() >> p_.n()) throw ArgumentError("odd index out of range");
  const std::size_t r = EvenDim();
  const std::optional<std::size_t> d = IdealDimension(Contraction(odd));
  return d && *d == r;
}

std::pair<std::size_t, OddMonomial> KsdimSolver::OddDim() {
  EvenDim();
  // A failing singleton rules out every set containing it.
  std::vector<std::size_t> pool;
  for (std::size_t i = 1; i <= p_.n(); ++i) {
    if (IsOddParameterSystem(OddMonomial(1u << (i - 1)))) pool.push_back(i);
  }
  for (std::size_t k = pool.size(); k >= 2; --k) {
    OddMonomial found;
    if (ForEachCombination(pool, k, [&](OddMonomial odd) {
          if (!IsOddParameterSystem(odd)) return false;
          found = odd;
          return true;
        })) {
      return {k, found};
    }
  }
  if (!pool.empty()) return {1, OddMonomial(1u << (pool.front() - 1))};
  return {0, OddMonomial()};
}

SuperDim KsdimSolver::Ksdim() {
  const std::size_t r = EvenDim();
  const auto [s, witness] = OddDim();
  return SuperDim{r, s, witness};
}

std::size_t EvenDim(const SuperPresentation& p) { return KsdimSolver(p).EvenDim(); }

bool IsOddParameterSystem(const SuperPresentation& p, OddMonomial odd) {
  return KsdimSolver(p).IsOddParameterSystem(odd);
}

std::pair<std::size_t, OddMonomial> OddDim(const SuperPresentation& p) {
  return KsdimSolver(p).OddDim();
}

SuperDim Ksdim(const SuperPresentation& p) { return KsdimSolver(p).Ksdim(); }

bool VerifyNoetherWitness(const SuperPresentation& p, OddMonomial odd) {
  if (!p.EvenReductionIsZero()) {
    throw ScopeError("J̄ ≠ 0: the witness check needs K[X] to embed into A");
  }
  if (odd.mask() >> p.n()) throw ArgumentError("odd index out of range");
  KsdimSolver solver(p);
  // q is monotone: q_{I'} ⊆ q_I for I' ⊆ I, so checking I suffices.
  return solver.Contraction(odd).is_zero();
}

SuperPresentation QuotientPresentation(const SuperPresentation& p,
                                       std::span<const SuperPolynomial> extra) {
  std::vector<SuperPolynomial> relations = p.relations();
  for (const SuperPolynomial& f : extra) {
    CheckRelation(p, f);
    relations.push_back(f);
  }
  return SuperPresentation(p.field(), p.even_names(), p.odd_names(), std::move(relations));
}

SuperDim SupermoduleSdim(const SuperPresentation& p,
                         std::span<const SuperPolynomial> ann_gens) {
  return Ksdim(QuotientPresentation(p, ann_gens));
}

}  // namespace superkrull
