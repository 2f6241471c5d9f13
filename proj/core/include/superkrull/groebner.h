#ifndef SUPERKRULL_GROEBNER_H_
#define SUPERKRULL_GROEBNER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "superkrull/polynomial.h"
#include "superkrull/superpoly.h"

namespace superkrull {

// Reduced Groebner basis of an ideal of K[X]: monic, auto-reduced and sorted
// by leading monomial, largest first.
struct IdealBasis {
  Field field;
  std::size_t nvars = 0;
  MonomialOrder order;
  std::vector<Polynomial> basis;

  bool is_zero() const { return basis.empty(); }
  bool is_unit() const;
  std::vector<std::string> ToStrings(std::span<const std::string> names = {}) const;
};

IdealBasis Buchberger(Field field, std::size_t nvars,
                      std::span<const Polynomial> gens,
                      const MonomialOrder& order = MonomialOrder());
// Field and arity are taken from the first generator; gens must be nonempty.
IdealBasis Buchberger(std::span<const Polynomial> gens,
                      const MonomialOrder& order = MonomialOrder());

Polynomial NormalForm(const Polynomial& f, const IdealBasis& basis);
bool IdealContains(const IdealBasis& basis, const Polynomial& f);

// Krull dimension of K[X]/<basis>, from the largest set of variables that is
// independent modulo the leading-term ideal. nullopt for the unit ideal.
std::optional<std::size_t> IdealDimension(const IdealBasis& basis);

// Order on terms a(x) e_I of the free module with basis {e_I}.
//
// Positions carry a significance rank. The default rank puts low odd degree
// first and breaks ties lexicographically on the index lists, so e_{} is the
// most significant position.
class ModuleOrder {
 public:
  enum class Kind { kTermOverPosition, kPositionOverTerm };

  ModuleOrder() = default;

  static ModuleOrder TermOverPosition(MonomialOrder mono = MonomialOrder());
  // Position-over-term with `last` as the least significant position: the
  // basis elements led by `last` generate M ∩ K[X] e_last.
  static ModuleOrder EliminateAllBut(OddMonomial last,
                                     MonomialOrder mono = MonomialOrder());
  // Position-over-term with positions ranked by odd degree: basis elements
  // led in degree >= d generate the part of M supported in degrees >= d.
  static ModuleOrder ByOddDegree(MonomialOrder mono = MonomialOrder());

  Kind kind() const { return kind_; }
  const MonomialOrder& monomial_order() const { return mono_; }

  // >0 when position a is more significant than b.
  int ComparePositions(OddMonomial a, OddMonomial b) const;
  int Compare(OddMonomial pa, const Monomial& ma, OddMonomial pb,
              const Monomial& mb) const;

 private:
  Kind kind_ = Kind::kTermOverPosition;
  MonomialOrder mono_;
  std::optional<OddMonomial> last_;
};

// Reduced Groebner basis of a K[X]-submodule of the free module on {e_I}.
struct ModuleBasis {
  Field field;
  std::size_t nvars = 0;
  ModuleOrder order;
  std::vector<ModuleVector> basis;

  std::vector<std::string> ToStrings(std::span<const std::string> even_names = {},
                                     std::span<const std::string> odd_names = {}) const;
};

ModuleBasis ModuleBuchberger(Field field, std::size_t nvars,
                             std::span<const ModuleVector> gens,
                             const ModuleOrder& order = ModuleOrder());
ModuleVector ModuleNormalForm(const ModuleVector& v, const ModuleBasis& basis);
bool ModuleMembership(const ModuleVector& v, const ModuleBasis& basis);

// Leading position and monomial of a nonzero vector under `order`.
std::pair<OddMonomial, Monomial> LeadingPosition(const ModuleVector& v,
                                                 const ModuleOrder& order);

// q_I = {a in K[X] : a e_I in span(basis)}, as a reduced ideal basis under
// the basis' monomial order.
IdealBasis ContractionIdeal(const ModuleBasis& basis, OddMonomial position);

}  // namespace superkrull

#endif  // SUPERKRULL_GROEBNER_H_
