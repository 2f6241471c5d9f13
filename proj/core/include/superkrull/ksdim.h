#ifndef SUPERKRULL_KSDIM_H_
#define SUPERKRULL_KSDIM_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "superkrull/groebner.h"
#include "superkrull/presentation.h"

namespace superkrull {

// Krull super-dimension r|s with a maximal odd-parameter system.
struct SuperDim {
  std::size_t even = 0;
  std::size_t odd = 0;
  OddMonomial witness;

  std::string ToString() const {
    return std::to_string(even) + "|" + std::to_string(odd);
  }
  friend bool operator==(const SuperDim&, const SuperDim&) = default;
};

// Caches the module basis of J and its contraction ideals. Not thread-safe;
// use one instance per thread.
class KsdimSolver {
 public:
  explicit KsdimSolver(SuperPresentation presentation,
                       MonomialOrder order = MonomialOrder());

  const SuperPresentation& presentation() const { return p_; }
  const ModuleBasis& relation_module();

  // dim K[X]/J̄. Throws ZeroAlgebraError when J̄ is the unit ideal.
  std::size_t EvenDim();
  // q_I = {a in K[X] : a y^I in J}.
  const IdealBasis& Contraction(OddMonomial odd);
  bool IsOddParameterSystem(OddMonomial odd);
  // Largest odd-parameter system; the lexicographically smallest one among
  // those of maximal size.
  std::pair<std::size_t, OddMonomial> OddDim();
  SuperDim Ksdim();

 private:
  SuperPresentation p_;
  MonomialOrder order_;
  std::optional<ModuleBasis> module_;
  std::optional<std::size_t> even_;
  std::map<OddMonomial, IdealBasis> contractions_;
};

std::size_t EvenDim(const SuperPresentation& p);
bool IsOddParameterSystem(const SuperPresentation& p, OddMonomial odd);
std::pair<std::size_t, OddMonomial> OddDim(const SuperPresentation& p);
SuperDim Ksdim(const SuperPresentation& p);

// True iff q_{I'} = 0 for every I' ⊆ I, that is K[X][y_i : i in I] embeds
// into A. Requires J̄ = 0 (ScopeError otherwise).
bool VerifyNoetherWitness(const SuperPresentation& p, OddMonomial odd);

// P with `extra` appended to its relations. Throws ArgumentError for zero or
// inhomogeneous elements.
SuperPresentation QuotientPresentation(const SuperPresentation& p,
                                       std::span<const SuperPolynomial> extra);

// Ksdim(A / Ann(M)) for caller-supplied generators of Ann(M).
SuperDim SupermoduleSdim(const SuperPresentation& p,
                         std::span<const SuperPolynomial> ann_gens);

}  // namespace superkrull

#endif  // SUPERKRULL_KSDIM_H_
