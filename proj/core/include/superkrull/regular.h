#ifndef SUPERKRULL_REGULAR_H_
#define SUPERKRULL_REGULAR_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superkrull/groebner.h"
#include "superkrull/presentation.h"

namespace superkrull {

// Presentation of I_A^d / I_A^{d+1} over Ā: generators y^I with |I| = d,
// relations as a submodule of the free module on those y^I.
struct GradedPiecePresentation {
  std::size_t degree = 0;
  std::vector<OddMonomial> generators;
  ModuleBasis relations;
};

// I_A / I_A^2 for any presentation: relations are the degree-1 parts of odd
// relations plus J̄ times every generator. Throws ZeroAlgebraError.
GradedPiecePresentation IaModIa2(const SuperPresentation& p);

// Degree-d piece of gr(A) for J̄ = 0 (ScopeError otherwise).
GradedPiecePresentation GradedPiece(const SuperPresentation& p, std::size_t d);

struct FreenessCertificate {
  bool free = false;
  // Rank over K(X) of the module, which is its rank when free.
  std::size_t rank = 0;
  // Ideal of maximal nonvanishing minors of the relation matrix; the module
  // is projective, hence free, exactly when this is the unit ideal.
  IdealBasis fitting_ideal;
};

// Freeness of I_A / I_A^2 over K[X]. Requires J̄ = 0.
FreenessCertificate IaModIa2Freeness(const SuperPresentation& p);

// Injectivity of ∧^d(I_A/I_A^2) -> I_A^d/I_A^{d+1}: every degree-d relation
// must lie in the span of (degree-1 relation) ∧ y^T. Requires J̄ = 0 and a
// free degree-1 piece (ScopeError otherwise).
bool LambdaCheck(const SuperPresentation& p, std::size_t d);
// Same question by comparing K(X)-dimensions of source and target; exact
// because the source is free and the map is onto.
bool LambdaCheckByRank(const SuperPresentation& p, std::size_t d);

enum class Verdict { kRegular, kNotRegular, kUnknownOutOfScope };
enum class FailedClause { kReducedRegular, kFreeness, kLambda };
std::string ToString(Verdict verdict);
std::string ToString(FailedClause clause);

struct RegularityVerdict {
  Verdict verdict = Verdict::kUnknownOutOfScope;
  std::optional<FailedClause> failed_clause;
  // Degree where λ fails, for kLambda.
  std::optional<std::size_t> failed_degree;
  std::vector<std::string> certificate;
};

RegularityVerdict IsRegularGlobal(const SuperPresentation& p);

// Indices j whose y_j form a minimal generating set of F_1 over F_0 for the
// generic superfield F = K(X)[Y]/J'. Requires J̄ = 0.
std::vector<std::size_t> GenericMinimalOddGenerators(const SuperPresentation& p);

// Regularity of F, decided by whether the product of a minimal generating
// set of F_1 survives in F. Requires J̄ = 0.
bool GenericNonsingular(const SuperPresentation& p);

}  // namespace superkrull

#endif  // SUPERKRULL_REGULAR_H_
