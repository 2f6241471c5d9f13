#ifndef SUPERKRULL_ORACLE_H_
#define SUPERKRULL_ORACLE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <variant>

#include "superkrull/linalg.h"
#include "superkrull/presentation.h"

namespace superkrull {

// A K(X)-subspace of the 2^n-dimensional exterior algebra K(X)[Y], kept in
// echelon form. Uses plain elimination over K when every coefficient is a
// constant and fraction-free elimination over K[X] otherwise.
class ExteriorSpan {
 public:
  // Span of the given elements, and of all their products y^L * g when
  // `close` is set.
  ExteriorSpan(Field field, std::size_t m, std::size_t n,
               std::span<const SuperPolynomial> elements, bool close);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t dimension() const;
  bool scalar() const { return std::holds_alternative<ScalarEchelon>(echelon_); }
  bool Contains(const SuperPolynomial& v) const;
  bool ContainsMonomial(OddMonomial odd) const;

 private:
  bool Insert(const SuperPolynomial& v);

  Field field_;
  std::size_t m_;
  std::size_t n_;
  std::variant<ScalarEchelon, PolyEchelon> echelon_;
};

// Localized super-ideal J' = K(X) ⊗ J. Throws ScopeError unless J̄ = 0.
ExteriorSpan BuildExteriorSpan(const SuperPresentation& p);
bool OracleMembership(const ExteriorSpan& span, const SuperPolynomial& v);
// max{|I| : y^I not in the span}, 0 when every nonempty y^I lies in it.
std::size_t OracleOddDim(const ExteriorSpan& span);
std::size_t OracleOddDim(const SuperPresentation& p);

}  // namespace superkrull

#endif  // SUPERKRULL_ORACLE_H_
