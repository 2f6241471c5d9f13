#ifndef SUPERKRULL_KAEHLER_H_
#define SUPERKRULL_KAEHLER_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "superkrull/presentation.h"

namespace superkrull {

// Element of the free left module F on dx1..dxm (even), dy1..dyn (odd):
// coefficients[i] multiplies the i-th generator, even ones first.
struct OmegaElement {
  std::vector<SuperPolynomial> coefficients;

  bool is_zero() const;
  friend bool operator==(const OmegaElement&, const OmegaElement&) = default;
};

OmegaElement OmegaZero(const SuperPresentation& p);
OmegaElement operator+(const OmegaElement& a, const OmegaElement& b);
// f * w.
OmegaElement LeftMultiply(const SuperPolynomial& f, const OmegaElement& w);
// w * g for homogeneous g, through (c dZ) g = (-1)^{|g||Z|} c g dZ.
OmegaElement RightMultiply(const OmegaElement& w, const SuperPolynomial& g);

// Universal even derivation: d0(a y^I) = sum_i (da/dx_i) y^I dx_i +
// sum_t (-1)^{k-t} a y^{I minus i_t} dy_{i_t} for I = {i_1 < ... < i_k}.
OmegaElement D0Apply(const SuperPresentation& p, const SuperPolynomial& f);

struct OmegaPresentation {
  std::vector<std::string> even_generators;
  std::vector<std::string> odd_generators;
  // d0 g_k for each relation g_k, in order.
  std::vector<OmegaElement> relations;
  std::vector<Parity> parities;
};

OmegaPresentation MakeOmegaPresentation(const SuperPresentation& p);
std::string FormatOmega(const SuperPresentation& p, const OmegaElement& w);

struct GenericRank {
  std::size_t p = 0;
  std::size_t q = 0;
  bool free = false;
  // K(X)-dimensions of F = K(X)[Y]/J' and of Ω ⊗ F.
  std::size_t algebra_dim = 0;
  std::size_t omega_dim = 0;

  friend bool operator==(const GenericRank&, const GenericRank&) = default;
};

// Rank data of Ω at the generic point. Requires J̄ = 0.
GenericRank OmegaGenericRank(const SuperPresentation& p);
// Ω free of rank m | odd_dim(P) at the generic point. Requires J̄ = 0.
bool RegularityViaOmega(const SuperPresentation& p);

// Checks the second exact sequence I/I^2 -> Ω_B ⊗ C -> Ω_C -> 0 at the
// generic point of C = B/(extra) by comparing K(X)-dimensions. Requires
// J̄ = 0 for B and C.
bool SecondSequenceCheck(const SuperPresentation& p, std::span<const SuperPolynomial> extra);

}  // namespace superkrull

#endif  // SUPERKRULL_KAEHLER_H_
