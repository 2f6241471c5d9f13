#include "superkrull/kaehler.h"

#include <map>

#include "superkrull/errors.h"
#include "superkrull/ksdim.h"
#include "superkrull/linalg.h"
#include "superkrull/regular.h"

namespace superkrull {
namespace {

void RequireGenericScope(const SuperPresentation& p) {
  if (!p.EvenReductionIsZero()) {
    throw ScopeError("J̄ ≠ 0: generic-point operations unavailable");
  }
}

void CheckShape(const OmegaElement& a, const OmegaElement& b) {
  if (a.coefficients.size() != b.coefficients.size()) {
    throw ArgumentError("differential forms over different rings");
  }
}

PolyVector ToRow(const SuperPolynomial& f) {
  PolyVector row;
  for (const auto& [odd, c] : f.parts()) row.emplace_back(odd.mask(), c);
  return row;
}

// Ω ⊗ F for F = K(X)[Y]/J': coordinates of forms modulo J' in every slot.
class GenericForms {
 public:
  explicit GenericForms(const SuperPresentation& p)
      : p_(p), ideal_(p.field(), p.m()), forms_(p.field(), p.m()) {
    RequireGenericScope(p);
    const std::uint32_t full = (std::uint32_t{1} << p.n()) - 1;
    for (const SuperPolynomial& g : p.relations()) {
      for (std::uint32_t l = 0; l <= full; ++l) {
        const SuperPolynomial product = SuperMul(p.YMonomial(OddMonomial(l)), g);
        if (!product.is_zero()) ideal_.Insert(ToRow(product));
      }
    }
    std::vector<bool> pivot(std::size_t{full} + 1, false);
    for (std::uint32_t c : ideal_.pivots()) pivot[c] = true;
    for (std::uint32_t c = 0; c <= full; ++c) {
      if (!pivot[c]) column_[c] = static_cast<std::uint32_t>(column_.size());
    }
  }

  std::size_t algebra_dim() const { return column_.size(); }
  std::size_t slots() const { return p_.m() + p_.n(); }
  std::size_t rank() const { return forms_.rank(); }
  std::size_t omega_dim() const { return slots() * algebra_dim() - rank(); }

  // Adds the F-span of w, that is y^L w for every L.
  void AddSpan(const OmegaElement& w) {
    const std::uint32_t full = (std::uint32_t{1} << p_.n()) - 1;
    for (std::uint32_t l = 0; l <= full; ++l) {
      const OmegaElement product = LeftMultiply(p_.YMonomial(OddMonomial(l)), w);
      if (!product.is_zero()) forms_.Insert(Residual(product));
    }
  }

 private:
  // Each slot reduces modulo J' with the same overall pivot factor, so the
  // concatenation is a nonzero multiple of the class of w.
  PolyVector Residual(const OmegaElement& w) const {
    PolyVector out;
    const std::uint32_t d = static_cast<std::uint32_t>(algebra_dim());
    for (std::size_t slot = 0; slot < w.coefficients.size(); ++slot) {
      for (auto& [c, value] : ideal_.Reduce(ToRow(w.coefficients[slot]))) {
        out.emplace_back(static_cast<std::uint32_t>(slot) * d + column_.at(c),
                         std::move(value));
      }
    }
    return out;
  }

  const SuperPresentation& p_;
  PolyEchelon ideal_;
  PolyEchelon forms_;
  std::map<std::uint32_t, std::uint32_t> column_;
};

}  // namespace

bool OmegaElement::is_zero() const {
  for (const SuperPolynomial& c : coefficients) {
    if (!c.is_zero()) return false;
  }
  return true;
}

OmegaElement OmegaZero(const SuperPresentation& p) {
  return OmegaElement{std::vector<SuperPolynomial>(p.m() + p.n(), p.Zero())};
}

OmegaElement operator+(const OmegaElement& a, const OmegaElement& b) {
  CheckShape(a, b);
  OmegaElement out = a;
  for (std::size_t i = 0; i < b.coefficients.size(); ++i) out.coefficients[i] += b.coefficients[i];
  return out;
}

OmegaElement LeftMultiply(const SuperPolynomial& f, const OmegaElement& w) {
  OmegaElement out = w;
  for (SuperPolynomial& c : out.coefficients) c = SuperMul(f, c);
  return out;
}

OmegaElement RightMultiply(const OmegaElement& w, const SuperPolynomial& g) {
  const Parity parity = ParityOf(g);
  if (parity == Parity::kMixed) throw ArgumentError("right action needs a homogeneous element");
  if (parity == Parity::kZero) {
    OmegaElement out = w;
    for (SuperPolynomial& c : out.coefficients) c = SuperPolynomial(g.field(), g.m(), g.n());
    return out;
  }
  OmegaElement out = w;
  const std::size_t m = g.m();
  for (std::size_t i = 0; i < out.coefficients.size(); ++i) {
    SuperPolynomial c = SuperMul(out.coefficients[i], g);
    const bool odd_slot = i >= m;
    if (odd_slot && parity == Parity::kOdd) c = -c;
    out.coefficients[i] = std::move(c);
  }
  return out;
}

OmegaElement D0Apply(const SuperPresentation& p, const SuperPolynomial& f) {
  if (f.field() != p.field() || f.m() != p.m() || f.n() != p.n()) {
    throw ArgumentError("element lives in a different ring");
  }
  OmegaElement out = OmegaZero(p);
  for (const auto& [odd, a] : f.parts()) {
    for (std::size_t i = 0; i < p.m(); ++i) {
      const Polynomial da = a.Derivative(i);
      if (!da.is_zero()) out.coefficients[i].AddTerm(odd, da);
    }
    const std::vector<std::size_t> indices = odd.Indices();
    const std::size_t k = indices.size();
    for (std::size_t t = 1; t <= k; ++t) {
      const std::size_t i = indices[t - 1];
      const OddMonomial rest(odd.mask() & ~(1u << (i - 1)));
      out.coefficients[p.m() + i - 1].AddTerm(rest, (k - t) % 2 == 0 ? a : -a);
    }
  }
  return out;
}

OmegaPresentation MakeOmegaPresentation(const SuperPresentation& p) {
  OmegaPresentation out;
  for (const std::string& x : p.even_names()) out.even_generators.push_back("d" + x);
  for (const std::string& y : p.odd_names()) out.odd_generators.push_back("d" + y);
  for (const SuperPolynomial& g : p.relations()) {
    out.relations.push_back(D0Apply(p, g));
    out.parities.push_back(ParityOf(g));
  }
  return out;
}

std::string FormatOmega(const SuperPresentation& p, const OmegaElement& w) {
  std::string out;
  for (std::size_t i = 0; i < w.coefficients.size(); ++i) {
    const SuperPolynomial& c = w.coefficients[i];
    if (c.is_zero()) continue;
    const std::string name =
        "d" + (i < p.m() ? p.even_names()[i] : p.odd_names()[i - p.m()]);
    std::string coef = p.Format(c);
    const bool single = c.TermCount() == 1;
    const bool negative = single && coef.starts_with("-");
    if (negative) coef.erase(0, 1);
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (coef == "1") {
      out += name;
    } else {
      out += (single ? coef : "(" + coef + ")") + "*" + name;
    }
  }
  return out.empty() ? "0" : out;
}

GenericRank OmegaGenericRank(const SuperPresentation& p) {
  GenericForms forms(p);
  for (const SuperPolynomial& g : p.relations()) forms.AddSpan(D0Apply(p, g));
  GenericRank out;
  out.p = p.m();
  out.q = GenericMinimalOddGenerators(p).size();
  out.algebra_dim = forms.algebra_dim();
  out.omega_dim = forms.omega_dim();
  // A minimal surjection F^{p|q} -> Ω ⊗ F over the local ring F is an
  // isomorphism exactly when the dimensions match.
  out.free = out.omega_dim == (out.p + out.q) * out.algebra_dim;
  return out;
}

bool RegularityViaOmega(const SuperPresentation& p) {
  const GenericRank rank = OmegaGenericRank(p);
  return rank.free && rank.p == p.m() && rank.q == OddDim(p).first;
}

bool SecondSequenceCheck(const SuperPresentation& p, std::span<const SuperPolynomial> extra) {
  RequireGenericScope(p);
  const SuperPresentation c = QuotientPresentation(p, extra);
  RequireGenericScope(c);
  GenericForms forms(c);
  for (const SuperPolynomial& g : p.relations()) forms.AddSpan(D0Apply(c, g));
  const std::size_t omega_b = forms.omega_dim();
  const std::size_t before = forms.rank();
  for (const SuperPolynomial& h : extra) forms.AddSpan(D0Apply(c, h));
  const std::size_t image = forms.rank() - before;
  const std::size_t omega_c = OmegaGenericRank(c).omega_dim;
  return image + omega_c == omega_b;
}

}  // namespace superkrull
