#include "superkrull/oracle.h"

#include <algorithm>
#include <bit>
#include <map>

#include "superkrull/errors.h"

namespace superkrull {
namespace {

// Sign of y^l * y^i against y^(l|i) for disjoint masks, by counting pairs
// (a in l, b in i) with a > b.
int ProductSign(std::uint32_t l, std::uint32_t i) {
  int inversions = 0;
  for (std::uint32_t rest = l; rest != 0; rest &= rest - 1) {
    const std::uint32_t bit = rest & (~rest + 1);
    inversions += std::popcount(i & (bit - 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// y^l * g as a map from masks to coefficients.
std::map<std::uint32_t, Polynomial> LeftMultiply(std::uint32_t l, const SuperPolynomial& g) {
  std::map<std::uint32_t, Polynomial> out;
  for (const auto& [odd, c] : g.parts()) {
    if (odd.mask() & l) continue;
    out.emplace(odd.mask() | l, ProductSign(l, odd.mask()) > 0 ? c : -c);
  }
  return out;
}

bool AllConstant(std::span<const SuperPolynomial> elements) {
  for (const SuperPolynomial& g : elements) {
    for (const auto& [odd, c] : g.parts()) {
      if (!c.is_constant()) return false;
    }
  }
  return true;
}

}  // namespace

ExteriorSpan::ExteriorSpan(Field field, std::size_t m, std::size_t n,
                           std::span<const SuperPolynomial> elements, bool close)
    : field_(field),
      m_(m),
      n_(n),
      echelon_(AllConstant(elements)
                   ? std::variant<ScalarEchelon, PolyEchelon>(ScalarEchelon(field))
                   : std::variant<ScalarEchelon, PolyEchelon>(PolyEchelon(field, m))) {
  if (n > kMaxOddVariables) throw ArgumentError("too many odd variables");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (const SuperPolynomial& g : elements) {
    if (g.field() != field || g.m() != m || g.n() != n) {
      throw ArgumentError("element lives in a different ring");
    }
    if (!close) {
      Insert(g);
      continue;
    }
    // Products y^l g; l meeting every term gives zero.
    std::uint32_t common = full;
    for (const auto& [odd, c] : g.parts()) common &= odd.mask();
    for (std::uint32_t l = 0; l <= full; ++l) {
      if (l & common) continue;
      SuperPolynomial product(field, m, n);
      for (auto& [mask, c] : LeftMultiply(l, g)) product.AddTerm(OddMonomial(mask), c);
      if (!product.is_zero()) Insert(product);
    }
  }
}

bool ExteriorSpan::Insert(const SuperPolynomial& v) {
  if (auto* e = std::get_if<ScalarEchelon>(&echelon_)) {
    ScalarVector row;
    for (const auto& [odd, c] : v.parts()) {
      if (!c.is_constant()) throw InvariantError("scalar span given a polynomial entry");
      row.emplace_back(odd.mask(), c.ConstantTerm());
    }
    return e->Insert(std::move(row));
  }
  PolyVector row;
  for (const auto& [odd, c] : v.parts()) row.emplace_back(odd.mask(), c);
  return std::get<PolyEchelon>(echelon_).Insert(std::move(row));
}

std::size_t ExteriorSpan::dimension() const {
  return std::visit([](const auto& e) { return e.rank(); }, echelon_);
}

bool ExteriorSpan::Contains(const SuperPolynomial& v) const {
  if (v.field() != field_ || v.m() != m_ || v.n() != n_) {
    throw ArgumentError("element lives in a different ring");
  }
  if (const auto* e = std::get_if<ScalarEchelon>(&echelon_)) {
    // A polynomial coefficient c(x) y^I lies in a K-defined span iff the
    // vector of its x-monomial slices does.
    std::map<Monomial, ScalarVector> slices;
    for (const auto& [odd, c] : v.parts()) {
      for (const Term& t : c.terms()) {
        slices[t.monomial].emplace_back(odd.mask(), t.coefficient);
      }
    }
    return std::all_of(slices.begin(), slices.end(),
                       [&](auto& slice) { return e->Contains(slice.second); });
  }
  PolyVector row;
  for (const auto& [odd, c] : v.parts()) row.emplace_back(odd.mask(), c);
  return std::get<PolyEchelon>(echelon_).Contains(std::move(row));
}

bool ExteriorSpan::ContainsMonomial(OddMonomial odd) const {
  if (const auto* e = std::get_if<ScalarEchelon>(&echelon_)) {
    return e->Contains({{odd.mask(), Scalar::One(field_)}});
  }
  return std::get<PolyEchelon>(echelon_).Contains(
      {{odd.mask(), Polynomial::Constant(field_, m_, 1)}});
}

ExteriorSpan BuildExteriorSpan(const SuperPresentation& p) {
  if (!p.EvenReductionIsZero()) {
    throw ScopeError("J̄ ≠ 0: generic-point operations unavailable");
  }
  return ExteriorSpan(p.field(), p.m(), p.n(), p.relations(), true);
}

bool OracleMembership(const ExteriorSpan& span, const SuperPolynomial& v) {
  return span.Contains(v);
}

std::size_t OracleOddDim(const ExteriorSpan& span) {
  const std::size_t n = span.n();
  // Masks grouped by size, largest first.
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    by_size[std::popcount(mask)].push_back(mask);
  }
  for (std::size_t k = n; k >= 1; --k) {
    for (std::uint32_t mask : by_size[k]) {
      if (!span.ContainsMonomial(OddMonomial(mask))) return k;
    }
  }
  return 0;
}

std::size_t OracleOddDim(const SuperPresentation& p) {
  return OracleOddDim(BuildExteriorSpan(p));
}

}  // namespace superkrull
