#include "superkrull/regular.h"

#include <algorithm>
#include <bit>

#include "superkrull/errors.h"
#include "superkrull/linalg.h"
#include "superkrull/oracle.h"

namespace superkrull {
namespace {

void RequireGenericScope(const SuperPresentation& p) {
  if (!p.EvenReductionIsZero()) {
    throw ScopeError("J̄ ≠ 0: generic-point operations unavailable");
  }
}

// Degree-1 parts of the odd relations; the even ones have none.
std::vector<SuperPolynomial> DegreeOneRelations(const SuperPresentation& p) {
  std::vector<SuperPolynomial> out;
  for (const SuperPolynomial& g : p.relations()) {
    SuperPolynomial part = g.DegreePart(1);
    if (!part.is_zero()) out.push_back(std::move(part));
  }
  return out;
}

std::vector<OddMonomial> MasksOfSize(std::size_t n, std::size_t d) {
  std::vector<OddMonomial> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) == d) out.push_back(OddMonomial(mask));
  }
  std::sort(out.begin(), out.end(), LexLess);
  return out;
}

PolyVector ToRow(const ModuleVector& v) {
  PolyVector row;
  for (const auto& [pos, c] : v.coordinates()) row.emplace_back(pos.mask(), c);
  return row;
}

std::size_t Binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Degree-d parts of J ∩ I^d: the basis elements under the degree-ranked
// position-over-term order whose leading position has degree >= d.
std::vector<ModuleVector> DegreeRelations(const SuperPresentation& p,
                                          const ModuleBasis& graded, std::size_t d) {
  std::vector<ModuleVector> out;
  for (const ModuleVector& v : graded.basis) {
    if (LeadingPosition(v, graded.order).first.size() < d) continue;
    ModuleVector part(p.field(), p.m());
    for (const auto& [pos, c] : v.coordinates()) {
      if (pos.size() == d) part.Add(pos, c);
    }
    if (!part.is_zero()) out.push_back(std::move(part));
  }
  return out;
}

ModuleBasis GradedBasis(const SuperPresentation& p) {
  return ModuleBuchberger(p.field(), p.m(), p.ModuleGenerators(), ModuleOrder::ByOddDegree());
}

std::vector<ModuleVector> WedgeSpan(const SuperPresentation& p, std::size_t d) {
  std::vector<ModuleVector> out;
  for (const SuperPolynomial& rho : DegreeOneRelations(p)) {
    for (OddMonomial t : MasksOfSize(p.n(), d - 1)) {
      const SuperPolynomial w = SuperMul(p.YMonomial(t), rho);
      if (!w.is_zero()) out.push_back(ToVector(w));
    }
  }
  return out;
}

// Calls visit on each k-subset of {0..n-1}.
template <typename Visit>
bool ForEachSubset(std::size_t n, std::size_t k, Visit visit) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  if (k > n) return false;
  for (;;) {
    if (visit(pick)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool LambdaCheckWith(const SuperPresentation& p, const ModuleBasis& graded, std::size_t d) {
  if (d <= 1 || d > p.n()) return true;
  const std::vector<ModuleVector> wedge = WedgeSpan(p, d);
  const ModuleBasis source = ModuleBuchberger(p.field(), p.m(), wedge);
  for (const ModuleVector& v : DegreeRelations(p, graded, d)) {
    if (!ModuleMembership(v, source)) return false;
  }
  return true;
}

}  // namespace

GradedPiecePresentation IaModIa2(const SuperPresentation& p) {
  const IdealBasis bar = Buchberger(p.field(), p.m(), p.EvenReduction());
  if (bar.is_unit()) throw ZeroAlgebraError();
  std::vector<ModuleVector> gens;
  for (const SuperPolynomial& rho : DegreeOneRelations(p)) gens.push_back(ToVector(rho));
  for (std::size_t j = 1; j <= p.n(); ++j) {
    for (const Polynomial& b : bar.basis) {
      ModuleVector v(p.field(), p.m());
      v.Add(OddMonomial(1u << (j - 1)), b);
      gens.push_back(std::move(v));
    }
  }
  return {1, MasksOfSize(p.n(), 1), ModuleBuchberger(p.field(), p.m(), gens)};
}

GradedPiecePresentation GradedPiece(const SuperPresentation& p, std::size_t d) {
  RequireGenericScope(p);
  if (d > p.n()) throw ArgumentError("degree exceeds the number of odd generators");
  const ModuleBasis graded = GradedBasis(p);
  return {d, MasksOfSize(p.n(), d),
          ModuleBuchberger(p.field(), p.m(), DegreeRelations(p, graded, d))};
}

FreenessCertificate IaModIa2Freeness(const SuperPresentation& p) {
  RequireGenericScope(p);
  const std::vector<SuperPolynomial> rels = DegreeOneRelations(p);
  const std::size_t n = p.n();
  PolyEchelon echelon(p.field(), p.m());
  for (const SuperPolynomial& rho : rels) echelon.Insert(ToRow(ToVector(rho)));
  const std::size_t rank = echelon.rank();

  FreenessCertificate out;
  out.rank = n - rank;
  const Polynomial one = Polynomial::Constant(p.field(), p.m(), 1);
  if (rank == 0) {
    const Polynomial gens[] = {one};
    out.fitting_ideal = Buchberger(p.field(), p.m(), gens);
    out.free = true;
    return out;
  }
  std::vector<std::vector<Polynomial>> matrix;
  for (const SuperPolynomial& rho : rels) {
    std::vector<Polynomial> row;
    for (std::size_t j = 1; j <= n; ++j) row.push_back(rho.Coefficient(OddMonomial(1u << (j - 1))));
    matrix.push_back(std::move(row));
  }
  std::vector<Polynomial> minors;
  bool unit = false;
  ForEachSubset(matrix.size(), rank, [&](const std::vector<std::size_t>& rows) {
    return ForEachSubset(n, rank, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::vector<Polynomial>> sub;
      for (std::size_t r : rows) {
        std::vector<Polynomial> line;
        for (std::size_t c : cols) line.push_back(matrix[r][c]);
        sub.push_back(std::move(line));
      }
      Polynomial det = Determinant(std::move(sub), p.field(), p.m());
      if (det.is_zero()) return false;
      unit = det.is_constant();
      minors.push_back(std::move(det));
      return unit;
    });
  });
  if (unit) minors = {one};
  out.fitting_ideal = Buchberger(p.field(), p.m(), minors);
  out.free = out.fitting_ideal.is_unit();
  return out;
}

bool LambdaCheck(const SuperPresentation& p, std::size_t d) {
  if (!IaModIa2Freeness(p).free) {
    throw ScopeError("I_A/I_A^2 is not free, so λ has no free source to compare");
  }
  return LambdaCheckWith(p, GradedBasis(p), d);
}

bool LambdaCheckByRank(const SuperPresentation& p, std::size_t d) {
  const FreenessCertificate freeness = IaModIa2Freeness(p);
  if (!freeness.free) {
    throw ScopeError("I_A/I_A^2 is not free, so λ has no free source to compare");
  }
  if (d <= 1 || d > p.n()) return true;
  PolyEchelon echelon(p.field(), p.m());
  for (const ModuleVector& v : DegreeRelations(p, GradedBasis(p), d)) echelon.Insert(ToRow(v));
  return Binomial(p.n(), d) - echelon.rank() == Binomial(freeness.rank, d);
}

std::string ToString(Verdict verdict) {
  switch (verdict) {
    case Verdict::kRegular:
      return "regular";
    case Verdict::kNotRegular:
      return "not_regular";
    case Verdict::kUnknownOutOfScope:
      return "unknown_out_of_scope";
  }
  return "";
}

std::string ToString(FailedClause clause) {
  switch (clause) {
    case FailedClause::kReducedRegular:
      return "i";
    case FailedClause::kFreeness:
      return "ii";
    case FailedClause::kLambda:
      return "iii";
  }
  return "";
}

RegularityVerdict IsRegularGlobal(const SuperPresentation& p) {
  RegularityVerdict out;
  if (!p.EvenReductionIsZero()) {
    out.certificate.push_back("J̄ ≠ 0: regularity of Ā is not decided here");
    return out;
  }
  const FreenessCertificate freeness = IaModIa2Freeness(p);
  if (!freeness.free) {
    out.verdict = Verdict::kNotRegular;
    out.failed_clause = FailedClause::kFreeness;
    for (const SuperPolynomial& rho : DegreeOneRelations(p)) {
      out.certificate.push_back("relation of I_A/I_A^2: " + p.Format(rho));
    }
    for (const std::string& g : freeness.fitting_ideal.ToStrings(p.even_names())) {
      out.certificate.push_back("Fitting ideal generator: " + g);
    }
    return out;
  }
  const ModuleBasis graded = GradedBasis(p);
  for (std::size_t d = 2; d <= p.n(); ++d) {
    const std::vector<ModuleVector> wedge = WedgeSpan(p, d);
    const ModuleBasis source = ModuleBuchberger(p.field(), p.m(), wedge);
    for (const ModuleVector& v : DegreeRelations(p, graded, d)) {
      if (ModuleMembership(v, source)) continue;
      out.verdict = Verdict::kNotRegular;
      out.failed_clause = FailedClause::kLambda;
      out.failed_degree = d;
      out.certificate.push_back("kernel element of λ in degree " + std::to_string(d) + ": " +
                                p.Format(SuperPolynomial::FromVector(v, p.n())));
      return out;
    }
  }
  out.verdict = Verdict::kRegular;
  return out;
}

std::vector<std::size_t> GenericMinimalOddGenerators(const SuperPresentation& p) {
  RequireGenericScope(p);
  PolyEchelon echelon(p.field(), p.m());
  for (const SuperPolynomial& rho : DegreeOneRelations(p)) echelon.Insert(ToRow(ToVector(rho)));
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= p.n(); ++j) {
    const std::uint32_t column = 1u << (j - 1);
    const auto& pivots = echelon.pivots();
    if (std::find(pivots.begin(), pivots.end(), column) == pivots.end()) out.push_back(j);
  }
  return out;
}

bool GenericNonsingular(const SuperPresentation& p) {
  const std::vector<std::size_t> z = GenericMinimalOddGenerators(p);
  std::uint32_t mask = 0;
  for (std::size_t j : z) mask |= 1u << (j - 1);
  // F_0 is local with maximal ideal F_1^2, so Ann(z^s) = F_1^2 exactly when
  // no unit kills z^s, that is when z^s != 0 in F.
  return !BuildExteriorSpan(p).ContainsMonomial(OddMonomial(mask));
}

}  // namespace superkrull
