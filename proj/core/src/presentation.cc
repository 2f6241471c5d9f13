#include "superkrull/presentation.h"

#include <set>

#include "superkrull/errors.h"

namespace superkrull {

SuperPresentation::SuperPresentation(Field field, std::size_t m, std::size_t n,
                                     std::vector<SuperPolynomial> relations)
    : SuperPresentation(field, DefaultNames("x", m), DefaultNames("y", n),
                        std::move(relations)) {}

SuperPresentation::SuperPresentation(Field field, std::vector<std::string> even_names,
                                     std::vector<std::string> odd_names,
                                     std::vector<SuperPolynomial> relations)
    : field_(field),
      even_names_(std::move(even_names)),
      odd_names_(std::move(odd_names)),
      relations_(std::move(relations)) {
  Validate();
}

void SuperPresentation::Validate() const {
  if (n() > kMaxOddVariables) {
    throw ArgumentError("at most " + std::to_string(kMaxOddVariables) +
                        " odd generators are supported");
  }
  if (m() > 30) throw ArgumentError("at most 30 even generators are supported");
  std::set<std::string> seen;
  for (const auto* names : {&even_names_, &odd_names_}) {
    for (const std::string& name : *names) {
      if (!seen.insert(name).second) {
        throw ArgumentError("generator name used twice: " + name);
      }
    }
  }
  for (const SuperPolynomial& f : relations_) CheckRelation(*this, f);
}

void CheckRelation(const SuperPresentation& p, const SuperPolynomial& f) {
  if (f.field() != p.field() || f.m() != p.m() || f.n() != p.n()) {
    throw ArgumentError("relation lives in a different ring");
  }
  switch (ParityOf(f)) {
    case Parity::kZero:
      throw ArgumentError("zero relation");
    case Parity::kMixed:
      throw ArgumentError("inhomogeneous relation " + p.Format(f) +
                          ": found both even and odd terms");
    default:
      break;
  }
}

SuperPolynomial SuperPresentation::Constant(long c) const {
  return SuperPolynomial::Constant(field_, m(), n(), c);
}

SuperPolynomial SuperPresentation::X(std::size_t index) const {
  if (index == 0 || index > m()) throw ArgumentError("even index out of range");
  return SuperPolynomial::EvenVariable(field_, m(), n(), index - 1);
}

SuperPolynomial SuperPresentation::Y(std::size_t index) const {
  if (index == 0 || index > n()) throw ArgumentError("odd index out of range");
  return SuperPolynomial::OddVariable(field_, m(), n(), index);
}

SuperPolynomial SuperPresentation::YMonomial(OddMonomial odd) const {
  return SuperPolynomial::OddTerm(field_, m(), n(), odd);
}

std::vector<ModuleVector> SuperPresentation::ModuleGenerators() const {
  return SuperidealModuleGenerators(relations_);
}

std::vector<Polynomial> SuperPresentation::EvenReduction() const {
  std::vector<Polynomial> out;
  for (const SuperPolynomial& f : relations_) {
    Polynomial b = Bar(f);
    if (!b.is_zero()) out.push_back(std::move(b));
  }
  return out;
}

bool SuperPresentation::EvenReductionIsZero() const { return EvenReduction().empty(); }

std::string SuperPresentation::Format(const SuperPolynomial& f) const {
  return f.ToString(even_names_, odd_names_);
}

std::string SuperPresentation::ToString() const {
  std::string out = "field " + field_.ToString() + "\neven";
  for (const std::string& name : even_names_) out += " " + name;
  out += "\nodd";
  for (const std::string& name : odd_names_) out += " " + name;
  out += "\nrelations:\n";
  for (const SuperPolynomial& f : relations_) out += Format(f) + "\n";
  return out;
}

}  // namespace superkrull
