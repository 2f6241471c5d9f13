#ifndef SUPERKRULL_PRESENTATION_H_
#define SUPERKRULL_PRESENTATION_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "superkrull/groebner.h"
#include "superkrull/superpoly.h"

namespace superkrull {

// A = K[x1..xm | y1..yn] / J with J generated by homogeneous relations.
class SuperPresentation {
 public:
  SuperPresentation() = default;
  // Default names x1..xm and y1..yn. Throws ArgumentError on invalid
  // relations (see Validate).
  SuperPresentation(Field field, std::size_t m, std::size_t n,
                    std::vector<SuperPolynomial> relations = {});
  SuperPresentation(Field field, std::vector<std::string> even_names,
                    std::vector<std::string> odd_names,
                    std::vector<SuperPolynomial> relations = {});

  Field field() const { return field_; }
  std::size_t m() const { return even_names_.size(); }
  std::size_t n() const { return odd_names_.size(); }
  const std::vector<std::string>& even_names() const { return even_names_; }
  const std::vector<std::string>& odd_names() const { return odd_names_; }
  const std::vector<SuperPolynomial>& relations() const { return relations_; }

  SuperPolynomial Zero() const { return SuperPolynomial(field_, m(), n()); }
  SuperPolynomial Constant(long c) const;
  // 1-based, like the names x1, y1.
  SuperPolynomial X(std::size_t index) const;
  SuperPolynomial Y(std::size_t index) const;
  SuperPolynomial YMonomial(OddMonomial odd) const;

  // The relations as module vectors spanning J over K[X].
  std::vector<ModuleVector> ModuleGenerators() const;
  // Bar images of the relations; they generate J̄ ⊂ K[X].
  std::vector<Polynomial> EvenReduction() const;
  bool EvenReductionIsZero() const;

  // Canonical file text, accepted back by ParsePresentation.
  std::string ToString() const;
  std::string Format(const SuperPolynomial& f) const;

 private:
  void Validate() const;

  Field field_;
  std::vector<std::string> even_names_;
  std::vector<std::string> odd_names_;
  std::vector<SuperPolynomial> relations_;
};

// Throws ArgumentError when f is zero, inhomogeneous, or lives in a different
// ring than p.
void CheckRelation(const SuperPresentation& p, const SuperPolynomial& f);

}  // namespace superkrull

#endif  // SUPERKRULL_PRESENTATION_H_
