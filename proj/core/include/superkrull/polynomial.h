#ifndef SUPERKRULL_POLYNOMIAL_H_
#define SUPERKRULL_POLYNOMIAL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superkrull/scalar.h"

namespace superkrull {

// x^α for a dense exponent vector α.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents)
      : exponents_(std::move(exponents)) {}

  static Monomial Variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool Divides(const Monomial& other) const;
  // Variables with a positive exponent, as a bitmask (nvars <= 64).
  std::uint64_t Support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial Lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string ToString(std::span<const std::string> names) const;

 private:
  std::vector<std::uint32_t> exponents_;
};

// Graded reverse lexicographic or lexicographic order. `priority` lists
// variable indices from most to least significant; empty means x1 > x2 > ...
class MonomialOrder {
 public:
  enum class Kind { kGrevlex, kLex };

  MonomialOrder() = default;
  explicit MonomialOrder(Kind kind, std::vector<std::size_t> priority = {})
      : kind_(kind), priority_(std::move(priority)) {}

  static MonomialOrder Grevlex() { return MonomialOrder(Kind::kGrevlex); }
  static MonomialOrder Lex() { return MonomialOrder(Kind::kLex); }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }

  // <0, 0, >0 as a is smaller, equal, larger than b.
  int Compare(const Monomial& a, const Monomial& b) const;
  bool Greater(const Monomial& a, const Monomial& b) const {
    return Compare(a, b) > 0;
  }

  std::string ToString() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::size_t VariableAt(std::size_t rank) const {
    return priority_.empty() ? rank : priority_[rank];
  }

  Kind kind_ = Kind::kGrevlex;
  std::vector<std::size_t> priority_;
};

struct Term {
  Monomial monomial;
  Scalar coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

// Element of K[x1..xn]. Terms are stored sorted descending by the
// polynomial's own order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Field field, std::size_t nvars,
             MonomialOrder order = MonomialOrder())
      : field_(field), nvars_(nvars), order_(std::move(order)) {}

  static Polynomial Constant(Field field, std::size_t nvars, const Scalar& c);
  static Polynomial Constant(Field field, std::size_t nvars, long c);
  static Polynomial Variable(Field field, std::size_t nvars, std::size_t index);
  static Polynomial FromTerm(Field field, const Monomial& m, const Scalar& c);
  // Sums duplicate monomials and drops zeros.
  static Polynomial FromTerms(Field field, std::size_t nvars,
                              std::vector<Term> terms,
                              MonomialOrder order = MonomialOrder());

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  Scalar ConstantTerm() const;
  std::uint64_t degree() const;
  Scalar CoefficientOf(const Monomial& m) const;

  // Same polynomial with terms re-sorted under `order`.
  Polynomial WithOrder(const MonomialOrder& order) const;
  // Throws ArgumentError on the zero polynomial.
  const Term& LeadingTerm() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial Scaled(const Scalar& c) const;
  Polynomial MultipliedBy(const Monomial& m, const Scalar& c) const;
  // Leading coefficient 1; zero stays zero.
  Polynomial Monic() const;

  Polynomial Derivative(std::size_t variable) const;
  Scalar Evaluate(std::span<const Scalar> point) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  // Order-independent equality of the term sets.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Canonical text: `3*x1^2*x2 - 1/2`. Names default to x1..xn.
  std::string ToString(std::span<const std::string> names = {}) const;

 private:
  void CheckCompatible(const Polynomial& other) const;
  void Normalize();

  Field field_;
  std::size_t nvars_ = 0;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

// Leading term of f under `order`. Throws ArgumentError when f = 0.
Term LeadingTerm(const Polynomial& f, const MonomialOrder& order);

// q with a = q*b when b divides a exactly, nullopt otherwise.
std::optional<Polynomial> ExactQuotient(const Polynomial& a, const Polynomial& b);

std::vector<std::string> DefaultNames(const std::string& stem, std::size_t count);

}  // namespace superkrull

#endif  // SUPERKRULL_POLYNOMIAL_H_
