#ifndef SUPERKRULL_SUPERPOLY_H_
#define SUPERKRULL_SUPERPOLY_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "superkrull/polynomial.h"

namespace superkrull {

// Largest supported number of odd generators; module rank is 2^n.
inline constexpr std::size_t kMaxOddVariables = 24;

// y^I = y_{i1} * ... * y_{ik} with i1 < ... < ik, stored as a bitmask where
// bit (i-1) stands for y_i.
class OddMonomial {
 public:
  constexpr OddMonomial() = default;
  constexpr explicit OddMonomial(std::uint32_t mask) : mask_(mask) {}
  // 1-based indices in any order; duplicates are rejected.
  static OddMonomial FromIndices(std::span<const std::size_t> indices);
  static OddMonomial FromIndices(std::initializer_list<std::size_t> indices);

  constexpr std::uint32_t mask() const { return mask_; }
  std::size_t size() const;
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool Contains(std::size_t index) const {
    return (mask_ >> (index - 1)) & 1u;
  }
  constexpr bool SubsetOf(OddMonomial other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool Meets(OddMonomial other) const { return (mask_ & other.mask_) != 0; }
  // Sorted 1-based indices.
  std::vector<std::size_t> Indices() const;

  friend constexpr OddMonomial operator|(OddMonomial a, OddMonomial b) {
    return OddMonomial(a.mask_ | b.mask_);
  }
  friend constexpr OddMonomial operator&(OddMonomial a, OddMonomial b) {
    return OddMonomial(a.mask_ & b.mask_);
  }
  friend constexpr bool operator==(OddMonomial, OddMonomial) = default;
  // Numeric order on masks; used only for container keys.
  friend constexpr auto operator<=>(OddMonomial, OddMonomial) = default;

  std::string ToString(std::span<const std::string> names = {}) const;

 private:
  std::uint32_t mask_ = 0;
};

// Lexicographic comparison of the sorted index lists.
bool LexLess(OddMonomial a, OddMonomial b);

// Sign of y^a * y^b relative to y^(a|b): 0 when a and b meet, otherwise
// (-1)^#{(i,j) in a x b : i > j}.
int KoszulSign(OddMonomial a, OddMonomial b);

enum class Parity { kZero, kEven, kOdd, kMixed };
std::string ToString(Parity parity);

// Element of the free K[X]-module with basis {y^I}.
class ModuleVector {
 public:
  ModuleVector() = default;
  ModuleVector(Field field, std::size_t m) : field_(field), m_(m) {}

  static ModuleVector Unit(Field field, std::size_t m, OddMonomial position);

  Field field() const { return field_; }
  std::size_t nvars() const { return m_; }
  const std::map<OddMonomial, Polynomial>& coordinates() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Polynomial At(OddMonomial position) const;
  void Add(OddMonomial position, const Polynomial& value);

  ModuleVector Scaled(const Polynomial& a) const;
  friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b);
  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

  std::string ToString(std::span<const std::string> even_names = {},
                       std::span<const std::string> odd_names = {}) const;

 private:
  Field field_;
  std::size_t m_ = 0;
  std::map<OddMonomial, Polynomial> coords_;
};

// Element of K[x1..xm | y1..yn]: a finite sum of a_I(x) * y^I.
class SuperPolynomial {
 public:
  SuperPolynomial() = default;
  SuperPolynomial(Field field, std::size_t m, std::size_t n);

  static SuperPolynomial Constant(Field field, std::size_t m, std::size_t n, long c);
  static SuperPolynomial Constant(Field field, std::size_t m, std::size_t n,
                                  const Scalar& c);
  static SuperPolynomial EvenVariable(Field field, std::size_t m, std::size_t n,
                                      std::size_t index);
  // y_index for 1-based index.
  static SuperPolynomial OddVariable(Field field, std::size_t m, std::size_t n,
                                     std::size_t index);
  // c * y^odd (c = 1 when omitted).
  static SuperPolynomial OddTerm(Field field, std::size_t m, std::size_t n,
                                 OddMonomial odd);
  static SuperPolynomial OddTerm(Field field, std::size_t m, std::size_t n,
                                 OddMonomial odd, const Scalar& c);
  static SuperPolynomial FromEven(const Polynomial& even, std::size_t n);
  static SuperPolynomial FromVector(const ModuleVector& v, std::size_t n);

  Field field() const { return field_; }
  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  const std::map<OddMonomial, Polynomial>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  // Coefficient a_I of y^I.
  Polynomial Coefficient(OddMonomial odd) const;
  std::size_t TermCount() const;
  // Adds a * y^odd.
  void AddTerm(OddMonomial odd, const Polynomial& a);

  SuperPolynomial operator-() const;
  SuperPolynomial& operator+=(const SuperPolynomial& other);
  SuperPolynomial& operator-=(const SuperPolynomial& other);
  SuperPolynomial Scaled(const Scalar& c) const;
  SuperPolynomial ScaledBy(const Polynomial& a) const;
  // Homogeneous component of the given odd-degree parity (0 even, 1 odd).
  SuperPolynomial ParityPart(int parity) const;
  // Component of exact odd degree d.
  SuperPolynomial DegreePart(std::size_t d) const;

  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) {
    return a += b;
  }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) {
    return a -= b;
  }
  friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b);

  std::string ToString(std::span<const std::string> even_names = {},
                       std::span<const std::string> odd_names = {}) const;

 private:
  void CheckCompatible(const SuperPolynomial& other) const;

  Field field_;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::map<OddMonomial, Polynomial> parts_;
};

// Bilinear product with y^I * y^J = KoszulSign(I, J) * y^(I|J).
SuperPolynomial SuperMul(const SuperPolynomial& f, const SuperPolynomial& g);
Parity ParityOf(const SuperPolynomial& f);
// Image under Y -> 0.
Polynomial Bar(const SuperPolynomial& f);
ModuleVector ToVector(const SuperPolynomial& f);
// {y^L * g : L subset of {1..n}, g in gens} without zero products, as module
// vectors; their K[X]-span is the super-ideal generated by gens. Throws
// ArgumentError for an inhomogeneous generator.
std::vector<ModuleVector> SuperidealModuleGenerators(
    std::span<const SuperPolynomial> gens);
// Inverse of u when Bar(u) is a nonzero constant. Throws ArgumentError
// otherwise.
SuperPolynomial UnitInverse(const SuperPolynomial& u);

}  // namespace superkrull

#endif  // SUPERKRULL_SUPERPOLY_H_
