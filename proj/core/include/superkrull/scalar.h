#ifndef SUPERKRULL_SCALAR_H_
#define SUPERKRULL_SCALAR_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace superkrull {

// Coefficient field: the rationals or a prime field GF(p).
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field Rationals() { return Field(); }
  // Throws ArgumentError unless p is prime.
  static Field Prime(std::uint32_t p);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint32_t characteristic() const { return p_; }

  std::string ToString() const;

  friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

 private:
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool IsPrime(std::uint64_t p);

// An exact element of a Field. Rationals are kept in lowest terms with a
// positive denominator; residues live in [0, p).
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}

  static Scalar Zero(Field field);
  static Scalar One(Field field);
  static Scalar FromInt(Field field, long value);
  static Scalar FromRational(Field field, const mpq_class& value);
  // Accepts "a" or "a/b" with optional leading sign.
  static Scalar Parse(Field field, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  // Sign of the rational value; residues report 0 or 1.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar Inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Rational value for Q; the canonical residue representative otherwise.
  mpq_class ToRational() const;
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  std::string ToString() const;

 private:
  Scalar(Field field, std::variant<mpq_class, std::uint64_t> value)
      : field_(field), value_(std::move(value)) {}
  void CheckSameField(const Scalar& other) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace superkrull

#endif  // SUPERKRULL_SCALAR_H_
