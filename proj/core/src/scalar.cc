#include "superkrull/scalar.h"

#include <cctype>
#include <string>

#include "superkrull/errors.h"

namespace superkrull {
namespace {

std::uint64_t Reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool IsPrime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::Prime(std::uint32_t p) {
  if (!IsPrime(p)) {
    throw ArgumentError("modulus " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

std::string Field::ToString() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::Zero(Field field) { return FromInt(field, 0); }
Scalar Scalar::One(Field field) { return FromInt(field, 1); }

Scalar Scalar::FromInt(Field field, long value) {
  if (field.is_rational()) return Scalar(field, mpq_class(value));
  return Scalar(field, Reduce(mpz_class(value), field.characteristic()));
}

Scalar Scalar::FromRational(Field field, const mpq_class& value) {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    return Scalar(field, q);
  }
  const std::uint32_t p = field.characteristic();
  const std::uint64_t den = Reduce(value.get_den(), p);
  if (den == 0) {
    throw ArgumentError("denominator vanishes in " + field.ToString());
  }
  const std::uint64_t num = Reduce(value.get_num(), p);
  return Scalar(field, num * PowMod(den, p - 2, p) % p);
}

Scalar Scalar::Parse(Field field, std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den)) {
    throw ArgumentError("malformed scalar '" + s + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num);
  mpz_class d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw ArgumentError("zero denominator in '" + s + "'");
  return FromRational(field, mpq_class(n, d));
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

int Scalar::sign() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_));
  return is_zero() ? 0 : 1;
}

void Scalar::CheckSameField(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw ArgumentError("field mismatch: " + field_.ToString() + " vs " +
                        other.field_.ToString());
  }
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  const std::uint64_t v = std::get<std::uint64_t>(value_);
  return Scalar(field_, v == 0 ? 0 : field_.characteristic() - v);
}

Scalar& Scalar::operator+=(const Scalar& other) {
  CheckSameField(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + std::get<std::uint64_t>(other.value_)) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  CheckSameField(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = v * std::get<std::uint64_t>(other.value_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.Inverse(); }

Scalar Scalar::Inverse() const {
  if (is_zero()) throw ArgumentError("division by zero");
  if (field_.is_rational()) {
    return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
  }
  const std::uint64_t p = field_.characteristic();
  return Scalar(field_, PowMod(std::get<std::uint64_t>(value_), p - 2, p));
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

mpq_class Scalar::ToRational() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_);
  return mpq_class(static_cast<unsigned long>(std::get<std::uint64_t>(value_)));
}

std::string Scalar::ToString() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace superkrull
