#include "superkrull/superpoly.h"

#include <algorithm>
#include <bit>

#include "superkrull/errors.h"

namespace superkrull {

OddMonomial OddMonomial::FromIndices(std::span<const std::size_t> indices) {
  std::uint32_t mask = 0;
  for (std::size_t i : indices) {
    if (i == 0 || i > kMaxOddVariables) {
      throw ArgumentError("odd index " + std::to_string(i) + " out of range");
    }
    const std::uint32_t bit = 1u << (i - 1);
    if (mask & bit) throw ArgumentError("repeated odd index " + std::to_string(i));
    mask |= bit;
  }
  return OddMonomial(mask);
}

OddMonomial OddMonomial::FromIndices(std::initializer_list<std::size_t> indices) {
  return FromIndices(std::span<const std::size_t>(indices.begin(), indices.size()));
}

std::size_t OddMonomial::size() const { return std::popcount(mask_); }

std::vector<std::size_t> OddMonomial::Indices() const {
  std::vector<std::size_t> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
  }
  return out;
}

std::string OddMonomial::ToString(std::span<const std::string> names) const {
  if (mask_ == 0) return "1";
  std::string out;
  for (std::size_t i : Indices()) {
    if (!out.empty()) out += '*';
    out += i - 1 < names.size() ? names[i - 1] : "y" + std::to_string(i);
  }
  return out;
}

bool LexLess(OddMonomial a, OddMonomial b) {
  const auto ia = a.Indices();
  const auto ib = b.Indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

int KoszulSign(OddMonomial a, OddMonomial b) {
  if (a.Meets(b)) return 0;
  unsigned inversions = 0;
  for (std::uint32_t m = b.mask(); m != 0; m &= m - 1) {
    const unsigned j = std::countr_zero(m);
    const std::uint32_t above = j >= 31 ? 0u : ~((2u << j) - 1u);
    inversions += std::popcount(a.mask() & above);
  }
  return (inversions & 1u) ? -1 : 1;
}

std::string ToString(Parity parity) {
  switch (parity) {
    case Parity::kZero: return "zero";
    case Parity::kEven: return "even";
    case Parity::kOdd: return "odd";
    case Parity::kMixed: return "mixed";
  }
  return "unknown";
}

namespace {

// (|I|, lex) ascending; the canonical printing order of odd parts.
bool CanonicalLess(OddMonomial a, OddMonomial b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return LexLess(a, b);
}

std::string TermString(const Polynomial& coefficient, OddMonomial odd,
                       std::span<const std::string> even_names,
                       std::span<const std::string> odd_names, bool first) {
  if (odd.empty()) {
    std::string s = coefficient.ToString(even_names);
    if (first) return s;
    if (s[0] == '-') return " - " + s.substr(1);
    return " + " + s;
  }
  std::string out;
  const std::string y = odd.ToString(odd_names);
  for (const Term& t : coefficient.terms()) {
    Scalar c = t.coefficient;
    const bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (out.empty() && first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!c.is_one()) out += c.ToString() + "*";
    if (!t.monomial.is_one()) out += t.monomial.ToString(even_names) + "*";
    out += y;
  }
  return out;
}

}  // namespace

ModuleVector ModuleVector::Unit(Field field, std::size_t m, OddMonomial position) {
  ModuleVector v(field, m);
  v.coords_.emplace(position, Polynomial::Constant(field, m, 1));
  return v;
}

Polynomial ModuleVector::At(OddMonomial position) const {
  auto it = coords_.find(position);
  return it == coords_.end() ? Polynomial(field_, m_) : it->second;
}

void ModuleVector::Add(OddMonomial position, const Polynomial& value) {
  if (value.is_zero()) return;
  if (!(value.field() == field_) || value.nvars() != m_) {
    throw ArgumentError("module coordinate does not match the ambient ring");
  }
  auto [it, inserted] = coords_.emplace(position, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

ModuleVector ModuleVector::Scaled(const Polynomial& a) const {
  ModuleVector out(field_, m_);
  for (const auto& [pos, c] : coords_) out.Add(pos, c * a);
  return out;
}

ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
  ModuleVector out = a;
  for (const auto& [pos, c] : b.coords_) out.Add(pos, c);
  return out;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  return a.field_ == b.field_ && a.m_ == b.m_ && a.coords_ == b.coords_;
}

std::string ModuleVector::ToString(std::span<const std::string> even_names,
                                   std::span<const std::string> odd_names) const {
  if (coords_.empty()) return "0";
  std::vector<OddMonomial> keys;
  for (const auto& [pos, c] : coords_) keys.push_back(pos);
  std::sort(keys.begin(), keys.end(), CanonicalLess);
  std::string out;
  for (OddMonomial k : keys) {
    if (!out.empty()) out += ", ";
    out += "[" + k.ToString(odd_names) + "] " + coords_.at(k).ToString(even_names);
  }
  return out;
}

SuperPolynomial::SuperPolynomial(Field field, std::size_t m, std::size_t n)
    : field_(field), m_(m), n_(n) {
  if (n > kMaxOddVariables) {
    throw ArgumentError("at most " + std::to_string(kMaxOddVariables) +
                        " odd variables are supported");
  }
}

SuperPolynomial SuperPolynomial::Constant(Field field, std::size_t m, std::size_t n,
                                          long c) {
  return Constant(field, m, n, Scalar::FromInt(field, c));
}

SuperPolynomial SuperPolynomial::Constant(Field field, std::size_t m, std::size_t n,
                                          const Scalar& c) {
  SuperPolynomial f(field, m, n);
  if (!c.is_zero()) f.parts_.emplace(OddMonomial(), Polynomial::Constant(field, m, c));
  return f;
}

SuperPolynomial SuperPolynomial::EvenVariable(Field field, std::size_t m,
                                              std::size_t n, std::size_t index) {
  SuperPolynomial f(field, m, n);
  f.parts_.emplace(OddMonomial(), Polynomial::Variable(field, m, index));
  return f;
}

SuperPolynomial SuperPolynomial::OddVariable(Field field, std::size_t m,
                                             std::size_t n, std::size_t index) {
  if (index == 0 || index > n) throw ArgumentError("odd variable index out of range");
  return OddTerm(field, m, n, OddMonomial(1u << (index - 1)), Scalar::One(field));
}

SuperPolynomial SuperPolynomial::OddTerm(Field field, std::size_t m, std::size_t n,
                                         OddMonomial odd) {
  return OddTerm(field, m, n, odd, Scalar::One(field));
}

SuperPolynomial SuperPolynomial::OddTerm(Field field, std::size_t m, std::size_t n,
                                         OddMonomial odd, const Scalar& c) {
  SuperPolynomial f(field, m, n);
  f.AddTerm(odd, Polynomial::Constant(field, m, c));
  return f;
}

SuperPolynomial SuperPolynomial::FromEven(const Polynomial& even, std::size_t n) {
  SuperPolynomial f(even.field(), even.nvars(), n);
  if (!even.is_zero()) f.parts_.emplace(OddMonomial(), even);
  return f;
}

SuperPolynomial SuperPolynomial::FromVector(const ModuleVector& v, std::size_t n) {
  SuperPolynomial f(v.field(), v.nvars(), n);
  for (const auto& [pos, c] : v.coordinates()) {
    if (pos.mask() >> n) throw ArgumentError("module position exceeds odd arity");
    f.parts_.emplace(pos, c);
  }
  return f;
}

Polynomial SuperPolynomial::Coefficient(OddMonomial odd) const {
  auto it = parts_.find(odd);
  return it == parts_.end() ? Polynomial(field_, m_) : it->second;
}

std::size_t SuperPolynomial::TermCount() const {
  std::size_t count = 0;
  for (const auto& [odd, c] : parts_) count += c.size();
  return count;
}

void SuperPolynomial::CheckCompatible(const SuperPolynomial& other) const {
  if (!(field_ == other.field_)) {
    throw ArgumentError("field mismatch: " + field_.ToString() + " vs " +
                        other.field_.ToString());
  }
  if (m_ != other.m_ || n_ != other.n_) {
    throw ArgumentError("ambient superalgebra mismatch: K[" + std::to_string(m_) +
                        "|" + std::to_string(n_) + "] vs K[" +
                        std::to_string(other.m_) + "|" + std::to_string(other.n_) + "]");
  }
}

void SuperPolynomial::AddTerm(OddMonomial odd, const Polynomial& a) {
  if (a.is_zero()) return;
  if (!(a.field() == field_) || a.nvars() != m_) {
    throw ArgumentError("coefficient does not match the ambient superalgebra");
  }
  if (odd.mask() >> n_) throw ArgumentError("odd monomial exceeds odd arity");
  auto [it, inserted] = parts_.emplace(odd, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial f = *this;
  for (auto& [odd, c] : f.parts_) c = -c;
  return f;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& other) {
  CheckCompatible(other);
  for (const auto& [odd, c] : other.parts_) {
    auto [it, inserted] = parts_.emplace(odd, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) parts_.erase(it);
    }
  }
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& other) {
  return *this += -other;
}

SuperPolynomial SuperPolynomial::Scaled(const Scalar& c) const {
  SuperPolynomial f(field_, m_, n_);
  if (c.is_zero()) return f;
  for (const auto& [odd, a] : parts_) f.parts_.emplace(odd, a.Scaled(c));
  return f;
}

SuperPolynomial SuperPolynomial::ScaledBy(const Polynomial& a) const {
  SuperPolynomial f(field_, m_, n_);
  for (const auto& [odd, b] : parts_) {
    Polynomial p = b * a;
    if (!p.is_zero()) f.parts_.emplace(odd, std::move(p));
  }
  return f;
}

SuperPolynomial SuperPolynomial::ParityPart(int parity) const {
  SuperPolynomial f(field_, m_, n_);
  for (const auto& [odd, a] : parts_) {
    if (static_cast<int>(odd.size() % 2) == parity) f.parts_.emplace(odd, a);
  }
  return f;
}

SuperPolynomial SuperPolynomial::DegreePart(std::size_t d) const {
  SuperPolynomial f(field_, m_, n_);
  for (const auto& [odd, a] : parts_) {
    if (odd.size() == d) f.parts_.emplace(odd, a);
  }
  return f;
}

bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
  return a.field_ == b.field_ && a.m_ == b.m_ && a.n_ == b.n_ && a.parts_ == b.parts_;
}

std::string SuperPolynomial::ToString(std::span<const std::string> even_names,
                                      std::span<const std::string> odd_names) const {
  if (parts_.empty()) return "0";
  std::vector<OddMonomial> keys;
  for (const auto& [odd, c] : parts_) keys.push_back(odd);
  std::sort(keys.begin(), keys.end(), CanonicalLess);
  std::string out;
  for (OddMonomial k : keys) {
    out += TermString(parts_.at(k), k, even_names, odd_names, out.empty());
  }
  return out;
}

SuperPolynomial SuperMul(const SuperPolynomial& f, const SuperPolynomial& g) {
  SuperPolynomial out(f.field(), f.m(), f.n());
  out += SuperPolynomial(g.field(), g.m(), g.n());  // compatibility check
  for (const auto& [i, a] : f.parts()) {
    for (const auto& [j, b] : g.parts()) {
      const int sign = KoszulSign(i, j);
      if (sign == 0) continue;
      Polynomial c = a * b;
      if (sign < 0) c = -c;
      out.AddTerm(i | j, c);
    }
  }
  return out;
}

Parity ParityOf(const SuperPolynomial& f) {
  bool even = false;
  bool odd = false;
  for (const auto& [i, a] : f.parts()) {
    (i.size() % 2 == 0 ? even : odd) = true;
  }
  if (even && odd) return Parity::kMixed;
  if (even) return Parity::kEven;
  if (odd) return Parity::kOdd;
  return Parity::kZero;
}

Polynomial Bar(const SuperPolynomial& f) { return f.Coefficient(OddMonomial()); }

ModuleVector ToVector(const SuperPolynomial& f) {
  ModuleVector v(f.field(), f.m());
  for (const auto& [i, a] : f.parts()) v.Add(i, a);
  return v;
}

std::vector<ModuleVector> SuperidealModuleGenerators(
    std::span<const SuperPolynomial> gens) {
  std::vector<ModuleVector> out;
  for (const SuperPolynomial& g : gens) {
    const Parity parity = ParityOf(g);
    if (parity == Parity::kMixed) {
      throw ArgumentError("inhomogeneous generator " + g.ToString());
    }
    if (parity == Parity::kZero) continue;
    const std::uint32_t full = g.n() == 32 ? ~0u : (1u << g.n());
    for (std::uint32_t l = 0; l < full; ++l) {
      const SuperPolynomial y = SuperPolynomial::OddTerm(g.field(), g.m(), g.n(),
                                                          OddMonomial(l),
                                                          Scalar::One(g.field()));
      const SuperPolynomial product = SuperMul(y, g);
      if (!product.is_zero()) out.push_back(ToVector(product));
    }
  }
  return out;
}

SuperPolynomial UnitInverse(const SuperPolynomial& u) {
  const Polynomial b = Bar(u);
  if (b.is_zero() || !b.is_constant()) {
    throw ArgumentError("not a unit: the even reduction " + b.ToString() +
                        " is not a nonzero constant");
  }
  const Scalar c = b.ConstantTerm();
  const Scalar c_inv = c.Inverse();
  // u = c (1 + N) with N nilpotent; u^{-1} = c^{-1} sum_k (-N)^k.
  const SuperPolynomial minus_n =
      (u - SuperPolynomial::Constant(u.field(), u.m(), u.n(), c)).Scaled(-c_inv);
  SuperPolynomial power = SuperPolynomial::Constant(u.field(), u.m(), u.n(), 1);
  SuperPolynomial sum = power;
  for (std::size_t k = 0; k <= u.n(); ++k) {
    power = SuperMul(power, minus_n);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum.Scaled(c_inv);
}

}  // namespace superkrull
