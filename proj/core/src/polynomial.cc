#include "superkrull/polynomial.h"

#include <algorithm>
#include <numeric>

#include "superkrull/errors.h"

namespace superkrull {

Monomial Monomial::Variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exponents_.at(index) = 1;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](std::uint32_t e) { return e == 0; });
}

bool Monomial::Divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

std::uint64_t Monomial::Support() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents_.size(); ++i) r.exponents_[i] += b.exponents_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents_.size(); ++i) r.exponents_[i] -= b.exponents_[i];
  return r;
}

Monomial Lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents_.size(); ++i) {
    r.exponents_[i] = std::max(a.exponents_[i], b.exponents_[i]);
  }
  return r;
}

std::string Monomial::ToString(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

int MonomialOrder::Compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  if (kind_ == Kind::kLex) {
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t v = VariableAt(r);
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
  }
  const std::uint64_t da = a.degree();
  const std::uint64_t db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t r = n; r-- > 0;) {
    const std::size_t v = VariableAt(r);
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

std::string MonomialOrder::ToString() const {
  return kind_ == Kind::kLex ? "lex" : "grevlex";
}

Polynomial Polynomial::Constant(Field field, std::size_t nvars, const Scalar& c) {
  Polynomial p(field, nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::Constant(Field field, std::size_t nvars, long c) {
  return Constant(field, nvars, Scalar::FromInt(field, c));
}

Polynomial Polynomial::Variable(Field field, std::size_t nvars, std::size_t index) {
  Polynomial p(field, nvars);
  p.terms_.push_back({Monomial::Variable(nvars, index), Scalar::One(field)});
  return p;
}

Polynomial Polynomial::FromTerm(Field field, const Monomial& m, const Scalar& c) {
  Polynomial p(field, m.nvars());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::FromTerms(Field field, std::size_t nvars,
                                 std::vector<Term> terms, MonomialOrder order) {
  Polynomial p(field, nvars, std::move(order));
  for (const Term& t : terms) {
    if (t.monomial.nvars() != nvars) throw ArgumentError("monomial arity mismatch");
    if (!(t.coefficient.field() == field)) throw ArgumentError("field mismatch");
  }
  p.terms_ = std::move(terms);
  p.Normalize();
  return p;
}

void Polynomial::Normalize() {
  std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
    return order_.Greater(a.monomial, b.monomial);
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && merged.back().coefficient.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient.is_zero()) merged.pop_back();
  terms_ = std::move(merged);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Scalar Polynomial::ConstantTerm() const {
  for (const Term& t : terms_) {
    if (t.monomial.is_one()) return t.coefficient;
  }
  return Scalar::Zero(field_);
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Scalar Polynomial::CoefficientOf(const Monomial& m) const {
  for (const Term& t : terms_) {
    if (t.monomial == m) return t.coefficient;
  }
  return Scalar::Zero(field_);
}

Polynomial Polynomial::WithOrder(const MonomialOrder& order) const {
  Polynomial p(field_, nvars_, order);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(), [&order](const Term& a, const Term& b) {
    return order.Greater(a.monomial, b.monomial);
  });
  return p;
}

const Term& Polynomial::LeadingTerm() const {
  if (terms_.empty()) throw ArgumentError("leading term of the zero polynomial");
  return terms_.front();
}

void Polynomial::CheckCompatible(const Polynomial& other) const {
  if (!(field_ == other.field_)) {
    throw ArgumentError("field mismatch: " + field_.ToString() + " vs " +
                        other.field_.ToString());
  }
  if (nvars_ != other.nvars_) {
    throw ArgumentError("arity mismatch: " + std::to_string(nvars_) + " vs " +
                        std::to_string(other.nvars_) + " variables");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  CheckCompatible(other);
  if (other.terms_.empty()) return *this;
  const Polynomial* rhs = &other;
  Polynomial resorted;
  if (!(other.order_ == order_)) {
    resorted = other.WithOrder(order_);
    rhs = &resorted;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs->terms_.size());
  auto a = terms_.begin();
  auto b = rhs->terms_.begin();
  while (a != terms_.end() || b != rhs->terms_.end()) {
    int cmp;
    if (a == terms_.end()) {
      cmp = -1;
    } else if (b == rhs->terms_.end()) {
      cmp = 1;
    } else {
      cmp = order_.Compare(a->monomial, b->monomial);
    }
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back(*b++);
    } else {
      Scalar c = a->coefficient + b->coefficient;
      if (!c.is_zero()) out.push_back({std::move(a->monomial), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.CheckCompatible(b);
  Polynomial p(a.field_, a.nvars_, a.order_);
  if (a.terms_.empty() || b.terms_.empty()) return p;
  p.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      p.terms_.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    }
  }
  p.Normalize();
  return p;
}

Polynomial Polynomial::Scaled(const Scalar& c) const {
  Polynomial p(field_, nvars_, order_);
  if (c.is_zero()) return p;
  p.terms_ = terms_;
  for (Term& t : p.terms_) t.coefficient *= c;
  return p;
}

Polynomial Polynomial::MultipliedBy(const Monomial& m, const Scalar& c) const {
  Polynomial p(field_, nvars_, order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.monomial * m, t.coefficient * c});
  return p;
}

Polynomial Polynomial::Monic() const {
  if (terms_.empty()) return *this;
  return Scaled(terms_.front().coefficient.Inverse());
}

Polynomial Polynomial::Derivative(std::size_t variable) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    const std::uint32_t e = t.monomial[variable];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m[variable] = e - 1;
    out.push_back({std::move(m), t.coefficient * Scalar::FromInt(field_, e)});
  }
  return FromTerms(field_, nvars_, std::move(out), order_);
}

Scalar Polynomial::Evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw ArgumentError("evaluation point arity mismatch");
  Scalar sum = Scalar::Zero(field_);
  for (const Term& t : terms_) {
    Scalar v = t.coefficient;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_) || a.nvars_ != b.nvars_) return false;
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  return a.terms_ == b.WithOrder(a.order_).terms_;
}

std::string Polynomial::ToString(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    Scalar c = t.coefficient;
    const bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += c.ToString();
    } else if (c.is_one()) {
      out += t.monomial.ToString(names);
    } else {
      out += c.ToString() + "*" + t.monomial.ToString(names);
    }
  }
  return out;
}

Term LeadingTerm(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw ArgumentError("leading term of the zero polynomial");
  if (f.order() == order) return f.terms().front();
  const Term* best = &f.terms().front();
  for (const Term& t : f.terms()) {
    if (order.Greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

std::optional<Polynomial> ExactQuotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArgumentError("division by the zero polynomial");
  Polynomial rem = a.WithOrder(b.order());
  Polynomial quotient(a.field(), a.nvars(), b.order());
  const Term& lead = b.LeadingTerm();
  const Scalar inv = lead.coefficient.Inverse();
  while (!rem.is_zero()) {
    const Term& top = rem.LeadingTerm();
    if (!lead.monomial.Divides(top.monomial)) return std::nullopt;
    const Monomial m = top.monomial / lead.monomial;
    const Scalar c = top.coefficient * inv;
    quotient += Polynomial::FromTerm(a.field(), m, c);
    rem -= b.MultipliedBy(m, c);
  }
  return quotient.WithOrder(a.order());
}

std::vector<std::string> DefaultNames(const std::string& stem, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

}  // namespace superkrull
