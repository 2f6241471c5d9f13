#include "superkrull/parser.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "superkrull/errors.h"

namespace superkrull {
namespace {

constexpr unsigned long kMaxExponent = 1000;

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool IsIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Ring {
  Field field;
  std::size_t m = 0;
  std::size_t n = 0;
  std::map<std::string, SuperPolynomial, std::less<>> symbols;
};

Ring MakeRing(Field field, const std::vector<std::string>& even,
              const std::vector<std::string>& odd) {
  Ring ring{field, even.size(), odd.size(), {}};
  for (std::size_t i = 0; i < even.size(); ++i) {
    ring.symbols[even[i]] = SuperPolynomial::EvenVariable(field, ring.m, ring.n, i);
  }
  for (std::size_t i = 0; i < odd.size(); ++i) {
    ring.symbols[odd[i]] = SuperPolynomial::OddVariable(field, ring.m, ring.n, i + 1);
  }
  return ring;
}

// Recursive descent over a single line.
class ExpressionParser {
 public:
  ExpressionParser(const Ring& ring, std::string_view text, std::size_t line,
                   std::size_t column_offset)
      : ring_(ring), text_(text), line_(line), offset_(column_offset) {}

  SuperPolynomial Parse() {
    SkipSpace();
    if (AtEnd()) Fail("empty expression");
    SuperPolynomial out = Sum();
    SkipSpace();
    if (!AtEnd()) Fail(std::string("unexpected '") + text_[pos_] + "'");
    return out;
  }

 private:
  SuperPolynomial Sum() {
    SuperPolynomial acc = Product();
    for (;;) {
      SkipSpace();
      if (Accept('+')) {
        acc += Product();
      } else if (Accept('-')) {
        acc -= Product();
      } else {
        return acc;
      }
    }
  }

  SuperPolynomial Product() {
    SuperPolynomial acc = Unary();
    for (;;) {
      SkipSpace();
      if (!Accept('*')) return acc;
      acc = SuperMul(acc, Unary());
    }
  }

  SuperPolynomial Unary() {
    SkipSpace();
    if (Accept('-')) return -Unary();
    if (Accept('+')) return Unary();
    return Power();
  }

  SuperPolynomial Power() {
    SuperPolynomial base = Atom();
    SkipSpace();
    if (!Accept('^')) return base;
    SkipSpace();
    const std::size_t at = pos_;
    const std::string digits = Digits();
    if (digits.empty()) Fail("expected a non-negative integer exponent");
    unsigned long e = 0;
    if (digits.size() > 4 || (e = std::stoul(digits)) > kMaxExponent) {
      FailAt(at, "exponent too large");
    }
    SuperPolynomial out = SuperPolynomial::Constant(ring_.field, ring_.m, ring_.n, 1);
    for (unsigned long i = 0; i < e && !out.is_zero(); ++i) out = SuperMul(out, base);
    return out;
  }

  SuperPolynomial Atom() {
    SkipSpace();
    if (AtEnd()) Fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SuperPolynomial inner = Sum();
      SkipSpace();
      if (!Accept(')')) Fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string number = Digits();
      SkipSpace();
      if (Accept('/')) {
        SkipSpace();
        const std::string den = Digits();
        if (den.empty()) Fail("expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos) Fail("zero denominator");
        number += "/" + den;
      }
      return SuperPolynomial::Constant(ring_.field, ring_.m, ring_.n,
                                       Scalar::Parse(ring_.field, number));
    }
    if (IsIdentStart(c)) {
      const std::size_t start = pos_;
      while (!AtEnd() && IsIdentChar(text_[pos_])) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      auto it = ring_.symbols.find(name);
      if (it == ring_.symbols.end()) {
        FailAt(start, "unknown identifier '" + std::string(name) + "'");
      }
      return it->second;
    }
    Fail(std::string("unexpected '") + c + "'");
  }

  std::string Digits() {
    const std::size_t start = pos_;
    while (!AtEnd() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool Accept(char c) {
    if (!AtEnd() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool AtEnd() const { return pos_ >= text_.size(); }

  [[noreturn]] void Fail(const std::string& message) const { FailAt(pos_, message); }
  [[noreturn]] void FailAt(std::size_t at, const std::string& message) const {
    throw ParseError(message, line_, offset_ + at + 1);
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::vector<std::pair<std::string, std::size_t>> Words(std::string_view text) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.emplace_back(std::string(text.substr(start, i - start)), start);
  }
  return out;
}

Field ParseField(const std::string& word, std::size_t line, std::size_t column) {
  if (word == "Q") return Field::Rationals();
  if (word.size() > 4 && word.starts_with("GF(") && word.back() == ')') {
    const std::string digits = word.substr(3, word.size() - 4);
    if (!digits.empty() && digits.size() <= 9 &&
        digits.find_first_not_of("0123456789") == std::string::npos) {
      const unsigned long p = std::stoul(digits);
      if (!IsPrime(p)) throw ParseError("modulus " + digits + " is not prime", line, column);
      return Field::Prime(static_cast<std::uint32_t>(p));
    }
  }
  throw ParseError("expected Q or GF(p), got '" + word + "'", line, column);
}

}  // namespace

SuperPresentation ParsePresentation(std::string_view text) {
  std::optional<Field> field;
  std::optional<std::vector<std::string>> even, odd;
  bool in_relations = false;
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> pending;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto words = Words(line);
    if (words.empty()) continue;
    last_line = line_no;
    const auto& [head, head_col] = words.front();
    if (in_relations) {
      pending.push_back({std::string(line), {line_no, 0}});
      continue;
    }
    if (head == "field") {
      if (field) throw ParseError("duplicate field line", line_no, head_col + 1);
      if (words.size() != 2) throw ParseError("expected 'field Q' or 'field GF(p)'", line_no, head_col + 1);
      field = ParseField(words[1].first, line_no, words[1].second + 1);
    } else if (head == "even" || head == "odd") {
      auto& target = head == "even" ? even : odd;
      if (target) throw ParseError("duplicate '" + head + "' line", line_no, head_col + 1);
      target.emplace();
      for (std::size_t i = 1; i < words.size(); ++i) {
        const std::string& name = words[i].first;
        if (!IsIdentStart(name[0]) ||
            !std::all_of(name.begin(), name.end(), IsIdentChar)) {
          throw ParseError("invalid identifier '" + name + "'", line_no, words[i].second + 1);
        }
        target->push_back(name);
      }
    } else if (head == "relations:" && words.size() == 1) {
      in_relations = true;
    } else {
      throw ParseError("unexpected '" + head + "'", line_no, head_col + 1);
    }
  }
  if (!field) throw ParseError("missing field line", last_line + 1, 1);
  if (!even) even.emplace();
  if (!odd) odd.emplace();

  {
    std::set<std::string> seen;
    for (const auto* names : {&*even, &*odd}) {
      for (const std::string& name : *names) {
        if (!seen.insert(name).second) {
          throw ParseError("generator '" + name + "' declared twice", 1, 1);
        }
      }
    }
  }
  if (odd->size() > kMaxOddVariables) {
    throw ParseError("at most " + std::to_string(kMaxOddVariables) + " odd generators",
                     1, 1);
  }

  const Ring ring = MakeRing(*field, *even, *odd);
  std::vector<SuperPolynomial> relations;
  for (const auto& [line, where] : pending) {
    const std::size_t lead = line.find_first_not_of(" \t");
    SuperPolynomial f =
        ExpressionParser(ring, std::string_view(line).substr(lead), where.first, lead)
            .Parse();
    switch (ParityOf(f)) {
      case Parity::kZero:
        throw ParseError("relation is zero", where.first, lead + 1);
      case Parity::kMixed:
        throw ParseError("inhomogeneous relation: found both even and odd terms",
                         where.first, lead + 1);
      default:
        break;
    }
    relations.push_back(std::move(f));
  }
  return SuperPresentation(*field, *even, *odd, std::move(relations));
}

SuperPolynomial ParseSuperPolynomial(const SuperPresentation& ring, std::string_view text) {
  const Ring r = MakeRing(ring.field(), ring.even_names(), ring.odd_names());
  return ExpressionParser(r, text, 1, 0).Parse();
}

}  // namespace superkrull
