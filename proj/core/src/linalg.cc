#include "superkrull/linalg.h"

#include <algorithm>
#include <optional>

#include "superkrull/errors.h"

namespace superkrull {
namespace {

template <typename V>
const typename V::value_type::second_type* Find(const V& v, std::uint32_t column) {
  auto it = std::lower_bound(v.begin(), v.end(), column,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  if (it == v.end() || it->first != column) return nullptr;
  return &it->second;
}

// a*u - b*w for sparse vectors u, w and ring elements a, b.
template <typename V, typename E>
V Combine(const E& a, const V& u, const E& b, const V& w) {
  V out;
  out.reserve(u.size() + w.size());
  auto i = u.begin();
  auto j = w.begin();
  while (i != u.end() || j != w.end()) {
    if (j == w.end() || (i != u.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == u.end() || j->first < i->first) {
      out.emplace_back(j->first, -(b * j->second));
      ++j;
    } else {
      E e = a * i->second - b * j->second;
      if (!e.is_zero()) out.emplace_back(i->first, std::move(e));
      ++i;
      ++j;
    }
  }
  return out;
}

void CheckSorted(const auto& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1].first >= v[i].first) throw ArgumentError("sparse vector is not sorted");
  }
  for (const auto& e : v) {
    if (e.second.is_zero()) throw ArgumentError("sparse vector stores a zero");
  }
}

}  // namespace

ScalarVector ScalarEchelon::Reduce(ScalarVector v) const {
  CheckSorted(v);
  const Scalar one = Scalar::One(field_);
  for (std::size_t k = 0; k < rows_.size() && !v.empty(); ++k) {
    const Scalar* c = Find(v, pivots_[k]);
    if (c == nullptr) continue;
    const Scalar factor = *c;
    v = Combine(one, v, factor, rows_[k]);
  }
  return v;
}

bool ScalarEchelon::Contains(ScalarVector v) const { return Reduce(std::move(v)).empty(); }

bool ScalarEchelon::Insert(ScalarVector v) {
  v = Reduce(std::move(v));
  if (v.empty()) return false;
  const Scalar inv = v.front().second.Inverse();
  for (auto& e : v) e.second *= inv;
  pivots_.push_back(v.front().first);
  rows_.push_back(std::move(v));
  return true;
}

// Row k holds the k-th Bareiss stage; a new vector passes the same stages:
// v <- (p_k v - v[c_k] R_k) / p_{k-1}, all divisions exact.
PolyVector PolyEchelon::Reduce(PolyVector v) const {
  CheckSorted(v);
  Polynomial previous = Polynomial::Constant(field_, nvars_, 1);
  for (std::size_t k = 0; k < rows_.size() && !v.empty(); ++k) {
    const Polynomial& pivot = *Find(rows_[k], pivots_[k]);
    const Polynomial* c = Find(v, pivots_[k]);
    if (c == nullptr) {
      if (!pivot.is_constant() || !previous.is_constant()) {
        for (auto& e : v) e.second = e.second * pivot;
      } else {
        const Scalar s = pivot.ConstantTerm();
        for (auto& e : v) e.second = e.second.Scaled(s);
      }
    } else {
      const Polynomial factor = *c;
      v = Combine(pivot, v, factor, rows_[k]);
    }
    if (previous.is_constant()) {
      const Scalar inv = previous.ConstantTerm().Inverse();
      if (!inv.is_one()) {
        for (auto& e : v) e.second = e.second.Scaled(inv);
      }
    } else {
      for (auto& e : v) {
        std::optional<Polynomial> q = ExactQuotient(e.second, previous);
        if (!q) throw InvariantError("fraction-free elimination lost exactness");
        e.second = std::move(*q);
      }
    }
    previous = pivot;
  }
  return v;
}

bool PolyEchelon::Contains(PolyVector v) const { return Reduce(std::move(v)).empty(); }

bool PolyEchelon::Insert(PolyVector v) {
  v = Reduce(std::move(v));
  if (v.empty()) return false;
  // Smallest entry as pivot keeps the minors small.
  auto best = v.begin();
  for (auto it = v.begin(); it != v.end(); ++it) {
    const auto key = std::make_pair(it->second.degree(), it->second.size());
    if (key < std::make_pair(best->second.degree(), best->second.size())) best = it;
  }
  pivots_.push_back(best->first);
  rows_.push_back(std::move(v));
  return true;
}

Polynomial Determinant(std::vector<std::vector<Polynomial>> a, Field field,
                       std::size_t nvars) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw ArgumentError("determinant of a non-square matrix");
  }
  if (n == 0) return Polynomial::Constant(field, nvars, 1);
  bool negate = false;
  Polynomial previous = Polynomial::Constant(field, nvars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k].is_zero()) ++swap;
      if (swap == n) return Polynomial(field, nvars);
      std::swap(a[k], a[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        std::optional<Polynomial> q = ExactQuotient(num, previous);
        if (!q) throw InvariantError("fraction-free determinant lost exactness");
        a[i][j] = std::move(*q);
      }
    }
    previous = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace superkrull
