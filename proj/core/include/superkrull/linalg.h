#ifndef SUPERKRULL_LINALG_H_
#define SUPERKRULL_LINALG_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "superkrull/polynomial.h"

namespace superkrull {

// Sparse vectors keyed by column id, sorted ascending, no zero entries.
using ScalarVector = std::vector<std::pair<std::uint32_t, Scalar>>;
using PolyVector = std::vector<std::pair<std::uint32_t, Polynomial>>;

// Incremental row echelon form over the field K.
class ScalarEchelon {
 public:
  explicit ScalarEchelon(Field field) : field_(field) {}

  // Adds v to the span; true when the rank grew.
  bool Insert(ScalarVector v);
  bool Contains(ScalarVector v) const;
  // Residual of v after elimination against the current rows.
  ScalarVector Reduce(ScalarVector v) const;
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

 private:
  Field field_;
  // Rows normalized to 1 at their pivot column.
  std::vector<ScalarVector> rows_;
  std::vector<std::uint32_t> pivots_;
};

// Incremental fraction-free (Bareiss) echelon form over K[X]. Spans and
// ranks are those over the fraction field K(X).
class PolyEchelon {
 public:
  PolyEchelon(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  bool Insert(PolyVector v);
  bool Contains(PolyVector v) const;
  PolyVector Reduce(PolyVector v) const;
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  const std::vector<PolyVector>& rows() const { return rows_; }

 private:
  Field field_;
  std::size_t nvars_;
  std::vector<PolyVector> rows_;
  std::vector<std::uint32_t> pivots_;
};

// Determinant of a square matrix over K[X] by fraction-free elimination.
Polynomial Determinant(std::vector<std::vector<Polynomial>> matrix, Field field,
                       std::size_t nvars);

}  // namespace superkrull

#endif  // SUPERKRULL_LINALG_H_
