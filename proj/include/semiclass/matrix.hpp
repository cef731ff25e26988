// Exact rational matrices with deterministic nullspace computation.
// Rows are stored sparsely (sorted (column, value) pairs); the moduli
// constraint systems reach ~25000 x 3375 and are far too large dense.
#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "semiclass/rational.hpp"

namespace semiclass {

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  // Entries must land in range; unsorted or duplicate columns are merged.
  void add_row(SparseRow entries);
  void set(std::size_t row, std::size_t col, const Rational& value);
  Rational get(std::size_t row, std::size_t col) const;

  const SparseRow& row(std::size_t r) const { return rows_[r]; }

 private:
  std::size_t cols_;
  std::vector<SparseRow> rows_;
};

struct NullspaceResult {
  // Canonical kernel basis: one vector per free column, ordered by free
  // column index, with value 1 in that column.
  std::vector<std::vector<Rational>> basis;
  std::size_t rank = 0;
};

// Exact Gauss-Jordan elimination to reduced row echelon form under the
// leftmost-pivot-column, first-row-tiebreak rule, followed by the canonical
// free-column back-substitution. The basis is the unique canonical one for
// the row space, so the output is bit-reproducible.
NullspaceResult nullspace(const RationalMatrix& M);

// Dense Gauss-Jordan inverse for small matrices (Killing forms, fundamental
// trace forms). Throws std::invalid_argument if singular or non-square.
std::vector<std::vector<Rational>> invert_dense(const std::vector<std::vector<Rational>>& M);

}  // namespace semiclass
