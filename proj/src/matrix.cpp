#include "semiclass/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semiclass {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols) {
  rows_.resize(rows);
}

void RationalMatrix::add_row(SparseRow entries) {
  for (const auto& [c, v] : entries)
    if (c >= cols_) throw std::out_of_range("RationalMatrix: column out of range");
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow merged;
  for (auto& [c, v] : entries) {
    if (!merged.empty() && merged.back().first == c) {
      merged.back().second += v;
      if (merged.back().second == 0) merged.pop_back();
    } else if (v != 0) {
      merged.emplace_back(c, v);
    }
  }
  rows_.push_back(std::move(merged));
}

void RationalMatrix::set(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_.size() || col >= cols_)
    throw std::out_of_range("RationalMatrix: index out of range");
  SparseRow& r = rows_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == col) {
    if (value == 0)
      r.erase(it);
    else
      it->second = value;
  } else if (value != 0) {
    r.insert(it, {static_cast<std::uint32_t>(col), value});
  }
}

Rational RationalMatrix::get(std::size_t row, std::size_t col) const {
  if (row >= rows_.size() || col >= cols_)
    throw std::out_of_range("RationalMatrix: index out of range");
  const SparseRow& r = rows_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == col) return it->second;
  return Rational(0);
}

namespace {

// dst -= scale * src, both sorted sparse rows.
SparseRow row_axpy(const SparseRow& dst, const Rational& scale, const SparseRow& src) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      Rational v = -scale * src[j].second;
      if (v != 0) out.emplace_back(src[j].first, std::move(v));
      ++j;
    } else {
      Rational v = dst[i].second - scale * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

NullspaceResult nullspace(const RationalMatrix& M) {
  // Incremental reduction to RREF. The reduced row echelon form (and hence
  // the canonical kernel basis below) is unique for the row space, so the
  // result is exactly the one produced by the textbook leftmost-pivot,
  // first-row-tiebreak sweep.
  std::map<std::uint32_t, std::size_t> pivot_of_col;  // col -> index into reduced
  std::vector<SparseRow> reduced;

  for (std::size_t r = 0; r < M.rows(); ++r) {
    SparseRow row = M.row(r);
    // Eliminate every pivot column present in the row, in ascending order.
    std::size_t i = 0;
    while (i < row.size()) {
      auto it = pivot_of_col.find(row[i].first);
      if (it == pivot_of_col.end()) {
        ++i;
        continue;
      }
      row = row_axpy(row, row[i].second, reduced[it->second]);
      // Entries before position i are untouched (the pivot row starts at
      // this column), and the column itself cancelled; continue at i.
    }
    if (row.empty()) continue;
    // Normalize to leading coefficient 1.
    const Rational lead = row.front().second;
    if (lead != 1)
      for (auto& [c, v] : row) v /= lead;
    const std::uint32_t p = row.front().first;
    // Back-eliminate the new pivot column from the stored rows.
    for (auto& [col, idx] : pivot_of_col) {
      SparseRow& stored = reduced[idx];
      auto it = std::lower_bound(stored.begin(), stored.end(), p,
                                 [](const auto& e, std::uint32_t c) { return e.first < c; });
      if (it != stored.end() && it->first == p) {
        Rational scale = it->second;
        stored = row_axpy(stored, scale, row);
      }
    }
    pivot_of_col.emplace(p, reduced.size());
    reduced.push_back(std::move(row));
  }

  NullspaceResult out;
  out.rank = pivot_of_col.size();
  std::vector<bool> is_pivot(M.cols(), false);
  for (const auto& [c, idx] : pivot_of_col) is_pivot[c] = true;
  for (std::uint32_t f = 0; f < M.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(M.cols(), Rational(0));
    v[f] = 1;
    for (const auto& [p, idx] : pivot_of_col) {
      const SparseRow& prow = reduced[idx];
      auto it = std::lower_bound(prow.begin(), prow.end(), f,
                                 [](const auto& e, std::uint32_t c) { return e.first < c; });
      if (it != prow.end() && it->first == f) v[p] = -it->second;
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Rational>> invert_dense(const std::vector<std::vector<Rational>>& M) {
  const std::size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) throw std::invalid_argument("invert_dense: matrix not square");
  // Augmented [M | I], eliminated in place.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = M[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("invert_dense: singular matrix");
    std::swap(a[col], a[piv]);
    Rational lead = a[col][col];
    for (std::size_t j = 0; j < 2 * n; ++j) a[col][j] /= lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational s = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= s * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace semiclass
