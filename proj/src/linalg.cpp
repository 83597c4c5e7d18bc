#include "cm/linalg.hpp"

#include <algorithm>

namespace cm {

namespace {

// row -= coeff * other, sparse merge.
SparseRow axpy(const SparseRow& row, const Cyc& coeff, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      Cyc c = -(coeff * other[j].second);
      if (!c.is_zero()) out.emplace_back(other[j].first, c);
      ++j;
    } else {
      Cyc c = row[i].second - coeff * other[j].second;
      if (!c.is_zero()) out.emplace_back(row[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow RowSpan::reduce(SparseRow row) const {
  while (!row.empty()) {
    int col = row.front().first;
    int r = pivot_row_[col];
    if (r < 0) break;
    row = axpy(row, row.front().second, rows_[r]);
  }
  return row;
}

bool RowSpan::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  // Normalise pivot to 1.
  Cyc inv = row.front().second.inverse();
  for (auto& [c, v] : row) v *= inv;
  // Back-substitute into existing rows keeps reduce() single-pass-per-pivot
  // but costs more; we skip it (rows stay echelon, not fully reduced).
  pivot_row_[row.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

int rank_of(const std::vector<SparseRow>& rows, int ncols) {
  RowSpan span(ncols);
  for (const auto& r : rows) span.insert(r);
  return span.rank();
}

bool in_row_span(const std::vector<SparseRow>& rows, int ncols, const SparseRow& b) {
  RowSpan span(ncols);
  for (const auto& r : rows) span.insert(r);
  return span.reduce(b).empty();
}

}  // namespace cm
