#pragma once

#include <optional>
#include <vector>

#include "cm/cyclotomic.hpp"

namespace cm {

// Sparse row: sorted (column, coefficient) pairs, coefficients nonzero.
using SparseRow = std::vector<std::pair<int, Cyc>>;

// Incremental row-echelon accumulator over Q(zeta).  Deterministic:
// pivot of a row is its leftmost column; rows normalised to pivot 1.
class RowSpan {
 public:
  explicit RowSpan(int ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

  // Reduce `row` against the span; returns the reduced row (possibly empty).
  SparseRow reduce(SparseRow row) const;

  // Reduce and, if the remainder is nonzero, add it to the span.
  // Returns true when the rank grew.
  bool insert(SparseRow row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return ncols_; }
  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
  const std::vector<SparseRow>& rows() const { return rows_; }

 private:
  int ncols_;
  std::vector<SparseRow> rows_;    // echelon rows, pivot coefficient 1
  std::vector<int> pivot_row_;     // column -> index in rows_, or -1
};

// Rank of a dense-ish matrix given as rows.
int rank_of(const std::vector<SparseRow>& rows, int ncols);

// Solve x * A = b where A's rows are given (x ranges over row-combinations):
// i.e. decide whether b lies in the row span and return coefficients.
// Here we only need membership, so this returns a bool.
bool in_row_span(const std::vector<SparseRow>& rows, int ncols, const SparseRow& b);

}  // namespace cm
