#pragma once

#include <span>
#include <vector>

#include "sudogen/sperm.hpp"

namespace sudogen {

// n^2 x n^2 matrix over 1..n^2 where every row, every column and every
// n x n block holds each value exactly once.  Immutable and always valid.
class SudokuMatrix {
 public:
  // entries row-major, n^4 of them; throws std::invalid_argument when the
  // shape is off or the matrix breaks a rule (message carries the report)
  static SudokuMatrix from_entries(int n, std::vector<int> entries);

  int order() const { return n_; }  // block order; the matrix is n^2 x n^2
  int side() const { return n_ * n_; }
  // 1-based
  int at(int r, int c) const { return entries_[(r - 1) * (n_ * n_) + (c - 1)]; }
  std::span<const int> entries() const { return entries_; }

  friend bool operator==(const SudokuMatrix&, const SudokuMatrix&) = default;

 private:
  SudokuMatrix(int n, std::vector<int> entries);

  int n_;
  std::vector<int> entries_;  // row-major
};

// Checks the row, column and block rules on a dense row-major matrix.
// Out-of-range entries are reported per cell; throws std::invalid_argument
// when n < 1 or the size is not n^4.
ValidationReport validate_sudoku(int n, std::span<const int> entries);

// Overlays n^2 pairwise disjoint one-per-line matrices: the v-th one
// contributes the value v at its 1 positions.  Throws
// std::invalid_argument when the count is not n^2, the orders differ, or
// two of them share a position.
SudokuMatrix compose(std::span<const SPermMatrix> parts);

// Splits a matrix into the n^2 layers compose stacks together: part v has
// its ones exactly where the matrix holds v.  compose(decompose(m)) == m.
std::vector<SPermMatrix> decompose(const SudokuMatrix& m);

}  // namespace sudogen
