#pragma once

#include <string>
#include <vector>

namespace sudogen {

// One structural defect found in a matrix.  Coordinates are 1-based and
// their meaning depends on the kind: a row kind fills only i, a column kind
// only j, cell and block kinds fill both.
enum class ViolationKind {
  // pair matrices
  ComponentRange,          // a pair component outside [1, n]
  RowFirstComponents,      // first components of a row are not a permutation
  ColumnSecondComponents,  // second components of a column are not a permutation
  // S-permutation matrices
  RowOnes,     // a row with zero or several ones
  ColumnOnes,  // a column with zero or several ones
  BlockOnes,   // an n x n block with zero or several ones
  // Sudoku matrices
  EntryRange,    // an entry outside [1, n^2]
  RowDigits,     // a row that is not a permutation of 1..n^2
  ColumnDigits,  // a column that is not a permutation of 1..n^2
  BlockDigits,   // a block that is not a permutation of 1..n^2
};

struct Violation {
  ViolationKind kind;
  int i = 0;
  int j = 0;
  std::string message;  // rendered with 1-based coordinates
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  // all messages, one per line; "ok" when there are none
  std::string to_string() const;
};

}  // namespace sudogen
