#pragma once

#include <compare>
#include <span>
#include <vector>

#include "sudogen/pi_matrix.hpp"

namespace sudogen {

// 1-based position inside an n^2 x n^2 matrix.
struct GridPos {
  int row = 0;
  int col = 0;

  friend bool operator==(const GridPos&, const GridPos&) = default;
  friend auto operator<=>(const GridPos&, const GridPos&) = default;
};

// n^2 x n^2 binary matrix with exactly one 1 in every row, every column and
// every n x n block.  Stored sparsely as the position of the 1 per block,
// block-major; the dense form only exists at (de)serialization time.
class SPermMatrix {
 public:
  // dense row-major n^4 entries over {0, 1}; throws std::invalid_argument
  // when the shape is off, an entry is not 0/1, or the one-per-line rules
  // fail (message carries the violation report)
  static SPermMatrix from_grid(int n, std::span<const int> dense);

  // positions of the ones, block-major: entry (k-1)*n + (l-1) belongs to
  // block (k, l); throws std::invalid_argument when they do not form a
  // valid matrix
  static SPermMatrix from_ones(int n, std::vector<GridPos> ones);

  int order() const { return n_; }  // block order; the matrix is n^2 x n^2
  int side() const { return n_ * n_; }

  // 1-based block coordinates
  GridPos one_in_block(int k, int l) const {
    return ones_[(k - 1) * n_ + (l - 1)];
  }
  std::span<const GridPos> ones() const { return ones_; }

  std::vector<int> to_grid() const;  // dense row-major, n^4 entries

  friend bool operator==(const SPermMatrix&, const SPermMatrix&) = default;

 private:
  SPermMatrix(int n, std::vector<GridPos> ones);

  int n_;
  std::vector<GridPos> ones_;
};

// Checks the one-per-row, one-per-column and one-per-block rules on a dense
// row-major matrix.  Throws std::invalid_argument when n < 1, the size is
// not n^4, or an entry is not 0/1 (those are malformed inputs, not
// violations).
ValidationReport validate_sperm(int n, std::span<const int> dense);

// The pair-to-position bijection: the pair <a, b> in cell (k, l) of m
// becomes a 1 at global position ((k-1)n + a, (l-1)n + b).
SPermMatrix theta(const PiMatrix& m);
// Inverse: block (k, l) with its 1 at global (r, c) yields the pair
// <r - (k-1)n, c - (l-1)n>.
PiMatrix theta_inv(const SPermMatrix& s);

// True when the matrices share no 1 position.  Throws
// std::invalid_argument on an order mismatch.
bool sperm_disjoint(const SPermMatrix& x, const SPermMatrix& y);

}  // namespace sudogen
