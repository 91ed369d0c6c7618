#pragma once

#include <compare>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sudogen/validation.hpp"

namespace sudogen {

using BigInt = boost::multiprecision::cpp_int;

// Ordered pair <a, b> with both components in [1, n].
struct Pair {
  int a = 0;
  int b = 0;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

// Canonical position of a pair among the n^2 elements of [n] x [n]:
// <1,1>, <1,2>, ..., <1,n>, <2,1>, ...  Shared by PairSet, candidate
// iteration and serialization, so every component agrees on what "first
// pair" means.
constexpr int pair_index(Pair p, int n) { return (p.a - 1) * n + (p.b - 1); }
constexpr Pair pair_from_index(int index, int n) {
  return Pair{index / n + 1, index % n + 1};
}

// The 2n permutations that define a pair matrix: rho[i] gives the first
// components of row i+1, sigma[j] the second components of column j+1.
struct PermutationTuple {
  std::vector<std::vector<int>> rho;
  std::vector<std::vector<int>> sigma;

  friend bool operator==(const PermutationTuple&,
                         const PermutationTuple&) = default;
};

// n x n matrix of ordered pairs such that along every row the first
// components form a permutation of 1..n and along every column the second
// components do.  Instances are immutable and always valid: the only way to
// build one is the checked factory.
class PiMatrix {
 public:
  // throws std::invalid_argument when the cells do not satisfy the three
  // defining conditions (message carries the full violation report)
  static PiMatrix from_cells(int n, std::vector<Pair> cells);

  int order() const { return n_; }
  // 1-based
  Pair at(int i, int j) const { return cells_[(i - 1) * n_ + (j - 1)]; }
  std::span<const Pair> cells() const { return cells_; }

  friend bool operator==(const PiMatrix&, const PiMatrix&) = default;

 private:
  PiMatrix(int n, std::vector<Pair> cells);

  int n_;
  std::vector<Pair> cells_;  // row-major
};

// Checks the defining conditions of a pair matrix: (i) every component in
// [1, n], (ii) row first components a permutation, (iii) column second
// components a permutation.  cells is row-major; throws
// std::invalid_argument when n < 1 or cells.size() != n^2.
ValidationReport validate_pi(int n, std::span<const Pair> cells);

// Builds the matrix whose cell (i, j) is <rho_i(j), sigma_j(i)>.  Throws
// std::invalid_argument when the tuple is malformed (wrong arity, or some
// entry is not a permutation of 1..n).
PiMatrix from_permutations(const PermutationTuple& tuple);
PermutationTuple to_permutations(const PiMatrix& m);

// Matrix position, 1-based.
struct CellPos {
  int i = 0;
  int j = 0;

  friend bool operator==(const CellPos&, const CellPos&) = default;
  friend auto operator<=>(const CellPos&, const CellPos&) = default;
};

// Positions where the two matrices hold the same pair, in row-major order.
// Throws std::invalid_argument on an order mismatch.
std::vector<CellPos> equal_components(const PiMatrix& x, const PiMatrix& y);

// True when no position holds the same pair in both matrices.
bool are_disjoint(const PiMatrix& x, const PiMatrix& y);

// Number of distinct pair matrices of order n, i.e. (n!)^(2n).  Throws
// std::domain_error when n < 1.
BigInt count_pi(int n);

}  // namespace sudogen
