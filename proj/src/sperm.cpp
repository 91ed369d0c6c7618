#include "sudogen/sperm.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sudogen {

namespace {

void require_order(int n) {
  if (n < 1) throw std::invalid_argument("block order must be positive");
}

void count_violation(ValidationReport& report, ViolationKind kind, int i,
                     int j, const std::string& what, int count) {
  report.violations.push_back(
      {kind, i, j, what + " has " + std::to_string(count) + " ones"});
}

}  // namespace

ValidationReport validate_sperm(int n, std::span<const int> dense) {
  require_order(n);
  const int side = n * n;
  if (dense.size() != static_cast<std::size_t>(side) * side)
    throw std::invalid_argument("expected " + std::to_string(side) + "x" +
                                std::to_string(side) + " entries, got " +
                                std::to_string(dense.size()));
  for (std::size_t idx = 0; idx < dense.size(); ++idx) {
    if (dense[idx] != 0 && dense[idx] != 1)
      throw std::invalid_argument(
          "entry at position " + std::to_string(idx / side + 1) + "," +
          std::to_string(idx % side + 1) + " is " +
          std::to_string(dense[idx]) + ", matrix must be binary");
  }

  ValidationReport report;
  auto at = [&](int r, int c) { return dense[(r - 1) * side + (c - 1)]; };
  for (int r = 1; r <= side; ++r) {
    int ones = 0;
    for (int c = 1; c <= side; ++c) ones += at(r, c);
    if (ones != 1)
      count_violation(report, ViolationKind::RowOnes, r, 0,
                      "row " + std::to_string(r), ones);
  }
  for (int c = 1; c <= side; ++c) {
    int ones = 0;
    for (int r = 1; r <= side; ++r) ones += at(r, c);
    if (ones != 1)
      count_violation(report, ViolationKind::ColumnOnes, 0, c,
                      "column " + std::to_string(c), ones);
  }
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      int ones = 0;
      for (int r = (k - 1) * n + 1; r <= k * n; ++r)
        for (int c = (l - 1) * n + 1; c <= l * n; ++c) ones += at(r, c);
      if (ones != 1)
        count_violation(
            report, ViolationKind::BlockOnes, k, l,
            "block (" + std::to_string(k) + "," + std::to_string(l) + ")",
            ones);
    }
  }
  return report;
}

SPermMatrix::SPermMatrix(int n, std::vector<GridPos> ones)
    : n_(n), ones_(std::move(ones)) {}

SPermMatrix SPermMatrix::from_ones(int n, std::vector<GridPos> ones) {
  require_order(n);
  const std::size_t blocks = static_cast<std::size_t>(n) * n;
  if (ones.size() != blocks)
    throw std::invalid_argument("expected one position per block (" +
                                std::to_string(blocks) + "), got " +
                                std::to_string(ones.size()));
  const int side = n * n;
  // Every position inside its own block plus all rows distinct and all
  // columns distinct is equivalent to the dense one-per-line rules.
  std::vector<char> row_used(static_cast<std::size_t>(side) + 1, 0);
  std::vector<char> col_used(static_cast<std::size_t>(side) + 1, 0);
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      const GridPos pos = ones[(k - 1) * n + (l - 1)];
      const std::string where =
          "block (" + std::to_string(k) + "," + std::to_string(l) + ")";
      if (pos.row <= (k - 1) * n || pos.row > k * n ||
          pos.col <= (l - 1) * n || pos.col > l * n)
        throw std::invalid_argument(
            where + " claims a 1 at (" + std::to_string(pos.row) + "," +
            std::to_string(pos.col) + "), outside the block");
      if (row_used[pos.row]++)
        throw std::invalid_argument(where + " repeats row " +
                                    std::to_string(pos.row));
      if (col_used[pos.col]++)
        throw std::invalid_argument(where + " repeats column " +
                                    std::to_string(pos.col));
    }
  }
  return SPermMatrix(n, std::move(ones));
}

SPermMatrix SPermMatrix::from_grid(int n, std::span<const int> dense) {
  ValidationReport report = validate_sperm(n, dense);
  if (!report.ok())
    throw std::invalid_argument("invalid matrix:\n" + report.to_string());
  const int side = n * n;
  std::vector<GridPos> ones(static_cast<std::size_t>(n) * n);
  for (int r = 1; r <= side; ++r) {
    for (int c = 1; c <= side; ++c) {
      if (dense[(r - 1) * side + (c - 1)]) {
        const int k = (r - 1) / n + 1;
        const int l = (c - 1) / n + 1;
        ones[(k - 1) * n + (l - 1)] = {r, c};
      }
    }
  }
  return SPermMatrix(n, std::move(ones));
}

std::vector<int> SPermMatrix::to_grid() const {
  const int side = n_ * n_;
  std::vector<int> dense(static_cast<std::size_t>(side) * side, 0);
  for (const GridPos& pos : ones_)
    dense[(pos.row - 1) * side + (pos.col - 1)] = 1;
  return dense;
}

SPermMatrix theta(const PiMatrix& m) {
  const int n = m.order();
  std::vector<GridPos> ones(static_cast<std::size_t>(n) * n);
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      const Pair p = m.at(k, l);
      ones[(k - 1) * n + (l - 1)] = {(k - 1) * n + p.a, (l - 1) * n + p.b};
    }
  }
  return SPermMatrix::from_ones(n, std::move(ones));
}

PiMatrix theta_inv(const SPermMatrix& s) {
  const int n = s.order();
  std::vector<Pair> cells(static_cast<std::size_t>(n) * n);
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      const GridPos pos = s.one_in_block(k, l);
      cells[(k - 1) * n + (l - 1)] =
          Pair{pos.row - (k - 1) * n, pos.col - (l - 1) * n};
    }
  }
  return PiMatrix::from_cells(n, std::move(cells));
}

bool sperm_disjoint(const SPermMatrix& x, const SPermMatrix& y) {
  if (x.order() != y.order())
    throw std::invalid_argument("order mismatch: " +
                                std::to_string(x.order()) + " vs " +
                                std::to_string(y.order()));
  // A shared 1 lands in the same block of both matrices, so comparing the
  // per-block positions covers every position of the full grid.
  for (std::size_t b = 0; b < x.ones().size(); ++b)
    if (x.ones()[b] == y.ones()[b]) return false;
  return true;
}

}  // namespace sudogen
