#include "sudogen/sudoku.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sudogen {

namespace {

std::string join(const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

bool is_permutation_of_1_to_m(const std::vector<int>& values, int m) {
  std::vector<int> seen(static_cast<std::size_t>(m) + 1, 0);
  for (int v : values) {
    if (v < 1 || v > m || seen[v]++) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_sudoku(int n, std::span<const int> entries) {
  if (n < 1) throw std::invalid_argument("block order must be positive");
  const int side = n * n;
  if (entries.size() != static_cast<std::size_t>(side) * side)
    throw std::invalid_argument("expected " + std::to_string(side) + "x" +
                                std::to_string(side) + " entries, got " +
                                std::to_string(entries.size()));

  ValidationReport report;
  auto at = [&](int r, int c) { return entries[(r - 1) * side + (c - 1)]; };
  for (int r = 1; r <= side; ++r) {
    for (int c = 1; c <= side; ++c) {
      const int v = at(r, c);
      if (v < 1 || v > side)
        report.violations.push_back(
            {ViolationKind::EntryRange, r, c,
             "entry at (" + std::to_string(r) + "," + std::to_string(c) +
                 ") is " + std::to_string(v) + ", values must lie in 1.." +
                 std::to_string(side)});
    }
  }
  std::vector<int> line(static_cast<std::size_t>(side));
  for (int r = 1; r <= side; ++r) {
    for (int c = 1; c <= side; ++c) line[c - 1] = at(r, c);
    if (!is_permutation_of_1_to_m(line, side))
      report.violations.push_back(
          {ViolationKind::RowDigits, r, 0,
           "row " + std::to_string(r) + " holds " + join(line) +
               ", not a permutation of 1.." + std::to_string(side)});
  }
  for (int c = 1; c <= side; ++c) {
    for (int r = 1; r <= side; ++r) line[r - 1] = at(r, c);
    if (!is_permutation_of_1_to_m(line, side))
      report.violations.push_back(
          {ViolationKind::ColumnDigits, 0, c,
           "column " + std::to_string(c) + " holds " + join(line) +
               ", not a permutation of 1.." + std::to_string(side)});
  }
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      int idx = 0;
      for (int r = (k - 1) * n + 1; r <= k * n; ++r)
        for (int c = (l - 1) * n + 1; c <= l * n; ++c) line[idx++] = at(r, c);
      if (!is_permutation_of_1_to_m(line, side))
        report.violations.push_back(
            {ViolationKind::BlockDigits, k, l,
             "block (" + std::to_string(k) + "," + std::to_string(l) +
                 ") holds " + join(line) + ", not a permutation of 1.." +
                 std::to_string(side)});
    }
  }
  return report;
}

SudokuMatrix::SudokuMatrix(int n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {}

SudokuMatrix SudokuMatrix::from_entries(int n, std::vector<int> entries) {
  ValidationReport report = validate_sudoku(n, entries);
  if (!report.ok())
    throw std::invalid_argument("invalid matrix:\n" + report.to_string());
  return SudokuMatrix(n, std::move(entries));
}

SudokuMatrix compose(std::span<const SPermMatrix> parts) {
  if (parts.empty()) throw std::invalid_argument("no matrices to overlay");
  const int n = parts.front().order();
  const int side = n * n;
  if (parts.size() != static_cast<std::size_t>(side))
    throw std::invalid_argument("expected " + std::to_string(side) +
                                " matrices for order " + std::to_string(n) +
                                ", got " + std::to_string(parts.size()));
  for (const SPermMatrix& part : parts)
    if (part.order() != n)
      throw std::invalid_argument("order mismatch among the matrices");

  std::vector<int> entries(static_cast<std::size_t>(side) * side, 0);
  for (int v = 1; v <= side; ++v) {
    for (const GridPos& pos : parts[v - 1].ones()) {
      int& cell = entries[(pos.row - 1) * side + (pos.col - 1)];
      if (cell != 0)
        throw std::invalid_argument(
            "matrices " + std::to_string(cell) + " and " + std::to_string(v) +
            " are not disjoint: both have a 1 at (" +
            std::to_string(pos.row) + "," + std::to_string(pos.col) + ")");
      cell = v;
    }
  }
  // n^2 disjoint matrices with n^2 ones each tile all n^4 positions, so no
  // zero can survive; the rules themselves hold because every value appears
  // once per line by construction
  return SudokuMatrix::from_entries(n, std::move(entries));
}

std::vector<SPermMatrix> decompose(const SudokuMatrix& m) {
  const int n = m.order();
  const int side = m.side();
  std::vector<std::vector<GridPos>> ones(
      static_cast<std::size_t>(side),
      std::vector<GridPos>(static_cast<std::size_t>(side)));
  for (int r = 1; r <= side; ++r) {
    for (int c = 1; c <= side; ++c) {
      const int v = m.at(r, c);
      const int block = ((r - 1) / n) * n + (c - 1) / n;
      ones[v - 1][block] = {r, c};
    }
  }
  std::vector<SPermMatrix> parts;
  parts.reserve(static_cast<std::size_t>(side));
  for (int v = 1; v <= side; ++v)
    parts.push_back(SPermMatrix::from_ones(n, std::move(ones[v - 1])));
  return parts;
}

}  // namespace sudogen
