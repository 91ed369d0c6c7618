#pragma once

#include <cstdint>
#include <string>

#include "sudogen/generator.hpp"

namespace sudogen {

enum class Quantity { PiMatrices, SudokuMatrices };

// Result of an exhaustive count, with enough bookkeeping to compare runs.
struct CountReport {
  Quantity quantity = Quantity::PiMatrices;
  int n = 0;
  BigInt value;
  double elapsed_seconds = 0.0;
  std::uint64_t nodes = 0;  // tuples examined or decisions made
  std::uint64_t backtracks = 0;

  // single key=value line for scripts, e.g.
  // "quantity=sudoku n=2 value=288 nodes=3192 backtracks=903 elapsed_ms=1.2"
  std::string machine_line() const;
  std::string human_summary() const;
};

struct CountOptions {
  bool allow_large = false;
  PairOrder order = PairOrder::AMajor;
  unsigned workers = 1;  // forwarded to the tuple enumeration
};

// Counts the distinct pair matrices of order n by walking every choice of
// the 2n defining permutations and collecting the results, which
// cross-checks the closed form (n!)^(2n) without assuming it.  Refuses
// n > 3 unless allow_large is set (n = 4 already means 1.1e11 tuples).
CountReport count_pi_enumerated(int n, const CountOptions& options = {});

// Counts the Sudoku matrices of order n via exhaustive tuple enumeration.
// Refuses n > 2 unless allow_large is set; there is no hardware the larger
// orders would finish on.
CountReport count_sudoku(int n, const CountOptions& options = {});

// Published number of 9x9 Sudoku matrices (order 3).  Exhaustive counting
// cannot reach it; it is kept as a reference constant for documentation
// and consistency checks.
const BigInt& theta3_reference();

}  // namespace sudogen
