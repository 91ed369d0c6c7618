#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sudogen/candidate_grid.hpp"
#include "sudogen/pi_matrix.hpp"

namespace sudogen {

// Thrown when an operation would be astronomically large and the caller did
// not opt in explicitly.
struct refusal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// How the search picks a pair when a cell still has several candidates.
// First takes them in iteration order (so the lexicographically smallest
// wins under AMajor); Random shuffles per cell, reproducibly from the seed;
// Exhaustive tries every one, which turns the search into an enumeration.
struct ChoiceStrategy {
  enum class Mode { First, Random, Exhaustive };

  Mode mode = Mode::First;
  std::uint64_t seed = 0;  // Random only
  PairOrder order = PairOrder::AMajor;

  static ChoiceStrategy first() { return {}; }
  static ChoiceStrategy random(std::uint64_t seed) {
    return {Mode::Random, seed, PairOrder::AMajor};
  }
  static ChoiceStrategy exhaustive(PairOrder order = PairOrder::AMajor) {
    return {Mode::Exhaustive, 0, order};
  }
};

// Limits for a single generation call.  A backtrack is one withdrawn
// decision; when an attempt uses up max_backtracks the random strategy
// reseeds deterministically and starts over, at most max_restarts times.
// The other strategies get a single attempt.  The defaults are sized so
// orders up to 4 generate comfortably (order 4 typically needs no restart
// and stays well under a second).
struct GenerationBudget {
  std::uint64_t max_backtracks = 200'000;
  std::uint32_t max_restarts = 50;
};

struct SearchStats {
  std::uint64_t decisions = 0;
  std::uint64_t backtracks = 0;
  std::uint32_t restarts = 0;
};

struct GenerationResult {
  // empty when the budget ran out before a complete tuple appeared
  std::optional<std::vector<PiMatrix>> tuple;
  SearchStats stats;

  bool ok() const { return tuple.has_value(); }
};

struct GeneratorOptions {
  // decide the undecided cell with the fewest candidates instead of the
  // fixed layer/row/column order; an alternative that sometimes reaches
  // orders the fixed order gives up on, but not reliably faster, and not
  // the documented default, so off unless asked for
  bool smallest_cell_first = false;
};

// Searches for one n^2-tuple of pairwise disjoint pair matrices (the layers
// of a Sudoku matrix).  Identical inputs give identical outputs, including
// the random strategy for a fixed seed.
GenerationResult generate_tuple(int n, const ChoiceStrategy& strategy,
                                const GenerationBudget& budget = {},
                                const GeneratorOptions& options = {});

using TupleVisitor = std::function<void(const std::vector<PiMatrix>&)>;

struct EnumerateOptions {
  bool allow_large = false;  // required for order >= 3
  PairOrder order = PairOrder::AMajor;
  // > 1 splits the first cell's candidates across threads; only counting
  // is supported there, so the visitor must be empty
  unsigned workers = 1;
};

struct EnumerationOutcome {
  BigInt count;
  std::uint64_t decisions = 0;
  std::uint64_t backtracks = 0;
};

// Visits every complete tuple exactly once and returns how many there are.
// The count is independent of the iteration order and of the worker split.
// Throws refusal_error for order >= 3 unless allow_large is set: the count
// grows like (n!)^(2n) and is already out of reach there.
EnumerationOutcome enumerate_tuples(int n, const TupleVisitor& visit = {},
                                    const EnumerateOptions& options = {});

}  // namespace sudogen
