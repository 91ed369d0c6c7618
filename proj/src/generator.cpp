#include "sudogen/generator.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <utility>

namespace sudogen {

namespace {

// Tiny fixed-algorithm generator so shuffles come out the same on every
// platform and standard library.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// Attempt 0 runs on the caller's seed itself; restarts derive fresh ones.
std::uint64_t attempt_seed(std::uint64_t seed, std::uint32_t attempt) {
  if (attempt == 0) return seed;
  return SplitMix64(seed ^ (attempt * 0x9E3779B97F4A7C15ull)).next();
}

void shuffle_pairs(std::vector<Pair>& pairs, SplitMix64& rng) {
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[rng.next() % i]);
}

std::vector<Pair> ordered_candidates(const PairSet& set,
                                     const ChoiceStrategy& strategy,
                                     SplitMix64* rng) {
  std::vector<Pair> out = set.to_vector(strategy.order);
  if (strategy.mode == ChoiceStrategy::Mode::Random) shuffle_pairs(out, *rng);
  return out;
}

std::vector<PiMatrix> extract_tuple(const CandidateGrid& grid) {
  const int n = grid.order();
  std::vector<PiMatrix> tuple;
  tuple.reserve(static_cast<std::size_t>(grid.layer_count()));
  for (int k = 1; k <= grid.layer_count(); ++k) {
    std::vector<Pair> cells(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        cells[(i - 1) * n + (j - 1)] = grid.candidates(k, i, j).min();
    tuple.push_back(PiMatrix::from_cells(n, std::move(cells)));
  }
  return tuple;
}

enum class DriveResult {
  Stopped,    // on_complete asked to stop
  Exhausted,  // the whole remaining tree was visited
  BudgetHit,  // max_backtracks used up
};

// Depth-first search over cell assignments, resuming from whatever is
// already decided in the grid.  on_complete runs on every complete
// assignment and returns whether to keep searching; the grid is handed over
// in its decided state and must not be mutated there.
DriveResult drive(CandidateGrid& grid, const ChoiceStrategy& strategy,
                  SplitMix64* rng, std::uint64_t max_backtracks,
                  bool smallest_cell_first,
                  const std::function<bool(const CandidateGrid&)>& on_complete,
                  SearchStats& stats) {
  struct Frame {
    int cell;
    CandidateGrid::Mark mark;
    std::vector<Pair> order;
    std::size_t next = 0;
  };

  auto pick_cell = [&]() {
    if (!smallest_cell_first) return grid.cursor();
    int best = -1;
    int best_size = std::numeric_limits<int>::max();
    for (int c = 0; c < grid.cell_count(); ++c) {
      if (grid.decided(c)) continue;
      const int size = grid.candidates(c).size();
      if (size < best_size) {
        best_size = size;
        best = c;
      }
    }
    return best;
  };

  std::vector<Frame> frames;
  bool descend = true;
  for (;;) {
    if (descend) {
      if (grid.decided_count() == grid.cell_count()) {
        if (!on_complete(grid)) return DriveResult::Stopped;
        if (frames.empty()) return DriveResult::Exhausted;
        descend = false;  // treat the solution as a dead end and move on
      } else {
        const int cell = pick_cell();
        frames.push_back({cell, grid.mark(),
                          ordered_candidates(grid.candidates(cell), strategy,
                                             rng)});
      }
    }
    Frame& frame = frames.back();
    if (!descend) {
      // withdraw this frame's current choice before trying its next one
      grid.undo(frame.mark);
      if (++stats.backtracks > max_backtracks) return DriveResult::BudgetHit;
    }
    bool advanced = false;
    while (frame.next < frame.order.size()) {
      const Pair p = frame.order[frame.next++];
      ++stats.decisions;
      const bool ok = smallest_cell_first ? grid.assign_at_cell(frame.cell, p)
                                          : grid.assign_next(p);
      if (ok) {
        advanced = true;
        break;
      }
      // some candidate set ran empty mid-propagation; roll back cleanly
      grid.undo(frame.mark);
      if (++stats.backtracks > max_backtracks) return DriveResult::BudgetHit;
    }
    if (advanced) {
      descend = true;
      continue;
    }
    frames.pop_back();
    if (frames.empty()) return DriveResult::Exhausted;
    descend = false;
  }
}

constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

}  // namespace

GenerationResult generate_tuple(int n, const ChoiceStrategy& strategy,
                                const GenerationBudget& budget,
                                const GeneratorOptions& options) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  const bool random = strategy.mode == ChoiceStrategy::Mode::Random;
  const std::uint32_t attempts = random ? budget.max_restarts + 1 : 1;

  GenerationResult result;
  for (std::uint32_t attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) ++result.stats.restarts;
    CandidateGrid grid(n);
    SplitMix64 rng(attempt_seed(strategy.seed, attempt));
    SearchStats attempt_stats;
    std::optional<std::vector<PiMatrix>> found;
    const DriveResult outcome =
        drive(grid, strategy, random ? &rng : nullptr, budget.max_backtracks,
              options.smallest_cell_first,
              [&found](const CandidateGrid& g) {
                found = extract_tuple(g);
                return false;
              },
              attempt_stats);
    result.stats.decisions += attempt_stats.decisions;
    result.stats.backtracks += attempt_stats.backtracks;
    if (outcome == DriveResult::Stopped) {
      result.tuple = std::move(found);
      return result;
    }
    if (outcome == DriveResult::Exhausted) break;  // nothing left to try
  }
  return result;
}

EnumerationOutcome enumerate_tuples(int n, const TupleVisitor& visit,
                                    const EnumerateOptions& options) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (n >= 3 && !options.allow_large)
    throw refusal_error(
        "enumerating order " + std::to_string(n) +
        " means visiting every disjoint tuple, which is astronomically many; "
        "set allow_large to insist");

  const ChoiceStrategy strategy = ChoiceStrategy::exhaustive(options.order);
  EnumerationOutcome outcome;
  outcome.count = 0;

  if (options.workers <= 1) {
    CandidateGrid grid(n);
    SearchStats stats;
    drive(grid, strategy, nullptr, kNoLimit, false,
          [&](const CandidateGrid& g) {
            ++outcome.count;
            if (visit) visit(extract_tuple(g));
            return true;
          },
          stats);
    outcome.decisions = stats.decisions;
    outcome.backtracks = stats.backtracks;
    return outcome;
  }

  if (visit)
    throw std::invalid_argument("a tuple visitor requires workers == 1");

  // Split on the first cell: its candidate branches partition the tree, so
  // adding up per-branch counts changes nothing about the total.
  const std::vector<Pair> roots = PairSet::full(n).to_vector(options.order);
  std::atomic<std::size_t> next_root{0};
  std::mutex merge;
  auto work = [&]() {
    for (;;) {
      const std::size_t r = next_root.fetch_add(1);
      if (r >= roots.size()) return;
      CandidateGrid grid(n);
      SearchStats stats;
      ++stats.decisions;
      BigInt local = 0;
      if (grid.assign_next(roots[r])) {
        drive(grid, strategy, nullptr, kNoLimit, false,
              [&local](const CandidateGrid&) {
                ++local;
                return true;
              },
              stats);
      }
      // abandoning the branch withdraws its root decision; a serial run
      // books that as a backtrack, so the split must too for the totals to
      // stay comparable
      ++stats.backtracks;
      const std::lock_guard<std::mutex> lock(merge);
      outcome.count += local;
      outcome.decisions += stats.decisions;
      outcome.backtracks += stats.backtracks;
    }
  };

  const unsigned thread_count =
      std::min<unsigned>(options.workers,
                         static_cast<unsigned>(roots.size()));
  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  return outcome;
}

}  // namespace sudogen
