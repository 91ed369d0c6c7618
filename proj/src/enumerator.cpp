#include "sudogen/enumerator.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <unordered_set>

#include "sudogen/io.hpp"

namespace sudogen {

namespace {

const char* quantity_token(Quantity q) {
  return q == Quantity::PiMatrices ? "pi" : "sudoku";
}

std::string format_ms(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", seconds * 1000.0);
  return buf;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::string CountReport::machine_line() const {
  std::string out = "quantity=";
  out += quantity_token(quantity);
  out += " n=" + std::to_string(n);
  out += " value=" + value.str();
  out += " nodes=" + std::to_string(nodes);
  out += " backtracks=" + std::to_string(backtracks);
  out += " elapsed_ms=" + format_ms(elapsed_seconds);
  return out;
}

std::string CountReport::human_summary() const {
  const int side = n * n;
  std::string what =
      quantity == Quantity::PiMatrices
          ? "distinct pair matrices of order " + std::to_string(n)
          : "grids of order " + std::to_string(n) + " (" +
                std::to_string(side) + "x" + std::to_string(side) + ")";
  char time_buf[32];
  std::snprintf(time_buf, sizeof time_buf, "%.3f", elapsed_seconds);
  return "counted " + value.str() + " " + what + " in " + time_buf + " s (" +
         std::to_string(nodes) + " nodes, " + std::to_string(backtracks) +
         " backtracks)";
}

CountReport count_pi_enumerated(int n, const CountOptions& options) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (n > 3 && !options.allow_large)
    throw refusal_error("order " + std::to_string(n) + " means (" +
                        std::to_string(n) +
                        "!)^" + std::to_string(2 * n) +
                        " permutation choices; set allow_large to insist");

  const auto start = Clock::now();
  const std::vector<std::vector<int>> perms = all_permutations(n);
  const std::size_t base = perms.size();

  // odometer over the 2n permutation slots, row ones first
  std::vector<std::size_t> pick(static_cast<std::size_t>(2 * n), 0);
  std::unordered_set<std::string> seen;
  std::uint64_t examined = 0;
  PermutationTuple tuple;
  tuple.rho.resize(static_cast<std::size_t>(n));
  tuple.sigma.resize(static_cast<std::size_t>(n));
  for (;;) {
    for (int i = 0; i < n; ++i) tuple.rho[i] = perms[pick[i]];
    for (int j = 0; j < n; ++j) tuple.sigma[j] = perms[pick[n + j]];
    seen.insert(write_pi(from_permutations(tuple)));
    ++examined;
    // advance; stop after the last combination
    std::size_t slot = 0;
    while (slot < pick.size() && ++pick[slot] == base) pick[slot++] = 0;
    if (slot == pick.size()) break;
  }

  CountReport report;
  report.quantity = Quantity::PiMatrices;
  report.n = n;
  report.value = seen.size();
  report.nodes = examined;
  report.backtracks = 0;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

CountReport count_sudoku(int n, const CountOptions& options) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (n > 2 && !options.allow_large)
    throw refusal_error(
        "order " + std::to_string(n) +
        " has astronomically many grids; set allow_large to insist");

  const auto start = Clock::now();
  EnumerateOptions enumerate;
  enumerate.allow_large = true;  // guarded above
  enumerate.order = options.order;
  enumerate.workers = options.workers;
  const EnumerationOutcome outcome = enumerate_tuples(n, {}, enumerate);

  CountReport report;
  report.quantity = Quantity::SudokuMatrices;
  report.n = n;
  report.value = outcome.count;
  report.nodes = outcome.decisions;
  report.backtracks = outcome.backtracks;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

const BigInt& theta3_reference() {
  static const BigInt value("6670903752021072936960");
  return value;
}

}  // namespace sudogen
