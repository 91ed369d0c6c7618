#include "sudogen/pi_matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sudogen {

namespace {

std::string pair_str(Pair p) {
  return "<" + std::to_string(p.a) + "," + std::to_string(p.b) + ">";
}

// multiset {values} == {1..n}?  Values outside [1, n] simply fail the check.
bool is_permutation_of_1_to_n(const std::vector<int>& values, int n) {
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n || seen[v]++) return false;
  }
  return true;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

void require_shape(int n, std::size_t cell_count) {
  if (n < 1) throw std::invalid_argument("matrix order must be positive");
  if (cell_count != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("expected " + std::to_string(n) + "x" +
                                std::to_string(n) + " cells, got " +
                                std::to_string(cell_count));
}

void require_same_order(const PiMatrix& x, const PiMatrix& y) {
  if (x.order() != y.order())
    throw std::invalid_argument("order mismatch: " +
                                std::to_string(x.order()) + " vs " +
                                std::to_string(y.order()));
}

}  // namespace

ValidationReport validate_pi(int n, std::span<const Pair> cells) {
  require_shape(n, cells.size());
  ValidationReport report;
  auto cell = [&](int i, int j) { return cells[(i - 1) * n + (j - 1)]; };

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Pair p = cell(i, j);
      if (p.a < 1 || p.a > n || p.b < 1 || p.b > n) {
        report.violations.push_back(
            {ViolationKind::ComponentRange, i, j,
             "condition i: cell (" + std::to_string(i) + "," +
                 std::to_string(j) + ") holds " + pair_str(p) +
                 ", components must lie in 1.." + std::to_string(n)});
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    std::vector<int> firsts(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) firsts[j - 1] = cell(i, j).a;
    if (!is_permutation_of_1_to_n(firsts, n)) {
      report.violations.push_back(
          {ViolationKind::RowFirstComponents, i, 0,
           "condition ii: row " + std::to_string(i) + " first components " +
               join(firsts) + " are not a permutation of 1.." +
               std::to_string(n)});
    }
  }
  for (int j = 1; j <= n; ++j) {
    std::vector<int> seconds(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) seconds[i - 1] = cell(i, j).b;
    if (!is_permutation_of_1_to_n(seconds, n)) {
      report.violations.push_back(
          {ViolationKind::ColumnSecondComponents, 0, j,
           "condition iii: column " + std::to_string(j) +
               " second components " + join(seconds) +
               " are not a permutation of 1.." + std::to_string(n)});
    }
  }
  return report;
}

PiMatrix::PiMatrix(int n, std::vector<Pair> cells)
    : n_(n), cells_(std::move(cells)) {}

PiMatrix PiMatrix::from_cells(int n, std::vector<Pair> cells) {
  ValidationReport report = validate_pi(n, cells);
  if (!report.ok())
    throw std::invalid_argument("invalid pair matrix:\n" + report.to_string());
  return PiMatrix(n, std::move(cells));
}

PiMatrix from_permutations(const PermutationTuple& tuple) {
  const std::size_t n = tuple.rho.size();
  if (n == 0 || tuple.sigma.size() != n)
    throw std::invalid_argument(
        "expected equally many row and column permutations, got " +
        std::to_string(n) + " and " + std::to_string(tuple.sigma.size()));
  auto check_each = [&](const std::vector<std::vector<int>>& perms,
                        const char* what) {
    for (std::size_t idx = 0; idx < perms.size(); ++idx) {
      if (perms[idx].size() != n ||
          !is_permutation_of_1_to_n(perms[idx], static_cast<int>(n)))
        throw std::invalid_argument(std::string(what) + " " +
                                    std::to_string(idx + 1) +
                                    " is not a permutation of 1.." +
                                    std::to_string(n));
    }
  };
  check_each(tuple.rho, "row permutation");
  check_each(tuple.sigma, "column permutation");

  std::vector<Pair> cells(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cells[i * n + j] = Pair{tuple.rho[i][j], tuple.sigma[j][i]};
  return PiMatrix::from_cells(static_cast<int>(n), std::move(cells));
}

PermutationTuple to_permutations(const PiMatrix& m) {
  const int n = m.order();
  PermutationTuple tuple;
  tuple.rho.assign(static_cast<std::size_t>(n),
                   std::vector<int>(static_cast<std::size_t>(n)));
  tuple.sigma = tuple.rho;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Pair p = m.at(i, j);
      tuple.rho[i - 1][j - 1] = p.a;
      tuple.sigma[j - 1][i - 1] = p.b;
    }
  }
  return tuple;
}

std::vector<CellPos> equal_components(const PiMatrix& x, const PiMatrix& y) {
  require_same_order(x, y);
  std::vector<CellPos> positions;
  const int n = x.order();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (x.at(i, j) == y.at(i, j)) positions.push_back({i, j});
  return positions;
}

bool are_disjoint(const PiMatrix& x, const PiMatrix& y) {
  require_same_order(x, y);
  const int n = x.order();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (x.at(i, j) == y.at(i, j)) return false;
  return true;
}

BigInt count_pi(int n) {
  if (n < 1) throw std::domain_error("order must be positive");
  BigInt factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= k;
  return boost::multiprecision::pow(factorial, 2 * static_cast<unsigned>(n));
}

}  // namespace sudogen
