#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "sudogen/pi_matrix.hpp"
#include "test_util.hpp"

using namespace sudogen;

TEST_CASE("pair indexing is a bijection onto 0..n^2-1") {
  for (int n : {1, 2, 3, 5}) {
    for (int idx = 0; idx < n * n; ++idx) {
      const Pair p = pair_from_index(idx, n);
      CHECK(p.a >= 1);
      CHECK(p.a <= n);
      CHECK(p.b >= 1);
      CHECK(p.b <= n);
      CHECK(pair_index(p, n) == idx);
    }
  }
  // second component varies fastest
  CHECK(pair_from_index(0, 3) == Pair{1, 1});
  CHECK(pair_from_index(1, 3) == Pair{1, 2});
  CHECK(pair_from_index(3, 3) == Pair{2, 1});
}

TEST_CASE("validation accepts the hand-checked order-3 matrices") {
  CHECK(validate_pi(3, fixtures::first_pi3().cells()).ok());
  CHECK(validate_pi(3, fixtures::second_pi3().cells()).ok());
  CHECK(validate_pi(3, fixtures::third_pi3().cells()).ok());
}

TEST_CASE("validation pins a broken row to the right condition") {
  // taking the valid first fixture and planting <2,1> at (1,1) keeps every
  // second component in place, so only row 1 (now 2 2 1) can fire
  std::vector<Pair> cells = {{2, 1}, {2, 1}, {1, 2},
                             {2, 3}, {3, 2}, {1, 1},
                             {3, 2}, {1, 3}, {2, 3}};
  const ValidationReport report = validate_pi(3, cells);
  CHECK_FALSE(report.ok());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::RowFirstComponents);
  CHECK(report.violations[0].i == 1);
}

TEST_CASE("validation reports out-of-range components per cell") {
  std::vector<Pair> cells = {{1, 1}, {2, 0}, {2, 2}, {1, 5}};
  const ValidationReport report = validate_pi(2, cells);
  CHECK(report.has(ViolationKind::ComponentRange));
  int range_hits = 0;
  for (const Violation& v : report.violations)
    if (v.kind == ViolationKind::ComponentRange) ++range_hits;
  CHECK(range_hits == 2);
}

TEST_CASE("validation rejects wrong shapes outright") {
  std::vector<Pair> three = {{1, 1}, {1, 1}, {1, 1}};
  CHECK_THROWS_AS((void)validate_pi(2, three), std::invalid_argument);
  CHECK_THROWS_AS((void)validate_pi(0, {}), std::invalid_argument);
  CHECK_THROWS_AS((void)PiMatrix::from_cells(2, {{1, 1}}),
                  std::invalid_argument);
}

TEST_CASE("from_cells refuses invalid matrices") {
  // all cells equal: rows repeat the same first component
  std::vector<Pair> cells(9, Pair{1, 1});
  CHECK_THROWS_AS((void)PiMatrix::from_cells(3, std::move(cells)),
                  std::invalid_argument);
}

TEST_CASE("the defining permutations build the matrix cell by cell") {
  PermutationTuple tuple;
  tuple.rho = {{2, 1}, {1, 2}};
  tuple.sigma = {{1, 2}, {2, 1}};
  const PiMatrix m = from_permutations(tuple);
  CHECK(m.at(1, 1) == Pair{2, 1});
  CHECK(m.at(1, 2) == Pair{1, 2});
  CHECK(m.at(2, 1) == Pair{1, 2});
  CHECK(m.at(2, 2) == Pair{2, 1});
}

TEST_CASE("permutation extraction returns the defining tuple") {
  const PiMatrix m = fixtures::first_pi3();
  const PermutationTuple tuple = to_permutations(m);
  CHECK(tuple.rho[0] == std::vector<int>{3, 2, 1});
  CHECK(tuple.rho[1] == std::vector<int>{2, 3, 1});
  CHECK(tuple.rho[2] == std::vector<int>{3, 1, 2});
  CHECK(tuple.sigma[0] == std::vector<int>{1, 3, 2});
  CHECK(tuple.sigma[1] == std::vector<int>{1, 2, 3});
  CHECK(tuple.sigma[2] == std::vector<int>{2, 1, 3});
}

TEST_CASE("the two permutation views invert each other") {
  testutil::Lcg rng(2024);
  for (int n : {1, 2, 3, 4, 7}) {
    for (int rep = 0; rep < 20; ++rep) {
      const PermutationTuple tuple = testutil::random_tuple(n, rng);
      const PiMatrix m = from_permutations(tuple);
      CHECK(to_permutations(m) == tuple);
      CHECK(from_permutations(to_permutations(m)) == m);
    }
  }
}

TEST_CASE("malformed permutation tuples are rejected") {
  PermutationTuple bad;
  bad.rho = {{1, 2}, {2, 1}};
  bad.sigma = {{1, 2}};
  CHECK_THROWS_AS((void)from_permutations(bad), std::invalid_argument);

  bad.sigma = {{1, 2}, {2, 2}};  // repeated value
  CHECK_THROWS_AS((void)from_permutations(bad), std::invalid_argument);

  bad.sigma = {{1, 2}, {0, 1}};  // out of range
  CHECK_THROWS_AS((void)from_permutations(bad), std::invalid_argument);
}

TEST_CASE("overlaps between the fixed order-3 matrices match the hand count") {
  const PiMatrix first = fixtures::first_pi3();
  const PiMatrix second = fixtures::second_pi3();
  const PiMatrix third = fixtures::third_pi3();

  CHECK(equal_components(first, second).empty());
  CHECK(are_disjoint(first, second));

  const std::vector<CellPos> first_third = equal_components(first, third);
  CHECK(first_third == std::vector<CellPos>{{1, 1}, {2, 3}});
  CHECK_FALSE(are_disjoint(first, third));

  const std::vector<CellPos> second_third = equal_components(second, third);
  CHECK(second_third == std::vector<CellPos>{{1, 2}, {3, 2}, {3, 3}});
  CHECK_FALSE(are_disjoint(second, third));
}

TEST_CASE("disjointness is symmetric and empty-overlap is its exact meaning") {
  testutil::Lcg rng(77);
  for (int rep = 0; rep < 40; ++rep) {
    const PiMatrix x = testutil::random_pi(3, rng);
    const PiMatrix y = testutil::random_pi(3, rng);
    CHECK(are_disjoint(x, y) == are_disjoint(y, x));
    CHECK(are_disjoint(x, y) == equal_components(x, y).empty());
  }
}

TEST_CASE("a matrix is never disjoint from itself") {
  CHECK_FALSE(are_disjoint(fixtures::first_pi3(), fixtures::first_pi3()));
}

TEST_CASE("comparing matrices of different orders is an error") {
  testutil::Lcg rng(5);
  const PiMatrix small = testutil::random_pi(2, rng);
  const PiMatrix big = testutil::random_pi(3, rng);
  CHECK_THROWS_AS((void)are_disjoint(small, big), std::invalid_argument);
  CHECK_THROWS_AS((void)equal_components(small, big), std::invalid_argument);
}

TEST_CASE("the closed-form count matches small hand values") {
  CHECK(count_pi(1) == 1);
  CHECK(count_pi(2) == 16);      // (2!)^4
  CHECK(count_pi(3) == 46656);   // (3!)^6
  CHECK(count_pi(4) == BigInt("110075314176"));  // (4!)^8
  CHECK_THROWS_AS((void)count_pi(0), std::domain_error);
  CHECK_THROWS_AS((void)count_pi(-3), std::domain_error);
}

TEST_CASE("the count outgrows 64-bit integers by order 5") {
  const BigInt value = count_pi(5);  // 120^10
  CHECK(value == BigInt("619173642240000000000"));
  CHECK(value > BigInt("18446744073709551615"));
}
