#include <doctest.h>

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "sudogen/io.hpp"
#include "test_util.hpp"

using namespace sudogen;

TEST_CASE("pair matrices come back byte-identical through write and parse") {
  testutil::Lcg rng(314);
  for (int n : {1, 2, 3, 4}) {
    for (int rep = 0; rep < 10; ++rep) {
      const PiMatrix m = testutil::random_pi(n, rng);
      const std::string text = write_pi(m);
      const ParsedPi parsed = parse_pi(text);
      CHECK(parsed.n == n);
      CHECK(PiMatrix::from_cells(parsed.n, parsed.cells) == m);
      CHECK(write_pi(PiMatrix::from_cells(parsed.n, parsed.cells)) == text);
    }
  }
}

TEST_CASE("the pair format is exactly as documented") {
  const std::string text = write_pi(fixtures::first_pi3());
  CHECK(text ==
        "3\n"
        "3:1 2:1 1:2\n"
        "2:3 3:2 1:1\n"
        "3:2 1:3 2:3\n");
}

TEST_CASE("parsing shrugs off blank lines and ragged spacing") {
  const std::string text =
      "\n\n  2 \n"
      " 1:1   2:1\n"
      "\n"
      "1:2 2:2\n\n\n";
  const ParsedPi parsed = parse_pi(text);
  CHECK(parsed.n == 2);
  CHECK(parsed.cells == std::vector<Pair>{{1, 1}, {2, 1}, {1, 2}, {2, 2}});
}

TEST_CASE("parse errors carry the offending line number") {
  // the bad token sits on physical line 3
  try {
    (void)parse_pi("2\n1:1 2:1\n1:2 nonsense\n");
    FAIL("accepted a malformed pair");
  } catch (const parse_error& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("nonsense") != std::string::npos);
  }

  try {  // blank lines still count toward numbering
    (void)parse_pi("\n2\n\n1:1 2:1\n1:2\n");
    FAIL("accepted a short row");
  } catch (const parse_error& e) {
    CHECK(e.line == 5);
  }

  try {  // truncated input points past the end
    (void)parse_pi("2\n1:1 2:1\n");
    FAIL("accepted a truncated matrix");
  } catch (const parse_error& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("pair token variants that must not slip through") {
  CHECK_THROWS_AS((void)parse_pi("1\n11\n"), parse_error);      // no colon
  CHECK_THROWS_AS((void)parse_pi("1\n1:\n"), parse_error);      // half a pair
  CHECK_THROWS_AS((void)parse_pi("1\n:1\n"), parse_error);
  CHECK_THROWS_AS((void)parse_pi("1\n1:1:1\n"), parse_error);   // extra field
  CHECK_THROWS_AS((void)parse_pi("1\n1.0:1\n"), parse_error);   // not an int
  // parsing is lexical only: out-of-range values are for the validator
  const ParsedPi parsed = parse_pi("1\n7:0\n");
  CHECK(parsed.cells[0] == Pair{7, 0});
  CHECK_FALSE(validate_pi(parsed.n, parsed.cells).ok());
}

TEST_CASE("trailing content after a single document is an error") {
  CHECK_THROWS_AS((void)parse_pi("1\n1:1\nleftover\n"), parse_error);
  CHECK_THROWS_AS((void)parse_grid("1\n1\n1\n"), parse_error);
}

TEST_CASE("order lines must be a single positive integer") {
  CHECK_THROWS_AS((void)parse_pi(""), parse_error);
  CHECK_THROWS_AS((void)parse_pi("0\n"), parse_error);
  CHECK_THROWS_AS((void)parse_pi("-2\n"), parse_error);
  CHECK_THROWS_AS((void)parse_pi("two\n"), parse_error);
  CHECK_THROWS_AS((void)parse_pi("2 2\n1:1 2:1\n1:2 2:2\n"), parse_error);
}

TEST_CASE("one-per-line matrices survive the round trip") {
  testutil::Lcg rng(2718);
  for (int n : {1, 2, 3}) {
    const SPermMatrix s = theta(testutil::random_pi(n, rng));
    const std::string text = write_sperm(s);
    const ParsedSperm parsed = parse_sperm(text);
    CHECK(parsed.n == n);
    CHECK(SPermMatrix::from_grid(parsed.n, parsed.dense) == s);
    CHECK(write_sperm(SPermMatrix::from_grid(parsed.n, parsed.dense)) == text);
  }
}

TEST_CASE("binary rows accept only 0 and 1 tokens") {
  CHECK_THROWS_AS((void)parse_sperm("1\n2\n"), parse_error);
  CHECK_THROWS_AS((void)parse_sperm("1\nx\n"), parse_error);
  CHECK_THROWS_AS((void)parse_sperm("1\n01\n"), parse_error);  // one token
  CHECK(parse_sperm("1\n1\n").dense == std::vector<int>{1});
}

TEST_CASE("several matrices can share a file, blank-line separated") {
  testutil::Lcg rng(555);
  std::vector<SPermMatrix> parts;
  for (int rep = 0; rep < 4; ++rep)
    parts.push_back(theta(testutil::random_pi(2, rng)));
  const std::string text = write_sperm_blocks(parts);

  const std::vector<ParsedSperm> blocks = parse_sperm_blocks(text);
  REQUIRE(blocks.size() == 4);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    CHECK(SPermMatrix::from_grid(blocks[b].n, blocks[b].dense) == parts[b]);

  // single-document parsing refuses the same file
  CHECK_THROWS_AS((void)parse_sperm(text), parse_error);
  // and one document is one block
  CHECK(parse_sperm_blocks(write_sperm(parts[0])).size() == 1);
}

TEST_CASE("grids round trip and the writer is canonical") {
  const SudokuMatrix m = SudokuMatrix::from_entries(2, fixtures::valid_grid4());
  const std::string text = write_grid(m);
  CHECK(text ==
        "2\n"
        "1 2 3 4\n"
        "3 4 1 2\n"
        "2 1 4 3\n"
        "4 3 2 1\n");
  const ParsedGrid parsed = parse_grid(text);
  CHECK(parsed.n == 2);
  CHECK(SudokuMatrix::from_entries(parsed.n, parsed.entries) == m);

  // messy but equivalent spelling parses to the same grid
  const ParsedGrid messy = parse_grid(
      "2\n 1 2  3 4\n3 4 1 2\n\n2 1 4 3\n4  3 2 1  \n\n");
  CHECK(messy.entries == parsed.entries);
}

TEST_CASE("grid tokens must be integers but range is the validator's job") {
  CHECK_THROWS_AS((void)parse_grid("1\none\n"), parse_error);
  const ParsedGrid parsed = parse_grid("1\n9\n");
  CHECK(parsed.entries == std::vector<int>{9});
  CHECK_FALSE(validate_sudoku(1, parsed.entries).ok());
}
