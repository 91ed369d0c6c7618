#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sudogen/pi_matrix.hpp"
#include "sudogen/sperm.hpp"
#include "sudogen/sudoku.hpp"

namespace sudogen {

// All three text formats share the layout: an order line followed by the
// rows, one line each with space-separated tokens.  Pair matrices use n
// rows of a:b tokens, one-per-line binary matrices n^2 rows of 0/1, filled
// grids n^2 rows of values.  Parsers accept blank lines around the content
// and any amount of spacing inside a row; writers emit the canonical form
// (single spaces, one trailing newline), which parses back byte-identically.
//
// Parsing stops at lexical and shape problems only; whether the numbers
// form a valid matrix is the validators' business.  A one-per-line file may
// hold several matrices separated by blank lines, each with its own order
// line.

struct parse_error : std::runtime_error {
  int line;  // 1-based input line the problem was found on

  parse_error(int line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " +
                           what),
        line(line_number) {}
};

struct ParsedPi {
  int n = 0;
  std::vector<Pair> cells;  // row-major, n^2 of them
};

struct ParsedSperm {
  int n = 0;
  std::vector<int> dense;  // row-major, n^4 zeros and ones
};

struct ParsedGrid {
  int n = 0;
  std::vector<int> entries;  // row-major, n^4 of them
};

ParsedPi parse_pi(std::istream& in);
ParsedPi parse_pi(const std::string& text);

// exactly one matrix in the input
ParsedSperm parse_sperm(std::istream& in);
ParsedSperm parse_sperm(const std::string& text);

// one or more blank-line separated matrices
std::vector<ParsedSperm> parse_sperm_blocks(std::istream& in);
std::vector<ParsedSperm> parse_sperm_blocks(const std::string& text);

ParsedGrid parse_grid(std::istream& in);
ParsedGrid parse_grid(const std::string& text);

std::string write_pi(const PiMatrix& m);
std::string write_sperm(const SPermMatrix& s);
std::string write_sperm_blocks(std::span<const SPermMatrix> parts);
std::string write_grid(const SudokuMatrix& m);

}  // namespace sudogen
