#include "sudogen/io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>

namespace sudogen {

namespace {

struct Line {
  int number = 0;  // 1-based position in the input
  std::vector<std::string> tokens;
};

// Reads everything up front; content lines keep their token split and their
// original line number so errors can point at the right place.
struct LineCursor {
  std::vector<Line> lines;
  std::size_t next = 0;
  int last_line = 0;  // number of physical lines seen

  explicit LineCursor(std::istream& in) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++last_line;
      Line line{last_line, {}};
      std::istringstream split(raw);
      std::string token;
      while (split >> token) line.tokens.push_back(std::move(token));
      if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
  }

  bool done() const { return next == lines.size(); }
  const Line& take() { return lines[next++]; }
  // where to report a missing line: one past the end of the input
  int eof_line() const { return last_line + 1; }
};

std::optional<int> to_int(const std::string& token) {
  int value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

int parse_order(LineCursor& cursor) {
  if (cursor.done())
    throw parse_error(cursor.eof_line(), "expected the order, found no input");
  const Line& line = cursor.take();
  if (line.tokens.size() != 1)
    throw parse_error(line.number, "expected just the order on this line");
  const std::optional<int> n = to_int(line.tokens[0]);
  if (!n) throw parse_error(line.number, "'" + line.tokens[0] +
                                             "' is not an integer order");
  if (*n < 1) throw parse_error(line.number, "the order must be positive");
  return *n;
}

const Line& take_row(LineCursor& cursor, int expected_tokens,
                     const char* what) {
  if (cursor.done())
    throw parse_error(cursor.eof_line(),
                      std::string("expected another ") + what + " row");
  const Line& line = cursor.take();
  if (static_cast<int>(line.tokens.size()) != expected_tokens)
    throw parse_error(line.number, "expected " +
                                       std::to_string(expected_tokens) +
                                       " entries, got " +
                                       std::to_string(line.tokens.size()));
  return line;
}

void require_consumed(LineCursor& cursor) {
  if (!cursor.done())
    throw parse_error(cursor.lines[cursor.next].number,
                      "unexpected trailing content");
}

Pair parse_pair_token(const Line& line, const std::string& token) {
  const std::size_t colon = token.find(':');
  const auto fail = [&]() -> parse_error {
    return parse_error(line.number,
                       "'" + token + "' is not a pair (expected a:b)");
  };
  if (colon == std::string::npos) throw fail();
  const std::optional<int> a = to_int(token.substr(0, colon));
  const std::optional<int> b = to_int(token.substr(colon + 1));
  if (!a || !b) throw fail();
  return {*a, *b};
}

ParsedPi parse_pi_block(LineCursor& cursor) {
  ParsedPi out;
  out.n = parse_order(cursor);
  out.cells.reserve(static_cast<std::size_t>(out.n) * out.n);
  for (int i = 0; i < out.n; ++i) {
    const Line& row = take_row(cursor, out.n, "pair");
    for (const std::string& token : row.tokens)
      out.cells.push_back(parse_pair_token(row, token));
  }
  return out;
}

ParsedSperm parse_sperm_block(LineCursor& cursor) {
  ParsedSperm out;
  out.n = parse_order(cursor);
  const int side = out.n * out.n;
  out.dense.reserve(static_cast<std::size_t>(side) * side);
  for (int r = 0; r < side; ++r) {
    const Line& row = take_row(cursor, side, "matrix");
    for (const std::string& token : row.tokens) {
      if (token == "0" || token == "1") {
        out.dense.push_back(token[0] - '0');
      } else {
        throw parse_error(row.number,
                          "'" + token + "' is not a 0/1 entry");
      }
    }
  }
  return out;
}

ParsedGrid parse_grid_block(LineCursor& cursor) {
  ParsedGrid out;
  out.n = parse_order(cursor);
  const int side = out.n * out.n;
  out.entries.reserve(static_cast<std::size_t>(side) * side);
  for (int r = 0; r < side; ++r) {
    const Line& row = take_row(cursor, side, "grid");
    for (const std::string& token : row.tokens) {
      const std::optional<int> v = to_int(token);
      if (!v)
        throw parse_error(row.number, "'" + token + "' is not an integer");
      out.entries.push_back(*v);
    }
  }
  return out;
}

template <typename T>
T from_text(const std::string& text, T (*parse)(std::istream&)) {
  std::istringstream in(text);
  return parse(in);
}

}  // namespace

ParsedPi parse_pi(std::istream& in) {
  LineCursor cursor(in);
  ParsedPi out = parse_pi_block(cursor);
  require_consumed(cursor);
  return out;
}

ParsedSperm parse_sperm(std::istream& in) {
  LineCursor cursor(in);
  ParsedSperm out = parse_sperm_block(cursor);
  require_consumed(cursor);
  return out;
}

std::vector<ParsedSperm> parse_sperm_blocks(std::istream& in) {
  LineCursor cursor(in);
  std::vector<ParsedSperm> out;
  do {
    out.push_back(parse_sperm_block(cursor));
  } while (!cursor.done());
  return out;
}

ParsedGrid parse_grid(std::istream& in) {
  LineCursor cursor(in);
  ParsedGrid out = parse_grid_block(cursor);
  require_consumed(cursor);
  return out;
}

ParsedPi parse_pi(const std::string& text) {
  return from_text(text, parse_pi);
}
ParsedSperm parse_sperm(const std::string& text) {
  return from_text(text, parse_sperm);
}
std::vector<ParsedSperm> parse_sperm_blocks(const std::string& text) {
  return from_text(text, parse_sperm_blocks);
}
ParsedGrid parse_grid(const std::string& text) {
  return from_text(text, parse_grid);
}

std::string write_pi(const PiMatrix& m) {
  const int n = m.order();
  std::string out = std::to_string(n) + "\n";
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Pair p = m.at(i, j);
      if (j > 1) out += ' ';
      out += std::to_string(p.a) + ":" + std::to_string(p.b);
    }
    out += '\n';
  }
  return out;
}

std::string write_sperm(const SPermMatrix& s) {
  const int side = s.side();
  const std::vector<int> dense = s.to_grid();
  std::string out = std::to_string(s.order()) + "\n";
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      if (c > 0) out += ' ';
      out += static_cast<char>('0' + dense[r * side + c]);
    }
    out += '\n';
  }
  return out;
}

std::string write_sperm_blocks(std::span<const SPermMatrix> parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += '\n';
    out += write_sperm(parts[i]);
  }
  return out;
}

std::string write_grid(const SudokuMatrix& m) {
  const int side = m.side();
  std::string out = std::to_string(m.order()) + "\n";
  for (int r = 1; r <= side; ++r) {
    for (int c = 1; c <= side; ++c) {
      if (c > 1) out += ' ';
      out += std::to_string(m.at(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace sudogen
