#include "sudogen/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "sudogen/enumerator.hpp"
#include "sudogen/generator.hpp"
#include "sudogen/io.hpp"
#include "sudogen/sudoku.hpp"

namespace sudogen::cli {

namespace {

constexpr int kOk = 0;
constexpr int kInvalidInput = 1;
constexpr int kRefused = 2;
constexpr int kUsage = 3;

struct CliConfig {
  int n = 2;
  std::uint64_t seed = 0;
  bool seed_given = false;
  GenerationBudget budget;
  bool allow_large = false;
  std::string what;    // count: pi | sudoku
  std::string format;  // verify: pi | sperm | grid
  std::string from;    // convert
  std::string to;
  std::string input_path;
  std::string output_path = "-";
};

std::uint64_t entropy_seed() {
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

// path "-" means the run's own input stream
std::string read_input(const std::string& path, std::istream& in,
                       std::ostream& err, bool& ok) {
  ok = true;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "cannot read '" << path << "'\n";
    ok = false;
    return {};
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

int write_output(const std::string& path, const std::string& text,
                 std::ostream& out, std::ostream& err) {
  if (path == "-") {
    out << text;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!(file << text)) {
    err << "cannot write '" << path << "'\n";
    return kInvalidInput;
  }
  return kOk;
}

int run_generate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = cfg.seed_given ? cfg.seed : entropy_seed();
  const auto start = std::chrono::steady_clock::now();
  const GenerationResult result =
      generate_tuple(cfg.n, ChoiceStrategy::random(seed), cfg.budget);
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();

  if (!result.ok()) {
    err << "seed=" << seed << " n=" << cfg.n
        << " budget exhausted: no grid after " << result.stats.backtracks
        << " backtracks and " << result.stats.restarts << " restarts\n";
    return kRefused;
  }

  std::vector<SPermMatrix> parts;
  parts.reserve(result.tuple->size());
  for (const PiMatrix& layer : *result.tuple) parts.push_back(theta(layer));
  const SudokuMatrix grid = compose(parts);

  char ms_buf[32];
  std::snprintf(ms_buf, sizeof ms_buf, "%.3f", elapsed_ms);
  err << "seed=" << seed << " n=" << cfg.n << " elapsed_ms=" << ms_buf
      << " decisions=" << result.stats.decisions
      << " backtracks=" << result.stats.backtracks
      << " restarts=" << result.stats.restarts << "\n";
  return write_output(cfg.output_path, write_grid(grid), out, err);
}

int run_count(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  CountOptions options;
  options.allow_large = cfg.allow_large;
  try {
    const CountReport report = cfg.what == "pi"
                                   ? count_pi_enumerated(cfg.n, options)
                                   : count_sudoku(cfg.n, options);
    out << report.machine_line() << "\n";
    err << report.human_summary() << "\n";
    return kOk;
  } catch (const refusal_error& e) {
    // the library hint names its option field; users here have a flag instead
    std::string what = e.what();
    const std::string field_hint = "set allow_large to insist";
    if (const auto pos = what.find(field_hint); pos != std::string::npos)
      what.replace(pos, field_hint.size(), "pass --allow-large to insist");
    err << "refused: " << what << "\n";
    return kRefused;
  }
}

int run_verify(const CliConfig& cfg, std::istream& in, std::ostream& out,
               std::ostream& err) {
  bool ok = false;
  const std::string text = read_input(cfg.input_path, in, err, ok);
  if (!ok) return kInvalidInput;

  try {
    if (cfg.format == "pi") {
      const ParsedPi parsed = parse_pi(text);
      const ValidationReport report = validate_pi(parsed.n, parsed.cells);
      if (!report.ok()) {
        out << report.to_string() << "\n";
        return kInvalidInput;
      }
      out << "valid pair matrix of order " << parsed.n << "\n";
    } else if (cfg.format == "sperm") {
      const std::vector<ParsedSperm> blocks = parse_sperm_blocks(text);
      bool all_ok = true;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        const ValidationReport report =
            validate_sperm(blocks[b].n, blocks[b].dense);
        if (report.ok()) continue;
        all_ok = false;
        for (const Violation& v : report.violations) {
          if (blocks.size() > 1) out << "matrix " << b + 1 << ": ";
          out << v.message << "\n";
        }
      }
      if (!all_ok) return kInvalidInput;
      out << "valid: " << blocks.size()
          << (blocks.size() == 1 ? " matrix" : " matrices") << "\n";
    } else {
      const ParsedGrid parsed = parse_grid(text);
      const ValidationReport report = validate_sudoku(parsed.n, parsed.entries);
      if (!report.ok()) {
        out << report.to_string() << "\n";
        return kInvalidInput;
      }
      out << "valid grid of order " << parsed.n << "\n";
    }
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kOk;
}

int run_convert(const CliConfig& cfg, std::istream& in, std::ostream& out,
                std::ostream& err) {
  bool ok = false;
  const std::string text = read_input(cfg.input_path, in, err, ok);
  if (!ok) return kInvalidInput;

  try {
    std::string output;
    if (cfg.from == "pi" && cfg.to == "sperm") {
      const ParsedPi parsed = parse_pi(text);
      output = write_sperm(theta(PiMatrix::from_cells(parsed.n, parsed.cells)));
    } else if (cfg.from == "sperm" && cfg.to == "pi") {
      const ParsedSperm parsed = parse_sperm(text);
      output =
          write_pi(theta_inv(SPermMatrix::from_grid(parsed.n, parsed.dense)));
    } else if (cfg.from == "grid" && cfg.to == "sperm") {
      const ParsedGrid parsed = parse_grid(text);
      output = write_sperm_blocks(
          decompose(SudokuMatrix::from_entries(parsed.n, parsed.entries)));
    } else if (cfg.from == "sperm" && cfg.to == "grid") {
      const std::vector<ParsedSperm> blocks = parse_sperm_blocks(text);
      std::vector<SPermMatrix> parts;
      parts.reserve(blocks.size());
      for (const ParsedSperm& block : blocks)
        parts.push_back(SPermMatrix::from_grid(block.n, block.dense));
      output = write_grid(compose(parts));
    } else {
      err << "cannot convert " << cfg.from << " to " << cfg.to << "\n";
      return kUsage;
    }
    return write_output(cfg.output_path, output, out, err);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Sudoku matrix toolkit: generate, count, verify, convert"};
  app.require_subcommand(1);

  CLI::App* generate =
      app.add_subcommand("generate", "generate one random filled grid");
  generate
      ->add_option("--n", cfg.n, "block order (the grid is n^2 x n^2)")
      ->required()
      ->check(CLI::PositiveNumber);
  generate->add_option("--seed", cfg.seed,
                       "64-bit seed; same seed, same grid (default: random)");
  generate->add_option(
      "--max-backtracks", cfg.budget.max_backtracks,
      "withdrawn decisions per attempt before reseeding");
  generate->add_option("--max-restarts", cfg.budget.max_restarts,
                       "reseeded attempts after the first");
  generate->add_option("-o,--output", cfg.output_path,
                       "write the grid here instead of stdout");

  CLI::App* count = app.add_subcommand(
      "count", "exhaustively count matrices of a given order");
  count->add_option("--n", cfg.n, "order to count at")
      ->required()
      ->check(CLI::PositiveNumber);
  count
      ->add_option("--what", cfg.what,
                   "pi for pair matrices, sudoku for filled grids")
      ->required()
      ->check(CLI::IsMember({"pi", "sudoku"}));
  count->add_flag("--allow-large", cfg.allow_large,
                  "run even when the count is out of practical reach");

  CLI::App* verify = app.add_subcommand(
      "verify", "check a matrix file and report every violation");
  verify->add_option("--format", cfg.format, "what the file claims to hold")
      ->required()
      ->check(CLI::IsMember({"pi", "sperm", "grid"}));
  verify->add_option("path", cfg.input_path, "input file, - for stdin")
      ->required();

  CLI::App* convert = app.add_subcommand(
      "convert", "rewrite a matrix in another representation");
  convert->add_option("--from", cfg.from, "input representation")
      ->required()
      ->check(CLI::IsMember({"pi", "sperm", "grid"}));
  convert->add_option("--to", cfg.to, "output representation")
      ->required()
      ->check(CLI::IsMember({"pi", "sperm", "grid"}));
  convert->add_option("path", cfg.input_path, "input file, - for stdin")
      ->required();
  convert->add_option("-o,--output", cfg.output_path,
                      "write here instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("sudogen");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    CLI::App* active = &app;
    while (!active->get_subcommands().empty())
      active = active->get_subcommands().front();
    out << active->help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  cfg.seed_given = generate->count("--seed") > 0;

  try {
    if (app.got_subcommand(generate)) return run_generate(cfg, out, err);
    if (app.got_subcommand(count)) return run_count(cfg, out, err);
    if (app.got_subcommand(verify)) return run_verify(cfg, in, out, err);
    return run_convert(cfg, in, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace sudogen::cli
