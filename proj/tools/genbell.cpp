// genbell: tables, enumerations, bijection transforms and self-checks for the
// generalized Bell and Stirling numbers B_{m,m}(n), S_{r,s}(n,k).

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "genbell/cli.hpp"

#ifndef GENBELL_DEFAULT_FIXTURES
#define GENBELL_DEFAULT_FIXTURES "fixtures"
#endif

namespace {

using namespace genbell::cli;

struct Options {
  unsigned r = 3;
  unsigned s = 3;
  unsigned m = 3;
  unsigned n_max = 5;
  std::optional<unsigned> k;
  std::string cliques;
  std::string format;
  std::string fixtures = GENBELL_DEFAULT_FIXTURES;
  std::string output;
  std::string kind;
  std::string direction;
  std::string input;
  std::string suite = "all";
  std::size_t max_vertices = 8;
  bool json_report = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Bell and Stirling numbers: clique colourings and labelled Eulerian digraphs"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub, std::string const& def) {
    sub->add_option("--format", opt.format, "csv | json | markdown | text | dot (default: " + def + ")");
    sub->add_option("--output", opt.output, "write to this file instead of stdout");
  };

  auto* table = app.add_subcommand("table", "S_{r,s}(n,k) triangle for n = 1..n-max");
  table->add_option("--r", opt.r, "r (r >= s)")->required();
  table->add_option("--s", opt.s, "s (s >= 1)")->required();
  table->add_option("--n-max", opt.n_max, "last row")->capture_default_str();
  add_format(table, "text");

  auto* bell = app.add_subcommand("bell", "B_{m,m}(n) for n = 1..n-max");
  bell->add_option("--m", opt.m, "clique size")->required();
  bell->add_option("--n-max", opt.n_max, "last term")->capture_default_str();
  add_format(bell, "text");

  auto* enumerate = app.add_subcommand("enumerate", "stream canonical colourings or digraphs");
  enumerate->add_option("kind", opt.kind, "colourings | digraphs")
      ->required()
      ->check(CLI::IsMember({"colourings", "digraphs"}));
  enumerate->add_option("--cliques", opt.cliques, "comma-separated clique sizes")->required();
  enumerate->add_option("--k", opt.k, "only colourings with k blocks / digraphs with k vertices");
  add_format(enumerate, "text");

  auto* bijection = app.add_subcommand("bijection", "map a colouring to its digraph or back");
  bijection->add_option("--direction", opt.direction, "to-digraph | to-colouring")
      ->required()
      ->check(CLI::IsMember({"to-digraph", "to-colouring"}));
  bijection->add_option("--cliques", opt.cliques, "comma-separated clique sizes")->required();
  bijection->add_option("--input", opt.input, "JSON input file (default: stdin)");
  add_format(bijection, "json");

  auto* verify = app.add_subcommand("verify", "run a self-check suite");
  verify->add_option("suite", opt.suite, "tables | oeis | bijection | all")
      ->check(CLI::IsMember({"tables", "oeis", "bijection", "all"}))
      ->capture_default_str();
  verify->add_option("--fixtures", opt.fixtures, "fixture directory")->capture_default_str();
  verify->add_option("--max-vertices", opt.max_vertices, "bijection suite: largest sum of clique sizes")
      ->capture_default_str();
  verify->add_option("--n-max", opt.n_max, "conjecture checks: last n");
  verify->add_flag("--json", opt.json_report, "machine-readable report");
  verify->add_option("--output", opt.output, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* out = &std::cout;
  if (!opt.output.empty()) {
    file = std::make_unique<std::ofstream>(opt.output);
    if (!*file) {
      std::cerr << "error: cannot write " << opt.output << '\n';
      return exit_usage;
    }
    out = file.get();
  }

  if (opt.format.empty()) {
    opt.format = bijection->parsed() ? "json" : "text";
  }
  auto const format = parse_format(opt.format);
  if (!format && !verify->parsed()) {
    std::cerr << "error: unknown format '" << opt.format << "'\n";
    return exit_usage;
  }

  try {
    if (table->parsed()) {
      return cmd_table(opt.r, opt.s, opt.n_max, *format, *out, std::cerr);
    }
    if (bell->parsed()) {
      return cmd_bell(opt.m, opt.n_max, *format, *out, std::cerr);
    }
    if (enumerate->parsed()) {
      auto const kind = opt.kind == "digraphs" ? EnumerateKind::digraphs : EnumerateKind::colourings;
      return cmd_enumerate(kind, parse_sizes(opt.cliques), opt.k, *format, *out, std::cerr);
    }
    if (bijection->parsed()) {
      auto const dir = opt.direction == "to-digraph" ? Direction::to_digraph : Direction::to_colouring;
      auto const sizes = parse_sizes(opt.cliques);
      if (opt.input.empty()) {
        return cmd_bijection(dir, sizes, std::cin, *format, *out, std::cerr);
      }
      std::ifstream in(opt.input);
      if (!in) {
        std::cerr << "error: cannot read " << opt.input << '\n';
        return exit_usage;
      }
      return cmd_bijection(dir, sizes, in, *format, *out, std::cerr);
    }
    if (verify->parsed()) {
      genbell::VerifyOptions vopt;
      vopt.fixtures = opt.fixtures;
      vopt.max_vertices = opt.max_vertices;
      if (verify->count("--n-max") > 0) {
        vopt.conjecture_n_max = opt.n_max;
      }
      return cmd_verify(*parse_suite(opt.suite), vopt, opt.json_report, *out, std::cerr);
    }
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
