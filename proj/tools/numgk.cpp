// numgk: tables, entropy reports, isometry checks and word search on
// numerical Grothendieck groups of bielliptic, K3, Enriques and abelian
// surfaces.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 computation or
// incompatibility error.

#include "numgk/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitCompute = 2;

struct Options {
  std::string format = "json";
  std::optional<long long> digits;
  std::optional<long long> type;
  std::string surface;
  std::string word;
  std::string gram_k;
  std::string kblock;
  std::string generators;
  std::size_t max_len = 2;
  std::size_t budget = 100000;
  bool report_all = false;
  bool inverses = false;
  unsigned workers = 1;
};

std::optional<numgk::Matrix> matrix_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return numgk::cli::parse_matrix_option(text);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace numgk;
  Options o;
  CLI::App app{"Numerical Grothendieck group actions, spectral radii and categorical entropy."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "json, csv or markdown")->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
  app.add_option("--digits", o.digits, "decimal digits (default 12, or NUMGK_DIGITS)");

  auto* table1 = app.add_subcommand("table1", "classification of bielliptic surfaces");
  auto* table2 = app.add_subcommand("table2", "spectral radii of the relative FM transform after -(x)O(-H)");
  table2->add_option("--type", o.type, "restrict to one bielliptic type");

  auto* entropy = app.add_subcommand("entropy", "spectral radius and categorical entropy of a word");
  auto* check = app.add_subcommand("check", "isometry, determinant and fiber-projection checks");
  for (auto* sub : {entropy, check}) {
    sub->add_option("surface", o.surface, "bielliptic:<t> | k3[:d=<d>] | enriques:l=<l>[,d=<d>] | abelian:type=<t>,l=<l>")
        ->required();
    sub->add_option("word", o.word, "';'-separated tokens, rightmost applied first")->required();
    sub->add_option("--gram-k", o.gram_k, "gram matrix of K for block surfaces, rows ';' entries ','");
    sub->add_option("--kblock", o.kblock, "K-block isometry; lifts the whole word as lift(word|K)");
  }

  auto* search_cmd = app.add_subcommand("search", "breadth-first search for words with rho > 1");
  search_cmd->add_option("surface", o.surface, "surface spec")->required();
  search_cmd->add_option("--generators", o.generators, "';'-separated generator tokens");
  search_cmd->add_option("--max-len", o.max_len, "maximum word length");
  search_cmd->add_option("--budget", o.budget, "maximum number of distinct matrices")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--report-all", o.report_all, "report every minimal word instead of the first hit");
  search_cmd->add_flag("--inverses", o.inverses, "also use formal inverses of the generators");
  search_cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1u, 256u));
  search_cmd->add_option("--gram-k", o.gram_k, "gram matrix of K for block surfaces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const cli::Format format = cli::parse_format(o.format);
    const unsigned digits = cli::resolve_digits(o.digits);
    cli::Document doc;
    if (table1->parsed()) {
      doc = cli::cmd_table1();
    } else if (table2->parsed()) {
      doc = cli::cmd_table2(o.type, digits);
    } else {
      const SurfaceModel model = cli::parse_surface(o.surface, matrix_option(o.gram_k));
      if (entropy->parsed()) {
        doc = cli::cmd_entropy(model, o.word, digits, matrix_option(o.kblock));
      } else if (check->parsed()) {
        doc = cli::cmd_check(model, o.word, matrix_option(o.kblock));
      } else {
        SearchConfig config;
        config.generators =
            o.generators.empty() ? cli::default_generators(model) : cli::parse_word_checked(o.generators);
        config.include_inverses = o.inverses;
        config.max_len = o.max_len;
        config.max_states = o.budget;
        config.report_all = o.report_all;
        config.workers = o.workers;
        doc = cli::cmd_search(model, config, digits);
      }
    }
    std::cout << cli::render(doc, format);
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "numgk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numgk: " << e.what() << '\n';
    return kExitCompute;
  }
}
