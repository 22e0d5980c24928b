#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "apsp/cli_driver.hpp"

namespace {

using apsp::cli::BenchConfig;
using apsp::cli::EngineKind;
using apsp::cli::InputFormat;
using apsp::cli::Mode;
using apsp::cli::RunConfig;

const std::map<std::string, Mode> kModeNames{{"static", Mode::kStatic},
                                             {"dawg", Mode::kDawg},
                                             {"stree", Mode::kStree},
                                             {"verify", Mode::kVerify}};
const std::map<std::string, EngineKind> kEngineNames{
    {"dawg", EngineKind::kDawg}, {"stree", EngineKind::kStree}};
const std::map<std::string, InputFormat> kFormatNames{
    {"lines", InputFormat::kLines}, {"fasta", InputFormat::kFasta}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"All-pairs suffix-prefix overlaps over static, growing, and "
               "fully dynamic string sets"};
  app.require_subcommand(0, 1);

  RunConfig config;
  std::string input_path;
  app.add_option("--mode", config.mode, "static | dawg | stree | verify")
      ->transform(CLI::CheckedTransformer(kModeNames, CLI::ignore_case));
  app.add_option("--min-len", config.min_len, "length threshold (default 0)");
  app.add_flag("--include-self,!--no-include-self", config.include_self,
               "emit (i,i) self overlaps (default on)");
  app.add_flag("--emit-zero,!--no-emit-zero", config.emit_zero,
               "emit zero-length overlaps when --min-len 0 (default on)");
  app.add_option("--format", config.format, "lines | fasta")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
  app.add_flag("--stats", config.stats, "append structure/visit counters");
  app.add_option("--engine", config.verify_engine,
                 "engine checked by verify mode: dawg | stree")
      ->transform(CLI::CheckedTransformer(kEngineNames, CLI::ignore_case));
  app.add_option("--input", input_path, "input file (default stdin)");

  BenchConfig bench_config;
  CLI::App* bench = app.add_subcommand(
      "bench", "generate a random workload and report per-op timings as CSV");
  bench->add_option("--mode", bench_config.mode, "dawg | stree | static")
      ->transform(CLI::CheckedTransformer(kModeNames, CLI::ignore_case));
  bench->add_option("--k", bench_config.k, "number of strings");
  bench->add_option("--len", bench_config.len, "string length");
  bench->add_option("--sigma", bench_config.sigma, "alphabet size (<= 26)")
      ->check(CLI::Range(1u, 26u));
  bench->add_option("--seed", bench_config.seed, "RNG seed");
  bench->add_option("--min-len", bench_config.min_len, "length threshold");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bench->parsed()) {
      if (bench_config.mode == Mode::kVerify) {
        std::cerr << "bench supports dawg, stree, and static modes\n";
        return 2;
      }
      apsp::cli::BenchReport report = apsp::cli::bench(bench_config);
      apsp::cli::write_bench_csv(report, std::cout);
      return 0;
    }

    std::ifstream file;
    if (!input_path.empty()) {
      file.open(input_path);
      if (!file) {
        std::cerr << "cannot open input file: " << input_path << '\n';
        return 2;
      }
    }
    std::istream& in = input_path.empty() ? std::cin : file;
    return apsp::cli::run(config, in, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
