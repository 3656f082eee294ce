#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hsub/report.hpp"
#include "hsub/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"numerical verification suites for the Hermitian submonogenic Cauchy kernel"};

  std::string suite = "all";
  std::string format = "human";
  std::string out_path;
  hsub::SuiteConfig cfg;

  app.add_option("--suite", suite,
                 "suite to run: algebra, lemmas, planewaves, kernel, thm41, stokes, "
                 "cauchy-ball, cauchy-cylinder, all")
      ->default_val("all");
  app.add_option("--n", cfg.n, "algebra size (number of Witt pairs beyond the distinguished one)")
      ->default_val(2);
  app.add_option("--seed", cfg.seed, "seed; fully determines all sampled inputs")
      ->default_val(12345);
  app.add_option("--tol-scale", cfg.tol_scale, "multiplier applied to every tolerance")
      ->default_val(1.0);
  app.add_option("--format", format, "output format: human, json-lines, csv")->default_val("human");
  app.add_option("--out", out_path, "write the report to this path instead of stdout");
  app.add_option("--mc-samples", cfg.mc_samples, "sample count for Monte Carlo sphere rules")
      ->default_val(20000);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!hsub::is_valid_suite(suite)) {
    std::cerr << "unknown suite: " << suite << "\n";
    return 2;
  }
  if (format != "human" && format != "json-lines" && format != "csv") {
    std::cerr << "unknown format: " << format << "\n";
    return 2;
  }
  if (cfg.n < 1 || cfg.n > 4) {
    std::cerr << "--n must be between 1 and 4\n";
    return 2;
  }

  std::vector<hsub::CheckReport> reports;
  try {
    reports = hsub::run_suite(suite, cfg);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  std::string text;
  if (format == "json-lines")
    text = hsub::emit_json_lines(reports);
  else if (format == "csv")
    text = hsub::emit_csv(reports);
  else
    text = hsub::emit_human(reports);

  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 2;
    }
    os << text;
  }
  return hsub::all_pass(reports) ? 0 : 1;
}
