// nspec: spectrum invariants of a polynomial germ from its Newton polyhedron.

#include <iostream>

#include <CLI11.hpp>

#include "nspec/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Spectrum invariants of a polynomial germ from its Newton polyhedron"};
  app.require_subcommand(1, 1);

  nspec::RunConfig cfg;
  std::string expr;
  std::string path;
  std::uint64_t seed = 0;
  int count = 0;

  for (const char* name : {"spectrum", "hodge", "zeta", "pairs", "check"}) {
    CLI::App* sub = app.add_subcommand(name);
    auto* e = sub->add_option("--expr", expr, "polynomial text or JSON support");
    auto* f = sub->add_option("file", path, "file holding polynomial text or a JSON support");
    e->excludes(f);
    sub->add_flag("--json", cfg.json, "print the JSON report");
  }
  CLI::App* random = app.add_subcommand("random", "deterministic corpus of convenient simplicial supports");
  random->add_option("--seed", seed)->required();
  random->add_option("--count", count)->required()->check(CLI::PositiveNumber);
  random->add_flag("--json", cfg.json, "print the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = *nspec::parse_command(chosen->get_name());
  if (cfg.command == nspec::Command::random) {
    cfg.seed = seed;
    cfg.count = count;
  } else if (!expr.empty()) {
    cfg.input = expr;
  } else if (!path.empty()) {
    cfg.input = path;
    cfg.input_is_path = true;
  } else {
    std::cerr << "error: give --expr or an input file\n";
    return 2;
  }

  nspec::RunResult r = nspec::run(cfg);
  if (cfg.json) {
    std::cout << r.report.dump(2) << "\n";
  } else if (r.report.contains("error")) {
    std::cerr << r.text;
  } else {
    std::cout << r.text;
  }
  return r.exit_code;
}
