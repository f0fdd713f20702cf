#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dowling/cli.hpp"

using dowling::cli::parse_list;

int main(int argc, char** argv) {
  CLI::App app{"exact generalized Stirling, Bell and r-Dowling computations"};
  app.require_subcommand(1);

  dowling::cli::RunConfig cfg;
  std::string m, r, alpha, x, lambda, format;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n-max", cfg.n_max, "largest n");
    sub->add_option("--m", m, "m (or beta) values, comma separated");
    sub->add_option("--r", r, "r values");
    sub->add_option("--alpha", alpha, "alpha values");
    sub->add_option("--x", x, "x values");
    sub->add_option("--lambda", lambda, "lambda values (bars for the bpa table)");
    sub->add_option("--format", format, "csv, json or pretty");
    sub->add_option("--out", cfg.out, "output path (default: standard output)");
    sub->add_option("--suite", cfg.suite, "bell, dowling, unfair or all");
    sub->add_option("--kind", cfg.kind, "gstirling, gbell, dowling, bpa or a special case");
  };
  for (const char* name : {"table", "check", "asymptotic", "quad", "oracle-diff"}) {
    add_common(app.add_subcommand(name, std::string(name) + " command"));
  }

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();
  const CLI::App* sub = app.get_subcommands().front();

  try {
    auto list = [&](const char* opt, const std::string& v, std::optional<std::vector<long>>& dst) {
      if (sub->count(opt)) dst = parse_list(v);
    };
    list("--m", m, cfg.m);
    list("--r", r, cfg.r);
    list("--alpha", alpha, cfg.alpha);
    list("--x", x, cfg.x);
    list("--lambda", lambda, cfg.lambda);
    if (sub->count("--format")) cfg.format = dowling::cli::parse_format(format);

    const auto result = dowling::cli::run(cfg);
    if (cfg.out.empty()) {
      std::cout << result.text;
    } else {
      std::ofstream out(cfg.out, std::ios::binary);
      if (!out) {
        std::cerr << "dowling-kit: cannot open " << cfg.out << "\n";
        return 2;
      }
      out << result.text;
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "dowling-kit: " << e.what() << "\n";
    return 2;
  }
}
