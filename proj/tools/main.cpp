#include <iostream>

#include <CLI11.hpp>

#include "loophh/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hochschild homology of loop-space models for linear group actions"};
  app.require_subcommand(1);

  std::string file;
  loophh::RunOptions opts;
  std::string out, format;
  std::uint64_t seed = 0;

  auto* run = app.add_subcommand("run", "Run every task of a scenario file");
  run->add_option("scenario", file, "Scenario file (JSON)")->required();
  auto* out_opt = run->add_option("--out", out, "Output directory");
  auto* fmt_opt = run->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  auto* seed_opt = run->add_option("--seed", seed, "Seed for randomized checks");
  run->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run only verify-all on a scenario file");
  verify->add_option("scenario", file, "Scenario file (JSON)")->required();
  auto* vout_opt = verify->add_option("--out", out, "Output directory");
  auto* vfmt_opt = verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  auto* vseed_opt = verify->add_option("--seed", seed, "Seed for randomized checks");
  verify->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : loophh::kExitInput;
  }

  opts.verify_only = verify->parsed();
  if (out_opt->count() || vout_opt->count()) opts.out_dir = out;
  if (fmt_opt->count() || vfmt_opt->count()) opts.format = format;
  if (seed_opt->count() || vseed_opt->count()) opts.seed = seed;
  return loophh::run_scenario_file(file, opts, std::cout, std::cerr);
}
