// Copyright 2026 The Teamforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// teamforge: solve, validate, build-prefs, bench, generate.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "teamforge/cli/commands.hpp"

namespace tf = teamforge;
namespace cli = teamforge::cli;

namespace {

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("teamforge");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("TEAMFORGE_LOG")) {
    const auto level = spdlog::level::from_str(env);
    // from_str maps unknown names to off; only honour it when asked for.
    if (level != spdlog::level::off || std::string(env) == "off") spdlog::set_level(level);
  }
}

struct TimeFlags {
  std::string limit;
  std::string mode;
  std::uint64_t seed = 0;
  double work_rate = tf::kDefaultWorkRate;
  bool no_symmetry = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--time-limit", limit, "Wall-clock budget, e.g. 250ms, 60s, 15m")
        ->capture_default_str();
    cmd->add_option("--time-mode", mode, "global: one deadline; timeboxed: split per stage")
        ->check(CLI::IsMember({"global", "timeboxed"}))
        ->capture_default_str();
    cmd->add_option("--seed", seed, "0 keeps the deterministic branching order")
        ->capture_default_str();
    cmd->add_option("--work-rate", work_rate,
                    "Work units per budget second; 0 uses the wall clock only")
        ->capture_default_str();
    cmd->add_flag("--no-symmetry-breaking", no_symmetry, "Explore symmetric team labelings");
  }

  tf::SolveConfig config() const {
    tf::SolveConfig cfg;
    cfg.time_limit = cli::parse_duration(limit);
    cfg.time_mode = mode == "timeboxed" ? tf::TimeMode::Timeboxed : tf::TimeMode::Global;
    cfg.seed = seed;
    cfg.work_rate = work_rate;
    cfg.symmetry_breaking = !no_symmetry;
    return cfg;
  }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();

  CLI::App app{"teamforge: educational team formation"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 usage, 2 infeasible, 3 unknown (time ran out), 4 input error, "
      "5 validation failed.\nTEAMFORGE_LOG=trace|debug|info|warn|error|off sets log verbosity.");

  // solve
  cli::SolveOptions solve_opts;
  TimeFlags solve_time{"60s", "global"};
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Solve an instance with a strategy");
  solve->add_option("instance", solve_opts.instance, "Instance file")->required();
  solve->add_option("--strategy", solve_opts.strategy, "Catalog id (S3.3) or EDU-TF(...) expression")
      ->capture_default_str();
  solve_time.attach(solve);
  solve->add_option("--out,-o", solve_out, "Solution file to write");
  solve->add_flag("--record-timing", solve_opts.record_timing,
                  "Also store wall-clock timings (not reproducible)");

  // validate
  cli::ValidateOptions validate_opts;
  auto* validate = app.add_subcommand("validate", "Re-check a solution against its instance");
  validate->add_option("instance", validate_opts.instance, "Instance file")->required();
  validate->add_option("solution", validate_opts.solution, "Solution file")->required();

  // build-prefs
  cli::BuildPrefsOptions prefs_opts;
  std::string prefs_explicit, prefs_profiles, prefs_instance, prefs_out, prefs_prov;
  auto* build = app.add_subcommand("build-prefs", "Build a preference matrix from CSV inputs");
  build->add_option("--explicit", prefs_explicit, "CSV with header from,to,value,kind");
  build->add_option("--profiles", prefs_profiles, "Profile CSV (student,<attr>...; kind row)")
      ;
  build->add_option("--instance", prefs_instance, "Take students and d from this instance and "
                                                  "write it back with the new preferences")
      ;
  build->add_option("--bound", prefs_opts.bound, "Preference bound d without --instance")
      ->capture_default_str();
  build->add_option("--out,-o", prefs_out, "Output file")->required();
  build->add_option("--provenance", prefs_prov, "Sidecar path (default <out>.provenance.json)");

  // generate
  cli::GenerateOptions gen_opts;
  std::string gen_out, gen_encoding = "auto";
  auto* generate = app.add_subcommand("generate", "Generate a synthetic course from a preset");
  generate->add_option("preset", gen_opts.preset, "D1 .. D8.2")->required();
  generate->add_option("--seed", gen_opts.seed)->capture_default_str();
  generate->add_option("--out,-o", gen_out, "Instance file (default: stdout)");
  generate->add_flag("--ensure-feasible", gen_opts.ensure_feasible,
                     "Redraw until a feasible assignment is found");
  generate->add_option("--encoding", gen_encoding, "Preference encoding")
      ->check(CLI::IsMember({"auto", "sparse", "dense"}))
      ->capture_default_str();

  // bench
  cli::BenchOptions bench_opts;
  TimeFlags bench_time{"10s", "timeboxed"};
  std::string bench_presets = "all", bench_strategies = "all", bench_dir;
  std::string bench_out, bench_table, bench_trace;
  std::vector<std::string> bench_manual;
  auto* bench = app.add_subcommand("bench", "Run strategies over presets or instance files");
  bench->add_option("--presets", bench_presets, "Comma list of presets, 'all' or 'none'")
      ->capture_default_str();
  bench->add_option("--instances", bench_dir, "Directory of instance files");
  bench->add_option("--strategies", bench_strategies, "Comma list of catalog ids or 'all'")
      ->capture_default_str();
  bench_time.attach(bench);
  bench->add_flag("--per-objective", bench_opts.per_objective,
                  "Multiply the time limit by each strategy's stage count");
  bench->add_option("--instance-seed", bench_opts.instance_seed, "Generator seed for presets")
      ->capture_default_str();
  bench->add_flag("--ensure-feasible", bench_opts.ensure_feasible, "Redraw infeasible presets");
  bench->add_option("--baseline-seed", bench_opts.baseline_seed, "Seed of the random baseline")
      ->capture_default_str();
  bench->add_option("--manual", bench_manual, "Solution files shown as a manual column");
  bench->add_option("--out,-o", bench_out, "JSON report");
  bench->add_option("--table", bench_table, "Plain-text table");
  bench->add_option("--trace", bench_trace, "Quality-over-time CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  // Flag values the parser cannot check on its own count as usage errors.
  try {
    if (*solve) solve_opts.config = solve_time.config();
    if (*bench) bench_opts.config = bench_time.config();
    solve_opts.config.validate();
    bench_opts.config.validate();
  } catch (const tf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }

  try {
    if (*solve) {
      solve_opts.out = solve_out;
      return cli::cmd_solve(solve_opts, std::cout);
    }
    if (*validate) return cli::cmd_validate(validate_opts, std::cout);
    if (*build) {
      if (!prefs_explicit.empty()) prefs_opts.explicit_csv = prefs_explicit;
      if (!prefs_profiles.empty()) prefs_opts.profiles_csv = prefs_profiles;
      if (!prefs_instance.empty()) prefs_opts.instance = prefs_instance;
      prefs_opts.out = prefs_out;
      prefs_opts.provenance = prefs_prov;
      return cli::cmd_build_prefs(prefs_opts, std::cout);
    }
    if (*generate) {
      gen_opts.out = gen_out;
      gen_opts.encoding = gen_encoding == "sparse"  ? cli::Encoding::Sparse
                          : gen_encoding == "dense" ? cli::Encoding::Dense
                                                    : cli::Encoding::Auto;
      return cli::cmd_generate(gen_opts, std::cout);
    }
    if (*bench) {
      if (bench_presets != "none") bench_opts.presets = split_list(bench_presets);
      if (!bench_dir.empty()) bench_opts.instance_dir = bench_dir;
      bench_opts.strategies = split_list(bench_strategies);
      for (const auto& m : bench_manual) bench_opts.manual.emplace_back(m);
      bench_opts.out = bench_out;
      bench_opts.table = bench_table;
      bench_opts.trace = bench_trace;
      return cli::cmd_bench(bench_opts, std::cout);
    }
  } catch (const tf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInputError;
  }
  return cli::kExitUsage;
}
