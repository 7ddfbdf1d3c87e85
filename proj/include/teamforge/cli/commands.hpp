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

// The teamforge subcommands as library calls. Each returns a process exit
// code and writes human-readable output to `out`; input problems surface as
// teamforge::Error and are mapped by exit_code_for().

#ifndef TEAMFORGE_CLI_COMMANDS_HPP
#define TEAMFORGE_CLI_COMMANDS_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "teamforge/cli/formats.hpp"
#include "teamforge/error.hpp"
#include "teamforge/solver.hpp"

namespace teamforge::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,                // optimal or feasible, checks passed
  kExitUsage = 1,             // bad command line
  kExitInfeasible = 2,        // proven infeasible
  kExitUnknown = 3,           // time ran out before any feasible assignment
  kExitInputError = 4,        // unreadable, malformed or invalid input
  kExitValidationFailed = 5,  // validate found a failing check
};

int exit_code_for(Errc code) noexcept;

using std::filesystem::path;

struct SolveOptions {
  path instance;
  std::string strategy = "S2.1";
  SolveConfig config;
  path out;  // empty: no file
  bool record_timing = false;
};

int cmd_solve(const SolveOptions& opts, std::ostream& out);

struct ValidateOptions {
  path instance;
  path solution;
};

int cmd_validate(const ValidateOptions& opts, std::ostream& out);

struct BuildPrefsOptions {
  std::optional<path> explicit_csv;
  std::optional<path> profiles_csv;
  /// When set, students come from this instance and the output is the
  /// instance with its preferences replaced.
  std::optional<path> instance;
  int bound = 4;  // ignored when an instance is given (its d is used)
  path out;
  path provenance;  // empty: <out stem>.provenance.json next to out
};

int cmd_build_prefs(const BuildPrefsOptions& opts, std::ostream& out);

struct GenerateOptions {
  std::string preset;
  std::uint64_t seed = 0;
  bool ensure_feasible = false;
  Encoding encoding = Encoding::Auto;
  path out;  // empty: write to `out` stream
};

int cmd_generate(const GenerateOptions& opts, std::ostream& out);

struct BenchOptions {
  std::vector<std::string> presets;  // names, or {"all"}
  std::optional<path> instance_dir;  // every *.json instance, sorted by name
  std::vector<std::string> strategies{"all"};
  SolveConfig config;
  /// Scale time_limit by the adapted stage count of each strategy.
  bool per_objective = false;
  std::uint64_t instance_seed = 0;
  bool ensure_feasible = false;
  std::uint64_t baseline_seed = 1;
  std::vector<path> manual;  // SolutionFiles, matched to instances by fingerprint
  path out;                  // JSON report
  path table;                // plain-text table
  path trace;                // quality-over-time CSV
};

struct BenchCell {
  std::string strategy;  // catalog id or the expression as given
  std::string adapted;   // rendered adapted strategy, empty on error
  std::string error;     // per-cell failure, run continues
  SolveStatus status = SolveStatus::Unknown;
  std::vector<StageStatus> stage_statuses;
  std::vector<std::optional<ObjectiveValue>> stage_values;
  std::optional<ObjectiveValue> o1;
  std::map<int, ObjectiveValue> counts;  // realized pairs per preference value
  double runtime_s = 0;
  double time_to_best_s = 0;
  std::uint64_t work = 0;
  std::vector<TracePoint> trace;
  bool certified = false;
};

struct BenchReference {
  std::optional<ObjectiveValue> o1;
  std::map<int, ObjectiveValue> counts;
};

struct BenchInstance {
  std::string name;
  std::string fingerprint;
  int m = 0, n = 0, k_min = 0, k_max = 0, num_skills = 0, c = 0;
  std::vector<int> columns;  // preference values reported, descending
  BenchReference baseline;
  std::optional<BenchReference> manual;
  std::vector<BenchCell> cells;

  /// Solved cells whose O1 is strictly above the baseline's.
  int beating_baseline() const;
  int solved_cells() const;
};

struct BenchReport {
  std::vector<BenchInstance> instances;
  double elapsed_s = 0;

  Json to_json(const BenchOptions& opts) const;
  std::string to_table() const;
  std::string trace_csv() const;
};

/// Runs every (instance, strategy) cell. Progress lines go to `progress`
/// when non-null.
BenchReport run_bench(const BenchOptions& opts, std::ostream* progress);

int cmd_bench(const BenchOptions& opts, std::ostream& out);

/// Realized ordered pairs per preference value for each of `columns`.
std::map<int, ObjectiveValue> realized_counts(const Instance& inst, const Assignment& asg,
                                              const std::vector<int>& columns);

}  // namespace teamforge::cli

#endif  // TEAMFORGE_CLI_COMMANDS_HPP
