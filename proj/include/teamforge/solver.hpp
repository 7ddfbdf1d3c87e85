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

// Exact lexicographic team formation.
//
// Each stage of a strategy runs a depth-first branch-and-bound over
// assignments of students (in a fixed branching order) to teams. Earlier
// stages are kept at their final values by admissible bounds (sum and count
// objectives) or by forbidding pairs outright (O2 thresholds, zero-count
// O3- stages). The incumbent of one stage seeds the next, so every stage
// starts with a solution that already meets all earlier thresholds.
//
// Time control: `time_limit` is a wall-clock budget. In global mode the
// stages share one deadline; in timeboxed mode every stage gets
// time_limit / stages from its own start and unused time is dropped.
// Besides the wall clock the search meters deterministic work units; when
// `work_rate` is positive a stage also stops after budget * work_rate units,
// which is what makes repeated runs with seed 0 reproducible bit for bit.

#ifndef TEAMFORGE_SOLVER_HPP
#define TEAMFORGE_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "teamforge/instance.hpp"
#include "teamforge/objectives.hpp"
#include "teamforge/strategy.hpp"

namespace teamforge {

namespace detail {
struct SearchHooks;
}

using Seconds = std::chrono::duration<double>;

enum class TimeMode { Global, Timeboxed };

/// Work units per second of budget. Calibrated so that on commodity
/// hardware the work budget, not the wall clock, ends a stage.
inline constexpr double kDefaultWorkRate = 1.0e8;

struct SolveConfig {
  std::chrono::milliseconds time_limit{60'000};
  TimeMode time_mode = TimeMode::Global;
  /// 0 keeps the deterministic branching order; other values shuffle ties.
  std::uint64_t seed = 0;
  /// 0 disables the work budget (wall clock only).
  double work_rate = kDefaultWorkRate;
  bool symmetry_breaking = true;
  /// Observation hooks passed to every search; not owned.
  const detail::SearchHooks* hooks = nullptr;

  /// Throws InvalidArgument unless time_limit > 0 and work_rate >= 0.
  void validate() const;
};

enum class StageStatus { Optimal, Feasible, Skipped };
enum class SolveStatus { Optimal, Feasible, Infeasible, Unknown };

std::string_view to_string(StageStatus s) noexcept;
std::string_view to_string(SolveStatus s) noexcept;
std::string_view to_string(TimeMode m) noexcept;

struct StageResult {
  Objective objective = Objective::o1();
  /// Objective value of the final assignment.
  std::optional<ObjectiveValue> value;
  /// Value reached when this stage ended; later stages keep at least this.
  std::optional<ObjectiveValue> stage_value;
  StageStatus status = StageStatus::Skipped;
  Seconds time_to_best{0};
  Seconds time_total{0};
  /// Wall-clock budget the stage was given.
  Seconds budget{0};
  std::uint64_t nodes = 0;
  std::uint64_t work = 0;
  std::uint64_t work_to_best = 0;
};

struct TracePoint {
  Seconds elapsed{0};
  std::uint64_t work = 0;  // cumulative over the whole solve
  ObjectiveValue o1 = 0;
};

struct SolveOutcome {
  std::optional<Assignment> assignment;
  std::vector<StageResult> stages;
  SolveStatus status = SolveStatus::Unknown;
  /// O1 of every new incumbent, in discovery order.
  std::vector<TracePoint> quality_trace;
  Seconds elapsed{0};
  std::uint64_t work = 0;
};

/// Any assignment satisfying the team-size and team-skill constraints.
/// Optimal (found), Infeasible (search space exhausted) or Unknown.
SolveOutcome solve_feasibility(const Instance& inst, const SolveConfig& cfg);

/// Lexicographic optimization of `strat`, which should already be adapted
/// to the instance.
SolveOutcome solve(const Instance& inst, const Strategy& strat,
                   const SolveConfig& cfg);

struct CertificationReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> passed;
};

/// Re-checks an outcome from scratch with the objectives module: structure,
/// feasibility, each stage's reported value, stage thresholds and the O1
/// decomposition identity. Never throws on a bad outcome.
CertificationReport audit(const Instance& inst, const Strategy& strat,
                          const SolveOutcome& outcome);

/// As audit, but throws CertificationFailure listing every failed check.
CertificationReport certify(const Instance& inst, const Strategy& strat,
                            const SolveOutcome& outcome);

}  // namespace teamforge

#endif  // TEAMFORGE_SOLVER_HPP
