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

// Independent correctness machinery: an exhaustive oracle, the SET COVER
// reduction used to generate hard feasibility instances, and synthetic
// course generators shaped like real course datasets.

#ifndef TEAMFORGE_VERIFY_HPP
#define TEAMFORGE_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "teamforge/instance.hpp"
#include "teamforge/solver.hpp"
#include "teamforge/strategy.hpp"

namespace teamforge::verify {

inline constexpr int kDefaultOracleCap = 10;

/// Enumerates every size-legal partition (restricted-growth strings, so
/// each partition is visited once), filters by skill coverage and keeps the
/// lexicographically best stage-value vector. Throws InstanceTooLarge above
/// `max_students`.
SolveOutcome oracle_solve(const Instance& inst, const Strategy& strat,
                          int max_students = kDefaultOracleCap);

/// Calls `visit` for every partition of the instance's students into exactly
/// n non-empty teams within the size bounds (skills not checked).
void for_each_size_legal_partition(const Instance& inst,
                                   const std::function<void(const Assignment&)>& visit);

struct SetCoverInstance {
  std::set<int> universe;
  std::vector<std::set<int>> subsets;
  int k = 2;
};

/// Brute force: is there a choice of at most k subsets covering the universe?
bool set_cover_has_solution(const SetCoverInstance& sc);

/// One student per subset, n - 1 all-rounders, S = U, c = #U, k_max = k,
/// k_min = 1 and n = ceil((#subsets - 1) / (k - 1)); all preferences zero.
/// Throws AssumptionViolated unless #subsets >= 2 and 2 <= k <= #subsets.
Instance reduce_set_cover(const SetCoverInstance& sc);

struct GeneratorPreset {
  std::string name;
  int m = 0;
  int n = 0;
  int k_min = 1;
  int k_max = 1;
  int num_skills = 0;
  int c = 0;
  int d = 4;
  /// Count of off-diagonal cells per non-zero preference value; the rest
  /// of the m(m-1) cells are 0.
  std::map<int, int> histogram;
  bool profiles = false;
  bool symmetric = false;
};

/// The nine course presets D1 .. D8.2, from data/presets.json.
const std::vector<GeneratorPreset>& presets();
/// Throws UnknownPreset.
const GeneratorPreset& find_preset(const std::string& name);
/// Parses a presets document (same schema as data/presets.json).
std::vector<GeneratorPreset> parse_presets(const std::string& json_text);

/// Deterministic in (preset, seed). Preference values are scattered
/// uniformly over the off-diagonal cells; skills are sampled so that every
/// skill is held by at least ceil(n * c / #S) students. Throws
/// HistogramOverflow when the histogram does not fit.
Instance generate(const GeneratorPreset& preset, std::uint64_t seed);

/// Retries generate() with derived seeds until solve_feasibility finds an
/// assignment within `probe_limit`, at most `max_attempts` times. Returns
/// the last attempt if none was shown feasible.
Instance generate_feasible(const GeneratorPreset& preset, std::uint64_t seed,
                           int max_attempts = 20,
                           std::chrono::milliseconds probe_limit = std::chrono::milliseconds(2000),
                           bool* proven_feasible = nullptr);

struct RandomInstanceOptions {
  int min_students = 4;
  int max_students = 9;
  int min_teams = 2;
  int max_teams = 3;
  int max_skills = 4;
  std::vector<int> values = {-4, -2, -1, 0, 0, 1, 2, 4};
};

/// Small random instance with valid size bounds and mixed c, for property
/// tests against the oracle.
Instance random_instance(std::uint64_t seed, const RandomInstanceOptions& opts = {});

/// A feasible assignment found by a randomized dive (random branching order
/// and random team choice), or nullopt if none found within the limit.
std::optional<Assignment> random_feasible_assignment(
    const Instance& inst, std::uint64_t seed,
    std::chrono::milliseconds limit = std::chrono::milliseconds(2000));

}  // namespace teamforge::verify

#endif  // TEAMFORGE_VERIFY_HPP
