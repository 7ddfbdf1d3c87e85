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

// Single-stage branch-and-bound used by the lexicographic solver. Not part
// of the stable API; exposed so tests can observe the search directly.

#ifndef TEAMFORGE_DETAIL_SEARCH_HPP
#define TEAMFORGE_DETAIL_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "teamforge/instance.hpp"
#include "teamforge/objectives.hpp"

namespace teamforge::detail {

/// Symmetric pair weights in maximization form: a complete assignment scores
/// the sum of weight(a, b) over unordered co-teamed pairs.
struct PairWeights {
  int size = 0;
  std::vector<int> cells;

  int operator()(StudentIndex a, StudentIndex b) const noexcept {
    return cells[a * size + b];
  }
};

/// O1 and O3 as pair weights; minimized O3 is negated. O2 has no pair form.
PairWeights pair_weights(const Objective& obj, const Instance& inst);

/// +1 for maximized objectives, -1 for minimized ones.
inline int sense_sign(const Objective& obj) noexcept {
  return obj.sense() == Sense::Maximize ? 1 : -1;
}

struct Threshold {
  PairWeights weights;
  ObjectiveValue at_least = 0;  // maximization form
};

struct StageProblem {
  /// Absent: stop at the first feasible assignment.
  std::optional<PairWeights> objective;
  std::vector<Threshold> thresholds;
  /// m*m flags; a set flag keeps the two students apart. Empty means none.
  std::vector<std::uint8_t> forbidden;
};

struct SearchLimits {
  std::chrono::steady_clock::time_point deadline =
      std::chrono::steady_clock::time_point::max();
  std::uint64_t work_budget = std::numeric_limits<std::uint64_t>::max();
};

struct SearchHooks {
  /// Called when a student is about to branch, with the teams it will try.
  std::function<void(int depth, StudentIndex student,
                     std::span<const TeamIndex> candidates)>
      on_branch;
  /// Called for every complete assignment that survives pruning.
  std::function<void(std::span<const TeamIndex> team_of)> on_leaf;
  /// Called by the lexicographic solver before each stage starts searching.
  std::function<void(int stage)> on_stage;
};

struct SearchOptions {
  std::vector<StudentIndex> order;  // branching order, a permutation
  bool symmetry_breaking = true;
  const SearchHooks* hooks = nullptr;
  /// New incumbent (labels, max-form value, work spent so far in this call).
  std::function<void(std::span<const TeamIndex>, ObjectiveValue, std::uint64_t)>
      on_improve;
};

struct SearchResult {
  /// True when the search space was exhausted, which proves the incumbent
  /// optimal (or, without one, that nothing feasible beats the start value).
  bool exhausted = false;
  std::optional<std::vector<TeamIndex>> best;
  ObjectiveValue best_value = 0;
  bool improved = false;  // best differs from the supplied incumbent
  std::uint64_t nodes = 0;
  std::uint64_t work = 0;
  std::uint64_t work_to_best = 0;
};

/// Students by descending total absolute preference mass; ties by index, or
/// shuffled by a non-zero seed.
std::vector<StudentIndex> branching_order(const Instance& inst, std::uint64_t seed);

/// Runs one stage. `incumbent` (labels), when given, must satisfy the
/// problem's constraints; only strictly better assignments replace it.
SearchResult branch_and_bound(const Instance& inst, const StageProblem& problem,
                              const SearchLimits& limits,
                              const SearchOptions& options,
                              const std::vector<TeamIndex>* incumbent = nullptr);

}  // namespace teamforge::detail

#endif  // TEAMFORGE_DETAIL_SEARCH_HPP
