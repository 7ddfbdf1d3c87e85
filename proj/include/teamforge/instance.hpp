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

// Problem data for educational team formation: a course of students that
// must be partitioned into teams under size bounds and a per-team minimum
// skill coverage, together with a directed teammate-preference matrix.

#ifndef TEAMFORGE_INSTANCE_HPP
#define TEAMFORGE_INSTANCE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace teamforge {

using StudentIndex = int;
using TeamIndex = int;

/// Square integer matrix; entry (a, b) is a's desire to work with b.
class PreferenceMatrix {
 public:
  PreferenceMatrix() = default;
  explicit PreferenceMatrix(int size) : size_(size), cells_(size * size, 0) {}
  PreferenceMatrix(int size, std::vector<int> cells);

  int size() const noexcept { return size_; }
  int operator()(StudentIndex from, StudentIndex to) const noexcept {
    return cells_[from * size_ + to];
  }
  void set(StudentIndex from, StudentIndex to, int value) {
    cells_[from * size_ + to] = value;
  }
  std::span<const int> row(StudentIndex from) const noexcept {
    return {cells_.data() + from * size_, static_cast<std::size_t>(size_)};
  }
  std::span<const int> cells() const noexcept { return cells_; }

  /// Largest / smallest entry over all cells (diagonal included).
  int max_entry() const noexcept;
  int min_entry() const noexcept;
  /// Distinct values occurring off the diagonal, ascending.
  std::vector<int> off_diagonal_values() const;
  bool contains_off_diagonal(int value) const noexcept;
  bool is_symmetric() const noexcept;

  friend bool operator==(const PreferenceMatrix&,
                         const PreferenceMatrix&) = default;

 private:
  int size_ = 0;
  std::vector<int> cells_;
};

/// Unvalidated instance data as read from a file or built by a generator.
struct InstanceSpec {
  int num_students = 0;
  int num_teams = 0;
  int min_team_size = 1;
  int max_team_size = 1;
  /// Declared skill identifiers (non-negative, distinct).
  std::vector<int> skills;
  /// Skill identifiers held by each student; every id must be declared.
  std::vector<std::vector<int>> student_skills;
  int min_coverage = 0;
  int preference_bound = 1;
  PreferenceMatrix preferences;
  /// Optional display labels. Missing labels default to the index / id.
  std::vector<std::string> student_names;
  std::vector<std::string> skill_names;
};

/// A validated, immutable course. Skills are re-indexed densely 0..#S-1 and
/// stored as bit masks of `skill_words()` 64-bit words per student.
class Instance {
 public:
  int num_students() const noexcept { return m_; }
  int num_teams() const noexcept { return n_; }
  int min_team_size() const noexcept { return k_min_; }
  int max_team_size() const noexcept { return k_max_; }
  int num_skills() const noexcept { return static_cast<int>(skill_ids_.size()); }
  int min_coverage() const noexcept { return c_; }
  int preference_bound() const noexcept { return d_; }
  const PreferenceMatrix& preferences() const noexcept { return prefs_; }
  int pref(StudentIndex from, StudentIndex to) const noexcept {
    return prefs_(from, to);
  }

  int skill_words() const noexcept { return words_; }
  std::span<const std::uint64_t> skill_mask(StudentIndex a) const noexcept {
    return {masks_.data() + a * words_, static_cast<std::size_t>(words_)};
  }
  /// Dense skill indices held by student a, ascending.
  std::vector<int> skills_of(StudentIndex a) const;
  /// External id of dense skill index s.
  int skill_id(int s) const noexcept { return skill_ids_[s]; }
  const std::vector<int>& skill_ids() const noexcept { return skill_ids_; }
  const std::vector<std::string>& student_names() const noexcept {
    return student_names_;
  }
  const std::vector<std::string>& skill_names() const noexcept {
    return skill_names_;
  }

  /// The spec this instance was built from, with defaults materialized.
  InstanceSpec to_spec() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  friend Instance validate_instance(InstanceSpec spec);
  Instance() = default;

  int m_ = 0;
  int n_ = 0;
  int k_min_ = 0;
  int k_max_ = 0;
  int c_ = 0;
  int d_ = 0;
  int words_ = 1;
  std::vector<int> skill_ids_;
  std::vector<std::uint64_t> masks_;
  PreferenceMatrix prefs_;
  std::vector<std::string> student_names_;
  std::vector<std::string> skill_names_;
};

/// Checks every instance invariant and builds the Instance, or throws
/// Error naming the first violated invariant.
Instance validate_instance(InstanceSpec spec);

/// An n-partition of the students. Stored canonically: each team sorted
/// ascending, teams ordered by their minimum member (empty teams last), so
/// two assignments compare equal iff they induce the same partition.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<std::vector<StudentIndex>> teams);
  /// Builds from a per-student team label vector.
  static Assignment from_labels(std::span<const TeamIndex> team_of,
                                int num_teams);

  const std::vector<std::vector<StudentIndex>>& teams() const noexcept {
    return teams_;
  }
  int num_teams() const noexcept { return static_cast<int>(teams_.size()); }
  /// Per-student label in canonical team order; -1 for students not covered.
  std::vector<TeamIndex> labels(int num_students) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::vector<StudentIndex>> teams_;
};

/// Throws StructuralMismatch unless `asg` splits exactly {0..m-1} into
/// inst.num_teams() disjoint teams.
void check_structure(const Instance& inst, const Assignment& asg);

enum class Violation { TeamTooSmall, TeamTooLarge, SkillCoverage };

struct TeamViolation {
  int team = 0;  // index into Assignment::teams()
  Violation kind = Violation::TeamTooSmall;
  int actual = 0;
  int required = 0;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<TeamViolation> violations;
  explicit operator bool() const noexcept { return feasible; }
};

/// Team-size and team-skill checks for every team.
FeasibilityReport is_feasible(const Instance& inst, const Assignment& asg);

/// Number of distinct skills covered by a set of students.
int team_coverage(const Instance& inst, std::span<const StudentIndex> team);

/// Ordered pairs (a, b), a != b, of students sharing a team, sorted.
struct RealizedPairs {
  std::vector<std::pair<StudentIndex, StudentIndex>> pairs;
  std::size_t size() const noexcept { return pairs.size(); }
  bool contains(StudentIndex a, StudentIndex b) const;
};

RealizedPairs realized_pairs(const Assignment& asg);

std::string_view to_string(Violation v) noexcept;

}  // namespace teamforge

#endif  // TEAMFORGE_INSTANCE_HPP
