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

#include "teamforge/instance.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "teamforge/error.hpp"

namespace teamforge {

namespace {

// Keeps 2 * d * m well inside int32 for the solver's gain accumulators.
constexpr int kMaxPreferenceBound = 1'000'000;

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

PreferenceMatrix::PreferenceMatrix(int size, std::vector<int> cells)
    : size_(size), cells_(std::move(cells)) {
  if (size < 0 || cells_.size() != static_cast<std::size_t>(size) * size) {
    throw Error(Errc::InvalidArgument,
                "preference matrix needs size*size cells");
  }
}

int PreferenceMatrix::max_entry() const noexcept {
  return cells_.empty() ? 0 : *std::max_element(cells_.begin(), cells_.end());
}

int PreferenceMatrix::min_entry() const noexcept {
  return cells_.empty() ? 0 : *std::min_element(cells_.begin(), cells_.end());
}

std::vector<int> PreferenceMatrix::off_diagonal_values() const {
  std::vector<int> values;
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      if (a != b) values.push_back((*this)(a, b));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

bool PreferenceMatrix::contains_off_diagonal(int value) const noexcept {
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      if (a != b && (*this)(a, b) == value) return true;
    }
  }
  return false;
}

bool PreferenceMatrix::is_symmetric() const noexcept {
  for (int a = 0; a < size_; ++a) {
    for (int b = a + 1; b < size_; ++b) {
      if ((*this)(a, b) != (*this)(b, a)) return false;
    }
  }
  return true;
}

Instance validate_instance(InstanceSpec spec) {
  const int m = spec.num_students;
  const int n = spec.num_teams;
  if (m <= 0 || n <= 0) {
    throw Error(Errc::InvalidArgument,
                "student and team counts must be positive");
  }
  if (spec.min_team_size <= 0 || spec.max_team_size <= 0) {
    throw Error(Errc::InvalidArgument, "team size bounds must be positive");
  }
  // k_min <= m / n <= k_max, in integers.
  if (static_cast<long long>(spec.min_team_size) * n > m ||
      static_cast<long long>(spec.max_team_size) * n < m) {
    throw Error(Errc::SizeBoundsInfeasible,
                std::to_string(m) + "/" + std::to_string(n) +
                    " is outside [" + std::to_string(spec.min_team_size) +
                    ", " + std::to_string(spec.max_team_size) + "]");
  }
  if (spec.preference_bound <= 0 ||
      spec.preference_bound > kMaxPreferenceBound) {
    throw Error(Errc::InvalidArgument,
                "preference bound d must be in [1, " +
                    std::to_string(kMaxPreferenceBound) + "]");
  }
  if (static_cast<int>(spec.student_skills.size()) != m) {
    throw Error(Errc::InvalidArgument, "expected one skill set per student");
  }
  if (spec.preferences.size() != m) {
    throw Error(Errc::InvalidArgument, "preference matrix must be m x m");
  }

  std::unordered_map<int, int> dense;
  for (int s = 0; s < static_cast<int>(spec.skills.size()); ++s) {
    const int id = spec.skills[s];
    if (id < 0) {
      throw Error(Errc::InvalidArgument, "skill ids must be non-negative");
    }
    if (!dense.emplace(id, s).second) {
      throw Error(Errc::InvalidArgument,
                  "skill " + std::to_string(id) + " declared twice");
    }
  }
  const int num_skills = static_cast<int>(spec.skills.size());
  if (spec.min_coverage < 0 || spec.min_coverage > num_skills) {
    throw Error(Errc::CoverageOutOfRange,
                "c = " + std::to_string(spec.min_coverage) +
                    " is outside [0, " + std::to_string(num_skills) + "]");
  }

  const int d = spec.preference_bound;
  for (int a = 0; a < m; ++a) {
    if (spec.preferences(a, a) != 0) {
      throw Error(Errc::NonZeroDiagonal,
                  "p" + pair_str(a, a) + " = " +
                      std::to_string(spec.preferences(a, a)));
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (std::abs(spec.preferences(a, b)) > d) {
        throw Error(Errc::PreferenceOutOfRange,
                    "p" + pair_str(a, b) + " = " +
                        std::to_string(spec.preferences(a, b)) +
                        " exceeds d = " + std::to_string(d));
      }
    }
  }

  Instance inst;
  inst.m_ = m;
  inst.n_ = n;
  inst.k_min_ = spec.min_team_size;
  inst.k_max_ = spec.max_team_size;
  inst.c_ = spec.min_coverage;
  inst.d_ = d;
  inst.words_ = std::max(1, (num_skills + 63) / 64);
  inst.skill_ids_ = spec.skills;
  inst.masks_.assign(static_cast<std::size_t>(m) * inst.words_, 0);
  for (int a = 0; a < m; ++a) {
    for (int id : spec.student_skills[a]) {
      auto it = dense.find(id);
      if (it == dense.end()) {
        throw Error(Errc::SkillNotDeclared,
                    "student " + std::to_string(a) + " has skill " +
                        std::to_string(id));
      }
      inst.masks_[a * inst.words_ + it->second / 64] |=
          std::uint64_t{1} << (it->second % 64);
    }
  }
  inst.prefs_ = std::move(spec.preferences);

  if (spec.student_names.empty()) {
    for (int a = 0; a < m; ++a) inst.student_names_.push_back(std::to_string(a));
  } else if (static_cast<int>(spec.student_names.size()) != m) {
    throw Error(Errc::InvalidArgument, "expected one name per student");
  } else {
    inst.student_names_ = std::move(spec.student_names);
  }
  if (spec.skill_names.empty()) {
    for (int id : spec.skills) inst.skill_names_.push_back(std::to_string(id));
  } else if (static_cast<int>(spec.skill_names.size()) != num_skills) {
    throw Error(Errc::InvalidArgument, "expected one name per skill");
  } else {
    inst.skill_names_ = std::move(spec.skill_names);
  }
  for (const auto* names : {&inst.student_names_, &inst.skill_names_}) {
    std::unordered_set<std::string> seen;
    for (const auto& name : *names) {
      if (name.empty() || !seen.insert(name).second) {
        throw Error(Errc::InvalidArgument,
                    "names must be non-empty and unique: '" + name + "'");
      }
    }
  }
  return inst;
}

std::vector<int> Instance::skills_of(StudentIndex a) const {
  std::vector<int> out;
  auto mask = skill_mask(a);
  for (int s = 0; s < num_skills(); ++s) {
    if ((mask[s / 64] >> (s % 64)) & 1u) out.push_back(s);
  }
  return out;
}

InstanceSpec Instance::to_spec() const {
  InstanceSpec spec;
  spec.num_students = m_;
  spec.num_teams = n_;
  spec.min_team_size = k_min_;
  spec.max_team_size = k_max_;
  spec.skills = skill_ids_;
  spec.student_skills.resize(m_);
  for (int a = 0; a < m_; ++a) {
    for (int s : skills_of(a)) spec.student_skills[a].push_back(skill_ids_[s]);
  }
  spec.min_coverage = c_;
  spec.preference_bound = d_;
  spec.preferences = prefs_;
  spec.student_names = student_names_;
  spec.skill_names = skill_names_;
  return spec;
}

Assignment::Assignment(std::vector<std::vector<StudentIndex>> teams)
    : teams_(std::move(teams)) {
  for (auto& team : teams_) std::sort(team.begin(), team.end());
  std::stable_sort(teams_.begin(), teams_.end(),
                   [](const auto& lhs, const auto& rhs) {
                     if (lhs.empty() || rhs.empty()) return !lhs.empty() && rhs.empty();
                     return lhs.front() < rhs.front();
                   });
}

Assignment Assignment::from_labels(std::span<const TeamIndex> team_of,
                                   int num_teams) {
  std::vector<std::vector<StudentIndex>> teams(num_teams);
  for (int a = 0; a < static_cast<int>(team_of.size()); ++a) {
    if (team_of[a] < 0 || team_of[a] >= num_teams) {
      throw Error(Errc::StructuralMismatch,
                  "student " + std::to_string(a) + " has no valid team");
    }
    teams[team_of[a]].push_back(a);
  }
  return Assignment(std::move(teams));
}

std::vector<TeamIndex> Assignment::labels(int num_students) const {
  std::vector<TeamIndex> out(num_students, -1);
  for (int j = 0; j < num_teams(); ++j) {
    for (int a : teams_[j]) {
      if (a >= 0 && a < num_students) out[a] = j;
    }
  }
  return out;
}

void check_structure(const Instance& inst, const Assignment& asg) {
  if (asg.num_teams() != inst.num_teams()) {
    throw Error(Errc::StructuralMismatch,
                "expected " + std::to_string(inst.num_teams()) +
                    " teams, got " + std::to_string(asg.num_teams()));
  }
  std::vector<char> seen(inst.num_students(), 0);
  for (const auto& team : asg.teams()) {
    for (int a : team) {
      if (a < 0 || a >= inst.num_students()) {
        throw Error(Errc::StructuralMismatch,
                    "unknown student " + std::to_string(a));
      }
      if (seen[a]) {
        throw Error(Errc::StructuralMismatch,
                    "student " + std::to_string(a) + " is in two teams");
      }
      seen[a] = 1;
    }
  }
  for (int a = 0; a < inst.num_students(); ++a) {
    if (!seen[a]) {
      throw Error(Errc::StructuralMismatch,
                  "student " + std::to_string(a) + " is not assigned");
    }
  }
}

int team_coverage(const Instance& inst, std::span<const StudentIndex> team) {
  std::vector<std::uint64_t> acc(inst.skill_words(), 0);
  for (int a : team) {
    auto mask = inst.skill_mask(a);
    for (int w = 0; w < inst.skill_words(); ++w) acc[w] |= mask[w];
  }
  int covered = 0;
  for (auto word : acc) covered += std::popcount(word);
  return covered;
}

FeasibilityReport is_feasible(const Instance& inst, const Assignment& asg) {
  check_structure(inst, asg);
  FeasibilityReport report;
  for (int j = 0; j < asg.num_teams(); ++j) {
    const auto& team = asg.teams()[j];
    const int size = static_cast<int>(team.size());
    if (size < inst.min_team_size()) {
      report.violations.push_back(
          {j, Violation::TeamTooSmall, size, inst.min_team_size()});
    }
    if (size > inst.max_team_size()) {
      report.violations.push_back(
          {j, Violation::TeamTooLarge, size, inst.max_team_size()});
    }
    const int covered = team_coverage(inst, team);
    if (covered < inst.min_coverage()) {
      report.violations.push_back(
          {j, Violation::SkillCoverage, covered, inst.min_coverage()});
    }
  }
  report.feasible = report.violations.empty();
  return report;
}

bool RealizedPairs::contains(StudentIndex a, StudentIndex b) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::pair{a, b});
}

RealizedPairs realized_pairs(const Assignment& asg) {
  RealizedPairs out;
  for (const auto& team : asg.teams()) {
    for (int a : team) {
      for (int b : team) {
        if (a != b) out.pairs.emplace_back(a, b);
      }
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::string_view to_string(Violation v) noexcept {
  switch (v) {
    case Violation::TeamTooSmall: return "team-size (below k_min)";
    case Violation::TeamTooLarge: return "team-size (above k_max)";
    case Violation::SkillCoverage: return "team-skill (coverage below c)";
  }
  return "unknown";
}

}  // namespace teamforge
