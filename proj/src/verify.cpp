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

#include "teamforge/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>

#include <fmt/core.h>
#include <json.hpp>

#include "presets_data.hpp"
#include "teamforge/error.hpp"
#include "teamforge/objectives.hpp"
#include "teamforge/random.hpp"

namespace teamforge::verify {

namespace {

// Restricted-growth enumeration: student i joins an existing block or opens
// block `used`, so every partition appears exactly once.
class PartitionEnumerator {
 public:
  PartitionEnumerator(const Instance& inst,
                      const std::function<void(const Assignment&)>& visit)
      : m_(inst.num_students()),
        n_(inst.num_teams()),
        k_min_(inst.min_team_size()),
        k_max_(inst.max_team_size()),
        visit_(visit),
        label_(m_, -1),
        size_(n_, 0) {}

  void run() { step(0, 0); }

 private:
  void step(int i, int used) {
    const int remaining = m_ - i;
    // Unopened blocks need k_min each; open blocks need their deficit.
    int deficit = (n_ - used) * k_min_;
    for (int t = 0; t < used; ++t) deficit += std::max(0, k_min_ - size_[t]);
    if (deficit > remaining) return;
    if (i == m_) {
      if (used == n_) visit_(Assignment::from_labels(label_, n_));
      return;
    }
    for (int t = 0; t <= used && t < n_; ++t) {
      if (size_[t] >= k_max_) continue;
      label_[i] = t;
      ++size_[t];
      step(i + 1, t == used ? used + 1 : used);
      --size_[t];
    }
    label_[i] = -1;
  }

  const int m_;
  const int n_;
  const int k_min_;
  const int k_max_;
  const std::function<void(const Assignment&)>& visit_;
  std::vector<TeamIndex> label_;
  std::vector<int> size_;
};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void for_each_size_legal_partition(const Instance& inst,
                                   const std::function<void(const Assignment&)>& visit) {
  PartitionEnumerator(inst, visit).run();
}

SolveOutcome oracle_solve(const Instance& inst, const Strategy& strat, int max_students) {
  if (inst.num_students() > max_students) {
    throw Error(Errc::InstanceTooLarge,
                fmt::format("oracle handles at most {} students, got {}", max_students,
                            inst.num_students()));
  }
  const auto& stages = strat.stages();
  std::optional<Assignment> best;
  std::vector<ObjectiveValue> best_key;
  std::vector<ObjectiveValue> key(stages.size());

  for_each_size_legal_partition(inst, [&](const Assignment& asg) {
    if (!is_feasible(inst, asg)) return;
    for (std::size_t s = 0; s < stages.size(); ++s) {
      const ObjectiveValue v = evaluate(stages[s], inst, asg);
      key[s] = stages[s].sense() == Sense::Maximize ? v : -v;
    }
    if (!best || key > best_key) {
      best = asg;
      best_key = key;
    }
  });

  SolveOutcome out;
  for (const auto& obj : stages) {
    StageResult sr;
    sr.objective = obj;
    if (best) {
      sr.value = evaluate(obj, inst, *best);
      sr.stage_value = sr.value;
      sr.status = StageStatus::Optimal;
    }
    out.stages.push_back(sr);
  }
  out.status = best ? SolveStatus::Optimal : SolveStatus::Infeasible;
  out.assignment = best;
  return out;
}

bool set_cover_has_solution(const SetCoverInstance& sc) {
  const int count = static_cast<int>(sc.subsets.size());
  for (std::uint32_t pick = 0; pick < (1U << count); ++pick) {
    if (std::popcount(pick) > sc.k) continue;
    std::set<int> covered;
    for (int i = 0; i < count; ++i) {
      if (pick & (1U << i)) covered.insert(sc.subsets[i].begin(), sc.subsets[i].end());
    }
    if (std::includes(covered.begin(), covered.end(), sc.universe.begin(),
                      sc.universe.end())) {
      return true;
    }
  }
  return false;
}

Instance reduce_set_cover(const SetCoverInstance& sc) {
  const int m0 = static_cast<int>(sc.subsets.size());
  if (m0 < 2) {
    throw Error(Errc::AssumptionViolated, "set cover needs at least two subsets");
  }
  if (sc.k < 2 || sc.k > m0) {
    throw Error(Errc::AssumptionViolated,
                fmt::format("budget k={} outside [2, {}]", sc.k, m0));
  }
  for (const auto& subset : sc.subsets) {
    if (!std::includes(sc.universe.begin(), sc.universe.end(), subset.begin(),
                       subset.end())) {
      throw Error(Errc::AssumptionViolated, "subset not contained in the universe");
    }
  }
  if (m0 > 63) {
    throw Error(Errc::AssumptionViolated, "brute-force sized reductions only");
  }

  const bool natural_ids =
      sc.universe.empty() || *sc.universe.begin() >= 0;
  std::map<int, int> id_of;
  for (int u : sc.universe) {
    id_of[u] = natural_ids ? u : static_cast<int>(id_of.size());
  }

  const int n = (m0 - 1 + sc.k - 2) / (sc.k - 1);
  InstanceSpec spec;
  spec.num_teams = n;
  spec.num_students = m0 + n - 1;
  spec.min_team_size = 1;
  spec.max_team_size = sc.k;
  spec.min_coverage = static_cast<int>(sc.universe.size());
  spec.preference_bound = 1;
  for (int u : sc.universe) {
    spec.skills.push_back(id_of[u]);
    spec.skill_names.push_back(std::to_string(u));
  }
  for (int i = 0; i < m0; ++i) {
    std::vector<int> held;
    for (int u : sc.subsets[i]) held.push_back(id_of[u]);
    spec.student_skills.push_back(std::move(held));
    spec.student_names.push_back(fmt::format("subset-{}", i + 1));
  }
  for (int j = 0; j < n - 1; ++j) {
    spec.student_skills.push_back(spec.skills);
    spec.student_names.push_back(fmt::format("all-rounder-{}", j + 1));
  }
  spec.preferences = PreferenceMatrix(spec.num_students);
  return validate_instance(std::move(spec));
}

std::vector<GeneratorPreset> parse_presets(const std::string& json_text) {
  std::vector<GeneratorPreset> out;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    for (const auto& row : doc.at("presets")) {
      GeneratorPreset p;
      p.name = row.at("name").get<std::string>();
      p.m = row.at("m").get<int>();
      p.n = row.at("n").get<int>();
      p.k_min = row.at("k_min").get<int>();
      p.k_max = row.at("k_max").get<int>();
      p.num_skills = row.at("skills").get<int>();
      p.c = row.at("c").get<int>();
      p.d = row.value("d", 4);
      p.profiles = row.value("profiles", false);
      p.symmetric = row.value("symmetric", false);
      for (const auto& item : row.at("histogram").items()) {
        p.histogram[std::stoi(item.key())] = item.value().get<int>();
      }
      out.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, fmt::format("presets: {}", e.what()));
  } catch (const std::invalid_argument&) {
    throw Error(Errc::ParseError, "presets: histogram keys must be integers");
  }
  return out;
}

const std::vector<GeneratorPreset>& presets() {
  static const std::vector<GeneratorPreset> all = parse_presets(detail::kPresetsJson);
  return all;
}

const GeneratorPreset& find_preset(const std::string& name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw Error(Errc::UnknownPreset, fmt::format("no preset named '{}'", name));
}

Instance generate(const GeneratorPreset& preset, std::uint64_t seed) {
  const int m = preset.m;
  const long long cells = static_cast<long long>(m) * (m - 1);
  long long placed = 0;
  for (const auto& [value, count] : preset.histogram) {
    if (count < 0) {
      throw Error(Errc::HistogramOverflow,
                  fmt::format("{}: negative count for value {}", preset.name, value));
    }
    if (preset.symmetric && count % 2 != 0) {
      throw Error(Errc::HistogramOverflow,
                  fmt::format("{}: symmetric count for value {} must be even",
                              preset.name, value));
    }
    placed += count;
  }
  if (placed > cells) {
    throw Error(Errc::HistogramOverflow,
                fmt::format("{}: {} preference values for {} off-diagonal cells",
                            preset.name, placed, cells));
  }

  Rng rng(seed);
  InstanceSpec spec;
  spec.num_students = m;
  spec.num_teams = preset.n;
  spec.min_team_size = preset.k_min;
  spec.max_team_size = preset.k_max;
  spec.min_coverage = preset.c;
  spec.preference_bound = preset.d;
  const int skills = preset.num_skills;
  for (int s = 0; s < skills; ++s) {
    spec.skills.push_back(s);
    spec.skill_names.push_back(fmt::format("skill-{}", s + 1));
  }
  for (int a = 0; a < m; ++a) spec.student_names.push_back(fmt::format("student-{}", a + 1));

  // Skills: a guaranteed quota of holders per skill, then independent extras.
  std::vector<std::vector<bool>> holds(m, std::vector<bool>(skills, false));
  if (skills > 0) {
    const int quota = std::min(m, (preset.n * preset.c + skills - 1) / skills);
    std::vector<int> students(m);
    std::iota(students.begin(), students.end(), 0);
    for (int s = 0; s < skills; ++s) {
      rng.shuffle(std::span<int>(students));
      for (int i = 0; i < quota; ++i) holds[students[i]][s] = true;
    }
    for (int a = 0; a < m; ++a) {
      for (int s = 0; s < skills; ++s) {
        if (!holds[a][s] && rng.chance(0.5)) holds[a][s] = true;
      }
      if (std::none_of(holds[a].begin(), holds[a].end(), [](bool h) { return h; })) {
        holds[a][rng.below(skills)] = true;
      }
    }
  }
  spec.student_skills.resize(m);
  for (int a = 0; a < m; ++a) {
    for (int s = 0; s < skills; ++s) {
      if (holds[a][s]) spec.student_skills[a].push_back(s);
    }
  }

  // Preferences: shuffle the cells and deal out the histogram values.
  spec.preferences = PreferenceMatrix(m);
  if (preset.symmetric) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
    }
    rng.shuffle(std::span<std::pair<int, int>>(pairs));
    std::size_t next = 0;
    for (const auto& [value, count] : preset.histogram) {
      for (int i = 0; i < count / 2; ++i, ++next) {
        spec.preferences.set(pairs[next].first, pairs[next].second, value);
        spec.preferences.set(pairs[next].second, pairs[next].first, value);
      }
    }
  } else {
    std::vector<int> cells_list;
    cells_list.reserve(static_cast<std::size_t>(cells));
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a != b) cells_list.push_back(a * m + b);
      }
    }
    rng.shuffle(std::span<int>(cells_list));
    std::size_t next = 0;
    for (const auto& [value, count] : preset.histogram) {
      for (int i = 0; i < count; ++i, ++next) {
        spec.preferences.set(cells_list[next] / m, cells_list[next] % m, value);
      }
    }
  }
  return validate_instance(std::move(spec));
}

Instance generate_feasible(const GeneratorPreset& preset, std::uint64_t seed,
                           int max_attempts, std::chrono::milliseconds probe_limit,
                           bool* proven_feasible) {
  SolveConfig cfg;
  cfg.time_limit = probe_limit;
  std::uint64_t attempt_seed = seed;
  for (int attempt = 0;; ++attempt) {
    Instance inst = generate(preset, attempt_seed);
    const bool feasible = solve_feasibility(inst, cfg).assignment.has_value();
    if (feasible || attempt + 1 >= max_attempts) {
      if (proven_feasible) *proven_feasible = feasible;
      return inst;
    }
    attempt_seed = splitmix(seed ^ static_cast<std::uint64_t>(attempt + 1));
  }
}

Instance random_instance(std::uint64_t seed, const RandomInstanceOptions& opts) {
  Rng rng(seed);
  InstanceSpec spec;
  const int m = rng.between(opts.min_students, opts.max_students);
  const int n = rng.between(opts.min_teams, std::min(opts.max_teams, m));
  const int k_min = rng.between(1, m / n);
  const int k_max = rng.between((m + n - 1) / n, m - (n - 1) * k_min);
  spec.num_students = m;
  spec.num_teams = n;
  spec.min_team_size = k_min;
  spec.max_team_size = k_max;

  const int skills = rng.between(1, opts.max_skills);
  for (int s = 0; s < skills; ++s) spec.skills.push_back(s);
  spec.student_skills.resize(m);
  for (int a = 0; a < m; ++a) {
    for (int s = 0; s < skills; ++s) {
      if (rng.chance(0.4)) spec.student_skills[a].push_back(s);
    }
  }
  spec.min_coverage = rng.between(0, std::min(skills, 2));

  int bound = 1;
  for (int v : opts.values) bound = std::max(bound, std::abs(v));
  spec.preference_bound = bound;
  spec.preferences = PreferenceMatrix(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) spec.preferences.set(a, b, opts.values[rng.below(opts.values.size())]);
    }
  }
  return validate_instance(std::move(spec));
}

std::optional<Assignment> random_feasible_assignment(const Instance& inst,
                                                     std::uint64_t seed,
                                                     std::chrono::milliseconds limit) {
  SolveConfig cfg;
  cfg.time_limit = limit;
  cfg.seed = splitmix(seed) | 1;
  const auto start = solve_feasibility(inst, cfg);
  if (!start.assignment) return std::nullopt;

  // Random walk over moves and swaps that keep both touched teams feasible,
  // so the result carries no trace of the search's value ordering.
  const int m = inst.num_students();
  const int n = inst.num_teams();
  std::vector<std::vector<StudentIndex>> teams = start.assignment->teams();
  std::vector<TeamIndex> team_of = start.assignment->labels(m);
  Rng rng(seed);

  auto team_ok = [&](const std::vector<StudentIndex>& team) {
    const int size = static_cast<int>(team.size());
    return size >= inst.min_team_size() && size <= inst.max_team_size() &&
           team_coverage(inst, team) >= inst.min_coverage();
  };
  auto remove = [](std::vector<StudentIndex>& team, StudentIndex a) {
    team.erase(std::find(team.begin(), team.end(), a));
  };

  const int steps = 20 * m;
  for (int step = 0; step < steps && n > 1; ++step) {
    const StudentIndex a = static_cast<StudentIndex>(rng.below(m));
    const TeamIndex from = team_of[a];
    TeamIndex to = static_cast<TeamIndex>(rng.below(n - 1));
    if (to >= from) ++to;
    auto src = teams[from];
    auto dst = teams[to];
    remove(src, a);
    dst.push_back(a);
    StudentIndex b = -1;
    if (rng.chance(0.5) && !teams[to].empty()) {
      b = teams[to][rng.below(teams[to].size())];
      remove(dst, b);
      src.push_back(b);
    }
    if (!team_ok(src) || !team_ok(dst)) continue;
    teams[from] = std::move(src);
    teams[to] = std::move(dst);
    team_of[a] = to;
    if (b >= 0) team_of[b] = from;
  }
  return Assignment(std::move(teams));
}

}  // namespace teamforge::verify
