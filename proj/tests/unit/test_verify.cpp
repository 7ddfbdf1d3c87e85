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

#include <map>

#include "support.hpp"
#include "teamforge/random.hpp"
#include "teamforge/verify.hpp"

using namespace teamforge;
using namespace std::chrono_literals;
using teamforge::testing::error_code_of;
using teamforge::testing::make_spec;

namespace {

verify::SetCoverInstance random_set_cover(Rng& rng) {
  verify::SetCoverInstance sc;
  const int universe = rng.between(1, 6);
  for (int u = 1; u <= universe; ++u) sc.universe.insert(u);
  const int count = rng.between(2, 5);
  for (int i = 0; i < count; ++i) {
    std::set<int> subset;
    for (int u = 1; u <= universe; ++u) {
      if (rng.chance(0.4)) subset.insert(u);
    }
    sc.subsets.push_back(subset);
  }
  sc.k = rng.between(2, count);
  return sc;
}

std::map<int, int> histogram_of(const Instance& inst) {
  std::map<int, int> counts;
  const int m = inst.num_students();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b && inst.pref(a, b) != 0) ++counts[inst.pref(a, b)];
    }
  }
  return counts;
}

}  // namespace

TEST_CASE("partition enumeration counts") {
  // Partitions of 6 into exactly 2 blocks: S(6, 2) = 31; with sizes 3 + 3: 10.
  int all = 0;
  verify::for_each_size_legal_partition(validate_instance(make_spec(6, 2, 1, 5)),
                                        [&](const Assignment&) { ++all; });
  CHECK(all == 31);
  int halves = 0;
  verify::for_each_size_legal_partition(validate_instance(make_spec(6, 2, 3, 3)),
                                        [&](const Assignment&) { ++halves; });
  CHECK(halves == 10);
  // S(10, 3) = 9330 partitions of ten students into three teams.
  int ten = 0;
  verify::for_each_size_legal_partition(validate_instance(make_spec(10, 3, 1, 8)),
                                        [&](const Assignment&) { ++ten; });
  CHECK(ten == 9330);
}

TEST_CASE("oracle_solve") {
  SUBCASE("three pairings of four students") {
    auto spec = make_spec(4, 2, 2, 2);
    spec.preferences.set(0, 1, 2);
    spec.preferences.set(1, 0, 2);
    const Instance inst = validate_instance(spec);
    const auto out = verify::oracle_solve(inst, Strategy({Objective::o1()}));
    CHECK(out.status == SolveStatus::Optimal);
    CHECK(*out.assignment == Assignment({{0, 1}, {2, 3}}));
    CHECK(out.stages[0].value == 4);
  }
  SUBCASE("infeasible reduction") {
    const verify::SetCoverInstance sc{{1, 2, 3}, {{1}, {2}, {1, 2}}, 2};
    const auto out = verify::oracle_solve(verify::reduce_set_cover(sc), Strategy({Objective::o1()}));
    CHECK(out.status == SolveStatus::Infeasible);
    CHECK_FALSE(out.assignment.has_value());
  }
  SUBCASE("size cap") {
    const Instance inst = validate_instance(make_spec(11, 2, 1, 10));
    CHECK(error_code_of([&] { verify::oracle_solve(inst, Strategy({Objective::o1()})); }) ==
          Errc::InstanceTooLarge);
  }
}

TEST_CASE("reduce_set_cover") {
  SUBCASE("worked example") {
    const verify::SetCoverInstance sc{{1, 2, 3, 4}, {{1, 2}, {3}, {3, 4}}, 2};
    const Instance inst = verify::reduce_set_cover(sc);
    CHECK(inst.num_students() == 4);
    CHECK(inst.num_teams() == 2);
    CHECK(inst.min_team_size() == 1);
    CHECK(inst.max_team_size() == 2);
    CHECK(inst.min_coverage() == 4);
    CHECK(inst.skill_ids() == std::vector<int>{1, 2, 3, 4});
    CHECK(inst.skills_of(3) == std::vector<int>{0, 1, 2, 3});
    CHECK(inst.preferences() == PreferenceMatrix(4));
    CHECK(is_feasible(inst, Assignment({{0, 2}, {1, 3}})).feasible);
  }
  SUBCASE("five subsets, k = 3") {
    const verify::SetCoverInstance sc{
        {1, 2, 3}, {{1}, {2}, {3}, {1, 2}, {2, 3}}, 3};
    const Instance inst = verify::reduce_set_cover(sc);
    CHECK(inst.num_teams() == 2);
    CHECK(inst.num_students() == 6);
  }
  SUBCASE("assumptions") {
    CHECK(error_code_of([] { verify::reduce_set_cover({{1}, {{1}}, 2}); }) ==
          Errc::AssumptionViolated);
    CHECK(error_code_of([] { verify::reduce_set_cover({{1}, {{1}, {1}}, 3}); }) ==
          Errc::AssumptionViolated);
    CHECK(error_code_of([] { verify::reduce_set_cover({{1}, {{1}, {2}}, 2}); }) ==
          Errc::AssumptionViolated);
  }
}

TEST_CASE("reduction preserves the set cover answer") {
  Rng rng(77);
  int yes = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto sc = random_set_cover(rng);
    const bool answer = verify::set_cover_has_solution(sc);
    const Instance inst = verify::reduce_set_cover(sc);
    const auto out = verify::oracle_solve(inst, Strategy({Objective::o1()}));
    CHECK((out.status == SolveStatus::Optimal) == answer);
    yes += answer;
  }
  CHECK(yes > 0);
  CHECK(yes < 60);
}

TEST_CASE("presets mirror the course table") {
  CHECK(verify::presets().size() == 9);
  const auto& d1 = verify::find_preset("D1");
  CHECK(d1.m == 15);
  CHECK(d1.n == 8);
  CHECK(d1.k_min == 1);
  CHECK(d1.k_max == 2);
  CHECK(d1.num_skills == 2);
  CHECK(d1.c == 2);
  const auto& d82 = verify::find_preset("D8.2");
  CHECK(d82.m == 79);
  CHECK(d82.n == 27);
  CHECK(d82.k_min == 2);
  CHECK(d82.k_max == 3);
  CHECK(d82.num_skills == 3);
  CHECK(d82.c == 3);
  CHECK(d82.histogram == std::map<int, int>{{4, 23}, {2, 25}, {1, 50}, {-1, 21}, {-2, 7}});
  CHECK(error_code_of([] { verify::find_preset("D9"); }) == Errc::UnknownPreset);
}

TEST_CASE("generate") {
  for (const auto& preset : verify::presets()) {
    CAPTURE(preset.name);
    const Instance a = verify::generate(preset, 7);
    CHECK(a.num_students() == preset.m);
    CHECK(a.num_teams() == preset.n);
    CHECK(a.min_team_size() == preset.k_min);
    CHECK(a.max_team_size() == preset.k_max);
    CHECK(a.num_skills() == preset.num_skills);
    CHECK(a.min_coverage() == preset.c);
    CHECK(histogram_of(a) == preset.histogram);
    CHECK(verify::generate(preset, 7) == a);
    CHECK_FALSE(verify::generate(preset, 8) == a);
    const int quota = (preset.n * preset.c + preset.num_skills - 1) / preset.num_skills;
    for (int s = 0; s < a.num_skills(); ++s) {
      int holders = 0;
      for (int st = 0; st < a.num_students(); ++st) {
        const auto skills = a.skills_of(st);
        holders += std::find(skills.begin(), skills.end(), s) != skills.end();
      }
      CHECK(holders >= quota);
    }
  }
}

TEST_CASE("generate validates for many seeds") {
  for (const auto& preset : verify::presets()) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      CHECK_NOTHROW(verify::generate(preset, seed));
    }
  }
}

TEST_CASE("generate rejects histograms that do not fit") {
  verify::GeneratorPreset p;
  p.name = "tiny";
  p.m = 3;
  p.n = 1;
  p.k_min = 3;
  p.k_max = 3;
  p.num_skills = 1;
  p.c = 1;
  p.histogram = {{1, 4}, {-1, 3}};
  CHECK(error_code_of([&] { verify::generate(p, 0); }) == Errc::HistogramOverflow);
  p.histogram = {{1, 6}};
  CHECK_NOTHROW(verify::generate(p, 0));
}

TEST_CASE("symmetric presets produce symmetric matrices") {
  auto p = verify::find_preset("D3");
  p.symmetric = true;
  p.histogram = {{2, 26}, {1, 48}, {-1, 12}, {-2, 4}};
  const Instance inst = verify::generate(p, 1);
  CHECK(inst.preferences().is_symmetric());
  CHECK(histogram_of(inst) == p.histogram);
}

TEST_CASE("parse_presets reports malformed documents") {
  CHECK(error_code_of([] { verify::parse_presets("{"); }) == Errc::ParseError);
  CHECK(error_code_of([] { verify::parse_presets(R"({"presets": [{"name": "x"}]})"); }) ==
        Errc::ParseError);
}

TEST_CASE("generate_feasible and the random baseline") {
  for (const auto& preset : verify::presets()) {
    CAPTURE(preset.name);
    bool proven = false;
    const Instance inst = verify::generate_feasible(preset, 0, 20, 2000ms, &proven);
    CHECK(proven);
    const auto a = verify::random_feasible_assignment(inst, 5);
    REQUIRE(a.has_value());
    CHECK_NOTHROW(check_structure(inst, *a));
    CHECK(is_feasible(inst, *a).feasible);
    CHECK(verify::random_feasible_assignment(inst, 5) == a);
  }
}
