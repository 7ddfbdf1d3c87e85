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

#include "support.hpp"
#include "teamforge/objectives.hpp"
#include "teamforge/random.hpp"
#include "teamforge/verify.hpp"

using namespace teamforge;
using teamforge::testing::make_spec;

namespace {

Instance two_student_team(int p01, int p10) {
  auto spec = make_spec(3, 2, 1, 2);
  spec.preferences.set(0, 1, p01);
  spec.preferences.set(1, 0, p10);
  return validate_instance(spec);
}

Instance four_by_four() {
  auto spec = make_spec(4, 2, 2, 2);
  spec.preferences = PreferenceMatrix(4, {0, 2, -1, 4,   //
                                          1, 0, -4, 0,   //
                                          2, 2, 0, -2,   //
                                          -1, 1, 1, 0});
  return validate_instance(spec);
}

}  // namespace

TEST_CASE("eval_o1") {
  SUBCASE("singletons realize nothing") {
    const Instance inst = four_by_four();
    auto spec = inst.to_spec();
    spec.num_teams = 4;
    spec.min_team_size = 1;
    const Instance singles = validate_instance(spec);
    CHECK(eval_o1(singles, Assignment({{0}, {1}, {2}, {3}})) == 0);
  }
  SUBCASE("directed sum of one pair") {
    CHECK(eval_o1(two_student_team(2, -1), Assignment({{0, 1}, {2}})) == 1);
  }
  SUBCASE("two pairs against a direct pair scan") {
    const Instance inst = four_by_four();
    const Assignment asg({{0, 1}, {2, 3}});
    ObjectiveValue expected = 0;
    for (const auto& [a, b] : realized_pairs(asg).pairs) expected += inst.pref(a, b);
    CHECK(expected == 2 + 1 + -2 + 1);
    CHECK(eval_o1(inst, asg) == expected);
  }
}

TEST_CASE("eval_o2") {
  SUBCASE("singletons score max entry plus one") {
    auto spec = make_spec(3, 3, 1, 1);
    spec.preferences.set(0, 1, 2);
    spec.preferences.set(1, 2, -3);
    const Instance inst = validate_instance(spec);
    CHECK(eval_o2(inst, Assignment({{0}, {1}, {2}})) == 3);
  }
  SUBCASE("all-negative matrix still puts singletons on top") {
    auto spec = make_spec(2, 2, 1, 1);
    spec.preferences.set(0, 1, -2);
    spec.preferences.set(1, 0, -3);
    const Instance inst = validate_instance(spec);
    // The zero diagonal is the largest entry.
    CHECK(eval_o2(inst, Assignment({{0}, {1}})) == 1);
  }
  SUBCASE("minimum of one pair") {
    CHECK(eval_o2(two_student_team(2, -1), Assignment({{0, 1}, {2}})) == -1);
  }
  SUBCASE("zero matrix") {
    const Instance inst = validate_instance(make_spec(4, 2, 1, 3));
    CHECK(eval_o2(inst, Assignment({{0, 1, 2}, {3}})) == 0);
  }
}

TEST_CASE("eval_o3") {
  SUBCASE("zero-valued pairs of a team of three") {
    const Instance inst = validate_instance(make_spec(3, 1, 3, 3));
    CHECK(eval_o3(inst, Assignment({{0, 1, 2}}), 0) == 6);
  }
  SUBCASE("absent value never counts") {
    const Instance inst = verify::random_instance(3, {.values = {-2, -1, 0, 1, 2}});
    verify::for_each_size_legal_partition(
        inst, [&](const Assignment& asg) { CHECK(eval_o3(inst, asg, -4) == 0); });
  }
  SUBCASE("count matches a pair scan") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Instance inst = verify::random_instance(seed);
      verify::for_each_size_legal_partition(inst, [&](const Assignment& asg) {
        ObjectiveValue expected = 0;
        for (const auto& [a, b] : realized_pairs(asg).pairs) expected += inst.pref(a, b) == 2;
        CHECK(eval_o3(inst, asg, 2) == expected);
      });
    }
  }
}

TEST_CASE("objective identity and rendering") {
  CHECK(Objective::o1().to_string() == "O1");
  CHECK(Objective::o2().to_string() == "O2");
  CHECK(Objective::o3(-4, Sense::Minimize).to_string() == "O3-(-4)");
  CHECK(Objective::o3(2, Sense::Maximize).to_string() == "O3+(2)");
  CHECK_FALSE(Objective::o1().p0().has_value());
  CHECK(Objective::o3(1, Sense::Maximize).p0() == 1);
  CHECK(Objective::o3(1, Sense::Minimize).improves(2, 3));
  CHECK(Objective::o1().attains(5, 5));
}

TEST_CASE("decomposition identity, O2 lower envelope and relabel invariance") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = verify::random_instance(seed);
    const auto values = inst.preferences().off_diagonal_values();
    Rng rng(seed);
    verify::for_each_size_legal_partition(inst, [&](const Assignment& asg) {
      ObjectiveValue decomposed = 0;
      for (int v : values) decomposed += v * eval_o3(inst, asg, v);
      CHECK(eval_o1(inst, asg) == decomposed);

      const ObjectiveValue o2 = eval_o2(inst, asg);
      const auto pairs = realized_pairs(asg);
      bool attained = pairs.size() == 0;
      for (const auto& [a, b] : pairs.pairs) {
        CHECK(o2 <= inst.pref(a, b));
        attained = attained || o2 == inst.pref(a, b);
      }
      CHECK(attained);

      std::vector<TeamIndex> labels = asg.labels(inst.num_students());
      std::vector<TeamIndex> perm(inst.num_teams());
      for (int t = 0; t < inst.num_teams(); ++t) perm[t] = t;
      rng.shuffle(std::span<TeamIndex>(perm));
      for (auto& l : labels) l = perm[l];
      const auto relabeled = Assignment::from_labels(labels, inst.num_teams());
      CHECK(eval_o1(inst, relabeled) == eval_o1(inst, asg));
      CHECK(eval_o2(inst, relabeled) == o2);
    });
  }
}

TEST_CASE("optimistic_bound examples") {
  const Instance inst = four_by_four();
  PartialAssignment empty{std::vector<TeamIndex>(4, PartialAssignment::kUnassigned)};
  SUBCASE("O1 with nothing placed is the positive mass") {
    ObjectiveValue positives = 0;
    for (int v : inst.preferences().cells()) positives += std::max(v, 0);
    CHECK(optimistic_bound(Objective::o1(), inst, empty) == positives);
  }
  SUBCASE("O3+ counts realized plus co-teamable pairs") {
    // Team 0 = {0, 1} is full (k_max = 2); 2 and 3 are open.
    PartialAssignment partial{{0, 0, PartialAssignment::kUnassigned,
                               PartialAssignment::kUnassigned}};
    // Realized value-2 pairs: (0,1). Open: (2,3) = -2, (3,2) = 1. Closed: the rest.
    CHECK(optimistic_bound(Objective::o3(2, Sense::Maximize), inst, partial) == 1);
    CHECK(optimistic_bound(Objective::o3(1, Sense::Maximize), inst, partial) == 2);
  }
  SUBCASE("O1 is exact at a leaf") {
    PartialAssignment full{{0, 0, 1, 1}};
    CHECK(optimistic_bound(Objective::o1(), inst, full) ==
          eval_o1(inst, Assignment({{0, 1}, {2, 3}})));
  }
}

TEST_CASE("optimistic_bound is admissible against every completion") {
  const std::vector<Objective> objectives = {
      Objective::o1(), Objective::o2(), Objective::o3(2, Sense::Maximize),
      Objective::o3(-1, Sense::Minimize), Objective::o3(0, Sense::Maximize)};
  verify::RandomInstanceOptions opts;
  opts.max_students = 8;
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const Instance inst = verify::random_instance(seed, opts);
    const int m = inst.num_students();
    Rng rng(seed);
    verify::for_each_size_legal_partition(inst, [&](const Assignment& asg) {
      const auto labels = asg.labels(m);
      for (int trial = 0; trial < 3; ++trial) {
        PartialAssignment partial{labels};
        for (auto& t : partial.team_of) {
          if (rng.chance(0.5)) t = PartialAssignment::kUnassigned;
        }
        for (const auto& obj : objectives) {
          const ObjectiveValue bound = optimistic_bound(obj, inst, partial);
          CHECK(obj.attains(bound, evaluate(obj, inst, asg)));
        }
      }
    });
  }
}
