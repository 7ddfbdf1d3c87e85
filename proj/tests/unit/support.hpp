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

#ifndef TEAMFORGE_TESTS_SUPPORT_HPP
#define TEAMFORGE_TESTS_SUPPORT_HPP

#include <doctest.h>

#include <functional>
#include <vector>

#include "teamforge/error.hpp"
#include "teamforge/instance.hpp"

namespace teamforge::testing {

/// Instance with ids 0..skills-1 and default names.
inline InstanceSpec make_spec(int m, int n, int k_min, int k_max, int skills = 0,
                              int c = 0, int d = 4) {
  InstanceSpec spec;
  spec.num_students = m;
  spec.num_teams = n;
  spec.min_team_size = k_min;
  spec.max_team_size = k_max;
  for (int s = 0; s < skills; ++s) spec.skills.push_back(s);
  spec.student_skills.assign(m, {});
  spec.min_coverage = c;
  spec.preference_bound = d;
  spec.preferences = PreferenceMatrix(m);
  return spec;
}

/// Students {1,2}, {3}, {3,4} and one all-rounder; k in [1, 2], c = 4.
inline Instance reduction_example() {
  InstanceSpec spec = make_spec(4, 2, 1, 2);
  spec.skills = {1, 2, 3, 4};
  spec.student_skills = {{1, 2}, {3}, {3, 4}, {1, 2, 3, 4}};
  spec.min_coverage = 4;
  return validate_instance(spec);
}

inline Errc error_code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected teamforge::Error");
  return Errc::InvalidArgument;
}

}  // namespace teamforge::testing

#endif  // TEAMFORGE_TESTS_SUPPORT_HPP
