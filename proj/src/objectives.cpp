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

#include "teamforge/objectives.hpp"

#include <algorithm>
#include <limits>

#include "teamforge/error.hpp"

namespace teamforge {

std::string Objective::to_string() const {
  switch (kind_) {
    case ObjectiveKind::O1: return "O1";
    case ObjectiveKind::O2: return "O2";
    case ObjectiveKind::O3:
      return std::string("O3") + (sense_ == Sense::Maximize ? "+" : "-") + "(" +
             std::to_string(p0_) + ")";
  }
  return "?";
}

ObjectiveValue eval_o1(const Instance& inst, const Assignment& asg) {
  ObjectiveValue sum = 0;
  for (const auto& team : asg.teams()) {
    for (int a : team) {
      for (int b : team) {
        if (a != b) sum += inst.pref(a, b);
      }
    }
  }
  return sum;
}

ObjectiveValue eval_o2(const Instance& inst, const Assignment& asg) {
  bool any = false;
  ObjectiveValue low = std::numeric_limits<ObjectiveValue>::max();
  for (const auto& team : asg.teams()) {
    for (int a : team) {
      for (int b : team) {
        if (a == b) continue;
        any = true;
        low = std::min<ObjectiveValue>(low, inst.pref(a, b));
      }
    }
  }
  return any ? low : ObjectiveValue{inst.preferences().max_entry()} + 1;
}

ObjectiveValue eval_o3(const Instance& inst, const Assignment& asg, int p0) {
  ObjectiveValue count = 0;
  for (const auto& team : asg.teams()) {
    for (int a : team) {
      for (int b : team) {
        if (a != b && inst.pref(a, b) == p0) ++count;
      }
    }
  }
  return count;
}

ObjectiveValue evaluate(const Objective& obj, const Instance& inst,
                        const Assignment& asg) {
  switch (obj.kind()) {
    case ObjectiveKind::O1: return eval_o1(inst, asg);
    case ObjectiveKind::O2: return eval_o2(inst, asg);
    case ObjectiveKind::O3: return eval_o3(inst, asg, *obj.p0());
  }
  return 0;
}

ObjectiveValue optimistic_bound(const Objective& obj, const Instance& inst,
                                const PartialAssignment& partial) {
  const int m = inst.num_students();
  if (static_cast<int>(partial.team_of.size()) != m) {
    throw Error(Errc::InvalidArgument, "partial assignment has wrong length");
  }
  std::vector<int> size(inst.num_teams(), 0);
  for (int t : partial.team_of) {
    if (t != PartialAssignment::kUnassigned) ++size[t];
  }
  auto realized = [&](int a, int b) {
    return partial.team_of[a] != PartialAssignment::kUnassigned &&
           partial.team_of[a] == partial.team_of[b];
  };
  auto open = [&](int a, int b) {
    const int ta = partial.team_of[a];
    const int tb = partial.team_of[b];
    if (ta == PartialAssignment::kUnassigned &&
        tb == PartialAssignment::kUnassigned) {
      return true;
    }
    if (ta == PartialAssignment::kUnassigned) {
      return size[tb] < inst.max_team_size();
    }
    if (tb == PartialAssignment::kUnassigned) {
      return size[ta] < inst.max_team_size();
    }
    return false;
  };

  switch (obj.kind()) {
    case ObjectiveKind::O1: {
      ObjectiveValue bound = 0;
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          if (a == b) continue;
          if (realized(a, b)) {
            bound += inst.pref(a, b);
          } else if (open(a, b)) {
            bound += std::max(0, inst.pref(a, b));
          }
        }
      }
      return bound;
    }
    case ObjectiveKind::O2: {
      // Completing can only add realized pairs, which can only lower the min.
      Assignment placed = [&] {
        std::vector<std::vector<StudentIndex>> teams(inst.num_teams());
        for (int a = 0; a < m; ++a) {
          if (partial.team_of[a] != PartialAssignment::kUnassigned) {
            teams[partial.team_of[a]].push_back(a);
          }
        }
        return Assignment(std::move(teams));
      }();
      return eval_o2(inst, placed);
    }
    case ObjectiveKind::O3: {
      const int p0 = *obj.p0();
      ObjectiveValue count = 0;
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          if (a == b || inst.pref(a, b) != p0) continue;
          if (realized(a, b)) {
            ++count;
          } else if (obj.sense() == Sense::Maximize && open(a, b)) {
            ++count;
          }
        }
      }
      return count;
    }
  }
  return 0;
}

}  // namespace teamforge
