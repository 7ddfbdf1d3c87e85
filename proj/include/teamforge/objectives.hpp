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

// Preference objectives over an assignment. All values are exact integers.
//
//   O1          sum of realized preferences                 (maximize)
//   O2          smallest realized preference                (maximize)
//               max(P) + 1 when nobody shares a team
//   O3(p0, +/-) number of realized preferences equal to p0  (max / min)

#ifndef TEAMFORGE_OBJECTIVES_HPP
#define TEAMFORGE_OBJECTIVES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "teamforge/instance.hpp"

namespace teamforge {

using ObjectiveValue = std::int64_t;

enum class ObjectiveKind { O1, O2, O3 };
enum class Sense { Maximize, Minimize };

class Objective {
 public:
  static Objective o1() { return Objective(ObjectiveKind::O1, Sense::Maximize, 0); }
  static Objective o2() { return Objective(ObjectiveKind::O2, Sense::Maximize, 0); }
  static Objective o3(int p0, Sense sense) {
    return Objective(ObjectiveKind::O3, sense, p0);
  }

  ObjectiveKind kind() const noexcept { return kind_; }
  Sense sense() const noexcept { return sense_; }
  /// Targeted preference value; only meaningful for O3.
  std::optional<int> p0() const noexcept {
    return kind_ == ObjectiveKind::O3 ? std::optional<int>(p0_) : std::nullopt;
  }

  /// True when `candidate` is strictly better than `reference`.
  bool improves(ObjectiveValue candidate, ObjectiveValue reference) const noexcept {
    return sense_ == Sense::Maximize ? candidate > reference : candidate < reference;
  }
  /// True when `value` satisfies the "at least as good as" threshold.
  bool attains(ObjectiveValue value, ObjectiveValue threshold) const noexcept {
    return sense_ == Sense::Maximize ? value >= threshold : value <= threshold;
  }

  /// "O1", "O2", "O3+(4)", "O3-(-2)".
  std::string to_string() const;

  friend bool operator==(const Objective&, const Objective&) = default;

 private:
  Objective(ObjectiveKind kind, Sense sense, int p0)
      : kind_(kind), sense_(sense), p0_(p0) {}

  ObjectiveKind kind_;
  Sense sense_;
  int p0_;
};

ObjectiveValue eval_o1(const Instance& inst, const Assignment& asg);
ObjectiveValue eval_o2(const Instance& inst, const Assignment& asg);
ObjectiveValue eval_o3(const Instance& inst, const Assignment& asg, int p0);
ObjectiveValue evaluate(const Objective& obj, const Instance& inst,
                        const Assignment& asg);

/// Students 0..m-1 with a team label each, or kUnassigned.
struct PartialAssignment {
  static constexpr TeamIndex kUnassigned = -1;
  std::vector<TeamIndex> team_of;
};

/// Admissible bound on every completion of `partial`: an upper bound for
/// maximized objectives, a lower bound for minimized ones. A pair counts as
/// still co-teamable when it is already realized, when both students are
/// unassigned, or when one is unassigned and the other's team has room.
ObjectiveValue optimistic_bound(const Objective& obj, const Instance& inst,
                                const PartialAssignment& partial);

}  // namespace teamforge

#endif  // TEAMFORGE_OBJECTIVES_HPP
