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

#ifndef TEAMFORGE_STRATEGY_HPP
#define TEAMFORGE_STRATEGY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teamforge/instance.hpp"
#include "teamforge/objectives.hpp"

namespace teamforge {

/// An ordered, non-empty list of objectives optimized lexicographically:
/// each stage is solved over the solutions that keep every earlier stage at
/// its final value.
class Strategy {
 public:
  /// Throws ParseError on an empty list, DuplicateStage on repeats.
  explicit Strategy(std::vector<Objective> stages,
                    std::optional<std::string> id = std::nullopt);

  const std::optional<std::string>& id() const noexcept { return id_; }
  const std::vector<Objective>& stages() const noexcept { return stages_; }
  std::size_t size() const noexcept { return stages_.size(); }

  /// "EDU-TF(O3-(-4), O3+(4), O1)".
  std::string render() const;

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  std::optional<std::string> id_;
  std::vector<Objective> stages_;
};

/// Accepts "EDU-TF(O2, O1)" or the bare list "O2, O1". O3 stages are written
/// "O3+(2)" / "O3-(-4)" (parentheses optional). Whitespace is ignored.
Strategy parse_strategy(std::string_view text);

/// The ten built-in strategies S1.1 .. S4.2.
const std::map<std::string, Strategy>& catalog();

/// Catalog id ("S3.3") or strategy expression.
Strategy resolve_strategy(std::string_view text);

/// Drops O3 stages whose target value never occurs off the diagonal of the
/// instance's preference matrix. Throws EmptyAfterAdaptation if nothing
/// remains.
Strategy adapt_to_instance(const Strategy& strat, const Instance& inst);

}  // namespace teamforge

#endif  // TEAMFORGE_STRATEGY_HPP
