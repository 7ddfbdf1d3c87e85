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

#include "teamforge/strategy.hpp"

#include <algorithm>
#include <cctype>

#include "teamforge/error.hpp"

namespace teamforge {

Strategy::Strategy(std::vector<Objective> stages, std::optional<std::string> id)
    : id_(std::move(id)), stages_(std::move(stages)) {
  if (stages_.empty()) {
    throw Error(Errc::ParseError, "a strategy needs at least one objective");
  }
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (stages_[i] == stages_[j]) {
        throw Error(Errc::DuplicateStage, stages_[i].to_string() +
                                              " appears more than once");
      }
    }
  }
}

std::string Strategy::render() const {
  std::string out = "EDU-TF(";
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    if (i > 0) out += ", ";
    out += stages_[i].to_string();
  }
  return out + ")";
}

namespace {

// Recursive-descent parser over the input with whitespace removed; `where_`
// maps each kept character back to its offset in the original text.
class StrategyParser {
 public:
  explicit StrategyParser(std::string_view text) : original_(text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        where_.push_back(i);
      }
    }
  }

  Strategy parse() {
    bool wrapped = false;
    if (match_word("EDU-TF")) {
      expect('(');
      wrapped = true;
    }
    std::vector<Objective> stages;
    if (wrapped && peek() == ')') fail("empty stage list");
    if (!wrapped && at_end()) fail("empty stage list");
    stages.push_back(stage());
    while (peek() == ',') {
      ++pos_;
      stages.push_back(stage());
    }
    if (wrapped) expect(')');
    if (!at_end()) fail("unexpected trailing input");
    return Strategy(std::move(stages));
  }

 private:
  bool at_end() const { return pos_ >= chars_.size(); }
  char peek() const { return at_end() ? '\0' : chars_[pos_]; }

  std::size_t offset() const {
    return at_end() ? original_.size() : where_[pos_];
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError,
                what + " at position " + std::to_string(offset()) + " in '" +
                    std::string(original_) + "'");
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool match_word(std::string_view word) {
    if (chars_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(chars_[pos_ + i])) != word[i]) {
        return false;
      }
    }
    pos_ += word.size();
    return true;
  }

  int integer() {
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      pos_ = start;
      fail("expected an integer");
    }
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000'000) fail("integer out of range");
      ++pos_;
    }
    return static_cast<int>(negative ? -value : value);
  }

  Objective stage() {
    const std::size_t start = pos_;
    if (std::toupper(static_cast<unsigned char>(peek())) != 'O') {
      fail("expected an objective (O1, O2, O3+/-)");
    }
    ++pos_;
    if (peek() == '1' || peek() == '2') {
      const char which = peek();
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = start;
        throw Error(Errc::UnknownObjective,
                    "unknown objective at position " + std::to_string(offset()));
      }
      return which == '1' ? Objective::o1() : Objective::o2();
    }
    if (peek() != '3') {
      pos_ = start;
      throw Error(Errc::UnknownObjective,
                  "unknown objective at position " + std::to_string(offset()) +
                      " in '" + std::string(original_) + "'");
    }
    ++pos_;
    if (peek() != '+' && peek() != '-') fail("O3 needs a sense '+' or '-'");
    const Sense sense = peek() == '+' ? Sense::Maximize : Sense::Minimize;
    ++pos_;
    int p0 = 0;
    if (peek() == '(') {
      ++pos_;
      p0 = integer();
      expect(')');
    } else {
      p0 = integer();
    }
    return Objective::o3(p0, sense);
  }

  std::string_view original_;
  std::string chars_;
  std::vector<std::size_t> where_;
  std::size_t pos_ = 0;
};

Strategy named(std::string id, std::vector<Objective> stages) {
  return Strategy(std::move(stages), std::move(id));
}

}  // namespace

Strategy parse_strategy(std::string_view text) {
  return StrategyParser(text).parse();
}

const std::map<std::string, Strategy>& catalog() {
  static const std::map<std::string, Strategy> kCatalog = [] {
    const auto o1 = Objective::o1();
    const auto o2 = Objective::o2();
    auto minus = [](int p0) { return Objective::o3(p0, Sense::Minimize); };
    auto plus = [](int p0) { return Objective::o3(p0, Sense::Maximize); };
    std::map<std::string, Strategy> out;
    auto add = [&](std::string id, std::vector<Objective> stages) {
      out.emplace(id, named(id, std::move(stages)));
    };
    add("S1.1", {o2});
    add("S1.2", {minus(-4), minus(-2), minus(-1)});
    add("S2.1", {o1});
    add("S2.2", {plus(4), plus(2), plus(1)});
    add("S3.1", {o2, o1});
    add("S3.2", {o2, plus(4), plus(2), plus(1)});
    add("S3.3", {minus(-4), minus(-2), minus(-1), o1});
    add("S3.4", {minus(-4), minus(-2), minus(-1), plus(4), plus(2), plus(1)});
    add("S4.1", {minus(-4), plus(4), o1});
    add("S4.2", {minus(-4), plus(4), minus(-2), plus(2), minus(-1), plus(1)});
    return out;
  }();
  return kCatalog;
}

Strategy resolve_strategy(std::string_view text) {
  std::string trimmed(text);
  trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(),
                               [](unsigned char ch) { return std::isspace(ch); }),
                trimmed.end());
  const auto& known = catalog();
  if (auto it = known.find(trimmed); it != known.end()) return it->second;
  return parse_strategy(text);
}

Strategy adapt_to_instance(const Strategy& strat, const Instance& inst) {
  std::vector<Objective> kept;
  for (const auto& stage : strat.stages()) {
    if (stage.kind() == ObjectiveKind::O3 &&
        !inst.preferences().contains_off_diagonal(*stage.p0())) {
      continue;
    }
    kept.push_back(stage);
  }
  if (kept.empty()) {
    throw Error(Errc::EmptyAfterAdaptation,
                strat.render() +
                    " only targets preference values absent from this "
                    "instance; nothing is left to optimize");
  }
  return Strategy(std::move(kept), strat.id());
}

}  // namespace teamforge
