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
#include "teamforge/strategy.hpp"
#include "teamforge/verify.hpp"

using namespace teamforge;
using teamforge::testing::error_code_of;
using teamforge::testing::make_spec;

namespace {

const Objective kO1 = Objective::o1();
const Objective kO2 = Objective::o2();
Objective plus(int v) { return Objective::o3(v, Sense::Maximize); }
Objective minus(int v) { return Objective::o3(v, Sense::Minimize); }

// Histogram values of D1: 2, 1, 0, -1.
Instance d1_like() {
  auto spec = make_spec(6, 3, 1, 2);
  spec.preferences.set(0, 1, 2);
  spec.preferences.set(1, 2, 1);
  spec.preferences.set(3, 4, -1);
  return validate_instance(spec);
}

}  // namespace

TEST_CASE("parse_strategy") {
  SUBCASE("wrapped form") {
    CHECK(parse_strategy("EDU-TF(O2, O1)").stages() == std::vector<Objective>{kO2, kO1});
  }
  SUBCASE("bare form, any spacing") {
    CHECK(parse_strategy("  O2 ,O1 ").stages() == std::vector<Objective>{kO2, kO1});
    CHECK(parse_strategy("edu-tf ( O 3 - ( - 4 ) )").stages() ==
          std::vector<Objective>{minus(-4)});
  }
  SUBCASE("O3 with signs") {
    CHECK(parse_strategy("EDU-TF(O3-(-4), O3+(4), O1)").stages() ==
          std::vector<Objective>{minus(-4), plus(4), kO1});
    CHECK(parse_strategy("O3+2").stages() == std::vector<Objective>{plus(2)});
  }
  SUBCASE("errors") {
    CHECK(error_code_of([] { parse_strategy("EDU-TF()"); }) == Errc::ParseError);
    CHECK(error_code_of([] { parse_strategy(""); }) == Errc::ParseError);
    CHECK(error_code_of([] { parse_strategy("O1, O1"); }) == Errc::DuplicateStage);
    CHECK(error_code_of([] { parse_strategy("O4"); }) == Errc::UnknownObjective);
    CHECK(error_code_of([] { parse_strategy("EDU-TF(O1"); }) == Errc::ParseError);
    CHECK(error_code_of([] { parse_strategy("O3(2)"); }) == Errc::ParseError);
  }
  SUBCASE("error message carries a position") {
    try {
      parse_strategy("O1, O2 x");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("position 7") != std::string::npos);
    }
  }
}

TEST_CASE("catalog matches the strategy table") {
  const auto& cat = catalog();
  CHECK(cat.size() == 10);
  CHECK(cat.at("S1.1").stages() == std::vector<Objective>{kO2});
  CHECK(cat.at("S1.2").stages() == std::vector<Objective>{minus(-4), minus(-2), minus(-1)});
  CHECK(cat.at("S2.1").stages() == std::vector<Objective>{kO1});
  CHECK(cat.at("S2.2").stages() == std::vector<Objective>{plus(4), plus(2), plus(1)});
  CHECK(cat.at("S3.1").stages() == std::vector<Objective>{kO2, kO1});
  CHECK(cat.at("S3.2").stages() == std::vector<Objective>{kO2, plus(4), plus(2), plus(1)});
  CHECK(cat.at("S3.3").stages() ==
        std::vector<Objective>{minus(-4), minus(-2), minus(-1), kO1});
  CHECK(cat.at("S3.4").stages() == std::vector<Objective>{minus(-4), minus(-2), minus(-1),
                                                          plus(4), plus(2), plus(1)});
  CHECK(cat.at("S4.1").stages() == std::vector<Objective>{minus(-4), plus(4), kO1});
  CHECK(cat.at("S4.2").stages() == std::vector<Objective>{minus(-4), plus(4), minus(-2),
                                                          plus(2), minus(-1), plus(1)});
  for (const auto& [id, strat] : cat) CHECK(strat.id() == id);
}

TEST_CASE("render and parse round-trip on the catalog") {
  for (const auto& [id, strat] : catalog()) {
    CHECK(parse_strategy(strat.render()).stages() == strat.stages());
  }
  CHECK(catalog().at("S4.1").render() == "EDU-TF(O3-(-4), O3+(4), O1)");
}

TEST_CASE("resolve_strategy takes ids or expressions") {
  CHECK(resolve_strategy("S3.1").id() == "S3.1");
  CHECK(resolve_strategy("EDU-TF(O2, O1)").stages() == catalog().at("S3.1").stages());
}

TEST_CASE("adapt_to_instance") {
  const Instance inst = d1_like();
  SUBCASE("S1.2 keeps only present values") {
    CHECK(adapt_to_instance(catalog().at("S1.2"), inst).stages() ==
          std::vector<Objective>{minus(-1)});
  }
  SUBCASE("S4.1 collapses to S2.1 without +-4") {
    CHECK(adapt_to_instance(catalog().at("S4.1"), inst).stages() ==
          catalog().at("S2.1").stages());
  }
  SUBCASE("S2.1 is untouched") {
    CHECK(adapt_to_instance(catalog().at("S2.1"), inst) == catalog().at("S2.1"));
  }
  SUBCASE("nothing left") {
    CHECK(error_code_of([&] { adapt_to_instance(parse_strategy("O3+(4), O3-(-4)"), inst); }) ==
          Errc::EmptyAfterAdaptation);
  }
}

TEST_CASE("S1.2 on a D1 preset keeps only the negative values present") {
  const Instance inst = verify::generate(verify::find_preset("D1"), 0);
  CHECK(adapt_to_instance(catalog().at("S1.2"), inst).stages() ==
        std::vector<Objective>{minus(-1)});
  // The D1 histogram has no -2 cells; adding one brings that stage back.
  auto spec = inst.to_spec();
  spec.preferences.set(0, 1, -2);
  const Instance with_minus_two = validate_instance(spec);
  CHECK(adapt_to_instance(catalog().at("S1.2"), with_minus_two).stages() ==
        std::vector<Objective>{minus(-2), minus(-1)});
}

TEST_CASE("adaptation is idempotent and only keeps present values") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance inst = verify::random_instance(seed, {.values = {-4, -1, 0, 1, 2}});
    for (const auto& [id, strat] : catalog()) {
      Strategy adapted = strat;
      try {
        adapted = adapt_to_instance(strat, inst);
      } catch (const Error& e) {
        CHECK(e.code() == Errc::EmptyAfterAdaptation);
        continue;
      }
      CHECK(adapt_to_instance(adapted, inst) == adapted);
      for (const auto& obj : adapted.stages()) {
        if (obj.p0()) CHECK(inst.preferences().contains_off_diagonal(*obj.p0()));
      }
    }
  }
}
