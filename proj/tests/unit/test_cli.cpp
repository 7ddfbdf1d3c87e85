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

#include <atomic>
#include <filesystem>
#include <sstream>

#include <spdlog/spdlog.h>
#include <unistd.h>

#include "support.hpp"
#include "teamforge/cli/commands.hpp"
#include "teamforge/cli/formats.hpp"
#include "teamforge/verify.hpp"

using namespace teamforge;
using namespace teamforge::cli;
using namespace std::chrono_literals;
using teamforge::testing::error_code_of;
using teamforge::testing::make_spec;
namespace fs = std::filesystem;

namespace {

const bool kQuiet = [] {
  spdlog::set_level(spdlog::level::off);
  return true;
}();

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("teamforge-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

SolveConfig quick(std::chrono::milliseconds limit = 2000ms) {
  SolveConfig cfg;
  cfg.time_limit = limit;
  return cfg;
}

void save_json(const fs::path& p, const Json& doc) { write_text_file(p, render_json(doc)); }

std::string run_validate(const fs::path& inst, const fs::path& sol, int* code) {
  std::ostringstream out;
  *code = cmd_validate({inst, sol}, out);
  return out.str();
}

}  // namespace

TEST_CASE("parse_duration") {
  CHECK(parse_duration("15m") == 900'000ms);
  CHECK(parse_duration("60s") == 60'000ms);
  CHECK(parse_duration("250ms") == 250ms);
  CHECK(parse_duration("1.5s") == 1500ms);
  CHECK(parse_duration("1h") == 3'600'000ms);
  CHECK(parse_duration("2") == 2000ms);
  for (const char* bad : {"", "abc", "10x", "s", "1..2s", "-5s"}) {
    CAPTURE(bad);
    CHECK(error_code_of([&] { parse_duration(bad); }) == Errc::InvalidArgument);
  }
}

TEST_CASE("parse_csv") {
  const auto rows = parse_csv("a, b ,c\r\n\n\"x, y\",\"say \"\"hi\"\"\",  \n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"a", "b", "c"});
  CHECK(rows[1] == std::vector<std::string>{"x, y", "say \"hi\"", ""});
  CHECK(error_code_of([] { parse_csv("\"open"); }) == Errc::SchemaError);
  CHECK(parse_csv("last,row").size() == 1);
}

TEST_CASE("instance files round-trip") {
  for (const char* name : {"D1", "D5", "D8.1"}) {
    CAPTURE(name);
    const Instance inst = verify::generate(verify::find_preset(name), 7);
    for (auto enc : {Encoding::Auto, Encoding::Sparse, Encoding::Dense}) {
      const std::string text = render_json(instance_to_json(inst, enc));
      const Instance back = instance_from_json(Json::parse(text));
      CHECK(back == inst);
      CHECK(render_json(instance_to_json(back, enc)) == text);
      CHECK(fingerprint(back) == fingerprint(inst));
    }
  }
  SUBCASE("auto picks sparse for thin matrices") {
    const Instance d82 = verify::generate(verify::find_preset("D8.2"), 0);
    CHECK(resolve_encoding(Encoding::Auto, d82.preferences()) == Encoding::Sparse);
    const Instance d7 = verify::generate(verify::find_preset("D7"), 0);
    CHECK(resolve_encoding(Encoding::Auto, d7.preferences()) == Encoding::Dense);
  }
}

TEST_CASE("fingerprint notices a changed cell") {
  auto spec = make_spec(4, 2, 2, 2);
  const Instance a = validate_instance(spec);
  spec.preferences.set(0, 1, 1);
  const Instance b = validate_instance(spec);
  CHECK(fingerprint(a) != fingerprint(b));
  CHECK(fingerprint(a).rfind("fnv1a64:", 0) == 0);
  CHECK(fingerprint(a).size() == 8 + 16);
}

TEST_CASE("instance schema errors") {
  const Instance inst = verify::generate(verify::find_preset("D1"), 1);
  const Json good = instance_to_json(inst, Encoding::Sparse);
  auto code_for = [](Json doc) { return error_code_of([&] { instance_from_json(doc); }); };

  Json doc = good;
  doc["format"] = "something-else";
  CHECK(code_for(doc) == Errc::SchemaError);
  doc = good;
  doc["version"] = 2;
  CHECK(code_for(doc) == Errc::SchemaError);
  doc = good;
  doc["meta"]["m"] = 14;
  CHECK(code_for(doc) == Errc::SchemaError);
  doc = good;
  doc["preferences"]["entries"].push_back(Json::array({"student-1", "nobody", 1}));
  CHECK(code_for(doc) == Errc::SchemaError);
  doc = good;
  doc["preferences"]["entries"].push_back(doc["preferences"]["entries"][0]);
  CHECK(code_for(doc) == Errc::SchemaError);
  doc = good;
  doc["meta"].erase("c");
  CHECK(code_for(doc) == Errc::SchemaError);
  doc = good;
  doc["students"][0]["id"] = doc["students"][1]["id"];
  CHECK(code_for(doc) == Errc::SchemaError);
  doc = good;
  doc["preferences"]["entries"][0][2] = 9;
  CHECK(code_for(doc) == Errc::PreferenceOutOfRange);
  doc = good;
  doc["students"][0]["skills"] = Json::array({99});
  CHECK(code_for(doc) == Errc::SkillNotDeclared);
}

TEST_CASE("solution files round-trip") {
  const Instance inst = verify::generate(verify::find_preset("D2"), 3);
  const Strategy strat = adapt_to_instance(resolve_strategy("S3.3"), inst);
  SolutionFile sol;
  sol.fingerprint = fingerprint(inst);
  sol.requested = "S3.3";
  sol.strategy = strat;
  sol.config = quick();
  sol.outcome = solve(inst, strat, sol.config);
  REQUIRE(sol.outcome.assignment);
  for (bool timing : {false, true}) {
    CAPTURE(timing);
    const std::string text = render_json(solution_to_json(inst, sol, timing));
    const SolutionFile back = solution_from_json(Json::parse(text), inst);
    CHECK(back.has_timing == timing);
    CHECK(back.strategy == strat);
    CHECK(*back.outcome.assignment == *sol.outcome.assignment);
    CHECK(render_json(solution_to_json(inst, back, timing)) == text);
    CHECK(audit(inst, back.strategy, back.outcome).ok);
  }
}

TEST_CASE("explicit preference CSV") {
  auto idx = [](const std::string& s) { return s == "ann" ? 0 : s == "bob" ? 1 : s == "cy" ? 2 : -1; };
  const auto prefs = read_explicit_csv(
      "from,to,value,kind\nann,bob,2,weak\nbob,ann,-4,strong\ncy,ann,4,STRONG\n", idx);
  CHECK(prefs.weak.at({0, 1}) == 2);
  CHECK(prefs.strong_negative.count({1, 0}) == 1);
  CHECK(prefs.strong_positive.count({2, 0}) == 1);
  for (const char* bad : {"from,to,value\nann,bob,1\n",
                          "from,to,value,kind\nann,bob,3,weak\n",
                          "from,to,value,kind\nann,bob,2,strong\n",
                          "from,to,value,kind\nann,bob,1,medium\n",
                          "from,to,value,kind\nann,zed,1,weak\n",
                          "from,to,value,kind\nann,ann,1,weak\n",
                          "from,to,value,kind\nann,bob,x,weak\n",
                          "from,to,value,kind\nann,bob,1,weak\nann,bob,2,weak\n"}) {
    CAPTURE(bad);
    CHECK(error_code_of([&] { read_explicit_csv(bad, idx); }) == Errc::SchemaError);
  }
}

TEST_CASE("profile CSV") {
  const auto table = read_profile_csv(
      "student,time,effort,sync\nkind,likert:1:5,likert:1:3,binary\nann,5,3,1\nbob,1,1,0\n");
  CHECK(table.students == std::vector<std::string>{"ann", "bob"});
  REQUIRE(table.profiles.attributes.size() == 3);
  CHECK(table.profiles.attributes[1].scale_max == 3);
  CHECK(table.profiles.attributes[2].kind == AttributeKind::Binary);
  CHECK(table.profiles.ratings[1] == std::vector<int>{1, 1, 0});
  for (const char* bad : {"name,time\nkind,binary\na,1\n",
                          "student,time\na,1\n",
                          "student,time\nkind,likert:5:1\na,1\n",
                          "student,time\nkind,scale\na,1\n",
                          "student,time\nkind,binary\na,1,2\n",
                          "student,time\nkind,binary\na,1\na,0\n"}) {
    CAPTURE(bad);
    CHECK(error_code_of([&] { read_profile_csv(bad); }) == Errc::SchemaError);
  }
}

TEST_CASE("solve then validate") {
  TempDir dir;
  const auto inst_path = dir / "d1.json";
  const auto sol_path = dir / "d1.solution.json";
  std::ostringstream sink;
  REQUIRE(cmd_generate({"D1", 0, false, Encoding::Auto, inst_path}, sink) == kExitOk);

  SolveOptions so;
  so.instance = inst_path;
  so.strategy = "S2.1";
  so.config = quick(60s);
  so.out = sol_path;
  std::ostringstream out;
  CHECK(cmd_solve(so, out) == kExitOk);
  CHECK(out.str().find("optimal") != std::string::npos);

  int code = -1;
  auto report = run_validate(inst_path, sol_path, &code);
  CHECK(code == kExitOk);
  CHECK(report.find("FAIL") == std::string::npos);
  CHECK(report.find("all checks passed") != std::string::npos);

  const Json good = read_json_file(sol_path);
  SUBCASE("edited stage value") {
    Json doc = good;
    doc["stages"][0]["value"] = doc["stages"][0]["value"].get<int>() + 1;
    save_json(sol_path, doc);
    report = run_validate(inst_path, sol_path, &code);
    CHECK(code == kExitValidationFailed);
    CHECK(report.find("FAIL stage 1 (O1): reported value") != std::string::npos);
  }
  SUBCASE("oversized team") {
    Json doc = good;
    auto& teams = doc["teams"];
    // D1 allows at most two per team; move a member of one team into another.
    teams[1].push_back(teams[0][0]);
    teams[0].erase(0);
    save_json(sol_path, doc);
    report = run_validate(inst_path, sol_path, &code);
    CHECK(code == kExitValidationFailed);
    CHECK(report.find("team-size (above k_max) constraint violated by team") != std::string::npos);
    CHECK(report.find(teams[1][0].get<std::string>()) != std::string::npos);
  }
  SUBCASE("another instance") {
    const auto other = dir / "d2.json";
    REQUIRE(cmd_generate({"D2", 0, false, Encoding::Auto, other}, sink) == kExitOk);
    CHECK(error_code_of([&] { run_validate(other, sol_path, &code); }) == Errc::FingerprintMismatch);
    CHECK(exit_code_for(Errc::FingerprintMismatch) == kExitValidationFailed);
  }
}

TEST_CASE("solve exit codes and stage output") {
  TempDir dir;
  std::ostringstream out;
  SUBCASE("infeasible") {
    const auto path = dir / "no.json";
    const verify::SetCoverInstance sc{{1, 2, 3}, {{1}, {2}, {1, 2}}, 2};
    save_instance(verify::reduce_set_cover(sc), path);
    SolveOptions so{path, "S2.1", quick(), dir / "no.solution.json"};
    CHECK(cmd_solve(so, out) == kExitInfeasible);
    const Json doc = read_json_file(so.out);
    CHECK(doc["status"] == "infeasible");
    CHECK(doc["teams"].is_null());
  }
  SUBCASE("two stages") {
    const auto path = dir / "d1.json";
    save_instance(verify::generate(verify::find_preset("D1"), 2), path);
    SolveOptions so{path, "EDU-TF(O2, O1)", quick(), dir / "s.json"};
    CHECK(cmd_solve(so, out) == kExitOk);
    const Json doc = read_json_file(so.out);
    REQUIRE(doc["stages"].size() == 2);
    CHECK(doc["stages"][0]["objective"] == "O2");
    CHECK(doc["stages"][1]["objective"] == "O1");
    CHECK_FALSE(doc.contains("timing"));
  }
  SUBCASE("nothing left after adaptation") {
    const auto path = dir / "d1.json";
    save_instance(verify::generate(verify::find_preset("D1"), 2), path);
    SolveOptions so{path, "EDU-TF(O3+(4), O3-(-4))", quick(), {}};
    try {
      cmd_solve(so, out);
      FAIL("expected EmptyAfterAdaptation");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::EmptyAfterAdaptation);
      CHECK(std::string(e.what()).find("values present: -1, 0, 1, 2") != std::string::npos);
    }
  }
}

TEST_CASE("generate") {
  TempDir dir;
  std::ostringstream out;
  REQUIRE(cmd_generate({"D5", 7, false, Encoding::Auto, dir / "a.json"}, out) == kExitOk);
  REQUIRE(cmd_generate({"D5", 7, false, Encoding::Auto, dir / "b.json"}, out) == kExitOk);
  CHECK(read_text_file(dir / "a.json") == read_text_file(dir / "b.json"));
  const Instance d5 = load_instance(dir / "a.json");
  CHECK(d5.num_students() == 37);
  CHECK(d5.num_teams() == 10);
  CHECK(d5.min_team_size() == 3);
  CHECK(d5.max_team_size() == 4);
  CHECK(d5.num_skills() == 14);
  CHECK(d5.min_coverage() == 3);
  CHECK(error_code_of([&] { cmd_generate({"D9", 0, false, Encoding::Auto, {}}, out); }) ==
        Errc::UnknownPreset);
}

TEST_CASE("build-prefs") {
  TempDir dir;
  std::ostringstream out;
  write_text_file(dir / "explicit.csv",
                  "from,to,value,kind\nann,bob,2,weak\nbob,cy,-4,strong\ncy,ann,1,weak\n");
  write_text_file(dir / "profiles.csv",
                  "student,time,effort,sync\nkind,likert:1:5,likert:1:3,binary\n"
                  "ann,5,3,1\nbob,1,1,0\ncy,3,2,1\ndee,4,3,0\n");
  auto cell = [](const Json& doc, const std::string& a, const std::string& b) {
    for (const auto& e : doc["preferences"]["entries"]) {
      if (e[0] == a && e[1] == b) return e[2].get<int>();
    }
    return 0;
  };

  SUBCASE("explicit only") {
    BuildPrefsOptions o;
    o.explicit_csv = dir / "explicit.csv";
    o.out = dir / "prefs.json";
    CHECK(cmd_build_prefs(o, out) == kExitOk);
    const Json doc = read_json_file(o.out);
    CHECK(doc["students"] == Json::array({"ann", "bob", "cy"}));
    CHECK(doc["preferences"]["entries"].size() == 3);
    CHECK(cell(doc, "ann", "bob") == 2);
    CHECK(cell(doc, "bob", "cy") == -4);
    CHECK(cell(doc, "bob", "ann") == 0);
    const Json prov = read_json_file(dir / "prefs.provenance.json");
    CHECK(prov["entries"].size() == 3);
  }
  SUBCASE("profiles only") {
    BuildPrefsOptions o;
    o.profiles_csv = dir / "profiles.csv";
    o.out = dir / "prefs.json";
    CHECK(cmd_build_prefs(o, out) == kExitOk);
    const Json doc = read_json_file(o.out);
    const std::vector<std::string> names{"ann", "bob", "cy", "dee"};
    for (const auto& a : names) {
      for (const auto& b : names) {
        CHECK(cell(doc, a, b) == cell(doc, b, a));
        CHECK(cell(doc, a, b) >= -2);
        CHECK(cell(doc, a, b) <= 2);
      }
    }
    CHECK(cell(doc, "ann", "bob") == -2);
  }
  SUBCASE("explicit wins a conflicting cell") {
    BuildPrefsOptions o;
    o.explicit_csv = dir / "explicit.csv";
    o.profiles_csv = dir / "profiles.csv";
    o.out = dir / "prefs.json";
    CHECK(cmd_build_prefs(o, out) == kExitOk);
    const Json doc = read_json_file(o.out);
    CHECK(cell(doc, "ann", "bob") == 2);
    const Json prov = read_json_file(dir / "prefs.provenance.json");
    bool found = false;
    for (const auto& e : prov["entries"]) {
      if (e[0] == "ann" && e[1] == "bob") {
        CHECK(e[3] == "weak");
        found = true;
      }
      if (e[0] == "bob" && e[1] == "ann") CHECK(e[3] == "profile");
    }
    CHECK(found);
  }
  SUBCASE("into an instance") {
    auto spec = make_spec(4, 2, 2, 2);
    spec.student_names = {"ann", "bob", "cy", "dee"};
    save_instance(validate_instance(spec), dir / "course.json");
    BuildPrefsOptions o;
    o.explicit_csv = dir / "explicit.csv";
    o.instance = dir / "course.json";
    o.out = dir / "course.prefs.json";
    CHECK(cmd_build_prefs(o, out) == kExitOk);
    const Instance inst = load_instance(o.out);
    CHECK(inst.pref(1, 2) == -4);
    CHECK(inst.pref(0, 1) == 2);
  }
  SUBCASE("bound") {
    BuildPrefsOptions o;
    o.explicit_csv = dir / "explicit.csv";
    o.bound = 2;
    o.out = dir / "prefs.json";
    CHECK(error_code_of([&] { cmd_build_prefs(o, out); }) == Errc::PreferenceExceedsBound);
  }
}

TEST_CASE("bench on a small preset") {
  TempDir dir;
  BenchOptions o;
  o.presets = {"D1"};
  o.strategies = {"S2.1", "S4.1", "EDU-TF(O3+(4))"};
  o.config = quick(2s);
  o.per_objective = true;
  o.config.time_mode = TimeMode::Timeboxed;
  o.out = dir / "bench.json";
  o.table = dir / "bench.txt";
  o.trace = dir / "trace.csv";
  std::ostringstream out;
  CHECK(cmd_bench(o, out) == kExitOk);
  const Json doc = read_json_file(o.out);
  REQUIRE(doc["instances"].size() == 1);
  const auto& cells = doc["instances"][0]["cells"];
  REQUIRE(cells.size() == 3);
  CHECK(cells[0]["o1"] == cells[1]["o1"]);
  CHECK(cells[0]["stage_values"] == cells[1]["stage_values"]);
  CHECK(cells[2]["status"] == "error");
  CHECK(cells[0]["counts"].contains("-4"));
  CHECK(doc["instances"][0]["baseline"]["o1"].is_number_integer());
  const std::string table = read_text_file(o.table);
  CHECK(table.find("baseline") != std::string::npos);
  CHECK(read_text_file(o.trace).rfind("instance,strategy,elapsed_s,work,o1\n", 0) == 0);

  SUBCASE("manual column by fingerprint") {
    const Instance d1 = verify::generate(verify::find_preset("D1"), 0);
    save_instance(d1, dir / "d1.json");
    SolveOptions so{dir / "d1.json", "S1.1", quick(), dir / "manual.json"};
    REQUIRE(cmd_solve(so, out) == kExitOk);
    o.strategies = {"S2.1"};
    o.manual = {dir / "manual.json"};
    const auto report = run_bench(o, nullptr);
    REQUIRE(report.instances[0].manual.has_value());
    CHECK(report.instances[0].manual->o1.has_value());
  }
}

TEST_CASE("validate accepts every solve output") {
  TempDir dir;
  std::ostringstream sink;
  for (const auto& preset : verify::presets()) {
    const auto inst_path = dir / (preset.name + ".json");
    REQUIRE(cmd_generate({preset.name, 0, false, Encoding::Auto, inst_path}, sink) == kExitOk);
    for (const auto& [id, strat] : catalog()) {
      CAPTURE(preset.name);
      CAPTURE(id);
      SolveOptions so{inst_path, id, quick(50ms), dir / "sol.json"};
      const int code = cmd_solve(so, sink);
      CHECK((code == kExitOk || code == kExitUnknown));
      int vcode = -1;
      const auto report = run_validate(inst_path, so.out, &vcode);
      CHECK(vcode == kExitOk);
      if (vcode != kExitOk) MESSAGE(report);
    }
  }
}
