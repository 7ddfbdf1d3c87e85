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

#include "teamforge/cli/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <fmt/core.h>

#include "teamforge/error.hpp"

namespace teamforge::cli {

namespace {

constexpr const char* kInstanceFormat = "teamforge-instance";
constexpr const char* kSolutionFormat = "teamforge-solution";

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(Errc::SchemaError, what);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where + " must be an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(fmt::format("{}: missing '{}'", where, key));
  return *it;
}

template <typename T>
T get_as(const Json& value, const std::string& where) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    schema_error(where + " has the wrong type");
  }
}

int get_int(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) schema_error(where + " must be an integer");
  const auto v = value.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) schema_error(where + " is out of range");
  return static_cast<int>(v);
}

void check_header(const Json& doc, const char* format) {
  if (!doc.is_object()) schema_error("document must be an object");
  const auto& f = member(doc, "format", "document");
  if (!f.is_string() || f.get<std::string>() != format) {
    schema_error(fmt::format("format must be '{}'", format));
  }
  const int version = get_int(member(doc, "version", "document"), "version");
  if (version != kFormatVersion) {
    schema_error(fmt::format("unsupported version {} (expected {})", version, kFormatVersion));
  }
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

bool is_flat(const Json& j) {
  if (is_scalar(j)) return true;
  if (j.is_array()) return std::all_of(j.begin(), j.end(), is_scalar);
  return std::all_of(j.begin(), j.end(), [](const Json& v) {
    return is_scalar(v) || (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar));
  });
}

void render_inline(const Json& j, std::string& out) {
  if (is_scalar(j)) {
    out += j.dump();
  } else if (j.is_array()) {
    out += '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      render_inline(j[i], out);
    }
    out += ']';
  } else {
    out += '{';
    bool first = true;
    for (const auto& item : j.items()) {
      if (!first) out += ", ";
      first = false;
      out += Json(item.key()).dump();
      out += ": ";
      render_inline(item.value(), out);
    }
    out += '}';
  }
}

void render(const Json& j, int indent, bool in_array, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (is_scalar(j) || j.empty() || (j.is_array() && is_flat(j)) ||
      (in_array && j.is_object() && is_flat(j))) {
    render_inline(j, out);
    return;
  }
  const bool array = j.is_array();
  out += array ? "[\n" : "{\n";
  bool first = true;
  for (const auto& item : j.items()) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (!array) {
      out += Json(item.key()).dump();
      out += ": ";
    }
    render(item.value(), indent + 2, array, out);
  }
  out += '\n';
  out += std::string(indent, ' ');
  out += array ? ']' : '}';
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

[[noreturn]] void csv_error(int line, const std::string& what) {
  throw Error(Errc::SchemaError, fmt::format("line {}: {}", line, what));
}

Json optional_int(const std::optional<ObjectiveValue>& v) {
  return v ? Json(*v) : Json(nullptr);
}

StageStatus stage_status_from(const std::string& s) {
  if (s == "optimal") return StageStatus::Optimal;
  if (s == "feasible") return StageStatus::Feasible;
  if (s == "skipped") return StageStatus::Skipped;
  schema_error("unknown stage status '" + s + "'");
}

SolveStatus solve_status_from(const std::string& s) {
  if (s == "optimal") return SolveStatus::Optimal;
  if (s == "feasible") return SolveStatus::Feasible;
  if (s == "infeasible") return SolveStatus::Infeasible;
  if (s == "unknown") return SolveStatus::Unknown;
  schema_error("unknown status '" + s + "'");
}

std::optional<ObjectiveValue> optional_value(const Json& j, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_number_integer()) schema_error(where + " must be an integer or null");
  return j.get<ObjectiveValue>();
}

}  // namespace

Encoding resolve_encoding(Encoding requested, const PreferenceMatrix& prefs) {
  if (requested != Encoding::Auto) return requested;
  const int m = prefs.size();
  std::size_t nonzero = 0;
  for (int v : prefs.cells()) nonzero += v != 0;
  const std::size_t off_diagonal = static_cast<std::size_t>(m) * (m > 0 ? m - 1 : 0);
  return nonzero * 4 > off_diagonal ? Encoding::Dense : Encoding::Sparse;
}

Json instance_to_json(const Instance& inst, Encoding encoding) {
  const InstanceSpec spec = inst.to_spec();
  const int m = spec.num_students;
  Json doc;
  doc["format"] = kInstanceFormat;
  doc["version"] = kFormatVersion;
  doc["meta"] = Json{{"m", m},
                     {"n", spec.num_teams},
                     {"k_min", spec.min_team_size},
                     {"k_max", spec.max_team_size},
                     {"c", spec.min_coverage},
                     {"d", spec.preference_bound}};
  Json skills = Json::array();
  for (std::size_t s = 0; s < spec.skills.size(); ++s) {
    skills.push_back(Json{{"id", spec.skills[s]}, {"name", spec.skill_names[s]}});
  }
  doc["skills"] = std::move(skills);
  Json students = Json::array();
  for (int a = 0; a < m; ++a) {
    std::vector<int> held = spec.student_skills[a];
    students.push_back(Json{{"id", spec.student_names[a]}, {"skills", held}});
  }
  doc["students"] = std::move(students);
  Json prefs;
  if (resolve_encoding(encoding, spec.preferences) == Encoding::Dense) {
    prefs["encoding"] = "dense";
    Json rows = Json::array();
    for (int a = 0; a < m; ++a) {
      const auto row = spec.preferences.row(a);
      rows.push_back(std::vector<int>(row.begin(), row.end()));
    }
    prefs["matrix"] = std::move(rows);
  } else {
    prefs["encoding"] = "sparse";
    Json entries = Json::array();
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (spec.preferences(a, b) != 0) {
          entries.push_back(Json::array({spec.student_names[a], spec.student_names[b],
                                         spec.preferences(a, b)}));
        }
      }
    }
    prefs["entries"] = std::move(entries);
  }
  doc["preferences"] = std::move(prefs);
  return doc;
}

Instance instance_from_json(const Json& doc) {
  check_header(doc, kInstanceFormat);
  const Json& meta = member(doc, "meta", "document");
  InstanceSpec spec;
  spec.num_students = get_int(member(meta, "m", "meta"), "meta.m");
  spec.num_teams = get_int(member(meta, "n", "meta"), "meta.n");
  spec.min_team_size = get_int(member(meta, "k_min", "meta"), "meta.k_min");
  spec.max_team_size = get_int(member(meta, "k_max", "meta"), "meta.k_max");
  spec.min_coverage = get_int(member(meta, "c", "meta"), "meta.c");
  spec.preference_bound = get_int(member(meta, "d", "meta"), "meta.d");
  const int m = spec.num_students;
  if (m < 0) schema_error("meta.m must be non-negative");

  const Json& skills = member(doc, "skills", "document");
  if (!skills.is_array()) schema_error("skills must be an array");
  for (std::size_t s = 0; s < skills.size(); ++s) {
    const std::string where = fmt::format("skills[{}]", s);
    spec.skills.push_back(get_int(member(skills[s], "id", where), where + ".id"));
    const auto it = skills[s].find("name");
    spec.skill_names.push_back(it == skills[s].end()
                                   ? std::to_string(spec.skills.back())
                                   : get_as<std::string>(*it, where + ".name"));
  }

  const Json& students = member(doc, "students", "document");
  if (!students.is_array()) schema_error("students must be an array");
  if (static_cast<int>(students.size()) != m) {
    schema_error(fmt::format("meta.m is {} but {} students are listed", m, students.size()));
  }
  std::unordered_map<std::string, int> index_of;
  for (int a = 0; a < m; ++a) {
    const std::string where = fmt::format("students[{}]", a);
    spec.student_names.push_back(get_as<std::string>(member(students[a], "id", where), where + ".id"));
    if (!index_of.emplace(spec.student_names.back(), a).second) {
      schema_error(fmt::format("student id '{}' listed twice", spec.student_names.back()));
    }
    const Json& held = member(students[a], "skills", where);
    if (!held.is_array()) schema_error(where + ".skills must be an array");
    std::vector<int> ids;
    for (const auto& id : held) ids.push_back(get_int(id, where + ".skills"));
    spec.student_skills.push_back(std::move(ids));
  }

  const Json& prefs = member(doc, "preferences", "document");
  const std::string encoding = get_as<std::string>(member(prefs, "encoding", "preferences"),
                                                   "preferences.encoding");
  spec.preferences = PreferenceMatrix(m);
  if (encoding == "dense") {
    const Json& rows = member(prefs, "matrix", "preferences");
    if (!rows.is_array() || static_cast<int>(rows.size()) != m) {
      schema_error(fmt::format("preferences.matrix must have {} rows", m));
    }
    for (int a = 0; a < m; ++a) {
      if (!rows[a].is_array() || static_cast<int>(rows[a].size()) != m) {
        schema_error(fmt::format("preferences.matrix row {} must have {} entries", a, m));
      }
      for (int b = 0; b < m; ++b) {
        spec.preferences.set(a, b, get_int(rows[a][b], "preferences.matrix"));
      }
    }
  } else if (encoding == "sparse") {
    const Json& entries = member(prefs, "entries", "preferences");
    if (!entries.is_array()) schema_error("preferences.entries must be an array");
    std::vector<char> seen(static_cast<std::size_t>(m) * m, 0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const Json& e = entries[i];
      const std::string where = fmt::format("preferences.entries[{}]", i);
      if (!e.is_array() || e.size() != 3) schema_error(where + " must be [from, to, value]");
      int ab[2];
      for (int k = 0; k < 2; ++k) {
        const auto name = get_as<std::string>(e[k], where);
        const auto it = index_of.find(name);
        if (it == index_of.end()) schema_error(fmt::format("{}: unknown student '{}'", where, name));
        ab[k] = it->second;
      }
      if (seen[ab[0] * m + ab[1]]++) schema_error(where + " repeats a pair");
      spec.preferences.set(ab[0], ab[1], get_int(e[2], where));
    }
  } else {
    schema_error("preferences.encoding must be 'dense' or 'sparse'");
  }
  return validate_instance(std::move(spec));
}

std::string render_json(const Json& doc) {
  std::string out;
  render(doc, 0, false, out);
  out += '\n';
  return out;
}

std::string fingerprint(const Instance& inst) {
  const std::string canonical = instance_to_json(inst, Encoding::Dense).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("fnv1a64:{:016x}", h);
}

Json solution_to_json(const Instance& inst, const SolutionFile& sol, bool with_timing) {
  const auto& out = sol.outcome;
  Json doc;
  doc["format"] = kSolutionFormat;
  doc["version"] = kFormatVersion;
  doc["instance_fingerprint"] = sol.fingerprint.empty() ? fingerprint(inst) : sol.fingerprint;
  doc["strategy"] = Json{{"requested", sol.requested},
                         {"id", sol.strategy.id() ? Json(*sol.strategy.id()) : Json(nullptr)},
                         {"adapted", sol.strategy.render()}};
  doc["config"] = Json{{"time_limit_ms", sol.config.time_limit.count()},
                       {"time_mode", std::string(to_string(sol.config.time_mode))},
                       {"seed", sol.config.seed},
                       {"work_rate", sol.config.work_rate},
                       {"symmetry_breaking", sol.config.symmetry_breaking}};
  doc["status"] = std::string(to_string(out.status));
  if (out.assignment) {
    Json teams = Json::array();
    for (const auto& team : out.assignment->teams()) {
      Json members = Json::array();
      for (int a : team) members.push_back(inst.student_names()[a]);
      teams.push_back(std::move(members));
    }
    doc["teams"] = std::move(teams);
  } else {
    doc["teams"] = nullptr;
  }
  Json stages = Json::array();
  for (const auto& st : out.stages) {
    stages.push_back(Json{{"objective", st.objective.to_string()},
                          {"value", optional_int(st.value)},
                          {"stage_value", optional_int(st.stage_value)},
                          {"status", std::string(to_string(st.status))},
                          {"nodes", st.nodes},
                          {"work", st.work},
                          {"work_to_best", st.work_to_best}});
  }
  doc["stages"] = std::move(stages);
  doc["work"] = out.work;
  Json trace = Json::array();
  for (const auto& p : out.quality_trace) trace.push_back(Json::array({p.work, p.o1}));
  doc["quality_trace"] = std::move(trace);
  if (with_timing) {
    Json timing;
    timing["elapsed_s"] = out.elapsed.count();
    Json per_stage = Json::array();
    for (const auto& st : out.stages) {
      per_stage.push_back(Json{{"budget_s", st.budget.count()},
                               {"time_total_s", st.time_total.count()},
                               {"time_to_best_s", st.time_to_best.count()}});
    }
    timing["stages"] = std::move(per_stage);
    Json elapsed = Json::array();
    for (const auto& p : out.quality_trace) elapsed.push_back(p.elapsed.count());
    timing["trace_elapsed_s"] = std::move(elapsed);
    doc["timing"] = std::move(timing);
  }
  return doc;
}

SolutionFile solution_from_json(const Json& doc, const Instance& inst) {
  check_header(doc, kSolutionFormat);
  SolutionFile sol;
  sol.fingerprint = get_as<std::string>(member(doc, "instance_fingerprint", "document"),
                                        "instance_fingerprint");

  const Json& strat = member(doc, "strategy", "document");
  sol.requested = get_as<std::string>(member(strat, "requested", "strategy"), "strategy.requested");
  const Json& id = member(strat, "id", "strategy");
  const auto adapted = parse_strategy(
      get_as<std::string>(member(strat, "adapted", "strategy"), "strategy.adapted"));
  sol.strategy = Strategy(adapted.stages(),
                          id.is_null() ? std::nullopt
                                       : std::optional<std::string>(get_as<std::string>(id, "strategy.id")));

  const Json& cfg = member(doc, "config", "document");
  sol.config.time_limit = std::chrono::milliseconds(
      get_as<std::int64_t>(member(cfg, "time_limit_ms", "config"), "config.time_limit_ms"));
  const auto mode = get_as<std::string>(member(cfg, "time_mode", "config"), "config.time_mode");
  if (mode != "global" && mode != "timeboxed") schema_error("config.time_mode is invalid");
  sol.config.time_mode = mode == "global" ? TimeMode::Global : TimeMode::Timeboxed;
  sol.config.seed = get_as<std::uint64_t>(member(cfg, "seed", "config"), "config.seed");
  sol.config.work_rate = get_as<double>(member(cfg, "work_rate", "config"), "config.work_rate");
  sol.config.symmetry_breaking =
      get_as<bool>(member(cfg, "symmetry_breaking", "config"), "config.symmetry_breaking");

  auto& out = sol.outcome;
  out.status = solve_status_from(get_as<std::string>(member(doc, "status", "document"), "status"));

  const Json& teams = member(doc, "teams", "document");
  if (!teams.is_null()) {
    if (!teams.is_array()) schema_error("teams must be an array or null");
    std::unordered_map<std::string, int> index_of;
    for (int a = 0; a < inst.num_students(); ++a) index_of.emplace(inst.student_names()[a], a);
    std::vector<std::vector<StudentIndex>> groups;
    for (const auto& team : teams) {
      if (!team.is_array()) schema_error("each team must be an array of student ids");
      std::vector<StudentIndex> members;
      for (const auto& name : team) {
        const auto s = get_as<std::string>(name, "team member");
        const auto it = index_of.find(s);
        if (it == index_of.end()) {
          throw Error(Errc::StructuralMismatch, fmt::format("unknown student '{}' in teams", s));
        }
        members.push_back(it->second);
      }
      groups.push_back(std::move(members));
    }
    out.assignment = Assignment(std::move(groups));
  }

  const Json& stages = member(doc, "stages", "document");
  if (!stages.is_array()) schema_error("stages must be an array");
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const Json& st = stages[i];
    const std::string where = fmt::format("stages[{}]", i);
    StageResult r;
    const auto obj = parse_strategy(
        get_as<std::string>(member(st, "objective", where), where + ".objective"));
    if (obj.size() != 1) schema_error(where + ".objective must name one objective");
    r.objective = obj.stages().front();
    r.value = optional_value(member(st, "value", where), where + ".value");
    r.stage_value = optional_value(member(st, "stage_value", where), where + ".stage_value");
    r.status = stage_status_from(get_as<std::string>(member(st, "status", where), where + ".status"));
    r.nodes = get_as<std::uint64_t>(member(st, "nodes", where), where + ".nodes");
    r.work = get_as<std::uint64_t>(member(st, "work", where), where + ".work");
    r.work_to_best = get_as<std::uint64_t>(member(st, "work_to_best", where), where + ".work_to_best");
    out.stages.push_back(r);
  }
  out.work = get_as<std::uint64_t>(member(doc, "work", "document"), "work");

  const Json& trace = member(doc, "quality_trace", "document");
  if (!trace.is_array()) schema_error("quality_trace must be an array");
  for (const auto& p : trace) {
    if (!p.is_array() || p.size() != 2) schema_error("quality_trace entries are [work, o1]");
    out.quality_trace.push_back(
        {Seconds(0), get_as<std::uint64_t>(p[0], "quality_trace"), get_as<ObjectiveValue>(p[1], "quality_trace")});
  }

  const auto timing = doc.find("timing");
  if (timing != doc.end()) {
    sol.has_timing = true;
    out.elapsed = Seconds(get_as<double>(member(*timing, "elapsed_s", "timing"), "timing.elapsed_s"));
    const Json& per_stage = member(*timing, "stages", "timing");
    if (!per_stage.is_array() || per_stage.size() != out.stages.size()) {
      schema_error("timing.stages must match stages");
    }
    for (std::size_t i = 0; i < per_stage.size(); ++i) {
      auto& r = out.stages[i];
      r.budget = Seconds(get_as<double>(member(per_stage[i], "budget_s", "timing"), "timing"));
      r.time_total = Seconds(get_as<double>(member(per_stage[i], "time_total_s", "timing"), "timing"));
      r.time_to_best = Seconds(get_as<double>(member(per_stage[i], "time_to_best_s", "timing"), "timing"));
    }
    const Json& elapsed = member(*timing, "trace_elapsed_s", "timing");
    if (!elapsed.is_array() || elapsed.size() != out.quality_trace.size()) {
      schema_error("timing.trace_elapsed_s must match quality_trace");
    }
    for (std::size_t i = 0; i < elapsed.size(); ++i) {
      out.quality_trace[i].elapsed = Seconds(get_as<double>(elapsed[i], "timing"));
    }
  }
  return sol;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, fmt::format("cannot open '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(Errc::IoError, fmt::format("cannot read '{}'", path.string()));
  return ss.str();
}

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, fmt::format("{}: {}", path.string(), e.what()));
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoError, fmt::format("cannot write '{}'", path.string()));
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error(Errc::IoError, fmt::format("cannot write '{}'", path.string()));
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(Errc::IoError, fmt::format("cannot write '{}'", path.string()));
  }
}

Instance load_instance(const std::filesystem::path& path) {
  return instance_from_json(read_json_file(path));
}

void save_instance(const Instance& inst, const std::filesystem::path& path, Encoding encoding) {
  write_text_file(path, render_json(instance_to_json(inst, encoding)));
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;     // inside quotes
  bool was_quoted = false; // field had quotes, keep inner whitespace
  bool any = false;        // row has content
  int line = 1;

  auto end_field = [&] {
    row.push_back(was_quoted ? field : trim(field));
    field.clear();
    was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    const bool blank = !any && row.size() == 1 && row[0].empty();
    if (!blank) rows.push_back(std::move(row));
    row.clear();
    any = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++line;
        field += ch;
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (!trim(field).empty()) csv_error(line, "stray quote");
        field.clear();
        quoted = was_quoted = any = true;
        break;
      case ',':
        any = true;
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        break;
      default:
        if (was_quoted && !std::isspace(static_cast<unsigned char>(ch))) {
          csv_error(line, "text after closing quote");
        }
        if (!was_quoted) field += ch;
        if (!std::isspace(static_cast<unsigned char>(ch))) any = true;
    }
  }
  if (quoted) csv_error(line, "unterminated quote");
  if (any || !field.empty() || !row.empty()) end_row();
  return rows;
}

ExplicitPreferences read_explicit_csv(
    std::string_view text, const std::function<int(const std::string&)>& index_of) {
  const auto rows = parse_csv(text);
  if (rows.empty()) csv_error(1, "missing header from,to,value,kind");
  std::vector<std::string> header;
  for (const auto& h : rows[0]) header.push_back(lower(h));
  if (header != std::vector<std::string>{"from", "to", "value", "kind"}) {
    csv_error(1, "header must be from,to,value,kind");
  }
  ExplicitPreferences prefs;
  std::set<StudentPair> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const int line = static_cast<int>(r) + 1;
    const auto& row = rows[r];
    if (row.size() != 4) csv_error(line, "expected 4 fields");
    const int a = index_of(row[0]);
    const int b = index_of(row[1]);
    if (a < 0) csv_error(line, fmt::format("unknown student '{}'", row[0]));
    if (b < 0) csv_error(line, fmt::format("unknown student '{}'", row[1]));
    if (a == b) csv_error(line, "a student cannot rate themself");
    if (!seen.insert({a, b}).second) csv_error(line, "pair listed twice");
    const auto value = parse_int(row[2]);
    if (!value) csv_error(line, fmt::format("value '{}' is not an integer", row[2]));
    const std::string kind = lower(row[3]);
    if (kind == "weak") {
      if (*value < -kWeakPreferenceMax || *value > kWeakPreferenceMax) {
        csv_error(line, fmt::format("weak value {} outside [-2, 2]", *value));
      }
      prefs.weak[{a, b}] = *value;
    } else if (kind == "strong") {
      if (*value == kStrongPreference) {
        prefs.strong_positive.insert({a, b});
      } else if (*value == -kStrongPreference) {
        prefs.strong_negative.insert({a, b});
      } else {
        csv_error(line, fmt::format("strong value {} must be -4 or 4", *value));
      }
    } else {
      csv_error(line, fmt::format("kind '{}' must be weak or strong", row[3]));
    }
  }
  return prefs;
}

ProfileTable read_profile_csv(std::string_view text) {
  const auto rows = parse_csv(text);
  if (rows.size() < 2) csv_error(1, "expected a header and a kind row");
  const auto& header = rows[0];
  if (header.empty() || lower(header[0]) != "student") {
    csv_error(1, "first column must be 'student'");
  }
  const std::size_t width = header.size();
  const auto& kinds = rows[1];
  if (kinds.size() != width || lower(kinds[0]) != "kind") {
    csv_error(2, "second row must be 'kind' followed by one kind per attribute");
  }
  ProfileTable table;
  for (std::size_t c = 1; c < width; ++c) {
    ProfileAttribute attr;
    attr.name = header[c];
    const std::string k = lower(kinds[c]);
    if (k == "binary") {
      attr.kind = AttributeKind::Binary;
      attr.scale_min = 0;
      attr.scale_max = 1;
    } else if (k.rfind("likert:", 0) == 0) {
      const auto colon = k.find(':', 7);
      const auto lo = colon == std::string::npos ? std::nullopt : parse_int(std::string_view(k).substr(7, colon - 7));
      const auto hi = colon == std::string::npos ? std::nullopt : parse_int(std::string_view(k).substr(colon + 1));
      if (!lo || !hi || *lo >= *hi) csv_error(2, fmt::format("bad likert scale '{}'", kinds[c]));
      attr.kind = AttributeKind::Likert;
      attr.scale_min = *lo;
      attr.scale_max = *hi;
    } else {
      csv_error(2, fmt::format("kind '{}' must be likert:<min>:<max> or binary", kinds[c]));
    }
    table.profiles.attributes.push_back(attr);
  }
  std::set<std::string> seen;
  for (std::size_t r = 2; r < rows.size(); ++r) {
    const int line = static_cast<int>(r) + 1;
    const auto& row = rows[r];
    if (row.size() != width) csv_error(line, fmt::format("expected {} fields", width));
    if (row[0].empty()) csv_error(line, "empty student id");
    if (!seen.insert(row[0]).second) csv_error(line, fmt::format("student '{}' listed twice", row[0]));
    std::vector<int> ratings;
    for (std::size_t c = 1; c < width; ++c) {
      const auto v = parse_int(row[c]);
      if (!v) csv_error(line, fmt::format("rating '{}' is not an integer", row[c]));
      ratings.push_back(*v);
    }
    table.students.push_back(row[0]);
    table.profiles.ratings.push_back(std::move(ratings));
  }
  return table;
}

std::chrono::milliseconds parse_duration(std::string_view text) {
  const std::string s = trim(text);
  std::size_t split = 0;
  while (split < s.size() && (std::isdigit(static_cast<unsigned char>(s[split])) || s[split] == '.')) {
    ++split;
  }
  const std::string number = s.substr(0, split);
  const std::string unit = lower(s.substr(split));
  static const std::map<std::string, double> kScale{
      {"ms", 1.0}, {"s", 1e3}, {"", 1e3}, {"m", 60e3}, {"min", 60e3}, {"h", 3600e3}};
  const auto it = kScale.find(unit);
  double value = 0;
  bool ok = !number.empty() && it != kScale.end() &&
            std::count(number.begin(), number.end(), '.') <= 1 && number != ".";
  if (ok) {
    try {
      value = std::stod(number);
    } catch (const std::exception&) {
      ok = false;
    }
  }
  if (!ok) {
    throw Error(Errc::InvalidArgument,
                fmt::format("bad duration '{}' (use e.g. 250ms, 60s, 15m, 1h)", text));
  }
  return std::chrono::milliseconds(std::llround(value * it->second));
}

}  // namespace teamforge::cli
