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

#include "teamforge/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <unordered_map>

#include <fmt/core.h>
#include <fmt/ostream.h>
#include <spdlog/spdlog.h>

#include "teamforge/objectives.hpp"
#include "teamforge/preferences.hpp"
#include "teamforge/strategy.hpp"
#include "teamforge/verify.hpp"

namespace teamforge::cli {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<int> kTableColumns{4, 2, 1, -1, -2, -4};

std::string value_or_dash(const std::optional<ObjectiveValue>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

/// Adapts and explains what was dropped, or why nothing is left.
Strategy adapt_explained(const Strategy& requested, const Instance& inst) {
  const auto present = inst.preferences().off_diagonal_values();
  std::vector<std::string> values;
  for (int v : present) values.push_back(std::to_string(v));
  try {
    Strategy adapted = adapt_to_instance(requested, inst);
    for (const auto& obj : requested.stages()) {
      const auto& kept = adapted.stages();
      if (std::find(kept.begin(), kept.end(), obj) == kept.end()) {
        spdlog::warn("dropping stage {}: preference value {} never occurs in this instance",
                     obj.to_string(), *obj.p0());
      }
    }
    return adapted;
  } catch (const Error& e) {
    if (e.code() != Errc::EmptyAfterAdaptation) throw;
    throw Error(Errc::EmptyAfterAdaptation,
                fmt::format("{} only counts preference values that never occur in this "
                            "instance (values present: {}), so no stage is left to optimize; "
                            "add O1 or O2 to the strategy or pick another one",
                            requested.render(), values.empty() ? "none" : join(values, ", ")));
  }
}

path sibling_with_suffix(const path& p, const std::string& suffix) {
  path out = p;
  out.replace_filename(p.stem().string() + suffix);
  return out;
}

Json counts_json(const std::map<int, ObjectiveValue>& counts) {
  Json j = Json::object();
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    j[std::to_string(it->first)] = it->second;
  }
  return j;
}

std::vector<int> columns_for(const Instance& inst) {
  std::set<int> cols(kTableColumns.begin(), kTableColumns.end());
  for (int v : inst.preferences().off_diagonal_values()) {
    if (v != 0) cols.insert(v);
  }
  return {cols.rbegin(), cols.rend()};
}

}  // namespace

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::FingerprintMismatch:
    case Errc::CertificationFailure:
      return kExitValidationFailed;
    default:
      return kExitInputError;
  }
}

std::map<int, ObjectiveValue> realized_counts(const Instance& inst, const Assignment& asg,
                                              const std::vector<int>& columns) {
  std::map<int, ObjectiveValue> counts;
  for (int v : columns) counts[v] = 0;
  for (const auto& [a, b] : realized_pairs(asg).pairs) {
    const auto it = counts.find(inst.pref(a, b));
    if (it != counts.end()) ++it->second;
  }
  return counts;
}

// ---------------------------------------------------------------- solve

int cmd_solve(const SolveOptions& opts, std::ostream& out) {
  opts.config.validate();
  const Instance inst = load_instance(opts.instance);
  spdlog::info("loaded {}: m={} n={} k=[{},{}] #S={} c={}", opts.instance.string(),
               inst.num_students(), inst.num_teams(), inst.min_team_size(),
               inst.max_team_size(), inst.num_skills(), inst.min_coverage());
  const Strategy strat = adapt_explained(resolve_strategy(opts.strategy), inst);
  spdlog::info("strategy {}", strat.render());

  SolutionFile sol;
  sol.fingerprint = fingerprint(inst);
  sol.requested = opts.strategy;
  sol.strategy = strat;
  sol.config = opts.config;
  sol.config.hooks = nullptr;
  sol.outcome = solve(inst, strat, opts.config);
  certify(inst, strat, sol.outcome);

  const auto& res = sol.outcome;
  fmt::print(out, "{}\n", strat.render());
  fmt::print(out, "{:<6} {:<12} {:<10} {:>12} {:>12} {:>14} {:>9} {:>9}\n", "stage",
             "objective", "status", "value", "stage value", "work", "time", "to best");
  for (std::size_t i = 0; i < res.stages.size(); ++i) {
    const auto& st = res.stages[i];
    fmt::print(out, "{:<6} {:<12} {:<10} {:>12} {:>12} {:>14} {:>8.2f}s {:>8.2f}s\n", i + 1,
               st.objective.to_string(), to_string(st.status), value_or_dash(st.value),
               value_or_dash(st.stage_value), st.work, st.time_total.count(),
               st.time_to_best.count());
  }
  fmt::print(out, "status: {}", to_string(res.status));
  if (res.assignment) {
    fmt::print(out, "  O1: {}  O2: {}", eval_o1(inst, *res.assignment),
               eval_o2(inst, *res.assignment));
  }
  fmt::print(out, "  elapsed: {:.2f}s\n", res.elapsed.count());

  if (!opts.out.empty()) {
    write_text_file(opts.out, render_json(solution_to_json(inst, sol, opts.record_timing)));
    spdlog::info("wrote {}", opts.out.string());
  }
  switch (res.status) {
    case SolveStatus::Optimal:
    case SolveStatus::Feasible:
      return kExitOk;
    case SolveStatus::Infeasible:
      return kExitInfeasible;
    case SolveStatus::Unknown:
      break;
  }
  return kExitUnknown;
}

// ------------------------------------------------------------- validate

int cmd_validate(const ValidateOptions& opts, std::ostream& out) {
  const Instance inst = load_instance(opts.instance);
  const Json doc = read_json_file(opts.solution);
  bool ok = true;
  auto line = [&](bool pass, const std::string& what) {
    fmt::print(out, "{} {}\n", pass ? "PASS" : "FAIL", what);
    ok = ok && pass;
  };

  const std::string expected = fingerprint(inst);
  const auto recorded = doc.is_object() && doc.contains("instance_fingerprint") &&
                                doc["instance_fingerprint"].is_string()
                            ? doc["instance_fingerprint"].get<std::string>()
                            : std::string();
  if (recorded != expected) {
    line(false, fmt::format("fingerprint: solution is for {}, instance is {}",
                            recorded.empty() ? "(none)" : recorded, expected));
    throw Error(Errc::FingerprintMismatch,
                fmt::format("{} was not produced for {}", opts.solution.string(),
                            opts.instance.string()));
  }
  line(true, "fingerprint " + expected);

  SolutionFile sol;
  try {
    sol = solution_from_json(doc, inst);
  } catch (const Error& e) {
    line(false, std::string("solution file: ") + e.what());
    return kExitValidationFailed;
  }
  if (sol.outcome.assignment &&
      sol.outcome.assignment->num_teams() != inst.num_teams()) {
    line(false, fmt::format("structure: {} teams listed, instance has {}",
                            sol.outcome.assignment->num_teams(), inst.num_teams()));
  }
  const auto report = audit(inst, sol.strategy, sol.outcome);
  for (const auto& p : report.passed) line(true, p);
  for (const auto& f : report.failures) line(false, f);
  fmt::print(out, "{}\n", ok ? "all checks passed" : "validation failed");
  return ok ? kExitOk : kExitValidationFailed;
}

// ---------------------------------------------------------- build-prefs

int cmd_build_prefs(const BuildPrefsOptions& opts, std::ostream& out) {
  if (!opts.explicit_csv && !opts.profiles_csv) {
    throw Error(Errc::InvalidArgument, "give --explicit and/or --profiles");
  }
  std::optional<Instance> base;
  std::vector<std::string> students;
  std::unordered_map<std::string, int> index_of;
  const bool fixed_roster = opts.instance.has_value();
  if (fixed_roster) {
    base = load_instance(*opts.instance);
    students = base->student_names();
    for (int a = 0; a < static_cast<int>(students.size()); ++a) index_of[students[a]] = a;
  }
  auto lookup = [&](const std::string& name) -> int {
    const auto it = index_of.find(name);
    if (it != index_of.end()) return it->second;
    if (fixed_roster) return -1;
    students.push_back(name);
    return index_of[name] = static_cast<int>(students.size()) - 1;
  };

  std::optional<ProfileTable> table;
  if (opts.profiles_csv) {
    table = read_profile_csv(read_text_file(*opts.profiles_csv));
    for (const auto& s : table->students) {
      if (lookup(s) < 0) {
        throw Error(Errc::SchemaError, fmt::format("{}: unknown student '{}'",
                                                   opts.profiles_csv->string(), s));
      }
    }
  }
  ExplicitPreferences explicit_prefs;
  if (opts.explicit_csv) {
    try {
      explicit_prefs = read_explicit_csv(read_text_file(*opts.explicit_csv), lookup);
    } catch (const Error&) {
      spdlog::error("while reading {}", opts.explicit_csv->string());
      throw;
    }
  }

  const int m = static_cast<int>(students.size());
  std::optional<ProfileSet> profiles;
  if (table) {
    // Rows in roster order; students without a profile row make the set invalid.
    if (static_cast<int>(table->students.size()) != m) {
      throw Error(Errc::InvalidProfile,
                  fmt::format("profiles cover {} of {} students", table->students.size(), m));
    }
    ProfileSet ordered;
    ordered.attributes = table->profiles.attributes;
    ordered.ratings.resize(m);
    for (std::size_t r = 0; r < table->students.size(); ++r) {
      ordered.ratings[index_of.at(table->students[r])] = table->profiles.ratings[r];
    }
    profiles = std::move(ordered);
  }

  const int bound = base ? base->preference_bound() : opts.bound;
  std::vector<std::string> warnings;
  const MergedPreferences merged = build_preferences(explicit_prefs, profiles, m, bound, &warnings);
  for (const auto& w : warnings) spdlog::warn("{}", w);

  Json doc;
  if (base) {
    InstanceSpec spec = base->to_spec();
    spec.preferences = merged.matrix;
    doc = instance_to_json(validate_instance(std::move(spec)));
  } else {
    doc["format"] = "teamforge-preferences";
    doc["version"] = kFormatVersion;
    doc["bound"] = bound;
    doc["students"] = students;
    Json entries = Json::array();
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (merged.matrix(a, b) != 0) {
          entries.push_back(Json::array({students[a], students[b], merged.matrix(a, b)}));
        }
      }
    }
    doc["preferences"] = Json{{"encoding", "sparse"}, {"entries", std::move(entries)}};
  }
  doc["warnings"] = warnings;
  if (base) doc.erase("warnings");

  Json prov;
  prov["format"] = "teamforge-provenance";
  prov["version"] = kFormatVersion;
  Json cells = Json::array();
  std::map<PreferenceSource, int> tally;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (merged.matrix(a, b) == 0) continue;
      ++tally[merged.source_of(a, b)];
      cells.push_back(Json::array({students[a], students[b], merged.matrix(a, b),
                                   std::string(to_string(merged.source_of(a, b)))}));
    }
  }
  prov["entries"] = std::move(cells);

  const path prov_path =
      opts.provenance.empty() ? sibling_with_suffix(opts.out, ".provenance.json") : opts.provenance;
  write_text_file(opts.out, render_json(doc));
  write_text_file(prov_path, render_json(prov));
  fmt::print(out, "{} students, {} non-zero cells (strong {}, weak {}, profile {})\n", m,
             tally[PreferenceSource::Strong] + tally[PreferenceSource::Weak] +
                 tally[PreferenceSource::Profile],
             tally[PreferenceSource::Strong], tally[PreferenceSource::Weak],
             tally[PreferenceSource::Profile]);
  fmt::print(out, "wrote {} and {}\n", opts.out.string(), prov_path.string());
  return kExitOk;
}

// ------------------------------------------------------------- generate

int cmd_generate(const GenerateOptions& opts, std::ostream& out) {
  const auto& preset = verify::find_preset(opts.preset);
  Instance inst = verify::generate(preset, opts.seed);
  if (opts.ensure_feasible) {
    bool proven = false;
    inst = verify::generate_feasible(preset, opts.seed, 20, std::chrono::milliseconds(2000), &proven);
    if (!proven) spdlog::warn("{}: no feasible draw confirmed within the retry budget", preset.name);
  }
  const std::string text = render_json(instance_to_json(inst, opts.encoding));
  if (opts.out.empty()) {
    out << text;
  } else {
    write_text_file(opts.out, text);
    fmt::print(out, "{}: m={} n={} k=[{},{}] #S={} c={} -> {}\n", preset.name,
               inst.num_students(), inst.num_teams(), inst.min_team_size(),
               inst.max_team_size(), inst.num_skills(), inst.min_coverage(), opts.out.string());
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bench

int BenchInstance::beating_baseline() const {
  int count = 0;
  for (const auto& c : cells) {
    if (c.o1 && baseline.o1 && *c.o1 > *baseline.o1) ++count;
  }
  return count;
}

int BenchInstance::solved_cells() const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(),
                                        [](const BenchCell& c) { return c.o1.has_value(); }));
}

BenchReport run_bench(const BenchOptions& opts, std::ostream* progress) {
  opts.config.validate();
  const auto start = Clock::now();

  std::vector<std::pair<std::string, Instance>> instances;
  std::vector<std::string> preset_names = opts.presets;
  if (preset_names.size() == 1 && preset_names[0] == "all") {
    preset_names.clear();
    for (const auto& p : verify::presets()) preset_names.push_back(p.name);
  }
  for (const auto& name : preset_names) {
    const auto& preset = verify::find_preset(name);
    instances.emplace_back(name, opts.ensure_feasible
                                     ? verify::generate_feasible(preset, opts.instance_seed)
                                     : verify::generate(preset, opts.instance_seed));
  }
  if (opts.instance_dir) {
    std::vector<path> files;
    for (const auto& entry : std::filesystem::directory_iterator(*opts.instance_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      const Json doc = read_json_file(f);
      if (!doc.is_object() || doc.value("format", "") != "teamforge-instance") continue;
      instances.emplace_back(f.stem().string(), instance_from_json(doc));
    }
  }

  std::vector<std::string> strategies = opts.strategies;
  if (strategies.size() == 1 && strategies[0] == "all") {
    strategies.clear();
    for (const auto& [id, s] : catalog()) strategies.push_back(id);
  }

  std::vector<std::pair<std::string, Json>> manual_docs;
  for (const auto& m : opts.manual) {
    const Json doc = read_json_file(m);
    manual_docs.emplace_back(doc.value("instance_fingerprint", ""), doc);
  }

  BenchReport report;
  for (const auto& [name, inst] : instances) {
    BenchInstance bi;
    bi.name = name;
    bi.fingerprint = fingerprint(inst);
    bi.m = inst.num_students();
    bi.n = inst.num_teams();
    bi.k_min = inst.min_team_size();
    bi.k_max = inst.max_team_size();
    bi.num_skills = inst.num_skills();
    bi.c = inst.min_coverage();
    bi.columns = columns_for(inst);

    if (const auto base = verify::random_feasible_assignment(inst, opts.baseline_seed)) {
      bi.baseline.o1 = eval_o1(inst, *base);
      bi.baseline.counts = realized_counts(inst, *base, bi.columns);
    }
    for (const auto& [fp, doc] : manual_docs) {
      if (fp != bi.fingerprint) continue;
      const SolutionFile sol = solution_from_json(doc, inst);
      BenchReference ref;
      if (sol.outcome.assignment) {
        ref.o1 = eval_o1(inst, *sol.outcome.assignment);
        ref.counts = realized_counts(inst, *sol.outcome.assignment, bi.columns);
      }
      bi.manual = ref;
    }

    for (const auto& s : strategies) {
      BenchCell cell;
      cell.strategy = s;
      try {
        const Strategy strat = adapt_explained(resolve_strategy(s), inst);
        cell.adapted = strat.render();
        SolveConfig cfg = opts.config;
        if (opts.per_objective) cfg.time_limit *= static_cast<int>(strat.size());
        const SolveOutcome res = solve(inst, strat, cfg);
        cell.status = res.status;
        for (const auto& st : res.stages) {
          cell.stage_statuses.push_back(st.status);
          cell.stage_values.push_back(st.value);
        }
        cell.runtime_s = res.elapsed.count();
        cell.work = res.work;
        cell.trace = res.quality_trace;
        if (!res.quality_trace.empty()) cell.time_to_best_s = res.quality_trace.back().elapsed.count();
        if (res.assignment) {
          cell.o1 = eval_o1(inst, *res.assignment);
          cell.counts = realized_counts(inst, *res.assignment, bi.columns);
        }
        const auto audit_report = audit(inst, strat, res);
        cell.certified = audit_report.ok;
        if (!audit_report.ok) cell.error = join(audit_report.failures, "; ");
      } catch (const Error& e) {
        cell.error = e.what();
        spdlog::error("{} / {}: {}", name, s, e.what());
      }
      if (progress) {
        fmt::print(*progress, "{:<6} {:<6} {:<10} O1={:<6} {:>7.2f}s{}\n", name, s,
                   cell.error.empty() ? std::string(to_string(cell.status)) : "error",
                   value_or_dash(cell.o1), cell.runtime_s, cell.certified ? "" : " (uncertified)");
        progress->flush();
      }
      bi.cells.push_back(std::move(cell));
    }
    report.instances.push_back(std::move(bi));
  }
  report.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

Json BenchReport::to_json(const BenchOptions& opts) const {
  Json doc;
  doc["format"] = "teamforge-bench";
  doc["version"] = kFormatVersion;
  doc["config"] = Json{{"time_limit_ms", opts.config.time_limit.count()},
                       {"time_mode", std::string(to_string(opts.config.time_mode))},
                       {"per_objective", opts.per_objective},
                       {"seed", opts.config.seed},
                       {"work_rate", opts.config.work_rate},
                       {"instance_seed", opts.instance_seed},
                       {"baseline_seed", opts.baseline_seed}};
  doc["elapsed_s"] = elapsed_s;
  int weakest = -1;
  Json list = Json::array();
  for (const auto& bi : instances) {
    Json ji;
    ji["name"] = bi.name;
    ji["fingerprint"] = bi.fingerprint;
    ji["m"] = bi.m;
    ji["n"] = bi.n;
    ji["k_min"] = bi.k_min;
    ji["k_max"] = bi.k_max;
    ji["skills"] = bi.num_skills;
    ji["c"] = bi.c;
    ji["columns"] = bi.columns;
    ji["baseline"] = Json{{"o1", bi.baseline.o1 ? Json(*bi.baseline.o1) : Json(nullptr)},
                          {"counts", counts_json(bi.baseline.counts)}};
    if (bi.manual) {
      ji["manual"] = Json{{"o1", bi.manual->o1 ? Json(*bi.manual->o1) : Json(nullptr)},
                          {"counts", counts_json(bi.manual->counts)}};
    }
    ji["solved_cells"] = bi.solved_cells();
    ji["strategies_beating_baseline"] = bi.beating_baseline();
    if (bi.solved_cells() > 0 && (weakest < 0 || bi.beating_baseline() < weakest)) {
      weakest = bi.beating_baseline();
    }
    Json cells = Json::array();
    for (const auto& c : bi.cells) {
      Json jc;
      jc["strategy"] = c.strategy;
      jc["adapted"] = c.adapted;
      jc["status"] = c.error.empty() ? std::string(to_string(c.status)) : "error";
      std::vector<std::string> statuses;
      for (auto s : c.stage_statuses) statuses.emplace_back(to_string(s));
      jc["stage_statuses"] = statuses;
      Json values = Json::array();
      for (const auto& v : c.stage_values) values.push_back(v ? Json(*v) : Json(nullptr));
      jc["stage_values"] = std::move(values);
      jc["o1"] = c.o1 ? Json(*c.o1) : Json(nullptr);
      jc["counts"] = counts_json(c.counts);
      jc["runtime_s"] = c.runtime_s;
      jc["time_to_best_s"] = c.time_to_best_s;
      jc["work"] = c.work;
      jc["certified"] = c.certified;
      if (!c.error.empty()) jc["error"] = c.error;
      Json trace = Json::array();
      for (const auto& p : c.trace) trace.push_back(Json::array({p.elapsed.count(), p.o1}));
      jc["trace"] = std::move(trace);
      cells.push_back(std::move(jc));
    }
    ji["cells"] = std::move(cells);
    list.push_back(std::move(ji));
  }
  doc["instances"] = std::move(list);
  doc["summary"] = Json{{"instances", instances.size()},
                        {"min_strategies_beating_baseline", weakest < 0 ? Json(nullptr) : Json(weakest)}};
  return doc;
}

std::string BenchReport::to_table() const {
  std::string out;
  for (const auto& bi : instances) {
    out += fmt::format("{}  m={} n={} k=[{},{}] #S={} c={}  {}/{} strategies beat the baseline\n",
                       bi.name, bi.m, bi.n, bi.k_min, bi.k_max, bi.num_skills, bi.c,
                       bi.beating_baseline(), bi.solved_cells());
    out += fmt::format("  {:<10} {:<10} {:<28}", "strategy", "status", "stages");
    for (int v : bi.columns) out += fmt::format(" {:>5}", fmt::format("{:+d}", v));
    out += fmt::format(" {:>7} {:>9} {:>9}\n", "O1", "runtime", "to best");
    auto row = [&](const std::string& label, const std::string& status,
                   const std::string& stages, const BenchReference& ref, const std::string& times) {
      out += fmt::format("  {:<10} {:<10} {:<28}", label, status, stages);
      for (int v : bi.columns) {
        const auto it = ref.counts.find(v);
        out += fmt::format(" {:>5}", it == ref.counts.end() ? std::string("-") : std::to_string(it->second));
      }
      out += fmt::format(" {:>7} {}\n", value_or_dash(ref.o1), times);
    };
    row("baseline", "random", "-", bi.baseline, "");
    if (bi.manual) row("manual", "given", "-", *bi.manual, "");
    for (const auto& c : bi.cells) {
      std::vector<std::string> stages;
      for (auto s : c.stage_statuses) stages.emplace_back(s == StageStatus::Optimal ? "opt"
                                                          : s == StageStatus::Feasible ? "feas"
                                                                                       : "skip");
      const std::string status = c.error.empty() ? std::string(to_string(c.status)) : "error";
      row(c.strategy, status, join(stages, ","), BenchReference{c.o1, c.counts},
          fmt::format("{:>8.2f}s {:>8.2f}s", c.runtime_s, c.time_to_best_s));
    }
    out += '\n';
  }
  out += fmt::format("total elapsed {:.1f}s\n", elapsed_s);
  return out;
}

std::string BenchReport::trace_csv() const {
  std::string out = "instance,strategy,elapsed_s,work,o1\n";
  for (const auto& bi : instances) {
    for (const auto& c : bi.cells) {
      for (const auto& p : c.trace) {
        out += fmt::format("{},{},{:.6f},{},{}\n", bi.name, c.strategy, p.elapsed.count(), p.work, p.o1);
      }
    }
  }
  return out;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out) {
  const BenchReport report = run_bench(opts, &out);
  const std::string table = report.to_table();
  if (!opts.out.empty()) write_text_file(opts.out, render_json(report.to_json(opts)));
  if (!opts.table.empty()) write_text_file(opts.table, table);
  if (!opts.trace.empty()) write_text_file(opts.trace, report.trace_csv());
  out << '\n' << table;
  // Cells that fail for input reasons are reported and skipped; a solved
  // cell that does not certify is a real failure.
  for (const auto& bi : report.instances) {
    for (const auto& c : bi.cells) {
      if (c.o1 && !c.certified) return kExitValidationFailed;
    }
  }
  return kExitOk;
}

}  // namespace teamforge::cli
