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

// On-disk formats: instance and solution files (versioned JSON), the
// explicit-preference and profile CSV inputs, and duration strings.

#ifndef TEAMFORGE_CLI_FORMATS_HPP
#define TEAMFORGE_CLI_FORMATS_HPP

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "teamforge/instance.hpp"
#include "teamforge/preferences.hpp"
#include "teamforge/solver.hpp"
#include "teamforge/strategy.hpp"

namespace teamforge::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

enum class Encoding { Auto, Sparse, Dense };

/// Sparse unless more than a quarter of the off-diagonal cells are non-zero.
Encoding resolve_encoding(Encoding requested, const PreferenceMatrix& prefs);

Json instance_to_json(const Instance& inst, Encoding encoding = Encoding::Auto);
/// Throws SchemaError on structural problems, then the usual validation errors.
Instance instance_from_json(const Json& doc);

/// Pretty form used for every file we write: objects one key per line,
/// arrays of scalars on one line, arrays of arrays one row per line.
std::string render_json(const Json& doc);

/// "fnv1a64:<16 hex digits>" over the canonical dense serialization, so the
/// same course hashes the same whichever encoding its file used.
std::string fingerprint(const Instance& inst);

struct SolutionFile {
  std::string fingerprint;
  std::string requested;  // strategy as given on the command line
  Strategy strategy{std::vector<Objective>{Objective::o1()}};  // adapted
  SolveConfig config;
  SolveOutcome outcome;
  bool has_timing = false;
};

/// Wall-clock fields are only written when `with_timing`; everything else
/// is reproducible for seed 0 under the work budget.
Json solution_to_json(const Instance& inst, const SolutionFile& sol, bool with_timing);
/// Team members are resolved by name against `inst`.
SolutionFile solution_from_json(const Json& doc, const Instance& inst);

Json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
/// Writes via a temporary file and rename.
void write_text_file(const std::filesystem::path& path, std::string_view text);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& inst, const std::filesystem::path& path,
                   Encoding encoding = Encoding::Auto);

/// Minimal RFC 4180 reader: comma separated, optional double quotes,
/// surrounding whitespace trimmed, blank lines skipped.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Header `from,to,value,kind`; kind weak (value in [-2, 2]) or strong
/// (value -4 or 4). Students are resolved through `index_of`.
ExplicitPreferences read_explicit_csv(
    std::string_view text, const std::function<int(const std::string&)>& index_of);

struct ProfileTable {
  std::vector<std::string> students;
  ProfileSet profiles;
};

/// Header `student,<attr>,...`, then a declaration row `kind,<k>,...` with
/// k = likert:<min>:<max> or binary, then one row per student.
ProfileTable read_profile_csv(std::string_view text);

/// "250ms", "60s", "15m", "1h", "1.5s". Throws InvalidArgument.
std::chrono::milliseconds parse_duration(std::string_view text);

}  // namespace teamforge::cli

#endif  // TEAMFORGE_CLI_FORMATS_HPP
