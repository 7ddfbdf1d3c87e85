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

// Building the preference matrix from what students tell us.
//
// Explicit preferences come in two strengths. Weak ones are team-dating
// ratings remapped to [-2, 2]; strong ones are explicit requests (+4) or
// rejections (-4). Where no explicit preference exists, profile similarity
// can fill in: attributes are rescaled to [0, 1] over the observed ratings,
// Euclidean distances are turned into similarities in [0, 1], and the
// similarity range is cut into equal buckets, one per preference value.

#ifndef TEAMFORGE_PREFERENCES_HPP
#define TEAMFORGE_PREFERENCES_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "teamforge/instance.hpp"

namespace teamforge {

inline constexpr int kStrongPreference = 4;
inline constexpr int kWeakPreferenceMax = 2;

using StudentPair = std::pair<StudentIndex, StudentIndex>;

struct ExplicitPreferences {
  std::map<StudentPair, int> weak;        // values in [-2, 2]
  std::set<StudentPair> strong_positive;  // +4
  std::set<StudentPair> strong_negative;  // -4

  bool empty() const noexcept {
    return weak.empty() && strong_positive.empty() && strong_negative.empty();
  }
  /// Throws InvalidArgument on self pairs, out-of-range students or weak
  /// values, and pairs listed in more than one collection.
  void validate(int num_students) const;
};

/// Team-dating Likert rating 1..5 to a weak preference in [-2, 2].
int likert_to_weak(int rating);

enum class AttributeKind { Likert, Binary };

struct ProfileAttribute {
  std::string name;
  int scale_min = 1;
  int scale_max = 5;
  AttributeKind kind = AttributeKind::Likert;
};

/// Questionnaire answers, one row per student.
struct ProfileSet {
  std::vector<ProfileAttribute> attributes;
  std::vector<std::vector<int>> ratings;

  /// Time management (1-5), intended effort (1-3), sync/async (0/1).
  static std::vector<ProfileAttribute> canonical_attributes();
};

/// Row-major real matrix.
struct RealMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  RealMatrix() = default;
  RealMatrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}
  double operator()(int r, int c) const noexcept { return data[r * cols + c]; }
  double& operator()(int r, int c) noexcept { return data[r * cols + c]; }
};

struct NormalizedProfiles {
  RealMatrix values;                    // m x (kept attributes), in [0, 1]
  std::vector<std::string> kept;        // attribute names, column order
  std::vector<std::string> warnings;
};

/// Per-attribute min-max rescaling over the ratings actually present.
/// Attributes where every student answered the same are dropped (with a
/// warning) since they carry no pairwise information.
NormalizedProfiles normalize_profiles(const ProfileSet& profiles);

struct SimilarityMatrix {
  RealMatrix values;  // m x m, symmetric, unit diagonal
  std::vector<std::string> warnings;
};

/// sim(a, b) = 1 - dist(a, b) / max_dist over Euclidean distances. If every
/// profile is identical all similarities are 1.
SimilarityMatrix profile_similarity(const RealMatrix& normalized);

/// Target preference interval; one equal-width similarity bucket per integer
/// value in [lo, hi].
struct BucketMap {
  int lo = -2;
  int hi = 2;

  int bucket_count() const noexcept { return hi - lo + 1; }
  static BucketMap wide() { return {-2, 2}; }
  static BucketMap narrow() { return {-1, 1}; }
};

/// Bucket i (ascending similarity, half-open except the last) maps to lo + i.
/// The diagonal is forced to 0.
PreferenceMatrix bucketize(const RealMatrix& similarity, BucketMap map);

enum class PreferenceSource { None, Strong, Weak, Profile };

std::string_view to_string(PreferenceSource source) noexcept;

struct MergedPreferences {
  PreferenceMatrix matrix;
  std::vector<PreferenceSource> source;  // row-major, one per cell

  PreferenceSource source_of(StudentIndex a, StudentIndex b) const noexcept {
    return source[a * matrix.size() + b];
  }
};

/// Strong beats weak beats profile beats 0. Throws PreferenceExceedsBound
/// if any merged value lies outside [-bound, bound].
MergedPreferences merge_preferences(const ExplicitPreferences& explicit_prefs,
                                    const std::optional<PreferenceMatrix>& profile,
                                    int num_students, int bound);

/// The whole pipeline. Profiles map to [-1, 1] when weak preferences exist
/// and to [-2, 2] otherwise. Warnings from the profile steps are appended.
MergedPreferences build_preferences(const ExplicitPreferences& explicit_prefs,
                                    const std::optional<ProfileSet>& profiles,
                                    int num_students, int bound,
                                    std::vector<std::string>* warnings = nullptr);

}  // namespace teamforge

#endif  // TEAMFORGE_PREFERENCES_HPP
