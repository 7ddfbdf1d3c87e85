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

#include "teamforge/preferences.hpp"

#include <algorithm>
#include <cmath>

#include "teamforge/error.hpp"

namespace teamforge {

namespace {

std::string pair_str(const StudentPair& p) {
  return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
}

}  // namespace

void ExplicitPreferences::validate(int num_students) const {
  std::set<StudentPair> seen;
  auto check = [&](const StudentPair& p) {
    if (p.first == p.second) {
      throw Error(Errc::InvalidArgument, "self preference " + pair_str(p));
    }
    if (p.first < 0 || p.second < 0 || p.first >= num_students ||
        p.second >= num_students) {
      throw Error(Errc::InvalidArgument, "unknown student in " + pair_str(p));
    }
    if (!seen.insert(p).second) {
      throw Error(Errc::InvalidArgument,
                  pair_str(p) + " has more than one explicit preference");
    }
  };
  for (const auto& [p, value] : weak) {
    check(p);
    if (value < -kWeakPreferenceMax || value > kWeakPreferenceMax) {
      throw Error(Errc::InvalidArgument,
                  "weak preference " + std::to_string(value) + " for " +
                      pair_str(p) + " is outside [-2, 2]");
    }
  }
  for (const auto& p : strong_positive) check(p);
  for (const auto& p : strong_negative) check(p);
}

int likert_to_weak(int rating) {
  if (rating < 1 || rating > 5) {
    throw Error(Errc::InvalidArgument,
                "Likert rating " + std::to_string(rating) + " is outside 1..5");
  }
  return rating - 3;
}

std::vector<ProfileAttribute> ProfileSet::canonical_attributes() {
  return {{"time_management", 1, 5, AttributeKind::Likert},
          {"intended_effort", 1, 3, AttributeKind::Likert},
          {"sync_async", 0, 1, AttributeKind::Binary}};
}

NormalizedProfiles normalize_profiles(const ProfileSet& profiles) {
  const int m = static_cast<int>(profiles.ratings.size());
  const int k = static_cast<int>(profiles.attributes.size());
  if (m < 2) {
    throw Error(Errc::InvalidProfile, "need at least two students");
  }
  for (int a = 0; a < m; ++a) {
    if (static_cast<int>(profiles.ratings[a].size()) != k) {
      throw Error(Errc::InvalidProfile,
                  "student " + std::to_string(a) + " has " +
                      std::to_string(profiles.ratings[a].size()) +
                      " ratings, expected " + std::to_string(k));
    }
  }

  NormalizedProfiles out;
  std::vector<int> kept_columns;
  std::vector<std::pair<int, int>> ranges;
  for (int j = 0; j < k; ++j) {
    const auto& attr = profiles.attributes[j];
    if (attr.kind == AttributeKind::Binary &&
        (attr.scale_min != 0 || attr.scale_max != 1)) {
      throw Error(Errc::InvalidProfile,
                  "binary attribute '" + attr.name + "' must use scale 0..1");
    }
    int lo = profiles.ratings[0][j];
    int hi = lo;
    for (int a = 0; a < m; ++a) {
      const int r = profiles.ratings[a][j];
      if (r < attr.scale_min || r > attr.scale_max) {
        throw Error(Errc::InvalidProfile,
                    "rating " + std::to_string(r) + " of student " +
                        std::to_string(a) + " is outside the scale of '" +
                        attr.name + "'");
      }
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (lo == hi) {
      out.warnings.push_back("attribute '" + attr.name +
                             "' has a single observed rating and is ignored");
      continue;
    }
    kept_columns.push_back(j);
    ranges.emplace_back(lo, hi);
    out.kept.push_back(attr.name);
  }

  out.values = RealMatrix(m, static_cast<int>(kept_columns.size()));
  for (int c = 0; c < static_cast<int>(kept_columns.size()); ++c) {
    const auto [lo, hi] = ranges[c];
    for (int a = 0; a < m; ++a) {
      out.values(a, c) =
          static_cast<double>(profiles.ratings[a][kept_columns[c]] - lo) /
          static_cast<double>(hi - lo);
    }
  }
  return out;
}

SimilarityMatrix profile_similarity(const RealMatrix& normalized) {
  const int m = normalized.rows;
  RealMatrix dist(m, m);
  double max_dist = 0.0;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      double sq = 0.0;
      for (int c = 0; c < normalized.cols; ++c) {
        const double diff = normalized(a, c) - normalized(b, c);
        sq += diff * diff;
      }
      const double d = std::sqrt(sq);
      dist(a, b) = d;
      dist(b, a) = d;
      max_dist = std::max(max_dist, d);
    }
  }

  SimilarityMatrix out;
  out.values = RealMatrix(m, m, 1.0);
  if (max_dist == 0.0) {
    out.warnings.push_back("all profiles are identical; similarity is 1 everywhere");
    return out;
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) out.values(a, b) = 1.0 - dist(a, b) / max_dist;
    }
  }
  return out;
}

PreferenceMatrix bucketize(const RealMatrix& similarity, BucketMap map) {
  if (map.lo > map.hi) {
    throw Error(Errc::InvalidArgument, "bucket interval is empty");
  }
  const int m = similarity.rows;
  const int buckets = map.bucket_count();
  PreferenceMatrix out(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const double sim = std::clamp(similarity(a, b), 0.0, 1.0);
      const int bucket = std::min(buckets - 1, static_cast<int>(std::floor(sim * buckets)));
      out.set(a, b, map.lo + bucket);
    }
  }
  return out;
}

std::string_view to_string(PreferenceSource source) noexcept {
  switch (source) {
    case PreferenceSource::None: return "none";
    case PreferenceSource::Strong: return "strong";
    case PreferenceSource::Weak: return "weak";
    case PreferenceSource::Profile: return "profile";
  }
  return "none";
}

MergedPreferences merge_preferences(const ExplicitPreferences& explicit_prefs,
                                    const std::optional<PreferenceMatrix>& profile,
                                    int num_students, int bound) {
  explicit_prefs.validate(num_students);
  if (profile && profile->size() != num_students) {
    throw Error(Errc::InvalidArgument, "profile matrix has the wrong size");
  }
  const int m = num_students;
  MergedPreferences out{PreferenceMatrix(m),
                        std::vector<PreferenceSource>(static_cast<std::size_t>(m) * m,
                                                      PreferenceSource::None)};
  auto put = [&](StudentIndex a, StudentIndex b, int value, PreferenceSource src) {
    if (std::abs(value) > bound) {
      throw Error(Errc::PreferenceExceedsBound,
                  "value " + std::to_string(value) + " for (" +
                      std::to_string(a) + ", " + std::to_string(b) +
                      ") exceeds d = " + std::to_string(bound));
    }
    out.matrix.set(a, b, value);
    out.source[a * m + b] = value == 0 ? PreferenceSource::None : src;
  };
  if (profile) {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a != b) put(a, b, (*profile)(a, b), PreferenceSource::Profile);
      }
    }
  }
  for (const auto& [p, value] : explicit_prefs.weak) {
    put(p.first, p.second, value, PreferenceSource::Weak);
  }
  for (const auto& p : explicit_prefs.strong_positive) {
    put(p.first, p.second, kStrongPreference, PreferenceSource::Strong);
  }
  for (const auto& p : explicit_prefs.strong_negative) {
    put(p.first, p.second, -kStrongPreference, PreferenceSource::Strong);
  }
  return out;
}

MergedPreferences build_preferences(const ExplicitPreferences& explicit_prefs,
                                    const std::optional<ProfileSet>& profiles,
                                    int num_students, int bound,
                                    std::vector<std::string>* warnings) {
  std::optional<PreferenceMatrix> profile_prefs;
  if (profiles) {
    if (static_cast<int>(profiles->ratings.size()) != num_students) {
      throw Error(Errc::InvalidProfile, "profile count does not match students");
    }
    auto normalized = normalize_profiles(*profiles);
    auto similarity = profile_similarity(normalized.values);
    if (warnings) {
      warnings->insert(warnings->end(), normalized.warnings.begin(),
                       normalized.warnings.end());
      warnings->insert(warnings->end(), similarity.warnings.begin(),
                       similarity.warnings.end());
    }
    const auto map = explicit_prefs.weak.empty() ? BucketMap::wide() : BucketMap::narrow();
    profile_prefs = bucketize(similarity.values, map);
  }
  return merge_preferences(explicit_prefs, profile_prefs, num_students, bound);
}

}  // namespace teamforge
