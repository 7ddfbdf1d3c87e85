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

#ifndef TEAMFORGE_ERROR_HPP
#define TEAMFORGE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace teamforge {

/// Every failure the library reports is an Error carrying one of these codes.
enum class Errc {
  InvalidArgument,
  // Instance validation.
  SizeBoundsInfeasible,
  CoverageOutOfRange,
  PreferenceOutOfRange,
  NonZeroDiagonal,
  SkillNotDeclared,
  // Assignments.
  StructuralMismatch,
  // Preference pipeline.
  InvalidProfile,
  PreferenceExceedsBound,
  // Strategies.
  ParseError,
  UnknownObjective,
  DuplicateStage,
  EmptyAfterAdaptation,
  // Solver / verification.
  CertificationFailure,
  InstanceTooLarge,
  AssumptionViolated,
  HistogramOverflow,
  UnknownPreset,
  // File formats.
  SchemaError,
  FingerprintMismatch,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace teamforge

#endif  // TEAMFORGE_ERROR_HPP
