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

#include "teamforge/error.hpp"

namespace teamforge {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::SizeBoundsInfeasible: return "SizeBoundsInfeasible";
    case Errc::CoverageOutOfRange: return "CoverageOutOfRange";
    case Errc::PreferenceOutOfRange: return "PreferenceOutOfRange";
    case Errc::NonZeroDiagonal: return "NonZeroDiagonal";
    case Errc::SkillNotDeclared: return "SkillNotDeclared";
    case Errc::StructuralMismatch: return "StructuralMismatch";
    case Errc::InvalidProfile: return "InvalidProfile";
    case Errc::PreferenceExceedsBound: return "PreferenceExceedsBound";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownObjective: return "UnknownObjective";
    case Errc::DuplicateStage: return "DuplicateStage";
    case Errc::EmptyAfterAdaptation: return "EmptyAfterAdaptation";
    case Errc::CertificationFailure: return "CertificationFailure";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::AssumptionViolated: return "AssumptionViolated";
    case Errc::HistogramOverflow: return "HistogramOverflow";
    case Errc::UnknownPreset: return "UnknownPreset";
    case Errc::SchemaError: return "SchemaError";
    case Errc::FingerprintMismatch: return "FingerprintMismatch";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace teamforge
