// Copyright 2026 The bicat-euler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bicat_euler/error.hpp"

#include <utility>

namespace bicat_euler {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexMismatch: return "IndexMismatch";
    case ErrorCode::kInvalidCategory: return "InvalidCategory";
    case ErrorCode::kInvalidFunctor: return "InvalidFunctor";
    case ErrorCode::kInvalidNatTransformation: return "InvalidNatTransformation";
    case ErrorCode::kInvalidBicategory: return "InvalidBicategory";
    case ErrorCode::kInvalidLaxFunctor: return "InvalidLaxFunctor";
    case ErrorCode::kNotAcyclic: return "NotAcyclic";
    case ErrorCode::kMorphismNotInCategory: return "MorphismNotInCategory";
    case ErrorCode::kNotFibered: return "NotFibered";
    case ErrorCode::kNonUniqueLift: return "NonUniqueLift";
    case ErrorCode::kObjectNotInBase: return "ObjectNotInBase";
    case ErrorCode::kIncoherentData: return "IncoherentData";
    case ErrorCode::kMissingEulerCharacteristic:
      return "MissingEulerCharacteristic";
    case ErrorCode::kNotBiFibered: return "NotBiFibered";
    case ErrorCode::kHomWithoutEuler: return "HomWithoutEuler";
    case ErrorCode::kMissingCompositionData: return "MissingCompositionData";
    case ErrorCode::kNotPseudogroupoid: return "NotPseudogroupoid";
    case ErrorCode::kNotBiequivalence: return "NotBiequivalence";
    case ErrorCode::kIllTypedComponent: return "IllTypedComponent";
    case ErrorCode::kMissingCoweighting: return "MissingCoweighting";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kDuplicateLabel: return "DuplicateLabel";
    case ViolationKind::kDanglingEndpoint: return "DanglingEndpoint";
    case ViolationKind::kMissingIdentity: return "MissingIdentity";
    case ViolationKind::kMissingComposite: return "MissingComposite";
    case ViolationKind::kDuplicateComposite: return "DuplicateComposite";
    case ViolationKind::kCompositeEndpoint: return "CompositeEndpoint";
    case ViolationKind::kIdentityLaw: return "IdentityLawViolation";
    case ViolationKind::kAssociativity: return "AssociativityViolation";
    case ViolationKind::kFunctorLaw: return "FunctorLawViolation";
    case ViolationKind::kNaturality: return "NaturalityViolation";
    case ViolationKind::kCoherence: return "CoherenceViolation";
  }
  return "Unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string out = std::to_string(violations.size()) + " violation(s)";
  if (!violations.empty()) {
    out += "; first: ";
    out += violation_kind_name(violations.front().kind);
    out += " ";
    out += violations.front().message;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(ErrorCode code,
                                 std::vector<Violation> violations)
    : Error(code, summarize(violations)), violations_(std::move(violations)) {}

}  // namespace bicat_euler
