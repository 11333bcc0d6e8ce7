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

#ifndef BICAT_EULER_ERROR_HPP_
#define BICAT_EULER_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bicat_euler {

enum class ErrorCode {
  kIndexMismatch,
  kInvalidCategory,
  kInvalidFunctor,
  kInvalidNatTransformation,
  kInvalidBicategory,
  kInvalidLaxFunctor,
  kNotAcyclic,
  kMorphismNotInCategory,
  kNotFibered,
  kNonUniqueLift,
  kObjectNotInBase,
  kIncoherentData,
  kMissingEulerCharacteristic,
  kNotBiFibered,
  kHomWithoutEuler,
  kMissingCompositionData,
  kNotPseudogroupoid,
  kNotBiequivalence,
  kIllTypedComponent,
  kMissingCoweighting,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Kinds of structural defects found while validating finite data.
enum class ViolationKind {
  kDuplicateLabel,
  kDanglingEndpoint,
  kMissingIdentity,
  kMissingComposite,
  kDuplicateComposite,
  kCompositeEndpoint,
  kIdentityLaw,
  kAssociativity,
  kFunctorLaw,
  kNaturality,
  kCoherence,
};

std::string_view violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

// Thrown when a structure fails validation; carries every violated law,
// not only the first one found.
class ValidationError : public Error {
 public:
  ValidationError(ErrorCode code, std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

 private:
  std::vector<Violation> violations_;
};

}  // namespace bicat_euler

#endif  // BICAT_EULER_ERROR_HPP_
