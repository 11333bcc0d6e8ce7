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

// The .catj format: JSON documents with a top-level "kind" describing one
// finite structure. See docs/format.md for the schema and the diagnostic
// codes.

#ifndef BICAT_EULER_CATDSL_HPP_
#define BICAT_EULER_CATDSL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bicat_euler/bicategory.hpp"
#include "bicat_euler/bifibration.hpp"
#include "bicat_euler/fibration.hpp"
#include "json.hpp"

namespace bicat_euler::dsl {

enum class Kind {
  kCategory,
  kFunctor,
  kCatGraph,
  kBicategory,
  kLaxFunctor,
  kLaxCat,
  kTrihom,
};

std::string_view kind_name(Kind kind);
std::optional<Kind> kind_from_name(std::string_view name);

// Alternatives are in Kind order.
using Value = std::variant<CategoryPtr, Functor, CatGraph, BicatPtr,
                           LaxFunctorBicat, LaxFunctorToCat, Trihomomorphism>;

struct Document {
  Value value;

  Kind kind() const { return static_cast<Kind>(value.index()); }
};

enum class Severity { kError, kWarning };

// 1-based line and byte column.
struct Span {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Diagnostic {
  Severity severity = Severity::kError;
  Span span;
  std::string code;  // "E001"
  std::string message;

  // "<file>:3:7: error E001: ..."
  std::string format(std::string_view file) const;
  nlohmann::json to_json() const;
};

struct ParseResult {
  std::optional<Document> document;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return document.has_value(); }
};

// Collects every diagnostic it can; a document is returned only when no
// error-severity diagnostic was produced. Malformed JSON stops at the
// first syntax error (E000).
ParseResult parse(std::string_view text);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize(const Document& doc);
nlohmann::json to_json(const Document& doc);

// Code and one-line meaning for every diagnostic the parser can emit.
const std::vector<std::pair<std::string, std::string>>& diagnostic_codes();

}  // namespace bicat_euler::dsl

#endif  // BICAT_EULER_CATDSL_HPP_
