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


// The named fixtures shipped as .catj files under fixtures/.

#ifndef BICAT_EULER_CORPUS_HPP_
#define BICAT_EULER_CORPUS_HPP_

#include <string>
#include <vector>

#include "bicat_euler/catdsl.hpp"

namespace bicat_euler::dsl {

struct CorpusEntry {
  std::string name;  // file stem, e.g. "ez2-to-bz2"
  Document document;
};

std::vector<CorpusEntry> fixture_corpus();

}  // namespace bicat_euler::dsl

#endif  // BICAT_EULER_CORPUS_HPP_
