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


// Writes the fixture corpus as <dir>/<name>.catj. Used once to produce the
// frozen files under fixtures/; the golden test compares against them.

#include <fstream>
#include <iostream>

#include "bicat_euler/corpus.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: write-fixtures DIR\n";
    return 2;
  }
  for (const auto& entry : bicat_euler::dsl::fixture_corpus()) {
    const std::string path = std::string(argv[1]) + "/" + entry.name + ".catj";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 2;
    }
    out << bicat_euler::dsl::serialize(entry.document);
  }
  return 0;
}
