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

#include "bicat_euler/catdsl.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

#include "bicat_euler/corpus.hpp"
#include "bicat_euler/fixtures.hpp"
#include "bicat_euler/generators.hpp"
#include "doctest.h"
#include "support.hpp"

namespace be = bicat_euler;
namespace dsl = bicat_euler::dsl;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kSource = BICAT_EULER_SOURCE_DIR;

std::string round_trip(const std::string& text) {
  const auto r = dsl::parse(text);
  REQUIRE(r.ok());
  return dsl::serialize(*r.document);
}

std::set<std::string> codes(const dsl::ParseResult& r) {
  std::set<std::string> out;
  for (const auto& d : r.diagnostics) out.insert(d.code);
  return out;
}

json category_doc(const be::CategorySpec& s) {
  json doc = {{"kind", "category"}, {"objects", s.objects}};
  doc["morphisms"] = json::array();
  for (const auto& m : s.morphisms) {
    doc["morphisms"].push_back({{"id", m.id}, {"src", m.src}, {"dst", m.dst}});
  }
  doc["identities"] = json::object();
  for (const auto& [x, id] : s.identities) doc["identities"][x] = id;
  doc["compositions"] = json::array();
  for (const auto& c : s.compositions) doc["compositions"].push_back({c[0], c[1], c[2]});
  return doc;
}

bool is_identity_label(const be::CategorySpec& s, const std::string& m) {
  return std::any_of(s.identities.begin(), s.identities.end(),
                     [&](const auto& p) { return p.second == m; });
}

be::CategorySpec mutate(be::gen::Rng& rng, be::CategorySpec s) {
  if (s.compositions.empty()) return s;
  const std::size_t i = rng.below(s.compositions.size());
  auto& c = s.compositions[i];
  if (rng.coin() && !is_identity_label(s, c[0]) && !is_identity_label(s, c[1])) {
    s.compositions.erase(s.compositions.begin() + static_cast<std::ptrdiff_t>(i));
  } else {
    c[2] = s.morphisms[rng.below(s.morphisms.size())].id;
  }
  return s;
}

}  // namespace

TEST_SUITE("catdsl") {

TEST_CASE("kinds") {
  for (const char* name : {"category", "functor", "catgraph", "bicategory", "laxfunctor",
                           "laxcat", "trihom"}) {
    const auto k = dsl::kind_from_name(name);
    REQUIRE(k.has_value());
    CHECK(dsl::kind_name(*k) == name);
  }
  CHECK_FALSE(dsl::kind_from_name("monoid").has_value());
}

TEST_CASE("fixture files are the canonical serialization of the corpus") {
  const auto corpus = dsl::fixture_corpus();
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(kSource / "fixtures")) {
    if (e.path().extension() == ".catj") ++files;
  }
  CHECK(files == corpus.size());
  for (const auto& entry : corpus) {
    CAPTURE(entry.name);
    const auto text = oracle::read_file((kSource / "fixtures" / (entry.name + ".catj")).string());
    CHECK(dsl::serialize(entry.document) == text);
    CHECK(round_trip(text) == text);
  }
}

TEST_CASE("generated instances round trip") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    be::gen::Rng rng(seed);
    CAPTURE(seed);
    std::vector<dsl::Document> docs;
    docs.push_back({be::gen::acyclic_category(rng, rng.between(1, 6))});
    docs.push_back({be::gen::small_category(rng)});
    docs.push_back({be::gen::groupoid_laxcat(rng, rng.between(1, 3))});
    docs.push_back({be::share(be::gen::connected_pseudogroupoid(rng, 2))});
    if (seed < 8) {
      const auto p = be::gen::pseudogroupoid_fibration(
          rng, static_cast<be::gen::TrihomFamily>(seed % 4), 2);
      docs.push_back({p});
      docs.push_back({be::induced_trihomomorphism(p)});
    }
    for (const auto& d : docs) {
      const auto text = dsl::serialize(d);
      CHECK(round_trip(text) == text);
    }
  }
}

TEST_CASE("structurally equal documents serialize identically") {
  const auto text = oracle::read_file((kSource / "fixtures" / "bz2.catj").string());
  const json j = json::parse(text);
  CHECK(round_trip(j.dump()) == text);
  json shuffled = j;
  std::reverse(shuffled["morphisms"].begin(), shuffled["morphisms"].end());
  std::reverse(shuffled["compositions"].begin(), shuffled["compositions"].end());
  CHECK(round_trip(shuffled.dump(7)) == round_trip(shuffled.dump()));
  CHECK(dsl::serialize({be::fixtures::bz2()}) == text);
}

TEST_CASE("negative corpus covers every diagnostic code") {
  std::set<std::string> seen;
  for (const auto& e : fs::directory_iterator(kSource / "tests" / "data" / "negative")) {
    const auto name = e.path().filename().string();
    CAPTURE(name);
    const std::string code = "E" + name.substr(1, 3);
    const auto r = dsl::parse(oracle::read_file(e.path().string()));
    const auto got = codes(r);
    CHECK(got.count(code) == 1);
    seen.insert(code);
    if (code == "E012") {
      CHECK(r.ok());
      CHECK(r.diagnostics.front().severity == dsl::Severity::kWarning);
    } else {
      CHECK_FALSE(r.ok());
    }
    for (const auto& d : r.diagnostics) CHECK(d.span.line >= 1);
  }
  for (const auto& [code, meaning] : dsl::diagnostic_codes()) {
    CAPTURE(code);
    CHECK(seen.count(code) == 1);
    CHECK_FALSE(meaning.empty());
  }
  CHECK(seen.size() == dsl::diagnostic_codes().size());
}

TEST_CASE("diagnostics point at the offending value") {
  const auto r = dsl::parse(oracle::read_file(
      (kSource / "tests" / "data" / "negative" / "e001-undeclared-object.catj").string()));
  REQUIRE(r.diagnostics.size() == 1);
  const auto& d = r.diagnostics.front();
  CHECK(d.code == "E001");
  CHECK(d.span.line == 14);
  CHECK(d.span.column == 14);
  CHECK(d.message == "morphism 'f' refers to undeclared object 'b'");
  CHECK(d.format("x.catj") == "x.catj:14:14: error E001: " + d.message);
  CHECK(d.to_json()["code"] == "E001");
}

TEST_CASE("missing 2-cell components name the 2-cell and the object") {
  const auto r = dsl::parse(oracle::read_file(
      (kSource / "tests" / "data" / "negative" / "e014-missing-2cell-component.catj").string()));
  REQUIRE_FALSE(r.diagnostics.empty());
  const auto& d = r.diagnostics.front();
  CHECK(d.code == "E014");
  CHECK(d.message.find("'id_id_0'") != std::string::npos);
  CHECK(d.message.find("'(0,0)'") != std::string::npos);
}

TEST_CASE("parsing continues after an error") {
  const std::string text = R"({
  "kind": "category",
  "objects": ["a", "a"],
  "morphisms": [{"id": "f", "src": "a", "dst": "b"}, {"id": "g", "src": 3, "dst": "a"}],
  "identities": {"a": "ia"},
  "compositions": [["f", "h", "f"]],
  "colour": "red"
})";
  const auto r = dsl::parse(text);
  CHECK_FALSE(r.ok());
  const auto got = codes(r);
  for (const std::string c : {"E001", "E002", "E003", "E005", "E012"}) {
    CAPTURE(c);
    CHECK(got.count(c) == 1);
  }
  CHECK(std::is_sorted(r.diagnostics.begin(), r.diagnostics.end(),
                       [](const auto& a, const auto& b) {
                         return std::pair(a.span.line, a.span.column) <
                                std::pair(b.span.line, b.span.column);
                       }));
}

TEST_CASE("malformed JSON") {
  const auto r = dsl::parse("{\"kind\": ");
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].code == "E000");
  CHECK(dsl::parse("[]").diagnostics.front().code == "E005");
  CHECK(codes(dsl::parse("{}")).count("E004") == 1);
}

TEST_CASE("property: parser acceptance agrees with the category laws") {
  std::size_t rejected = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    be::gen::Rng rng(seed);
    const auto c = seed % 2 ? be::gen::small_category(rng)
                            : be::gen::acyclic_category(rng, rng.between(2, 5));
    const auto spec = mutate(rng, c->spec());
    const auto violations = be::check_category_laws(spec);
    const auto r = dsl::parse(category_doc(spec).dump(2));
    CAPTURE(seed);
    CHECK(r.ok() == violations.empty());
    if (!violations.empty()) ++rejected;
    for (const auto& v : violations) {
      CAPTURE(v.message);
      CHECK(std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                        [&](const auto& d) { return d.message == v.message; }));
    }
    if (r.ok()) {
      const auto& parsed = std::get<be::CategoryPtr>(r.document->value);
      CHECK(oracle::zeta(*parsed) == oracle::zeta(*be::share(be::FinCategory::validate(spec))));
    }
  }
  CHECK(rejected > 20);
}

}  // TEST_SUITE
