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

// Runs the command-line tool as a subprocess.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Output {
  int status = -1;
  std::string out;

  bool has(std::string_view s) const { return out.find(s) != std::string::npos; }
};

std::string fixture(const std::string& name) {
  return (fs::path(BICAT_EULER_SOURCE_DIR) / "fixtures" / (name + ".catj")).string();
}

Output run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(BICAT_EULER_CLI) + " " + args + " 2>&1";
  Output o;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) o.out.append(buf, n);
  const int st = pclose(p);
  o.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return o;
}

// stdout only, for JSON reports.
Output run_stdout(const std::string& args) {
  return run(args + " 2>/dev/null");
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("chi") {
  auto o = run("chi " + fixture("bz2"));
  CHECK(o.status == 0);
  CHECK(o.out == "1/2\n");
  CHECK(run("chi " + fixture("pt")).out == "1\n");
  CHECK(run("chi " + fixture("psg") + " --kind catgraph").out == "2\n");
  CHECK(run("chi " + fixture("bz2") + " --decimal").has("0.5"));
  o = run("chi " + fixture("arrow") + " --weighting");
  CHECK(o.status == 0);
}

TEST_CASE("check") {
  auto o = run("check " + fixture("ez2-to-bz2") + " fib-groupoids");
  CHECK(o.status == 0);
  CHECK(o.has("pass"));
  CHECK(run("check " + fixture("span") + " acyclic").status == 0);
  o = run("check " + fixture("acyclic2") + " pseudogroupoid");
  CHECK(o.status == 1);
  CHECK(o.has("fail"));
  CHECK(o.has("2-cell 'a' of hom(0, 1) is not invertible"));
  CHECK(run("check " + fixture("pt-into-ez2") + " biequivalence").status == 0);
  CHECK(run("check " + fixture("gr-psg-over-arrow") + " fib-pseudogroupoids").status == 0);
  CHECK(run("check " + fixture("acyclic2-collapse") + " fib-pseudogroupoids").status == 1);
}

TEST_CASE("verify") {
  auto o = run("verify product-cat " + fixture("ez2-to-bz2"));
  CHECK(o.status == 0);
  CHECK(o.has("1 = 1/2 · 2"));
  CHECK(run("verify gr " + fixture("arrow-base-laxcat")).has("2 = 1·2 + 0·1"));
  CHECK(run("verify product-bicat " + fixture("gr-psg-over-arrow")).has("2 = 1·2"));
  o = run("verify gr-bicat " + fixture("gr-psg-over-arrow-trihom") + " " +
          fixture("two-group-psg-trihom"));
  CHECK(o.status == 0);
  CHECK(o.has("2 = 1·2 + 0·2"));
  CHECK(o.has("4 = 2·2"));
  CHECK(run("verify biequivalence " + fixture("pt-into-ez2")).has("1 = 1"));
  o = run("verify equivalence " + fixture("ez2-to-bz2"));
  CHECK(o.status == 2);
  CHECK(o.has("not an equivalence"));
}

TEST_CASE("gen output passes check and chi") {
  const auto dir = fs::temp_directory_path() / "bicat-euler-cli-test";
  fs::create_directories(dir);
  const auto point = run("gen acyclic-cat --seed 0 --size 1");
  CHECK(point.status == 0);
  std::ifstream pt(fixture("pt"), std::ios::binary);
  CHECK(point.out == std::string(std::istreambuf_iterator<char>(pt), {}));
  struct Case {
    const char* kind;
    const char* check;
  };
  for (const Case c : {Case{"acyclic-cat", "chi"}, Case{"pseudogroupoid", "pseudogroupoid"},
                       Case{"fib-groupoids-functor", "fib-groupoids"},
                       Case{"trihom-psgrpd", "gr-bicat"}}) {
    CAPTURE(c.kind);
    const auto path = (dir / (std::string(c.kind) + ".catj")).string();
    auto o = run(std::string("gen ") + c.kind + " --seed 3 --size 2 -o " + path);
    REQUIRE(o.status == 0);
    if (std::string(c.check) == "chi") {
      o = run("chi " + path);
    } else if (std::string(c.check) == "gr-bicat") {
      o = run("verify gr-bicat " + path);
    } else {
      o = run("check " + path + " " + c.check);
    }
    CHECK(o.status == 0);
  }
  fs::remove_all(dir);
}

TEST_CASE("exit statuses") {
  CHECK(run("chi /nonexistent/file.catj").status == 2);
  CHECK(run("chi " + fixture("bz2") + " --kind functor").status == 2);
  CHECK(run("check " + fixture("ez2-to-bz2") + " pseudogroupoid").status == 2);
  CHECK(run("chi " + fs::path(BICAT_EULER_SOURCE_DIR).string() +
            "/tests/data/negative/e001-undeclared-object.catj")
            .has("error E001"));
  CHECK(run("gen acyclic-cat --size 11").status == 2);
  CHECK(run("gen nonsense").status == 2);
  const auto fault = run("gen pseudogroupoid --inject-fault");
  CHECK(fault.status == 3);
  CHECK(fault.has("fails"));
}

TEST_CASE("json reports are valid and deterministic") {
  const std::string args = "verify gr " + fixture("arrow-base-laxcat") + " --json";
  const auto a = run_stdout(args);
  const auto b = run_stdout(args);
  CHECK(a.out == b.out);
  const auto j = json::parse(a.out);
  CHECK(j["exit_status"] == 0);
  CHECK(j["inputs"][0]["sha256"].get<std::string>().size() == 64);
  CHECK(j["results"].is_array());

  const auto bad = json::parse(run_stdout("check " + fixture("acyclic2") +
                                          " pseudogroupoid --json").out);
  CHECK(bad["exit_status"] == 1);

  const auto err = json::parse(run_stdout("--json chi /nonexistent/file.catj").out);
  CHECK(err["exit_status"] == 2);
  CHECK(err.contains("error"));

  const std::string heavy = "check " + fixture("disjoint-psg") + " fib-pseudogroupoids --json";
  CHECK(run(heavy + " 2>/dev/null", "BICAT_EULER_THREADS=1").out ==
        run(heavy + " 2>/dev/null", "BICAT_EULER_THREADS=4").out);

  const auto codes = json::parse(run_stdout("codes --json").out);
  CHECK(codes["exit_status"] == 0);
}

}  // TEST_SUITE
