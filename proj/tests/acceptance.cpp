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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bicat_euler/bifibration.hpp"
#include "bicat_euler/catdsl.hpp"
#include "bicat_euler/corpus.hpp"
#include "bicat_euler/fixtures.hpp"
#include "bicat_euler/generators.hpp"
#include "support.hpp"

namespace be = bicat_euler;
namespace dsl = bicat_euler::dsl;
namespace fx = bicat_euler::fixtures;
namespace gen = bicat_euler::gen;
namespace fs = std::filesystem;

namespace {

// Collects failure messages; a criterion passes when none were recorded.
class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && messages_.size() < 5) messages_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ << " failure(s)";
    for (const auto& m : messages_) s << "; " << m;
    return s.str();
  }

 private:
  std::vector<std::string> messages_;
  std::size_t count_ = 0;
};

bool is_ones(const be::QVector& v) {
  for (const auto& x : v.entries()) {
    if (x != 1) return false;
  }
  return true;
}

// k with zeta k = u and k' with k' zeta = u, checked entrywise.
void check_weightings(Failures& f, const be::QMatrix& z, const std::string& name) {
  const auto w = be::solve_weighting(z);
  const auto c = be::solve_coweighting(z);
  if (w) f.expect(is_ones(be::multiply(z, *w)), name + ": zeta k != u");
  if (c) f.expect(is_ones(be::multiply(*c, z)), name + ": k zeta != u");
  if (w && c) {
    be::Rational sw = 0, sc = 0;
    for (const auto& x : w->entries()) sw += x;
    for (const auto& x : c->entries()) sc += x;
    f.expect(sw == sc, name + ": weighting and coweighting sums differ");
  }
}

std::vector<std::pair<std::string, be::QMatrix>> fixture_matrices() {
  std::vector<std::pair<std::string, be::QMatrix>> out;
  auto cat = [&](const std::string& n, const be::FinCategory& c) {
    out.emplace_back(n, be::similarity_matrix(c));
  };
  auto bicat = [&](const std::string& n, const be::Bicategory& b) {
    out.emplace_back(n, be::similarity_matrix_cg(b.graph()));
    for (be::ObjectId x = 0; x < b.object_count(); ++x) {
      for (be::ObjectId y = 0; y < b.object_count(); ++y) {
        if (b.hom(x, y).object_count() > 0) cat(n + " hom", b.hom(x, y));
      }
    }
  };
  for (const auto& e : dsl::fixture_corpus()) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, be::CategoryPtr>) {
            cat(e.name, *v);
          } else if constexpr (std::is_same_v<T, be::Functor>) {
            cat(e.name + " source", v.source());
            cat(e.name + " target", v.target());
          } else if constexpr (std::is_same_v<T, be::CatGraph>) {
            out.emplace_back(e.name, be::similarity_matrix_cg(v));
          } else if constexpr (std::is_same_v<T, be::BicatPtr>) {
            bicat(e.name, *v);
          } else if constexpr (std::is_same_v<T, be::LaxFunctorBicat>) {
            bicat(e.name + " source", v.source());
            bicat(e.name + " target", v.target());
          } else if constexpr (std::is_same_v<T, be::LaxFunctorToCat>) {
            cat(e.name + " base", v.base());
            for (const auto& fib : v.fibers()) cat(e.name + " fiber", *fib);
          } else {
            bicat(e.name + " base", v.base());
            for (be::ObjectId b = 0; b < v.base().object_count(); ++b) {
              bicat(e.name + " fiber", v.fiber(b));
            }
          }
        },
        e.document.value);
  }
  return out;
}

bool transported_ok(const be::QMatrix& z, const be::QVector& k) {
  return is_ones(be::multiply(z, k));
}

struct Cli {
  int status = -1;
  std::string out;
};

Cli run_cli(const std::string& args) {
  const std::string cmd = std::string(BICAT_EULER_CLI) + " " + args + " 2>&1";
  Cli r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

// --- criteria --------------------------------------------------------------

Failures weighting_identities() {
  Failures f;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    gen::Rng rng(seed);
    const auto m = gen::random_matrix(rng, rng.between(1, 6));
    check_weightings(f, m, "matrix seed " + std::to_string(seed));
  }
  for (const auto& [name, z] : fixture_matrices()) check_weightings(f, z, name);
  return f;
}

Failures fixture_values() {
  Failures f;
  auto expect = [&](const std::string& name, const be::QMatrix& z, const be::Rational& want,
                    const oracle::Rows& independent) {
    const auto got = be::matrix_euler(z).chi;
    f.expect(got && *got == want, name + " chi");
    const auto o = oracle::chi(independent);
    f.expect(o && *o == want, name + " oracle chi");
  };
  const std::vector<std::pair<std::string, std::pair<be::CategoryPtr, be::Rational>>> cats = {
      {"PT", {fx::pt(), 1}},         {"D2", {fx::d2(), 2}},
      {"ARROW", {fx::arrow(), 1}},   {"PAIR", {fx::pair(), 0}},
      {"SPAN", {fx::span(), 1}},     {"BZ2", {fx::bz2(), oracle::q(1, 2)}},
      {"EZ2", {fx::ez2(), 1}}};
  for (const auto& [name, v] : cats) {
    expect(name, be::similarity_matrix(*v.first), v.second, oracle::zeta(*v.first));
  }
  f.expect(oracle::groupoid_chi(*fx::bz2()) == oracle::q(1, 2), "BZ2 groupoid cardinality");
  f.expect(oracle::chain_euler(*fx::span()) == 1, "SPAN chain count");
  const auto psg = fx::psg().graph();
  expect("PSG", be::similarity_matrix_cg(psg), 2, oracle::cg_zeta(psg));
  return f;
}

Failures acyclic_oracle() {
  Failures f;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    gen::Rng rng(seed);
    const auto c = gen::acyclic_category(rng, rng.between(1, 10));
    const auto chi = be::euler_char(*c).chi;
    f.expect(chi && *chi == be::Rational(be::nerve_euler(*c).euler),
             "acyclic seed " + std::to_string(seed));
  }
  return f;
}

Failures sums_and_products() {
  Failures f;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    gen::Rng rng(seed);
    const std::string s = " seed " + std::to_string(seed);
    const auto a = gen::small_category(rng);
    const auto b = gen::small_category(rng);
    const auto ca = *be::euler_char(*a).chi;
    const auto cb = *be::euler_char(*b).chi;
    const auto co = be::euler_char(be::coproduct({a, b})).chi;
    const auto pr = be::euler_char(be::product(*a, *b)).chi;
    f.expect(co && *co == ca + cb, "category coproduct" + s);
    f.expect(pr && *pr == ca * cb, "category product" + s);
    const auto ga = gen::triangular_catgraph(rng, rng.between(1, 3));
    const auto gb = gen::triangular_catgraph(rng, rng.between(1, 3));
    const auto xa = *be::euler_char_cg(ga).chi;
    const auto xb = *be::euler_char_cg(gb).chi;
    const auto gco = be::euler_char_cg(be::coproduct_cg({ga, gb})).chi;
    const auto gpr = be::euler_char_cg(be::product_cg(ga, gb)).chi;
    f.expect(gco && *gco == xa + xb, "cat-graph coproduct" + s);
    f.expect(gpr && *gpr == xa * xb, "cat-graph product" + s);
  }
  return f;
}

Failures equivalence_invariance() {
  Failures f;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    gen::Rng rng(seed);
    const auto c = gen::small_category(rng);
    const auto e = gen::thickening(rng, c);
    const auto r = be::verify_equivalence_invariance(e);
    const std::string s = " seed " + std::to_string(seed);
    f.expect(r.holds && r.chi_source && r.chi_target && *r.chi_source == *r.chi_target,
             "equivalence chi" + s);
    f.expect(r.transported_weighting &&
                 transported_ok(be::similarity_matrix(e.source()), *r.transported_weighting),
             "transported weighting" + s);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    gen::Rng rng(seed);
    const auto b = be::share(gen::measurable_bicategory(rng, 3));
    const auto l = gen::bicat_thickening(rng, b);
    const auto r = be::verify_biequivalence_invariance(l);
    const std::string s = " seed " + std::to_string(seed);
    f.expect(r.holds && r.chi_source == r.chi_target, "biequivalence chi" + s);
    f.expect(transported_ok(be::similarity_matrix_cg(l.source().graph()),
                            r.transported_weighting),
             "transported bicategory weighting" + s);
  }
  return f;
}

Failures groupoid_laxcats() {
  Failures f;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    gen::Rng rng(seed);
    const std::string s = " seed " + std::to_string(seed);
    const auto F = gen::groupoid_laxcat(rng, rng.between(1, 3));
    const auto g = be::verify_gr_formula(F);
    f.expect(g.holds, "gr formula" + s + ": " + g.equation());
    const auto gr = be::grothendieck_cat(F);
    f.expect(gr.projection.has_value(), "projection" + s);
    if (!gr.projection) continue;
    f.expect(be::classify_fibration(*gr.projection).fibered_in_groupoids,
             "fibered in groupoids" + s);
    const auto p = be::verify_product_formula_cat(*gr.projection);
    f.expect(p.holds, "product formula" + s + ": " + p.equation());
  }
  return f;
}

Failures connected_pseudogroupoids() {
  Failures f;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    gen::Rng rng(seed);
    const auto b = gen::connected_pseudogroupoid(rng, rng.between(1, 4));
    const auto pe = be::pseudogroupoid_euler(b);
    const auto ce = be::euler_char_cg(b.graph()).chi;
    const std::string s = " seed " + std::to_string(seed);
    f.expect(ce && *ce == pe, "pseudogroupoid chi" + s);
    for (be::ObjectId g = 0; g < b.object_count(); ++g) {
      const auto h = be::euler_char(b.hom(g, g)).chi;
      f.expect(h && be::Rational(1) / *h == pe, "1/chi(hom(g,g))" + s);
    }
  }
  return f;
}

Failures trihomomorphisms() {
  Failures f;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    gen::Rng rng(seed);
    const auto p =
        gen::pseudogroupoid_fibration(rng, static_cast<gen::TrihomFamily>(seed % 3), 2);
    const std::string s = " seed " + std::to_string(seed);
    const auto g = be::verify_gr_formula_bicat(p);
    f.expect(g.product_coweighting_ok && g.hom_coweightings_ok, "product coweightings" + s);
    f.expect(g.holds, "Gr formula" + s + ": " + g.equation());
    const auto pr = be::verify_product_formula_bicat(p);
    f.expect(pr.holds, "product formula" + s + ": " + pr.equation());
    for (const auto& comp : pr.components) {
      f.expect(comp.fiber_chi_constant, "fiber chi constant" + s);
    }
    for (be::ObjectId b = 0; b < p.target().object_count(); ++b) {
      f.expect(be::pseudogroupoid_check(be::fiber_bicategory(p, b)).holds,
               "fiber pseudogroupoid" + s);
    }
  }
  return f;
}

Failures parser_and_cli() {
  Failures f;
  const fs::path root = BICAT_EULER_SOURCE_DIR;
  for (const auto& e : fs::directory_iterator(root / "fixtures")) {
    const auto text = oracle::read_file(e.path().string());
    const auto r = dsl::parse(text);
    f.expect(r.ok() && dsl::serialize(*r.document) == text,
             "round trip " + e.path().filename().string());
  }
  std::set<std::string> seen;
  for (const auto& e : fs::directory_iterator(root / "tests" / "data" / "negative")) {
    for (const auto& d : dsl::parse(oracle::read_file(e.path().string())).diagnostics) {
      seen.insert(d.code);
    }
  }
  for (const auto& [code, meaning] : dsl::diagnostic_codes()) {
    f.expect(seen.count(code) == 1, "code " + code + " not triggered");
  }
  const std::string fixtures = (root / "fixtures").string() + "/";
  const std::vector<std::pair<std::string, int>> cli = {
      {"chi " + fixtures + "bz2.catj", 0},
      {"check " + fixtures + "acyclic2.catj pseudogroupoid", 1},
      {"chi " + fixtures + "missing.catj", 2},
      {"check " + fixtures + "ez2-to-bz2.catj nonsense", 2},
      {"chi " + (root / "tests/data/negative/e001-undeclared-object.catj").string(), 2},
      {"gen pseudogroupoid --inject-fault", 3},
  };
  for (const auto& [args, want] : cli) {
    const auto r = run_cli(args);
    f.expect(r.status == want, "exit " + std::to_string(r.status) + " for '" + args + "'");
  }
  f.expect(run_cli("chi " + fixtures + "bz2.catj").out == "1/2\n", "chi output");
  return f;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Failures()>>> criteria = {
      {"exact weighting identities", weighting_identities},
      {"fixture chi values", fixture_values},
      {"acyclic chi equals nerve count", acyclic_oracle},
      {"coproduct and product", sums_and_products},
      {"equivalence and biequivalence invariance", equivalence_invariance},
      {"groupoid-valued lax functors", groupoid_laxcats},
      {"connected pseudogroupoids", connected_pseudogroupoids},
      {"pseudogroupoid trihomomorphisms", trihomomorphisms},
      {"parser round trip, diagnostics and CLI exit codes", parser_and_cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      const auto f = criteria[i].second();
      ok = f.ok();
      if (!ok) detail = f.summary();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %zu %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, ok ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
