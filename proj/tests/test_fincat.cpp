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

#include "bicat_euler/fincat.hpp"

#include <algorithm>

#include "bicat_euler/error.hpp"
#include "bicat_euler/fixtures.hpp"
#include "bicat_euler/generators.hpp"
#include "doctest.h"
#include "support.hpp"

namespace be = bicat_euler;
namespace fx = bicat_euler::fixtures;
using oracle::q;

namespace {

be::CategorySpec arrow_spec() {
  return {{"0", "1"},
          {{"i0", "0", "0"}, {"i1", "1", "1"}, {"a", "0", "1"}},
          {{"0", "i0"}, {"1", "i1"}},
          {{"i0", "i0", "i0"}, {"i1", "i1", "i1"}, {"a", "i0", "a"}, {"i1", "a", "a"}}};
}

bool has_kind(const std::vector<be::Violation>& vs, be::ViolationKind k) {
  return std::any_of(vs.begin(), vs.end(), [&](const auto& v) { return v.kind == k; });
}

be::Rational chi(const be::FinCategory& c) { return *be::euler_char(c).chi; }

}  // namespace

TEST_SUITE("fincat") {

TEST_CASE("validation accepts exactly the lawful descriptions") {
  CHECK(be::check_category_laws(fx::pt()->spec()).empty());
  CHECK(be::check_category_laws(arrow_spec()).empty());

  auto missing = arrow_spec();
  missing.compositions.pop_back();  // id_1 o a
  CHECK(has_kind(be::check_category_laws(missing), be::ViolationKind::kMissingComposite));
  CHECK_THROWS_AS(be::make_category(missing), be::ValidationError);

  // BZ2 with g o g = g breaks the group table.
  be::CategorySpec bad{{"*"},
                       {{"e", "*", "*"}, {"g", "*", "*"}},
                       {{"*", "e"}},
                       {{"e", "e", "e"}, {"e", "g", "g"}, {"g", "e", "g"}, {"g", "g", "g"}}};
  CHECK(be::check_category_laws(bad).empty());  // a lawful monoid, {e, g} idempotent
  bad.compositions[1] = {"e", "g", "e"};
  const auto vs = be::check_category_laws(bad);
  CHECK((has_kind(vs, be::ViolationKind::kIdentityLaw) ||
         has_kind(vs, be::ViolationKind::kAssociativity)));

  auto dangling = arrow_spec();
  dangling.morphisms.push_back({"b", "0", "2"});
  CHECK(has_kind(be::check_category_laws(dangling), be::ViolationKind::kDanglingEndpoint));

  auto dup = arrow_spec();
  dup.compositions.push_back({"a", "i0", "a"});
  CHECK(has_kind(be::check_category_laws(dup), be::ViolationKind::kDuplicateComposite));

  auto dup_label = arrow_spec();
  dup_label.objects.push_back("0");
  CHECK(has_kind(be::check_category_laws(dup_label), be::ViolationKind::kDuplicateLabel));

  auto no_id = arrow_spec();
  no_id.identities.pop_back();
  CHECK(has_kind(be::check_category_laws(no_id), be::ViolationKind::kMissingIdentity));
}

TEST_CASE("canonical spec round-trips through validation") {
  for (const auto& c : {fx::pt(), fx::arrow(), fx::span(), fx::bz2(), fx::ez2()}) {
    const auto again = be::make_category(c->spec());
    CHECK(again->spec().compositions == c->spec().compositions);
  }
}

TEST_CASE("similarity matrices") {
  CHECK(oracle::rows_of(be::similarity_matrix(*fx::arrow())) ==
        oracle::Rows{{q(1), q(1)}, {q(0), q(1)}});
  CHECK(be::similarity_matrix(*fx::d2()) == be::QMatrix::identity({"x", "y"}));
  CHECK(oracle::rows_of(be::similarity_matrix(*fx::bz2())) == oracle::Rows{{q(2)}});
  for (const auto& c : {fx::pt(), fx::pair(), fx::span(), fx::ez2()}) {
    CHECK(oracle::rows_of(be::similarity_matrix(*c)) == oracle::zeta(*c));
  }
}

TEST_CASE("fixture Euler characteristics") {
  CHECK(chi(*fx::pt()) == 1);
  CHECK(chi(*fx::d2()) == 2);
  CHECK(chi(*fx::arrow()) == 1);
  CHECK(chi(*fx::pair()) == 0);
  CHECK(chi(*fx::span()) == 1);
  CHECK(chi(*fx::bz2()) == q(1, 2));
  CHECK(chi(*fx::ez2()) == 1);
  CHECK(chi(*fx::cyclic_group(5)) == q(1, 5));
  for (const auto& c : {fx::pt(), fx::d2(), fx::arrow(), fx::pair(), fx::span(), fx::bz2(),
                        fx::ez2()}) {
    CHECK(chi(*c) == *oracle::chi(oracle::zeta(*c)));
  }
  CHECK(chi(*fx::bz2()) == oracle::groupoid_chi(*fx::bz2()));
  CHECK(chi(*fx::ez2()) == oracle::groupoid_chi(*fx::ez2()));
}

TEST_CASE("acyclicity") {
  CHECK(be::is_acyclic(*fx::span()));
  CHECK(be::is_acyclic(*fx::pair()));
  CHECK_FALSE(be::is_acyclic(*fx::bz2()));
  CHECK_FALSE(be::is_acyclic(*fx::ez2()));
  CHECK_THROWS_AS(be::nerve_euler(*fx::bz2()), be::Error);
}

TEST_CASE("nerve chain counts") {
  auto counts = [](const be::CategoryPtr& c) {
    std::vector<long> out;
    for (const auto& n : be::nerve_euler(*c).counts) out.push_back(n.convert_to<long>());
    return out;
  };
  CHECK(counts(fx::arrow()) == std::vector<long>{2, 1});
  CHECK(be::nerve_euler(*fx::arrow()).euler == 1);
  CHECK(counts(fx::pair()) == std::vector<long>{2, 2});
  CHECK(be::nerve_euler(*fx::pair()).euler == 0);
  CHECK(counts(fx::span()) == std::vector<long>{3, 2});
  CHECK(be::nerve_euler(*fx::span()).euler == 1);
}

TEST_CASE("coproducts and products") {
  CHECK(chi(be::coproduct({fx::pt(), fx::pt()})) == 2);
  CHECK(chi(be::coproduct({fx::arrow(), fx::bz2()})) == q(3, 2));
  const auto empty = be::coproduct({});
  CHECK(empty.object_count() == 0);
  CHECK(chi(empty) == 0);
  for (const auto& a : {fx::arrow(), fx::span(), fx::bz2()}) {
    const auto p = be::product(*fx::pt(), *a);
    CHECK(p.object_count() == a->object_count());
    CHECK(p.morphism_count() == a->morphism_count());
    CHECK(chi(p) == chi(*a));
  }
  CHECK(chi(be::product(*fx::arrow(), *fx::arrow())) == 1);
  CHECK(chi(be::product(*fx::bz2(), *fx::bz2())) == q(1, 4));
}

TEST_CASE("equivalence checking") {
  CHECK(be::check_equivalence_functor(be::Functor::identity(fx::bz2())));
  const auto ez2_pt = be::Functor::validate(fx::ez2(), fx::pt(), {0, 0}, {0, 0, 0, 0});
  CHECK(be::check_equivalence_functor(ez2_pt));
  const auto d2_pt = be::Functor::validate(fx::d2(), fx::pt(), {0, 0}, {0, 0});
  CHECK_FALSE(be::check_equivalence_functor(d2_pt));

  const auto r = be::verify_equivalence_invariance(ez2_pt);
  CHECK(r.holds);
  CHECK(*r.chi_source == 1);
  CHECK(r.transported_weighting->sum() == 1);
  CHECK_FALSE(be::verify_equivalence_invariance(d2_pt).is_equivalence);
}

TEST_CASE("functor laws") {
  // Sending both non-identities of EZ2 to g fails to preserve x>y o y>x.
  const auto& e = *fx::ez2();
  const auto& b = *fx::bz2();
  std::vector<be::MorphismId> mm(e.morphism_count());
  for (be::MorphismId m = 0; m < e.morphism_count(); ++m) {
    mm[m] = e.is_identity(m) ? *b.find_morphism("e") : *b.find_morphism("g");
  }
  CHECK(be::check_functor_laws(e, b, {0, 0}, mm).empty());
  mm[*e.find_morphism("y>x")] = *b.find_morphism("e");
  CHECK_FALSE(be::check_functor_laws(e, b, {0, 0}, mm).empty());
  CHECK_THROWS_AS(be::Functor::validate(fx::ez2(), fx::bz2(), {0, 0}, mm), be::ValidationError);
}

TEST_CASE("natural transformations") {
  const auto id = be::Functor::identity(fx::arrow());
  const auto& a = *fx::arrow();
  CHECK_NOTHROW(be::NatTransformation::validate(id, id, {a.identity(0), a.identity(1)}));
  // Constant functors at 0 and 1 with component a are natural.
  const auto c0 = be::Functor::validate(fx::arrow(), fx::arrow(), {0, 0},
                                        {a.identity(0), a.identity(0), a.identity(0)});
  const auto c1 = be::Functor::validate(fx::arrow(), fx::arrow(), {1, 1},
                                        {a.identity(1), a.identity(1), a.identity(1)});
  const auto arrow_a = *a.find_morphism("a");
  CHECK_NOTHROW(be::NatTransformation::validate(c0, c1, {arrow_a, arrow_a}));
  CHECK_THROWS_AS(be::NatTransformation::validate(c1, c0, {arrow_a, arrow_a}), be::Error);
}

TEST_CASE("property: acyclic categories agree with chain counting") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    be::gen::Rng rng(seed);
    const auto c = be::gen::acyclic_category(rng, rng.between(1, 8));
    CAPTURE(seed);
    REQUIRE(be::is_acyclic(*c));
    const auto e = be::euler_char(*c);
    REQUIRE(e.chi);
    CHECK(*e.chi == be::Rational(be::nerve_euler(*c).euler));
    CHECK(*e.chi == oracle::chain_euler(*c));
    CHECK(c->object_count() <= 10);
    CHECK(c->morphism_count() <= 60);

    // Topological order of the reachability relation makes zeta
    // unitriangular.
    std::vector<be::ObjectId> order(c->object_count());
    std::iota(order.begin(), order.end(), 0);
    auto reach = oracle::zeta(*c);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
      // Count of objects reachable from x; strictly decreasing along edges.
      auto out = [&](auto v) {
        long n = 0;
        for (std::size_t w = 0; w < reach.size(); ++w) n += reach[v][w] != 0;
        return n;
      };
      return out(x) > out(y);
    });
    for (std::size_t i = 0; i < order.size(); ++i) {
      CHECK(reach[order[i]][order[i]] == 1);
      for (std::size_t j = 0; j < i; ++j) CHECK(reach[order[i]][order[j]] == 0);
    }
    CHECK(be::invert(be::similarity_matrix(*c)).has_value());
  }
}

TEST_CASE("property: coproduct adds and product multiplies") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    be::gen::Rng rng(seed);
    const auto a = be::gen::small_category(rng);
    const auto b = be::gen::small_category(rng);
    CAPTURE(seed);
    const auto ca = be::euler_char(*a).chi;
    const auto cb = be::euler_char(*b).chi;
    REQUIRE(ca);
    REQUIRE(cb);
    CHECK(*ca == *oracle::chi(oracle::zeta(*a)));
    CHECK(*be::euler_char(be::coproduct({a, b})).chi == *ca + *cb);
    CHECK(*be::euler_char(be::product(*a, *b)).chi == *ca * *cb);
    CHECK(*be::euler_char(be::opposite(*a)).chi == *ca);
  }
}

TEST_CASE("property: equivalences preserve the Euler characteristic") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    be::gen::Rng rng(seed);
    const auto c = be::gen::small_category(rng);
    const auto f = be::gen::thickening(rng, c);
    CAPTURE(seed);
    CHECK(be::check_equivalence_functor(f));
    const auto r = be::verify_equivalence_invariance(f);
    CHECK(r.holds);
    CHECK(*r.chi_source == *r.chi_target);
    CHECK(r.transported_weighting_ok);
    // The transported weighting solves the source system.
    const auto z = be::similarity_matrix(f.source());
    const auto zk = be::multiply(z, *r.transported_weighting);
    for (std::size_t i = 0; i < zk.size(); ++i) CHECK(zk[i] == 1);
  }
}

}  // TEST_SUITE
