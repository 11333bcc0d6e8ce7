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

#include "bicat_euler/fibration.hpp"

#include "bicat_euler/error.hpp"
#include "bicat_euler/fixtures.hpp"
#include "bicat_euler/generators.hpp"
#include "doctest.h"
#include "support.hpp"

namespace be = bicat_euler;
namespace fx = bicat_euler::fixtures;
using oracle::q;

namespace {

// Independent count of Gr((b,x),(c,y)): pairs (f : b -> c, u : x -> f*y).
oracle::Rows gr_counts(const be::LaxFunctorToCat& f, const std::vector<be::GrObject>& objects) {
  const auto& base = f.base();
  oracle::Rows z(objects.size(), std::vector<be::Rational>(objects.size(), be::Rational(0)));
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = 0; j < objects.size(); ++j) {
      const auto [b, x] = objects[i];
      const auto [c, y] = objects[j];
      for (be::MorphismId m = 0; m < base.morphism_count(); ++m) {
        if (base.src(m) != b || base.dst(m) != c) continue;
        const be::ObjectId target = f.pullback(m).object(y);
        const auto& fiber = f.fiber(b);
        for (be::MorphismId u = 0; u < fiber.morphism_count(); ++u) {
          if (fiber.src(u) == x && fiber.dst(u) == target) z[i][j] += 1;
        }
      }
    }
  }
  return z;
}

}  // namespace

TEST_SUITE("fib1") {

TEST_CASE("identity functor is a fibration in groupoids only over groupoids") {
  const auto id = be::Functor::identity(fx::bz2());
  const auto r = be::classify_fibration(id);
  CHECK(r.fibered);
  CHECK(r.cofibered);
  CHECK(r.fibered_in_groupoids);
  CHECK(r.cofibered_in_groupoids);
  CHECK(r.witnesses.empty());
  for (be::MorphismId m = 0; m < 2; ++m) CHECK(be::is_cartesian_morphism(id, m));
}

TEST_CASE("cartesian morphisms") {
  const auto p = fx::arrow_to_pt();
  const auto a = *p.source().find_morphism("a");
  CHECK_FALSE(be::is_cartesian_morphism(p, a));
  CHECK(be::cartesian_counterexample(p, a).has_value());
  CHECK(be::is_cartesian_morphism(p, p.source().identity(0)));
  CHECK_THROWS_AS(be::is_cartesian_morphism(p, 99), be::Error);
  // Under the literal reading the same morphism is classified differently.
  CHECK(be::is_cartesian_morphism(p, a, be::CartesianConvention::kLiteral) !=
        be::is_cartesian_morphism(p, a));
}

TEST_CASE("non-fibration") {
  const auto r = be::classify_fibration(fx::d2_to_arrow());
  CHECK_FALSE(r.fibered);
  CHECK_FALSE(r.witnesses.empty());
  CHECK_THROWS_AS(be::choose_cleavage(fx::d2_to_arrow()), be::Error);
}

TEST_CASE("quotient EZ2 -> BZ2") {
  const auto p = fx::ez2_to_bz2();
  const auto r = be::classify_fibration(p);
  CHECK(r.fibered_in_groupoids);
  CHECK(r.cofibered_in_groupoids);
  const auto fiber = be::fiber_category(p, 0);
  CHECK(fiber.object_count() == 2);
  CHECK(fiber.morphism_count() == 2);
  CHECK(*be::euler_char(fiber).chi == 2);
  CHECK_THROWS_AS(be::fiber_category(p, 3), be::Error);

  const auto f = be::induced_fiber_pseudofunctor(p, be::choose_cleavage(p));
  const auto g = *p.target().find_morphism("g");
  const auto& swap = f.pullback(g);
  CHECK(swap.object(0) == 1);
  CHECK(swap.object(1) == 0);
  const auto e = *p.target().find_morphism("e");
  CHECK(f.pullback(e).object(0) == 0);
  CHECK(f.pullback(e).object(1) == 1);
}

TEST_CASE("identity functor fibers and pullbacks") {
  const auto id = be::Functor::identity(fx::span());
  for (be::ObjectId b = 0; b < 3; ++b) {
    const auto fiber = be::fiber_category(id, b);
    CHECK(fiber.object_count() == 1);
    CHECK(fiber.morphism_count() == 1);
  }
  const auto f = be::induced_fiber_pseudofunctor(id, be::choose_cleavage(id));
  for (be::MorphismId m = 0; m < fx::span()->morphism_count(); ++m) {
    CHECK(f.pullback(m).object(0) == 0);
  }
  const auto cl = be::choose_cleavage(id);
  for (be::MorphismId m = 0; m < fx::span()->morphism_count(); ++m) {
    CHECK(*cl.lift(m, fx::span()->dst(m)) == m);
  }
}

TEST_CASE("Grothendieck construction over ARROW") {
  const auto f = fx::arrow_base_laxcat();
  const auto gr = be::grothendieck_cat(f);
  CHECK(gr.labels == std::vector<std::string>{"(0,x)", "(0,y)", "(1,*)"});
  CHECK(oracle::rows_of(gr.similarity) ==
        oracle::Rows{{q(1), q(0), q(1)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}});
  CHECK(oracle::rows_of(gr.similarity) == gr_counts(f, gr.objects));
  CHECK(*be::matrix_euler(gr.similarity).chi == 2);
  const auto r = be::verify_gr_formula(f);
  CHECK(r.holds);
  CHECK(r.equation() == "2 = 1·2 + 0·1");
}

TEST_CASE("Grothendieck construction over BZ2 recovers EZ2") {
  const auto f = fx::bz2_swap_laxcat();
  const auto gr = be::grothendieck_cat(f);
  CHECK(oracle::rows_of(gr.similarity) == oracle::Rows{{q(1), q(1)}, {q(1), q(1)}});
  REQUIRE(gr.total);
  CHECK(be::is_groupoid(**gr.total));
  const auto r = be::verify_gr_formula(f);
  CHECK(r.chi_total == 1);
  CHECK(r.equation() == "1 = 1/2 · 2");
}

TEST_CASE("Grothendieck construction over the point") {
  std::vector<be::Functor> pulls{be::Functor::identity(fx::span())};
  const auto f = be::LaxFunctorToCat::validate(fx::pt(), {fx::span()}, pulls, std::nullopt);
  const auto gr = be::grothendieck_cat(f);
  CHECK(oracle::rows_of(gr.similarity) == oracle::zeta(*fx::span()));
  const auto r = be::verify_gr_formula(f);
  CHECK(r.holds);
  CHECK(r.chi_total == 1);
}

TEST_CASE("product formula") {
  const auto r = be::verify_product_formula_cat(fx::ez2_to_bz2());
  CHECK(r.holds);
  CHECK(r.equation() == "1 = 1/2 · 2");
  const auto id = be::verify_product_formula_cat(be::Functor::identity(fx::ez2()));
  CHECK(id.holds);
  CHECK(id.chi_total == 1);

  // Disjoint union of the two previous examples.
  const auto total = be::share(be::coproduct({fx::ez2(), fx::ez2()}));
  const auto base = be::share(be::coproduct({fx::bz2(), fx::ez2()}));
  std::vector<be::ObjectId> om{0, 0, 1, 2};
  std::vector<be::MorphismId> mm;
  const auto p1 = fx::ez2_to_bz2();
  const auto& ez = *fx::ez2();
  for (be::MorphismId m = 0; m < ez.morphism_count(); ++m) {
    mm.push_back(*base->find_morphism("0." + fx::bz2()->morphism_label(p1.morphism(m))));
  }
  for (be::MorphismId m = 0; m < ez.morphism_count(); ++m) {
    mm.push_back(*base->find_morphism("1." + ez.morphism_label(m)));
  }
  const auto both = be::verify_product_formula_cat(be::Functor::validate(total, base, om, mm));
  CHECK(both.holds);
  CHECK(both.chi_total == r.chi_total + id.chi_total);
  CHECK(both.components.size() == 2);

  CHECK_THROWS_AS(be::verify_product_formula_cat(fx::d2_to_arrow()), be::Error);
}

TEST_CASE("lax functor validation") {
  // A pullback with the wrong endpoints is rejected.
  std::vector<be::Functor> pulls{be::Functor::identity(fx::d2()),
                                 be::Functor::identity(fx::pt()),
                                 be::Functor::identity(fx::pt())};
  CHECK_THROWS_AS(
      be::LaxFunctorToCat::validate(fx::arrow(), {fx::d2(), fx::pt()}, pulls, std::nullopt),
      be::Error);
  CHECK(fx::arrow_base_laxcat().strictly_functorial());
  CHECK(fx::arrow_base_laxcat().effective_coherence().has_value());
}

TEST_CASE("property: groupoid-valued lax functors") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    be::gen::Rng rng(seed);
    const auto f = be::gen::groupoid_laxcat(rng, rng.between(1, 3));
    CAPTURE(seed);
    const auto gr = be::grothendieck_cat(f);
    CHECK(oracle::rows_of(gr.similarity) == gr_counts(f, gr.objects));
    REQUIRE(gr.projection);
    const auto cls = be::classify_fibration(*gr.projection);
    CHECK(cls.fibered_in_groupoids);
    // Fibers of the projection are groupoids with the same Euler
    // characteristic as F.
    for (be::ObjectId b = 0; b < f.base().object_count(); ++b) {
      const auto fiber = be::fiber_category(*gr.projection, b);
      CHECK(be::is_groupoid(fiber));
      CHECK(oracle::groupoid_chi(fiber) == oracle::groupoid_chi(f.fiber(b)));
    }
    const auto r = be::verify_gr_formula(f);
    CHECK(r.holds);
    CHECK(r.chi_total == *oracle::chi(gr_counts(f, gr.objects)));
    if (cls.cofibered_in_groupoids) {
      CHECK(be::verify_product_formula_cat(*gr.projection).holds);
    }
    // Dual classification.
    CHECK(cls.cofibered == be::classify_fibration(be::reverse(*gr.projection)).fibered);
  }
}

TEST_CASE("property: dual classification of thickenings") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    be::gen::Rng rng(seed);
    const auto f = be::gen::thickening(rng, be::gen::small_category(rng));
    const auto r = be::classify_fibration(f);
    const auto rev = be::classify_fibration(be::reverse(f));
    CAPTURE(seed);
    CHECK(r.cofibered == rev.fibered);
    CHECK(r.fibered == rev.cofibered);
  }
}

}  // TEST_SUITE
