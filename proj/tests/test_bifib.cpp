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

#include "bicat_euler/bifibration.hpp"

#include "bicat_euler/error.hpp"
#include "bicat_euler/fixtures.hpp"
#include "bicat_euler/generators.hpp"
#include "doctest.h"
#include "support.hpp"

namespace be = bicat_euler;
namespace fx = bicat_euler::fixtures;
using oracle::q;

namespace {

be::Rational cg_chi(const be::Bicategory& b) {
  return *oracle::chi(oracle::cg_zeta(b.graph()));
}

// Counts Gr((b,x),(c,y)) cell by cell from the trihomomorphism data.
oracle::Rows gr_hom_oracle(const be::Trihomomorphism& t, be::GrObject from,
                           be::GrObject to) {
  const auto& base = t.base().hom(from.base, to.base);
  const auto& fb = t.fiber(from.base);
  std::vector<std::pair<be::ObjectId, be::ObjectId>> cells;
  for (be::ObjectId f = 0; f < base.object_count(); ++f) {
    const auto fy = t.pullback1(from.base, to.base, f).object(to.fiber);
    for (be::ObjectId u = 0; u < fb.hom(from.fiber, fy).object_count(); ++u) {
      cells.emplace_back(f, u);
    }
  }
  oracle::Rows z(cells.size(), std::vector<be::Rational>(cells.size(), 0));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const auto [f, u] = cells[i];
      const auto [g, v] = cells[j];
      const auto fy = t.pullback1(from.base, to.base, f).object(to.fiber);
      const auto gy = t.pullback1(from.base, to.base, g).object(to.fiber);
      for (be::MorphismId alpha : base.hom(f, g)) {
        const auto a = t.pullback2(from.base, to.base, alpha, to.fiber);
        const auto w = fb.compose1(from.fiber, gy, fy, a, v);
        z[i][j] += static_cast<long>(fb.hom(from.fiber, fy).hom(u, w).size());
      }
    }
  }
  return z;
}

void check_gr_homs(const be::Trihomomorphism& t) {
  const auto gr = be::grothendieck_cg(t);
  const std::size_t n = gr.objects.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CAPTURE(gr.labels[i]);
      CAPTURE(gr.labels[j]);
      CHECK(oracle::rows_of(gr.hom(i, j).zeta) ==
            gr_hom_oracle(t, gr.objects[i], gr.objects[j]));
    }
  }
}

bool contains(const std::string& s, std::string_view part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_SUITE("bifib") {

TEST_CASE("identity on a pseudogroupoid") {
  const auto id = be::LaxFunctorBicat::identity(be::share(fx::psg()));
  const auto r = be::classify_bifibration(id);
  CHECK(r.locally_fibered_in_groupoids);
  CHECK(r.one_lifts);
  CHECK(r.all_1cells_cartesian);
  CHECK(r.fibered_in_pseudogroupoids);
  CHECK(r.cofibered_in_pseudogroupoids);
  const auto fiber = be::fiber_bicategory(id, 0);
  CHECK(fiber.object_count() == 1);
  CHECK(be::pseudogroupoid_euler(fiber) == 1);
}

TEST_CASE("non-cartesian 1-cell") {
  const auto p = fx::acyclic2_collapse();
  const auto cx = be::cartesian_1cell_counterexample(p, 0, 1, 0);
  REQUIRE(cx.has_value());
  CHECK(contains(*cx, "no lift of the frame (g='q', h='i', alpha='e') from '0'"));
  CHECK_FALSE(be::is_cartesian_1cell(p, 0, 1, 0));
  const auto r = be::classify_bifibration(p);
  CHECK_FALSE(r.fibered_in_pseudogroupoids);
  CHECK_FALSE(r.witnesses.empty());
  CHECK_THROWS_AS(be::fiber_bicategory(p, 0), be::Error);
  CHECK_THROWS_AS(be::verify_product_formula_bicat(p), be::Error);
}

TEST_CASE("1-cells without lifts") {
  const auto r = be::classify_bifibration(fx::pt_into_ld_bz2());
  CHECK_FALSE(r.one_lifts);
  CHECK(r.all_1cells_cartesian);
  CHECK_FALSE(r.fibered_in_pseudogroupoids);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("missing horizontal composition is reported") {
  auto d = fx::psg().data();
  d.hcompose2.reset();
  d.associator.reset();
  d.left_unitor.reset();
  d.right_unitor.reset();
  const auto b = be::share(be::Bicategory::validate(d));
  const auto id = be::LaxFunctorBicat::identity(b);
  CHECK_THROWS_AS(be::cartesian_1cell_counterexample(id, 0, 0, 0), be::Error);
}

TEST_CASE("fibers of the Grothendieck projection over ARROW") {
  const auto p = fx::gr_psg_over_arrow();
  const auto r = be::classify_bifibration(p);
  CHECK(r.fibered_in_pseudogroupoids);
  CHECK(r.cofibered_in_pseudogroupoids);
  for (be::ObjectId b = 0; b < p.target().object_count(); ++b) {
    const auto fiber = be::fiber_bicategory(p, b);
    CHECK(be::pseudogroupoid_check(fiber).holds);
    CHECK(be::pseudogroupoid_euler(fiber) == cg_chi(fiber));
  }
  const auto fb = be::verify_fiber_biequivalence(p, 0, 1, 0);
  CHECK(fb.holds);
  CHECK(fb.biequivalence.holds);
  CHECK(fb.chi_source == 2);
  CHECK(fb.chi_target == 2);
  CHECK_THROWS_AS(be::fiber_bicategory(p, 7), be::Error);
}

TEST_CASE("cleavage choice does not change the fiber") {
  const auto p = fx::disjoint_psg();
  for (be::ObjectId b = 0; b < p.target().object_count(); ++b) {
    const auto lo = be::fiber_bicategory(p, b, be::CleavageChoice::kSmallestLabel);
    const auto hi = be::fiber_bicategory(p, b, be::CleavageChoice::kLargestLabel);
    CHECK(cg_chi(lo) == cg_chi(hi));
    CHECK(lo.object_count() == hi.object_count());
  }
}

TEST_CASE("induced trihomomorphisms") {
  const auto t = be::induced_trihomomorphism(fx::two_group_psg());
  const auto gr = be::grothendieck_cg(t);
  CHECK(gr.objects.size() == 2);
  CHECK(gr.hom(0, 0).labels == std::vector<std::string>{"(i,i)"});
  CHECK(oracle::rows_of(gr.hom(0, 0).zeta) == oracle::Rows{{q(4)}});
  check_gr_homs(t);
  check_gr_homs(be::induced_trihomomorphism(fx::gr_psg_over_arrow()));
  check_gr_homs(be::induced_trihomomorphism(fx::disjoint_psg()));
}

TEST_CASE("Grothendieck construction formula on fixtures") {
  for (const auto& p : {fx::gr_psg_over_arrow(), fx::two_group_psg(), fx::psg_collapse(),
                        fx::disjoint_psg()}) {
    const auto r = be::verify_gr_formula_bicat(p);
    CAPTURE(r.equation());
    CHECK(r.holds);
    CHECK(r.product_coweighting_ok);
    CHECK(r.hom_coweightings_ok);
    CHECK(r.chi_total == cg_chi(p.source()));
    be::Rational rhs = 0;
    for (std::size_t b = 0; b < r.fiber_chi.size(); ++b) {
      rhs += r.base_coweighting[b] * r.fiber_chi[b];
    }
    CHECK(r.rhs == rhs);
  }
  CHECK(be::verify_gr_formula_bicat(fx::gr_psg_over_arrow()).equation() == "2 = 1·2 + 0·2");
  CHECK(be::verify_gr_formula_bicat(fx::two_group_psg()).equation() == "4 = 2·2");
}

TEST_CASE("product formula on fixtures") {
  CHECK(be::verify_product_formula_bicat(fx::disjoint_psg()).equation() == "6 = 1·2 + 2·2");
  CHECK(be::verify_product_formula_bicat(fx::psg_collapse()).equation() == "2 = 1·2");
  CHECK(be::verify_product_formula_bicat(fx::gr_psg_over_arrow()).equation() == "2 = 1·2");
  for (const auto& p : {fx::disjoint_psg(), fx::psg_collapse(), fx::gr_psg_over_arrow(),
                        fx::two_group_psg()}) {
    const auto r = be::verify_product_formula_bicat(p);
    CAPTURE(r.equation());
    CHECK(r.holds);
    CHECK(r.grothendieck_matches);
    CHECK(r.chi_total == cg_chi(p.source()));
    be::Rational rhs = 0;
    for (const auto& c : r.components) {
      CHECK(c.fiber_chi_constant);
      CHECK(c.cleavage_independent);
      rhs += c.chi_base * c.chi_fiber;
    }
    CHECK(r.rhs == rhs);
  }
}

TEST_CASE("trihomomorphism validation rejects ill-typed components") {
  auto d = be::induced_trihomomorphism(fx::two_group_psg()).data();
  d.pullback2[0][0][0] = 99;
  CHECK_THROWS_AS(be::Trihomomorphism::validate(d), be::ValidationError);
}

TEST_CASE("property: generated pseudogroupoid fibrations") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    be::gen::Rng rng(seed);
    const auto p =
        be::gen::pseudogroupoid_fibration(rng, static_cast<be::gen::TrihomFamily>(seed % 4), 2);
    CAPTURE(seed);
    const auto c = be::classify_bifibration(p);
    CHECK(c.fibered_in_pseudogroupoids);
    CHECK(c.cofibered_in_pseudogroupoids);
    for (be::ObjectId b = 0; b < p.target().object_count(); ++b) {
      CHECK(be::pseudogroupoid_check(be::fiber_bicategory(p, b)).holds);
    }
    const auto g = be::verify_gr_formula_bicat(p);
    CHECK(g.holds);
    CHECK(g.product_coweighting_ok);
    CHECK(g.hom_coweightings_ok);
    CHECK(g.chi_total == cg_chi(p.source()));
    const auto pr = be::verify_product_formula_bicat(p);
    CHECK(pr.holds);
    CHECK(pr.chi_total == g.chi_total);
    for (const auto& comp : pr.components) {
      CHECK(comp.fiber_chi_constant);
      CHECK(comp.cleavage_independent);
    }
    if (seed < 6) check_gr_homs(be::induced_trihomomorphism(p));
  }
}

}  // TEST_SUITE
