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

#include "bicat_euler/bicategory.hpp"

#include <numeric>

#include "bicat_euler/error.hpp"
#include "bicat_euler/fixtures.hpp"
#include "bicat_euler/generators.hpp"
#include "doctest.h"
#include "support.hpp"

namespace be = bicat_euler;
namespace fx = bicat_euler::fixtures;
using oracle::q;

namespace {

be::CatGraph one_object(const be::CategoryPtr& hom) { return be::CatGraph({"x"}, {hom}); }

be::Rational cg_chi(const be::CatGraph& g) { return *be::euler_char_cg(g).chi; }

// 0 -> 1 -> 2 with hom(0,1) = hom(1,2) = PAIR and hom(0,2) = SPAN; every
// composite lands on the apex of the span.
be::Bicategory pair_span_bicat() {
  const auto pt = fx::pt();
  std::vector<be::CategoryPtr> homs(9, nullptr);
  homs[0] = homs[4] = homs[8] = pt;
  homs[1] = homs[5] = fx::pair();
  homs[2] = fx::span();
  be::BicategoryData d;
  d.graph = be::CatGraph({"0", "1", "2"}, homs);
  d.identity1 = {0, 0, 0};
  d.compose1.resize(27);
  const auto& g = d.graph;
  for (be::ObjectId x = 0; x < 3; ++x) {
    for (be::ObjectId y = 0; y < 3; ++y) {
      for (be::ObjectId z = 0; z < 3; ++z) {
        auto& row = d.compose1[(x * 3 + y) * 3 + z];
        const std::size_t a = g.hom(y, z).object_count();
        const std::size_t b = g.hom(x, y).object_count();
        row.assign(a * b, 0);
        for (std::size_t gi = 0; gi < a; ++gi) {
          for (std::size_t fi = 0; fi < b; ++fi) {
            if (x == y) {
              row[gi * b + fi] = gi;
            } else if (y == z) {
              row[gi * b + fi] = fi;
            }
          }
        }
      }
    }
  }
  return be::Bicategory::validate(std::move(d));
}

be::CatGraph permuted(const be::CatGraph& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.object_count();
  std::vector<std::string> labels(n);
  std::vector<be::CategoryPtr> homs(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = g.object_label(perm[i]);
    for (std::size_t j = 0; j < n; ++j) homs[i * n + j] = g.hom_ptr(perm[i], perm[j]);
  }
  return be::CatGraph(labels, homs);
}

}  // namespace

TEST_SUITE("bicat") {

TEST_CASE("cat-graph similarity matrices") {
  const auto ez2 = fx::ez2_bicat().graph();
  CHECK(oracle::rows_of(be::similarity_matrix_cg(ez2)) ==
        oracle::Rows{{q(1), q(1)}, {q(1), q(1)}});
  CHECK(oracle::rows_of(be::similarity_matrix_cg(one_object(fx::bz2()))) ==
        oracle::Rows{{q(1, 2)}});
  CHECK(oracle::rows_of(be::similarity_matrix_cg(fx::acyclic2().graph())) ==
        oracle::Rows{{q(1), q(1)}, {q(0), q(1)}});
  CHECK(oracle::rows_of(be::similarity_matrix_cg(fx::psg().graph())) ==
        oracle::cg_zeta(fx::psg().graph()));
}

TEST_CASE("cat-graph Euler characteristics") {
  CHECK(cg_chi(fx::ez2_bicat().graph()) == 1);
  CHECK(cg_chi(one_object(fx::bz2())) == 2);
  CHECK(cg_chi(fx::acyclic2().graph()) == 1);
  CHECK(cg_chi(fx::psg().graph()) == 2);
  CHECK(oracle::sum(*oracle::weighting(oracle::cg_zeta(fx::psg().graph()))) == 2);
}

TEST_CASE("empty homs contribute zero") {
  const be::CatGraph g({"a", "b"}, {fx::pt(), nullptr, nullptr, fx::pt()});
  CHECK(oracle::rows_of(be::similarity_matrix_cg(g)) ==
        oracle::Rows{{q(1), q(0)}, {q(0), q(1)}});
  CHECK(cg_chi(g) == 2);
}

TEST_CASE("coproducts and products of cat-graphs") {
  const auto a = one_object(fx::bz2());
  CHECK(cg_chi(be::coproduct_cg({a, a})) == 4);
  CHECK(cg_chi(be::product_cg(a, a)) == 4);
  CHECK(oracle::rows_of(be::similarity_matrix_cg(be::product_cg(a, a))) ==
        oracle::Rows{{q(1, 4)}});
  CHECK(cg_chi(be::coproduct_cg({a, be::CatGraph({}, {})})) == cg_chi(a));
}

TEST_CASE("acyclic bicategories") {
  CHECK(be::is_acyclic_bicat(fx::acyclic2()));
  CHECK_FALSE(be::is_acyclic_bicat(fx::ez2_bicat()));
  CHECK_FALSE(be::is_acyclic_bicat(fx::bz2_2group()));
  CHECK(be::euler_acyclic_bicat(fx::acyclic2()) == 1);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(be::euler_acyclic_bicat(fx::discrete_bicat(n)) == static_cast<long>(n));
  }
  CHECK_THROWS_AS(be::euler_acyclic_bicat(fx::psg()), be::Error);

  const auto b = pair_span_bicat();
  REQUIRE(be::is_acyclic_bicat(b));
  const auto z = be::similarity_matrix_cg(b.graph());
  CHECK(oracle::rows_of(z) ==
        oracle::Rows{{q(1), q(0), q(1)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}});
  CHECK(be::euler_acyclic_bicat(b) == be::invert(z)->entry_sum());
  CHECK(be::euler_acyclic_bicat(b) == 2);
}

TEST_CASE("equivalence classes of objects") {
  const auto ez2 = be::equivalence_classes(fx::ez2_bicat());
  CHECK(ez2.classes.size() == 1);
  CHECK(ez2.size_of(0) == 2);
  CHECK(be::equivalence_classes(fx::discrete_bicat(2)).classes.size() == 2);
  CHECK(be::equivalence_classes(fx::acyclic2()).classes.size() == 2);
  CHECK(be::is_equivalence_1cell(fx::ez2_bicat(), 0, 1, 0));
  CHECK_FALSE(be::is_equivalence_1cell(fx::acyclic2(), 0, 1, 0));
}

TEST_CASE("pseudogroupoids") {
  CHECK(be::pseudogroupoid_check(fx::ez2_bicat()).holds);
  CHECK(be::pseudogroupoid_check(fx::bz2_2group()).holds);
  CHECK(be::pseudogroupoid_check(fx::psg()).holds);
  const auto bad = be::pseudogroupoid_check(fx::acyclic2());
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.witnesses.empty());
  CHECK(be::pseudogroupoid_euler(fx::psg()) == 2);
  CHECK(be::pseudogroupoid_euler(fx::ez2_bicat()) == 1);
  CHECK(be::pseudogroupoid_euler(fx::bz2_2group()) == 2);
  CHECK_THROWS_AS(be::pseudogroupoid_euler(fx::acyclic2()), be::Error);
}

TEST_CASE("biequivalences") {
  CHECK(be::check_biequivalence(be::LaxFunctorBicat::identity(be::share(fx::psg()))).holds);
  CHECK(be::check_biequivalence(fx::pt_into_ez2()).holds);
  const auto no = be::check_biequivalence(fx::point_into_discrete2());
  CHECK_FALSE(no.holds);
  CHECK_FALSE(no.witnesses.empty());

  const auto r = be::verify_biequivalence_invariance(fx::pt_into_ez2());
  CHECK(r.holds);
  CHECK(r.chi_source == 1);
  CHECK(r.chi_target == 1);
  CHECK(r.transported_weighting.entries() == std::vector<be::Rational>{1});

  const auto two = be::verify_biequivalence_invariance(fx::bz2_into_psg());
  CHECK(two.holds);
  CHECK(two.chi_source == 2);
  CHECK(two.chi_target == 2);
  CHECK_THROWS_AS(be::verify_biequivalence_invariance(fx::point_into_discrete2()), be::Error);
}

TEST_CASE("bicategory validation rejects a broken composition table") {
  auto d = fx::psg().data();
  // Composite of the identity 1-cell with itself sent to a non-identity.
  (*d.hcompose2)[0][0] = 1;
  CHECK_THROWS_AS(be::Bicategory::validate(d), be::ValidationError);
}

TEST_CASE("coop reverses homs") {
  const auto c = be::coop(fx::acyclic2());
  CHECK(c.hom(0, 1).object_count() == 0);
  CHECK(c.hom(1, 0).object_count() == 2);
}

TEST_CASE("property: permuting objects leaves chi unchanged") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    be::gen::Rng rng(seed);
    const auto g = be::gen::triangular_catgraph(rng, rng.between(1, 4));
    std::vector<std::size_t> perm(g.object_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    CAPTURE(seed);
    const auto chi = be::euler_char_cg(g).chi;
    REQUIRE(chi);
    CHECK(*chi == *oracle::chi(oracle::cg_zeta(g)));
    CHECK(*be::euler_char_cg(permuted(g, perm)).chi == *chi);
  }
}

TEST_CASE("property: acyclic bicategories") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    be::gen::Rng rng(seed);
    const auto b = fx::locally_discrete(be::gen::acyclic_category(rng, rng.between(1, 6)));
    CAPTURE(seed);
    REQUIRE(be::is_acyclic_bicat(b));
    CHECK(be::solve_weighting(be::similarity_matrix_cg(b.graph())).has_value());
    CHECK(be::euler_acyclic_bicat(b) == *be::euler_char_cg(b.graph()).chi);
  }
}

TEST_CASE("property: connected pseudogroupoids") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    be::gen::Rng rng(seed);
    const auto b = be::gen::connected_pseudogroupoid(rng, rng.between(1, 4));
    CAPTURE(seed);
    CHECK(be::pseudogroupoid_check(b).holds);
    const auto z = oracle::cg_zeta(b.graph());
    const auto common = z[0][0];
    for (const auto& row : z) {
      for (const auto& v : row) CHECK(v == common);
    }
    CHECK(be::pseudogroupoid_euler(b) == 1 / common);
    CHECK(*be::euler_char_cg(b.graph()).chi == 1 / common);
  }
}

TEST_CASE("property: biequivalences preserve chi") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    be::gen::Rng rng(seed);
    const auto b = be::share(be::gen::measurable_bicategory(rng, 3));
    const auto l = be::gen::bicat_thickening(rng, b);
    CAPTURE(seed);
    CHECK(be::check_biequivalence(l).holds);
    const auto r = be::verify_biequivalence_invariance(l);
    CHECK(r.holds);
    CHECK(r.chi_source == r.chi_target);
    const auto zk = be::multiply(be::similarity_matrix_cg(l.source().graph()),
                                 r.transported_weighting);
    for (std::size_t i = 0; i < zk.size(); ++i) CHECK(zk[i] == 1);
  }
}

TEST_CASE("property: coproduct and product of cat-graphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    be::gen::Rng rng(seed);
    const auto a = be::gen::triangular_catgraph(rng, rng.between(1, 3));
    const auto b = be::gen::triangular_catgraph(rng, rng.between(1, 3));
    const auto ca = *be::euler_char_cg(a).chi;
    const auto cb = *be::euler_char_cg(b).chi;
    CAPTURE(seed);
    CHECK(*be::euler_char_cg(be::coproduct_cg({a, b})).chi == ca + cb);
    CHECK(*be::euler_char_cg(be::product_cg(a, b)).chi == ca * cb);
  }
}

}  // TEST_SUITE
