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

#include "bicat_euler/fixtures.hpp"

#include <map>
#include <set>

namespace bicat_euler::fixtures {

namespace {

// Adds "id_x" identities for every object and the composites that the
// identity laws force.
CategorySpec with_identities(CategorySpec s) {
  std::map<std::string, std::string> id_of;
  for (const auto& [obj, id] : s.identities) id_of[obj] = id;
  std::vector<MorphismSpec> ids;
  for (const auto& o : s.objects) {
    if (id_of.count(o)) continue;
    id_of[o] = "id_" + o;
    ids.push_back({"id_" + o, o, o});
    s.identities.emplace_back(o, "id_" + o);
  }
  s.morphisms.insert(s.morphisms.begin(), ids.begin(), ids.end());
  std::set<std::pair<std::string, std::string>> have;
  for (const auto& c : s.compositions) have.insert({c[0], c[1]});
  const auto morphisms = s.morphisms;
  for (const auto& m : morphisms) {
    const std::string& before = id_of[m.src];
    const std::string& after = id_of[m.dst];
    if (have.insert({m.id, before}).second) {
      s.compositions.push_back({m.id, before, m.id});
    }
    if (have.insert({after, m.id}).second) {
      s.compositions.push_back({after, m.id, m.id});
    }
  }
  return s;
}

CategoryPtr build(CategorySpec s) { return make_category(with_identities(std::move(s))); }

std::string group_label(std::size_t k) {
  if (k == 0) return "e";
  if (k == 1) return "g";
  return "g" + std::to_string(k);
}

Functor functor(const CategoryPtr& src, const CategoryPtr& dst,
                const std::vector<std::string>& objects,
                const std::vector<std::string>& morphisms) {
  std::vector<ObjectId> om;
  std::vector<MorphismId> mm;
  for (const auto& o : objects) om.push_back(*dst->find_object(o));
  for (const auto& m : morphisms) mm.push_back(*dst->find_morphism(m));
  return Functor::validate(src, dst, std::move(om), std::move(mm));
}

}  // namespace

CategoryPtr pt() {
  static const CategoryPtr c = build({{"*"}, {}, {}, {}});
  return c;
}

CategoryPtr d2() {
  static const CategoryPtr c = build({{"x", "y"}, {}, {}, {}});
  return c;
}

CategoryPtr arrow() {
  static const CategoryPtr c = build({{"0", "1"}, {{"a", "0", "1"}}, {}, {}});
  return c;
}

CategoryPtr pair() {
  static const CategoryPtr c =
      build({{"0", "1"}, {{"a", "0", "1"}, {"b", "0", "1"}}, {}, {}});
  return c;
}

CategoryPtr span() {
  static const CategoryPtr c = build(
      {{"0", "1", "2"}, {{"p", "0", "1"}, {"q", "0", "2"}}, {}, {}});
  return c;
}

CategoryPtr bz2() {
  static const CategoryPtr c = cyclic_group(2);
  return c;
}

CategoryPtr ez2() {
  static const CategoryPtr c = indiscrete({"x", "y"});
  return c;
}

CategoryPtr discrete(const std::vector<std::string>& objects) {
  return build({objects, {}, {}, {}});
}

CategoryPtr indiscrete(const std::vector<std::string>& objects) {
  CategorySpec s;
  s.objects = objects;
  for (const auto& x : objects) {
    for (const auto& y : objects) s.morphisms.push_back({x + ">" + y, x, y});
    s.identities.emplace_back(x, x + ">" + x);
  }
  for (const auto& x : objects) {
    for (const auto& y : objects) {
      for (const auto& z : objects) {
        s.compositions.push_back({y + ">" + z, x + ">" + y, x + ">" + z});
      }
    }
  }
  return make_category(s);
}

CategoryPtr cyclic_group(std::size_t n) {
  CategorySpec s;
  s.objects = {"*"};
  for (std::size_t k = 0; k < n; ++k) s.morphisms.push_back({group_label(k), "*", "*"});
  s.identities = {{"*", "e"}};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      s.compositions.push_back(
          {group_label(a), group_label(b), group_label((a + b) % n)});
    }
  }
  return make_category(s);
}

Functor ez2_to_bz2() {
  return functor(ez2(), bz2(), {"*", "*"}, {"e", "g", "g", "e"});
}

Functor d2_to_arrow() {
  return functor(d2(), arrow(), {"0", "1"}, {"id_0", "id_1"});
}

Functor arrow_to_pt() {
  return functor(arrow(), pt(), {"*", "*"}, {"id_*", "id_*", "id_*"});
}

LaxFunctorToCat arrow_base_laxcat() {
  const CategoryPtr base = arrow();
  std::vector<Functor> pullbacks;
  for (MorphismId m = 0; m < base->morphism_count(); ++m) {
    const std::string& l = base->morphism_label(m);
    if (l == "id_0") pullbacks.push_back(Functor::identity(d2()));
    if (l == "id_1") pullbacks.push_back(Functor::identity(pt()));
    if (l == "a") pullbacks.push_back(functor(pt(), d2(), {"x"}, {"id_x"}));
  }
  return LaxFunctorToCat::validate(base, {d2(), pt()}, std::move(pullbacks),
                                   std::nullopt);
}

LaxFunctorToCat bz2_swap_laxcat() {
  const CategoryPtr base = bz2();
  const Functor swap = functor(d2(), d2(), {"y", "x"}, {"id_y", "id_x"});
  return LaxFunctorToCat::validate(
      base, {d2()}, {Functor::identity(d2()), swap}, std::nullopt);
}

Bicategory locally_discrete(const CategoryPtr& c) {
  const std::size_t n = c->object_count();
  std::vector<CategoryPtr> homs(n * n);
  // Position of each morphism inside its hom-set.
  std::vector<ObjectId> slot(c->morphism_count());
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      std::vector<std::string> labels;
      for (MorphismId m : c->hom(x, y)) {
        slot[m] = labels.size();
        labels.push_back(c->morphism_label(m));
      }
      if (!labels.empty()) homs[x * n + y] = discrete(labels);
    }
  }
  BicategoryData d;
  d.graph = CatGraph(c->object_labels(), homs);
  for (ObjectId x = 0; x < n; ++x) d.identity1.push_back(slot[c->identity(x)]);
  d.compose1.resize(n * n * n);
  d.hcompose2.emplace(n * n * n);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      for (ObjectId z = 0; z < n; ++z) {
        auto& row = d.compose1[(x * n + y) * n + z];
        for (MorphismId g : c->hom(y, z)) {
          for (MorphismId f : c->hom(x, y)) {
            row.push_back(slot[c->compose(g, f)]);
          }
        }
        // A discrete hom has its identities indexed like its objects.
        (*d.hcompose2)[(x * n + y) * n + z] = row;
      }
    }
  }
  d.associator.emplace(n * n * n * n);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      for (ObjectId z = 0; z < n; ++z) {
        for (ObjectId w = 0; w < n; ++w) {
          auto& row = (*d.associator)[((x * n + y) * n + z) * n + w];
          for (MorphismId h : c->hom(z, w)) {
            for (MorphismId g : c->hom(y, z)) {
              for (MorphismId f : c->hom(x, y)) {
                row.push_back(slot[c->compose(h, c->compose(g, f))]);
              }
            }
          }
        }
      }
    }
  }
  d.left_unitor.emplace(n * n);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      for (MorphismId f : c->hom(x, y)) {
        (*d.left_unitor)[x * n + y].push_back(slot[f]);
      }
    }
  }
  d.right_unitor = d.left_unitor;
  return Bicategory::validate(std::move(d));
}

Bicategory bpt() { return one_object_2group(1); }

Bicategory psg() { return cyclic_pseudogroupoid(2, 1, 2); }

Bicategory ez2_bicat() { return locally_discrete(ez2()); }

Bicategory acyclic2() {
  const CategoryPtr self0 = discrete({"i0"});
  const CategoryPtr self1 = discrete({"i1"});
  const CategoryPtr hom01 = make_category(with_identities(
      {{"p", "q"}, {{"a", "p", "q"}}, {}, {}}));
  BicategoryData d;
  d.graph = CatGraph({"0", "1"}, {self0, hom01, nullptr, self1});
  d.identity1 = {0, 0};
  // Triples (x, y, z) over {0, 1}; only those avoiding hom(1, 0) are
  // nonempty.
  d.compose1.resize(8);
  d.hcompose2.emplace(8);
  d.compose1[0] = {0};        // 0 0 0
  d.compose1[1] = {0, 1};     // 0 0 1: p o i0, q o i0
  d.compose1[3] = {0, 1};     // 0 1 1: i1 o p, i1 o q
  d.compose1[7] = {0};        // 1 1 1
  const FinCategory& h = *hom01;
  const MorphismId id_p = h.identity(0), id_q = h.identity(1);
  const MorphismId a = *h.find_morphism("a");
  std::vector<MorphismId> whisker(3);
  whisker[id_p] = id_p;
  whisker[id_q] = id_q;
  whisker[a] = a;
  (*d.hcompose2)[0] = {0};
  (*d.hcompose2)[1] = whisker;
  (*d.hcompose2)[3] = whisker;
  (*d.hcompose2)[7] = {0};
  d.associator.emplace(16);
  (*d.associator)[0] = {0};                  // 0 0 0 0
  (*d.associator)[1] = {id_p, id_q};         // 0 0 0 1
  (*d.associator)[3] = {id_p, id_q};         // 0 0 1 1
  (*d.associator)[7] = {id_p, id_q};         // 0 1 1 1
  (*d.associator)[15] = {0};                 // 1 1 1 1
  d.left_unitor.emplace(4);
  (*d.left_unitor)[0] = {0};
  (*d.left_unitor)[1] = {id_p, id_q};
  (*d.left_unitor)[3] = {0};
  d.right_unitor = d.left_unitor;
  return Bicategory::validate(std::move(d));
}

Bicategory bz2_2group() { return one_object_2group(2); }

Bicategory arrow_ld() { return locally_discrete(arrow()); }

Bicategory discrete_bicat(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return locally_discrete(discrete(labels));
}

LaxFunctorBicat psg_collapse() { return collapse_to_point(share(psg())); }

LaxFunctorBicat gr_psg_over_arrow() {
  return product_projection(share(arrow_ld()), share(psg()));
}

LaxFunctorBicat two_group_psg() {
  return two_group_quotient(share(cyclic_pseudogroupoid(2, 1, 4)),
                            share(bz2_2group()));
}

LaxFunctorBicat disjoint_psg() {
  return coproduct_lax_functor({gr_psg_over_arrow(), two_group_psg()});
}

namespace {

// Sends each object x to object_map[x]; every hom functor is the unique
// functor between the given one-object-one-morphism homs, or an
// index-preserving one otherwise.
LaxFunctorBicat by_index(const BicatPtr& source, const BicatPtr& target,
                         std::vector<ObjectId> object_map) {
  const std::size_t n = source->object_count();
  std::vector<Functor> homs;
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      const FinCategory& h = source->hom(x, y);
      std::vector<ObjectId> om(h.object_count());
      std::vector<MorphismId> mm(h.morphism_count());
      for (ObjectId i = 0; i < om.size(); ++i) om[i] = i;
      for (MorphismId i = 0; i < mm.size(); ++i) mm[i] = i;
      homs.push_back(Functor::validate(
          source->hom_ptr(x, y),
          target->hom_ptr(object_map[x], object_map[y]), std::move(om),
          std::move(mm)));
    }
  }
  return LaxFunctorBicat::validate(source, target, std::move(object_map),
                                   std::move(homs), std::nullopt);
}

}  // namespace

LaxFunctorBicat pt_into_ez2() {
  return by_index(share(bpt()), share(ez2_bicat()), {0});
}

LaxFunctorBicat point_into_discrete2() {
  return by_index(share(discrete_bicat(1)), share(discrete_bicat(2)), {0});
}

LaxFunctorBicat pt_into_ld_bz2() {
  return by_index(share(bpt()), share(locally_discrete(bz2())), {0});
}

LaxFunctorBicat acyclic2_collapse() {
  return collapse_to_point(share(acyclic2()));
}

LaxFunctorBicat bz2_into_psg() {
  return by_index(share(bz2_2group()), share(psg()), {0});
}

}  // namespace bicat_euler::fixtures
