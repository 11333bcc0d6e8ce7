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

#include "bicat_euler/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "bicat_euler/fixtures.hpp"

namespace bicat_euler::gen {

namespace {

namespace fx = bicat_euler::fixtures;

std::string num(std::size_t i) { return std::to_string(i); }

// Free category on a DAG over objects 0..n-1. paths[m] lists the edges of
// morphism m in traversal order; identities have empty paths.
struct FreeDag {
  CategoryPtr category;
  std::vector<std::pair<ObjectId, ObjectId>> edges;
  std::vector<std::vector<std::size_t>> paths;
};

std::size_t count_paths(std::size_t n,
                        const std::vector<std::pair<ObjectId, ObjectId>>& e) {
  // Edges go from lower to higher index, so one pass in index order works.
  std::vector<std::size_t> ending(n, 1);
  std::size_t total = 0;
  for (ObjectId y = 0; y < n; ++y) {
    for (const auto& [a, b] : e) {
      if (b == y) ending[y] += ending[a];
    }
    total += ending[y];
  }
  return total;
}

std::vector<std::pair<ObjectId, ObjectId>> random_dag(Rng& rng, std::size_t n,
                                                      std::size_t max_morphisms) {
  std::vector<std::pair<ObjectId, ObjectId>> candidates;
  for (ObjectId a = 0; a < n; ++a) {
    for (ObjectId b = a + 1; b < n; ++b) {
      candidates.emplace_back(a, b);
      if (rng.chance(1, 4)) candidates.emplace_back(a, b);  // parallel edge
    }
  }
  for (std::size_t i = candidates.size(); i > 1; --i) {
    std::swap(candidates[i - 1], candidates[rng.below(i)]);
  }
  std::vector<std::pair<ObjectId, ObjectId>> edges;
  const std::size_t density = rng.between(1, 3);
  for (const auto& c : candidates) {
    if (!rng.chance(density, 4)) continue;
    edges.push_back(c);
    if (count_paths(n, edges) > max_morphisms) edges.pop_back();
  }
  return edges;
}

std::string path_label(const std::vector<std::size_t>& path) {
  std::string s;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (!s.empty()) s += '.';
    s += "e" + num(*it);
  }
  return s;
}

FreeDag free_dag(Rng& rng, std::size_t n, std::size_t max_morphisms) {
  FreeDag out;
  out.edges = random_dag(rng, n, max_morphisms);
  CategorySpec s;
  for (ObjectId x = 0; x < n; ++x) s.objects.push_back(num(x));
  std::vector<ObjectId> src, dst;
  for (ObjectId x = 0; x < n; ++x) {
    s.morphisms.push_back({"id_" + num(x), num(x), num(x)});
    s.identities.emplace_back(num(x), "id_" + num(x));
    out.paths.emplace_back();
    src.push_back(x);
    dst.push_back(x);
  }
  // Extend paths one edge at a time; the edges are sorted by source in
  // topological order, so breadth-first growth terminates.
  for (std::size_t frontier = 0; frontier < out.paths.size(); ++frontier) {
    for (std::size_t e = 0; e < out.edges.size(); ++e) {
      if (out.edges[e].first != dst[frontier]) continue;
      auto p = out.paths[frontier];
      p.push_back(e);
      out.paths.push_back(p);
      src.push_back(src[frontier]);
      dst.push_back(out.edges[e].second);
    }
  }
  std::map<std::vector<std::size_t>, std::string> by_path;
  for (std::size_t m = n; m < out.paths.size(); ++m) {
    const std::string label = path_label(out.paths[m]);
    by_path[out.paths[m]] = label;
    s.morphisms.push_back({label, num(src[m]), num(dst[m])});
  }
  auto label_of = [&](std::size_t m) {
    return m < n ? "id_" + num(m) : by_path[out.paths[m]];
  };
  for (std::size_t g = 0; g < out.paths.size(); ++g) {
    for (std::size_t f = 0; f < out.paths.size(); ++f) {
      if (src[g] != dst[f]) continue;
      std::string gf;
      if (g < n) {
        gf = label_of(f);
      } else if (f < n) {
        gf = label_of(g);
      } else {
        auto p = out.paths[f];
        p.insert(p.end(), out.paths[g].begin(), out.paths[g].end());
        gf = by_path.at(p);
      }
      s.compositions.push_back({label_of(g), label_of(f), gf});
    }
  }
  out.category = make_category(s);
  return out;
}

CategoryPtr reachability_poset(std::size_t n,
                               const std::vector<std::pair<ObjectId, ObjectId>>& e) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (ObjectId x = 0; x < n; ++x) le[x][x] = true;
  for (const auto& [a, b] : e) le[a][b] = true;
  for (ObjectId k = 0; k < n; ++k) {
    for (ObjectId i = 0; i < n; ++i) {
      for (ObjectId j = 0; j < n; ++j) {
        if (le[i][k] && le[k][j]) le[i][j] = true;
      }
    }
  }
  auto label = [](ObjectId i, ObjectId j) {
    return i == j ? "id_" + num(i) : num(i) + "<" + num(j);
  };
  CategorySpec s;
  for (ObjectId x = 0; x < n; ++x) {
    s.objects.push_back(num(x));
    s.identities.emplace_back(num(x), label(x, x));
  }
  for (ObjectId i = 0; i < n; ++i) {
    for (ObjectId j = 0; j < n; ++j) {
      if (le[i][j]) s.morphisms.push_back({label(i, j), num(i), num(j)});
    }
  }
  for (ObjectId i = 0; i < n; ++i) {
    for (ObjectId j = 0; j < n; ++j) {
      for (ObjectId k = 0; k < n; ++k) {
        if (le[i][j] && le[j][k]) {
          s.compositions.push_back({label(j, k), label(i, j), label(i, k)});
        }
      }
    }
  }
  return make_category(s);
}

CategoryPtr bounded_acyclic(Rng& rng, std::size_t n, std::size_t max_morphisms) {
  if (n <= 1) return fx::pt();
  if (rng.coin()) return free_dag(rng, n, max_morphisms).category;
  // Reachability can only shrink the morphism count of the free category.
  return reachability_poset(n, random_dag(rng, n, max_morphisms));
}

// One object, morphisms e and a with a o a = a.
CategoryPtr idempotent_monoid() {
  CategorySpec s;
  s.objects = {"*"};
  s.morphisms = {{"e", "*", "*"}, {"a", "*", "*"}};
  s.identities = {{"*", "e"}};
  s.compositions = {{"e", "e", "e"}, {"e", "a", "a"}, {"a", "e", "a"},
                    {"a", "a", "a"}};
  return make_category(s);
}

CategoryPtr atom(Rng& rng) {
  switch (rng.below(4)) {
    case 0:
      return bounded_acyclic(rng, rng.between(1, 3), 5);
    case 1:
      return fx::cyclic_group(rng.between(1, 3));
    case 2:
      return rng.coin() ? fx::indiscrete({"a", "b"}) : fx::discrete({"a", "b"});
    default:
      return idempotent_monoid();
  }
}

// Group part of a fiber S x BZ/m.
struct FiberShape {
  std::size_t size;
  bool indiscrete;
  std::size_t m;
};

std::string fiber_morphism(std::size_t s, std::size_t t, std::size_t k) {
  return "x" + num(s) + ">x" + num(t) + "#" + num(k);
}

CategoryPtr groupoid_fiber(const FiberShape& f) {
  CategorySpec s;
  for (std::size_t x = 0; x < f.size; ++x) s.objects.push_back("x" + num(x));
  auto linked = [&](std::size_t a, std::size_t b) {
    return f.indiscrete || a == b;
  };
  for (std::size_t a = 0; a < f.size; ++a) {
    s.identities.emplace_back("x" + num(a), fiber_morphism(a, a, 0));
    for (std::size_t b = 0; b < f.size; ++b) {
      if (!linked(a, b)) continue;
      for (std::size_t k = 0; k < f.m; ++k) {
        s.morphisms.push_back({fiber_morphism(a, b, k), "x" + num(a), "x" + num(b)});
      }
    }
  }
  for (std::size_t a = 0; a < f.size; ++a) {
    for (std::size_t b = 0; b < f.size; ++b) {
      for (std::size_t c = 0; c < f.size; ++c) {
        if (!linked(a, b) || !linked(b, c)) continue;
        for (std::size_t k = 0; k < f.m; ++k) {
          for (std::size_t l = 0; l < f.m; ++l) {
            s.compositions.push_back({fiber_morphism(b, c, l),
                                      fiber_morphism(a, b, k),
                                      fiber_morphism(a, c, (k + l) % f.m)});
          }
        }
      }
    }
  }
  return make_category(s);
}

// Functor between groupoid fibers: objects by sigma, group part times r.
struct FiberMap {
  std::vector<std::size_t> sigma;
  std::size_t r = 1;
};

// (g after f) as maps of fibers.
FiberMap then(const FiberMap& f, const FiberMap& g, std::size_t m) {
  FiberMap out;
  for (std::size_t s : f.sigma) out.sigma.push_back(g.sigma[s]);
  out.r = (f.r * g.r) % m;
  return out;
}

Functor realize(const FiberMap& map, const CategoryPtr& from,
                const CategoryPtr& to, const FiberShape& from_shape) {
  std::vector<ObjectId> om(map.sigma.begin(), map.sigma.end());
  std::vector<MorphismId> mm;
  for (MorphismId f = 0; f < from->morphism_count(); ++f) {
    // Labels are x<s>>x<t>#<k>.
    const std::string& l = from->morphism_label(f);
    const auto gt = l.find('>');
    const auto hash = l.find('#');
    const std::size_t s = std::stoul(l.substr(1, gt - 1));
    const std::size_t t = std::stoul(l.substr(gt + 2, hash - gt - 2));
    const std::size_t k = std::stoul(l.substr(hash + 1));
    mm.push_back(*to->find_morphism(fiber_morphism(
        map.sigma[s], map.sigma[t], (k * map.r) % from_shape.m)));
  }
  return Functor::validate(from, to, std::move(om), std::move(mm));
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

Bicategory thicken(const Bicategory& b, const std::vector<std::size_t>& copies,
                   std::vector<ObjectId>* origin) {
  const std::size_t n = b.object_count();
  std::vector<std::string> labels;
  origin->clear();
  for (ObjectId x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < copies[x]; ++i) {
      labels.push_back(copies[x] == 1 ? b.object_label(x)
                                      : b.object_label(x) + ":" + num(i));
      origin->push_back(x);
    }
  }
  const std::size_t N = labels.size();
  const auto& o = *origin;
  const auto& d = b.data();
  std::vector<CategoryPtr> homs;
  std::map<std::pair<ObjectId, ObjectId>, Functor> models;
  for (ObjectId x = 0; x < N; ++x) {
    for (ObjectId y = 0; y < N; ++y) {
      homs.push_back(b.hom_ptr(o[x], o[y]));
      if (const auto& m = b.graph().model(o[x], o[y])) models.emplace(std::pair{x, y}, *m);
    }
  }
  BicategoryData t;
  t.graph = CatGraph(labels, homs, models);
  for (ObjectId x = 0; x < N; ++x) t.identity1.push_back(b.identity1(o[x]));
  auto k3 = [](std::size_t n, ObjectId x, ObjectId y, ObjectId z) {
    return (x * n + y) * n + z;
  };
  t.compose1.resize(N * N * N);
  if (d.hcompose2) t.hcompose2.emplace(N * N * N);
  for (ObjectId x = 0; x < N; ++x) {
    for (ObjectId y = 0; y < N; ++y) {
      for (ObjectId z = 0; z < N; ++z) {
        const std::size_t from = k3(n, o[x], o[y], o[z]);
        t.compose1[k3(N, x, y, z)] = d.compose1[from];
        if (d.hcompose2) (*t.hcompose2)[k3(N, x, y, z)] = (*d.hcompose2)[from];
      }
    }
  }
  if (d.associator) {
    t.associator.emplace(N * N * N * N);
    for (ObjectId x = 0; x < N; ++x) {
      for (ObjectId y = 0; y < N; ++y) {
        for (ObjectId z = 0; z < N; ++z) {
          for (ObjectId w = 0; w < N; ++w) {
            (*t.associator)[k3(N, x, y, z) * N + w] =
                (*d.associator)[k3(n, o[x], o[y], o[z]) * n + o[w]];
          }
        }
      }
    }
  }
  auto copy_unitor = [&](const auto& from, auto& to) {
    if (!from) return;
    to.emplace(N * N);
    for (ObjectId x = 0; x < N; ++x) {
      for (ObjectId y = 0; y < N; ++y) (*to)[x * N + y] = (*from)[o[x] * n + o[y]];
    }
  };
  copy_unitor(d.left_unitor, t.left_unitor);
  copy_unitor(d.right_unitor, t.right_unitor);
  return Bicategory::validate(std::move(t));
}

BicatPtr small_pseudogroupoid(Rng& rng, std::size_t objects, std::size_t max_hom) {
  const std::size_t m = rng.between(1, std::min<std::size_t>(2, max_hom));
  return share(cyclic_pseudogroupoid(rng.between(1, objects), m, rng.between(1, 2)));
}

}  // namespace

QMatrix random_matrix(Rng& rng, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("r" + num(i));
  std::vector<Rational> e(n * n);
  for (auto& q : e) {
    const long v = static_cast<long>(rng.below(7)) - 2;
    q = rng.chance(1, 5) ? Rational(v, 2) : Rational(v);
  }
  if (n > 1 && rng.chance(1, 5)) {
    // Duplicate a row to force singularity.
    const std::size_t a = rng.below(n);
    const std::size_t b = (a + 1 + rng.below(n - 1)) % n;
    for (std::size_t j = 0; j < n; ++j) e[b * n + j] = e[a * n + j];
  }
  return QMatrix::square(std::move(labels), std::move(e));
}

CategoryPtr acyclic_category(Rng& rng, std::size_t objects) {
  return bounded_acyclic(rng, std::min<std::size_t>(objects, 10), 60);
}

CategoryPtr small_category(Rng& rng) {
  switch (rng.below(4)) {
    case 0:
      return bounded_acyclic(rng, rng.between(1, 5), 16);
    case 1:
      return share(coproduct({atom(rng), atom(rng)}));
    case 2: {
      const CategoryPtr a = atom(rng);
      const CategoryPtr b = atom(rng);
      if (a->morphism_count() * b->morphism_count() <= 16) {
        return share(product(*a, *b));
      }
      return a;
    }
    default:
      return atom(rng);
  }
}

Functor thickening(Rng& rng, const CategoryPtr& c) {
  const std::size_t n = c->object_count();
  std::vector<std::size_t> copies(n);
  for (auto& k : copies) k = rng.between(1, 3);
  auto obj = [&](ObjectId x, std::size_t i) {
    return c->object_label(x) + ":" + num(i);
  };
  auto mor = [&](MorphismId m, std::size_t i, std::size_t j) {
    return c->morphism_label(m) + ":" + num(i) + ":" + num(j);
  };
  CategorySpec s;
  std::vector<ObjectId> om;
  std::vector<MorphismId> mm;
  for (ObjectId x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < copies[x]; ++i) {
      s.objects.push_back(obj(x, i));
      s.identities.emplace_back(obj(x, i), mor(c->identity(x), i, i));
      om.push_back(x);
    }
  }
  for (MorphismId m = 0; m < c->morphism_count(); ++m) {
    const ObjectId x = c->src(m);
    const ObjectId y = c->dst(m);
    for (std::size_t i = 0; i < copies[x]; ++i) {
      for (std::size_t j = 0; j < copies[y]; ++j) {
        s.morphisms.push_back({mor(m, i, j), obj(x, i), obj(y, j)});
        mm.push_back(m);
      }
    }
  }
  for (MorphismId g = 0; g < c->morphism_count(); ++g) {
    for (MorphismId f = 0; f < c->morphism_count(); ++f) {
      if (c->src(g) != c->dst(f)) continue;
      const MorphismId gf = c->compose(g, f);
      for (std::size_t i = 0; i < copies[c->src(f)]; ++i) {
        for (std::size_t j = 0; j < copies[c->dst(f)]; ++j) {
          for (std::size_t k = 0; k < copies[c->dst(g)]; ++k) {
            s.compositions.push_back({mor(g, j, k), mor(f, i, j), mor(gf, i, k)});
          }
        }
      }
    }
  }
  const CategoryPtr e = make_category(s);
  // make_category keeps the listed morphism order, so mm lines up.
  return Functor::validate(e, c, std::move(om), std::move(mm));
}

CatGraph triangular_catgraph(Rng& rng, std::size_t objects) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < objects; ++i) labels.push_back(num(i));
  std::vector<CategoryPtr> homs(objects * objects);
  for (ObjectId x = 0; x < objects; ++x) {
    switch (rng.below(3)) {
      case 0:
        homs[x * objects + x] = fx::pt();
        break;
      case 1:
        homs[x * objects + x] = fx::cyclic_group(rng.between(2, 3));
        break;
      default:
        homs[x * objects + x] = idempotent_monoid();
    }
    for (ObjectId y = x + 1; y < objects; ++y) {
      if (rng.chance(2, 3)) homs[x * objects + y] = atom(rng);
    }
  }
  return CatGraph(labels, homs);
}

LaxFunctorToCat groupoid_laxcat(Rng& rng, std::size_t base_objects) {
  const std::size_t m = rng.between(1, 3);
  const bool indiscrete = rng.coin();
  if (base_objects <= 1 && rng.coin()) {
    // Cyclic group base acting by sigma and by a unit r with r^n = 1.
    const std::size_t n = rng.between(2, 3);
    const FiberShape shape{rng.between(1, 2), indiscrete, m};
    FiberMap g;
    g.sigma.resize(shape.size);
    std::iota(g.sigma.begin(), g.sigma.end(), 0);
    if (shape.size == 2 && n % 2 == 0 && rng.coin()) std::swap(g.sigma[0], g.sigma[1]);
    g.r = 1 % m;
    if (m == 3 && n % 2 == 0 && rng.coin()) g.r = 2;
    const CategoryPtr base = fx::cyclic_group(n);
    const CategoryPtr fiber = groupoid_fiber(shape);
    std::vector<Functor> pullbacks;
    FiberMap power{g.sigma, 1 % m};
    std::iota(power.sigma.begin(), power.sigma.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
      pullbacks.push_back(realize(power, fiber, fiber, shape));
      power = then(power, g, m);
    }
    return LaxFunctorToCat::validate(base, {fiber}, std::move(pullbacks),
                                     std::nullopt);
  }
  const std::size_t n = std::max<std::size_t>(base_objects, 1);
  const FreeDag dag = free_dag(rng, n, 8);
  const std::size_t common = rng.between(1, 2);
  std::vector<FiberShape> shapes;
  std::vector<CategoryPtr> fibers;
  for (ObjectId b = 0; b < n; ++b) {
    shapes.push_back({indiscrete ? rng.between(1, 2) : common, indiscrete, m});
    fibers.push_back(groupoid_fiber(shapes.back()));
  }
  // Edge a -> b pulls F b back to F a.
  std::vector<FiberMap> edge_maps;
  for (const auto& [a, b] : dag.edges) {
    FiberMap f;
    if (indiscrete) {
      for (std::size_t y = 0; y < shapes[b].size; ++y) {
        f.sigma.push_back(rng.below(shapes[a].size));
      }
    } else {
      f.sigma = random_permutation(rng, common);
    }
    f.r = (m == 3 && rng.coin()) ? 2 : 1 % m;
    edge_maps.push_back(f);
  }
  std::vector<Functor> pullbacks;
  const FinCategory& base = *dag.category;
  for (MorphismId f = 0; f < base.morphism_count(); ++f) {
    const ObjectId c = base.dst(f);
    FiberMap map;
    map.sigma.resize(shapes[c].size);
    std::iota(map.sigma.begin(), map.sigma.end(), 0);
    map.r = 1 % m;
    // Path e1 ... ek pulls back along ek first.
    const auto& path = dag.paths[f];
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      map = then(map, edge_maps[*it], m);
    }
    pullbacks.push_back(realize(map, fibers[c], fibers[base.src(f)], shapes[c]));
  }
  return LaxFunctorToCat::validate(dag.category, std::move(fibers),
                                   std::move(pullbacks), std::nullopt);
}

Bicategory connected_pseudogroupoid(Rng& rng, std::size_t objects) {
  const std::size_t top = std::max<std::size_t>(objects, 1);
  switch (rng.below(4)) {
    case 0: {
      // Product with a one-object 2-group or a two-object factor.
      const std::size_t m = rng.between(1, 2);
      const Bicategory a = cyclic_pseudogroupoid(rng.between(1, top), m, rng.between(1, 2));
      const Bicategory b = rng.coin() ? one_object_2group(rng.between(2, 3))
                                      : cyclic_pseudogroupoid(1, 2, 1);
      return product_bicat(a, b);
    }
    case 1: {
      const BicatPtr base = share(cyclic_pseudogroupoid(1, rng.between(1, 2),
                                                        rng.between(1, 3)));
      std::vector<std::size_t> copies{rng.between(1, std::min<std::size_t>(top, 3))};
      std::vector<ObjectId> origin;
      return thicken(*base, copies, &origin);
    }
    default:
      return cyclic_pseudogroupoid(rng.between(1, top), rng.between(1, 3),
                                   rng.between(1, 4));
  }
}

Bicategory measurable_bicategory(Rng& rng, std::size_t objects) {
  const std::size_t top = std::max<std::size_t>(objects, 1);
  switch (rng.below(3)) {
    case 0:
      return connected_pseudogroupoid(rng, top);
    case 1:
      return fx::locally_discrete(bounded_acyclic(rng, rng.between(1, top), 8));
    default: {
      const BicatPtr a = share(connected_pseudogroupoid(rng, 1));
      const BicatPtr b =
          share(fx::locally_discrete(bounded_acyclic(rng, rng.between(1, 2), 4)));
      return coproduct_bicat({a, b});
    }
  }
}

LaxFunctorBicat bicat_thickening(Rng& rng, const BicatPtr& b) {
  std::vector<std::size_t> copies(b->object_count());
  for (auto& k : copies) k = rng.between(1, 2);
  std::vector<ObjectId> origin;
  const BicatPtr thick = share(thicken(*b, copies, &origin));
  std::vector<Functor> homs;
  for (ObjectId x = 0; x < origin.size(); ++x) {
    for (ObjectId y = 0; y < origin.size(); ++y) {
      homs.push_back(Functor::identity(thick->hom_ptr(x, y)));
    }
  }
  return LaxFunctorBicat::validate(thick, b, origin, std::move(homs), std::nullopt);
}

LaxFunctorBicat pseudogroupoid_fibration(Rng& rng, TrihomFamily family,
                                         std::size_t size) {
  const std::size_t top = std::clamp<std::size_t>(size, 1, 3);
  switch (family) {
    case TrihomFamily::kConstant: {
      BicatPtr base;
      if (rng.coin()) {
        base = share(fx::locally_discrete(bounded_acyclic(rng, rng.between(1, top), 3)));
      } else {
        base = share(cyclic_pseudogroupoid(rng.between(1, 2), 1, rng.between(1, 2)));
      }
      return product_projection(base, small_pseudogroupoid(rng, 2, 2));
    }
    case TrihomFamily::kTwoGroup: {
      const std::size_t a = rng.between(1, 2);
      const std::size_t n = a * rng.between(1, 2);
      const BicatPtr source =
          share(cyclic_pseudogroupoid(rng.between(1, top), rng.between(1, 2), n));
      return two_group_quotient(source, share(one_object_2group(a)));
    }
    case TrihomFamily::kCollapse:
      return collapse_to_point(share(connected_pseudogroupoid(rng, top)));
    case TrihomFamily::kDisjoint:
    default: {
      const auto first = static_cast<TrihomFamily>(rng.below(3));
      const auto second = static_cast<TrihomFamily>(rng.below(3));
      return coproduct_lax_functor({pseudogroupoid_fibration(rng, first, 1),
                                    pseudogroupoid_fibration(rng, second, 1)});
    }
  }
}

}  // namespace bicat_euler::gen
