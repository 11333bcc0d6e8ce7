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
#include <map>
#include <numeric>
#include <set>

namespace bicat_euler {

namespace {

struct Indexed {
  std::unordered_map<std::string, ObjectId> objects;
  std::unordered_map<std::string, MorphismId> morphisms;
  std::vector<ObjectId> src, dst;
  std::vector<std::optional<MorphismId>> identities;
  std::map<std::pair<MorphismId, MorphismId>, MorphismId> compose;
};

std::string quote(const std::string& s) { return "'" + s + "'"; }

// Structural pass: labels, endpoints, identities and table entries. Laws
// are checked separately once this pass is clean.
Indexed index_spec(const CategorySpec& spec, std::vector<Violation>& out) {
  Indexed ix;
  for (ObjectId x = 0; x < spec.objects.size(); ++x) {
    if (!ix.objects.emplace(spec.objects[x], x).second) {
      out.push_back({ViolationKind::kDuplicateLabel,
                     "object " + quote(spec.objects[x]) + " declared twice"});
    }
  }
  for (MorphismId m = 0; m < spec.morphisms.size(); ++m) {
    const auto& ms = spec.morphisms[m];
    if (!ix.morphisms.emplace(ms.id, m).second) {
      out.push_back({ViolationKind::kDuplicateLabel,
                     "morphism " + quote(ms.id) + " declared twice"});
    }
    auto s = ix.objects.find(ms.src);
    auto d = ix.objects.find(ms.dst);
    if (s == ix.objects.end() || d == ix.objects.end()) {
      out.push_back({ViolationKind::kDanglingEndpoint,
                     "morphism " + quote(ms.id) +
                         " has an undeclared endpoint"});
    }
    ix.src.push_back(s == ix.objects.end() ? 0 : s->second);
    ix.dst.push_back(d == ix.objects.end() ? 0 : d->second);
  }
  ix.identities.assign(spec.objects.size(), std::nullopt);
  for (const auto& [obj, mor] : spec.identities) {
    auto x = ix.objects.find(obj);
    auto m = ix.morphisms.find(mor);
    if (x == ix.objects.end() || m == ix.morphisms.end()) {
      out.push_back({ViolationKind::kDanglingEndpoint,
                     "identity entry (" + quote(obj) + ", " + quote(mor) +
                         ") references an undeclared cell"});
      continue;
    }
    if (ix.identities[x->second]) {
      out.push_back({ViolationKind::kDuplicateLabel,
                     "object " + quote(obj) + " has two identities"});
      continue;
    }
    if (ix.src[m->second] != x->second || ix.dst[m->second] != x->second) {
      out.push_back({ViolationKind::kDanglingEndpoint,
                     "identity " + quote(mor) + " of " + quote(obj) +
                         " is not an endomorphism of " + quote(obj)});
    }
    ix.identities[x->second] = m->second;
  }
  for (ObjectId x = 0; x < spec.objects.size(); ++x) {
    if (!ix.identities[x]) {
      out.push_back({ViolationKind::kMissingIdentity,
                     "object " + quote(spec.objects[x]) +
                         " has no identity"});
    }
  }
  for (const auto& [g, f, gf] : spec.compositions) {
    auto gi = ix.morphisms.find(g);
    auto fi = ix.morphisms.find(f);
    auto hi = ix.morphisms.find(gf);
    if (gi == ix.morphisms.end() || fi == ix.morphisms.end() ||
        hi == ix.morphisms.end()) {
      out.push_back({ViolationKind::kDanglingEndpoint,
                     "composite (" + quote(g) + ", " + quote(f) + ") -> " +
                         quote(gf) + " references an undeclared morphism"});
      continue;
    }
    const auto G = gi->second, F = fi->second, H = hi->second;
    if (ix.src[G] != ix.dst[F]) {
      out.push_back({ViolationKind::kCompositeEndpoint,
                     "composite (" + quote(g) + ", " + quote(f) +
                         ") given for a non-composable pair"});
      continue;
    }
    if (ix.src[H] != ix.src[F] || ix.dst[H] != ix.dst[G]) {
      out.push_back({ViolationKind::kCompositeEndpoint,
                     "composite " + quote(g) + " o " + quote(f) + " = " +
                         quote(gf) + " has wrong endpoints"});
      continue;
    }
    if (!ix.compose.emplace(std::pair{G, F}, H).second) {
      out.push_back({ViolationKind::kDuplicateComposite,
                     "composite " + quote(g) + " o " + quote(f) +
                         " given twice"});
    }
  }
  return ix;
}

void check_laws(const CategorySpec& spec, const Indexed& ix,
                std::vector<Violation>& out) {
  const std::size_t n = spec.objects.size();
  const std::size_t m = spec.morphisms.size();
  std::vector<std::vector<MorphismId>> into(n), from(n);
  for (MorphismId i = 0; i < m; ++i) {
    into[ix.dst[i]].push_back(i);
    from[ix.src[i]].push_back(i);
  }
  const auto& label = [&](MorphismId i) { return quote(spec.morphisms[i].id); };
  bool total = true;
  for (MorphismId f = 0; f < m; ++f) {
    for (MorphismId g : from[ix.dst[f]]) {
      if (!ix.compose.contains({g, f})) {
        total = false;
        out.push_back({ViolationKind::kMissingComposite,
                       "no composite for " + label(g) + " o " + label(f)});
      }
    }
  }
  if (!total) return;
  for (MorphismId f = 0; f < m; ++f) {
    const MorphismId left = *ix.identities[ix.dst[f]];
    const MorphismId right = *ix.identities[ix.src[f]];
    if (ix.compose.at({left, f}) != f || ix.compose.at({f, right}) != f) {
      out.push_back({ViolationKind::kIdentityLaw,
                     "identity law fails for " + label(f)});
    }
  }
  for (MorphismId f = 0; f < m; ++f) {
    for (MorphismId g : from[ix.dst[f]]) {
      const MorphismId gf = ix.compose.at({g, f});
      for (MorphismId h : from[ix.dst[g]]) {
        const MorphismId hg = ix.compose.at({h, g});
        if (ix.compose.at({h, gf}) != ix.compose.at({hg, f})) {
          out.push_back({ViolationKind::kAssociativity,
                         "associativity fails for (" + label(h) + ", " +
                             label(g) + ", " + label(f) + ")"});
        }
      }
    }
  }
}

}  // namespace

std::vector<Violation> check_category_laws(const CategorySpec& spec) {
  std::vector<Violation> out;
  Indexed ix = index_spec(spec, out);
  if (out.empty()) check_laws(spec, ix, out);
  return out;
}

FinCategory FinCategory::validate(const CategorySpec& spec) {
  std::vector<Violation> violations;
  Indexed ix = index_spec(spec, violations);
  if (violations.empty()) check_laws(spec, ix, violations);
  if (!violations.empty()) {
    throw ValidationError(ErrorCode::kInvalidCategory, std::move(violations));
  }
  FinCategory c;
  const std::size_t n = spec.objects.size();
  c.objects_ = spec.objects;
  c.object_index_ = std::move(ix.objects);
  c.morphism_index_ = std::move(ix.morphisms);
  c.homs_.assign(n * n, {});
  for (MorphismId m = 0; m < spec.morphisms.size(); ++m) {
    c.morphisms_.push_back({spec.morphisms[m].id, ix.src[m], ix.dst[m]});
    c.homs_[ix.src[m] * n + ix.dst[m]].push_back(m);
  }
  for (const auto& id : ix.identities) c.identities_.push_back(*id);
  c.compose_.reserve(ix.compose.size());
  for (const auto& [gf, h] : ix.compose) {
    c.compose_.emplace(key(gf.first, gf.second), h);
  }
  return c;
}

CategoryPtr make_category(const CategorySpec& spec) {
  return share(FinCategory::validate(spec));
}

std::optional<ObjectId> FinCategory::find_object(std::string_view label) const {
  auto it = object_index_.find(std::string(label));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorphismId> FinCategory::find_morphism(
    std::string_view label) const {
  auto it = morphism_index_.find(std::string(label));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

MorphismId FinCategory::compose(MorphismId g, MorphismId f) const {
  auto it = compose_.find(key(g, f));
  if (it == compose_.end()) {
    throw Error(ErrorCode::kMorphismNotInCategory,
                "morphisms " + morphism_label(g) + " and " +
                    morphism_label(f) + " are not composable");
  }
  return it->second;
}

CategorySpec FinCategory::spec() const {
  CategorySpec s;
  s.objects = objects_;
  for (const auto& m : morphisms_) {
    s.morphisms.push_back({m.id, objects_[m.src], objects_[m.dst]});
  }
  for (ObjectId x = 0; x < objects_.size(); ++x) {
    s.identities.emplace_back(objects_[x], morphisms_[identities_[x]].id);
  }
  const std::size_t n = objects_.size();
  for (MorphismId g = 0; g < morphisms_.size(); ++g) {
    for (ObjectId w = 0; w < n; ++w) {
      for (MorphismId f : homs_[w * n + morphisms_[g].src]) {
        s.compositions.push_back(
            {morphisms_[g].id, morphisms_[f].id,
             morphisms_[compose(g, f)].id});
      }
    }
  }
  std::sort(s.compositions.begin(), s.compositions.end(),
            [&](const auto& a, const auto& b) {
              const auto ka = std::pair(*find_morphism(a[0]),
                                        *find_morphism(a[1]));
              const auto kb = std::pair(*find_morphism(b[0]),
                                        *find_morphism(b[1]));
              return ka < kb;
            });
  return s;
}

std::vector<Violation> check_functor_laws(
    const FinCategory& source, const FinCategory& target,
    const std::vector<ObjectId>& objects,
    const std::vector<MorphismId>& morphisms) {
  std::vector<Violation> out;
  if (objects.size() != source.object_count() ||
      morphisms.size() != source.morphism_count()) {
    out.push_back({ViolationKind::kFunctorLaw,
                   "object or morphism map is not total"});
    return out;
  }
  for (ObjectId x = 0; x < objects.size(); ++x) {
    if (objects[x] >= target.object_count()) {
      out.push_back({ViolationKind::kDanglingEndpoint,
                     "object " + quote(source.object_label(x)) +
                         " maps outside the target"});
    }
  }
  for (MorphismId m = 0; m < morphisms.size(); ++m) {
    if (morphisms[m] >= target.morphism_count()) {
      out.push_back({ViolationKind::kDanglingEndpoint,
                     "morphism " + quote(source.morphism_label(m)) +
                         " maps outside the target"});
    }
  }
  if (!out.empty()) return out;
  for (MorphismId m = 0; m < morphisms.size(); ++m) {
    const MorphismId fm = morphisms[m];
    if (target.src(fm) != objects[source.src(m)] ||
        target.dst(fm) != objects[source.dst(m)]) {
      out.push_back({ViolationKind::kFunctorLaw,
                     "morphism " + quote(source.morphism_label(m)) +
                         " is sent to " + quote(target.morphism_label(fm)) +
                         " with wrong endpoints"});
    }
  }
  if (!out.empty()) return out;
  for (ObjectId x = 0; x < objects.size(); ++x) {
    if (morphisms[source.identity(x)] != target.identity(objects[x])) {
      out.push_back({ViolationKind::kFunctorLaw,
                     "identity of " + quote(source.object_label(x)) +
                         " is not preserved"});
    }
  }
  const std::size_t n = source.object_count();
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      for (ObjectId z = 0; z < n; ++z) {
        for (MorphismId f : source.hom(x, y)) {
          for (MorphismId g : source.hom(y, z)) {
            if (morphisms[source.compose(g, f)] !=
                target.compose(morphisms[g], morphisms[f])) {
              out.push_back({ViolationKind::kFunctorLaw,
                             "composite " + quote(source.morphism_label(g)) +
                                 " o " + quote(source.morphism_label(f)) +
                                 " is not preserved"});
            }
          }
        }
      }
    }
  }
  return out;
}

Functor Functor::validate(CategoryPtr source, CategoryPtr target,
                          std::vector<ObjectId> object_map,
                          std::vector<MorphismId> morphism_map) {
  auto violations =
      check_functor_laws(*source, *target, object_map, morphism_map);
  if (!violations.empty()) {
    throw ValidationError(ErrorCode::kInvalidFunctor, std::move(violations));
  }
  Functor f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.object_map_ = std::move(object_map);
  f.morphism_map_ = std::move(morphism_map);
  return f;
}

Functor Functor::identity(CategoryPtr c) {
  std::vector<ObjectId> objects(c->object_count());
  std::iota(objects.begin(), objects.end(), 0);
  std::vector<MorphismId> morphisms(c->morphism_count());
  std::iota(morphisms.begin(), morphisms.end(), 0);
  Functor f;
  f.source_ = c;
  f.target_ = std::move(c);
  f.object_map_ = std::move(objects);
  f.morphism_map_ = std::move(morphisms);
  return f;
}

bool Functor::same_as(const Functor& other) const {
  return source_ == other.source_ && target_ == other.target_ &&
         object_map_ == other.object_map_ &&
         morphism_map_ == other.morphism_map_;
}

Functor compose(const Functor& g, const Functor& f) {
  if (f.target_ptr() != g.source_ptr()) {
    throw Error(ErrorCode::kIndexMismatch,
                "functors are not composable (target != source)");
  }
  std::vector<ObjectId> objects(f.source().object_count());
  for (ObjectId x = 0; x < objects.size(); ++x) {
    objects[x] = g.object(f.object(x));
  }
  std::vector<MorphismId> morphisms(f.source().morphism_count());
  for (MorphismId m = 0; m < morphisms.size(); ++m) {
    morphisms[m] = g.morphism(f.morphism(m));
  }
  return Functor::validate(f.source_ptr(), g.target_ptr(), std::move(objects),
                           std::move(morphisms));
}

NatTransformation NatTransformation::validate(
    Functor from, Functor to, std::vector<MorphismId> components) {
  std::vector<Violation> out;
  if (from.source_ptr() != to.source_ptr() ||
      from.target_ptr() != to.target_ptr()) {
    out.push_back({ViolationKind::kNaturality,
                   "functors are not parallel"});
    throw ValidationError(ErrorCode::kInvalidNatTransformation,
                          std::move(out));
  }
  const FinCategory& a = from.source();
  const FinCategory& b = from.target();
  if (components.size() != a.object_count()) {
    out.push_back({ViolationKind::kNaturality, "component family not total"});
    throw ValidationError(ErrorCode::kInvalidNatTransformation,
                          std::move(out));
  }
  for (ObjectId x = 0; x < a.object_count(); ++x) {
    const MorphismId c = components[x];
    if (c >= b.morphism_count() || b.src(c) != from.object(x) ||
        b.dst(c) != to.object(x)) {
      out.push_back({ViolationKind::kDanglingEndpoint,
                     "component at " + quote(a.object_label(x)) +
                         " has the wrong type"});
    }
  }
  if (out.empty()) {
    for (MorphismId m = 0; m < a.morphism_count(); ++m) {
      const auto x = a.src(m), y = a.dst(m);
      if (b.compose(to.morphism(m), components[x]) !=
          b.compose(components[y], from.morphism(m))) {
        out.push_back({ViolationKind::kNaturality,
                       "naturality square fails at " +
                           quote(a.morphism_label(m))});
      }
    }
  }
  if (!out.empty()) {
    throw ValidationError(ErrorCode::kInvalidNatTransformation,
                          std::move(out));
  }
  return NatTransformation(std::move(from), std::move(to),
                           std::move(components));
}

QMatrix similarity_matrix(const FinCategory& a) {
  const std::size_t n = a.object_count();
  std::vector<Rational> entries(n * n);
  for (ObjectId i = 0; i < n; ++i) {
    for (ObjectId j = 0; j < n; ++j) entries[i * n + j] = a.hom(i, j).size();
  }
  return QMatrix::square(a.object_labels(), std::move(entries));
}

MatrixEuler euler_char(const FinCategory& a) {
  return matrix_euler(similarity_matrix(a));
}

namespace {

// Kahn order of objects under non-identity morphisms between distinct
// objects; nullopt if that relation has a cycle.
std::optional<std::vector<ObjectId>> topological_order(const FinCategory& a) {
  const std::size_t n = a.object_count();
  std::vector<std::size_t> indegree(n, 0);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      if (x != y && !a.hom(x, y).empty()) ++indegree[y];
    }
  }
  std::vector<ObjectId> order;
  std::vector<ObjectId> ready;
  for (ObjectId x = 0; x < n; ++x) {
    if (indegree[x] == 0) ready.push_back(x);
  }
  while (!ready.empty()) {
    const ObjectId x = ready.front();
    ready.erase(ready.begin());
    order.push_back(x);
    for (ObjectId y = 0; y < n; ++y) {
      if (x != y && !a.hom(x, y).empty() && --indegree[y] == 0) {
        ready.push_back(y);
      }
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

}  // namespace

bool is_acyclic(const FinCategory& a) {
  for (ObjectId x = 0; x < a.object_count(); ++x) {
    if (a.hom(x, x).size() != 1) return false;
  }
  return topological_order(a).has_value();
}

ChainComplexCount nerve_euler(const FinCategory& a) {
  if (!is_acyclic(a)) {
    throw Error(ErrorCode::kNotAcyclic, "nerve_euler requires an acyclic category");
  }
  const std::size_t n = a.object_count();
  ChainComplexCount out;
  // ending[x]: chains of the current length ending at x.
  std::vector<Integer> ending(n, 1);
  out.counts.push_back(n);
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<Integer> next(n, 0);
    Integer total = 0;
    for (ObjectId y = 0; y < n; ++y) {
      for (ObjectId x = 0; x < n; ++x) {
        if (x != y) next[y] += ending[x] * a.hom(x, y).size();
      }
      total += next[y];
    }
    if (total == 0) break;
    out.counts.push_back(total);
    ending = std::move(next);
  }
  out.euler = 0;
  for (std::size_t k = 0; k < out.counts.size(); ++k) {
    out.euler += (k % 2 == 0 ? 1 : -1) * out.counts[k];
  }
  return out;
}

FinCategory coproduct(const std::vector<CategoryPtr>& summands) {
  CategorySpec s;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const std::string prefix = std::to_string(i) + ".";
    const CategorySpec part = summands[i]->spec();
    for (const auto& x : part.objects) s.objects.push_back(prefix + x);
    for (const auto& m : part.morphisms) {
      s.morphisms.push_back({prefix + m.id, prefix + m.src, prefix + m.dst});
    }
    for (const auto& [x, m] : part.identities) {
      s.identities.emplace_back(prefix + x, prefix + m);
    }
    for (const auto& [g, f, gf] : part.compositions) {
      s.compositions.push_back({prefix + g, prefix + f, prefix + gf});
    }
  }
  return FinCategory::validate(s);
}

namespace {

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

FinCategory product(const FinCategory& a, const FinCategory& b) {
  CategorySpec s;
  for (ObjectId x = 0; x < a.object_count(); ++x) {
    for (ObjectId y = 0; y < b.object_count(); ++y) {
      s.objects.push_back(pair_label(a.object_label(x), b.object_label(y)));
      s.identities.emplace_back(
          s.objects.back(), pair_label(a.morphism_label(a.identity(x)),
                                       b.morphism_label(b.identity(y))));
    }
  }
  for (MorphismId f = 0; f < a.morphism_count(); ++f) {
    for (MorphismId g = 0; g < b.morphism_count(); ++g) {
      s.morphisms.push_back(
          {pair_label(a.morphism_label(f), b.morphism_label(g)),
           pair_label(a.object_label(a.src(f)), b.object_label(b.src(g))),
           pair_label(a.object_label(a.dst(f)), b.object_label(b.dst(g)))});
    }
  }
  const std::size_t na = a.object_count();
  for (MorphismId f = 0; f < a.morphism_count(); ++f) {
    for (ObjectId w = 0; w < na; ++w) {
      for (MorphismId f2 : a.hom(w, a.src(f))) {
        const MorphismId ff = a.compose(f, f2);
        for (MorphismId g = 0; g < b.morphism_count(); ++g) {
          for (ObjectId v = 0; v < b.object_count(); ++v) {
            for (MorphismId g2 : b.hom(v, b.src(g))) {
              s.compositions.push_back(
                  {pair_label(a.morphism_label(f), b.morphism_label(g)),
                   pair_label(a.morphism_label(f2), b.morphism_label(g2)),
                   pair_label(a.morphism_label(ff),
                              b.morphism_label(b.compose(g, g2)))});
            }
          }
        }
      }
    }
  }
  return FinCategory::validate(s);
}

FinCategory opposite(const FinCategory& a) {
  CategorySpec s = a.spec();
  for (auto& m : s.morphisms) std::swap(m.src, m.dst);
  for (auto& c : s.compositions) std::swap(c[0], c[1]);
  return FinCategory::validate(s);
}

Functor opposite(const Functor& f, CategoryPtr source_op,
                 CategoryPtr target_op) {
  return Functor::validate(std::move(source_op), std::move(target_op),
                           f.object_map(), f.morphism_map());
}

std::optional<MorphismId> inverse_of(const FinCategory& a, MorphismId m) {
  const ObjectId x = a.src(m), y = a.dst(m);
  for (MorphismId n : a.hom(y, x)) {
    if (a.compose(n, m) == a.identity(x) && a.compose(m, n) == a.identity(y)) {
      return n;
    }
  }
  return std::nullopt;
}

bool is_groupoid(const FinCategory& a) {
  for (MorphismId m = 0; m < a.morphism_count(); ++m) {
    if (!inverse_of(a, m)) return false;
  }
  return true;
}

std::optional<MorphismId> find_isomorphism(const FinCategory& a, ObjectId x,
                                           ObjectId y) {
  for (MorphismId m : a.hom(x, y)) {
    if (inverse_of(a, m)) return m;
  }
  return std::nullopt;
}

IsoClasses isomorphism_classes(const FinCategory& a) {
  IsoClasses out;
  const std::size_t n = a.object_count();
  out.class_of.assign(n, n);
  for (ObjectId x = 0; x < n; ++x) {
    if (out.class_of[x] != n) continue;
    const std::size_t c = out.classes.size();
    out.classes.push_back({x});
    out.class_of[x] = c;
    for (ObjectId y = x + 1; y < n; ++y) {
      if (out.class_of[y] == n && find_isomorphism(a, x, y)) {
        out.class_of[y] = c;
        out.classes[c].push_back(y);
      }
    }
  }
  return out;
}

bool check_equivalence_functor(const Functor& f) {
  const FinCategory& a = f.source();
  const FinCategory& b = f.target();
  for (ObjectId x = 0; x < a.object_count(); ++x) {
    for (ObjectId y = 0; y < a.object_count(); ++y) {
      const auto& src_hom = a.hom(x, y);
      const auto& dst_hom = b.hom(f.object(x), f.object(y));
      if (src_hom.size() != dst_hom.size()) return false;
      std::set<MorphismId> image;
      for (MorphismId m : src_hom) image.insert(f.morphism(m));
      if (image.size() != src_hom.size()) return false;
    }
  }
  for (ObjectId y = 0; y < b.object_count(); ++y) {
    bool hit = false;
    for (ObjectId x = 0; x < a.object_count() && !hit; ++x) {
      hit = find_isomorphism(b, f.object(x), y).has_value();
    }
    if (!hit) return false;
  }
  return true;
}

std::vector<std::vector<ObjectId>> connected_components(const FinCategory& a) {
  const std::size_t n = a.object_count();
  std::vector<ObjectId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](ObjectId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (MorphismId m = 0; m < a.morphism_count(); ++m) {
    const auto r1 = find(a.src(m)), r2 = find(a.dst(m));
    if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
  }
  std::map<ObjectId, std::vector<ObjectId>> groups;
  for (ObjectId x = 0; x < n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<ObjectId>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

FinCategory full_subcategory(const FinCategory& a,
                             const std::vector<ObjectId>& objects) {
  CategorySpec s;
  for (ObjectId x : objects) {
    s.objects.push_back(a.object_label(x));
    s.identities.emplace_back(a.object_label(x),
                              a.morphism_label(a.identity(x)));
  }
  for (ObjectId x : objects) {
    for (ObjectId y : objects) {
      for (MorphismId m : a.hom(x, y)) {
        s.morphisms.push_back({a.morphism_label(m), a.object_label(x),
                               a.object_label(y)});
        for (ObjectId z : objects) {
          for (MorphismId g : a.hom(y, z)) {
            s.compositions.push_back({a.morphism_label(g),
                                      a.morphism_label(m),
                                      a.morphism_label(a.compose(g, m))});
          }
        }
      }
    }
  }
  return FinCategory::validate(s);
}

namespace {

nlohmann::json optional_rational(const std::optional<Rational>& q) {
  return q ? nlohmann::json(to_string(*q)) : nlohmann::json(nullptr);
}

nlohmann::json optional_vector(const std::optional<QVector>& v) {
  return v ? to_json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json EquivalenceInvarianceReport::to_json() const {
  return {{"is_equivalence", is_equivalence},
          {"chi_source", optional_rational(chi_source)},
          {"chi_target", optional_rational(chi_target)},
          {"transported_weighting", optional_vector(transported_weighting)},
          {"transported_coweighting",
           optional_vector(transported_coweighting)},
          {"transported_weighting_ok", transported_weighting_ok},
          {"transported_coweighting_ok", transported_coweighting_ok},
          {"holds", holds}};
}

EquivalenceInvarianceReport verify_equivalence_invariance(const Functor& f) {
  EquivalenceInvarianceReport r;
  r.is_equivalence = check_equivalence_functor(f);
  if (!r.is_equivalence) return r;
  const FinCategory& a = f.source();
  const FinCategory& b = f.target();
  const QMatrix za = similarity_matrix(a);
  const MatrixEuler ea = matrix_euler(za);
  const MatrixEuler eb = euler_char(b);
  r.chi_source = ea.chi;
  r.chi_target = eb.chi;
  const IsoClasses ca = isomorphism_classes(a);
  const IsoClasses cb = isomorphism_classes(b);
  auto transport = [&](const QVector& l) {
    std::vector<Rational> k(a.object_count());
    for (ObjectId x = 0; x < a.object_count(); ++x) {
      Rational total = 0;
      for (ObjectId y : cb.classes[cb.class_of[f.object(x)]]) total += l[y];
      k[x] = total / ca.classes[ca.class_of[x]].size();
    }
    return QVector(a.object_labels(), std::move(k));
  };
  auto all_ones = [](const QVector& v) {
    return std::all_of(v.entries().begin(), v.entries().end(),
                       [](const Rational& q) { return q == 1; });
  };
  if (eb.weighting) {
    r.transported_weighting = transport(*eb.weighting);
    r.transported_weighting_ok =
        all_ones(multiply(za, *r.transported_weighting));
  }
  if (eb.coweighting) {
    r.transported_coweighting = transport(*eb.coweighting);
    r.transported_coweighting_ok =
        all_ones(multiply(*r.transported_coweighting, za));
  }
  const bool weighting_ok = !eb.weighting || r.transported_weighting_ok;
  const bool coweighting_ok = !eb.coweighting || r.transported_coweighting_ok;
  r.holds = r.chi_source == r.chi_target && weighting_ok && coweighting_ok;
  return r;
}

}  // namespace bicat_euler
