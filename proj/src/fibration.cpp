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

#include <algorithm>
#include <tuple>

#include "bicat_euler/parallel.hpp"

namespace bicat_euler {

namespace {

std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

std::optional<std::string> cartesian_counterexample(
    const Functor& p, MorphismId f, CartesianConvention convention) {
  const FinCategory& e = p.source();
  const FinCategory& b = p.target();
  if (f >= e.morphism_count()) {
    throw Error(ErrorCode::kMorphismNotInCategory,
                "morphism index " + std::to_string(f) + " out of range");
  }
  const ObjectId s = e.src(f), t = e.dst(f);
  const MorphismId pf = p.morphism(f);
  for (ObjectId w = 0; w < e.object_count(); ++w) {
    for (MorphismId g : e.hom(w, t)) {
      const MorphismId pg = p.morphism(g);
      const bool standard = convention == CartesianConvention::kStandard;
      const ObjectId h_src = standard ? p.object(w) : p.object(s);
      const ObjectId h_dst = standard ? p.object(s) : p.object(w);
      for (MorphismId h : b.hom(h_src, h_dst)) {
        std::size_t lifts = 0;
        if (standard) {
          if (b.compose(pf, h) != pg) continue;
          for (MorphismId c : e.hom(w, s)) {
            if (p.morphism(c) == h && e.compose(f, c) == g) ++lifts;
          }
        } else {
          if (b.compose(pg, h) != pf) continue;
          for (MorphismId c : e.hom(s, w)) {
            if (p.morphism(c) == h && e.compose(g, c) == f) ++lifts;
          }
        }
        if (lifts != 1) {
          return "morphism " + quote(e.morphism_label(f)) + ": frame (g=" +
                 quote(e.morphism_label(g)) + ", h=" +
                 quote(b.morphism_label(h)) + ") has " +
                 std::to_string(lifts) + " lifts";
        }
      }
    }
  }
  return std::nullopt;
}

bool is_cartesian_morphism(const Functor& p, MorphismId f,
                           CartesianConvention convention) {
  return !cartesian_counterexample(p, f, convention).has_value();
}

Functor reverse(const Functor& p) {
  return opposite(p, share(opposite(p.source())),
                  share(opposite(p.target())));
}

nlohmann::json FibrationReport::to_json() const {
  return {{"fibered", fibered},
          {"cofibered", cofibered},
          {"fibered_in_groupoids", fibered_in_groupoids},
          {"cofibered_in_groupoids", cofibered_in_groupoids},
          {"witnesses", witnesses}};
}

namespace {

struct OneSided {
  bool fibered = true;
  bool in_groupoids = true;
  std::vector<std::string> witnesses;
};

OneSided classify_one_side(const Functor& p, CartesianConvention convention,
                           const std::string& side) {
  const FinCategory& e = p.source();
  const FinCategory& b = p.target();
  const auto counterexamples = parallel_map(
      e.morphism_count(),
      [&](std::size_t m) { return cartesian_counterexample(p, m, convention); });
  OneSided out;
  bool all_lift = true;
  std::optional<std::string> missing_cartesian, missing_any;
  for (ObjectId x = 0; x < e.object_count(); ++x) {
    for (ObjectId c = 0; c < b.object_count(); ++c) {
      for (MorphismId f : b.hom(c, p.object(x))) {
        bool any = false, cartesian = false;
        for (ObjectId w = 0; w < e.object_count(); ++w) {
          for (MorphismId m : e.hom(w, x)) {
            if (p.morphism(m) != f) continue;
            any = true;
            cartesian = cartesian || !counterexamples[m];
          }
        }
        const std::string where =
            quote(b.morphism_label(f)) + " at " + quote(e.object_label(x));
        if (!cartesian && !missing_cartesian) {
          missing_cartesian = side + ": no cartesian lift of " + where;
        }
        if (!any) {
          all_lift = false;
          if (!missing_any) missing_any = side + ": no lift of " + where;
        }
      }
    }
  }
  out.fibered = !missing_cartesian;
  if (missing_cartesian) out.witnesses.push_back(*missing_cartesian);
  std::optional<std::string> non_cartesian;
  for (const auto& c : counterexamples) {
    if (c) {
      non_cartesian = side + ": " + *c;
      break;
    }
  }
  out.in_groupoids = all_lift && !non_cartesian;
  if (non_cartesian) out.witnesses.push_back(*non_cartesian);
  if (missing_any) out.witnesses.push_back(*missing_any);
  return out;
}

}  // namespace

FibrationReport classify_fibration(const Functor& p,
                                   CartesianConvention convention) {
  FibrationReport r;
  OneSided fib = classify_one_side(p, convention, "fibered");
  OneSided cofib = classify_one_side(reverse(p), convention, "cofibered");
  r.fibered = fib.fibered;
  r.fibered_in_groupoids = fib.in_groupoids;
  r.cofibered = cofib.fibered;
  r.cofibered_in_groupoids = cofib.in_groupoids;
  r.witnesses = std::move(fib.witnesses);
  r.witnesses.insert(r.witnesses.end(), cofib.witnesses.begin(),
                     cofib.witnesses.end());
  return r;
}

Cleavage choose_cleavage(const Functor& p, LiftChoice choice) {
  const FinCategory& e = p.source();
  const FinCategory& b = p.target();
  const auto cartesian = parallel_map(e.morphism_count(), [&](std::size_t m) {
    return is_cartesian_morphism(p, m);
  });
  Cleavage cl(b.morphism_count(), e.object_count());
  for (ObjectId x = 0; x < e.object_count(); ++x) {
    for (ObjectId c = 0; c < b.object_count(); ++c) {
      for (MorphismId f : b.hom(c, p.object(x))) {
        std::optional<MorphismId> best;
        for (ObjectId w = 0; w < e.object_count(); ++w) {
          for (MorphismId m : e.hom(w, x)) {
            if (p.morphism(m) != f || !cartesian[m]) continue;
            const bool better =
                !best ||
                (choice == LiftChoice::kSmallestLabel
                     ? e.morphism_label(m) < e.morphism_label(*best)
                     : e.morphism_label(m) > e.morphism_label(*best));
            if (better) best = m;
          }
        }
        if (!best) {
          throw Error(ErrorCode::kNotFibered,
                      "no cartesian lift of " + quote(b.morphism_label(f)) +
                          " at " + quote(e.object_label(x)));
        }
        cl.set(f, x, *best);
      }
    }
  }
  return cl;
}

FiberInclusion fiber_inclusion(const Functor& p, ObjectId b) {
  const FinCategory& e = p.source();
  if (b >= p.target().object_count()) {
    throw Error(ErrorCode::kObjectNotInBase,
                "object index " + std::to_string(b) + " not in base");
  }
  const MorphismId id_b = p.target().identity(b);
  FiberInclusion out;
  CategorySpec s;
  for (ObjectId x = 0; x < e.object_count(); ++x) {
    if (p.object(x) != b) continue;
    out.objects.push_back(x);
    s.objects.push_back(e.object_label(x));
    s.identities.emplace_back(e.object_label(x),
                              e.morphism_label(e.identity(x)));
  }
  for (ObjectId x : out.objects) {
    for (ObjectId y : out.objects) {
      for (MorphismId m : e.hom(x, y)) {
        if (p.morphism(m) != id_b) continue;
        out.morphisms.push_back(m);
        s.morphisms.push_back(
            {e.morphism_label(m), e.object_label(x), e.object_label(y)});
      }
    }
  }
  for (MorphismId f : out.morphisms) {
    for (MorphismId g : out.morphisms) {
      if (e.src(g) != e.dst(f)) continue;
      s.compositions.push_back({e.morphism_label(g), e.morphism_label(f),
                                e.morphism_label(e.compose(g, f))});
    }
  }
  out.category = make_category(s);
  return out;
}

FinCategory fiber_category(const Functor& p, ObjectId b) {
  return *fiber_inclusion(p, b).category;
}

LaxFunctorToCat LaxFunctorToCat::validate(
    CategoryPtr base, std::vector<CategoryPtr> fibers,
    std::vector<Functor> pullbacks, std::optional<LaxCatCoherence> coherence) {
  if (fibers.size() != base->object_count() ||
      pullbacks.size() != base->morphism_count()) {
    throw Error(ErrorCode::kInvalidFunctor,
                "lax functor needs one fiber per object and one pullback per "
                "morphism of the base");
  }
  for (MorphismId f = 0; f < base->morphism_count(); ++f) {
    if (pullbacks[f].source_ptr() != fibers[base->dst(f)] ||
        pullbacks[f].target_ptr() != fibers[base->src(f)]) {
      throw Error(ErrorCode::kInvalidFunctor,
                  "pullback along " + quote(base->morphism_label(f)) +
                      " does not go from F(dst) to F(src)");
    }
  }
  std::vector<Violation> bad;
  if (coherence) {
    const FinCategory& bc = *base;
    for (MorphismId f = 0; f < bc.morphism_count(); ++f) {
      for (ObjectId d = 0; d < bc.object_count(); ++d) {
        for (MorphismId g : bc.hom(bc.dst(f), d)) {
          const std::string frame = "compositor (" +
                                    quote(bc.morphism_label(g)) + ", " +
                                    quote(bc.morphism_label(f)) + ")";
          auto it = coherence->compositors.find({g, f});
          const FinCategory& fd = *fibers[d];
          const FinCategory& fb = *fibers[bc.src(f)];
          if (it == coherence->compositors.end() ||
              it->second.size() != fd.object_count()) {
            bad.push_back({ViolationKind::kCoherence, frame + " is missing"});
            continue;
          }
          const Functor& ff = pullbacks[f];
          const Functor& fg = pullbacks[g];
          const Functor& fgf = pullbacks[bc.compose(g, f)];
          const auto& w = it->second;
          bool framed = true;
          for (ObjectId z = 0; z < fd.object_count(); ++z) {
            if (w[z] >= fb.morphism_count() ||
                fb.src(w[z]) != ff.object(fg.object(z)) ||
                fb.dst(w[z]) != fgf.object(z)) {
              framed = false;
              bad.push_back({ViolationKind::kCoherence,
                             frame + " component at " +
                                 quote(fd.object_label(z)) +
                                 " has the wrong frame"});
            }
          }
          if (!framed) continue;
          for (MorphismId v = 0; v < fd.morphism_count(); ++v) {
            const auto z = fd.src(v), z2 = fd.dst(v);
            if (fb.compose(fgf.morphism(v), w[z]) !=
                fb.compose(w[z2], ff.morphism(fg.morphism(v)))) {
              bad.push_back({ViolationKind::kNaturality,
                             frame + " is not natural at " +
                                 quote(fd.morphism_label(v))});
            }
          }
        }
      }
    }
    if (coherence->unitors.size() != bc.object_count()) {
      bad.push_back({ViolationKind::kCoherence, "unitors are missing"});
    } else {
      for (ObjectId b = 0; b < bc.object_count(); ++b) {
        const FinCategory& fb = *fibers[b];
        const Functor& fid = pullbacks[bc.identity(b)];
        const auto& w = coherence->unitors[b];
        const std::string frame = "unitor at " + quote(bc.object_label(b));
        if (w.size() != fb.object_count()) {
          bad.push_back({ViolationKind::kCoherence, frame + " is missing"});
          continue;
        }
        bool framed = true;
        for (ObjectId x = 0; x < fb.object_count(); ++x) {
          if (w[x] >= fb.morphism_count() || fb.src(w[x]) != x ||
              fb.dst(w[x]) != fid.object(x)) {
            framed = false;
            bad.push_back({ViolationKind::kCoherence,
                           frame + " component at " +
                               quote(fb.object_label(x)) +
                               " has the wrong frame"});
          }
        }
        if (!framed) continue;
        for (MorphismId u = 0; u < fb.morphism_count(); ++u) {
          if (fb.compose(fid.morphism(u), w[fb.src(u)]) !=
              fb.compose(w[fb.dst(u)], u)) {
            bad.push_back({ViolationKind::kNaturality,
                           frame + " is not natural at " +
                               quote(fb.morphism_label(u))});
          }
        }
      }
    }
  }
  if (!bad.empty()) {
    throw ValidationError(ErrorCode::kIncoherentData, std::move(bad));
  }
  LaxFunctorToCat out;
  out.base_ = std::move(base);
  out.fibers_ = std::move(fibers);
  out.pullbacks_ = std::move(pullbacks);
  out.coherence_ = std::move(coherence);
  return out;
}

bool LaxFunctorToCat::strictly_functorial() const {
  const FinCategory& b = *base_;
  for (ObjectId x = 0; x < b.object_count(); ++x) {
    const Functor& fid = pullbacks_[b.identity(x)];
    for (ObjectId y = 0; y < fid.source().object_count(); ++y) {
      if (fid.object(y) != y) return false;
    }
    for (MorphismId m = 0; m < fid.source().morphism_count(); ++m) {
      if (fid.morphism(m) != m) return false;
    }
  }
  for (MorphismId f = 0; f < b.morphism_count(); ++f) {
    for (ObjectId d = 0; d < b.object_count(); ++d) {
      for (MorphismId g : b.hom(b.dst(f), d)) {
        const Functor& ff = pullbacks_[f];
        const Functor& fg = pullbacks_[g];
        const Functor& fgf = pullbacks_[b.compose(g, f)];
        for (ObjectId z = 0; z < fg.source().object_count(); ++z) {
          if (fgf.object(z) != ff.object(fg.object(z))) return false;
        }
        for (MorphismId m = 0; m < fg.source().morphism_count(); ++m) {
          if (fgf.morphism(m) != ff.morphism(fg.morphism(m))) return false;
        }
      }
    }
  }
  return true;
}

std::optional<LaxCatCoherence> LaxFunctorToCat::effective_coherence() const {
  if (coherence_) return coherence_;
  if (!strictly_functorial()) return std::nullopt;
  const FinCategory& b = *base_;
  LaxCatCoherence c;
  for (MorphismId f = 0; f < b.morphism_count(); ++f) {
    const FinCategory& fb = *fibers_[b.src(f)];
    for (ObjectId d = 0; d < b.object_count(); ++d) {
      for (MorphismId g : b.hom(b.dst(f), d)) {
        const Functor& fgf = pullbacks_[b.compose(g, f)];
        std::vector<MorphismId> w;
        for (ObjectId z = 0; z < fibers_[d]->object_count(); ++z) {
          w.push_back(fb.identity(fgf.object(z)));
        }
        c.compositors.emplace(std::pair{g, f}, std::move(w));
      }
    }
  }
  for (ObjectId x = 0; x < b.object_count(); ++x) {
    std::vector<MorphismId> w;
    for (ObjectId y = 0; y < fibers_[x]->object_count(); ++y) {
      w.push_back(fibers_[x]->identity(y));
    }
    c.unitors.push_back(std::move(w));
  }
  return c;
}

namespace {

// The unique morphism v : s -> t of E over id_b with post o v = target.
MorphismId unique_vertical(const Functor& p, ObjectId s, ObjectId t,
                           MorphismId id_b, MorphismId post,
                           MorphismId target, const std::string& what) {
  const FinCategory& e = p.source();
  std::optional<MorphismId> found;
  std::size_t count = 0;
  for (MorphismId v : e.hom(s, t)) {
    if (p.morphism(v) == id_b && e.compose(post, v) == target) {
      found = v;
      ++count;
    }
  }
  if (count != 1) {
    throw Error(ErrorCode::kNonUniqueLift,
                what + " has " + std::to_string(count) + " candidate lifts");
  }
  return *found;
}

}  // namespace

LaxFunctorToCat induced_fiber_pseudofunctor(const Functor& p,
                                            const Cleavage& cleavage) {
  const FinCategory& e = p.source();
  const FinCategory& b = p.target();
  std::vector<FiberInclusion> fibers;
  std::vector<std::optional<ObjectId>> local_object(e.object_count());
  std::vector<std::optional<MorphismId>> local_morphism(e.morphism_count());
  for (ObjectId x = 0; x < b.object_count(); ++x) {
    fibers.push_back(fiber_inclusion(p, x));
    const auto& fi = fibers.back();
    for (ObjectId i = 0; i < fi.objects.size(); ++i) {
      local_object[fi.objects[i]] = i;
    }
    for (MorphismId i = 0; i < fi.morphisms.size(); ++i) {
      local_morphism[fi.morphisms[i]] = i;
    }
  }
  auto lift = [&](MorphismId f, ObjectId x) {
    auto l = cleavage.lift(f, x);
    if (!l) {
      throw Error(ErrorCode::kNotFibered,
                  "cleavage has no lift of " + quote(b.morphism_label(f)) +
                      " at " + quote(e.object_label(x)));
    }
    return *l;
  };
  std::vector<Functor> pullbacks;
  for (MorphismId f = 0; f < b.morphism_count(); ++f) {
    const FiberInclusion& over_c = fibers[b.dst(f)];
    const FiberInclusion& over_b = fibers[b.src(f)];
    const MorphismId id_b = b.identity(b.src(f));
    std::vector<ObjectId> objects;
    for (ObjectId y : over_c.objects) {
      objects.push_back(*local_object[e.src(lift(f, y))]);
    }
    std::vector<MorphismId> morphisms;
    for (MorphismId u : over_c.morphisms) {
      const MorphismId l1 = lift(f, e.src(u));
      const MorphismId l2 = lift(f, e.dst(u));
      const MorphismId v = unique_vertical(
          p, e.src(l1), e.src(l2), id_b, l2, e.compose(u, l1),
          "pullback of " + quote(e.morphism_label(u)) + " along " +
              quote(b.morphism_label(f)));
      morphisms.push_back(*local_morphism[v]);
    }
    pullbacks.push_back(Functor::validate(over_c.category, over_b.category,
                                          std::move(objects),
                                          std::move(morphisms)));
  }
  LaxCatCoherence coherence;
  for (MorphismId f = 0; f < b.morphism_count(); ++f) {
    const MorphismId id_b = b.identity(b.src(f));
    for (ObjectId d = 0; d < b.object_count(); ++d) {
      for (MorphismId g : b.hom(b.dst(f), d)) {
        std::vector<MorphismId> w;
        for (ObjectId z : fibers[d].objects) {
          const MorphismId lg = lift(g, z);
          const MorphismId lf = lift(f, e.src(lg));
          const MorphismId lgf = lift(b.compose(g, f), z);
          const MorphismId c = unique_vertical(
              p, e.src(lf), e.src(lgf), id_b, lgf, e.compose(lg, lf),
              "compositor component at " + quote(e.object_label(z)));
          w.push_back(*local_morphism[c]);
        }
        coherence.compositors.emplace(std::pair{g, f}, std::move(w));
      }
    }
  }
  for (ObjectId x = 0; x < b.object_count(); ++x) {
    const MorphismId id_b = b.identity(x);
    std::vector<MorphismId> w;
    for (ObjectId y : fibers[x].objects) {
      const MorphismId l = lift(id_b, y);
      const MorphismId c =
          unique_vertical(p, y, e.src(l), id_b, l, e.identity(y),
                          "unitor component at " + quote(e.object_label(y)));
      w.push_back(*local_morphism[c]);
    }
    coherence.unitors.push_back(std::move(w));
  }
  std::vector<CategoryPtr> fiber_cats;
  for (auto& fi : fibers) fiber_cats.push_back(fi.category);
  return LaxFunctorToCat::validate(p.target_ptr(), std::move(fiber_cats),
                                   std::move(pullbacks), std::move(coherence));
}

namespace {

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

GrothendieckCat grothendieck_cat(const LaxFunctorToCat& f) {
  const FinCategory& b = f.base();
  GrothendieckCat gr;
  std::vector<std::vector<ObjectId>> index(b.object_count());
  for (ObjectId x = 0; x < b.object_count(); ++x) {
    for (ObjectId y = 0; y < f.fiber(x).object_count(); ++y) {
      index[x].push_back(gr.objects.size());
      gr.objects.push_back({x, y});
      gr.labels.push_back(
          pair_label(b.object_label(x), f.fiber(x).object_label(y)));
      gr.projection_objects.push_back(x);
    }
  }
  const std::size_t n = gr.objects.size();
  std::vector<Rational> counts(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto [bi, xi] = gr.objects[i];
      const auto [bj, yj] = gr.objects[j];
      std::size_t total = 0;
      for (MorphismId m : b.hom(bi, bj)) {
        total += f.fiber(bi).hom(xi, f.pullback(m).object(yj)).size();
      }
      counts[i * n + j] = total;
    }
  }
  gr.similarity = QMatrix::square(gr.labels, std::move(counts));

  const auto coherence = f.effective_coherence();
  if (!coherence) return gr;
  // Morphisms (m, u, target) with u : x -> F m (y) in F(src m).
  struct Arrow {
    MorphismId base;
    MorphismId fiber;
    std::size_t src;
    std::size_t dst;
  };
  std::vector<Arrow> arrows;
  std::map<std::tuple<MorphismId, MorphismId, std::size_t>, std::size_t>
      arrow_index;
  CategorySpec s;
  s.objects = gr.labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto [bi, xi] = gr.objects[i];
      const auto [bj, yj] = gr.objects[j];
      for (MorphismId m : b.hom(bi, bj)) {
        const FinCategory& fb = f.fiber(bi);
        for (MorphismId u : fb.hom(xi, f.pullback(m).object(yj))) {
          arrow_index[{m, u, j}] = arrows.size();
          arrows.push_back({m, u, i, j});
          s.morphisms.push_back(
              {"(" + b.morphism_label(m) + "," + fb.morphism_label(u) + ";" +
                   f.fiber(bj).object_label(yj) + ")",
               gr.labels[i], gr.labels[j]});
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto [bi, xi] = gr.objects[i];
    const MorphismId psi = coherence->unitors[bi][xi];
    s.identities.emplace_back(
        gr.labels[i], s.morphisms[arrow_index.at({b.identity(bi), psi, i})].id);
  }
  for (const Arrow& a1 : arrows) {
    for (const Arrow& a2 : arrows) {
      if (a2.src != a1.dst) continue;
      // (g, v) o (f, u) = (g f, phi o F f (v) o u).
      const MorphismId fm = a1.base, gm = a2.base;
      const ObjectId z = gr.objects[a2.dst].fiber;
      const FinCategory& fb = f.fiber(b.src(fm));
      auto it = coherence->compositors.find({gm, fm});
      if (it == coherence->compositors.end()) {
        throw Error(ErrorCode::kIncoherentData, "missing compositor");
      }
      const MorphismId composite = fb.compose(
          it->second[z],
          fb.compose(f.pullback(fm).morphism(a2.fiber), a1.fiber));
      const std::size_t k =
          arrow_index.at({b.compose(gm, fm), composite, a2.dst});
      s.compositions.push_back(
          {s.morphisms[&a2 - arrows.data()].id,
           s.morphisms[&a1 - arrows.data()].id, s.morphisms[k].id});
    }
  }
  CategoryPtr total;
  try {
    total = make_category(s);
  } catch (const ValidationError& e) {
    std::vector<Violation> v = e.violations();
    throw ValidationError(ErrorCode::kIncoherentData, std::move(v));
  }
  std::vector<MorphismId> base_map;
  for (const Arrow& a : arrows) base_map.push_back(a.base);
  gr.projection = Functor::validate(total, f.base_ptr(),
                                    gr.projection_objects, std::move(base_map));
  gr.total = std::move(total);
  return gr;
}

std::string product_term(const Rational& a, const Rational& b) {
  const std::string sa = to_string(a), sb = to_string(b);
  const bool spaced = sa.find('/') != std::string::npos ||
                      sb.find('/') != std::string::npos;
  return sa + (spaced ? " · " : "·") + sb;
}

namespace {

Rational require_chi(const MatrixEuler& e, const std::string& what) {
  if (!e.chi) {
    throw Error(ErrorCode::kMissingEulerCharacteristic,
                what + " has no Euler characteristic");
  }
  return *e.chi;
}

}  // namespace

std::string GrFormulaReport::equation() const {
  std::string out = to_string(chi_total) + " =";
  for (std::size_t i = 0; i < fiber_chi.size(); ++i) {
    out += i == 0 ? " " : " + ";
    out += product_term(base_coweighting[i], fiber_chi[i]);
  }
  if (fiber_chi.empty()) out += " 0";
  return out;
}

nlohmann::json GrFormulaReport::to_json() const {
  nlohmann::json fibers = nlohmann::json::object();
  for (std::size_t i = 0; i < fiber_chi.size(); ++i) {
    fibers[base_labels[i]] = to_string(fiber_chi[i]);
  }
  return {{"chi_total", to_string(chi_total)},
          {"base_coweighting", bicat_euler::to_json(base_coweighting)},
          {"fiber_chi", fibers},
          {"rhs", to_string(rhs)},
          {"equation", equation()},
          {"holds", holds}};
}

GrFormulaReport verify_gr_formula(const LaxFunctorToCat& f) {
  GrFormulaReport r;
  const auto k = solve_coweighting(similarity_matrix(f.base()));
  if (!k) {
    throw Error(ErrorCode::kMissingEulerCharacteristic,
                "base category has no coweighting");
  }
  r.base_coweighting = *k;
  r.base_labels = f.base().object_labels();
  for (ObjectId b = 0; b < f.base().object_count(); ++b) {
    r.fiber_chi.push_back(require_chi(
        euler_char(f.fiber(b)), "fiber over " + quote(f.base().object_label(b))));
  }
  const GrothendieckCat gr = grothendieck_cat(f);
  r.chi_total = require_chi(matrix_euler(gr.similarity),
                            "Grothendieck construction");
  r.rhs = 0;
  for (std::size_t i = 0; i < r.fiber_chi.size(); ++i) {
    r.rhs += (*k)[i] * r.fiber_chi[i];
  }
  r.holds = r.rhs == r.chi_total;
  return r;
}

std::string ProductFormulaReport::equation() const {
  std::string out = to_string(chi_total) + " =";
  for (std::size_t i = 0; i < components.size(); ++i) {
    out += i == 0 ? " " : " + ";
    out += product_term(components[i].chi_base, components[i].chi_fiber);
  }
  if (components.empty()) out += " 0";
  return out;
}

nlohmann::json ProductFormulaReport::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components) {
    comps.push_back({{"base_objects", c.base_objects},
                     {"chi_base", to_string(c.chi_base)},
                     {"fiber_object", c.fiber_object},
                     {"chi_fiber", to_string(c.chi_fiber)},
                     {"fiber_chi_constant", c.fiber_chi_constant}});
  }
  return {{"chi_total", to_string(chi_total)},
          {"components", comps},
          {"rhs", to_string(rhs)},
          {"equation", equation()},
          {"holds", holds}};
}

ProductFormulaReport verify_product_formula_cat(const Functor& p) {
  const FibrationReport fr = classify_fibration(p);
  if (!fr.fibered_in_groupoids || !fr.cofibered_in_groupoids) {
    std::string why = "functor is not fibered and cofibered in groupoids";
    if (!fr.witnesses.empty()) why += ": " + fr.witnesses.front();
    throw Error(ErrorCode::kNotBiFibered, why);
  }
  ProductFormulaReport r;
  r.chi_total = require_chi(euler_char(p.source()), "total category");
  const FinCategory& b = p.target();
  r.rhs = 0;
  bool constant = true;
  for (const auto& comp : connected_components(b)) {
    ProductComponent c;
    for (ObjectId x : comp) c.base_objects.push_back(b.object_label(x));
    c.chi_base = require_chi(euler_char(full_subcategory(b, comp)),
                             "base component containing " +
                                 quote(b.object_label(comp.front())));
    c.fiber_object = b.object_label(comp.front());
    c.chi_fiber = require_chi(euler_char(fiber_category(p, comp.front())),
                              "fiber over " + quote(c.fiber_object));
    c.fiber_chi_constant = true;
    for (ObjectId x : comp) {
      const auto other = euler_char(fiber_category(p, x)).chi;
      if (other != c.chi_fiber) c.fiber_chi_constant = false;
    }
    constant = constant && c.fiber_chi_constant;
    r.rhs += c.chi_base * c.chi_fiber;
    r.components.push_back(std::move(c));
  }
  r.holds = constant && r.rhs == r.chi_total;
  return r;
}

}  // namespace bicat_euler
