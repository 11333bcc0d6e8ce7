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

#include <algorithm>
#include <functional>
#include <numeric>

#include "bicat_euler/fibration.hpp"
#include "bicat_euler/parallel.hpp"

namespace bicat_euler {

namespace {

std::string quote(const std::string& s) { return "'" + s + "'"; }

std::vector<MorphismId> isos(const FinCategory& c, ObjectId a, ObjectId b) {
  std::vector<MorphismId> out;
  for (MorphismId m : c.hom(a, b)) {
    if (inverse_of(c, m)) out.push_back(m);
  }
  return out;
}

bool all_ones(const QVector& v) {
  return std::all_of(v.entries().begin(), v.entries().end(),
                     [](const Rational& q) { return q == 1; });
}

Rational require_chi(const MatrixEuler& e, const std::string& what) {
  if (!e.chi) {
    throw Error(ErrorCode::kMissingEulerCharacteristic,
                what + " has no Euler characteristic");
  }
  return *e.chi;
}

// phi_{f,h} : Pf o Ph => P(f o h), when it is known.
std::optional<MorphismId> compositor(const LaxFunctorBicat& p, ObjectId z,
                                     ObjectId x, ObjectId y, ObjectId f,
                                     ObjectId h) {
  const Bicategory& e = p.source();
  if (p.coherence()) {
    return p.coherence()->phi[e.key3(z, x, y)]
                             [f * e.hom(z, x).object_count() + h];
  }
  const Bicategory& b = p.target();
  const ObjectId src = b.compose1(p.object(z), p.object(x), p.object(y),
                                  p.map1(x, y, f), p.map1(z, x, h));
  const ObjectId dst = p.map1(z, y, e.compose1(z, x, y, f, h));
  if (src != dst) return std::nullopt;
  return b.hom(p.object(z), p.object(y)).identity(src);
}

void require_hcompose2(const LaxFunctorBicat& p) {
  if (!p.source().has_hcompose2() || !p.target().has_hcompose2()) {
    throw Error(ErrorCode::kMissingCompositionData,
                "cartesian 1-cell check needs horizontal composition in both "
                "bicategories");
  }
}

struct Lift {
  ObjectId h;
  MorphismId alpha;
  MorphismId beta;
};

struct Frame {
  ObjectId g;
  ObjectId h;
  MorphismId alpha;
  std::vector<Lift> lifts;
};

}  // namespace

std::optional<std::string> cartesian_1cell_counterexample(
    const LaxFunctorBicat& p, ObjectId x, ObjectId y, ObjectId f) {
  require_hcompose2(p);
  const Bicategory& e = p.source();
  const Bicategory& base = p.target();
  const ObjectId b = p.object(x), c = p.object(y);
  const ObjectId pf = p.map1(x, y, f);
  for (ObjectId z = 0; z < e.object_count(); ++z) {
    const ObjectId a = p.object(z);
    const FinCategory& ezy = e.hom(z, y);
    const FinCategory& ezx = e.hom(z, x);
    const FinCategory& bab = base.hom(a, b);
    const FinCategory& bac = base.hom(a, c);
    std::vector<Frame> frames;
    for (ObjectId g = 0; g < ezy.object_count(); ++g) {
      const ObjectId pg = p.map1(z, y, g);
      for (ObjectId h = 0; h < bab.object_count(); ++h) {
        const ObjectId pfh = base.compose1(a, b, c, pf, h);
        for (MorphismId alpha : isos(bac, pfh, pg)) {
          Frame fr{g, h, alpha, {}};
          for (ObjectId ht = 0; ht < ezx.object_count(); ++ht) {
            const ObjectId fht = e.compose1(z, x, y, f, ht);
            const auto phi = compositor(p, z, x, y, f, ht);
            for (MorphismId at : isos(ezy, fht, g)) {
              for (MorphismId bt : isos(bab, p.map1(z, x, ht), h)) {
                if (phi &&
                    bac.compose(alpha, base.whisker_left(a, b, c, pf, bt)) !=
                        bac.compose(p.map2(z, y, at), *phi)) {
                  continue;
                }
                fr.lifts.push_back({ht, at, bt});
              }
            }
          }
          if (fr.lifts.empty()) {
            return "no lift of the frame (g=" + quote(ezy.object_label(g)) +
                   ", h=" + quote(bab.object_label(h)) +
                   ", alpha=" + quote(bac.morphism_label(alpha)) +
                   ") from " + quote(e.object_label(z));
          }
          frames.push_back(std::move(fr));
        }
      }
    }
    for (const Frame& f1 : frames) {
      for (const Frame& f2 : frames) {
        for (MorphismId sigma : ezy.hom(f1.g, f2.g)) {
          for (MorphismId delta : bab.hom(f1.h, f2.h)) {
            if (bac.compose(f2.alpha, base.whisker_left(a, b, c, pf, delta)) !=
                bac.compose(p.map2(z, y, sigma), f1.alpha)) {
              continue;
            }
            for (const Lift& l1 : f1.lifts) {
              for (const Lift& l2 : f2.lifts) {
                std::size_t count = 0;
                for (MorphismId dt : ezx.hom(l1.h, l2.h)) {
                  if (ezy.compose(l2.alpha, e.whisker_left(z, x, y, f, dt)) ==
                          ezy.compose(sigma, l1.alpha) &&
                      bab.compose(delta, l1.beta) ==
                          bab.compose(l2.beta, p.map2(z, x, dt))) {
                    ++count;
                  }
                }
                if (count != 1) {
                  return "2-cell pair (sigma=" +
                         quote(ezy.morphism_label(sigma)) +
                         ", delta=" + quote(bab.morphism_label(delta)) +
                         ") has " + std::to_string(count) +
                         " lifts between " + quote(ezx.object_label(l1.h)) +
                         " and " + quote(ezx.object_label(l2.h));
                }
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_cartesian_1cell(const LaxFunctorBicat& p, ObjectId x, ObjectId y,
                        ObjectId f) {
  return !cartesian_1cell_counterexample(p, x, y, f);
}

nlohmann::json BiFibrationReport::to_json() const {
  return {{"locally_fibered_in_groupoids", locally_fibered_in_groupoids},
          {"one_lifts", one_lifts},
          {"all_1cells_cartesian", all_1cells_cartesian},
          {"fibered_in_pseudogroupoids", fibered_in_pseudogroupoids},
          {"cofibered_in_pseudogroupoids", cofibered_in_pseudogroupoids},
          {"witnesses", witnesses}};
}

namespace {

struct OneSide {
  bool local = true;
  bool lifts = true;
  bool cartesian = true;
  std::vector<std::string> witnesses;
};

OneSide classify_one_side(const LaxFunctorBicat& p) {
  OneSide out;
  const Bicategory& e = p.source();
  const Bicategory& base = p.target();
  const std::size_t n = e.object_count();
  auto hom_name = [&](ObjectId x, ObjectId y) {
    return "hom(" + e.object_label(x) + ", " + e.object_label(y) + ")";
  };
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      const FibrationReport fr = classify_fibration(p.hom_functor(x, y));
      if (!fr.fibered_in_groupoids) {
        out.local = false;
        std::string w = "functor on " + hom_name(x, y) +
                        " is not fibered in groupoids";
        if (!fr.witnesses.empty()) w += ": " + fr.witnesses.front();
        out.witnesses.push_back(std::move(w));
      }
    }
  }
  for (ObjectId y = 0; y < n; ++y) {
    const ObjectId c = p.object(y);
    for (ObjectId b = 0; b < base.object_count(); ++b) {
      const FinCategory& bbc = base.hom(b, c);
      for (ObjectId f = 0; f < bbc.object_count(); ++f) {
        bool found = false;
        for (ObjectId x = 0; x < n && !found; ++x) {
          if (p.object(x) != b) continue;
          for (ObjectId ft = 0; ft < e.hom(x, y).object_count() && !found;
               ++ft) {
            found = p.map1(x, y, ft) == f;
          }
        }
        if (!found) {
          out.lifts = false;
          out.witnesses.push_back("1-cell " + quote(bbc.object_label(f)) +
                                  " of hom(" + base.object_label(b) + ", " +
                                  base.object_label(c) +
                                  ") has no lift ending at " +
                                  quote(e.object_label(y)));
        }
      }
    }
  }
  struct Cell {
    ObjectId x, y, f;
  };
  std::vector<Cell> cells;
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      for (ObjectId f = 0; f < e.hom(x, y).object_count(); ++f) {
        cells.push_back({x, y, f});
      }
    }
  }
  const auto results = parallel_map(cells.size(), [&](std::size_t i) {
    return cartesian_1cell_counterexample(p, cells[i].x, cells[i].y,
                                          cells[i].f);
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!results[i]) continue;
    out.cartesian = false;
    out.witnesses.push_back(
        "1-cell " + quote(e.hom(cells[i].x, cells[i].y).object_label(cells[i].f)) +
        " of " + hom_name(cells[i].x, cells[i].y) + " is not cartesian: " +
        *results[i]);
  }
  return out;
}

}  // namespace

BiFibrationReport classify_bifibration(const LaxFunctorBicat& p) {
  BiFibrationReport r;
  const OneSide fib = classify_one_side(p);
  const OneSide cofib = classify_one_side(coop(p));
  r.locally_fibered_in_groupoids = fib.local;
  r.one_lifts = fib.lifts;
  r.all_1cells_cartesian = fib.cartesian;
  r.fibered_in_pseudogroupoids = fib.local && fib.lifts && fib.cartesian;
  r.cofibered_in_pseudogroupoids =
      cofib.local && cofib.lifts && cofib.cartesian;
  r.witnesses = fib.witnesses;
  for (const auto& w : cofib.witnesses) r.witnesses.push_back("coop: " + w);
  return r;
}

namespace {

void require_fibered(const BiFibrationReport& r, bool cofibered_too) {
  if (r.fibered_in_pseudogroupoids &&
      (!cofibered_too || r.cofibered_in_pseudogroupoids)) {
    return;
  }
  std::string why = cofibered_too
                        ? "lax functor is not fibered and cofibered in "
                          "pseudogroupoids"
                        : "lax functor is not fibered in pseudogroupoids";
  if (!r.witnesses.empty()) why += ": " + r.witnesses.front();
  throw Error(ErrorCode::kNotBiFibered, why);
}

template <typename Range, typename Label>
auto pick(const Range& candidates, CleavageChoice choice, Label label) {
  auto less = [&](const auto& a, const auto& b) { return label(a) < label(b); };
  return choice == CleavageChoice::kSmallestLabel
             ? *std::min_element(candidates.begin(), candidates.end(), less)
             : *std::max_element(candidates.begin(), candidates.end(), less);
}

// A fiber bicategory together with its inclusion into E.
struct Fiber {
  BicatPtr bicat;
  std::vector<ObjectId> objects;
  std::vector<FiberInclusion> homs;

  const FiberInclusion& hom(ObjectId i, ObjectId j) const {
    return homs[i * objects.size() + j];
  }
  std::optional<ObjectId> index_of(ObjectId e) const {
    for (ObjectId i = 0; i < objects.size(); ++i) {
      if (objects[i] == e) return i;
    }
    return std::nullopt;
  }
};

std::optional<ObjectId> position(const std::vector<ObjectId>& v, ObjectId x) {
  const auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) return std::nullopt;
  return static_cast<ObjectId>(it - v.begin());
}

Fiber build_fiber(const LaxFunctorBicat& p, ObjectId b,
                  CleavageChoice choice) {
  const Bicategory& e = p.source();
  const Bicategory& base = p.target();
  if (b >= base.object_count()) {
    throw Error(ErrorCode::kObjectNotInBase,
                "object " + std::to_string(b) + " is not in the base");
  }
  Fiber fib;
  for (ObjectId x = 0; x < e.object_count(); ++x) {
    if (p.object(x) == b) fib.objects.push_back(x);
  }
  const std::size_t n = fib.objects.size();
  const ObjectId id_b = base.identity1(b);
  const FinCategory& bbb = base.hom(b, b);
  std::vector<std::string> labels;
  std::vector<CategoryPtr> homs;
  for (ObjectId i = 0; i < n; ++i) {
    labels.push_back(e.object_label(fib.objects[i]));
    for (ObjectId j = 0; j < n; ++j) {
      fib.homs.push_back(fiber_inclusion(
          p.hom_functor(fib.objects[i], fib.objects[j]), id_b));
      homs.push_back(fib.homs.back().category);
    }
  }
  // Chosen 2-cell w' => w of E(x, y) over an iso id_b => Pw; returns the
  // fiber index of w' and the lift.
  auto lift_into_fiber = [&](ObjectId i, ObjectId j, ObjectId w) {
    const ObjectId x = fib.objects[i], y = fib.objects[j];
    const FinCategory& exy = e.hom(x, y);
    const ObjectId pw = p.map1(x, y, w);
    const auto theta = pw == id_b ? std::optional(bbb.identity(id_b))
                                  : find_isomorphism(bbb, id_b, pw);
    if (!theta) {
      throw Error(ErrorCode::kNotBiFibered,
                  "1-cell " + quote(exy.object_label(w)) +
                      " is not over a 1-cell isomorphic to the identity");
    }
    MorphismId lift = exy.identity(w);
    if (!bbb.is_identity(*theta)) {
      std::vector<MorphismId> candidates;
      for (ObjectId s = 0; s < exy.object_count(); ++s) {
        for (MorphismId m : exy.hom(s, w)) {
          if (p.map2(x, y, m) == *theta) candidates.push_back(m);
        }
      }
      if (candidates.empty()) {
        throw Error(ErrorCode::kNotBiFibered,
                    "no 2-cell lift into " + quote(exy.object_label(w)));
      }
      lift = pick(candidates, choice,
                  [&](MorphismId m) { return exy.morphism_label(m); });
    }
    const auto idx = position(fib.hom(i, j).objects, exy.src(lift));
    if (!idx) {
      throw Error(ErrorCode::kInternal, "2-cell lift leaves the fiber");
    }
    return std::pair{*idx, lift};
  };
  BicategoryData d;
  d.graph = CatGraph(labels, homs);
  for (ObjectId i = 0; i < n; ++i) {
    const ObjectId x = fib.objects[i];
    d.identity1.push_back(lift_into_fiber(i, i, e.identity1(x)).first);
  }
  d.compose1.resize(n * n * n);
  if (e.has_hcompose2()) d.hcompose2.emplace(n * n * n);
  for (ObjectId i = 0; i < n; ++i) {
    for (ObjectId j = 0; j < n; ++j) {
      for (ObjectId k = 0; k < n; ++k) {
        const ObjectId x = fib.objects[i], y = fib.objects[j],
                       z = fib.objects[k];
        const FiberInclusion& ij = fib.hom(i, j);
        const FiberInclusion& jk = fib.hom(j, k);
        const FiberInclusion& ik = fib.hom(i, k);
        const std::size_t nu = ij.objects.size();
        std::vector<std::pair<ObjectId, MorphismId>> composites;
        for (ObjectId v = 0; v < jk.objects.size(); ++v) {
          for (ObjectId u = 0; u < nu; ++u) {
            composites.push_back(lift_into_fiber(
                i, k, e.compose1(x, y, z, jk.objects[v], ij.objects[u])));
            d.compose1[(i * n + j) * n + k].push_back(composites.back().first);
          }
        }
        if (!e.has_hcompose2()) continue;
        const FinCategory& exz = e.hom(x, z);
        const FinCategory& fxz = *ik.category;
        const std::size_t ma = ij.morphisms.size();
        for (MorphismId be = 0; be < jk.morphisms.size(); ++be) {
          for (MorphismId al = 0; al < ma; ++al) {
            const FinCategory& fij = *ij.category;
            const FinCategory& fjk = *jk.category;
            const auto& [c1, l1] = composites[fjk.src(be) * nu + fij.src(al)];
            const auto& [c2, l2] = composites[fjk.dst(be) * nu + fij.dst(al)];
            const MorphismId ba = e.hcompose2(x, y, z, jk.morphisms[be],
                                              ij.morphisms[al]);
            const MorphismId target = exz.compose(ba, l1);
            std::vector<MorphismId> found;
            for (MorphismId g : fxz.hom(c1, c2)) {
              if (exz.compose(l2, ik.morphisms[g]) == target) {
                found.push_back(g);
              }
            }
            if (found.size() != 1) {
              throw Error(ErrorCode::kNonUniqueLift,
                          "horizontal composite in the fiber has " +
                              std::to_string(found.size()) + " candidates");
            }
            (*d.hcompose2)[(i * n + j) * n + k].push_back(found.front());
          }
        }
      }
    }
  }
  fib.bicat = share(Bicategory::validate(std::move(d)));
  return fib;
}

// f* : fiber(c) -> fiber(b) built from cartesian 1-cell lifts. Every
// 1-cell is assumed cartesian (checked by the caller).
struct Pullback {
  std::optional<LaxFunctorBicat> functor;
  std::vector<ObjectId> lifts;  // f~_y in E(f*y, y), indexed by y
};

Pullback build_pullback(const LaxFunctorBicat& p, const Fiber& fb,
                        const Fiber& fc, ObjectId f, CleavageChoice choice) {
  const Bicategory& e = p.source();
  Pullback out;
  std::vector<ObjectId> object_map;
  for (ObjectId yi = 0; yi < fc.objects.size(); ++yi) {
    const ObjectId y = fc.objects[yi];
    std::vector<std::pair<ObjectId, ObjectId>> candidates;
    std::optional<std::pair<ObjectId, ObjectId>> identity;
    for (ObjectId xi = 0; xi < fb.objects.size(); ++xi) {
      const ObjectId x = fb.objects[xi];
      for (ObjectId ft = 0; ft < e.hom(x, y).object_count(); ++ft) {
        if (p.map1(x, y, ft) != f) continue;
        candidates.emplace_back(xi, ft);
        if (x == y && ft == e.identity1(y)) identity = candidates.back();
      }
    }
    if (candidates.empty()) {
      throw Error(ErrorCode::kNotBiFibered,
                  "no 1-cell lift ending at " + quote(e.object_label(y)));
    }
    const auto chosen =
        identity ? *identity
                 : pick(candidates, choice, [&](const auto& c) {
                     return std::pair{c.first,
                                      e.hom(fb.objects[c.first], y)
                                          .object_label(c.second)};
                   });
    object_map.push_back(chosen.first);
    out.lifts.push_back(chosen.second);
  }
  std::vector<Functor> homs;
  for (ObjectId yi = 0; yi < fc.objects.size(); ++yi) {
    for (ObjectId yj = 0; yj < fc.objects.size(); ++yj) {
      const ObjectId y = fc.objects[yi], y2 = fc.objects[yj];
      const ObjectId xi = object_map[yi], xj = object_map[yj];
      const ObjectId x = fb.objects[xi], x2 = fb.objects[xj];
      const FiberInclusion& src = fc.hom(yi, yj);
      const FiberInclusion& dst = fb.hom(xi, xj);
      const FinCategory& exy = e.hom(x, y2);
      const ObjectId f1 = out.lifts[yi], f2 = out.lifts[yj];
      std::vector<ObjectId> objects;
      std::vector<MorphismId> taus;
      for (ObjectId u = 0; u < src.objects.size(); ++u) {
        const ObjectId uf = e.compose1(x, y, y2, src.objects[u], f1);
        std::vector<ObjectId> ws(dst.objects.size());
        std::iota(ws.begin(), ws.end(), 0);
        if (choice == CleavageChoice::kLargestLabel) {
          std::reverse(ws.begin(), ws.end());
        }
        std::optional<std::pair<ObjectId, MorphismId>> hit;
        for (ObjectId w : ws) {
          const ObjectId fw = e.compose1(x, x2, y2, f2, dst.objects[w]);
          if (auto tau = find_isomorphism(exy, fw, uf)) {
            hit = std::pair{w, *tau};
            break;
          }
        }
        if (!hit) {
          throw Error(ErrorCode::kNotBiFibered,
                      "1-cell " + quote(src.category->object_label(u)) +
                          " has no image under the pullback");
        }
        objects.push_back(hit->first);
        taus.push_back(hit->second);
      }
      std::vector<MorphismId> morphisms;
      const FinCategory& sc = *src.category;
      const FinCategory& dc = *dst.category;
      if (sc.morphism_count() > 0 && !e.has_hcompose2()) {
        throw Error(ErrorCode::kMissingCompositionData,
                    "pullback on 2-cells needs horizontal composition");
      }
      for (MorphismId s = 0; s < sc.morphism_count(); ++s) {
        const MorphismId rhs = exy.compose(
            e.whisker_right(x, y, y2, src.morphisms[s], f1), taus[sc.src(s)]);
        std::vector<MorphismId> found;
        for (MorphismId dl : dc.hom(objects[sc.src(s)], objects[sc.dst(s)])) {
          if (exy.compose(taus[sc.dst(s)],
                          e.whisker_left(x, x2, y2, f2, dst.morphisms[dl])) ==
              rhs) {
            found.push_back(dl);
          }
        }
        if (found.size() != 1) {
          throw Error(ErrorCode::kNonUniqueLift,
                      "2-cell " + quote(sc.morphism_label(s)) + " has " +
                          std::to_string(found.size()) +
                          " images under the pullback");
        }
        morphisms.push_back(found.front());
      }
      homs.push_back(Functor::validate(src.category, dst.category,
                                       std::move(objects),
                                       std::move(morphisms)));
    }
  }
  out.functor = LaxFunctorBicat::validate(fc.bicat, fb.bicat,
                                          std::move(object_map),
                                          std::move(homs), std::nullopt);
  return out;
}

Trihomomorphism build_trihom(const LaxFunctorBicat& p, CleavageChoice choice) {
  const Bicategory& e = p.source();
  const Bicategory& base = p.target();
  const std::size_t n = base.object_count();
  std::vector<Fiber> fibers;
  TrihomData d;
  d.base = p.target_ptr();
  for (ObjectId b = 0; b < n; ++b) {
    fibers.push_back(build_fiber(p, b, choice));
    d.fibers.push_back(fibers.back().bicat);
  }
  d.pullback1.resize(n * n);
  d.pullback2.resize(n * n);
  for (ObjectId b = 0; b < n; ++b) {
    for (ObjectId c = 0; c < n; ++c) {
      const FinCategory& bbc = base.hom(b, c);
      std::vector<Pullback> pbs;
      for (ObjectId f = 0; f < bbc.object_count(); ++f) {
        pbs.push_back(build_pullback(p, fibers[b], fibers[c], f, choice));
        d.pullback1[b * n + c].push_back(*pbs.back().functor);
      }
      const Fiber& fb = fibers[b];
      const Fiber& fc = fibers[c];
      for (MorphismId al = 0; al < bbc.morphism_count(); ++al) {
        const ObjectId f = bbc.src(al), g = bbc.dst(al);
        // Target image of the 2-cell f~ o w => g~, when it is determined.
        const ObjectId fid = base.compose1(b, b, c, f, base.identity1(b));
        std::vector<ObjectId> comps;
        for (ObjectId yi = 0; yi < fc.objects.size(); ++yi) {
          const ObjectId y = fc.objects[yi];
          const ObjectId fi = pbs[f].functor->object(yi);
          const ObjectId gi = pbs[g].functor->object(yi);
          const ObjectId xf = fb.objects[fi], xg = fb.objects[gi];
          const FiberInclusion& hom = fb.hom(gi, fi);
          const FinCategory& exy = e.hom(xg, y);
          std::vector<ObjectId> ws(hom.objects.size());
          std::iota(ws.begin(), ws.end(), 0);
          std::sort(ws.begin(), ws.end(), [&](ObjectId l, ObjectId r) {
            return hom.category->object_label(l) <
                   hom.category->object_label(r);
          });
          if (choice == CleavageChoice::kLargestLabel) {
            std::reverse(ws.begin(), ws.end());
          }
          std::optional<ObjectId> hit;
          for (ObjectId w : ws) {
            const ObjectId fw =
                e.compose1(xg, xf, y, pbs[f].lifts[yi], hom.objects[w]);
            const ObjectId pfw = p.map1(xg, y, fw);
            std::optional<MorphismId> want;
            if (pfw == fid && base.has_unitors()) {
              want = bbc.compose(al, base.right_unitor(b, c, f));
            } else if (pfw == f) {
              want = al;
            }
            for (MorphismId rho : exy.hom(fw, pbs[g].lifts[yi])) {
              if (!want || p.map2(xg, y, rho) == *want) {
                hit = w;
                break;
              }
            }
            if (hit) break;
          }
          if (!hit) {
            throw Error(ErrorCode::kNotBiFibered,
                        "2-cell " + quote(bbc.morphism_label(al)) +
                            " has no component at " +
                            quote(e.object_label(y)));
          }
          comps.push_back(*hit);
        }
        d.pullback2[b * n + c].push_back(std::move(comps));
      }
    }
  }
  return Trihomomorphism::validate(std::move(d));
}

}  // namespace

Bicategory fiber_bicategory(const LaxFunctorBicat& p, ObjectId b,
                            CleavageChoice choice) {
  if (b >= p.target().object_count()) {
    throw Error(ErrorCode::kObjectNotInBase,
                "object " + std::to_string(b) + " is not in the base");
  }
  require_fibered(classify_bifibration(p), false);
  return *build_fiber(p, b, choice).bicat;
}

nlohmann::json FiberBiequivalenceReport::to_json() const {
  return {{"biequivalence", biequivalence.to_json()},
          {"chi_source", to_string(chi_source)},
          {"chi_target", to_string(chi_target)},
          {"holds", holds}};
}

FiberBiequivalenceReport verify_fiber_biequivalence(const LaxFunctorBicat& p,
                                                    ObjectId b, ObjectId c,
                                                    ObjectId f) {
  const Bicategory& base = p.target();
  if (b >= base.object_count() || c >= base.object_count()) {
    throw Error(ErrorCode::kObjectNotInBase, "object is not in the base");
  }
  if (f >= base.hom(b, c).object_count()) {
    throw Error(ErrorCode::kIndexMismatch, "1-cell is not in hom(b, c)");
  }
  require_fibered(classify_bifibration(p), true);
  const CleavageChoice choice = CleavageChoice::kSmallestLabel;
  const Fiber fb = build_fiber(p, b, choice);
  const Fiber fc = build_fiber(p, c, choice);
  const Pullback pb = build_pullback(p, fb, fc, f, choice);
  FiberBiequivalenceReport r;
  r.biequivalence = check_biequivalence(*pb.functor);
  r.chi_source = pseudogroupoid_euler(*fc.bicat);
  r.chi_target = pseudogroupoid_euler(*fb.bicat);
  r.holds = r.biequivalence.holds && r.chi_source == r.chi_target;
  return r;
}

Trihomomorphism Trihomomorphism::validate(TrihomData d) {
  std::vector<Violation> out;
  auto bad = [&](std::string msg) {
    out.push_back({ViolationKind::kDanglingEndpoint, std::move(msg)});
  };
  if (!d.base) {
    bad("trihomomorphism has no base");
    throw ValidationError(ErrorCode::kIllTypedComponent, std::move(out));
  }
  const Bicategory& base = *d.base;
  const std::size_t n = base.object_count();
  if (d.fibers.size() != n || d.pullback1.size() != n * n ||
      d.pullback2.size() != n * n ||
      std::any_of(d.fibers.begin(), d.fibers.end(),
                  [](const BicatPtr& f) { return !f; })) {
    bad("fibers or pullbacks not given for every base object/pair");
    throw ValidationError(ErrorCode::kIllTypedComponent, std::move(out));
  }
  for (ObjectId b = 0; b < n; ++b) {
    for (ObjectId c = 0; c < n; ++c) {
      const FinCategory& bbc = base.hom(b, c);
      const auto& pb1 = d.pullback1[b * n + c];
      const auto& pb2 = d.pullback2[b * n + c];
      if (pb1.size() != bbc.object_count()) {
        bad("pullbacks along hom(" + base.object_label(b) + ", " +
            base.object_label(c) + ") not given for every 1-cell");
        continue;
      }
      bool endpoints_ok = true;
      for (ObjectId f = 0; f < pb1.size(); ++f) {
        if (pb1[f].source_ptr() != d.fibers[c] ||
            pb1[f].target_ptr() != d.fibers[b]) {
          endpoints_ok = false;
          bad("pullback along " + quote(bbc.object_label(f)) +
              " does not run between the fibers");
        }
      }
      if (!endpoints_ok) continue;
      if (pb2.size() != bbc.morphism_count()) {
        bad("components along hom(" + base.object_label(b) + ", " +
            base.object_label(c) + ") not given for every 2-cell");
        continue;
      }
      const Bicategory& fb = *d.fibers[b];
      const Bicategory& fc = *d.fibers[c];
      for (MorphismId al = 0; al < pb2.size(); ++al) {
        const std::string name = quote(bbc.morphism_label(al));
        if (pb2[al].size() != fc.object_count()) {
          bad("2-cell " + name + " lacks components");
          continue;
        }
        const LaxFunctorBicat& fstar = pb1[bbc.src(al)];
        const LaxFunctorBicat& gstar = pb1[bbc.dst(al)];
        for (ObjectId y = 0; y < fc.object_count(); ++y) {
          const ObjectId gy = gstar.object(y), fy = fstar.object(y);
          if (pb2[al][y] >= fb.hom(gy, fy).object_count()) {
            bad("component of " + name + " at " + quote(fc.object_label(y)) +
                " is not a 1-cell " + quote(fb.object_label(gy)) + " -> " +
                quote(fb.object_label(fy)));
          }
        }
      }
    }
  }
  if (!out.empty()) {
    throw ValidationError(ErrorCode::kIllTypedComponent, std::move(out));
  }
  Trihomomorphism t;
  t.data_ = std::move(d);
  return t;
}

Trihomomorphism induced_trihomomorphism(const LaxFunctorBicat& p,
                                        CleavageChoice choice) {
  require_fibered(classify_bifibration(p), false);
  return build_trihom(p, choice);
}

GrothendieckCG grothendieck_cg(const Trihomomorphism& t) {
  const Bicategory& base = t.base();
  GrothendieckCG gr;
  for (ObjectId b = 0; b < base.object_count(); ++b) {
    for (ObjectId x = 0; x < t.fiber(b).object_count(); ++x) {
      gr.objects.push_back({b, x});
      gr.labels.push_back("(" + base.object_label(b) + "," +
                          t.fiber(b).object_label(x) + ")");
    }
  }
  const std::size_t n = gr.objects.size();
  std::vector<Rational> chis(n * n);
  bool all_chi = true;
  for (ObjectId i = 0; i < n; ++i) {
    for (ObjectId j = 0; j < n; ++j) {
      const auto [b, x] = gr.objects[i];
      const auto [c, y] = gr.objects[j];
      const FinCategory& bbc = base.hom(b, c);
      const Bicategory& fb = t.fiber(b);
      GrHom hom;
      std::vector<ObjectId> star(bbc.object_count());
      for (ObjectId f = 0; f < bbc.object_count(); ++f) {
        star[f] = t.pullback1(b, c, f).object(y);
        const FinCategory& fu = fb.hom(x, star[f]);
        for (ObjectId u = 0; u < fu.object_count(); ++u) {
          hom.cells.push_back({f, u});
          hom.labels.push_back("(" + bbc.object_label(f) + "," +
                               fu.object_label(u) + ")");
        }
      }
      const std::size_t m = hom.cells.size();
      std::vector<Rational> counts(m * m);
      for (std::size_t r = 0; r < m; ++r) {
        const auto [f, u] = hom.cells[r];
        const FinCategory& fu = fb.hom(x, star[f]);
        for (std::size_t s = 0; s < m; ++s) {
          const auto [g, v] = hom.cells[s];
          std::size_t count = 0;
          for (MorphismId al : bbc.hom(f, g)) {
            const ObjectId comp = t.pullback2(b, c, al, y);
            const ObjectId av = fb.compose1(x, star[g], star[f], comp, v);
            count += fu.hom(u, av).size();
          }
          counts[r * m + s] = count;
        }
      }
      hom.zeta = QMatrix::square(hom.labels, std::move(counts));
      if (m > 0) {
        const auto e = matrix_euler(hom.zeta);
        if (e.chi) {
          chis[i * n + j] = *e.chi;
        } else {
          all_chi = false;
        }
      }
      gr.homs.push_back(std::move(hom));
    }
  }
  if (all_chi) gr.similarity = QMatrix::square(gr.labels, std::move(chis));
  return gr;
}

namespace {

std::pair<QVector, bool> hom_coweighting(const Trihomomorphism& t,
                                         const GrothendieckCG& gr, ObjectId i,
                                         ObjectId j) {
  const auto [b, x] = gr.objects[i];
  const auto [c, y] = gr.objects[j];
  const GrHom& hom = gr.hom(i, j);
  if (hom.cells.empty()) return {QVector(hom.labels, {}), true};
  const FinCategory& bbc = t.base().hom(b, c);
  const auto kb = solve_coweighting(similarity_matrix(bbc));
  if (!kb) {
    throw Error(ErrorCode::kMissingCoweighting,
                "base hom(" + t.base().object_label(b) + ", " +
                    t.base().object_label(c) + ") has no coweighting");
  }
  std::vector<std::optional<QVector>> kf(bbc.object_count());
  std::vector<Rational> k;
  for (const GrCell& cell : hom.cells) {
    if (!kf[cell.base]) {
      const ObjectId ystar = t.pullback1(b, c, cell.base).object(y);
      kf[cell.base] =
          solve_coweighting(similarity_matrix(t.fiber(b).hom(x, ystar)));
      if (!kf[cell.base]) {
        throw Error(ErrorCode::kMissingCoweighting,
                    "fiber hom under " +
                        quote(bbc.object_label(cell.base)) +
                        " has no coweighting");
      }
    }
    k.push_back((*kb)[cell.base] * (*kf[cell.base])[cell.fiber]);
  }
  QVector out(hom.labels, std::move(k));
  const bool ok = all_ones(multiply(out, hom.zeta));
  return {std::move(out), ok};
}

}  // namespace

QVector gr_hom_coweighting(const Trihomomorphism& t, const GrothendieckCG& gr,
                           ObjectId i, ObjectId j) {
  auto [k, ok] = hom_coweighting(t, gr, i, j);
  if (!ok) {
    throw Error(ErrorCode::kInternal,
                "product coweighting fails on hom(" + gr.labels[i] + ", " +
                    gr.labels[j] + ")");
  }
  return k;
}

std::string GrBicatReport::equation() const {
  std::string out = to_string(chi_total) + " =";
  for (std::size_t i = 0; i < fiber_chi.size(); ++i) {
    out += i == 0 ? " " : " + ";
    out += product_term(base_coweighting[i], fiber_chi[i]);
  }
  if (fiber_chi.empty()) out += " 0";
  return out;
}

nlohmann::json GrBicatReport::to_json() const {
  nlohmann::json fibers = nlohmann::json::object();
  for (std::size_t i = 0; i < fiber_chi.size(); ++i) {
    fibers[base_coweighting.index()[i]] = to_string(fiber_chi[i]);
  }
  return {{"chi_total", to_string(chi_total)},
          {"base_coweighting", bicat_euler::to_json(base_coweighting)},
          {"fiber_chi", fibers},
          {"product_coweighting", bicat_euler::to_json(product_coweighting)},
          {"product_coweighting_ok", product_coweighting_ok},
          {"hom_coweightings_ok", hom_coweightings_ok},
          {"rhs", to_string(rhs)},
          {"equation", equation()},
          {"holds", holds}};
}

GrBicatReport verify_gr_formula_bicat(const Trihomomorphism& t) {
  const Bicategory& base = t.base();
  GrBicatReport r;
  const auto kb = solve_coweighting(similarity_matrix_cg(base.graph()));
  if (!kb) {
    throw Error(ErrorCode::kMissingEulerCharacteristic,
                "base bicategory has no coweighting");
  }
  r.base_coweighting = *kb;
  std::vector<QVector> kx;
  r.rhs = 0;
  for (ObjectId b = 0; b < base.object_count(); ++b) {
    const MatrixEuler e = euler_char_cg(t.fiber(b).graph());
    r.fiber_chi.push_back(
        require_chi(e, "fiber over " + quote(base.object_label(b))));
    kx.push_back(*e.coweighting);
    r.rhs += (*kb)[b] * r.fiber_chi.back();
  }
  const GrothendieckCG gr = grothendieck_cg(t);
  if (!gr.similarity) {
    throw Error(ErrorCode::kMissingEulerCharacteristic,
                "a Grothendieck hom category has no Euler characteristic");
  }
  r.chi_total = require_chi(matrix_euler(*gr.similarity),
                            "Grothendieck cat-graph");
  std::vector<Rational> k;
  for (const GrObject& o : gr.objects) {
    k.push_back((*kb)[o.base] * kx[o.base][o.fiber]);
  }
  r.product_coweighting = QVector(gr.labels, std::move(k));
  r.product_coweighting_ok =
      all_ones(multiply(r.product_coweighting, *gr.similarity));
  r.hom_coweightings_ok = true;
  for (ObjectId i = 0; i < gr.objects.size(); ++i) {
    for (ObjectId j = 0; j < gr.objects.size(); ++j) {
      r.hom_coweightings_ok =
          hom_coweighting(t, gr, i, j).second && r.hom_coweightings_ok;
    }
  }
  r.holds = r.chi_total == r.rhs && r.product_coweighting_ok &&
            r.hom_coweightings_ok;
  return r;
}

GrBicatReport verify_gr_formula_bicat(const LaxFunctorBicat& p) {
  return verify_gr_formula_bicat(induced_trihomomorphism(p));
}

std::string ProductBicatReport::equation() const {
  std::string out = to_string(chi_total) + " =";
  for (std::size_t i = 0; i < components.size(); ++i) {
    out += i == 0 ? " " : " + ";
    out += product_term(components[i].chi_base, components[i].chi_fiber);
  }
  if (components.empty()) out += " 0";
  return out;
}

nlohmann::json ProductBicatReport::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components) {
    comps.push_back({{"base_objects", c.base_objects},
                     {"chi_base", to_string(c.chi_base)},
                     {"fiber_object", c.fiber_object},
                     {"chi_fiber", to_string(c.chi_fiber)},
                     {"fiber_chi_constant", c.fiber_chi_constant},
                     {"cleavage_independent", c.cleavage_independent}});
  }
  return {{"chi_total", to_string(chi_total)},
          {"components", comps},
          {"chi_grothendieck", to_string(chi_grothendieck)},
          {"grothendieck_matches", grothendieck_matches},
          {"rhs", to_string(rhs)},
          {"equation", equation()},
          {"holds", holds}};
}

ProductBicatReport verify_product_formula_bicat(const LaxFunctorBicat& p) {
  require_fibered(classify_bifibration(p), true);
  const Bicategory& base = p.target();
  ProductBicatReport r;
  r.chi_total =
      require_chi(euler_char_cg(p.source().graph()), "total bicategory");
  r.rhs = 0;
  for (const auto& comp : connected_components_cg(base.graph())) {
    ProductBicatComponent pc;
    for (ObjectId b : comp) pc.base_objects.push_back(base.object_label(b));
    pc.chi_base = require_chi(
        euler_char_cg(full_sub_catgraph(base.graph(), comp)),
        "base component");
    pc.fiber_object = base.object_label(comp.front());
    pc.fiber_chi_constant = true;
    pc.cleavage_independent = true;
    for (ObjectId b : comp) {
      const Rational chi = pseudogroupoid_euler(
          *build_fiber(p, b, CleavageChoice::kSmallestLabel).bicat);
      const Rational other = pseudogroupoid_euler(
          *build_fiber(p, b, CleavageChoice::kLargestLabel).bicat);
      if (b == comp.front()) pc.chi_fiber = chi;
      pc.fiber_chi_constant = pc.fiber_chi_constant && chi == pc.chi_fiber;
      pc.cleavage_independent = pc.cleavage_independent && chi == other;
    }
    r.rhs += pc.chi_base * pc.chi_fiber;
    r.components.push_back(std::move(pc));
  }
  const GrothendieckCG gr =
      grothendieck_cg(build_trihom(p, CleavageChoice::kSmallestLabel));
  if (!gr.similarity) {
    throw Error(ErrorCode::kMissingEulerCharacteristic,
                "a Grothendieck hom category has no Euler characteristic");
  }
  r.chi_grothendieck =
      require_chi(matrix_euler(*gr.similarity), "Grothendieck cat-graph");
  r.grothendieck_matches = r.chi_grothendieck == r.chi_total;
  r.holds = r.chi_total == r.rhs && r.grothendieck_matches &&
            std::all_of(r.components.begin(), r.components.end(),
                        [](const ProductBicatComponent& c) {
                          return c.fiber_chi_constant &&
                                 c.cleavage_independent;
                        });
  return r;
}

namespace {

std::string group_label(std::size_t k) {
  if (k == 0) return "e";
  if (k == 1) return "g";
  return "g" + std::to_string(k);
}

// Indiscrete category on Z/m times BZ/n. Morphism (s, t, k) has index
// (s * m + t) * n + k.
CategoryPtr cyclic_hom(std::size_t m, std::size_t n) {
  CategorySpec spec;
  auto one = [&](std::size_t s) {
    return m == 1 ? std::string("i") : "f" + std::to_string(s);
  };
  auto label = [&](std::size_t s, std::size_t t, std::size_t k) {
    if (m == 1) return group_label(k);
    std::string l = one(s) + ">" + one(t);
    return k == 0 ? l : l + ":" + group_label(k);
  };
  for (std::size_t s = 0; s < m; ++s) spec.objects.push_back(one(s));
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      for (std::size_t k = 0; k < n; ++k) {
        spec.morphisms.push_back({label(s, t, k), one(s), one(t)});
      }
    }
  }
  for (std::size_t s = 0; s < m; ++s) {
    spec.identities.emplace_back(one(s), label(s, s, 0));
  }
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t k2 = 0; k2 < n; ++k2) {
            spec.compositions.push_back({label(t, u, k2), label(s, t, k),
                                         label(s, u, (k + k2) % n)});
          }
        }
      }
    }
  }
  return make_category(spec);
}

}  // namespace

Bicategory cyclic_pseudogroupoid(std::size_t objects, std::size_t m,
                                 std::size_t n) {
  if (m == 0 || n == 0) {
    throw Error(ErrorCode::kIndexMismatch, "cyclic orders must be positive");
  }
  const CategoryPtr hom = cyclic_hom(m, n);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < objects; ++x) labels.push_back(std::to_string(x));
  const std::size_t o = objects;
  BicategoryData d;
  d.graph = CatGraph(labels, std::vector<CategoryPtr>(o * o, hom));
  d.identity1.assign(o, 0);
  std::vector<ObjectId> c1;
  std::vector<MorphismId> c2;
  const std::size_t mc = m * m * n;
  for (ObjectId g = 0; g < m; ++g) {
    for (ObjectId f = 0; f < m; ++f) c1.push_back((g + f) % m);
  }
  for (MorphismId be = 0; be < mc; ++be) {
    for (MorphismId al = 0; al < mc; ++al) {
      const std::size_t s = (be / n / m + al / n / m) % m;
      const std::size_t t = (be / n % m + al / n % m) % m;
      c2.push_back((s * m + t) * n + (be % n + al % n) % n);
    }
  }
  d.compose1.assign(o * o * o, c1);
  d.hcompose2.emplace(o * o * o, c2);
  std::vector<MorphismId> assoc;
  for (ObjectId h = 0; h < m; ++h) {
    for (ObjectId g = 0; g < m; ++g) {
      for (ObjectId f = 0; f < m; ++f) {
        const std::size_t s = (h + g + f) % m;
        assoc.push_back((s * m + s) * n);
      }
    }
  }
  std::vector<MorphismId> unit;
  for (ObjectId f = 0; f < m; ++f) unit.push_back((f * m + f) * n);
  d.associator.emplace(o * o * o * o, assoc);
  d.left_unitor.emplace(o * o, unit);
  d.right_unitor.emplace(o * o, unit);
  return Bicategory::validate(std::move(d));
}

Bicategory one_object_2group(std::size_t n) {
  Bicategory b = cyclic_pseudogroupoid(1, 1, n);
  BicategoryData d = b.data();
  d.graph = CatGraph({"*"}, {b.hom_ptr(0, 0)});
  return Bicategory::validate(std::move(d));
}

namespace {

LaxFunctorBicat strict_projection(
    const BicatPtr& source, const BicatPtr& target,
    const std::vector<ObjectId>& object_map,
    const std::function<ObjectId(ObjectId, ObjectId, ObjectId)>& on1,
    const std::function<MorphismId(ObjectId, ObjectId, MorphismId)>& on2) {
  const std::size_t n = source->object_count();
  std::vector<Functor> homs;
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      const FinCategory& h = source->hom(x, y);
      std::vector<ObjectId> objs;
      std::vector<MorphismId> mors;
      for (ObjectId f = 0; f < h.object_count(); ++f) objs.push_back(on1(x, y, f));
      for (MorphismId a = 0; a < h.morphism_count(); ++a) {
        mors.push_back(on2(x, y, a));
      }
      homs.push_back(Functor::validate(
          source->hom_ptr(x, y),
          target->hom_ptr(object_map[x], object_map[y]), std::move(objs),
          std::move(mors)));
    }
  }
  return LaxFunctorBicat::validate(source, target, object_map,
                                   std::move(homs), std::nullopt);
}

}  // namespace

LaxFunctorBicat product_projection(const BicatPtr& base,
                                   const BicatPtr& fiber) {
  const BicatPtr total = share(product_bicat(*base, *fiber));
  const std::size_t nf = fiber->object_count();
  std::vector<ObjectId> object_map;
  for (ObjectId i = 0; i < total->object_count(); ++i) {
    object_map.push_back(i / nf);
  }
  return strict_projection(
      total, base, object_map,
      [&](ObjectId x, ObjectId y, ObjectId f) {
        return f / fiber->hom(x % nf, y % nf).object_count();
      },
      [&](ObjectId x, ObjectId y, MorphismId a) {
        return a / fiber->hom(x % nf, y % nf).morphism_count();
      });
}

LaxFunctorBicat collapse_to_point(const BicatPtr& source) {
  return strict_projection(
      source, share(one_object_2group(1)),
      std::vector<ObjectId>(source->object_count(), 0),
      [](ObjectId, ObjectId, ObjectId) { return ObjectId{0}; },
      [](ObjectId, ObjectId, MorphismId) { return MorphismId{0}; });
}

LaxFunctorBicat coproduct_lax_functor(
    const std::vector<LaxFunctorBicat>& parts) {
  std::vector<BicatPtr> sources, targets;
  for (const auto& p : parts) {
    sources.push_back(p.source_ptr());
    targets.push_back(p.target_ptr());
  }
  const BicatPtr source = share(coproduct_bicat(sources));
  const BicatPtr target = share(coproduct_bicat(targets));
  std::vector<std::pair<std::size_t, ObjectId>> origin;
  std::vector<ObjectId> offset;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    offset.push_back(k == 0 ? 0
                            : offset[k - 1] +
                                  parts[k - 1].target().object_count());
    for (ObjectId x = 0; x < parts[k].source().object_count(); ++x) {
      origin.emplace_back(k, x);
    }
  }
  const std::size_t n = origin.size();
  std::vector<ObjectId> object_map;
  for (const auto& [k, x] : origin) {
    object_map.push_back(offset[k] + parts[k].object(x));
  }
  std::vector<Functor> homs;
  for (ObjectId i = 0; i < n; ++i) {
    for (ObjectId j = 0; j < n; ++j) {
      if (origin[i].first == origin[j].first) {
        homs.push_back(parts[origin[i].first].hom_functor(origin[i].second,
                                                          origin[j].second));
      } else {
        homs.push_back(Functor::validate(source->hom_ptr(i, j),
                                         target->hom_ptr(object_map[i],
                                                         object_map[j]),
                                         {}, {}));
      }
    }
  }
  return LaxFunctorBicat::validate(source, target, std::move(object_map),
                                   std::move(homs), std::nullopt);
}

LaxFunctorBicat two_group_quotient(const BicatPtr& source,
                                   const BicatPtr& target) {
  if (source->object_count() == 0 || target->object_count() != 1) {
    throw Error(ErrorCode::kIndexMismatch,
                "quotient needs a nonempty source and a one-object target");
  }
  const FinCategory& h = source->hom(0, 0);
  const std::size_t m = h.object_count();
  const std::size_t n = h.morphism_count() / (m * m);
  const std::size_t a = target->hom(0, 0).morphism_count();
  if (n % a != 0) {
    throw Error(ErrorCode::kIndexMismatch,
                "target order must divide the source order");
  }
  return strict_projection(
      source, target, std::vector<ObjectId>(source->object_count(), 0),
      [](ObjectId, ObjectId, ObjectId) { return ObjectId{0}; },
      [n, a](ObjectId, ObjectId, MorphismId al) { return al % n % a; });
}

}  // namespace bicat_euler
