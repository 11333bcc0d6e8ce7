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

#include <algorithm>
#include <numeric>

namespace bicat_euler {

namespace {

std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

const CategoryPtr& empty_category() {
  static const CategoryPtr empty = make_category(CategorySpec{});
  return empty;
}

CatGraph::CatGraph(std::vector<std::string> objects,
                   std::vector<CategoryPtr> homs,
                   std::map<std::pair<ObjectId, ObjectId>, Functor> models)
    : objects_(std::move(objects)), homs_(std::move(homs)) {
  const std::size_t n = objects_.size();
  if (homs_.size() != n * n) {
    throw Error(ErrorCode::kIndexMismatch,
                "cat-graph needs one hom category per ordered pair");
  }
  for (auto& h : homs_) {
    if (!h) h = empty_category();
  }
  models_.assign(n * n, std::nullopt);
  for (auto& [xy, functor] : models) {
    const auto [x, y] = xy;
    if (x >= n || y >= n || functor.source_ptr() != homs_[x * n + y]) {
      throw Error(ErrorCode::kIndexMismatch,
                  "model functor does not start at its hom category");
    }
    if (!check_equivalence_functor(functor)) {
      throw Error(ErrorCode::kNotBiequivalence,
                  "model for hom(" + objects_[x] + ", " + objects_[y] +
                      ") is not an equivalence");
    }
    models_[x * n + y] = std::move(functor);
  }
}

std::optional<ObjectId> CatGraph::find_object(std::string_view label) const {
  for (ObjectId x = 0; x < objects_.size(); ++x) {
    if (objects_[x] == label) return x;
  }
  return std::nullopt;
}

MorphismId Bicategory::associator(ObjectId x, ObjectId y, ObjectId z,
                                  ObjectId w, ObjectId h, ObjectId g,
                                  ObjectId f) const {
  const std::size_t n = object_count();
  return (*data_.associator)[((x * n + y) * n + z) * n + w]
                            [(h * hom(y, z).object_count() + g) *
                                 hom(x, y).object_count() +
                             f];
}

namespace {

class BicatChecker {
 public:
  BicatChecker(const Bicategory& b, std::vector<Violation>& out)
      : b_(b), out_(out), n_(b.object_count()) {}

  std::string cell1(ObjectId x, ObjectId y, ObjectId f) const {
    return quote(b_.hom(x, y).object_label(f));
  }
  std::string cell2(ObjectId x, ObjectId y, MorphismId a) const {
    return quote(b_.hom(x, y).morphism_label(a));
  }
  std::string objs(std::initializer_list<ObjectId> xs) const {
    std::string s = "(";
    for (ObjectId x : xs) {
      if (s.size() > 1) s += ",";
      s += b_.object_label(x);
    }
    return s + ")";
  }

  void add(ViolationKind kind, std::string message) {
    out_.push_back({kind, std::move(message)});
  }

  void check_hcompose2() {
    for (ObjectId x = 0; x < n_; ++x) {
      for (ObjectId y = 0; y < n_; ++y) {
        for (ObjectId z = 0; z < n_; ++z) check_hcompose2(x, y, z);
      }
    }
  }

  void check_associator() {
    for (ObjectId x = 0; x < n_; ++x) {
      for (ObjectId y = 0; y < n_; ++y) {
        for (ObjectId z = 0; z < n_; ++z) {
          for (ObjectId w = 0; w < n_; ++w) check_associator(x, y, z, w);
        }
      }
    }
  }

  void check_unitors() {
    for (ObjectId x = 0; x < n_; ++x) {
      for (ObjectId y = 0; y < n_; ++y) check_unitors(x, y);
    }
  }

  void check_pentagon() {
    for (ObjectId v = 0; v < n_; ++v) {
      for (ObjectId w = 0; w < n_; ++w) {
        for (ObjectId x = 0; x < n_; ++x) {
          for (ObjectId y = 0; y < n_; ++y) {
            for (ObjectId z = 0; z < n_; ++z) check_pentagon(v, w, x, y, z);
          }
        }
      }
    }
  }

  void check_triangle() {
    for (ObjectId x = 0; x < n_; ++x) {
      for (ObjectId y = 0; y < n_; ++y) {
        for (ObjectId z = 0; z < n_; ++z) check_triangle(x, y, z);
      }
    }
  }

 private:
  void check_hcompose2(ObjectId x, ObjectId y, ObjectId z) {
    const FinCategory& xy = b_.hom(x, y);
    const FinCategory& yz = b_.hom(y, z);
    const FinCategory& xz = b_.hom(x, z);
    bool framed = true;
    for (MorphismId be = 0; be < yz.morphism_count(); ++be) {
      for (MorphismId al = 0; al < xy.morphism_count(); ++al) {
        const MorphismId r = b_.hcompose2(x, y, z, be, al);
        if (r >= xz.morphism_count() ||
            xz.src(r) != b_.compose1(x, y, z, yz.src(be), xy.src(al)) ||
            xz.dst(r) != b_.compose1(x, y, z, yz.dst(be), xy.dst(al))) {
          framed = false;
          add(ViolationKind::kCompositeEndpoint,
              "horizontal composite " + cell2(y, z, be) + " * " +
                  cell2(x, y, al) + " has the wrong frame");
        }
      }
    }
    if (!framed) return;
    for (ObjectId g = 0; g < yz.object_count(); ++g) {
      for (ObjectId f = 0; f < xy.object_count(); ++f) {
        if (b_.hcompose2(x, y, z, yz.identity(g), xy.identity(f)) !=
            xz.identity(b_.compose1(x, y, z, g, f))) {
          add(ViolationKind::kFunctorLaw,
              "identity 2-cells of " + cell1(y, z, g) + " and " +
                  cell1(x, y, f) + " do not compose to an identity");
        }
      }
    }
    for (MorphismId be = 0; be < yz.morphism_count(); ++be) {
      for (ObjectId g3 = 0; g3 < yz.object_count(); ++g3) {
        for (MorphismId be2 : yz.hom(yz.dst(be), g3)) {
          for (MorphismId al = 0; al < xy.morphism_count(); ++al) {
            for (ObjectId f3 = 0; f3 < xy.object_count(); ++f3) {
              for (MorphismId al2 : xy.hom(xy.dst(al), f3)) {
                const MorphismId lhs = b_.hcompose2(
                    x, y, z, yz.compose(be2, be), xy.compose(al2, al));
                const MorphismId rhs =
                    xz.compose(b_.hcompose2(x, y, z, be2, al2),
                               b_.hcompose2(x, y, z, be, al));
                if (lhs != rhs) {
                  add(ViolationKind::kFunctorLaw,
                      "interchange fails for " + cell2(y, z, be2) + ", " +
                          cell2(y, z, be) + ", " + cell2(x, y, al2) + ", " +
                          cell2(x, y, al));
                }
              }
            }
          }
        }
      }
    }
  }

  void check_associator(ObjectId x, ObjectId y, ObjectId z, ObjectId w) {
    const FinCategory& xy = b_.hom(x, y);
    const FinCategory& yz = b_.hom(y, z);
    const FinCategory& zw = b_.hom(z, w);
    const FinCategory& xw = b_.hom(x, w);
    const std::size_t expected =
        zw.object_count() * yz.object_count() * xy.object_count();
    const auto& table =
        (*b_.data().associator)[((x * n_ + y) * n_ + z) * n_ + w];
    if (table.size() != expected) {
      add(ViolationKind::kMissingComposite,
          "associator table for " + objs({x, y, z, w}) + " has " +
              std::to_string(table.size()) + " entries, expected " +
              std::to_string(expected));
      return;
    }
    bool framed = true;
    for (ObjectId h = 0; h < zw.object_count(); ++h) {
      for (ObjectId g = 0; g < yz.object_count(); ++g) {
        for (ObjectId f = 0; f < xy.object_count(); ++f) {
          const MorphismId a = b_.associator(x, y, z, w, h, g, f);
          const ObjectId src =
              b_.compose1(x, z, w, h, b_.compose1(x, y, z, g, f));
          const ObjectId dst =
              b_.compose1(x, y, w, b_.compose1(y, z, w, h, g), f);
          const std::string name = "associator at (" + cell1(z, w, h) +
                                   ", " + cell1(y, z, g) + ", " +
                                   cell1(x, y, f) + ")";
          if (a >= xw.morphism_count() || xw.src(a) != src ||
              xw.dst(a) != dst) {
            framed = false;
            add(ViolationKind::kCoherence, name + " has the wrong frame");
          } else if (!inverse_of(xw, a)) {
            add(ViolationKind::kCoherence, name + " is not invertible");
          }
        }
      }
    }
    if (!framed || !b_.has_hcompose2()) return;
    for (ObjectId h = 0; h < zw.object_count(); ++h) {
      for (ObjectId g = 0; g < yz.object_count(); ++g) {
        const ObjectId hg = b_.compose1(y, z, w, h, g);
        for (MorphismId al = 0; al < xy.morphism_count(); ++al) {
          const ObjectId f = xy.src(al), f2 = xy.dst(al);
          const MorphismId lhs = xw.compose(
              b_.associator(x, y, z, w, h, g, f2),
              b_.whisker_left(x, z, w, h, b_.whisker_left(x, y, z, g, al)));
          const MorphismId rhs = xw.compose(b_.whisker_left(x, y, w, hg, al),
                                            b_.associator(x, y, z, w, h, g, f));
          if (lhs != rhs) {
            add(ViolationKind::kNaturality,
                "associator is not natural in " + cell2(x, y, al));
          }
        }
      }
    }
    for (ObjectId h = 0; h < zw.object_count(); ++h) {
      for (ObjectId f = 0; f < xy.object_count(); ++f) {
        for (MorphismId be = 0; be < yz.morphism_count(); ++be) {
          const ObjectId g = yz.src(be), g2 = yz.dst(be);
          const MorphismId lhs = xw.compose(
              b_.associator(x, y, z, w, h, g2, f),
              b_.whisker_left(x, z, w, h, b_.whisker_right(x, y, z, be, f)));
          const MorphismId rhs = xw.compose(
              b_.whisker_right(x, y, w, b_.whisker_left(y, z, w, h, be), f),
              b_.associator(x, y, z, w, h, g, f));
          if (lhs != rhs) {
            add(ViolationKind::kNaturality,
                "associator is not natural in " + cell2(y, z, be));
          }
        }
      }
    }
    for (ObjectId g = 0; g < yz.object_count(); ++g) {
      for (ObjectId f = 0; f < xy.object_count(); ++f) {
        const ObjectId gf = b_.compose1(x, y, z, g, f);
        for (MorphismId ga = 0; ga < zw.morphism_count(); ++ga) {
          const ObjectId h = zw.src(ga), h2 = zw.dst(ga);
          const MorphismId lhs =
              xw.compose(b_.associator(x, y, z, w, h2, g, f),
                         b_.whisker_right(x, z, w, ga, gf));
          const MorphismId rhs = xw.compose(
              b_.whisker_right(x, y, w, b_.whisker_right(y, z, w, ga, g), f),
              b_.associator(x, y, z, w, h, g, f));
          if (lhs != rhs) {
            add(ViolationKind::kNaturality,
                "associator is not natural in " + cell2(z, w, ga));
          }
        }
      }
    }
  }

  void check_unitors(ObjectId x, ObjectId y) {
    const FinCategory& xy = b_.hom(x, y);
    const auto& lt = (*b_.data().left_unitor)[x * n_ + y];
    const auto& rt = (*b_.data().right_unitor)[x * n_ + y];
    if (lt.size() != xy.object_count() || rt.size() != xy.object_count()) {
      add(ViolationKind::kMissingComposite,
          "unitor table for " + objs({x, y}) + " has the wrong size");
      return;
    }
    bool framed = true;
    for (ObjectId f = 0; f < xy.object_count(); ++f) {
      const ObjectId lsrc = b_.compose1(x, y, y, b_.identity1(y), f);
      const ObjectId rsrc = b_.compose1(x, x, y, f, b_.identity1(x));
      for (const auto& [cell, src, side] :
           {std::tuple{lt[f], lsrc, "left"}, std::tuple{rt[f], rsrc, "right"}}) {
        const std::string name =
            std::string(side) + " unitor at " + cell1(x, y, f);
        if (cell >= xy.morphism_count() || xy.src(cell) != src ||
            xy.dst(cell) != f) {
          framed = false;
          add(ViolationKind::kCoherence, name + " has the wrong frame");
        } else if (!inverse_of(xy, cell)) {
          add(ViolationKind::kCoherence, name + " is not invertible");
        }
      }
    }
    if (!framed || !b_.has_hcompose2()) return;
    const FinCategory& yy = b_.hom(y, y);
    const FinCategory& xx = b_.hom(x, x);
    for (MorphismId al = 0; al < xy.morphism_count(); ++al) {
      const ObjectId f = xy.src(al), f2 = xy.dst(al);
      const MorphismId l_lhs = xy.compose(
          lt[f2],
          b_.hcompose2(x, y, y, yy.identity(b_.identity1(y)), al));
      const MorphismId r_lhs = xy.compose(
          rt[f2],
          b_.hcompose2(x, x, y, al, xx.identity(b_.identity1(x))));
      if (l_lhs != xy.compose(al, lt[f]) || r_lhs != xy.compose(al, rt[f])) {
        add(ViolationKind::kNaturality,
            "unitors are not natural in " + cell2(x, y, al));
      }
    }
  }

  void check_pentagon(ObjectId v, ObjectId w, ObjectId x, ObjectId y,
                      ObjectId z) {
    const FinCategory& vw = b_.hom(v, w);
    const FinCategory& wx = b_.hom(w, x);
    const FinCategory& xy = b_.hom(x, y);
    const FinCategory& yz = b_.hom(y, z);
    const FinCategory& vz = b_.hom(v, z);
    for (ObjectId f = 0; f < vw.object_count(); ++f) {
      for (ObjectId g = 0; g < wx.object_count(); ++g) {
        const ObjectId gf = b_.compose1(v, w, x, g, f);
        for (ObjectId h = 0; h < xy.object_count(); ++h) {
          const ObjectId hg = b_.compose1(w, x, y, h, g);
          for (ObjectId k = 0; k < yz.object_count(); ++k) {
            const ObjectId kh = b_.compose1(x, y, z, k, h);
            const MorphismId lhs =
                vz.compose(b_.associator(v, w, x, z, kh, g, f),
                           b_.associator(v, x, y, z, k, h, gf));
            const MorphismId rhs = vz.compose(
                b_.whisker_right(v, w, z, b_.associator(w, x, y, z, k, h, g),
                                 f),
                vz.compose(b_.associator(v, w, y, z, k, hg, f),
                           b_.whisker_left(v, y, z, k,
                                           b_.associator(v, w, x, y, h, g, f))));
            if (lhs != rhs) {
              add(ViolationKind::kCoherence,
                  "pentagon fails at (" + cell1(y, z, k) + ", " +
                      cell1(x, y, h) + ", " + cell1(w, x, g) + ", " +
                      cell1(v, w, f) + ")");
            }
          }
        }
      }
    }
  }

  void check_triangle(ObjectId x, ObjectId y, ObjectId z) {
    const FinCategory& xy = b_.hom(x, y);
    const FinCategory& yz = b_.hom(y, z);
    const FinCategory& xz = b_.hom(x, z);
    const ObjectId id_y = b_.identity1(y);
    for (ObjectId f = 0; f < xy.object_count(); ++f) {
      for (ObjectId g = 0; g < yz.object_count(); ++g) {
        const MorphismId lhs = xz.compose(
            b_.whisker_right(x, y, z, b_.right_unitor(y, z, g), f),
            b_.associator(x, y, y, z, g, id_y, f));
        const MorphismId rhs =
            b_.whisker_left(x, y, z, g, b_.left_unitor(x, y, f));
        if (lhs != rhs) {
          add(ViolationKind::kCoherence,
              "triangle fails at (" + cell1(y, z, g) + ", " + cell1(x, y, f) +
                  ")");
        }
      }
    }
  }

  const Bicategory& b_;
  std::vector<Violation>& out_;
  std::size_t n_;
};

}  // namespace

Bicategory Bicategory::validate(BicategoryData data) {
  std::vector<Violation> out;
  const CatGraph& g = data.graph;
  const std::size_t n = g.object_count();
  auto label = [&](ObjectId x) { return g.object_label(x); };
  if (data.identity1.size() != n) {
    out.push_back({ViolationKind::kMissingIdentity,
                   "identity 1-cells not given for every object"});
  } else {
    for (ObjectId x = 0; x < n; ++x) {
      if (data.identity1[x] >= g.hom(x, x).object_count()) {
        out.push_back({ViolationKind::kMissingIdentity,
                       "object " + quote(label(x)) +
                           " has no identity 1-cell in hom(x, x)"});
      }
    }
  }
  auto check_table = [&](const std::vector<std::vector<std::size_t>>& t,
                         bool cells2, const std::string& what) {
    if (t.size() != n * n * n) {
      out.push_back({ViolationKind::kMissingComposite,
                     what + " table not given for every triple"});
      return;
    }
    for (ObjectId x = 0; x < n; ++x) {
      for (ObjectId y = 0; y < n; ++y) {
        for (ObjectId z = 0; z < n; ++z) {
          auto size = [&](ObjectId a, ObjectId b) {
            return cells2 ? g.hom(a, b).morphism_count()
                          : g.hom(a, b).object_count();
          };
          const auto& row = t[(x * n + y) * n + z];
          const std::string where =
              what + " on (" + label(x) + "," + label(y) + "," + label(z) + ")";
          if (row.size() != size(y, z) * size(x, y)) {
            out.push_back({ViolationKind::kMissingComposite,
                           where + " has " + std::to_string(row.size()) +
                               " entries, expected " +
                               std::to_string(size(y, z) * size(x, y))});
            continue;
          }
          for (std::size_t v : row) {
            if (v >= size(x, z)) {
              out.push_back({ViolationKind::kDanglingEndpoint,
                             where + " refers to a missing cell"});
              break;
            }
          }
        }
      }
    }
  };
  check_table(data.compose1, false, "1-cell composition");
  if (data.hcompose2) check_table(*data.hcompose2, true, "horizontal composition");
  if (data.associator && data.associator->size() != n * n * n * n) {
    out.push_back({ViolationKind::kMissingComposite,
                   "associator table not given for every quadruple"});
  }
  for (const auto* u : {&data.left_unitor, &data.right_unitor}) {
    if (*u && (*u)->size() != n * n) {
      out.push_back({ViolationKind::kMissingComposite,
                     "unitor table not given for every pair"});
    }
  }
  if (data.left_unitor.has_value() != data.right_unitor.has_value()) {
    out.push_back({ViolationKind::kMissingComposite,
                   "left and right unitors must be given together"});
  }
  if (!out.empty()) {
    throw ValidationError(ErrorCode::kInvalidBicategory, std::move(out));
  }
  Bicategory b;
  b.data_ = std::move(data);
  BicatChecker checker(b, out);
  if (b.has_hcompose2()) checker.check_hcompose2();
  if (b.has_associator()) checker.check_associator();
  if (b.has_unitors()) checker.check_unitors();
  if (out.empty() && b.has_hcompose2() && b.has_associator()) {
    checker.check_pentagon();
    if (b.has_unitors()) checker.check_triangle();
  }
  if (!out.empty()) {
    throw ValidationError(ErrorCode::kInvalidBicategory, std::move(out));
  }
  return b;
}

QMatrix similarity_matrix_cg(const CatGraph& g) {
  const std::size_t n = g.object_count();
  std::vector<Rational> entries(n * n);
  for (ObjectId i = 0; i < n; ++i) {
    for (ObjectId j = 0; j < n; ++j) {
      const auto& model = g.model(i, j);
      const FinCategory& c = model ? model->target() : g.hom(i, j);
      if (c.object_count() == 0) continue;
      const auto chi = euler_char(c).chi;
      if (!chi) {
        throw Error(ErrorCode::kHomWithoutEuler,
                    "hom(" + g.object_label(i) + ", " + g.object_label(j) +
                        ") has no Euler characteristic");
      }
      entries[i * n + j] = *chi;
    }
  }
  return QMatrix::square(g.object_labels(), std::move(entries));
}

MatrixEuler euler_char_cg(const CatGraph& g) {
  return matrix_euler(similarity_matrix_cg(g));
}

CatGraph coproduct_cg(const std::vector<CatGraph>& gs) {
  std::vector<std::string> objects;
  std::vector<std::pair<std::size_t, ObjectId>> origin;
  for (std::size_t k = 0; k < gs.size(); ++k) {
    for (ObjectId x = 0; x < gs[k].object_count(); ++x) {
      objects.push_back(std::to_string(k) + "." + gs[k].object_label(x));
      origin.emplace_back(k, x);
    }
  }
  const std::size_t n = objects.size();
  std::vector<CategoryPtr> homs(n * n);
  std::map<std::pair<ObjectId, ObjectId>, Functor> models;
  for (ObjectId i = 0; i < n; ++i) {
    for (ObjectId j = 0; j < n; ++j) {
      const auto [ki, xi] = origin[i];
      const auto [kj, xj] = origin[j];
      if (ki != kj) continue;
      homs[i * n + j] = gs[ki].hom_ptr(xi, xj);
      if (gs[ki].model(xi, xj)) models.emplace(std::pair{i, j}, *gs[ki].model(xi, xj));
    }
  }
  return CatGraph(std::move(objects), std::move(homs), std::move(models));
}

CatGraph product_cg(const CatGraph& a, const CatGraph& b) {
  std::vector<std::string> objects;
  const std::size_t na = a.object_count(), nb = b.object_count();
  for (ObjectId x = 0; x < na; ++x) {
    for (ObjectId y = 0; y < nb; ++y) {
      objects.push_back("(" + a.object_label(x) + "," + b.object_label(y) +
                        ")");
    }
  }
  const std::size_t n = objects.size();
  std::vector<CategoryPtr> homs(n * n);
  for (ObjectId i = 0; i < n; ++i) {
    for (ObjectId j = 0; j < n; ++j) {
      homs[i * n + j] = share(product(a.hom(i / nb, j / nb),
                                      b.hom(i % nb, j % nb)));
    }
  }
  return CatGraph(std::move(objects), std::move(homs));
}

CatGraph full_sub_catgraph(const CatGraph& g,
                           const std::vector<ObjectId>& objects) {
  std::vector<std::string> labels;
  for (ObjectId x : objects) labels.push_back(g.object_label(x));
  const std::size_t n = objects.size();
  std::vector<CategoryPtr> homs(n * n);
  std::map<std::pair<ObjectId, ObjectId>, Functor> models;
  for (ObjectId i = 0; i < n; ++i) {
    for (ObjectId j = 0; j < n; ++j) {
      homs[i * n + j] = g.hom_ptr(objects[i], objects[j]);
      if (g.model(objects[i], objects[j])) {
        models.emplace(std::pair{i, j}, *g.model(objects[i], objects[j]));
      }
    }
  }
  return CatGraph(std::move(labels), std::move(homs), std::move(models));
}

Bicategory product_bicat(const Bicategory& a, const Bicategory& b) {
  BicategoryData d;
  d.graph = product_cg(a.graph(), b.graph());
  const std::size_t na = a.object_count(), nb = b.object_count();
  const std::size_t n = na * nb;
  auto sa = [&](ObjectId i) { return i / nb; };
  auto sb = [&](ObjectId i) { return i % nb; };
  for (ObjectId i = 0; i < n; ++i) {
    d.identity1.push_back(a.identity1(sa(i)) *
                              b.hom(sb(i), sb(i)).object_count() +
                          b.identity1(sb(i)));
  }
  const bool h2 = a.has_hcompose2() && b.has_hcompose2();
  d.compose1.resize(n * n * n);
  if (h2) d.hcompose2.emplace(n * n * n);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      for (ObjectId z = 0; z < n; ++z) {
        const FinCategory& bxy = b.hom(sb(x), sb(y));
        const FinCategory& byz = b.hom(sb(y), sb(z));
        const FinCategory& bxz = b.hom(sb(x), sb(z));
        const std::size_t oxy = a.hom(sa(x), sa(y)).object_count() *
                                bxy.object_count();
        const std::size_t oyz = a.hom(sa(y), sa(z)).object_count() *
                                byz.object_count();
        auto& c1 = d.compose1[(x * n + y) * n + z];
        for (ObjectId g = 0; g < oyz; ++g) {
          for (ObjectId f = 0; f < oxy; ++f) {
            const ObjectId ca = a.compose1(
                sa(x), sa(y), sa(z), g / byz.object_count(),
                f / bxy.object_count());
            const ObjectId cb = b.compose1(
                sb(x), sb(y), sb(z), g % byz.object_count(),
                f % bxy.object_count());
            c1.push_back(ca * bxz.object_count() + cb);
          }
        }
        if (!h2) continue;
        const std::size_t mxy = a.hom(sa(x), sa(y)).morphism_count() *
                                bxy.morphism_count();
        const std::size_t myz = a.hom(sa(y), sa(z)).morphism_count() *
                                byz.morphism_count();
        auto& c2 = (*d.hcompose2)[(x * n + y) * n + z];
        for (MorphismId be = 0; be < myz; ++be) {
          for (MorphismId al = 0; al < mxy; ++al) {
            const MorphismId ca = a.hcompose2(
                sa(x), sa(y), sa(z), be / byz.morphism_count(),
                al / bxy.morphism_count());
            const MorphismId cb = b.hcompose2(
                sb(x), sb(y), sb(z), be % byz.morphism_count(),
                al % bxy.morphism_count());
            c2.push_back(ca * bxz.morphism_count() + cb);
          }
        }
      }
    }
  }
  if (a.has_associator() && b.has_associator()) {
    d.associator.emplace(n * n * n * n);
    for (ObjectId x = 0; x < n; ++x) {
      for (ObjectId y = 0; y < n; ++y) {
        for (ObjectId z = 0; z < n; ++z) {
          for (ObjectId w = 0; w < n; ++w) {
            const std::size_t bf = b.hom(sb(x), sb(y)).object_count();
            const std::size_t bg = b.hom(sb(y), sb(z)).object_count();
            const std::size_t bh = b.hom(sb(z), sb(w)).object_count();
            const std::size_t nf = a.hom(sa(x), sa(y)).object_count() * bf;
            const std::size_t ng = a.hom(sa(y), sa(z)).object_count() * bg;
            const std::size_t nh = a.hom(sa(z), sa(w)).object_count() * bh;
            const std::size_t mb = b.hom(sb(x), sb(w)).morphism_count();
            auto& t = (*d.associator)[((x * n + y) * n + z) * n + w];
            for (ObjectId h = 0; h < nh; ++h) {
              for (ObjectId g = 0; g < ng; ++g) {
                for (ObjectId f = 0; f < nf; ++f) {
                  const MorphismId ca =
                      a.associator(sa(x), sa(y), sa(z), sa(w), h / bh, g / bg,
                                   f / bf);
                  const MorphismId cb =
                      b.associator(sb(x), sb(y), sb(z), sb(w), h % bh, g % bg,
                                   f % bf);
                  t.push_back(ca * mb + cb);
                }
              }
            }
          }
        }
      }
    }
  }
  if (a.has_unitors() && b.has_unitors()) {
    d.left_unitor.emplace(n * n);
    d.right_unitor.emplace(n * n);
    for (ObjectId x = 0; x < n; ++x) {
      for (ObjectId y = 0; y < n; ++y) {
        const std::size_t bf = b.hom(sb(x), sb(y)).object_count();
        const std::size_t mb = b.hom(sb(x), sb(y)).morphism_count();
        const std::size_t nf = a.hom(sa(x), sa(y)).object_count() * bf;
        for (ObjectId f = 0; f < nf; ++f) {
          (*d.left_unitor)[x * n + y].push_back(
              a.left_unitor(sa(x), sa(y), f / bf) * mb +
              b.left_unitor(sb(x), sb(y), f % bf));
          (*d.right_unitor)[x * n + y].push_back(
              a.right_unitor(sa(x), sa(y), f / bf) * mb +
              b.right_unitor(sb(x), sb(y), f % bf));
        }
      }
    }
  }
  return Bicategory::validate(std::move(d));
}

Bicategory coproduct_bicat(const std::vector<BicatPtr>& parts) {
  std::vector<CatGraph> graphs;
  for (const auto& p : parts) graphs.push_back(p->graph());
  BicategoryData d;
  d.graph = coproduct_cg(graphs);
  std::vector<std::pair<std::size_t, ObjectId>> origin;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (ObjectId x = 0; x < parts[k]->object_count(); ++x) {
      origin.emplace_back(k, x);
    }
  }
  const std::size_t n = origin.size();
  auto all = [&](auto pred) {
    return std::all_of(parts.begin(), parts.end(),
                       [&](const BicatPtr& p) { return pred(*p); });
  };
  const bool h2 = all([](const Bicategory& b) { return b.has_hcompose2(); });
  const bool assoc =
      all([](const Bicategory& b) { return b.has_associator(); });
  const bool unit = all([](const Bicategory& b) { return b.has_unitors(); });
  for (ObjectId i = 0; i < n; ++i) {
    d.identity1.push_back(parts[origin[i].first]->identity1(origin[i].second));
  }
  d.compose1.resize(n * n * n);
  if (h2) d.hcompose2.emplace(n * n * n);
  if (assoc) d.associator.emplace(n * n * n * n);
  if (unit) {
    d.left_unitor.emplace(n * n);
    d.right_unitor.emplace(n * n);
  }
  auto same = [&](std::initializer_list<ObjectId> xs) {
    for (ObjectId x : xs) {
      if (origin[x].first != origin[*xs.begin()].first) return false;
    }
    return true;
  };
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      if (unit && same({x, y})) {
        const Bicategory& p = *parts[origin[x].first];
        const auto key = origin[x].second * p.object_count() + origin[y].second;
        (*d.left_unitor)[x * n + y] = (*p.data().left_unitor)[key];
        (*d.right_unitor)[x * n + y] = (*p.data().right_unitor)[key];
      }
      for (ObjectId z = 0; z < n; ++z) {
        if (!same({x, y, z})) continue;
        const Bicategory& p = *parts[origin[x].first];
        const auto k3 =
            p.key3(origin[x].second, origin[y].second, origin[z].second);
        d.compose1[(x * n + y) * n + z] = p.data().compose1[k3];
        if (h2) (*d.hcompose2)[(x * n + y) * n + z] = (*p.data().hcompose2)[k3];
        if (!assoc) continue;
        for (ObjectId w = 0; w < n; ++w) {
          if (!same({x, w})) continue;
          const std::size_t m = p.object_count();
          (*d.associator)[((x * n + y) * n + z) * n + w] =
              (*p.data().associator)[k3 * m + origin[w].second];
        }
      }
    }
  }
  return Bicategory::validate(std::move(d));
}

Bicategory coop(const Bicategory& b) {
  const std::size_t n = b.object_count();
  std::vector<std::string> objects;
  for (ObjectId x = 0; x < n; ++x) objects.push_back(b.object_label(x));
  std::vector<CategoryPtr> homs(n * n);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      homs[x * n + y] = b.hom(y, x).object_count() == 0
                            ? empty_category()
                            : share(opposite(b.hom(y, x)));
    }
  }
  BicategoryData d;
  d.graph = CatGraph(std::move(objects), std::move(homs));
  d.identity1 = b.data().identity1;
  d.compose1.resize(n * n * n);
  if (b.has_hcompose2()) d.hcompose2.emplace(n * n * n);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      for (ObjectId z = 0; z < n; ++z) {
        const std::size_t k = (x * n + y) * n + z;
        const FinCategory& yx = b.hom(y, x);
        const FinCategory& zy = b.hom(z, y);
        for (ObjectId g = 0; g < zy.object_count(); ++g) {
          for (ObjectId f = 0; f < yx.object_count(); ++f) {
            d.compose1[k].push_back(b.compose1(z, y, x, f, g));
          }
        }
        if (!b.has_hcompose2()) continue;
        for (MorphismId be = 0; be < zy.morphism_count(); ++be) {
          for (MorphismId al = 0; al < yx.morphism_count(); ++al) {
            (*d.hcompose2)[k].push_back(b.hcompose2(z, y, x, al, be));
          }
        }
      }
    }
  }
  return Bicategory::validate(std::move(d));
}

std::vector<std::vector<ObjectId>> connected_components_cg(const CatGraph& g) {
  const std::size_t n = g.object_count();
  std::vector<ObjectId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](ObjectId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      if (g.hom(x, y).object_count() == 0) continue;
      const auto r1 = find(x), r2 = find(y);
      if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
  }
  std::map<ObjectId, std::vector<ObjectId>> groups;
  for (ObjectId x = 0; x < n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<ObjectId>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

namespace {

const CategoryPtr& point_category() {
  static const CategoryPtr pt = make_category(
      {{"*"}, {{"id", "*", "*"}}, {{"*", "id"}}, {{"id", "id", "id"}}});
  return pt;
}

bool equivalent_to_point(const CategoryPtr& c) {
  if (c->object_count() == 0) return false;
  const Functor to_point = Functor::validate(
      c, point_category(), std::vector<ObjectId>(c->object_count(), 0),
      std::vector<MorphismId>(c->morphism_count(), 0));
  return check_equivalence_functor(to_point);
}

// Kahn order over nonempty homs between distinct objects.
std::optional<std::vector<ObjectId>> object_order(const CatGraph& g) {
  const std::size_t n = g.object_count();
  std::vector<std::size_t> indegree(n, 0);
  auto edge = [&](ObjectId x, ObjectId y) {
    return x != y && g.hom(x, y).object_count() > 0;
  };
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) indegree[y] += edge(x, y);
  }
  std::vector<ObjectId> order;
  std::vector<bool> done(n, false);
  while (order.size() < n) {
    std::optional<ObjectId> next;
    for (ObjectId x = 0; x < n && !next; ++x) {
      if (!done[x] && indegree[x] == 0) next = x;
    }
    if (!next) return std::nullopt;
    done[*next] = true;
    order.push_back(*next);
    for (ObjectId y = 0; y < n; ++y) indegree[y] -= edge(*next, y);
  }
  return order;
}

}  // namespace

bool is_acyclic_bicat(const CatGraph& g) {
  const std::size_t n = g.object_count();
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      if (!is_acyclic(g.hom(x, y))) return false;
      if (x == y) {
        if (!equivalent_to_point(g.hom_ptr(x, x))) return false;
      } else if (g.hom(x, y).object_count() > 0 &&
                 g.hom(y, x).object_count() > 0) {
        return false;
      }
    }
  }
  // For a bicategory the two-object condition already excludes longer
  // circuits, since composites of a circuit land in opposite homs.
  return object_order(g).has_value();
}

Rational euler_acyclic_bicat(const Bicategory& b) {
  if (!is_acyclic_bicat(b)) {
    throw Error(ErrorCode::kNotAcyclic, "bicategory is not acyclic");
  }
  const QMatrix zeta = similarity_matrix_cg(b.graph());
  const std::vector<ObjectId> order = *object_order(b.graph());
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& z = zeta(order[i], order[j]);
      if ((i == j && z != 1) || (j < i && z != 0)) {
        throw Error(ErrorCode::kInternal,
                    "similarity matrix is not unitriangular in topological "
                    "order");
      }
    }
  }
  std::vector<Rational> k(n), c(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational rest = 1;
    for (std::size_t j = i + 1; j < n; ++j) rest -= zeta(order[i], order[j]) * k[j];
    k[i] = rest;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational rest = 1;
    for (std::size_t i = 0; i < j; ++i) rest -= c[i] * zeta(order[i], order[j]);
    c[j] = rest;
  }
  const Rational chi = std::accumulate(k.begin(), k.end(), Rational(0));
  const Rational cochi = std::accumulate(c.begin(), c.end(), Rational(0));
  if (chi != cochi || matrix_euler(zeta).chi != chi) {
    throw Error(ErrorCode::kInternal,
                "triangular solve disagrees with the general solver");
  }
  return chi;
}

bool is_equivalence_1cell(const Bicategory& b, ObjectId x, ObjectId y,
                          ObjectId f) {
  const FinCategory& xx = b.hom(x, x);
  const FinCategory& yy = b.hom(y, y);
  for (ObjectId g = 0; g < b.hom(y, x).object_count(); ++g) {
    if (find_isomorphism(xx, b.compose1(x, y, x, g, f), b.identity1(x)) &&
        find_isomorphism(yy, b.compose1(y, x, y, f, g), b.identity1(y))) {
      return true;
    }
  }
  return false;
}

EquivalenceClasses equivalence_classes(const Bicategory& b) {
  const std::size_t n = b.object_count();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (ObjectId x = 0; x < n; ++x) {
    rel[x][x] = true;
    for (ObjectId y = 0; y < n; ++y) {
      if (x == y) continue;
      for (ObjectId f = 0; f < b.hom(x, y).object_count() && !rel[x][y]; ++f) {
        rel[x][y] = is_equivalence_1cell(b, x, y, f);
      }
    }
  }
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      if (rel[x][y] != rel[y][x]) {
        throw Error(ErrorCode::kInvalidBicategory,
                    "1-cell equivalence is not symmetric on " +
                        quote(b.object_label(x)) + ", " +
                        quote(b.object_label(y)));
      }
      for (ObjectId z = 0; z < n; ++z) {
        if (rel[x][y] && rel[y][z] && !rel[x][z]) {
          throw Error(ErrorCode::kInvalidBicategory,
                      "1-cell equivalence is not transitive");
        }
      }
    }
  }
  EquivalenceClasses out;
  out.class_of.assign(n, n);
  for (ObjectId x = 0; x < n; ++x) {
    if (out.class_of[x] != n) continue;
    const std::size_t c = out.classes.size();
    out.classes.emplace_back();
    for (ObjectId y = x; y < n; ++y) {
      if (rel[x][y]) {
        out.class_of[y] = c;
        out.classes[c].push_back(y);
      }
    }
  }
  return out;
}

nlohmann::json CheckResult::to_json() const {
  return {{"holds", holds}, {"witnesses", witnesses}};
}

CheckResult pseudogroupoid_check(const Bicategory& b) {
  CheckResult r;
  const std::size_t n = b.object_count();
  auto where = [&](ObjectId x, ObjectId y) {
    return " of hom(" + b.object_label(x) + ", " + b.object_label(y) + ")";
  };
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      const FinCategory& h = b.hom(x, y);
      for (MorphismId m = 0; m < h.morphism_count(); ++m) {
        if (!inverse_of(h, m)) {
          r.witnesses.push_back("2-cell " + quote(h.morphism_label(m)) +
                                where(x, y) + " is not invertible");
        }
      }
    }
  }
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      const FinCategory& h = b.hom(x, y);
      for (ObjectId f = 0; f < h.object_count(); ++f) {
        if (!is_equivalence_1cell(b, x, y, f)) {
          r.witnesses.push_back("1-cell " + quote(h.object_label(f)) +
                                where(x, y) + " is not an equivalence");
        }
      }
    }
  }
  r.holds = r.witnesses.empty();
  return r;
}

Rational pseudogroupoid_euler(const Bicategory& b) {
  const CheckResult check = pseudogroupoid_check(b);
  if (!check.holds) {
    throw Error(ErrorCode::kNotPseudogroupoid, check.witnesses.front());
  }
  const QMatrix zeta = similarity_matrix_cg(b.graph());
  Rational total = 0;
  for (const auto& comp : connected_components_cg(b.graph())) {
    const ObjectId g = comp.front();
    const Rational c = zeta(g, g);
    for (ObjectId i : comp) {
      for (ObjectId j : comp) {
        if (zeta(i, j) != c) {
          throw Error(ErrorCode::kInternal,
                      "similarity entries of a connected pseudogroupoid "
                      "differ");
        }
      }
    }
    total += 1 / c;
  }
  if (matrix_euler(zeta).chi != total) {
    throw Error(ErrorCode::kInternal,
                "pseudogroupoid formula disagrees with the general solver");
  }
  return total;
}

LaxFunctorBicat LaxFunctorBicat::validate(
    BicatPtr source, BicatPtr target, std::vector<ObjectId> object_map,
    std::vector<Functor> hom_functors,
    std::optional<LaxBicatCoherence> coherence) {
  const std::size_t n = source->object_count();
  std::vector<Violation> out;
  auto fail = [&](std::string msg) {
    out.push_back({ViolationKind::kFunctorLaw, std::move(msg)});
  };
  if (object_map.size() != n || hom_functors.size() != n * n) {
    fail("object map or hom functors not given for every object/pair");
    throw ValidationError(ErrorCode::kInvalidLaxFunctor, std::move(out));
  }
  for (ObjectId x = 0; x < n; ++x) {
    if (object_map[x] >= target->object_count()) {
      fail("object " + quote(source->object_label(x)) +
           " maps outside the target");
    }
  }
  if (!out.empty()) {
    throw ValidationError(ErrorCode::kInvalidLaxFunctor, std::move(out));
  }
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      const Functor& f = hom_functors[x * n + y];
      if (f.source_ptr() != source->hom_ptr(x, y) ||
          f.target_ptr() != target->hom_ptr(object_map[x], object_map[y])) {
        fail("hom functor on (" + source->object_label(x) + ", " +
             source->object_label(y) + ") has the wrong endpoints");
      }
    }
  }
  if (out.empty() && coherence) {
    const auto& phi = coherence->phi;
    const auto& psi = coherence->psi;
    if (phi.size() != n * n * n || psi.size() != n) {
      fail("coherence cells not given for every triple/object");
    } else {
      for (ObjectId x = 0; x < n; ++x) {
        const ObjectId lx = object_map[x];
        const FinCategory& t = target->hom(lx, lx);
        if (psi[x] >= t.morphism_count() ||
            t.src(psi[x]) != target->identity1(lx) ||
            t.dst(psi[x]) !=
                hom_functors[x * n + x].object(source->identity1(x))) {
          out.push_back({ViolationKind::kCoherence,
                         "unit constraint at " +
                             quote(source->object_label(x)) +
                             " has the wrong frame"});
        }
        for (ObjectId y = 0; y < n; ++y) {
          for (ObjectId z = 0; z < n; ++z) {
            const auto& row = phi[source->key3(x, y, z)];
            const FinCategory& sxy = source->hom(x, y);
            const FinCategory& syz = source->hom(y, z);
            const FinCategory& t2 = target->hom(lx, object_map[z]);
            if (row.size() != syz.object_count() * sxy.object_count()) {
              out.push_back({ViolationKind::kCoherence,
                             "composition constraint table has the wrong "
                             "size"});
              continue;
            }
            for (ObjectId g = 0; g < syz.object_count(); ++g) {
              for (ObjectId f = 0; f < sxy.object_count(); ++f) {
                const MorphismId c = row[g * sxy.object_count() + f];
                const ObjectId src = target->compose1(
                    lx, object_map[y], object_map[z],
                    hom_functors[y * n + z].object(g),
                    hom_functors[x * n + y].object(f));
                const ObjectId dst = hom_functors[x * n + z].object(
                    source->compose1(x, y, z, g, f));
                if (c >= t2.morphism_count() || t2.src(c) != src ||
                    t2.dst(c) != dst) {
                  out.push_back({ViolationKind::kCoherence,
                                 "composition constraint at (" +
                                     quote(syz.object_label(g)) + ", " +
                                     quote(sxy.object_label(f)) +
                                     ") has the wrong frame"});
                }
              }
            }
          }
        }
      }
    }
  }
  if (!out.empty()) {
    throw ValidationError(ErrorCode::kInvalidLaxFunctor, std::move(out));
  }
  LaxFunctorBicat l;
  l.source_ = std::move(source);
  l.target_ = std::move(target);
  l.object_map_ = std::move(object_map);
  l.hom_functors_ = std::move(hom_functors);
  l.coherence_ = std::move(coherence);
  return l;
}

LaxFunctorBicat LaxFunctorBicat::identity(BicatPtr b) {
  const std::size_t n = b->object_count();
  std::vector<ObjectId> objects(n);
  std::iota(objects.begin(), objects.end(), 0);
  std::vector<Functor> homs;
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) homs.push_back(Functor::identity(b->hom_ptr(x, y)));
  }
  return validate(b, b, std::move(objects), std::move(homs), std::nullopt);
}

LaxFunctorBicat coop(const LaxFunctorBicat& l) {
  const BicatPtr src = share(coop(l.source()));
  const BicatPtr tgt = l.source_ptr() == l.target_ptr()
                           ? src
                           : share(coop(l.target()));
  const std::size_t n = src->object_count();
  std::vector<Functor> homs;
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      homs.push_back(opposite(l.hom_functor(y, x), src->hom_ptr(x, y),
                              tgt->hom_ptr(l.object(x), l.object(y))));
    }
  }
  return LaxFunctorBicat::validate(src, tgt, l.object_map(), std::move(homs),
                                   std::nullopt);
}

CheckResult check_biequivalence(const LaxFunctorBicat& l) {
  CheckResult r;
  const std::size_t n = l.source().object_count();
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      if (!check_equivalence_functor(l.hom_functor(x, y))) {
        r.witnesses.push_back("hom functor on (" + l.source().object_label(x) +
                              ", " + l.source().object_label(y) +
                              ") is not an equivalence");
      }
    }
  }
  const EquivalenceClasses classes = equivalence_classes(l.target());
  for (ObjectId b = 0; b < l.target().object_count(); ++b) {
    bool hit = false;
    for (ObjectId a = 0; a < n && !hit; ++a) {
      hit = classes.class_of[l.object(a)] == classes.class_of[b];
    }
    if (!hit) {
      r.witnesses.push_back("target object " +
                            quote(l.target().object_label(b)) +
                            " is not equivalent to any image object");
    }
  }
  r.holds = r.witnesses.empty();
  return r;
}

nlohmann::json BiequivalenceReport::to_json() const {
  return {{"chi_source", to_string(chi_source)},
          {"chi_target", to_string(chi_target)},
          {"transported_weighting", bicat_euler::to_json(transported_weighting)},
          {"transported_coweighting",
           bicat_euler::to_json(transported_coweighting)},
          {"transported_weighting_ok", transported_weighting_ok},
          {"transported_coweighting_ok", transported_coweighting_ok},
          {"holds", holds}};
}

BiequivalenceReport verify_biequivalence_invariance(const LaxFunctorBicat& l) {
  const CheckResult check = check_biequivalence(l);
  if (!check.holds) {
    throw Error(ErrorCode::kNotBiequivalence, check.witnesses.front());
  }
  const QMatrix za = similarity_matrix_cg(l.source().graph());
  const QMatrix zb = similarity_matrix_cg(l.target().graph());
  const MatrixEuler ea = matrix_euler(za);
  const MatrixEuler eb = matrix_euler(zb);
  if (!ea.chi || !eb.chi) {
    throw Error(ErrorCode::kMissingEulerCharacteristic,
                std::string(!ea.chi ? "source" : "target") +
                    " bicategory has no Euler characteristic");
  }
  const EquivalenceClasses ca = equivalence_classes(l.source());
  const EquivalenceClasses cb = equivalence_classes(l.target());
  const std::size_t n = l.source().object_count();
  auto transport = [&](const QVector& v) {
    std::vector<Rational> k(n);
    for (ObjectId a = 0; a < n; ++a) {
      Rational total = 0;
      for (ObjectId b : cb.classes[cb.class_of[l.object(a)]]) total += v[b];
      k[a] = total / ca.size_of(a);
    }
    return QVector(l.source().graph().object_labels(), std::move(k));
  };
  auto ones = [](const QVector& v) {
    return std::all_of(v.entries().begin(), v.entries().end(),
                       [](const Rational& q) { return q == 1; });
  };
  BiequivalenceReport r;
  r.chi_source = *ea.chi;
  r.chi_target = *eb.chi;
  r.transported_weighting = transport(*eb.weighting);
  r.transported_coweighting = transport(*eb.coweighting);
  r.transported_weighting_ok = ones(multiply(za, r.transported_weighting));
  r.transported_coweighting_ok = ones(multiply(r.transported_coweighting, za));
  r.holds = r.chi_source == r.chi_target && r.transported_weighting_ok &&
            r.transported_coweighting_ok;
  return r;
}

}  // namespace bicat_euler
