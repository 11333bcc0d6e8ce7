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

// Cat-graphs, bicategories and lax functors between them, with the Euler
// characteristic taken over the hom-category Euler characteristics.
//
// A 1-cell x -> y is an object of hom(x, y) and a 2-cell is a morphism of
// hom(x, y); both are addressed by their index in that category.

#ifndef BICAT_EULER_BICATEGORY_HPP_
#define BICAT_EULER_BICATEGORY_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicat_euler/fincat.hpp"

namespace bicat_euler {

// Shared empty category used for absent homs.
const CategoryPtr& empty_category();

class CatGraph {
 public:
  CatGraph() = default;

  // homs is row-major over (x, y); nullptr stands for the empty category.
  // models optionally gives, per (x, y), an equivalence from hom(x, y) to a
  // finite model whose Euler characteristic is used instead. Throws
  // Error(kIndexMismatch) on size mismatch and Error(kNotBiequivalence)
  // if a model functor is not an equivalence.
  CatGraph(std::vector<std::string> objects, std::vector<CategoryPtr> homs,
           std::map<std::pair<ObjectId, ObjectId>, Functor> models = {});

  std::size_t object_count() const { return objects_.size(); }
  const std::string& object_label(ObjectId x) const { return objects_[x]; }
  const std::vector<std::string>& object_labels() const { return objects_; }
  std::optional<ObjectId> find_object(std::string_view label) const;

  const FinCategory& hom(ObjectId x, ObjectId y) const {
    return *homs_[x * objects_.size() + y];
  }
  const CategoryPtr& hom_ptr(ObjectId x, ObjectId y) const {
    return homs_[x * objects_.size() + y];
  }
  const std::optional<Functor>& model(ObjectId x, ObjectId y) const {
    return models_[x * objects_.size() + y];
  }

 private:
  std::vector<std::string> objects_;
  std::vector<CategoryPtr> homs_;
  std::vector<std::optional<Functor>> models_;
};

// Row-major tables over index tuples of objects. For a triple (x, y, z)
// the key is (x * n + y) * n + z; within it, entry g * |A(x,y)| + f for
// g in A(y,z), f in A(x,y).
struct BicategoryData {
  CatGraph graph;
  std::vector<ObjectId> identity1;
  std::vector<std::vector<ObjectId>> compose1;
  // Same layout on 2-cells: beta * alpha for beta in A(y,z), alpha in A(x,y).
  std::optional<std::vector<std::vector<MorphismId>>> hcompose2;
  // Per (x, y, z, w), entry (h * |A(y,z)| + g) * |A(x,y)| + f holds
  // a : h(gf) => (hg)f.
  std::optional<std::vector<std::vector<MorphismId>>> associator;
  // Per (x, y), entry f holds l : id_y f => f (resp. r : f id_x => f).
  std::optional<std::vector<std::vector<MorphismId>>> left_unitor;
  std::optional<std::vector<std::vector<MorphismId>>> right_unitor;
};

class Bicategory {
 public:
  // Checks frames of every supplied cell, functoriality of hcompose2,
  // invertibility and naturality of associators and unitors, and the
  // pentagon and triangle identities when the relevant data is present.
  // Throws ValidationError(kInvalidBicategory).
  static Bicategory validate(BicategoryData data);

  const CatGraph& graph() const { return data_.graph; }
  const BicategoryData& data() const { return data_; }
  std::size_t object_count() const { return data_.graph.object_count(); }
  const std::string& object_label(ObjectId x) const {
    return data_.graph.object_label(x);
  }
  const FinCategory& hom(ObjectId x, ObjectId y) const {
    return data_.graph.hom(x, y);
  }
  const CategoryPtr& hom_ptr(ObjectId x, ObjectId y) const {
    return data_.graph.hom_ptr(x, y);
  }

  ObjectId identity1(ObjectId x) const { return data_.identity1[x]; }
  ObjectId compose1(ObjectId x, ObjectId y, ObjectId z, ObjectId g,
                    ObjectId f) const {
    return data_.compose1[key3(x, y, z)][g * hom(x, y).object_count() + f];
  }

  bool has_hcompose2() const { return data_.hcompose2.has_value(); }
  MorphismId hcompose2(ObjectId x, ObjectId y, ObjectId z, MorphismId beta,
                       MorphismId alpha) const {
    return (*data_.hcompose2)[key3(x, y, z)]
                             [beta * hom(x, y).morphism_count() + alpha];
  }
  // id_g * alpha and beta * id_f.
  MorphismId whisker_left(ObjectId x, ObjectId y, ObjectId z, ObjectId g,
                          MorphismId alpha) const {
    return hcompose2(x, y, z, hom(y, z).identity(g), alpha);
  }
  MorphismId whisker_right(ObjectId x, ObjectId y, ObjectId z,
                           MorphismId beta, ObjectId f) const {
    return hcompose2(x, y, z, beta, hom(x, y).identity(f));
  }

  bool has_associator() const { return data_.associator.has_value(); }
  MorphismId associator(ObjectId x, ObjectId y, ObjectId z, ObjectId w,
                        ObjectId h, ObjectId g, ObjectId f) const;
  bool has_unitors() const {
    return data_.left_unitor.has_value() && data_.right_unitor.has_value();
  }
  MorphismId left_unitor(ObjectId x, ObjectId y, ObjectId f) const {
    return (*data_.left_unitor)[x * object_count() + y][f];
  }
  MorphismId right_unitor(ObjectId x, ObjectId y, ObjectId f) const {
    return (*data_.right_unitor)[x * object_count() + y][f];
  }

  std::size_t key3(ObjectId x, ObjectId y, ObjectId z) const {
    const std::size_t n = object_count();
    return (x * n + y) * n + z;
  }

 private:
  BicategoryData data_;
};

using BicatPtr = std::shared_ptr<const Bicategory>;

inline BicatPtr share(Bicategory b) {
  return std::make_shared<const Bicategory>(std::move(b));
}

// Entry (i, j) is chi(hom(i, j)), 0 for an empty hom. Throws
// Error(kHomWithoutEuler) naming (i, j).
QMatrix similarity_matrix_cg(const CatGraph& g);
MatrixEuler euler_char_cg(const CatGraph& g);

// Objects "k.x" for summand k.
CatGraph coproduct_cg(const std::vector<CatGraph>& gs);
// Objects "(x,y)", homs the product categories.
CatGraph product_cg(const CatGraph& a, const CatGraph& b);
CatGraph full_sub_catgraph(const CatGraph& g,
                           const std::vector<ObjectId>& objects);

// Componentwise structure; optional cells survive when both sides have
// them.
Bicategory product_bicat(const Bicategory& a, const Bicategory& b);
Bicategory coproduct_bicat(const std::vector<BicatPtr>& parts);

// Reverses 1-cells and 2-cells. Associators and unitors are dropped.
Bicategory coop(const Bicategory& b);

// Zigzag components over nonempty homs.
std::vector<std::vector<ObjectId>> connected_components_cg(const CatGraph& g);

bool is_acyclic_bicat(const CatGraph& g);
inline bool is_acyclic_bicat(const Bicategory& b) {
  return is_acyclic_bicat(b.graph());
}

// Triangular back-substitution in a topological order of the objects.
// Throws Error(kNotAcyclic).
Rational euler_acyclic_bicat(const Bicategory& b);

struct EquivalenceClasses {
  std::vector<std::size_t> class_of;
  std::vector<std::vector<ObjectId>> classes;

  std::size_t size_of(ObjectId x) const {
    return classes[class_of[x]].size();
  }
};

// Is the 1-cell f : x -> y an equivalence.
bool is_equivalence_1cell(const Bicategory& b, ObjectId x, ObjectId y,
                          ObjectId f);

// Throws Error(kInvalidBicategory) when the computed relation fails to be
// an equivalence relation.
EquivalenceClasses equivalence_classes(const Bicategory& b);

struct CheckResult {
  bool holds = false;
  std::vector<std::string> witnesses;

  nlohmann::json to_json() const;
};

CheckResult pseudogroupoid_check(const Bicategory& b);

// Sum over zigzag components of 1 / chi(hom(g, g)). Throws
// Error(kNotPseudogroupoid).
Rational pseudogroupoid_euler(const Bicategory& b);

// phi[key3(x,y,z)][g * |A(x,y)| + f] : L g o L f => L(g o f) and
// psi[x] : id_{Lx} => L(id_x).
struct LaxBicatCoherence {
  std::vector<std::vector<MorphismId>> phi;
  std::vector<MorphismId> psi;
};

class LaxFunctorBicat {
 public:
  // hom_functors is row-major over (x, y) and must run between the exact
  // hom categories of source and target. Throws Error(kInvalidLaxFunctor).
  static LaxFunctorBicat validate(BicatPtr source, BicatPtr target,
                                  std::vector<ObjectId> object_map,
                                  std::vector<Functor> hom_functors,
                                  std::optional<LaxBicatCoherence> coherence);
  static LaxFunctorBicat identity(BicatPtr b);

  const Bicategory& source() const { return *source_; }
  const Bicategory& target() const { return *target_; }
  const BicatPtr& source_ptr() const { return source_; }
  const BicatPtr& target_ptr() const { return target_; }
  ObjectId object(ObjectId x) const { return object_map_[x]; }
  const std::vector<ObjectId>& object_map() const { return object_map_; }
  const Functor& hom_functor(ObjectId x, ObjectId y) const {
    return hom_functors_[x * source_->object_count() + y];
  }
  const std::vector<Functor>& hom_functors() const { return hom_functors_; }
  const std::optional<LaxBicatCoherence>& coherence() const {
    return coherence_;
  }

  // Image of a 1-cell / 2-cell of hom(x, y).
  ObjectId map1(ObjectId x, ObjectId y, ObjectId f) const {
    return hom_functor(x, y).object(f);
  }
  MorphismId map2(ObjectId x, ObjectId y, MorphismId a) const {
    return hom_functor(x, y).morphism(a);
  }

 private:
  BicatPtr source_;
  BicatPtr target_;
  std::vector<ObjectId> object_map_;
  std::vector<Functor> hom_functors_;
  std::optional<LaxBicatCoherence> coherence_;
};

// The same lax functor between the coop bicategories.
LaxFunctorBicat coop(const LaxFunctorBicat& l);

// Local equivalence and biessential surjectivity.
CheckResult check_biequivalence(const LaxFunctorBicat& l);

struct BiequivalenceReport {
  Rational chi_source;
  Rational chi_target;
  QVector transported_weighting;
  QVector transported_coweighting;
  bool transported_weighting_ok = false;
  bool transported_coweighting_ok = false;
  bool holds = false;

  nlohmann::json to_json() const;
};

// Throws Error(kNotBiequivalence) and Error(kMissingEulerCharacteristic).
BiequivalenceReport verify_biequivalence_invariance(const LaxFunctorBicat& l);

}  // namespace bicat_euler

#endif  // BICAT_EULER_BICATEGORY_HPP_
