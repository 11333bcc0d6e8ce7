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

// Fibrations of finite categories: cartesian morphisms, cleavages, fiber
// categories, Cat-valued lax functors and their Grothendieck construction.

#ifndef BICAT_EULER_FIBRATION_HPP_
#define BICAT_EULER_FIBRATION_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicat_euler/fincat.hpp"

namespace bicat_euler {

// Which universal property "cartesian" refers to.
//
// kStandard: f : e -> e' is cartesian iff for every g : e'' -> e' and every
// h : P e'' -> P e with P f o h = P g there is exactly one h~ : e'' -> e
// with P h~ = h and f o h~ = g.
//
// kLiteral: for every g : e'' -> e' and h : P e -> P e'' with
// P g o h = P f there is exactly one h~ : e -> e'' with P h~ = h and
// g o h~ = f.
enum class CartesianConvention { kStandard, kLiteral };

// Description of the first (g, h) frame for which the lift is missing or
// not unique; nullopt when `f` is cartesian.
std::optional<std::string> cartesian_counterexample(
    const Functor& p, MorphismId f,
    CartesianConvention convention = CartesianConvention::kStandard);

// Throws Error(kMorphismNotInCategory) when `f` is out of range.
bool is_cartesian_morphism(
    const Functor& p, MorphismId f,
    CartesianConvention convention = CartesianConvention::kStandard);

// The same functor between the opposite categories.
Functor reverse(const Functor& p);

struct FibrationReport {
  bool fibered = false;
  bool cofibered = false;
  bool fibered_in_groupoids = false;
  bool cofibered_in_groupoids = false;
  // One human-readable counterexample per false flag.
  std::vector<std::string> witnesses;

  nlohmann::json to_json() const;
};

FibrationReport classify_fibration(
    const Functor& p,
    CartesianConvention convention = CartesianConvention::kStandard);

// Tie-break among cartesian lifts of the same (f, e).
enum class LiftChoice { kSmallestLabel, kLargestLabel };

class Cleavage {
 public:
  Cleavage() = default;
  Cleavage(std::size_t base_morphisms, std::size_t total_objects)
      : total_objects_(total_objects),
        lifts_(base_morphisms * total_objects) {}

  // Cartesian lift of base morphism f ending at e, where P e = dst f.
  std::optional<MorphismId> lift(MorphismId f, ObjectId e) const {
    return lifts_[f * total_objects_ + e];
  }
  void set(MorphismId f, ObjectId e, MorphismId lift) {
    lifts_[f * total_objects_ + e] = lift;
  }

 private:
  std::size_t total_objects_ = 0;
  std::vector<std::optional<MorphismId>> lifts_;
};

// Throws Error(kNotFibered) when some (f, e) has no cartesian lift.
Cleavage choose_cleavage(const Functor& p,
                         LiftChoice choice = LiftChoice::kSmallestLabel);

// Objects over b and morphisms over id_b, with their indices in E.
struct FiberInclusion {
  CategoryPtr category;
  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;
};

// Throws Error(kObjectNotInBase).
FiberInclusion fiber_inclusion(const Functor& p, ObjectId b);
FinCategory fiber_category(const Functor& p, ObjectId b);

// Components of the structure cells of a Cat-valued lax functor on B^op.
// For f : b -> c and g : c -> d, compositors[{g, f}][z] is a morphism
// F f (F g z) -> F(g o f) z of F b. unitors[b][x] : x -> F(id_b) x.
struct LaxCatCoherence {
  std::map<std::pair<MorphismId, MorphismId>, std::vector<MorphismId>>
      compositors;
  std::vector<std::vector<MorphismId>> unitors;
};

// A lax functor F : B^op -> Cat with finite values. pullback(f) for
// f : b -> c is a functor F c -> F b.
class LaxFunctorToCat {
 public:
  // Throws Error(kInvalidFunctor) on endpoint mismatches and
  // Error(kIncoherentData) when coherence components are ill-framed or
  // not natural.
  static LaxFunctorToCat validate(CategoryPtr base,
                                  std::vector<CategoryPtr> fibers,
                                  std::vector<Functor> pullbacks,
                                  std::optional<LaxCatCoherence> coherence);

  const FinCategory& base() const { return *base_; }
  const CategoryPtr& base_ptr() const { return base_; }
  const FinCategory& fiber(ObjectId b) const { return *fibers_[b]; }
  const CategoryPtr& fiber_ptr(ObjectId b) const { return fibers_[b]; }
  const std::vector<CategoryPtr>& fibers() const { return fibers_; }
  const Functor& pullback(MorphismId f) const { return pullbacks_[f]; }
  const std::vector<Functor>& pullbacks() const { return pullbacks_; }
  const std::optional<LaxCatCoherence>& coherence() const {
    return coherence_;
  }

  // Pullbacks preserve identities and composites on the nose.
  bool strictly_functorial() const;

  // Coherence supplied explicitly, or derivable because the pullbacks are
  // strictly functorial (identity components).
  std::optional<LaxCatCoherence> effective_coherence() const;

 private:
  CategoryPtr base_;
  std::vector<CategoryPtr> fibers_;
  std::vector<Functor> pullbacks_;
  std::optional<LaxCatCoherence> coherence_;
};

// The pseudofunctor b |-> P^-1(b), f |-> f* determined by a cleavage,
// including the comparison cells. Throws Error(kNotFibered) when the
// cleavage is incomplete and Error(kNonUniqueLift) when an induced cell is
// not uniquely determined.
LaxFunctorToCat induced_fiber_pseudofunctor(const Functor& p,
                                            const Cleavage& cleavage);

struct GrObject {
  ObjectId base;
  ObjectId fiber;
};

// Objects (b, x) and the counts |Gr((b,x),(c,y))|. In full mode the total
// category and its projection are built as well.
struct GrothendieckCat {
  std::vector<std::string> labels;
  std::vector<GrObject> objects;
  QMatrix similarity;
  std::optional<CategoryPtr> total;
  std::optional<Functor> projection;
  // Object part of the projection, available in both modes.
  std::vector<ObjectId> projection_objects;
};

// Full mode when effective coherence exists; throws Error(kIncoherentData)
// if the resulting composition violates the category laws.
GrothendieckCat grothendieck_cat(const LaxFunctorToCat& f);

struct GrFormulaReport {
  Rational chi_total;
  QVector base_coweighting;
  std::vector<std::string> base_labels;
  std::vector<Rational> fiber_chi;
  Rational rhs;
  bool holds = false;

  // "2 = 1·2 + 0·1".
  std::string equation() const;
  nlohmann::json to_json() const;
};

// Throws Error(kMissingEulerCharacteristic) naming the piece lacking it.
GrFormulaReport verify_gr_formula(const LaxFunctorToCat& f);

struct ProductComponent {
  std::vector<std::string> base_objects;
  Rational chi_base;
  std::string fiber_object;
  Rational chi_fiber;
  bool fiber_chi_constant = false;
};

struct ProductFormulaReport {
  Rational chi_total;
  std::vector<ProductComponent> components;
  Rational rhs;
  bool holds = false;

  // "1 = 1/2 · 2", summed over components.
  std::string equation() const;
  nlohmann::json to_json() const;
};

// Throws Error(kNotBiFibered) unless p is fibered and cofibered in
// groupoids, Error(kMissingEulerCharacteristic) when E or a component of B
// lacks one.
ProductFormulaReport verify_product_formula_cat(const Functor& p);

// "a·b", or "a · b" when either factor is a fraction.
std::string product_term(const Rational& a, const Rational& b);

}  // namespace bicat_euler

#endif  // BICAT_EULER_FIBRATION_HPP_
