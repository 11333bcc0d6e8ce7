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

// Lax functors of bicategories fibered in pseudogroupoids, their fiber
// bicategories, indexed families of bicategories (trihomomorphisms) and the
// counting form of their Grothendieck construction.
//
// Throughout, P : E -> B is a LaxFunctorBicat.

#ifndef BICAT_EULER_BIFIBRATION_HPP_
#define BICAT_EULER_BIFIBRATION_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicat_euler/bicategory.hpp"
#include "bicat_euler/fibration.hpp"

namespace bicat_euler {

// Describes a frame (g, h, alpha) with no lift, or a compatible (sigma,
// delta) whose 2-cell lift is missing or not unique. Needs horizontal
// composition in E and B; throws Error(kMissingCompositionData) otherwise.
std::optional<std::string> cartesian_1cell_counterexample(
    const LaxFunctorBicat& p, ObjectId x, ObjectId y, ObjectId f);
bool is_cartesian_1cell(const LaxFunctorBicat& p, ObjectId x, ObjectId y,
                        ObjectId f);

struct BiFibrationReport {
  bool locally_fibered_in_groupoids = false;
  bool one_lifts = false;
  bool all_1cells_cartesian = false;
  bool fibered_in_pseudogroupoids = false;
  // The same three conditions for the coop functor.
  bool cofibered_in_pseudogroupoids = false;
  std::vector<std::string> witnesses;

  nlohmann::json to_json() const;
};

BiFibrationReport classify_bifibration(const LaxFunctorBicat& p);

enum class CleavageChoice { kSmallestLabel, kLargestLabel };

// Cells over (b, id_b, id_{id_b}). Composites are the sources of the chosen
// 2-cell lifts into id_b; identity 2-cells lift to themselves. Horizontal
// composition is present when E has it. Throws Error(kNotBiFibered) unless
// p is fibered in pseudogroupoids, and Error(kObjectNotInBase).
Bicategory fiber_bicategory(
    const LaxFunctorBicat& p, ObjectId b,
    CleavageChoice choice = CleavageChoice::kSmallestLabel);

struct FiberBiequivalenceReport {
  CheckResult biequivalence;
  Rational chi_source;
  Rational chi_target;
  bool holds = false;

  nlohmann::json to_json() const;
};

// Builds f* : P^-1(c) -> P^-1(b) for f : b -> c from cartesian 1-cell
// lifts and checks it. Throws Error(kNotBiFibered).
FiberBiequivalenceReport verify_fiber_biequivalence(const LaxFunctorBicat& p,
                                                    ObjectId b, ObjectId c,
                                                    ObjectId f);

// pullback1[b * n + c][f] : fibers[c] -> fibers[b] for f in B(b, c).
// pullback2[b * n + c][alpha][y] for alpha : f => g in B(b, c) is a 1-cell
// g*y -> f*y of fibers[b].
struct TrihomData {
  BicatPtr base;
  std::vector<BicatPtr> fibers;
  std::vector<std::vector<LaxFunctorBicat>> pullback1;
  std::vector<std::vector<std::vector<ObjectId>>> pullback2;
};

class Trihomomorphism {
 public:
  // Throws ValidationError(kIllTypedComponent) listing each bad component.
  static Trihomomorphism validate(TrihomData data);

  const TrihomData& data() const { return data_; }
  const Bicategory& base() const { return *data_.base; }
  const Bicategory& fiber(ObjectId b) const { return *data_.fibers[b]; }
  const LaxFunctorBicat& pullback1(ObjectId b, ObjectId c, ObjectId f) const {
    return data_.pullback1[b * base().object_count() + c][f];
  }
  ObjectId pullback2(ObjectId b, ObjectId c, MorphismId alpha,
                     ObjectId y) const {
    return data_.pullback2[b * base().object_count() + c][alpha][y];
  }

 private:
  TrihomData data_;
};

// Induced family for p fibered (and cofibered) in pseudogroupoids.
Trihomomorphism induced_trihomomorphism(
    const LaxFunctorBicat& p,
    CleavageChoice choice = CleavageChoice::kSmallestLabel);

struct GrCell {
  ObjectId base;   // f in B(b, c)
  ObjectId fiber;  // u in F_b(x, f*y)
};

// hom((b,x), (c,y)) in counting form: objects (f,u) and the matrix of
// morphism counts sum over alpha : f => g of |F_b(x, f*y)(u, alpha*_y v)|.
struct GrHom {
  std::vector<GrCell> cells;
  std::vector<std::string> labels;
  QMatrix zeta;
};

struct GrothendieckCG {
  std::vector<std::string> labels;
  std::vector<GrObject> objects;
  std::vector<GrHom> homs;
  // Entries chi(hom); unset when some hom has no Euler characteristic.
  std::optional<QMatrix> similarity;

  const GrHom& hom(ObjectId i, ObjectId j) const {
    return homs[i * objects.size() + j];
  }
};

GrothendieckCG grothendieck_cg(const Trihomomorphism& t);

// k_{(f,u)} = k_f k_u, checked against the hom matrix. Throws
// Error(kMissingCoweighting).
QVector gr_hom_coweighting(const Trihomomorphism& t, const GrothendieckCG& gr,
                           ObjectId i, ObjectId j);

struct GrBicatReport {
  Rational chi_total;
  QVector base_coweighting;
  std::vector<Rational> fiber_chi;
  QVector product_coweighting;
  bool product_coweighting_ok = false;
  bool hom_coweightings_ok = false;
  Rational rhs;
  bool holds = false;

  // "2 = 1·2 + 0·2".
  std::string equation() const;
  nlohmann::json to_json() const;
};

// Throws Error(kMissingEulerCharacteristic).
GrBicatReport verify_gr_formula_bicat(const Trihomomorphism& t);
GrBicatReport verify_gr_formula_bicat(const LaxFunctorBicat& p);

struct ProductBicatComponent {
  std::vector<std::string> base_objects;
  Rational chi_base;
  std::string fiber_object;
  Rational chi_fiber;
  bool fiber_chi_constant = false;
  bool cleavage_independent = false;
};

struct ProductBicatReport {
  Rational chi_total;
  std::vector<ProductBicatComponent> components;
  Rational chi_grothendieck;
  bool grothendieck_matches = false;
  Rational rhs;
  bool holds = false;

  std::string equation() const;
  nlohmann::json to_json() const;
};

// Throws Error(kNotBiFibered) and Error(kMissingEulerCharacteristic).
ProductBicatReport verify_product_formula_bicat(const LaxFunctorBicat& p);

// Strict projection functors used to build fibered instances.
LaxFunctorBicat product_projection(const BicatPtr& base,
                                   const BicatPtr& fiber);
LaxFunctorBicat collapse_to_point(const BicatPtr& source);
// Disjoint union of lax functors, between the coproduct bicategories.
LaxFunctorBicat coproduct_lax_functor(const std::vector<LaxFunctorBicat>& parts);

// One-object bicategory with a single 1-cell and 2-cells Z/n.
Bicategory one_object_2group(std::size_t n);

// The bicategory on `objects` points whose homs are the indiscrete
// category on Z/m times BZ/n, with strict addition as composition.
Bicategory cyclic_pseudogroupoid(std::size_t objects, std::size_t m,
                                 std::size_t n);

// Sends every 1-cell of cyclic_pseudogroupoid(objects, m, n) to the single
// 1-cell of one_object_2group(a) and the 2-cell with group part k to
// k mod a. Requires a | n.
LaxFunctorBicat two_group_quotient(const BicatPtr& source,
                                   const BicatPtr& target);

}  // namespace bicat_euler

#endif  // BICAT_EULER_BIFIBRATION_HPP_
