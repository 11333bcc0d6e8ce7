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

// Finite categories given by explicit composition tables, functors and
// natural transformations between them, and the Euler characteristic of a
// finite category.

#ifndef BICAT_EULER_FINCAT_HPP_
#define BICAT_EULER_FINCAT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bicat_euler/error.hpp"
#include "bicat_euler/exactq.hpp"

namespace bicat_euler {

using ObjectId = std::size_t;
using MorphismId = std::size_t;

struct MorphismSpec {
  std::string id;
  std::string src;
  std::string dst;

  friend bool operator==(const MorphismSpec&, const MorphismSpec&) = default;
};

// Unvalidated description of a finite category. Every morphism, including
// identities, is listed in `morphisms`; `compositions` holds triples
// {g, f, g o f} and must cover every composable pair.
struct CategorySpec {
  std::vector<std::string> objects;
  std::vector<MorphismSpec> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;
  std::vector<std::array<std::string, 3>> compositions;
};

// Every law violated by `spec`. Empty iff `spec` describes a category.
std::vector<Violation> check_category_laws(const CategorySpec& spec);

class FinCategory {
 public:
  // Throws ValidationError(kInvalidCategory) listing every violation.
  static FinCategory validate(const CategorySpec& spec);

  FinCategory() = default;

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  const std::string& object_label(ObjectId x) const { return objects_[x]; }
  const std::string& morphism_label(MorphismId m) const {
    return morphisms_[m].id;
  }
  const std::vector<std::string>& object_labels() const { return objects_; }

  std::optional<ObjectId> find_object(std::string_view label) const;
  std::optional<MorphismId> find_morphism(std::string_view label) const;

  ObjectId src(MorphismId m) const { return morphisms_[m].src; }
  ObjectId dst(MorphismId m) const { return morphisms_[m].dst; }
  MorphismId identity(ObjectId x) const { return identities_[x]; }
  bool is_identity(MorphismId m) const {
    return identities_[src(m)] == m;
  }

  // g o f; requires src(g) == dst(f).
  MorphismId compose(MorphismId g, MorphismId f) const;

  const std::vector<MorphismId>& hom(ObjectId x, ObjectId y) const {
    return homs_[x * objects_.size() + y];
  }

  // Canonical description (objects and morphisms in stored order,
  // compositions ordered by (g, f)).
  CategorySpec spec() const;

 private:
  struct Morphism {
    std::string id;
    ObjectId src;
    ObjectId dst;
  };

  static std::uint64_t key(MorphismId g, MorphismId f) {
    return (static_cast<std::uint64_t>(g) << 32) | f;
  }

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorphismId> identities_;
  std::unordered_map<std::uint64_t, MorphismId> compose_;
  std::vector<std::vector<MorphismId>> homs_;
  std::unordered_map<std::string, ObjectId> object_index_;
  std::unordered_map<std::string, MorphismId> morphism_index_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

inline CategoryPtr share(FinCategory c) {
  return std::make_shared<const FinCategory>(std::move(c));
}

// Builds the category from its spec; throws ValidationError on failure.
CategoryPtr make_category(const CategorySpec& spec);

class Functor {
 public:
  // Throws ValidationError(kInvalidFunctor).
  static Functor validate(CategoryPtr source, CategoryPtr target,
                          std::vector<ObjectId> object_map,
                          std::vector<MorphismId> morphism_map);
  static Functor identity(CategoryPtr c);

  const FinCategory& source() const { return *source_; }
  const FinCategory& target() const { return *target_; }
  const CategoryPtr& source_ptr() const { return source_; }
  const CategoryPtr& target_ptr() const { return target_; }

  ObjectId object(ObjectId x) const { return object_map_[x]; }
  MorphismId morphism(MorphismId m) const { return morphism_map_[m]; }
  const std::vector<ObjectId>& object_map() const { return object_map_; }
  const std::vector<MorphismId>& morphism_map() const {
    return morphism_map_;
  }

  // Same source/target (by identity of pointee) and same maps.
  bool same_as(const Functor& other) const;

 private:
  CategoryPtr source_;
  CategoryPtr target_;
  std::vector<ObjectId> object_map_;
  std::vector<MorphismId> morphism_map_;
};

std::vector<Violation> check_functor_laws(const FinCategory& source,
                                          const FinCategory& target,
                                          const std::vector<ObjectId>& objects,
                                          const std::vector<MorphismId>& morphisms);

// g o f.
Functor compose(const Functor& g, const Functor& f);

class NatTransformation {
 public:
  // components[x] : F x -> G x in the common target. Throws
  // ValidationError(kInvalidNatTransformation).
  static NatTransformation validate(Functor from, Functor to,
                                    std::vector<MorphismId> components);

  const Functor& from() const { return from_; }
  const Functor& to() const { return to_; }
  MorphismId component(ObjectId x) const { return components_[x]; }
  const std::vector<MorphismId>& components() const { return components_; }

 private:
  NatTransformation(Functor from, Functor to,
                    std::vector<MorphismId> components)
      : from_(std::move(from)), to_(std::move(to)),
        components_(std::move(components)) {}

  Functor from_;
  Functor to_;
  std::vector<MorphismId> components_;
};

// Entry (i, j) is |A(i, j)|.
QMatrix similarity_matrix(const FinCategory& a);

MatrixEuler euler_char(const FinCategory& a);

// Every endomorphism set is {identity} and non-identity morphisms induce
// an acyclic relation on objects.
bool is_acyclic(const FinCategory& a);

using Integer = boost::multiprecision::cpp_int;

struct ChainComplexCount {
  // counts[n]: chains of n composable non-identity morphisms.
  std::vector<Integer> counts;
  Integer euler;
};

// Throws Error(kNotAcyclic) unless is_acyclic(a).
ChainComplexCount nerve_euler(const FinCategory& a);

// Objects "i.x" for summand i; no morphisms between summands.
FinCategory coproduct(const std::vector<CategoryPtr>& summands);

// Objects and morphisms "(a,b)", composition componentwise.
FinCategory product(const FinCategory& a, const FinCategory& b);

FinCategory opposite(const FinCategory& a);

// Functor between the opposite categories.
Functor opposite(const Functor& f, CategoryPtr source_op,
                 CategoryPtr target_op);

// Both composites with `m` are identities.
std::optional<MorphismId> inverse_of(const FinCategory& a, MorphismId m);
bool is_groupoid(const FinCategory& a);

// Some isomorphism x -> y, the first in hom order.
std::optional<MorphismId> find_isomorphism(const FinCategory& a, ObjectId x,
                                           ObjectId y);

// Partition of objects into isomorphism classes; class_of[x] indexes
// classes, classes are in order of first member.
struct IsoClasses {
  std::vector<std::size_t> class_of;
  std::vector<std::vector<ObjectId>> classes;
};

IsoClasses isomorphism_classes(const FinCategory& a);

// Fully faithful and essentially surjective.
bool check_equivalence_functor(const Functor& f);

// Connected components under zigzags of morphisms.
std::vector<std::vector<ObjectId>> connected_components(const FinCategory& a);

// Full subcategory on the given objects (order preserved).
FinCategory full_subcategory(const FinCategory& a,
                             const std::vector<ObjectId>& objects);

struct EquivalenceInvarianceReport {
  bool is_equivalence = false;
  std::optional<Rational> chi_source;
  std::optional<Rational> chi_target;
  std::optional<QVector> transported_weighting;
  std::optional<QVector> transported_coweighting;
  bool transported_weighting_ok = false;
  bool transported_coweighting_ok = false;
  bool holds = false;

  nlohmann::json to_json() const;
};

// Transports a weighting (and coweighting) of the target back along an
// equivalence, averaging over isomorphism classes, and checks it against
// the source similarity matrix.
EquivalenceInvarianceReport verify_equivalence_invariance(const Functor& f);

}  // namespace bicat_euler

#endif  // BICAT_EULER_FINCAT_HPP_
