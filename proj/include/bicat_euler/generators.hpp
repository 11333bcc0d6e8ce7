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

// Seeded random instances. Every generator builds its output so that the
// defining predicate holds by construction; nothing is rejection sampled.
// Output depends only on the seed, never on the platform.

#ifndef BICAT_EULER_GENERATORS_HPP_
#define BICAT_EULER_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "bicat_euler/bifibration.hpp"
#include "bicat_euler/fibration.hpp"

namespace bicat_euler::gen {

// mt19937_64 with plain modular reduction, so sequences are identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish in [0, n); n > 0.
  std::size_t below(std::size_t n) { return engine_() % n; }
  // In [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + below(hi - lo + 1);
  }
  bool coin() { return (engine_() >> 17) & 1; }
  // True with probability num / den.
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

// Square matrix with small integer and half-integer entries; roughly one
// in five is singular.
QMatrix random_matrix(Rng& rng, std::size_t n);

// Free category on a random DAG, or the poset of its reachability
// relation, on `objects` points with at most 60 morphisms. objects == 1
// gives the terminal category.
CategoryPtr acyclic_category(Rng& rng, std::size_t objects);

// Small category with an Euler characteristic drawn from a mix of
// acyclic categories, cyclic groups, indiscrete categories, idempotent
// monoids and their sums and products. At most about 16 morphisms.
CategoryPtr small_category(Rng& rng);

// Replaces each object x of c by 1..3 copies; the projection forgetting
// the copy index is an equivalence.
Functor thickening(Rng& rng, const CategoryPtr& c);

// Cat-graph whose similarity matrix is triangular with nonzero diagonal
// in object order, so it always has an Euler characteristic.
CatGraph triangular_catgraph(Rng& rng, std::size_t objects);

// F : B^op -> Gpd over a free DAG or a cyclic group with fibers
// S x BZ/m (S discrete or indiscrete). Pullbacks are equivalences and
// strictly functorial.
LaxFunctorToCat groupoid_laxcat(Rng& rng, std::size_t base_objects);

// Connected pseudogroupoid with at most `objects` objects and homs of at
// most 6 objects.
Bicategory connected_pseudogroupoid(Rng& rng, std::size_t objects);

// Bicategory with an Euler characteristic: a pseudogroupoid, a locally
// discrete acyclic category, or a sum of these.
Bicategory measurable_bicategory(Rng& rng, std::size_t objects);

// Replaces each object by 1..2 copies sharing all homs; the projection is
// a biequivalence.
LaxFunctorBicat bicat_thickening(Rng& rng, const BicatPtr& b);

enum class TrihomFamily { kConstant, kTwoGroup, kCollapse, kDisjoint };

// Lax functor fibered and cofibered in pseudogroupoids.
LaxFunctorBicat pseudogroupoid_fibration(Rng& rng, TrihomFamily family,
                                         std::size_t size);

}  // namespace bicat_euler::gen

#endif  // BICAT_EULER_GENERATORS_HPP_
