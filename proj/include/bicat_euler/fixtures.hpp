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

// Small hand-checkable categories, bicategories and functors shared by the
// tests, the CLI and the shipped .catj files.

#ifndef BICAT_EULER_FIXTURES_HPP_
#define BICAT_EULER_FIXTURES_HPP_

#include <string>
#include <vector>

#include "bicat_euler/bifibration.hpp"
#include "bicat_euler/fibration.hpp"

namespace bicat_euler::fixtures {

// Terminal category: object "*", morphism "id_*".
CategoryPtr pt();
// Objects x, y and their identities.
CategoryPtr d2();
// 0 -a-> 1.
CategoryPtr arrow();
// Two parallel arrows a, b : 0 -> 1.
CategoryPtr pair();
// p : 0 -> 1 and q : 0 -> 2.
CategoryPtr span();
// One object "*", morphisms e, g with g o g = e.
CategoryPtr bz2();
// Indiscrete on x, y; the morphism x -> y is "x>y".
CategoryPtr ez2();

CategoryPtr discrete(const std::vector<std::string>& objects);
CategoryPtr indiscrete(const std::vector<std::string>& objects);
// One object "*", morphisms e, g, g2, ... under addition mod n.
CategoryPtr cyclic_group(std::size_t n);

// x, y -> *, x>y and y>x -> g.
Functor ez2_to_bz2();
// x -> 0, y -> 1.
Functor d2_to_arrow();
Functor arrow_to_pt();

// Base ARROW, F(0) = D2, F(1) = PT, pullback along a picks x.
LaxFunctorToCat arrow_base_laxcat();
// Base BZ2, F(*) = D2, pullback along g swaps x and y.
LaxFunctorToCat bz2_swap_laxcat();

// Category as a bicategory with identity 2-cells only.
Bicategory locally_discrete(const CategoryPtr& c);

// One object, one 1-cell, one 2-cell.
Bicategory bpt();
// Two objects, every hom the one-object groupoid on Z/2.
Bicategory psg();
// Locally discrete on EZ2: every hom is PT.
Bicategory ez2_bicat();
// hom(0,1) is the arrow p => q, hom(1,0) empty, endo-homs trivial.
Bicategory acyclic2();
// One object, hom the one-object groupoid on Z/2.
Bicategory bz2_2group();
// Locally discrete on ARROW.
Bicategory arrow_ld();
// Locally discrete on n points.
Bicategory discrete_bicat(std::size_t n);

// PSG collapsed onto BPT.
LaxFunctorBicat psg_collapse();
// ARROW_ld x PSG projected onto ARROW_ld.
LaxFunctorBicat gr_psg_over_arrow();
// Two objects with homs Z/4 reduced mod 2 onto the 2-group on Z/2.
LaxFunctorBicat two_group_psg();
// Coproduct of gr_psg_over_arrow and two_group_psg.
LaxFunctorBicat disjoint_psg();
// BPT sent to x in EZ2.
LaxFunctorBicat pt_into_ez2();
// One point into two discrete points.
LaxFunctorBicat point_into_discrete2();
// BPT into the locally discrete bicategory on BZ2: the 1-cell g has no
// preimage.
LaxFunctorBicat pt_into_ld_bz2();
// acyclic2 collapsed onto BPT.
LaxFunctorBicat acyclic2_collapse();
// One-object 2-group on Z/2 sent into PSG at object 0.
LaxFunctorBicat bz2_into_psg();

}  // namespace bicat_euler::fixtures

#endif  // BICAT_EULER_FIXTURES_HPP_
