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


#include "bicat_euler/corpus.hpp"

#include "bicat_euler/fixtures.hpp"

namespace bicat_euler::dsl {

std::vector<CorpusEntry> fixture_corpus() {
  namespace fx = fixtures;
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, Value v) {
    out.push_back({std::move(name), Document{std::move(v)}});
  };
  add("pt", fx::pt());
  add("d2", fx::d2());
  add("arrow", fx::arrow());
  add("pair", fx::pair());
  add("span", fx::span());
  add("bz2", fx::bz2());
  add("ez2", fx::ez2());
  add("z3", fx::cyclic_group(3));

  add("ez2-to-bz2", fx::ez2_to_bz2());
  add("d2-to-arrow", fx::d2_to_arrow());
  add("arrow-to-pt", fx::arrow_to_pt());

  add("arrow-base-laxcat", fx::arrow_base_laxcat());
  add("bz2-swap-laxcat", fx::bz2_swap_laxcat());

  add("psg-catgraph", fx::psg().graph());

  add("psg", share(fx::psg()));
  add("bpt", share(fx::bpt()));
  add("ez2-bicat", share(fx::ez2_bicat()));
  add("acyclic2", share(fx::acyclic2()));
  add("bz2-2group", share(fx::bz2_2group()));
  add("arrow-ld", share(fx::arrow_ld()));

  add("psg-collapse", fx::psg_collapse());
  add("gr-psg-over-arrow", fx::gr_psg_over_arrow());
  add("two-group-psg", fx::two_group_psg());
  add("disjoint-psg", fx::disjoint_psg());
  add("pt-into-ez2", fx::pt_into_ez2());
  add("pt-into-ld-bz2", fx::pt_into_ld_bz2());
  add("acyclic2-collapse", fx::acyclic2_collapse());
  add("bz2-into-psg", fx::bz2_into_psg());

  add("gr-psg-over-arrow-trihom",
      induced_trihomomorphism(fx::gr_psg_over_arrow()));
  add("two-group-psg-trihom", induced_trihomomorphism(fx::two_group_psg()));
  return out;
}

}  // namespace bicat_euler::dsl
