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

// Test-side oracles. None of these call into the library's solvers or
// counting code, so agreement with them is independent evidence.

#ifndef BICAT_EULER_TESTS_SUPPORT_HPP_
#define BICAT_EULER_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bicat_euler/bicategory.hpp"
#include "bicat_euler/exactq.hpp"
#include "bicat_euler/fincat.hpp"

namespace oracle {

using bicat_euler::FinCategory;
using bicat_euler::Rational;
using Rows = std::vector<std::vector<Rational>>;

inline Rational q(long p, long d = 1) { return Rational(p) / d; }

inline Rows rows_of(const bicat_euler::QMatrix& m) {
  Rows r(m.row_count(), std::vector<Rational>(m.col_count()));
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    for (std::size_t j = 0; j < m.col_count(); ++j) r[i][j] = m(i, j);
  }
  return r;
}

inline Rows transpose(const Rows& a) {
  if (a.empty()) return a;
  Rows t(a[0].size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

// Solves a x = b by row reduction, assigning `free_value` to every free
// variable. nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve(Rows a, std::vector<Rational> b,
                                                  const Rational& free_value) {
  const std::size_t n = a.size();
  const std::size_t m = n == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = 0; c < m; ++c) a[r][c] -= factor * a[row][c];
      b[r] -= factor * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r) {
    if (b[r] != 0) return std::nullopt;
  }
  std::vector<Rational> x(m, free_value);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    Rational v = b[r];
    for (std::size_t c = 0; c < m; ++c) {
      if (c != pivot_col[r] &&
          std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) {
        v -= a[r][c] * free_value;
      }
    }
    x[pivot_col[r]] = v;
  }
  return x;
}

inline std::optional<std::vector<Rational>> weighting(const Rows& z,
                                                      const Rational& free_value = 0) {
  return solve(z, std::vector<Rational>(z.size(), Rational(1)), free_value);
}

inline std::optional<std::vector<Rational>> coweighting(const Rows& z,
                                                        const Rational& free_value = 0) {
  return solve(transpose(z), std::vector<Rational>(z.size(), Rational(1)), free_value);
}

inline Rational sum(const std::vector<Rational>& v) {
  return std::accumulate(v.begin(), v.end(), Rational(0));
}

// Euler characteristic from the oracle solver; nullopt if either side is
// missing.
inline std::optional<Rational> chi(const Rows& z) {
  auto w = weighting(z);
  auto c = coweighting(z);
  if (!w || !c) return std::nullopt;
  return sum(*w);
}

// |A(x, y)| by scanning the morphism list.
inline Rows zeta(const FinCategory& a) {
  Rows z(a.object_count(), std::vector<Rational>(a.object_count(), Rational(0)));
  for (std::size_t m = 0; m < a.morphism_count(); ++m) z[a.src(m)][a.dst(m)] += 1;
  return z;
}

// Alternating count of chains of non-identity morphisms.
inline Rational chain_euler(const FinCategory& a) {
  std::vector<Rational> chains(a.morphism_count(), Rational(0));
  for (std::size_t m = 0; m < a.morphism_count(); ++m) {
    if (!a.is_identity(m)) chains[m] = 1;
  }
  Rational total = static_cast<long>(a.object_count());
  long sign = -1;
  for (std::size_t len = 1; len <= a.object_count() + 1; ++len) {
    const Rational layer = sum(chains);
    if (layer == 0) break;
    total += sign * layer;
    sign = -sign;
    std::vector<Rational> next(a.morphism_count(), Rational(0));
    for (std::size_t g = 0; g < a.morphism_count(); ++g) {
      if (a.is_identity(g)) continue;
      for (std::size_t f = 0; f < a.morphism_count(); ++f) {
        if (!a.is_identity(f) && a.dst(f) == a.src(g)) next[g] += chains[f];
      }
    }
    chains = std::move(next);
  }
  return total;
}

// For a groupoid: sum over connected components of 1 / |Aut(x)|.
inline Rational groupoid_chi(const FinCategory& a) {
  std::vector<std::size_t> parent(a.object_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t m = 0; m < a.morphism_count(); ++m) parent[find(a.src(m))] = find(a.dst(m));
  Rational total = 0;
  std::vector<bool> seen(a.object_count(), false);
  for (std::size_t x = 0; x < a.object_count(); ++x) {
    const std::size_t r = find(x);
    if (seen[r]) continue;
    seen[r] = true;
    long aut = 0;
    for (std::size_t m = 0; m < a.morphism_count(); ++m) {
      if (a.src(m) == x && a.dst(m) == x) ++aut;
    }
    total += Rational(1) / aut;
  }
  return total;
}

inline Rows cg_zeta(const bicat_euler::CatGraph& g) {
  const std::size_t n = g.object_count();
  Rows z(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (g.hom(x, y).object_count() == 0) continue;
      z[x][y] = *chi(zeta(g.hom(x, y)));
    }
  }
  return z;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace oracle

#endif  // BICAT_EULER_TESTS_SUPPORT_HPP_
