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

// Exact rational linear algebra over finite label sets: weightings,
// coweightings and the Euler characteristic (magnitude) of a matrix.

#ifndef BICAT_EULER_EXACTQ_HPP_
#define BICAT_EULER_EXACTQ_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace bicat_euler {

// Arbitrary precision, always normalized (lowest terms, positive
// denominator).
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when q == 1. The sign is carried by the numerator.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q" with q != 0; the result is normalized.
std::optional<Rational> parse_rational(std::string_view text);

class QVector {
 public:
  QVector() = default;
  QVector(std::vector<std::string> index, std::vector<Rational> entries);

  std::size_t size() const { return entries_.size(); }
  const std::vector<std::string>& index() const { return index_; }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const Rational& at(std::string_view label) const;
  Rational sum() const;

  friend bool operator==(const QVector&, const QVector&) = default;

 private:
  std::vector<std::string> index_;
  std::vector<Rational> entries_;
};

// A total map rows x cols -> Q, stored row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::vector<std::string> rows, std::vector<std::string> cols,
          std::vector<Rational> entries);
  static QMatrix square(std::vector<std::string> labels,
                        std::vector<Rational> entries);
  static QMatrix identity(std::vector<std::string> labels);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }
  const std::vector<std::string>& rows() const { return rows_; }
  const std::vector<std::string>& cols() const { return cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_.size() + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_.size() + j];
  }

  QMatrix transpose() const;
  Rational entry_sum() const;

  // Row and column label sets coincide (order may differ).
  bool is_square() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::vector<Rational> entries_;
};

QVector multiply(const QMatrix& m, const QVector& v);
QVector multiply(const QVector& v, const QMatrix& m);
QMatrix multiply(const QMatrix& a, const QMatrix& b);

/// Column vector k with m k = u. Free variables of an underdetermined
/// system are set to zero; pivots are the first nonzero entry in column
/// order. Returns nullopt when the system is inconsistent.
std::optional<QVector> solve_weighting(const QMatrix& m);

/// Row vector k with k m = u^T, i.e. solve_weighting(m.transpose()).
std::optional<QVector> solve_coweighting(const QMatrix& m);

struct MatrixEuler {
  std::optional<QVector> weighting;
  std::optional<QVector> coweighting;
  std::optional<Rational> chi;

  bool has_euler() const { return chi.has_value(); }
};

// Throws Error(kIndexMismatch) if m is not square. Throws Error(kInternal)
// if the weighting and coweighting sums disagree.
MatrixEuler matrix_euler(const QMatrix& m);

// Gauss-Jordan inverse, indexed cols x rows. nullopt if singular.
std::optional<QMatrix> invert(const QMatrix& m);

// {"rows": [...], "cols": [...], "entries": [[...]]}; rows and cols are
// emitted in lexicographic label order.
nlohmann::json to_json(const QMatrix& m);
nlohmann::json to_json(const QVector& v);
QMatrix qmatrix_from_json(const nlohmann::json& j);

}  // namespace bicat_euler

#endif  // BICAT_EULER_EXACTQ_HPP_
