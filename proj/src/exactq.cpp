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

#include "bicat_euler/exactq.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <utility>

#include "bicat_euler/error.hpp"

namespace bicat_euler {

std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::string out = numerator(q).str();
  if (denominator(q) != 1) {
    out += "/";
    out += denominator(q).str();
  }
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  using boost::multiprecision::cpp_int;
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  const cpp_int n{std::string(num)};
  const cpp_int d{std::string(den)};
  if (d == 0) return std::nullopt;
  Rational q(n, d);
  return negative ? Rational(-q) : q;
}

QVector::QVector(std::vector<std::string> index, std::vector<Rational> entries)
    : index_(std::move(index)), entries_(std::move(entries)) {
  if (index_.size() != entries_.size()) {
    throw Error(ErrorCode::kIndexMismatch,
                "vector index has " + std::to_string(index_.size()) +
                    " labels but " + std::to_string(entries_.size()) +
                    " entries");
  }
}

const Rational& QVector::at(std::string_view label) const {
  for (std::size_t i = 0; i < index_.size(); ++i) {
    if (index_[i] == label) return entries_[i];
  }
  throw Error(ErrorCode::kIndexMismatch,
              "no vector entry labeled '" + std::string(label) + "'");
}

Rational QVector::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), Rational(0));
}

QMatrix::QMatrix(std::vector<std::string> rows, std::vector<std::string> cols,
                 std::vector<Rational> entries)
    : rows_(std::move(rows)), cols_(std::move(cols)),
      entries_(std::move(entries)) {
  if (entries_.size() != rows_.size() * cols_.size()) {
    throw Error(ErrorCode::kIndexMismatch,
                "matrix entry count does not match its index sets");
  }
  for (const auto* labels : {&rows_, &cols_}) {
    const std::set<std::string> unique(labels->begin(), labels->end());
    if (unique.size() != labels->size()) {
      throw Error(ErrorCode::kIndexMismatch, "duplicate matrix label");
    }
  }
}

QMatrix QMatrix::square(std::vector<std::string> labels,
                        std::vector<Rational> entries) {
  auto cols = labels;
  return QMatrix(std::move(labels), std::move(cols), std::move(entries));
}

QMatrix QMatrix::identity(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  std::vector<Rational> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = 1;
  return square(std::move(labels), std::move(entries));
}

QMatrix QMatrix::transpose() const {
  std::vector<Rational> t(entries_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      t[j * rows_.size() + i] = (*this)(i, j);
    }
  }
  return QMatrix(cols_, rows_, std::move(t));
}

Rational QMatrix::entry_sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), Rational(0));
}

bool QMatrix::is_square() const {
  if (rows_.size() != cols_.size()) return false;
  return std::set<std::string>(rows_.begin(), rows_.end()) ==
         std::set<std::string>(cols_.begin(), cols_.end());
}

QVector multiply(const QMatrix& m, const QVector& v) {
  if (m.col_count() != v.size()) {
    throw Error(ErrorCode::kIndexMismatch, "matrix-vector size mismatch");
  }
  std::vector<Rational> out(m.row_count());
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    for (std::size_t j = 0; j < m.col_count(); ++j) out[i] += m(i, j) * v[j];
  }
  return QVector(m.rows(), std::move(out));
}

QVector multiply(const QVector& v, const QMatrix& m) {
  if (m.row_count() != v.size()) {
    throw Error(ErrorCode::kIndexMismatch, "vector-matrix size mismatch");
  }
  std::vector<Rational> out(m.col_count());
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    for (std::size_t j = 0; j < m.col_count(); ++j) out[j] += v[i] * m(i, j);
  }
  return QVector(m.cols(), std::move(out));
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  if (a.col_count() != b.row_count()) {
    throw Error(ErrorCode::kIndexMismatch, "matrix product size mismatch");
  }
  std::vector<Rational> out(a.row_count() * b.col_count());
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    for (std::size_t k = 0; k < a.col_count(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.col_count(); ++j) {
        out[i * b.col_count() + j] += a(i, k) * b(k, j);
      }
    }
  }
  return QMatrix(a.rows(), b.cols(), std::move(out));
}

namespace {

// Reduced row echelon form of a dense row-major block with `width`
// columns, of which the first `pivot_cols` are eligible as pivots.
// Returns the pivot column of each pivot row, in order.
std::vector<std::size_t> reduce(std::vector<Rational>& a, std::size_t height,
                                std::size_t width, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < height; ++col) {
    std::size_t p = row;
    while (p < height && a[p * width + col] == 0) ++p;
    if (p == height) continue;
    if (p != row) {
      for (std::size_t j = 0; j < width; ++j) {
        std::swap(a[p * width + j], a[row * width + j]);
      }
    }
    const Rational inv = 1 / a[row * width + col];
    for (std::size_t j = col; j < width; ++j) a[row * width + j] *= inv;
    for (std::size_t r = 0; r < height; ++r) {
      if (r == row || a[r * width + col] == 0) continue;
      const Rational factor = a[r * width + col];
      for (std::size_t j = col; j < width; ++j) {
        a[r * width + j] -= factor * a[row * width + j];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void require_square(const QMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::kIndexMismatch,
                "row and column label sets differ");
  }
}

}  // namespace

std::optional<QVector> solve_weighting(const QMatrix& m) {
  const std::size_t h = m.row_count();
  const std::size_t n = m.col_count();
  const std::size_t width = n + 1;
  std::vector<Rational> a(h * width);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * width + j] = m(i, j);
    a[i * width + n] = 1;
  }
  const auto pivots = reduce(a, h, width, n);
  for (std::size_t r = pivots.size(); r < h; ++r) {
    if (a[r * width + n] != 0) return std::nullopt;
  }
  std::vector<Rational> k(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    k[pivots[r]] = a[r * width + n];
  }
  return QVector(m.cols(), std::move(k));
}

std::optional<QVector> solve_coweighting(const QMatrix& m) {
  return solve_weighting(m.transpose());
}

MatrixEuler matrix_euler(const QMatrix& m) {
  require_square(m);
  MatrixEuler out;
  out.weighting = solve_weighting(m);
  out.coweighting = solve_coweighting(m);
  if (out.weighting && out.coweighting) {
    const Rational w = out.weighting->sum();
    const Rational c = out.coweighting->sum();
    if (w != c) {
      throw Error(ErrorCode::kInternal,
                  "weighting sum " + to_string(w) +
                      " differs from coweighting sum " + to_string(c));
    }
    out.chi = w;
  }
  return out;
}

std::optional<QMatrix> invert(const QMatrix& m) {
  require_square(m);
  const std::size_t n = m.row_count();
  const std::size_t width = 2 * n;
  std::vector<Rational> a(n * width);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * width + j] = m(i, j);
    a[i * width + n + i] = 1;
  }
  if (reduce(a, n, width, n).size() != n) return std::nullopt;
  std::vector<Rational> inv(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i * n + j] = a[i * width + n + j];
  }
  return QMatrix(m.cols(), m.rows(), std::move(inv));
}

namespace {

std::vector<std::size_t> sorted_order(const std::vector<std::string>& labels) {
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return labels[a] < labels[b];
  });
  return order;
}

}  // namespace

nlohmann::json to_json(const QMatrix& m) {
  const auto ro = sorted_order(m.rows());
  const auto co = sorted_order(m.cols());
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json cols = nlohmann::json::array();
  nlohmann::json entries = nlohmann::json::array();
  for (auto j : co) cols.push_back(m.cols()[j]);
  for (auto i : ro) {
    rows.push_back(m.rows()[i]);
    nlohmann::json row = nlohmann::json::array();
    for (auto j : co) row.push_back(to_string(m(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

nlohmann::json to_json(const QVector& v) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[v.index()[i]] = to_string(v[i]);
  }
  return out;
}

QMatrix qmatrix_from_json(const nlohmann::json& j) {
  auto labels = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
      throw Error(ErrorCode::kIndexMismatch,
                  std::string("matrix JSON lacks array '") + key + "'");
    }
    return j.at(key).get<std::vector<std::string>>();
  };
  auto rows = labels("rows");
  auto cols = labels("cols");
  const auto& e = j.at("entries");
  if (!e.is_array() || e.size() != rows.size()) {
    throw Error(ErrorCode::kIndexMismatch, "matrix JSON row count mismatch");
  }
  std::vector<Rational> entries;
  entries.reserve(rows.size() * cols.size());
  for (const auto& row : e) {
    if (!row.is_array() || row.size() != cols.size()) {
      throw Error(ErrorCode::kIndexMismatch,
                  "matrix JSON column count mismatch");
    }
    for (const auto& cell : row) {
      auto q = cell.is_string() ? parse_rational(cell.get<std::string>())
                                : std::nullopt;
      if (!q) {
        throw Error(ErrorCode::kIndexMismatch,
                    "matrix entry is not a rational string: " + cell.dump());
      }
      entries.push_back(*q);
    }
  }
  return QMatrix(std::move(rows), std::move(cols), std::move(entries));
}

}  // namespace bicat_euler
