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

// Python bindings. Rationals cross the boundary as "p/q" strings and
// reports as JSON text; the Python package converts both.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "bicat_euler/bifibration.hpp"
#include "bicat_euler/catdsl.hpp"
#include "bicat_euler/error.hpp"
#include "bicat_euler/fixtures.hpp"
#include "bicat_euler/generators.hpp"

namespace py = pybind11;
namespace be = bicat_euler;
namespace dsl = bicat_euler::dsl;

namespace {

// Parses or throws ValueError carrying every diagnostic.
dsl::Document load(const std::string& text) {
  auto r = dsl::parse(text);
  if (!r.ok()) {
    std::string msg;
    for (const auto& d : r.diagnostics) msg += d.format("<input>") + "\n";
    throw py::value_error(msg);
  }
  return std::move(*r.document);
}

template <typename T>
const T& as(const dsl::Document& d, const char* want) {
  if (const auto* v = std::get_if<T>(&d.value)) return *v;
  throw py::value_error(std::string("expected a ") + want + " document, got " +
                        std::string(dsl::kind_name(d.kind())));
}

// Cat-graph of a category (locally discrete), cat-graph or bicategory.
be::CatGraph graph_of(const dsl::Document& d) {
  if (const auto* c = std::get_if<be::CategoryPtr>(&d.value)) {
    return be::fixtures::locally_discrete(*c).graph();
  }
  if (const auto* g = std::get_if<be::CatGraph>(&d.value)) return *g;
  return as<be::BicatPtr>(d, "category, catgraph or bicategory")->graph();
}

std::optional<std::string> text(const std::optional<be::Rational>& q) {
  if (!q) return std::nullopt;
  return be::to_string(*q);
}

std::optional<std::vector<std::string>> entries(const std::optional<be::QVector>& v) {
  if (!v) return std::nullopt;
  std::vector<std::string> out;
  for (const auto& x : v->entries()) out.push_back(be::to_string(x));
  return out;
}

be::QMatrix matrix(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::string> labels;
  std::vector<be::Rational> flat;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (rows[i].size() != n) throw py::value_error("matrix must be square");
    for (const auto& s : rows[i]) {
      const auto q = be::parse_rational(s);
      if (!q) throw py::value_error("not a rational: '" + s + "'");
      flat.push_back(*q);
    }
  }
  return be::QMatrix(labels, labels, std::move(flat));
}

py::dict euler(const be::MatrixEuler& e) {
  py::dict out;
  out["chi"] = text(e.chi);
  out["weighting"] = entries(e.weighting);
  out["coweighting"] = entries(e.coweighting);
  return out;
}

std::string check(const std::string& src, const std::string& predicate) {
  const auto d = load(src);
  if (predicate == "acyclic") {
    if (const auto* c = std::get_if<be::CategoryPtr>(&d.value)) {
      return nlohmann::json{{"holds", be::is_acyclic(**c)}}.dump();
    }
    return nlohmann::json{{"holds", be::is_acyclic_bicat(graph_of(d))}}.dump();
  }
  if (predicate == "fibered") {
    return be::classify_fibration(as<be::Functor>(d, "functor")).to_json().dump();
  }
  if (predicate == "pseudogroupoid") {
    return be::pseudogroupoid_check(*as<be::BicatPtr>(d, "bicategory")).to_json().dump();
  }
  if (predicate == "biequivalence") {
    return be::check_biequivalence(as<be::LaxFunctorBicat>(d, "laxfunctor")).to_json().dump();
  }
  if (predicate == "bifibered") {
    return be::classify_bifibration(as<be::LaxFunctorBicat>(d, "laxfunctor")).to_json().dump();
  }
  throw py::value_error("unknown predicate '" + predicate + "'");
}

std::string verify(const std::string& theorem, const std::string& src) {
  const auto d = load(src);
  if (theorem == "gr") {
    return be::verify_gr_formula(as<be::LaxFunctorToCat>(d, "laxcat")).to_json().dump();
  }
  if (theorem == "product-cat") {
    return be::verify_product_formula_cat(as<be::Functor>(d, "functor")).to_json().dump();
  }
  if (theorem == "equivalence") {
    return be::verify_equivalence_invariance(as<be::Functor>(d, "functor")).to_json().dump();
  }
  if (theorem == "biequivalence") {
    return be::verify_biequivalence_invariance(as<be::LaxFunctorBicat>(d, "laxfunctor"))
        .to_json()
        .dump();
  }
  if (theorem == "gr-bicat") {
    if (const auto* t = std::get_if<be::Trihomomorphism>(&d.value)) {
      return be::verify_gr_formula_bicat(*t).to_json().dump();
    }
    return be::verify_gr_formula_bicat(as<be::LaxFunctorBicat>(d, "trihom or laxfunctor"))
        .to_json()
        .dump();
  }
  if (theorem == "product-bicat") {
    return be::verify_product_formula_bicat(as<be::LaxFunctorBicat>(d, "laxfunctor"))
        .to_json()
        .dump();
  }
  throw py::value_error("unknown theorem '" + theorem + "'");
}

std::string generate(const std::string& kind, std::uint64_t seed, std::size_t size) {
  be::gen::Rng rng(seed);
  if (kind == "acyclic-cat") return dsl::serialize({be::gen::acyclic_category(rng, size)});
  if (kind == "groupoid-valued-laxcat") {
    return dsl::serialize({be::gen::groupoid_laxcat(rng, size)});
  }
  if (kind == "pseudogroupoid") {
    return dsl::serialize({be::share(be::gen::connected_pseudogroupoid(rng, size))});
  }
  throw py::value_error("unknown generator '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Euler characteristics of finite categories and bicategories";

  py::register_exception<be::Error>(m, "Error", PyExc_RuntimeError);

  m.def("canonical", [](const std::string& src) { return dsl::serialize(load(src)); },
        py::arg("text"));
  m.def("kind", [](const std::string& src) {
    return std::string(dsl::kind_name(load(src).kind()));
  });
  m.def(
      "diagnostics",
      [](const std::string& src) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& d : dsl::parse(src).diagnostics) out.push_back(d.to_json());
        return out.dump();
      },
      py::arg("text"));
  m.def("diagnostic_codes", &dsl::diagnostic_codes);

  m.def(
      "category_euler",
      [](const std::string& src) {
        return euler(be::euler_char(*as<be::CategoryPtr>(load(src), "category")));
      },
      py::arg("text"));
  m.def(
      "catgraph_euler",
      [](const std::string& src) { return euler(be::euler_char_cg(graph_of(load(src)))); },
      py::arg("text"));
  m.def(
      "matrix_euler",
      [](const std::vector<std::vector<std::string>>& rows) {
        return euler(be::matrix_euler(matrix(rows)));
      },
      py::arg("rows"));

  m.def("check", &check, py::arg("text"), py::arg("predicate"));
  m.def("verify", &verify, py::arg("theorem"), py::arg("text"));
  m.def("generate", &generate, py::arg("kind"), py::arg("seed") = 0, py::arg("size") = 2);
}
