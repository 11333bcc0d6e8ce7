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

// bicat-euler: Euler characteristics, property checks, formula
// verification and instance generation on .catj files.
//
// Exit status: 0 pass, 1 check or verification failed, 2 input error,
// 3 internal assertion failure.

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bicat_euler/bifibration.hpp"
#include "bicat_euler/catdsl.hpp"
#include "bicat_euler/fibration.hpp"
#include "bicat_euler/fixtures.hpp"
#include "bicat_euler/generators.hpp"

namespace {

using bicat_euler::BicatPtr;
using bicat_euler::CategoryPtr;
using bicat_euler::CatGraph;
using bicat_euler::Functor;
using bicat_euler::LaxFunctorBicat;
using bicat_euler::LaxFunctorToCat;
using bicat_euler::Rational;
using bicat_euler::Trihomomorphism;
using bicat_euler::dsl::Document;
using bicat_euler::dsl::Kind;
using json = nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

// Raised for anything the user can fix: unreadable files, wrong kinds,
// unmet preconditions.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A generated instance failed the predicate it was built to satisfy.
struct SelfCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", q.convert_to<double>());
  return buf;
}

class Run {
 public:
  Run(std::string command, bool as_json) : as_json_(as_json) {
    report_["command"] = std::move(command);
    report_["inputs"] = json::array();
    report_["results"] = json::array();
  }

  // Reads and parses a file; diagnostics go to stderr (or the report).
  Document load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    report_["inputs"].push_back({{"file", path}, {"sha256", sha256_hex(text)}});
    auto parsed = bicat_euler::dsl::parse(text);
    for (const auto& d : parsed.diagnostics) {
      if (as_json_) {
        json j = d.to_json();
        j["file"] = path;
        report_["diagnostics"].push_back(j);
      } else {
        std::cerr << d.format(path) << "\n";
      }
    }
    if (!parsed.ok()) throw InputError(path + " was rejected");
    return std::move(*parsed.document);
  }

  // One result entry; `lines` are printed in text mode.
  void result(json entry, const std::vector<std::string>& lines) {
    report_["results"].push_back(std::move(entry));
    if (!as_json_) {
      for (const auto& l : lines) std::cout << l << "\n";
    }
  }

  int finish(int status, const std::string& message = "") {
    report_["exit_status"] = status;
    if (!message.empty()) {
      report_["error"] = message;
      if (!as_json_) std::cerr << "bicat-euler: " << message << "\n";
    }
    if (as_json_) std::cout << report_.dump(2) << "\n";
    return status;
  }

 private:
  json report_;
  bool as_json_;
};

std::string kind_text(const Document& doc) {
  return std::string(bicat_euler::dsl::kind_name(doc.kind()));
}

// --- chi ------------------------------------------------------------------

struct ChiOptions {
  std::string file;
  std::string kind;
  bool weighting = false;
  bool coweighting = false;
  bool decimal = false;
};

int cmd_chi(Run& run, const ChiOptions& o) {
  Document doc = run.load(o.file);
  std::string as = o.kind;
  if (as.empty()) as = kind_text(doc);
  bicat_euler::MatrixEuler e;
  std::vector<std::string> labels;
  if (as == "category") {
    if (doc.kind() != Kind::kCategory) {
      throw InputError("--kind category needs a category document, got " + kind_text(doc));
    }
    const auto& c = *std::get<CategoryPtr>(doc.value);
    e = bicat_euler::euler_char(c);
    labels = c.object_labels();
  } else if (as == "catgraph" || as == "bicategory") {
    CatGraph g;
    switch (doc.kind()) {
      case Kind::kCategory:
        g = bicat_euler::fixtures::locally_discrete(std::get<CategoryPtr>(doc.value)).graph();
        break;
      case Kind::kCatGraph:
        if (as == "bicategory") {
          throw InputError("--kind bicategory needs a bicategory document, got catgraph");
        }
        g = std::get<CatGraph>(doc.value);
        break;
      case Kind::kBicategory:
        g = std::get<BicatPtr>(doc.value)->graph();
        break;
      default:
        throw InputError("chi is defined for categories, cat-graphs and bicategories, got " +
                         kind_text(doc));
    }
    try {
      e = bicat_euler::euler_char_cg(g);
    } catch (const bicat_euler::Error& err) {
      if (err.code() != bicat_euler::ErrorCode::kHomWithoutEuler) throw;
      run.result({{"file", o.file}, {"chi", nullptr}, {"reason", err.what()}},
                 {std::string("no Euler characteristic: ") + err.what()});
      return kFail;
    }
    labels = g.object_labels();
  } else {
    throw InputError("chi is defined for categories, cat-graphs and bicategories, got " + as);
  }

  json entry = {{"file", o.file}, {"kind", as}};
  std::vector<std::string> lines;
  if (e.chi) {
    entry["chi"] = bicat_euler::to_string(*e.chi);
    lines.push_back(bicat_euler::to_string(*e.chi));
    if (o.decimal) {
      entry["chi_decimal_approx"] = decimal(*e.chi);
      lines.push_back("approx " + decimal(*e.chi) + " (decimal, approximate)");
    }
  } else {
    std::string missing;
    if (!e.weighting) missing = "no weighting";
    if (!e.coweighting) missing += std::string(missing.empty() ? "" : ", ") + "no coweighting";
    entry["chi"] = nullptr;
    entry["reason"] = missing;
    lines.push_back("no Euler characteristic (" + missing + ")");
  }
  auto vec = [&](const char* name, const std::optional<bicat_euler::QVector>& v) {
    if (!v) {
      entry[name] = nullptr;
      lines.push_back(std::string(name) + ": none");
      return;
    }
    entry[name] = bicat_euler::to_json(*v);
    std::string line = std::string(name) + ":";
    for (std::size_t i = 0; i < v->size(); ++i) {
      line += " " + labels[i] + "=" + bicat_euler::to_string((*v)[i]);
    }
    lines.push_back(line);
  };
  if (o.weighting) vec("weighting", e.weighting);
  if (o.coweighting) vec("coweighting", e.coweighting);
  run.result(entry, lines);
  return e.chi ? kPass : kFail;
}

// --- check ----------------------------------------------------------------

int cmd_check(Run& run, const std::string& file, const std::string& predicate) {
  Document doc = run.load(file);
  const Kind k = doc.kind();
  bool holds = false;
  std::vector<std::string> witnesses;
  auto wrong_kind = [&](const char* wanted) {
    return InputError("predicate '" + predicate + "' applies to " + wanted + ", got " +
                      kind_text(doc));
  };
  if (predicate == "acyclic") {
    if (k == Kind::kCategory) {
      holds = bicat_euler::is_acyclic(*std::get<CategoryPtr>(doc.value));
    } else if (k == Kind::kBicategory) {
      holds = bicat_euler::is_acyclic_bicat(*std::get<BicatPtr>(doc.value));
    } else if (k == Kind::kCatGraph) {
      holds = bicat_euler::is_acyclic_bicat(std::get<CatGraph>(doc.value));
    } else {
      throw wrong_kind("categories, cat-graphs and bicategories");
    }
    if (!holds) witnesses.push_back("not acyclic");
  } else if (predicate == "fibered" || predicate == "fib-groupoids") {
    if (k != Kind::kFunctor) throw wrong_kind("functors");
    const auto r = bicat_euler::classify_fibration(std::get<Functor>(doc.value));
    holds = predicate == "fibered" ? r.fibered : r.fibered_in_groupoids;
    if (!holds) witnesses = r.witnesses;
  } else if (predicate == "pseudogroupoid") {
    if (k != Kind::kBicategory) throw wrong_kind("bicategories");
    const auto r = bicat_euler::pseudogroupoid_check(*std::get<BicatPtr>(doc.value));
    holds = r.holds;
    witnesses = r.witnesses;
  } else if (predicate == "biequivalence") {
    if (k == Kind::kLaxFunctor) {
      const auto r = bicat_euler::check_biequivalence(std::get<LaxFunctorBicat>(doc.value));
      holds = r.holds;
      witnesses = r.witnesses;
    } else if (k == Kind::kFunctor) {
      holds = bicat_euler::check_equivalence_functor(std::get<Functor>(doc.value));
      if (!holds) witnesses.push_back("not fully faithful and essentially surjective");
    } else {
      throw wrong_kind("functors and lax functors");
    }
  } else if (predicate == "fib-pseudogroupoids") {
    if (k != Kind::kLaxFunctor) throw wrong_kind("lax functors");
    const auto r = bicat_euler::classify_bifibration(std::get<LaxFunctorBicat>(doc.value));
    holds = r.fibered_in_pseudogroupoids;
    if (!holds) witnesses = r.witnesses;
  } else {
    throw InputError("unknown predicate '" + predicate + "'");
  }
  std::vector<std::string> lines{std::string(holds ? "pass" : "fail") + ": " + predicate};
  for (const auto& w : witnesses) lines.push_back("  " + w);
  run.result({{"file", file}, {"predicate", predicate}, {"holds", holds},
              {"witnesses", witnesses}},
             lines);
  return holds ? kPass : kFail;
}

// --- verify ---------------------------------------------------------------

template <typename T>
const T& expect_kind(const Document& doc, Kind k, const std::string& theorem) {
  if (doc.kind() != k) {
    throw InputError("'" + theorem + "' needs a " +
                     std::string(bicat_euler::dsl::kind_name(k)) + " document, got " +
                     kind_text(doc));
  }
  return std::get<T>(doc.value);
}

int verify_one(Run& run, const std::string& theorem, const std::string& file) {
  Document doc = run.load(file);
  bool holds = false;
  json details;
  std::string line;
  try {
    if (theorem == "gr") {
      const auto r = bicat_euler::verify_gr_formula(
          expect_kind<LaxFunctorToCat>(doc, Kind::kLaxCat, theorem));
      holds = r.holds;
      details = r.to_json();
      line = r.equation();
    } else if (theorem == "product-cat") {
      const auto r = bicat_euler::verify_product_formula_cat(
          expect_kind<Functor>(doc, Kind::kFunctor, theorem));
      holds = r.holds;
      details = r.to_json();
      line = r.equation();
    } else if (theorem == "equivalence") {
      const auto r = bicat_euler::verify_equivalence_invariance(
          expect_kind<Functor>(doc, Kind::kFunctor, theorem));
      if (!r.is_equivalence) throw InputError(file + " is not an equivalence");
      if (!r.chi_source || !r.chi_target) {
        throw InputError(file + ": an endpoint has no Euler characteristic");
      }
      holds = r.holds;
      details = r.to_json();
      line = bicat_euler::to_string(*r.chi_source) + " = " +
             bicat_euler::to_string(*r.chi_target);
    } else if (theorem == "biequivalence") {
      const auto r = bicat_euler::verify_biequivalence_invariance(
          expect_kind<LaxFunctorBicat>(doc, Kind::kLaxFunctor, theorem));
      holds = r.holds;
      details = r.to_json();
      line = bicat_euler::to_string(r.chi_source) + " = " + bicat_euler::to_string(r.chi_target);
    } else if (theorem == "gr-bicat") {
      bicat_euler::GrBicatReport r;
      if (doc.kind() == Kind::kTrihom) {
        r = bicat_euler::verify_gr_formula_bicat(std::get<Trihomomorphism>(doc.value));
      } else {
        r = bicat_euler::verify_gr_formula_bicat(
            expect_kind<LaxFunctorBicat>(doc, Kind::kLaxFunctor, theorem));
      }
      holds = r.holds;
      details = r.to_json();
      line = r.equation();
    } else if (theorem == "product-bicat") {
      const auto r = bicat_euler::verify_product_formula_bicat(
          expect_kind<LaxFunctorBicat>(doc, Kind::kLaxFunctor, theorem));
      holds = r.holds;
      details = r.to_json();
      line = r.equation();
    } else {
      throw InputError("unknown theorem '" + theorem + "'");
    }
  } catch (const bicat_euler::Error& e) {
    if (e.code() == bicat_euler::ErrorCode::kInternal) throw;
    throw InputError(file + ": " + e.what());
  }
  std::vector<std::string> lines{line};
  if (!holds) {
    lines.push_back("MISMATCH; intermediate values:");
    lines.push_back(details.dump(2));
  }
  run.result({{"file", file}, {"theorem", theorem}, {"holds", holds},
              {"equation", line}, {"details", details}},
             lines);
  return holds ? kPass : kFail;
}

// --- gen ------------------------------------------------------------------

// inject_fault makes the first self-check fail, for testing exit status 3.
Document generate(const std::string& kind, std::uint64_t seed, std::size_t size,
                  bool inject_fault) {
  namespace gen = bicat_euler::gen;
  gen::Rng rng(seed);
  auto require = [&](bool ok, const std::string& what) {
    if (!ok || inject_fault) throw SelfCheckError("generated " + kind + " fails " + what);
  };
  if (size == 0) throw InputError("--size must be positive");
  if (kind == "acyclic-cat") {
    if (size > 10) throw InputError("acyclic-cat supports --size up to 10");
    auto c = gen::acyclic_category(rng, size);
    require(bicat_euler::is_acyclic(*c), "acyclic");
    return {c};
  }
  if (kind == "groupoid-valued-laxcat" || kind == "fib-groupoids-functor") {
    if (size > 4) throw InputError(kind + " supports --size up to 4");
    auto f = gen::groupoid_laxcat(rng, size);
    for (const auto& fiber : f.fibers()) {
      require(bicat_euler::is_groupoid(*fiber), "groupoid fibers");
    }
    if (kind == "groupoid-valued-laxcat") return {f};
    auto gr = bicat_euler::grothendieck_cat(f);
    require(gr.projection.has_value(), "Grothendieck projection");
    require(bicat_euler::classify_fibration(*gr.projection).fibered_in_groupoids,
            "fib-groupoids");
    return {*gr.projection};
  }
  if (kind == "pseudogroupoid") {
    if (size > 4) throw InputError("pseudogroupoid supports --size up to 4");
    auto b = bicat_euler::share(gen::connected_pseudogroupoid(rng, size));
    require(bicat_euler::pseudogroupoid_check(*b).holds, "pseudogroupoid");
    return {b};
  }
  if (kind == "trihom-psgrpd") {
    if (size > 3) throw InputError("trihom-psgrpd supports --size up to 3");
    const auto family = static_cast<gen::TrihomFamily>(rng.below(3));
    auto p = gen::pseudogroupoid_fibration(rng, family, size);
    const auto r = bicat_euler::classify_bifibration(p);
    require(r.fibered_in_pseudogroupoids && r.cofibered_in_pseudogroupoids,
            "fib-pseudogroupoids");
    auto t = bicat_euler::induced_trihomomorphism(p);
    for (bicat_euler::ObjectId b = 0; b < t.base().object_count(); ++b) {
      require(bicat_euler::pseudogroupoid_check(t.fiber(b)).holds, "pseudogroupoid fibers");
    }
    return {std::move(t)};
  }
  throw InputError("unknown generator '" + kind + "'");
}

int cmd_gen(Run& run, const std::string& kind, std::uint64_t seed, std::size_t size,
            const std::string& out, bool inject_fault, bool as_json) {
  Document doc = generate(kind, seed, size, inject_fault);
  const std::string text = bicat_euler::dsl::serialize(doc);
  json entry = {{"generator", kind}, {"seed", seed}, {"size", size},
                {"kind", kind_text(doc)}, {"sha256", sha256_hex(text)}};
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw InputError("cannot write " + out);
    f << text;
    entry["output"] = out;
    run.result(entry, {"wrote " + out});
  } else if (as_json) {
    entry["document"] = bicat_euler::dsl::to_json(doc);
    run.result(entry, {});
  } else {
    run.result(entry, {});
    std::cout << text;
  }
  return kPass;
}

int cmd_codes(Run& run) {
  for (const auto& [code, meaning] : bicat_euler::dsl::diagnostic_codes()) {
    run.result({{"code", code}, {"meaning", meaning}}, {code + "  " + meaning});
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euler characteristics of finite categories and bicategories"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable report on stdout");

  ChiOptions chi;
  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic of a .catj file");
  chi_cmd->add_option("file", chi.file)->required();
  chi_cmd->add_option("--kind", chi.kind, "Read the document as this kind")
      ->check(CLI::IsMember({"category", "catgraph", "bicategory"}));
  chi_cmd->add_flag("--weighting", chi.weighting, "Print the weighting");
  chi_cmd->add_flag("--coweighting", chi.coweighting, "Print the coweighting");
  chi_cmd->add_flag("--decimal", chi.decimal, "Add an approximate decimal value");

  std::string check_file, predicate;
  auto* check_cmd = app.add_subcommand("check", "Decide a structural predicate");
  check_cmd->add_option("file", check_file)->required();
  check_cmd->add_option("predicate", predicate,
                        "acyclic | fibered | fib-groupoids | pseudogroupoid | "
                        "biequivalence | fib-pseudogroupoids")
      ->required();

  std::string theorem;
  std::vector<std::string> verify_files;
  auto* verify_cmd = app.add_subcommand("verify", "Check a formula on instances");
  verify_cmd
      ->add_option("theorem", theorem,
                   "gr | product-cat | equivalence | biequivalence | gr-bicat | "
                   "product-bicat")
      ->required();
  verify_cmd->add_option("files", verify_files)->required();

  std::string gen_kind, gen_out;
  std::uint64_t seed = 0;
  std::size_t size = 2;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance");
  gen_cmd
      ->add_option("kind", gen_kind,
                   "acyclic-cat | groupoid-valued-laxcat | fib-groupoids-functor | "
                   "pseudogroupoid | trihom-psgrpd")
      ->required();
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--size", size);
  gen_cmd->add_option("-o,--output", gen_out, "Write the document here");
  bool inject_fault = false;
  gen_cmd->add_flag("--inject-fault", inject_fault)->group("");

  auto* codes_cmd = app.add_subcommand("codes", "List parser diagnostic codes");

  // Flags may appear after the subcommand.
  for (auto* sub : {chi_cmd, check_cmd, verify_cmd, gen_cmd, codes_cmd}) {
    sub->add_flag("--json", as_json, "Machine-readable report on stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  std::string command = "bicat-euler";
  for (int i = 1; i < argc; ++i) command += std::string(" ") + argv[i];
  Run run(command, as_json);
  try {
    if (*chi_cmd) return run.finish(cmd_chi(run, chi));
    if (*check_cmd) return run.finish(cmd_check(run, check_file, predicate));
    if (*verify_cmd) {
      int status = kPass;
      for (const auto& f : verify_files) {
        status = std::max(status, verify_one(run, theorem, f));
      }
      return run.finish(status);
    }
    if (*gen_cmd) return run.finish(cmd_gen(run, gen_kind, seed, size, gen_out, inject_fault, as_json));
    if (*codes_cmd) return run.finish(cmd_codes(run));
  } catch (const InputError& e) {
    return run.finish(kInputError, e.what());
  } catch (const SelfCheckError& e) {
    return run.finish(kInternalError, e.what());
  } catch (const bicat_euler::Error& e) {
    if (e.code() == bicat_euler::ErrorCode::kInternal) {
      return run.finish(kInternalError, e.what());
    }
    return run.finish(kInputError, e.what());
  } catch (const std::exception& e) {
    return run.finish(kInternalError, e.what());
  }
  return kInputError;
}
