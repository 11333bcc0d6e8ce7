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

#include "bicat_euler/catdsl.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <iterator>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

namespace bicat_euler::dsl {

namespace {

using json = nlohmann::json;

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::string quote(const std::string& s) { return "'" + s + "'"; }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '|';
    out += p;
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON tree with source spans.

struct Node {
  json::value_t type = json::value_t::null;
  json scalar;
  // Objects: keys[i] -> children[i]. Arrays: children only.
  std::vector<std::string> keys;
  std::vector<Span> key_spans;
  std::vector<Node> children;
  Span span;

  bool is(json::value_t t) const { return type == t; }
  const std::string& str() const {
    return scalar.get_ref<const std::string&>();
  }
  const Node* find(std::string_view key) const {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] == key) return &children[i];
    }
    return nullptr;
  }
};

class LineIndex {
 public:
  explicit LineIndex(std::string_view text) {
    starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') starts_.push_back(i + 1);
    }
  }

  Span at(std::size_t offset) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
    const std::size_t line = static_cast<std::size_t>(it - starts_.begin());
    return {line, offset - starts_[line - 1] + 1};
  }

 private:
  std::vector<std::size_t> starts_;
};

// Input iterator that reports how many bytes the lexer has consumed.
class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator(const char* p, std::size_t* count) : p_(p), count_(count) {}

  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    ++p_;
    ++*count_;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  bool operator==(const CountingIterator& o) const { return p_ == o.p_; }
  bool operator!=(const CountingIterator& o) const { return p_ != o.p_; }

 private:
  const char* p_;
  std::size_t* count_;
};

// SAX consumer building a Node tree. Callbacks fire right after each token
// is scanned, so a token starts at the first byte after the previous token
// that is not whitespace or a separator.
class TreeBuilder {
 public:
  TreeBuilder(std::string_view text, const std::size_t* consumed)
      : text_(text), index_(text), consumed_(consumed) {}

  bool null() { return leaf(json(nullptr)); }
  bool boolean(bool v) { return leaf(json(v)); }
  bool number_integer(json::number_integer_t v) { return leaf(json(v)); }
  bool number_unsigned(json::number_unsigned_t v) { return leaf(json(v)); }
  bool number_float(json::number_float_t v, const std::string&) {
    return leaf(json(v));
  }
  bool string(std::string& v) { return leaf(json(std::move(v))); }
  bool binary(json::binary_t&) { return false; }
  bool start_object(std::size_t) { return open(json::value_t::object); }
  bool key(std::string& k) {
    const Span at = token_start();
    stack_.back().keys.push_back(std::move(k));
    stack_.back().key_spans.push_back(at);
    return true;
  }
  bool end_object() { return close(); }
  bool start_array(std::size_t) { return open(json::value_t::array); }
  bool end_array() { return close(); }
  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) {
    std::string what = ex.what();
    if (const auto p = what.find("] "); p != std::string::npos) {
      what = what.substr(p + 2);
    }
    error = Diagnostic{Severity::kError,
                       index_.at(position > 0 ? position - 1 : 0), "E000",
                       "malformed JSON: " + what};
    return false;
  }

  std::optional<Node> root;
  std::optional<Diagnostic> error;

 private:
  Span token_start() {
    std::size_t i = last_end_;
    while (i < text_.size() && std::strchr(" \t\r\n,:", text_[i]) != nullptr) {
      ++i;
    }
    last_end_ = *consumed_;
    return index_.at(i);
  }

  bool leaf(json v) {
    Node n;
    n.type = v.type();
    n.scalar = std::move(v);
    n.span = token_start();
    attach(std::move(n));
    return true;
  }

  bool open(json::value_t t) {
    Node n;
    n.type = t;
    n.span = token_start();
    stack_.push_back(std::move(n));
    return true;
  }

  bool close() {
    last_end_ = *consumed_;
    Node n = std::move(stack_.back());
    stack_.pop_back();
    attach(std::move(n));
    return true;
  }

  void attach(Node n) {
    if (stack_.empty()) {
      root = std::move(n);
    } else {
      stack_.back().children.push_back(std::move(n));
    }
  }

  std::string_view text_;
  LineIndex index_;
  const std::size_t* consumed_;
  std::size_t last_end_ = 0;
  std::vector<Node> stack_;
};

// ---------------------------------------------------------------------------
// Semantic reader.

enum class Context { kCategory, kFunctor, kBicategory, kLaxFunctor, kLaxCat,
                     kTrihom };

std::string code_for(ViolationKind kind, Context ctx) {
  if (ctx == Context::kTrihom) return "E015";
  switch (kind) {
    case ViolationKind::kDuplicateLabel:
      return "E003";
    case ViolationKind::kDanglingEndpoint:
    case ViolationKind::kCompositeEndpoint:
      return "E010";
    case ViolationKind::kMissingIdentity:
    case ViolationKind::kIdentityLaw:
      return "E008";
    case ViolationKind::kMissingComposite:
      return ctx == Context::kBicategory ? "E016" : "E007";
    case ViolationKind::kDuplicateComposite:
      return "E018";
    case ViolationKind::kAssociativity:
      return "E009";
    case ViolationKind::kFunctorLaw:
      return "E011";
    case ViolationKind::kNaturality:
    case ViolationKind::kCoherence:
      return "E017";
  }
  return "E017";
}

const char* type_name(json::value_t t) {
  switch (t) {
    case json::value_t::object:
      return "an object";
    case json::value_t::array:
      return "an array";
    case json::value_t::string:
      return "a string";
    case json::value_t::boolean:
      return "a boolean";
    case json::value_t::null:
      return "null";
    default:
      return "a number";
  }
}

// Object labels and their positions.
struct Labels {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  // False when some entry was rejected; the rest is kept for diagnostics.
  bool complete = true;

  std::optional<std::size_t> find(const std::string& s) const {
    auto it = index.find(s);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

std::string hom_name(const Bicategory& b, ObjectId x, ObjectId y) {
  return "hom(" + b.object_label(x) + ", " + b.object_label(y) + ")";
}

class Reader {
 public:
  explicit Reader(std::vector<Diagnostic>* out) : out_(out) {}

  std::optional<Document> document(const Node& root) {
    if (!expect(root, json::value_t::object, "document")) return std::nullopt;
    const Node* kind = field(root, "kind");
    if (kind == nullptr) return std::nullopt;
    if (!expect(*kind, json::value_t::string, "field 'kind'")) {
      return std::nullopt;
    }
    const auto k = kind_from_name(kind->str());
    if (!k) {
      error("E006", kind->span, "unknown kind " + quote(kind->str()));
      return std::nullopt;
    }
    std::optional<Value> v;
    switch (*k) {
      case Kind::kCategory:
        if (auto c = category(root, true)) v = c;
        break;
      case Kind::kFunctor:
        if (auto f = functor(root)) v = std::move(*f);
        break;
      case Kind::kCatGraph:
        if (auto g = catgraph(root)) v = std::move(*g);
        break;
      case Kind::kBicategory:
        if (auto b = bicategory(root, true)) v = b;
        break;
      case Kind::kLaxFunctor:
        if (auto l = laxfunctor(root)) v = std::move(*l);
        break;
      case Kind::kLaxCat:
        if (auto l = laxcat(root)) v = std::move(*l);
        break;
      case Kind::kTrihom:
        if (auto t = trihom(root)) v = std::move(*t);
        break;
    }
    if (!v || errors_ > 0) return std::nullopt;
    return Document{std::move(*v)};
  }

 private:
  void error(const char* code, Span at, std::string msg) {
    ++errors_;
    out_->push_back({Severity::kError, at, code, std::move(msg)});
  }

  void warning(const char* code, Span at, std::string msg) {
    out_->push_back({Severity::kWarning, at, code, std::move(msg)});
  }

  void report(const std::vector<Violation>& vs, Span at, Context ctx) {
    for (const auto& v : vs) {
      const std::string code = code_for(v.kind, ctx);
      error(code.c_str(), at, v.message);
    }
  }

  bool expect(const Node& n, json::value_t t, const std::string& what) {
    if (n.is(t)) return true;
    error("E005", n.span,
          what + " must be " + type_name(t) + ", found " + type_name(n.type));
    return false;
  }

  const Node* field(const Node& obj, std::string_view key) {
    const Node* n = obj.find(key);
    if (n == nullptr) {
      error("E004", obj.span, "missing field " + quote(std::string(key)));
    }
    return n;
  }

  // Warns about unknown fields and reports repeated keys.
  void known_fields(const Node& obj, std::initializer_list<std::string_view> ok) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < obj.keys.size(); ++i) {
      const std::string& k = obj.keys[i];
      if (!seen.insert(k).second) {
        error("E003", obj.key_spans[i], "key " + quote(k) + " appears twice");
      }
      if (std::find(ok.begin(), ok.end(), k) == ok.end()) {
        warning("E012", obj.key_spans[i], "unknown field " + quote(k) + " ignored");
      }
    }
  }

  void repeated_keys(const Node& obj) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < obj.keys.size(); ++i) {
      if (!seen.insert(obj.keys[i]).second) {
        error("E003", obj.key_spans[i],
              "key " + quote(obj.keys[i]) + " appears twice");
      }
    }
  }

  // Nested structures may repeat their kind; it must then match.
  bool nested_kind(const Node& n, Kind expected) {
    const Node* k = n.find("kind");
    if (k == nullptr) return true;
    if (!expect(*k, json::value_t::string, "field 'kind'")) return false;
    if (k->str() != kind_name(expected)) {
      error("E006", k->span,
            "expected kind " + quote(std::string(kind_name(expected))) +
                ", found " + quote(k->str()));
      return false;
    }
    return true;
  }

  // Array of distinct strings.
  std::optional<Labels> label_list(const Node& parent, std::string_view key) {
    const Node* n = field(parent, key);
    if (n == nullptr ||
        !expect(*n, json::value_t::array, "field " + quote(std::string(key)))) {
      return std::nullopt;
    }
    Labels out;
    bool ok = true;
    for (const Node& item : n->children) {
      if (!expect(item, json::value_t::string, "label")) {
        ok = false;
        continue;
      }
      if (!out.index.emplace(item.str(), out.names.size()).second) {
        error("E003", item.span, "label " + quote(item.str()) + " declared twice");
        ok = false;
        continue;
      }
      out.names.push_back(item.str());
    }
    out.complete = ok;
    return out;
  }

  // Splits key i of obj into `parts` object labels.
  std::optional<std::vector<ObjectId>> key_objects(const Node& obj, std::size_t i,
                                                   std::size_t parts,
                                                   const Labels& objects) {
    std::vector<std::string> pieces;
    std::string cur;
    for (char ch : obj.keys[i]) {
      if (ch == '|') {
        pieces.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    pieces.push_back(cur);
    if (pieces.size() != parts) {
      error("E005", obj.key_spans[i],
            "key " + quote(obj.keys[i]) + " must name " + std::to_string(parts) +
                " objects separated by '|'");
      return std::nullopt;
    }
    std::vector<ObjectId> ids;
    bool ok = true;
    for (const auto& p : pieces) {
      if (auto x = objects.find(p)) {
        ids.push_back(*x);
      } else {
        error("E001", obj.key_spans[i], "undeclared object " + quote(p));
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return ids;
  }

  // Array of `arity` strings.
  std::optional<std::vector<std::string>> tuple(const Node& n, std::size_t arity,
                                                const std::string& what) {
    if (!expect(n, json::value_t::array, what)) return std::nullopt;
    if (n.children.size() != arity) {
      error("E005", n.span,
            what + " must have " + std::to_string(arity) + " entries");
      return std::nullopt;
    }
    std::vector<std::string> out;
    for (const Node& c : n.children) {
      if (!expect(c, json::value_t::string, what + " entry")) return std::nullopt;
      out.push_back(c.str());
    }
    return out;
  }

  std::optional<ObjectId> cell1(const FinCategory& hom, const std::string& label,
                                Span at, const std::string& where) {
    if (auto f = hom.find_object(label)) return f;
    error("E002", at, quote(label) + " is not a 1-cell of " + where);
    return std::nullopt;
  }

  std::optional<MorphismId> cell2(const FinCategory& hom, const std::string& label,
                                  Span at, const std::string& where) {
    if (auto a = hom.find_morphism(label)) return a;
    error("E002", at, quote(label) + " is not a 2-cell of " + where);
    return std::nullopt;
  }

  // --- categories and functors ------------------------------------------

  CategoryPtr category(const Node& n, bool top) {
    if (!expect(n, json::value_t::object, "category")) return nullptr;
    known_fields(n, {"kind", "objects", "morphisms", "identities", "compositions"});
    if (!top && !nested_kind(n, Kind::kCategory)) return nullptr;
    const auto objects = label_list(n, "objects");
    CategorySpec s;
    bool ok = objects && objects->complete;
    if (objects) s.objects = objects->names;

    std::map<std::string, std::pair<std::string, std::string>> ends;
    if (const Node* ms = field(n, "morphisms");
        ms != nullptr && expect(*ms, json::value_t::array, "field 'morphisms'")) {
      for (const Node& m : ms->children) {
        if (!expect(m, json::value_t::object, "morphism")) {
          ok = false;
          continue;
        }
        known_fields(m, {"id", "src", "dst"});
        std::array<const Node*, 3> f{field(m, "id"), field(m, "src"), field(m, "dst")};
        if (std::any_of(f.begin(), f.end(), [](const Node* p) { return !p; })) {
          ok = false;
          continue;
        }
        bool good = true;
        for (const Node* p : f) {
          good = expect(*p, json::value_t::string, "morphism field") && good;
        }
        if (!good) {
          ok = false;
          continue;
        }
        for (const Node* p : {f[1], f[2]}) {
          if (objects && !objects->find(p->str())) {
            error("E001", p->span, "morphism " + quote(f[0]->str()) +
                                       " refers to undeclared object " +
                                       quote(p->str()));
            good = false;
          }
        }
        if (!ends.emplace(f[0]->str(), std::pair{f[1]->str(), f[2]->str()}).second) {
          error("E003", f[0]->span, "morphism " + quote(f[0]->str()) + " declared twice");
          good = false;
        }
        if (!good) {
          ok = false;
          continue;
        }
        s.morphisms.push_back({f[0]->str(), f[1]->str(), f[2]->str()});
      }
    } else {
      ok = false;
    }

    std::map<std::string, std::string> id_of;
    if (const Node* ids = field(n, "identities");
        ids != nullptr && expect(*ids, json::value_t::object, "field 'identities'")) {
      repeated_keys(*ids);
      for (std::size_t i = 0; i < ids->keys.size(); ++i) {
        const std::string& x = ids->keys[i];
        const Node& v = ids->children[i];
        if (objects && !objects->find(x)) {
          error("E001", ids->key_spans[i], "identity given for undeclared object " + quote(x));
          ok = false;
          continue;
        }
        if (!expect(v, json::value_t::string, "identity")) {
          ok = false;
          continue;
        }
        if (!ends.count(v.str())) {
          error("E002", v.span, "identity of " + quote(x) + " is undeclared morphism " +
                                    quote(v.str()));
          ok = false;
          continue;
        }
        id_of[x] = v.str();
        s.identities.emplace_back(x, v.str());
      }
    } else {
      ok = false;
    }

    const Node* comps = field(n, "compositions");
    std::set<std::pair<std::string, std::string>> have;
    if (comps != nullptr && expect(*comps, json::value_t::array, "field 'compositions'")) {
      for (const Node& c : comps->children) {
        auto t = tuple(c, 3, "composition");
        if (!t) {
          ok = false;
          continue;
        }
        bool good = true;
        for (const auto& label : *t) {
          if (!ends.count(label)) {
            error("E002", c.span, "composition refers to undeclared morphism " + quote(label));
            good = false;
          }
        }
        if (!good) {
          ok = false;
          continue;
        }
        if (!have.insert({(*t)[0], (*t)[1]}).second) {
          error("E018", c.span, "composite " + quote((*t)[0]) + " o " + quote((*t)[1]) +
                                    " given twice");
          ok = false;
          continue;
        }
        s.compositions.push_back({(*t)[0], (*t)[1], (*t)[2]});
      }
    } else {
      ok = false;
    }
    if (!ok) return nullptr;

    // Composites with an identity factor may be left implicit.
    for (const auto& m : s.morphisms) {
      auto before = id_of.find(m.src);
      auto after = id_of.find(m.dst);
      if (before != id_of.end() && ends[before->second].second == m.src &&
          have.insert({m.id, before->second}).second) {
        s.compositions.push_back({m.id, before->second, m.id});
      }
      if (after != id_of.end() && ends[after->second].first == m.dst &&
          have.insert({after->second, m.id}).second) {
        s.compositions.push_back({after->second, m.id, m.id});
      }
    }
    const auto violations = check_category_laws(s);
    if (!violations.empty()) {
      report(violations, comps->span, Context::kCategory);
      return nullptr;
    }
    return make_category(s);
  }

  // {"objects": {x: Fx}, "morphisms": {m: Fm}} between given categories.
  std::optional<Functor> functor_maps(const Node& n, const CategoryPtr& src,
                                      const CategoryPtr& dst, bool top) {
    if (!expect(n, json::value_t::object, "functor")) return std::nullopt;
    if (top) {
      known_fields(n, {"kind", "source", "target", "objects", "morphisms"});
    } else {
      known_fields(n, {"objects", "morphisms"});
    }
    std::vector<ObjectId> om(src->object_count(), kUnset);
    std::vector<MorphismId> mm(src->morphism_count(), kUnset);
    bool ok = true;
    auto read_map = [&](const char* key, bool objects) {
      const bool needed = objects ? src->object_count() > 0 : src->morphism_count() > 0;
      const Node* m = needed ? field(n, key) : n.find(key);
      if (m == nullptr) {
        ok = ok && !needed;
        return;
      }
      if (!expect(*m, json::value_t::object, "field " + quote(key))) {
        ok = false;
        return;
      }
      for (std::size_t i = 0; i < m->keys.size(); ++i) {
        const std::string& k = m->keys[i];
        const Node& v = m->children[i];
        const auto from = objects ? src->find_object(k) : src->find_morphism(k);
        if (!from) {
          error(objects ? "E001" : "E002", m->key_spans[i],
                quote(k) + " is not " + (objects ? "an object" : "a morphism") +
                    " of the source");
          ok = false;
          continue;
        }
        if (!expect(v, json::value_t::string, "image")) {
          ok = false;
          continue;
        }
        const auto to = objects ? dst->find_object(v.str()) : dst->find_morphism(v.str());
        if (!to) {
          error(objects ? "E001" : "E002", v.span,
                quote(v.str()) + " is not " + (objects ? "an object" : "a morphism") +
                    " of the target");
          ok = false;
          continue;
        }
        auto& slot = objects ? om[*from] : mm[*from];
        if (slot != kUnset) {
          error("E003", m->key_spans[i], "image of " + quote(k) + " given twice");
          ok = false;
          continue;
        }
        slot = *to;
      }
      const auto& table = objects ? om : mm;
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] != kUnset) continue;
        error("E004", m->span,
              "no image for " + std::string(objects ? "object " : "morphism ") +
                  quote(objects ? src->object_label(i) : src->morphism_label(i)));
        ok = false;
      }
    };
    read_map("objects", true);
    read_map("morphisms", false);
    if (!ok) return std::nullopt;
    const auto violations = check_functor_laws(*src, *dst, om, mm);
    if (!violations.empty()) {
      const Node* at = n.find("morphisms");
      report(violations, at ? at->span : n.span, Context::kFunctor);
      return std::nullopt;
    }
    return Functor::validate(src, dst, std::move(om), std::move(mm));
  }

  std::optional<Functor> functor(const Node& n) {
    const Node* s = field(n, "source");
    const Node* t = field(n, "target");
    CategoryPtr src = s ? category(*s, false) : nullptr;
    CategoryPtr dst = t ? category(*t, false) : nullptr;
    if (!src || !dst) {
      known_fields(n, {"kind", "source", "target", "objects", "morphisms"});
      return std::nullopt;
    }
    return functor_maps(n, src, dst, true);
  }

  // --- cat-graphs and bicategories --------------------------------------

  // Reads "homs" keyed "x|y"; absent pairs are empty.
  bool homs(const Node& n, const Labels& objects, std::vector<CategoryPtr>* out) {
    const std::size_t N = objects.names.size();
    out->assign(N * N, nullptr);
    const Node* h = field(n, "homs");
    if (h == nullptr || !expect(*h, json::value_t::object, "field 'homs'")) {
      return false;
    }
    repeated_keys(*h);
    bool ok = true;
    for (std::size_t i = 0; i < h->keys.size(); ++i) {
      auto xy = key_objects(*h, i, 2, objects);
      if (!xy) {
        ok = false;
        continue;
      }
      CategoryPtr c = category(h->children[i], false);
      if (!c) {
        ok = false;
        continue;
      }
      (*out)[(*xy)[0] * N + (*xy)[1]] = c;
    }
    return ok;
  }

  std::optional<CatGraph> catgraph(const Node& n) {
    known_fields(n, {"kind", "objects", "homs"});
    const auto objects = label_list(n, "objects");
    if (!objects || !objects->complete) return std::nullopt;
    std::vector<CategoryPtr> h;
    if (!homs(n, *objects, &h)) return std::nullopt;
    return CatGraph(objects->names, std::move(h));
  }

  // Walks {"k1|...|kp": [[s1, ..., sa], ...]}. fn resolves one entry.
  using EntryFn = std::function<void(const std::vector<ObjectId>&,
                                     const std::vector<std::string>&, Span)>;
  bool table(const Node& parent, std::string_view key, const Labels& objects,
             std::size_t parts, std::size_t arity, const EntryFn& fn) {
    const Node* t = parent.find(key);
    if (t == nullptr) return true;
    if (!expect(*t, json::value_t::object, "field " + quote(std::string(key)))) {
      return false;
    }
    repeated_keys(*t);
    const std::size_t before = errors_;
    for (std::size_t i = 0; i < t->keys.size(); ++i) {
      auto ids = key_objects(*t, i, parts, objects);
      if (!ids) continue;
      const Node& rows = t->children[i];
      if (!expect(rows, json::value_t::array, "table " + quote(t->keys[i]))) continue;
      for (const Node& row : rows.children) {
        if (auto entry = tuple(row, arity, "entry")) fn(*ids, *entry, row.span);
      }
    }
    return errors_ == before;
  }

  // Reports unfilled slots of a per-key table once per key.
  void incomplete(const std::vector<std::vector<std::size_t>>& rows,
                  const std::function<std::string(std::size_t)>& key_name,
                  const std::string& what, Span at) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto missing = std::count(rows[k].begin(), rows[k].end(), kUnset);
      if (missing == 0) continue;
      error("E016", at,
            what + " for " + quote(key_name(k)) + " is missing " +
                std::to_string(missing) + " of " + std::to_string(rows[k].size()) +
                " entries");
    }
  }

  BicatPtr bicategory(const Node& n, bool top) {
    if (!expect(n, json::value_t::object, "bicategory")) return nullptr;
    known_fields(n, {"kind", "objects", "homs", "identities", "compose1",
                     "hcompose2", "associator", "left_unitor", "right_unitor"});
    if (!top && !nested_kind(n, Kind::kBicategory)) return nullptr;
    const auto objects = label_list(n, "objects");
    if (!objects || !objects->complete) return nullptr;
    const std::size_t N = objects->names.size();
    std::vector<CategoryPtr> hom_ptrs;
    if (!homs(n, *objects, &hom_ptrs)) return nullptr;
    BicategoryData d;
    d.graph = CatGraph(objects->names, hom_ptrs);
    const CatGraph& g = d.graph;
    auto hname = [&](ObjectId x, ObjectId y) {
      return "hom(" + g.object_label(x) + ", " + g.object_label(y) + ")";
    };
    auto key3_name = [&](std::size_t k) {
      return join({g.object_label(k / (N * N)), g.object_label(k / N % N),
                   g.object_label(k % N)});
    };
    const std::size_t start = errors_;

    d.identity1.assign(N, kUnset);
    if (const Node* ids = field(n, "identities");
        ids != nullptr && expect(*ids, json::value_t::object, "field 'identities'")) {
      repeated_keys(*ids);
      for (std::size_t i = 0; i < ids->keys.size(); ++i) {
        auto x = objects->find(ids->keys[i]);
        if (!x) {
          error("E001", ids->key_spans[i], "undeclared object " + quote(ids->keys[i]));
          continue;
        }
        const Node& v = ids->children[i];
        if (!expect(v, json::value_t::string, "identity 1-cell")) continue;
        if (auto f = cell1(g.hom(*x, *x), v.str(), v.span, hname(*x, *x))) {
          d.identity1[*x] = *f;
        }
      }
      for (ObjectId x = 0; x < N; ++x) {
        if (d.identity1[x] == kUnset) {
          error("E016", ids->span, "no identity 1-cell for " + quote(g.object_label(x)));
        }
      }
    }

    // Tables keyed by triples (x, y, z) holding g * |A(x,y)| + f slots.
    auto triple_table = [&](const char* key, bool two_cells,
                            std::optional<std::vector<std::vector<std::size_t>>>* out) {
      if (n.find(key) == nullptr) return;
      out->emplace(N * N * N);
      auto& rows = **out;
      for (ObjectId x = 0; x < N; ++x) {
        for (ObjectId y = 0; y < N; ++y) {
          for (ObjectId z = 0; z < N; ++z) {
            const auto size = [&](ObjectId a, ObjectId b) {
              return two_cells ? g.hom(a, b).morphism_count() : g.hom(a, b).object_count();
            };
            rows[(x * N + y) * N + z].assign(size(y, z) * size(x, y), kUnset);
          }
        }
      }
      table(n, key, *objects, 3, 3,
            [&](const std::vector<ObjectId>& k, const std::vector<std::string>& e, Span at) {
              const ObjectId x = k[0], y = k[1], z = k[2];
              const FinCategory &yz = g.hom(y, z), &xy = g.hom(x, y), &xz = g.hom(x, z);
              auto look = [&](const FinCategory& h, const std::string& l, std::string where) {
                return two_cells ? cell2(h, l, at, where) : cell1(h, l, at, where);
              };
              auto a = look(yz, e[0], hname(y, z));
              auto b = look(xy, e[1], hname(x, y));
              auto c = look(xz, e[2], hname(x, z));
              if (!a || !b || !c) return;
              const std::size_t width = two_cells ? xy.morphism_count() : xy.object_count();
              auto& slot = rows[(x * N + y) * N + z][*a * width + *b];
              if (slot != kUnset) {
                error("E018", at, std::string(key) + " entry (" + quote(e[0]) + ", " +
                                      quote(e[1]) + ") given twice");
                return;
              }
              slot = *c;
            });
    };
    if (field(n, "compose1") != nullptr) {
      std::optional<std::vector<std::vector<std::size_t>>> c1;
      triple_table("compose1", false, &c1);
      if (c1) {
        incomplete(*c1, key3_name, "compose1", n.find("compose1")->span);
        d.compose1 = std::move(*c1);
      }
    }
    triple_table("hcompose2", true, &d.hcompose2);
    if (d.hcompose2) incomplete(*d.hcompose2, key3_name, "hcompose2", n.find("hcompose2")->span);

    if (n.find("associator") != nullptr) {
      d.associator.emplace(N * N * N * N);
      auto& rows = *d.associator;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const ObjectId x = k / (N * N * N), y = k / (N * N) % N, z = k / N % N, w = k % N;
        rows[k].assign(g.hom(z, w).object_count() * g.hom(y, z).object_count() *
                           g.hom(x, y).object_count(),
                       kUnset);
      }
      table(n, "associator", *objects, 4, 4,
            [&](const std::vector<ObjectId>& k, const std::vector<std::string>& e, Span at) {
              const ObjectId x = k[0], y = k[1], z = k[2], w = k[3];
              auto h = cell1(g.hom(z, w), e[0], at, hname(z, w));
              auto gg = cell1(g.hom(y, z), e[1], at, hname(y, z));
              auto f = cell1(g.hom(x, y), e[2], at, hname(x, y));
              auto a = cell2(g.hom(x, w), e[3], at, hname(x, w));
              if (!h || !gg || !f || !a) return;
              auto& slot = rows[((x * N + y) * N + z) * N + w]
                               [(*h * g.hom(y, z).object_count() + *gg) *
                                    g.hom(x, y).object_count() + *f];
              if (slot != kUnset) {
                error("E018", at, "associator entry given twice");
                return;
              }
              slot = *a;
            });
      incomplete(rows,
                 [&](std::size_t k) {
                   return join({g.object_label(k / (N * N * N)),
                                g.object_label(k / (N * N) % N),
                                g.object_label(k / N % N), g.object_label(k % N)});
                 },
                 "associator", n.find("associator")->span);
    }

    auto unitor = [&](const char* key, std::optional<std::vector<std::vector<std::size_t>>>* out) {
      const Node* t = n.find(key);
      if (t == nullptr) return;
      if (!expect(*t, json::value_t::object, "field " + quote(key))) return;
      repeated_keys(*t);
      out->emplace(N * N);
      for (ObjectId x = 0; x < N; ++x) {
        for (ObjectId y = 0; y < N; ++y) {
          (**out)[x * N + y].assign(g.hom(x, y).object_count(), kUnset);
        }
      }
      for (std::size_t i = 0; i < t->keys.size(); ++i) {
        auto xy = key_objects(*t, i, 2, *objects);
        if (!xy) continue;
        const ObjectId x = (*xy)[0], y = (*xy)[1];
        const Node& m = t->children[i];
        if (!expect(m, json::value_t::object, "unitor components")) continue;
        for (std::size_t j = 0; j < m.keys.size(); ++j) {
          auto f = cell1(g.hom(x, y), m.keys[j], m.key_spans[j], hname(x, y));
          if (!expect(m.children[j], json::value_t::string, "unitor component")) continue;
          auto a = cell2(g.hom(x, y), m.children[j].str(), m.children[j].span, hname(x, y));
          if (f && a) (**out)[x * N + y][*f] = *a;
        }
      }
      incomplete(**out,
                 [&](std::size_t k) {
                   return join({g.object_label(k / N), g.object_label(k % N)});
                 },
                 key, t->span);
    };
    unitor("left_unitor", &d.left_unitor);
    unitor("right_unitor", &d.right_unitor);
    if (d.left_unitor.has_value() != d.right_unitor.has_value()) {
      error("E016", n.span, "left_unitor and right_unitor must be given together");
    }
    if (errors_ != start) return nullptr;
    try {
      return share(Bicategory::validate(std::move(d)));
    } catch (const ValidationError& e) {
      report(e.violations(), n.span, Context::kBicategory);
    }
    return nullptr;
  }

  // --- lax functors -----------------------------------------------------

  std::optional<LaxFunctorBicat> lax_body(const Node& n, const BicatPtr& s,
                                          const BicatPtr& t, bool top) {
    if (!expect(n, json::value_t::object, "lax functor")) return std::nullopt;
    if (top) {
      known_fields(n, {"kind", "source", "target", "objects", "homs", "phi", "psi"});
    } else {
      known_fields(n, {"objects", "homs", "phi", "psi"});
    }
    const std::size_t N = s->object_count();
    Labels src_objects{s->graph().object_labels(), {}};
    for (std::size_t i = 0; i < N; ++i) src_objects.index[src_objects.names[i]] = i;
    const std::size_t start = errors_;

    std::vector<ObjectId> om(N, kUnset);
    if (const Node* o = field(n, "objects");
        o != nullptr && expect(*o, json::value_t::object, "field 'objects'")) {
      repeated_keys(*o);
      for (std::size_t i = 0; i < o->keys.size(); ++i) {
        auto x = src_objects.find(o->keys[i]);
        if (!x) {
          error("E001", o->key_spans[i], quote(o->keys[i]) + " is not an object of the source");
          continue;
        }
        const Node& v = o->children[i];
        if (!expect(v, json::value_t::string, "image")) continue;
        auto y = t->graph().find_object(v.str());
        if (!y) {
          error("E001", v.span, quote(v.str()) + " is not an object of the target");
          continue;
        }
        om[*x] = *y;
      }
      for (ObjectId x = 0; x < N; ++x) {
        if (om[x] == kUnset) {
          error("E004", o->span, "no image for object " + quote(s->object_label(x)));
        }
      }
    }
    if (errors_ != start) return std::nullopt;

    std::vector<std::optional<Functor>> hf(N * N);
    if (const Node* h = field(n, "homs");
        h != nullptr && expect(*h, json::value_t::object, "field 'homs'")) {
      repeated_keys(*h);
      for (std::size_t i = 0; i < h->keys.size(); ++i) {
        auto xy = key_objects(*h, i, 2, src_objects);
        if (!xy) continue;
        const ObjectId x = (*xy)[0], y = (*xy)[1];
        hf[x * N + y] = functor_maps(h->children[i], s->hom_ptr(x, y),
                                     t->hom_ptr(om[x], om[y]), false);
      }
      for (ObjectId x = 0; x < N; ++x) {
        for (ObjectId y = 0; y < N; ++y) {
          if (hf[x * N + y] || h->find(join({s->object_label(x), s->object_label(y)}))) {
            continue;
          }
          if (s->hom(x, y).object_count() == 0) {
            hf[x * N + y] = Functor::validate(s->hom_ptr(x, y), t->hom_ptr(om[x], om[y]),
                                              {}, {});
          } else {
            error("E004", h->span,
                  "no functor given on " + hom_name(*s, x, y));
          }
        }
      }
    }
    if (errors_ != start) return std::nullopt;

    std::optional<LaxBicatCoherence> coh;
    const Node* phi = n.find("phi");
    const Node* psi = n.find("psi");
    if ((phi == nullptr) != (psi == nullptr)) {
      error("E004", n.span, "phi and psi must be given together");
    } else if (phi != nullptr) {
      coh.emplace();
      coh->phi.resize(N * N * N);
      for (ObjectId x = 0; x < N; ++x) {
        for (ObjectId y = 0; y < N; ++y) {
          for (ObjectId z = 0; z < N; ++z) {
            coh->phi[(x * N + y) * N + z].assign(
                s->hom(y, z).object_count() * s->hom(x, y).object_count(), kUnset);
          }
        }
      }
      table(n, "phi", src_objects, 3, 3,
            [&](const std::vector<ObjectId>& k, const std::vector<std::string>& e, Span at) {
              const ObjectId x = k[0], y = k[1], z = k[2];
              auto gg = cell1(s->hom(y, z), e[0], at, hom_name(*s, y, z));
              auto f = cell1(s->hom(x, y), e[1], at, hom_name(*s, x, y));
              auto c = cell2(t->hom(om[x], om[z]), e[2], at, hom_name(*t, om[x], om[z]));
              if (gg && f && c) {
                coh->phi[(x * N + y) * N + z][*gg * s->hom(x, y).object_count() + *f] = *c;
              }
            });
      coh->psi.assign(N, kUnset);
      if (expect(*psi, json::value_t::object, "field 'psi'")) {
        for (std::size_t i = 0; i < psi->keys.size(); ++i) {
          auto x = src_objects.find(psi->keys[i]);
          if (!x) {
            error("E001", psi->key_spans[i], "undeclared object " + quote(psi->keys[i]));
            continue;
          }
          const Node& v = psi->children[i];
          if (!expect(v, json::value_t::string, "psi component")) continue;
          if (auto c = cell2(t->hom(om[*x], om[*x]), v.str(), v.span,
                             hom_name(*t, om[*x], om[*x]))) {
            coh->psi[*x] = *c;
          }
        }
      }
      for (std::size_t k = 0; k < coh->phi.size(); ++k) {
        if (std::count(coh->phi[k].begin(), coh->phi[k].end(), kUnset) > 0) {
          error("E017", phi->span,
                "phi is missing components for " +
                    quote(join({s->object_label(k / (N * N)), s->object_label(k / N % N),
                                s->object_label(k % N)})));
        }
      }
      for (ObjectId x = 0; x < N; ++x) {
        if (coh->psi[x] == kUnset) {
          error("E017", psi->span, "psi has no component at " + quote(s->object_label(x)));
        }
      }
    }
    if (errors_ != start) return std::nullopt;
    std::vector<Functor> functors;
    for (auto& f : hf) functors.push_back(std::move(*f));
    try {
      return LaxFunctorBicat::validate(s, t, std::move(om), std::move(functors),
                                       std::move(coh));
    } catch (const ValidationError& e) {
      report(e.violations(), n.span, Context::kLaxFunctor);
    }
    return std::nullopt;
  }

  std::optional<LaxFunctorBicat> laxfunctor(const Node& n) {
    const Node* s = field(n, "source");
    const Node* t = field(n, "target");
    BicatPtr src = s ? bicategory(*s, false) : nullptr;
    BicatPtr dst = t ? bicategory(*t, false) : nullptr;
    if (!src || !dst) {
      known_fields(n, {"kind", "source", "target", "objects", "homs", "phi", "psi"});
      return std::nullopt;
    }
    return lax_body(n, src, dst, true);
  }

  std::optional<LaxFunctorToCat> laxcat(const Node& n) {
    known_fields(n, {"kind", "base", "fibers", "pullbacks", "compositors", "unitors"});
    const Node* bn = field(n, "base");
    CategoryPtr base = bn ? category(*bn, false) : nullptr;
    if (!base) return std::nullopt;
    const FinCategory& b = *base;
    const std::size_t start = errors_;

    std::vector<CategoryPtr> fibers(b.object_count());
    if (const Node* f = field(n, "fibers");
        f != nullptr && expect(*f, json::value_t::object, "field 'fibers'")) {
      repeated_keys(*f);
      for (std::size_t i = 0; i < f->keys.size(); ++i) {
        auto x = b.find_object(f->keys[i]);
        if (!x) {
          error("E001", f->key_spans[i], "undeclared base object " + quote(f->keys[i]));
          continue;
        }
        fibers[*x] = category(f->children[i], false);
      }
      for (ObjectId x = 0; x < b.object_count(); ++x) {
        if (!fibers[x] && !f->find(b.object_label(x))) {
          error("E004", f->span, "no fiber over " + quote(b.object_label(x)));
        }
      }
    }
    if (errors_ != start) return std::nullopt;

    std::vector<std::optional<Functor>> pulls(b.morphism_count());
    if (const Node* p = field(n, "pullbacks");
        p != nullptr && expect(*p, json::value_t::object, "field 'pullbacks'")) {
      repeated_keys(*p);
      for (std::size_t i = 0; i < p->keys.size(); ++i) {
        auto m = b.find_morphism(p->keys[i]);
        if (!m) {
          error("E002", p->key_spans[i], "undeclared base morphism " + quote(p->keys[i]));
          continue;
        }
        pulls[*m] = functor_maps(p->children[i], fibers[b.dst(*m)], fibers[b.src(*m)], false);
      }
      for (MorphismId m = 0; m < b.morphism_count(); ++m) {
        if (pulls[m] || p->find(b.morphism_label(m))) continue;
        if (b.is_identity(m)) {
          pulls[m] = Functor::identity(fibers[b.src(m)]);
        } else {
          error("E004", p->span, "no pullback along " + quote(b.morphism_label(m)));
        }
      }
    }
    if (errors_ != start) return std::nullopt;

    std::optional<LaxCatCoherence> coh;
    const Node* comp = n.find("compositors");
    const Node* unit = n.find("unitors");
    if ((comp == nullptr) != (unit == nullptr)) {
      error("E004", n.span, "compositors and unitors must be given together");
    } else if (comp != nullptr && expect(*comp, json::value_t::object, "field 'compositors'") &&
               expect(*unit, json::value_t::object, "field 'unitors'")) {
      coh.emplace();
      repeated_keys(*comp);
      Labels morphisms;
      for (MorphismId m = 0; m < b.morphism_count(); ++m) {
        morphisms.index[b.morphism_label(m)] = m;
        morphisms.names.push_back(b.morphism_label(m));
      }
      for (std::size_t i = 0; i < comp->keys.size(); ++i) {
        // Keys name morphisms, not objects.
        auto gf = key_objects(*comp, i, 2, morphisms);
        if (!gf) continue;
        const MorphismId gm = (*gf)[0], fm = (*gf)[1];
        if (b.src(gm) != b.dst(fm)) {
          error("E010", comp->key_spans[i], "compositor key " + quote(comp->keys[i]) +
                                                " names a non-composable pair");
          continue;
        }
        const FinCategory& fd = *fibers[b.dst(gm)];
        const FinCategory& fb = *fibers[b.src(fm)];
        std::vector<MorphismId> comps(fd.object_count(), kUnset);
        const Node& v = comp->children[i];
        if (!expect(v, json::value_t::object, "compositor components")) continue;
        for (std::size_t j = 0; j < v.keys.size(); ++j) {
          auto z = fd.find_object(v.keys[j]);
          if (!z) {
            error("E001", v.key_spans[j], quote(v.keys[j]) + " is not an object of the fiber");
            continue;
          }
          if (!expect(v.children[j], json::value_t::string, "component")) continue;
          auto c = fb.find_morphism(v.children[j].str());
          if (!c) {
            error("E002", v.children[j].span,
                  quote(v.children[j].str()) + " is not a morphism of the fiber");
            continue;
          }
          comps[*z] = *c;
        }
        if (std::count(comps.begin(), comps.end(), kUnset) > 0) {
          error("E017", v.span, "compositor " + quote(comp->keys[i]) + " lacks components");
          continue;
        }
        coh->compositors[{gm, fm}] = std::move(comps);
      }
      coh->unitors.resize(b.object_count());
      repeated_keys(*unit);
      for (std::size_t i = 0; i < unit->keys.size(); ++i) {
        auto x = b.find_object(unit->keys[i]);
        if (!x) {
          error("E001", unit->key_spans[i], "undeclared base object " + quote(unit->keys[i]));
          continue;
        }
        const FinCategory& fx = *fibers[*x];
        const Node& v = unit->children[i];
        if (!expect(v, json::value_t::object, "unitor components")) continue;
        std::vector<MorphismId> comps(fx.object_count(), kUnset);
        for (std::size_t j = 0; j < v.keys.size(); ++j) {
          auto z = fx.find_object(v.keys[j]);
          if (!z) {
            error("E001", v.key_spans[j], quote(v.keys[j]) + " is not an object of the fiber");
            continue;
          }
          if (!expect(v.children[j], json::value_t::string, "component")) continue;
          auto c = fx.find_morphism(v.children[j].str());
          if (!c) {
            error("E002", v.children[j].span,
                  quote(v.children[j].str()) + " is not a morphism of the fiber");
            continue;
          }
          comps[*z] = *c;
        }
        if (std::count(comps.begin(), comps.end(), kUnset) == 0) {
          coh->unitors[*x] = std::move(comps);
        }
      }
    }
    if (errors_ != start) return std::nullopt;
    std::vector<Functor> functors;
    for (auto& f : pulls) functors.push_back(std::move(*f));
    try {
      return LaxFunctorToCat::validate(base, std::move(fibers), std::move(functors),
                                       std::move(coh));
    } catch (const ValidationError& e) {
      report(e.violations(), n.span, Context::kLaxCat);
    } catch (const Error& e) {
      error("E010", n.span, e.what());
    }
    return std::nullopt;
  }

  // --- trihomomorphisms -------------------------------------------------

  std::optional<Trihomomorphism> trihom(const Node& n) {
    known_fields(n, {"kind", "base", "fibers", "pullback1", "pullback2"});
    const Node* bn = field(n, "base");
    BicatPtr base = bn ? bicategory(*bn, false) : nullptr;
    if (!base) return std::nullopt;
    const Bicategory& b = *base;
    const std::size_t N = b.object_count();
    Labels objects{b.graph().object_labels(), {}};
    for (std::size_t i = 0; i < N; ++i) objects.index[objects.names[i]] = i;
    const std::size_t start = errors_;

    TrihomData d;
    d.base = base;
    d.fibers.assign(N, nullptr);
    if (const Node* f = field(n, "fibers");
        f != nullptr && expect(*f, json::value_t::object, "field 'fibers'")) {
      repeated_keys(*f);
      for (std::size_t i = 0; i < f->keys.size(); ++i) {
        auto x = objects.find(f->keys[i]);
        if (!x) {
          error("E001", f->key_spans[i], "undeclared base object " + quote(f->keys[i]));
          continue;
        }
        d.fibers[*x] = bicategory(f->children[i], false);
      }
      for (ObjectId x = 0; x < N; ++x) {
        if (!d.fibers[x] && !f->find(b.object_label(x))) {
          error("E004", f->span, "no fiber over " + quote(b.object_label(x)));
        }
      }
    }
    if (errors_ != start) return std::nullopt;

    std::vector<std::vector<std::optional<LaxFunctorBicat>>> pb1(N * N);
    for (ObjectId x = 0; x < N; ++x) {
      for (ObjectId y = 0; y < N; ++y) pb1[x * N + y].resize(b.hom(x, y).object_count());
    }
    const Node* p1 = field(n, "pullback1");
    if (p1 != nullptr && expect(*p1, json::value_t::object, "field 'pullback1'")) {
      repeated_keys(*p1);
      for (std::size_t i = 0; i < p1->keys.size(); ++i) {
        auto bc = key_objects(*p1, i, 2, objects);
        if (!bc) continue;
        const ObjectId x = (*bc)[0], y = (*bc)[1];
        const Node& v = p1->children[i];
        if (!expect(v, json::value_t::object, "pullbacks along " + hom_name(b, x, y))) continue;
        repeated_keys(v);
        for (std::size_t j = 0; j < v.keys.size(); ++j) {
          auto f = cell1(b.hom(x, y), v.keys[j], v.key_spans[j], hom_name(b, x, y));
          if (!f) continue;
          pb1[x * N + y][*f] = lax_body(v.children[j], d.fibers[y], d.fibers[x], false);
        }
      }
      for (ObjectId x = 0; x < N; ++x) {
        for (ObjectId y = 0; y < N; ++y) {
          const Node* v = p1->find(join({b.object_label(x), b.object_label(y)}));
          for (ObjectId f = 0; f < b.hom(x, y).object_count(); ++f) {
            if (pb1[x * N + y][f]) continue;
            if (v != nullptr && v->find(b.hom(x, y).object_label(f))) continue;
            error("E004", p1->span, "no pullback along 1-cell " +
                                        quote(b.hom(x, y).object_label(f)) + " of " +
                                        hom_name(b, x, y));
          }
        }
      }
    }
    if (errors_ != start) return std::nullopt;
    d.pullback1.resize(N * N);
    for (std::size_t k = 0; k < N * N; ++k) {
      for (auto& l : pb1[k]) d.pullback1[k].push_back(std::move(*l));
    }

    d.pullback2.resize(N * N);
    const Node* p2 = field(n, "pullback2");
    if (p2 != nullptr && expect(*p2, json::value_t::object, "field 'pullback2'")) {
      repeated_keys(*p2);
      for (ObjectId x = 0; x < N; ++x) {
        for (ObjectId y = 0; y < N; ++y) {
          const FinCategory& h = b.hom(x, y);
          d.pullback2[x * N + y].assign(
              h.morphism_count(), std::vector<ObjectId>(d.fibers[y]->object_count(), kUnset));
        }
      }
      for (std::size_t i = 0; i < p2->keys.size(); ++i) {
        auto bc = key_objects(*p2, i, 2, objects);
        if (!bc) continue;
        const ObjectId x = (*bc)[0], y = (*bc)[1];
        const FinCategory& h = b.hom(x, y);
        const Bicategory& fx = *d.fibers[x];
        const Bicategory& fy = *d.fibers[y];
        const Node& v = p2->children[i];
        if (!expect(v, json::value_t::object, "components along " + hom_name(b, x, y))) {
          continue;
        }
        repeated_keys(v);
        for (std::size_t j = 0; j < v.keys.size(); ++j) {
          auto al = cell2(h, v.keys[j], v.key_spans[j], hom_name(b, x, y));
          if (!al) continue;
          const Node& comps = v.children[j];
          if (!expect(comps, json::value_t::object, "components of " + quote(v.keys[j]))) {
            continue;
          }
          repeated_keys(comps);
          const LaxFunctorBicat& fstar = d.pullback1[x * N + y][h.src(*al)];
          const LaxFunctorBicat& gstar = d.pullback1[x * N + y][h.dst(*al)];
          for (std::size_t k = 0; k < comps.keys.size(); ++k) {
            auto z = fy.graph().find_object(comps.keys[k]);
            if (!z) {
              error("E001", comps.key_spans[k],
                    quote(comps.keys[k]) + " is not an object of the fiber over " +
                        quote(b.object_label(y)));
              continue;
            }
            const Node& w = comps.children[k];
            if (!expect(w, json::value_t::string, "component")) continue;
            const ObjectId gz = gstar.object(*z), fz = fstar.object(*z);
            auto cell = fx.hom(gz, fz).find_object(w.str());
            if (!cell) {
              error("E015", w.span,
                    "component of " + quote(v.keys[j]) + " at " + quote(comps.keys[k]) +
                        " must be a 1-cell " + quote(fx.object_label(gz)) + " -> " +
                        quote(fx.object_label(fz)) + ", found " + quote(w.str()));
              continue;
            }
            d.pullback2[x * N + y][*al][*z] = *cell;
          }
        }
      }
      for (ObjectId x = 0; x < N; ++x) {
        for (ObjectId y = 0; y < N; ++y) {
          const auto& rows = d.pullback2[x * N + y];
          for (MorphismId al = 0; al < rows.size(); ++al) {
            for (ObjectId z = 0; z < rows[al].size(); ++z) {
              if (rows[al][z] != kUnset) continue;
              // Ill-typed entries were reported already.
              const Node* v = p2->find(join({b.object_label(x), b.object_label(y)}));
              const Node* comps = v ? v->find(b.hom(x, y).morphism_label(al)) : nullptr;
              if (comps && comps->find(d.fibers[y]->object_label(z))) continue;
              error("E014", comps ? comps->span : (v ? v->span : p2->span),
                    "missing component of 2-cell " + quote(b.hom(x, y).morphism_label(al)) +
                        " at " + quote(d.fibers[y]->object_label(z)));
            }
          }
        }
      }
    }
    if (errors_ != start) return std::nullopt;
    try {
      return Trihomomorphism::validate(std::move(d));
    } catch (const ValidationError& e) {
      report(e.violations(), n.span, Context::kTrihom);
    }
    return std::nullopt;
  }

  std::vector<Diagnostic>* out_;
  std::size_t errors_ = 0;
};

// ---------------------------------------------------------------------------
// Serializer.

json category_json(const FinCategory& c, bool top) {
  json j;
  if (top) j["kind"] = "category";
  j["objects"] = c.object_labels();
  j["morphisms"] = json::array();
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    j["morphisms"].push_back({{"id", c.morphism_label(m)},
                              {"src", c.object_label(c.src(m))},
                              {"dst", c.object_label(c.dst(m))}});
  }
  j["identities"] = json::object();
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    j["identities"][c.object_label(x)] = c.morphism_label(c.identity(x));
  }
  j["compositions"] = json::array();
  for (MorphismId g = 0; g < c.morphism_count(); ++g) {
    if (c.is_identity(g)) continue;
    for (MorphismId f = 0; f < c.morphism_count(); ++f) {
      if (c.is_identity(f) || c.src(g) != c.dst(f)) continue;
      j["compositions"].push_back(
          {c.morphism_label(g), c.morphism_label(f), c.morphism_label(c.compose(g, f))});
    }
  }
  return j;
}

json functor_maps_json(const Functor& f) {
  json j;
  const FinCategory& s = f.source();
  const FinCategory& t = f.target();
  j["objects"] = json::object();
  for (ObjectId x = 0; x < s.object_count(); ++x) {
    j["objects"][s.object_label(x)] = t.object_label(f.object(x));
  }
  j["morphisms"] = json::object();
  for (MorphismId m = 0; m < s.morphism_count(); ++m) {
    j["morphisms"][s.morphism_label(m)] = t.morphism_label(f.morphism(m));
  }
  return j;
}

json homs_json(const CatGraph& g) {
  json j = json::object();
  for (ObjectId x = 0; x < g.object_count(); ++x) {
    for (ObjectId y = 0; y < g.object_count(); ++y) {
      if (g.hom(x, y).object_count() == 0) continue;
      j[join({g.object_label(x), g.object_label(y)})] = category_json(g.hom(x, y), false);
    }
  }
  return j;
}

json bicategory_json(const Bicategory& b, bool top) {
  const CatGraph& g = b.graph();
  const std::size_t N = g.object_count();
  json j;
  if (top) j["kind"] = "bicategory";
  j["objects"] = g.object_labels();
  j["homs"] = homs_json(g);
  j["identities"] = json::object();
  for (ObjectId x = 0; x < N; ++x) {
    j["identities"][g.object_label(x)] = g.hom(x, x).object_label(b.identity1(x));
  }
  auto triple = [&](bool two_cells) {
    json t = json::object();
    for (ObjectId x = 0; x < N; ++x) {
      for (ObjectId y = 0; y < N; ++y) {
        for (ObjectId z = 0; z < N; ++z) {
          const FinCategory &yz = g.hom(y, z), &xy = g.hom(x, y), &xz = g.hom(x, z);
          json rows = json::array();
          if (two_cells) {
            for (MorphismId be = 0; be < yz.morphism_count(); ++be) {
              for (MorphismId al = 0; al < xy.morphism_count(); ++al) {
                rows.push_back({yz.morphism_label(be), xy.morphism_label(al),
                                xz.morphism_label(b.hcompose2(x, y, z, be, al))});
              }
            }
          } else {
            for (ObjectId gg = 0; gg < yz.object_count(); ++gg) {
              for (ObjectId f = 0; f < xy.object_count(); ++f) {
                rows.push_back({yz.object_label(gg), xy.object_label(f),
                                xz.object_label(b.compose1(x, y, z, gg, f))});
              }
            }
          }
          if (!rows.empty()) {
            t[join({g.object_label(x), g.object_label(y), g.object_label(z)})] = rows;
          }
        }
      }
    }
    return t;
  };
  j["compose1"] = triple(false);
  if (b.has_hcompose2()) j["hcompose2"] = triple(true);
  if (b.has_associator()) {
    json t = json::object();
    for (ObjectId x = 0; x < N; ++x) {
      for (ObjectId y = 0; y < N; ++y) {
        for (ObjectId z = 0; z < N; ++z) {
          for (ObjectId w = 0; w < N; ++w) {
            const FinCategory &zw = g.hom(z, w), &yz = g.hom(y, z), &xy = g.hom(x, y);
            json rows = json::array();
            for (ObjectId h = 0; h < zw.object_count(); ++h) {
              for (ObjectId gg = 0; gg < yz.object_count(); ++gg) {
                for (ObjectId f = 0; f < xy.object_count(); ++f) {
                  rows.push_back({zw.object_label(h), yz.object_label(gg), xy.object_label(f),
                                  g.hom(x, w).morphism_label(
                                      b.associator(x, y, z, w, h, gg, f))});
                }
              }
            }
            if (!rows.empty()) {
              t[join({g.object_label(x), g.object_label(y), g.object_label(z),
                      g.object_label(w)})] = rows;
            }
          }
        }
      }
    }
    j["associator"] = t;
  }
  if (b.has_unitors()) {
    json l = json::object(), r = json::object();
    for (ObjectId x = 0; x < N; ++x) {
      for (ObjectId y = 0; y < N; ++y) {
        const FinCategory& h = g.hom(x, y);
        if (h.object_count() == 0) continue;
        const std::string key = join({g.object_label(x), g.object_label(y)});
        l[key] = json::object();
        r[key] = json::object();
        for (ObjectId f = 0; f < h.object_count(); ++f) {
          l[key][h.object_label(f)] = h.morphism_label(b.left_unitor(x, y, f));
          r[key][h.object_label(f)] = h.morphism_label(b.right_unitor(x, y, f));
        }
      }
    }
    j["left_unitor"] = l;
    j["right_unitor"] = r;
  }
  return j;
}

json lax_body_json(const LaxFunctorBicat& l) {
  const Bicategory& s = l.source();
  const Bicategory& t = l.target();
  const std::size_t N = s.object_count();
  json j;
  j["objects"] = json::object();
  for (ObjectId x = 0; x < N; ++x) {
    j["objects"][s.object_label(x)] = t.object_label(l.object(x));
  }
  j["homs"] = json::object();
  for (ObjectId x = 0; x < N; ++x) {
    for (ObjectId y = 0; y < N; ++y) {
      if (s.hom(x, y).object_count() == 0) continue;
      j["homs"][join({s.object_label(x), s.object_label(y)})] =
          functor_maps_json(l.hom_functor(x, y));
    }
  }
  if (const auto& c = l.coherence()) {
    json phi = json::object();
    for (ObjectId x = 0; x < N; ++x) {
      for (ObjectId y = 0; y < N; ++y) {
        for (ObjectId z = 0; z < N; ++z) {
          const FinCategory &yz = s.hom(y, z), &xy = s.hom(x, y);
          const FinCategory& target = t.hom(l.object(x), l.object(z));
          json rows = json::array();
          const auto& row = c->phi[s.key3(x, y, z)];
          for (ObjectId gg = 0; gg < yz.object_count(); ++gg) {
            for (ObjectId f = 0; f < xy.object_count(); ++f) {
              rows.push_back({yz.object_label(gg), xy.object_label(f),
                              target.morphism_label(row[gg * xy.object_count() + f])});
            }
          }
          if (!rows.empty()) {
            phi[join({s.object_label(x), s.object_label(y), s.object_label(z)})] = rows;
          }
        }
      }
    }
    json psi = json::object();
    for (ObjectId x = 0; x < N; ++x) {
      psi[s.object_label(x)] =
          t.hom(l.object(x), l.object(x)).morphism_label(c->psi[x]);
    }
    j["phi"] = phi;
    j["psi"] = psi;
  }
  return j;
}

bool is_identity_functor(const Functor& f) {
  if (f.source_ptr() != f.target_ptr()) return false;
  for (ObjectId x = 0; x < f.source().object_count(); ++x) {
    if (f.object(x) != x) return false;
  }
  for (MorphismId m = 0; m < f.source().morphism_count(); ++m) {
    if (f.morphism(m) != m) return false;
  }
  return true;
}

json laxcat_json(const LaxFunctorToCat& f) {
  const FinCategory& b = f.base();
  json j;
  j["kind"] = "laxcat";
  j["base"] = category_json(b, false);
  j["fibers"] = json::object();
  for (ObjectId x = 0; x < b.object_count(); ++x) {
    j["fibers"][b.object_label(x)] = category_json(f.fiber(x), false);
  }
  j["pullbacks"] = json::object();
  for (MorphismId m = 0; m < b.morphism_count(); ++m) {
    if (b.is_identity(m) && is_identity_functor(f.pullback(m))) continue;
    j["pullbacks"][b.morphism_label(m)] = functor_maps_json(f.pullback(m));
  }
  if (const auto& c = f.coherence()) {
    json comp = json::object();
    for (const auto& [gf, w] : c->compositors) {
      const auto [g, h] = gf;
      const FinCategory& fd = f.fiber(b.dst(g));
      const FinCategory& fb = f.fiber(b.src(h));
      json m = json::object();
      for (ObjectId z = 0; z < w.size(); ++z) {
        m[fd.object_label(z)] = fb.morphism_label(w[z]);
      }
      comp[join({b.morphism_label(g), b.morphism_label(h)})] = m;
    }
    json unit = json::object();
    for (ObjectId x = 0; x < b.object_count(); ++x) {
      json m = json::object();
      for (ObjectId z = 0; z < c->unitors[x].size(); ++z) {
        m[f.fiber(x).object_label(z)] = f.fiber(x).morphism_label(c->unitors[x][z]);
      }
      unit[b.object_label(x)] = m;
    }
    j["compositors"] = comp;
    j["unitors"] = unit;
  }
  return j;
}

json trihom_json(const Trihomomorphism& t) {
  const Bicategory& b = t.base();
  const std::size_t N = b.object_count();
  json j;
  j["kind"] = "trihom";
  j["base"] = bicategory_json(b, false);
  j["fibers"] = json::object();
  for (ObjectId x = 0; x < N; ++x) {
    j["fibers"][b.object_label(x)] = bicategory_json(t.fiber(x), false);
  }
  json p1 = json::object(), p2 = json::object();
  for (ObjectId x = 0; x < N; ++x) {
    for (ObjectId y = 0; y < N; ++y) {
      const FinCategory& h = b.hom(x, y);
      const std::string key = join({b.object_label(x), b.object_label(y)});
      if (h.object_count() > 0) {
        json m = json::object();
        for (ObjectId f = 0; f < h.object_count(); ++f) {
          m[h.object_label(f)] = lax_body_json(t.pullback1(x, y, f));
        }
        p1[key] = m;
      }
      if (h.morphism_count() > 0) {
        json m = json::object();
        const Bicategory& fx = t.fiber(x);
        const Bicategory& fy = t.fiber(y);
        for (MorphismId al = 0; al < h.morphism_count(); ++al) {
          const LaxFunctorBicat& fstar = t.pullback1(x, y, h.src(al));
          const LaxFunctorBicat& gstar = t.pullback1(x, y, h.dst(al));
          json comps = json::object();
          for (ObjectId z = 0; z < fy.object_count(); ++z) {
            comps[fy.object_label(z)] = fx.hom(gstar.object(z), fstar.object(z))
                                            .object_label(t.pullback2(x, y, al, z));
          }
          m[h.morphism_label(al)] = comps;
        }
        p2[key] = m;
      }
    }
  }
  j["pullback1"] = p1;
  j["pullback2"] = p2;
  return j;
}

}  // namespace

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kCategory:
      return "category";
    case Kind::kFunctor:
      return "functor";
    case Kind::kCatGraph:
      return "catgraph";
    case Kind::kBicategory:
      return "bicategory";
    case Kind::kLaxFunctor:
      return "laxfunctor";
    case Kind::kLaxCat:
      return "laxcat";
    case Kind::kTrihom:
      return "trihom";
  }
  return "";
}

std::optional<Kind> kind_from_name(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(Kind::kTrihom); ++k) {
    if (kind_name(static_cast<Kind>(k)) == name) return static_cast<Kind>(k);
  }
  return std::nullopt;
}

std::string Diagnostic::format(std::string_view file) const {
  return std::string(file) + ":" + std::to_string(span.line) + ":" +
         std::to_string(span.column) + ": " +
         (severity == Severity::kError ? "error " : "warning ") + code + ": " + message;
}

nlohmann::json Diagnostic::to_json() const {
  return {{"severity", severity == Severity::kError ? "error" : "warning"},
          {"line", span.line},
          {"column", span.column},
          {"code", code},
          {"message", message}};
}

ParseResult parse(std::string_view text) {
  ParseResult out;
  std::size_t consumed = 0;
  TreeBuilder builder(text, &consumed);
  CountingIterator first(text.data(), &consumed);
  CountingIterator last(text.data() + text.size(), &consumed);
  json::sax_parse(first, last, &builder);
  if (builder.error) {
    out.diagnostics.push_back(*builder.error);
    return out;
  }
  Reader reader(&out.diagnostics);
  out.document = reader.document(*builder.root);
  std::stable_sort(out.diagnostics.begin(), out.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::pair(a.span.line, a.span.column) <
                            std::pair(b.span.line, b.span.column);
                   });
  return out;
}

nlohmann::json to_json(const Document& doc) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CategoryPtr>) {
          return category_json(*v, true);
        } else if constexpr (std::is_same_v<T, Functor>) {
          json j = functor_maps_json(v);
          j["kind"] = "functor";
          j["source"] = category_json(v.source(), false);
          j["target"] = category_json(v.target(), false);
          return j;
        } else if constexpr (std::is_same_v<T, CatGraph>) {
          return {{"kind", "catgraph"}, {"objects", v.object_labels()}, {"homs", homs_json(v)}};
        } else if constexpr (std::is_same_v<T, BicatPtr>) {
          return bicategory_json(*v, true);
        } else if constexpr (std::is_same_v<T, LaxFunctorBicat>) {
          json j = lax_body_json(v);
          j["kind"] = "laxfunctor";
          j["source"] = bicategory_json(v.source(), false);
          j["target"] = bicategory_json(v.target(), false);
          return j;
        } else if constexpr (std::is_same_v<T, LaxFunctorToCat>) {
          return laxcat_json(v);
        } else {
          return trihom_json(v);
        }
      },
      doc.value);
}

std::string serialize(const Document& doc) { return to_json(doc).dump(2) + "\n"; }

const std::vector<std::pair<std::string, std::string>>& diagnostic_codes() {
  static const std::vector<std::pair<std::string, std::string>> codes = {
      {"E000", "malformed JSON"},
      {"E001", "reference to an undeclared object"},
      {"E002", "reference to an undeclared morphism, 1-cell or 2-cell"},
      {"E003", "label or key declared twice"},
      {"E004", "required field or entry missing"},
      {"E005", "value has the wrong JSON type or shape"},
      {"E006", "unknown or unexpected kind"},
      {"E007", "composite missing from a composition table"},
      {"E008", "identity missing or identity law violated"},
      {"E009", "associativity violated"},
      {"E010", "endpoints do not match"},
      {"E011", "functor law violated"},
      {"E012", "unknown field (warning)"},
      {"E014", "2-cell component of a trihomomorphism missing"},
      {"E015", "trihomomorphism component has the wrong type"},
      {"E016", "bicategory data incomplete"},
      {"E017", "naturality or coherence violated"},
      {"E018", "composite given twice"},
  };
  return codes;
}

}  // namespace bicat_euler::dsl
