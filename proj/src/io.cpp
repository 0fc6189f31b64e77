#include "lalgebra/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lalgebra/error.hpp"

namespace lalgebra {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw FormatError(msg); }

std::string location_of(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& j, const char* key, const std::string& kind) {
  auto it = j.find(key);
  if (it == j.end()) fail(kind + " document is missing '" + std::string(key) + "'");
  return *it;
}

int int_field(const json& j, const char* key, const std::string& kind) {
  const json& v = field(j, key, kind);
  if (!v.is_number_integer()) fail(kind + " field '" + std::string(key) + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const json& j, const char* key, const std::string& kind) {
  const json& v = field(j, key, kind);
  if (!v.is_string()) fail(kind + " field '" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

std::vector<int> int_array(const json& v, const std::string& what) {
  if (!v.is_array()) fail(what + " must be an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number_integer()) fail(what + " must contain integers only");
    out.push_back(e.get<int>());
  }
  return out;
}

/// Parsed named documents available for back references.
struct Context {
  std::map<std::string, const Document*> by_name;

  const Document& resolve(const std::string& name, const std::string& kind) const {
    auto it = by_name.find(name);
    if (it == by_name.end()) fail("reference '" + name + "' does not match any earlier document");
    if (it->second->kind != kind) {
      fail("reference '" + name + "' is a " + it->second->kind + ", expected " + kind);
    }
    return *it->second;
  }
};

Signature parse_signature_body(const json& j) {
  const json& syms = field(j, "symbols", "signature");
  if (!syms.is_array() || syms.empty()) fail("signature needs a nonempty 'symbols' array");
  std::vector<OperationSymbol> out;
  for (const auto& s : syms) {
    out.push_back({string_field(s, "name", "symbol"), int_field(s, "arity", "symbol")});
  }
  return Signature(std::move(out));
}

Signature nested_signature(const json& v, const Context& ctx) {
  if (v.is_string()) {
    return std::get<Signature>(ctx.resolve(v.get<std::string>(), "signature").body);
  }
  if (!v.is_object()) fail("expected a signature object or reference");
  return parse_signature_body(v);
}

FiniteAlgebra parse_algebra_body(const json& j, const Context& ctx,
                                 std::vector<std::string>* element_names) {
  Signature sig = nested_signature(field(j, "signature", "algebra"), ctx);
  int size = int_field(j, "size", "algebra");
  const json& tables = field(j, "tables", "algebra");
  if (!tables.is_object()) fail("algebra 'tables' must map symbol names to flat arrays");
  std::vector<std::vector<int>> tabs(sig.symbol_count());
  for (int s = 0; s < sig.symbol_count(); ++s) {
    const auto& name = sig.symbol(s).name;
    auto it = tables.find(name);
    if (it == tables.end()) fail("algebra is missing the table for '" + name + "'");
    tabs[s] = int_array(*it, "table '" + name + "'");
  }
  if (static_cast<int>(tables.size()) != sig.symbol_count()) {
    fail("algebra has tables for unknown symbols");
  }
  if (element_names) {
    element_names->clear();
    if (auto it = j.find("elements"); it != j.end()) {
      if (!it->is_array()) fail("algebra 'elements' must be an array of strings");
      for (const auto& e : *it) {
        if (!e.is_string()) fail("algebra 'elements' must be an array of strings");
        element_names->push_back(e.get<std::string>());
      }
      if (static_cast<int>(element_names->size()) != size) {
        fail("algebra 'elements' must name every carrier element");
      }
    }
  }
  return FiniteAlgebra(sig, size, std::move(tabs));
}

FiniteAlgebra nested_algebra(const json& v, const Context& ctx) {
  if (v.is_string()) {
    return std::get<FiniteAlgebra>(ctx.resolve(v.get<std::string>(), "algebra").body);
  }
  if (!v.is_object()) fail("expected an algebra object or reference");
  return parse_algebra_body(v, ctx, nullptr);
}

Semilattice parse_semilattice_body(const json& j) {
  int size = int_field(j, "size", "semilattice");
  return Semilattice(size, int_array(field(j, "join", "semilattice"), "'join'"));
}

Semilattice nested_semilattice(const json& v, const Context& ctx) {
  if (v.is_string()) {
    return std::get<Semilattice>(ctx.resolve(v.get<std::string>(), "semilattice").body);
  }
  if (!v.is_object()) fail("expected a semilattice object or reference");
  return parse_semilattice_body(v);
}

std::map<std::pair<int, int>, std::vector<int>> parse_transitions(const json& j,
                                                                  const std::string& kind) {
  const json& arr = field(j, "transitions", kind);
  if (!arr.is_array()) fail(kind + " 'transitions' must be an array");
  std::map<std::pair<int, int>, std::vector<int>> out;
  for (const auto& t : arr) {
    int from = int_field(t, "from", "transition");
    int to = int_field(t, "to", "transition");
    if (!out.emplace(std::make_pair(from, to), int_array(field(t, "map", "transition"), "transition 'map'")).second) {
      fail("duplicate transition (" + std::to_string(from) + ", " + std::to_string(to) + ")");
    }
  }
  return out;
}

LallementSystem parse_system_body(const json& j, const Context& ctx) {
  FiniteAlgebra base = nested_algebra(field(j, "base", "lallement_system"), ctx);
  const json& pairs = field(j, "pairs", "lallement_system");
  if (!pairs.is_array()) fail("'pairs' must be an array");
  std::vector<AlgebraicPair> ps;
  for (const auto& p : pairs) {
    ps.push_back({nested_algebra(field(p, "ambient", "pair"), ctx),
                  int_array(field(p, "members", "pair"), "'members'")});
  }
  return LallementSystem(std::move(base), std::move(ps),
                         parse_transitions(j, "lallement_system"));
}

LallementSystem nested_system(const json& v, const Context& ctx) {
  if (v.is_string()) {
    return std::get<LallementSystem>(ctx.resolve(v.get<std::string>(), "lallement_system").body);
  }
  if (!v.is_object()) fail("expected a lallement_system object or reference");
  return parse_system_body(v, ctx);
}

InductiveSystem parse_inductive_body(const json& j, const Context& ctx) {
  InductiveSystem sys;
  sys.base = nested_semilattice(field(j, "base", "inductive_system"), ctx);
  const json& algs = field(j, "algebras", "inductive_system");
  if (!algs.is_array()) fail("'algebras' must be an array");
  for (const auto& a : algs) sys.algebras.push_back(nested_algebra(a, ctx));
  sys.transitions = parse_transitions(j, "inductive_system");
  return sys;
}

std::vector<std::vector<int>> parse_components(const json& j, const std::string& kind) {
  const json& comps = field(j, "components", kind);
  if (!comps.is_array()) fail(kind + " 'components' must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& c : comps) out.push_back(int_array(c, "component"));
  return out;
}

Document parse_one(const json& j, const Context& ctx) {
  if (!j.is_object()) fail("a document must be a JSON object");
  std::string kind = string_field(j, "kind", "document");
  Document doc;
  doc.kind = kind;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) fail("document 'name' must be a string");
    doc.name = it->get<std::string>();
  }
  if (kind == "signature") {
    doc.body = parse_signature_body(j);
  } else if (kind == "algebra") {
    doc.body = parse_algebra_body(j, ctx, &doc.element_names);
  } else if (kind == "semilattice") {
    doc.body = parse_semilattice_body(j);
  } else if (kind == "covering") {
    doc.body = Covering(nested_algebra(field(j, "base", kind), ctx),
                        nested_algebra(field(j, "total", kind), ctx),
                        int_array(field(j, "map", kind), "'map'"));
  } else if (kind == "lallement_system") {
    doc.body = parse_system_body(j, ctx);
  } else if (kind == "inductive_system") {
    doc.body = parse_inductive_body(j, ctx);
  } else if (kind == "labeled_morphism") {
    LallementSystem src = nested_system(field(j, "source", kind), ctx);
    LallementSystem tgt = nested_system(field(j, "target", kind), ctx);
    Homomorphism base(src.base(), tgt.base(), int_array(field(j, "base_map", kind), "'base_map'"));
    doc.body = LabeledMorphism{std::move(src), std::move(tgt), std::move(base),
                               parse_components(j, kind)};
  } else if (kind == "homomorphism") {
    doc.body = HomDocument{nested_algebra(field(j, "source", kind), ctx),
                           nested_algebra(field(j, "target", kind), ctx),
                           int_array(field(j, "map", kind), "'map'")};
  } else if (kind == "plonka_algebra") {
    doc.body = PlonkaAlgebra(nested_algebra(field(j, "algebra", kind), ctx),
                             int_array(field(j, "partition_function", kind),
                                       "'partition_function'"));
  } else if (kind == "sum_result") {
    SumDocument s{nested_algebra(field(j, "algebra", kind), ctx),
                  int_array(field(j, "offsets", kind), "'offsets'"),
                  int_array(field(j, "projection", kind), "'projection'"),
                  nested_algebra(field(j, "base", kind), ctx), std::nullopt};
    if (auto it = j.find("partition_function"); it != j.end()) {
      s.d_table = int_array(*it, "'partition_function'");
    }
    doc.body = std::move(s);
  } else if (kind == "covering_morphism") {
    doc.body = TargetedMorphismDocument{int_array(field(j, "base_map", kind), "'base_map'"),
                                        int_array(field(j, "total_map", kind), "'total_map'")};
  } else {
    fail("unknown document kind '" + kind + "'");
  }
  return doc;
}

json signature_json(const Signature& sig) {
  json j;
  j["kind"] = "signature";
  json syms = json::array();
  for (const auto& s : sig.symbols()) {
    json e;
    e["name"] = s.name;
    e["arity"] = s.arity;
    syms.push_back(std::move(e));
  }
  j["symbols"] = std::move(syms);
  return j;
}

json algebra_json(const FiniteAlgebra& a, const std::vector<std::string>& element_names = {}) {
  json j;
  j["kind"] = "algebra";
  j["signature"] = signature_json(a.signature());
  j["size"] = a.size();
  json tabs;
  for (int s = 0; s < a.signature().symbol_count(); ++s) {
    tabs[a.signature().symbol(s).name] = a.table(s);
  }
  j["tables"] = std::move(tabs);
  if (!element_names.empty()) j["elements"] = element_names;
  return j;
}

json semilattice_json(const Semilattice& s) {
  json j;
  j["kind"] = "semilattice";
  j["size"] = s.size();
  j["join"] = s.join_table();
  return j;
}

json transitions_json(const std::map<std::pair<int, int>, std::vector<int>>& trans) {
  json arr = json::array();
  for (const auto& [key, map] : trans) {
    json t;
    t["from"] = key.first;
    t["to"] = key.second;
    t["map"] = map;
    arr.push_back(std::move(t));
  }
  return arr;
}

json system_json(const LallementSystem& sys) {
  json j;
  j["kind"] = "lallement_system";
  j["base"] = algebra_json(sys.base());
  json pairs = json::array();
  for (int i = 0; i < sys.index_count(); ++i) {
    json p;
    p["ambient"] = algebra_json(sys.pair(i).ambient);
    p["members"] = sys.pair(i).members;
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  j["transitions"] = transitions_json(sys.transitions());
  return j;
}

json body_json(const Document& doc) {
  if (const auto* s = std::get_if<Signature>(&doc.body)) return signature_json(*s);
  if (const auto* a = std::get_if<FiniteAlgebra>(&doc.body)) {
    return algebra_json(*a, doc.element_names);
  }
  if (const auto* s = std::get_if<Semilattice>(&doc.body)) return semilattice_json(*s);
  if (const auto* c = std::get_if<Covering>(&doc.body)) {
    json j;
    j["kind"] = "covering";
    j["base"] = algebra_json(c->base());
    j["total"] = algebra_json(c->total());
    j["map"] = c->map();
    return j;
  }
  if (const auto* s = std::get_if<LallementSystem>(&doc.body)) return system_json(*s);
  if (const auto* s = std::get_if<InductiveSystem>(&doc.body)) {
    json j;
    j["kind"] = "inductive_system";
    j["base"] = semilattice_json(s->base);
    json algs = json::array();
    for (const auto& a : s->algebras) algs.push_back(algebra_json(a));
    j["algebras"] = std::move(algs);
    j["transitions"] = transitions_json(s->transitions);
    return j;
  }
  if (const auto* m = std::get_if<LabeledMorphism>(&doc.body)) {
    json j;
    j["kind"] = "labeled_morphism";
    j["source"] = system_json(m->source);
    j["target"] = system_json(m->target);
    j["base_map"] = m->base_map.map();
    j["components"] = m->components;
    return j;
  }
  if (const auto* h = std::get_if<HomDocument>(&doc.body)) {
    json j;
    j["kind"] = "homomorphism";
    j["source"] = algebra_json(h->source);
    j["target"] = algebra_json(h->target);
    j["map"] = h->map;
    return j;
  }
  if (const auto* p = std::get_if<PlonkaAlgebra>(&doc.body)) {
    json j;
    j["kind"] = "plonka_algebra";
    j["algebra"] = algebra_json(p->algebra());
    j["partition_function"] = p->d_table();
    return j;
  }
  if (const auto* s = std::get_if<SumDocument>(&doc.body)) {
    json j;
    j["kind"] = "sum_result";
    j["algebra"] = algebra_json(s->algebra);
    j["offsets"] = s->offsets;
    j["projection"] = s->projection;
    j["base"] = algebra_json(s->base);
    if (s->d_table.has_value()) j["partition_function"] = *s->d_table;
    return j;
  }
  const auto& t = std::get<TargetedMorphismDocument>(doc.body);
  json j;
  j["kind"] = "covering_morphism";
  j["base_map"] = t.base_map;
  j["total_map"] = t.total_map;
  return j;
}

}  // namespace

std::vector<Document> parse_documents(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("invalid JSON at " + location_of(text, e.byte) + ": " + e.what());
  }
  std::vector<json> raw;
  if (root.is_object() && root.contains("documents")) {
    const json& arr = root["documents"];
    if (!arr.is_array()) fail("'documents' must be an array");
    for (const auto& d : arr) raw.push_back(d);
  } else {
    raw.push_back(root);
  }
  std::vector<Document> out;
  out.reserve(raw.size());
  Context ctx;
  for (const auto& j : raw) {
    out.push_back(parse_one(j, ctx));
    const Document& doc = out.back();
    if (!doc.name.empty()) ctx.by_name[doc.name] = &out.back();
  }
  return out;
}

Document single_document(const std::vector<Document>& docs, const std::string& kind) {
  const Document* found = nullptr;
  for (const auto& d : docs) {
    if (d.kind != kind) continue;
    if (found) fail("bundle holds more than one " + kind + " document");
    found = &d;
  }
  if (!found) fail("bundle holds no " + kind + " document");
  return *found;
}

std::string serialize(const Document& doc) {
  json j = body_json(doc);
  if (!doc.name.empty()) {
    // keep 'kind' first, then 'name'
    json withname;
    withname["kind"] = j["kind"];
    withname["name"] = doc.name;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() != "kind") withname[it.key()] = it.value();
    }
    j = std::move(withname);
  }
  return j.dump(2) + "\n";
}

std::vector<Document> load_documents(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_documents(buf.str());
}

Document algebra_document(const FiniteAlgebra& a, const std::string& name) {
  Document d;
  d.kind = "algebra";
  d.name = name;
  d.body = a;
  return d;
}

Document system_document(const LallementSystem& s, const std::string& name) {
  Document d;
  d.kind = "lallement_system";
  d.name = name;
  d.body = s;
  return d;
}

Document sum_document(const SumDocument& s, const std::string& name) {
  Document d;
  d.kind = "sum_result";
  d.name = name;
  d.body = s;
  return d;
}

}  // namespace lalgebra
