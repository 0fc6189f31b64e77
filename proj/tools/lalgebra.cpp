#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lalgebra/congruence.hpp"
#include "lalgebra/decomposition.hpp"
#include "lalgebra/error.hpp"
#include "lalgebra/io.hpp"
#include "lalgebra/limits.hpp"
#include "lalgebra/npi.hpp"
#include "lalgebra/plonka.hpp"
#include "lalgebra/relation.hpp"
#include "lalgebra/suites.hpp"
#include "lalgebra/sum.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace lalgebra;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json doc_json(const Document& d) { return json::parse(serialize(d)); }

json check_entry(const std::string& claim, bool ok, const json& witness = nullptr) {
  json e;
  e["claim"] = claim;
  e["status"] = ok ? "pass" : "fail";
  if (!ok && !witness.is_null()) e["witness"] = witness;
  return e;
}

/// Shared shape of every `check` report; exit code derives from "passed".
int finish_check(const std::string& property, const std::string& path, json checks) {
  bool passed = true;
  for (const auto& c : checks) {
    if (c.at("status") != "pass") passed = false;
  }
  json report;
  report["command"] = "check";
  report["property"] = property;
  report["input"] = path;
  report["passed"] = passed;
  report["checks"] = std::move(checks);
  emit(report);
  return passed ? 0 : 1;
}

json violations_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    json e;
    e["claim"] = v.condition;
    e["status"] = "fail";
    e["witness"] = v.message;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw UsageError("empty entry in list '" + text + "'");
    size_t used = 0;
    int v = std::stoi(cur, &used);
    if (used != cur.size()) throw UsageError("bad integer '" + cur + "'");
    out.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == sep) {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  flush();
  return out;
}

/// First operation/tuple where `map` fails to commute, as a witness object.
std::optional<json> hom_counterexample(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                                       const std::vector<int>& map) {
  for (int s = 0; s < src.signature().symbol_count(); ++s) {
    int arity = src.signature().symbol(s).arity;
    std::optional<json> found;
    std::vector<int> imgs(arity);
    for_each_tuple(src.size(), arity, [&](std::span<const int> args) {
      if (found) return;
      for (int k = 0; k < arity; ++k) imgs[k] = map[args[k]];
      int lhs = map[src.apply(s, args)];
      int rhs = tgt.apply(s, std::span<const int>(imgs.data(), imgs.size()));
      if (lhs != rhs) {
        json w;
        w["symbol"] = src.signature().symbol(s).name;
        w["args"] = std::vector<int>(args.begin(), args.end());
        w["image_of_value"] = lhs;
        w["value_of_images"] = rhs;
        found = w;
      }
    });
    if (found) return found;
  }
  return std::nullopt;
}

int run_check(const std::string& property, const std::string& path) {
  auto docs = load_documents(path);
  json checks = json::array();

  if (property == "algebra") {
    auto a = std::get<FiniteAlgebra>(single_document(docs, "algebra").body);
    auto vs = validate_algebra(a);
    checks = violations_json(vs);
    checks.push_back(check_entry("every table entry lies in the carrier", vs.empty()));
  } else if (property == "hom") {
    auto h = std::get<HomDocument>(single_document(docs, "homomorphism").body);
    bool shape = h.source.signature() == h.target.signature() &&
                 static_cast<int>(h.map.size()) == h.source.size();
    for (int v : h.map) shape = shape && v >= 0 && v < h.target.size();
    checks.push_back(check_entry("endpoints share a signature and the map is total", shape));
    if (shape) {
      auto witness = hom_counterexample(h.source, h.target, h.map);
      checks.push_back(check_entry("the map commutes with every operation", !witness,
                                   witness ? *witness : json(nullptr)));
    }
  } else if (property == "idempotent") {
    auto a = std::get<FiniteAlgebra>(single_document(docs, "algebra").body);
    json w = nullptr;
    for (int s = 0; s < a.signature().symbol_count() && w.is_null(); ++s) {
      int arity = a.signature().symbol(s).arity;
      for (int x = 0; x < a.size() && w.is_null(); ++x) {
        std::vector<int> args(arity, x);
        int v = a.apply(s, std::span<const int>(args.data(), args.size()));
        if (v != x) {
          w = json{{"symbol", a.signature().symbol(s).name}, {"element", x}, {"value", v}};
        }
      }
    }
    checks.push_back(check_entry("every operation fixes constant tuples", w.is_null(), w));
  } else if (property == "npi") {
    auto a = std::get<FiniteAlgebra>(single_document(docs, "algebra").body);
    bool idem = is_idempotent(a);
    checks.push_back(check_entry("every operation fixes constant tuples", idem));
    if (idem) {
      checks.push_back(check_entry("operations are monotone for the predecessor preorder",
                                   is_naturally_preordered(a)));
    }
  } else if (property == "sigma-semilattice") {
    auto a = std::get<FiniteAlgebra>(single_document(docs, "algebra").body);
    auto sl = is_sigma_semilattice(a);
    checks.push_back(
        check_entry("operations compute joins of a semilattice order", sl.has_value()));
    int rc = finish_check(property, path, checks);
    return rc;
  } else if (property == "system") {
    auto sys = std::get<LallementSystem>(single_document(docs, "lallement_system").body);
    auto vs = validate_system(sys);
    checks = violations_json(vs);
    checks.push_back(check_entry("closure and coherence conditions hold", vs.empty()));
  } else if (property == "semi-inductive") {
    auto sys = std::get<LallementSystem>(single_document(docs, "lallement_system").body);
    auto vs = validate_system(sys);
    checks = violations_json(vs);
    checks.push_back(check_entry("closure and coherence conditions hold", vs.empty()));
    if (vs.empty()) {
      checks.push_back(
          check_entry("diagonal transitions are the member inclusions", is_semi_inductive(sys)));
    }
  } else if (property == "plonka") {
    auto p = std::get<PlonkaAlgebra>(single_document(docs, "plonka_algebra").body);
    auto vs = validate_plonka(p);
    checks = violations_json(vs);
    checks.push_back(check_entry("the five partition-function laws hold", vs.empty()));
  } else if (property == "inductive") {
    auto sys = std::get<InductiveSystem>(single_document(docs, "inductive_system").body);
    auto vs = validate_inductive(sys);
    checks = violations_json(vs);
    checks.push_back(check_entry("transitions form a functor on the base order", vs.empty()));
  } else {
    throw UsageError("unknown property '" + property + "'");
  }
  return finish_check(property, path, checks);
}

int run_order(const std::string& path) {
  auto docs = load_documents(path);
  auto a = std::get<FiniteAlgebra>(single_document(docs, "algebra").body);
  auto vs = validate_algebra(a);
  if (!vs.empty()) throw UsageError("input algebra is invalid: " + vs.front().message);
  Relation pred = predecessor_relation(a);
  Relation ord = algebraic_preorder(a);
  auto matrix = [&](const Relation& r) {
    json rows = json::array();
    for (int b = 0; b < a.size(); ++b) {
      json row = json::array();
      for (int x = 0; x < a.size(); ++x) row.push_back(r.contains(b, x) ? 1 : 0);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  json report;
  report["command"] = "order";
  report["size"] = a.size();
  report["predecessor"] = matrix(pred);
  report["preorder"] = matrix(ord);
  emit(report);
  return 0;
}

int run_congruences(const std::string& path, const std::optional<std::string>& preserving) {
  auto docs = load_documents(path);
  auto a = std::get<FiniteAlgebra>(single_document(docs, "algebra").body);
  auto vs = validate_algebra(a);
  if (!vs.empty()) throw UsageError("input algebra is invalid: " + vs.front().message);
  auto all = enumerate_congruences(a);
  json report;
  report["command"] = "congruences";
  report["size"] = a.size();
  json list = json::array();
  if (preserving) {
    std::vector<int> members = parse_int_list(*preserving, ',');
    report["preserving"] = members;
    Subuniverse sub(a, members);  // must be closed; UsageError otherwise
    for (const auto& c : all) {
      if (preserves_subalgebra(c, sub)) list.push_back(c.block_ids());
    }
  } else {
    for (const auto& c : all) list.push_back(c.block_ids());
  }
  report["count"] = list.size();
  report["congruences"] = std::move(list);
  emit(report);
  return 0;
}

int write_or_print(const Document& doc, const std::string& out) {
  if (out.empty()) {
    std::cout << serialize(doc);
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + out + "'");
  f << serialize(doc);
  return 0;
}

int run_sum(const std::string& flavor, const std::string& path, const std::string& out) {
  auto docs = load_documents(path);
  if (flavor == "lallement") {
    auto sys = std::get<LallementSystem>(single_document(docs, "lallement_system").body);
    auto vs = validate_system(sys);
    if (!vs.empty()) {
      json report;
      report["command"] = "sum";
      report["passed"] = false;
      report["checks"] = violations_json(vs);
      emit(report);
      return 1;
    }
    SumResult sum = lallement_sum(sys);
    SumDocument body{sum.algebra, sum.offsets, sum.projection.map(), sys.base(), std::nullopt};
    return write_or_print(sum_document(body, "sum"), out);
  }
  if (flavor == "plonka") {
    auto sys = std::get<InductiveSystem>(single_document(docs, "inductive_system").body);
    auto vs = validate_inductive(sys);
    if (!vs.empty()) {
      json report;
      report["command"] = "sum";
      report["passed"] = false;
      report["checks"] = violations_json(vs);
      emit(report);
      return 1;
    }
    PlonkaSumResult ps = plonka_sum(sys);
    SumDocument body{ps.sum.algebra(), ps.offsets, ps.projection.map(), ps.projection.target(),
                     ps.sum.d_table()};
    return write_or_print(sum_document(body, "sum"), out);
  }
  throw UsageError("sum flavor must be 'lallement' or 'plonka'");
}

PreservingTuple parse_theta(const Covering& cov, const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (static_cast<int>(parts.size()) != cov.base().size()) {
    throw UsageError("theta needs one block list per base element (got " +
                     std::to_string(parts.size()) + ", want " +
                     std::to_string(cov.base().size()) + ")");
  }
  PreservingTuple theta;
  for (int j = 0; j < cov.base().size(); ++j) {
    std::vector<int> ids = parse_int_list(parts[j], ',');
    size_t want = downset_algebra(cov, j).members.size();
    if (ids.size() != want) {
      throw UsageError("theta entry " + std::to_string(j) + " must list " +
                       std::to_string(want) + " blocks");
    }
    theta.push_back(Congruence(ids));
  }
  return theta;
}

PreservingTuple identity_theta(const Covering& cov) {
  PreservingTuple theta;
  for (int j = 0; j < cov.base().size(); ++j) {
    theta.push_back(
        Congruence::identity(static_cast<int>(downset_algebra(cov, j).members.size())));
  }
  return theta;
}

int run_decompose(const std::string& path, const std::optional<std::string>& theta_spec,
                  bool all) {
  auto docs = load_documents(path);
  auto cov = std::get<Covering>(single_document(docs, "covering").body);

  if (all) {
    PreservingFamily fam = enumerate_preserving(cov);
    json report;
    report["command"] = "decompose";
    report["mode"] = "all";
    json counts = json::array();
    for (const auto& list : fam.per_index) counts.push_back(list.size());
    report["per_index_counts"] = std::move(counts);
    report["count"] = fam.count();
    json tuples = json::array();
    for (const auto& t : fam.materialize()) {
      json entry = json::array();
      for (const auto& c : t) entry.push_back(c.block_ids());
      tuples.push_back(std::move(entry));
    }
    report["tuples"] = std::move(tuples);
    emit(report);
    return 0;
  }

  PreservingTuple theta = theta_spec ? parse_theta(cov, *theta_spec) : identity_theta(cov);
  std::vector<DownsetAlgebra> downsets;
  for (int j = 0; j < cov.base().size(); ++j) downsets.push_back(downset_algebra(cov, j));
  if (!is_preserving(cov, downsets, theta)) {
    json report;
    report["command"] = "decompose";
    report["passed"] = false;
    json checks = json::array();
    checks.push_back(check_entry("the tuple is a preserving congruence family", false));
    report["checks"] = std::move(checks);
    emit(report);
    return 1;
  }

  UnitMorphism unit = unit_morphism(cov, theta);
  json report;
  report["command"] = "decompose";
  json theta_out = json::array();
  for (const auto& c : theta) theta_out.push_back(c.block_ids());
  report["theta"] = std::move(theta_out);
  report["system"] = doc_json(system_document(build_system(cov, theta), "quotient-system"));
  json u;
  u["base_map"] = unit.base_map.map();
  u["total_map"] = unit.total_map.map();
  report["unit"] = std::move(u);
  report["sum"] = doc_json(sum_document(
      SumDocument{unit.sum.algebra, unit.sum.offsets, unit.sum.projection.map(), cov.base(),
                  std::nullopt},
      "sum"));
  emit(report);
  return 0;
}

int run_factorize(const std::string& cov_path, const std::string& target_path,
                  const std::string& morphism_path) {
  auto cov = std::get<Covering>(single_document(load_documents(cov_path), "covering").body);
  auto target = std::get<LallementSystem>(
      single_document(load_documents(target_path), "lallement_system").body);
  auto mdoc = std::get<TargetedMorphismDocument>(
      single_document(load_documents(morphism_path), "covering_morphism").body);

  json report;
  report["command"] = "factorize";
  TargetedMorphism m{Homomorphism(cov.base(), target.base(), mdoc.base_map), mdoc.total_map};

  PreservingFamily adm = admissible_for_target(cov, target, m);
  json counts = json::array();
  for (const auto& list : adm.per_index) counts.push_back(list.size());
  report["per_index_counts"] = std::move(counts);
  report["count"] = adm.count();

  bool all_ok = true;
  json items = json::array();
  for (const auto& theta : adm.materialize()) {
    Factorization f = factorize(cov, target, m, theta);
    UniquenessResult u = verify_uniqueness(cov, target, m, theta);
    json item;
    json theta_out = json::array();
    for (const auto& c : theta) theta_out.push_back(c.block_ids());
    item["theta"] = std::move(theta_out);
    item["base_map"] = f.morphism.base_map.map();
    item["components"] = f.morphism.components;
    switch (u.status) {
      case UniquenessResult::Status::verified:
        item["unique"] = "verified";
        break;
      case UniquenessResult::Status::failed:
        item["unique"] = "failed";
        all_ok = false;
        break;
      case UniquenessResult::Status::not_checked:
        item["unique"] = "not-checked";
        break;
    }
    item["candidates"] = u.candidates;
    item["found"] = u.found;
    items.push_back(std::move(item));
  }
  report["factorizations"] = std::move(items);
  report["passed"] = all_ok;
  emit(report);
  return all_ok ? 0 : 1;
}

int run_verify(const std::string& suite, const std::optional<std::string>& fixture_path,
               std::uint64_t seed, int instances, int max_size) {
  SuiteOptions opt;
  opt.seed = seed;
  opt.instances = instances;
  opt.max_size = max_size;
  if (fixture_path) {
    if (suite != "prop6.10" && suite != "multiadjoint") {
      throw UsageError("a covering fixture only applies to the factorization suite");
    }
    opt.fixture =
        std::get<Covering>(single_document(load_documents(*fixture_path), "covering").body);
  }
  SuiteReport report = run_suite(suite, opt);
  std::cout << report.to_json();
  return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("LALGEBRA_LIMITS")) {
    try {
      apply_limit_overrides(limits(), env);
    } catch (const Error& e) {
      std::cerr << "bad LALGEBRA_LIMITS: " << e.what() << "\n";
      return 2;
    }
  }

  CLI::App app{"finite-algebra toolkit: validation, orders, congruences, sums, decompositions"};
  app.require_subcommand(1);

  std::string check_property, check_file;
  auto* check = app.add_subcommand("check", "validate a documented property of an input file");
  check->add_option("property", check_property,
                    "algebra|hom|idempotent|npi|sigma-semilattice|system|semi-inductive|"
                    "plonka|inductive")
      ->required();
  check->add_option("file", check_file, "document or bundle to examine")->required();

  std::string order_file;
  auto* order = app.add_subcommand("order", "emit the predecessor relation and its preorder");
  order->add_option("file", order_file)->required();

  std::string cong_file;
  std::optional<std::string> cong_preserving;
  auto* cong = app.add_subcommand("congruences", "enumerate congruences of an algebra");
  cong->add_option("file", cong_file)->required();
  cong->add_option("--preserving", cong_preserving,
                   "comma-separated members; keep congruences injective on them");

  std::string sum_flavor, sum_file, sum_out;
  auto* sum = app.add_subcommand("sum", "compute the sum algebra of a system");
  sum->add_option("flavor", sum_flavor, "lallement|plonka")->required();
  sum->add_option("bundle", sum_file)->required();
  sum->add_option("--out", sum_out, "write the sum document here instead of stdout");

  std::string dec_file;
  std::optional<std::string> dec_theta;
  bool dec_all = false;
  auto* dec = app.add_subcommand("decompose", "quotient systems of a covering");
  dec->add_option("covering", dec_file)->required();
  dec->add_option("--theta", dec_theta,
                  "per-base-element block ids, ';' between elements (default: all singletons)");
  dec->add_flag("--all", dec_all, "enumerate every preserving tuple instead");

  std::string fac_cov, fac_target, fac_morphism;
  auto* fac = app.add_subcommand("factorize",
                                 "factor a morphism-into-a-sum through quotient systems");
  fac->add_option("covering", fac_cov)->required();
  fac->add_option("target-bundle", fac_target)->required();
  fac->add_option("morphism", fac_morphism)->required();

  std::string ver_suite;
  std::optional<std::string> ver_fixture;
  std::uint64_t ver_seed = 0;
  int ver_instances = 0, ver_max = 0;
  auto* ver = app.add_subcommand("verify", "run a seeded verification suite");
  ver->add_option("suite", ver_suite,
                  "prop4.7|prop5.2|prop5.5|prop6.3|prop6.10|multiadjoint|theta|plonka-axioms")
      ->required();
  ver->add_option("file", ver_fixture, "optional covering used as instance 0");
  ver->add_option("--seed", ver_seed, "64-bit seed (default 0)");
  ver->add_option("--instances", ver_instances, "instance count (0 = suite default)");
  ver->add_option("--max-size", ver_max, "carrier-size cap (0 = suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(check_property, check_file);
    if (*order) return run_order(order_file);
    if (*cong) return run_congruences(cong_file, cong_preserving);
    if (*sum) return run_sum(sum_flavor, sum_file, sum_out);
    if (*dec) {
      if (dec_all && dec_theta) throw UsageError("--theta and --all are mutually exclusive");
      return run_decompose(dec_file, dec_theta, dec_all);
    }
    if (*fac) return run_factorize(fac_cov, fac_target, fac_morphism);
    if (*ver) return run_verify(ver_suite, ver_fixture, ver_seed, ver_instances, ver_max);
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 2;
  } catch (const LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
