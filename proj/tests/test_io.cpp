#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "lalgebra/error.hpp"
#include "lalgebra/fixtures.hpp"
#include "lalgebra/io.hpp"
#include "lalgebra/plonka.hpp"
#include "lalgebra/sum.hpp"

using namespace lalgebra;
using testing::fixture_path;

namespace {

std::string msg_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

/// serialize . parse is the identity on serialize's own output.
void check_round_trip(const Document& doc) {
  std::string text = serialize(doc);
  auto parsed = parse_documents(text);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0] == doc);
  CHECK(serialize(parsed[0]) == text);
}

}  // namespace

TEST_CASE("fixture files parse to the built-in values") {
  auto sig = load_documents(fixture_path("sig1.json"));
  REQUIRE(sig.size() == 1);
  CHECK(sig[0].kind == "signature");
  CHECK(sig[0].name == "sig1");
  CHECK(std::get<Signature>(sig[0].body) == fixtures::sig1());

  CHECK(std::get<FiniteAlgebra>(load_documents(fixture_path("triv1.json"))[0].body) ==
        fixtures::triv1());
  CHECK(std::get<FiniteAlgebra>(load_documents(fixture_path("ch3.json"))[0].body) ==
        fixtures::ch3());
  CHECK(std::get<FiniteAlgebra>(load_documents(fixture_path("lz2.json"))[0].body) ==
        fixtures::lz2());

  auto sl2 = load_documents(fixture_path("sl2.json"));
  CHECK(std::get<FiniteAlgebra>(sl2[0].body) == fixtures::sl2());
  CHECK(sl2[0].element_names == std::vector<std::string>{"bottom", "top"});

  CHECK(std::get<Semilattice>(load_documents(fixture_path("chain2.json"))[0].body) ==
        fixtures::chain2());

  auto cov = load_documents(fixture_path("cov1.json"));
  REQUIRE(cov.size() == 3);
  CHECK(std::get<Covering>(single_document(cov, "covering").body) == fixtures::cov1());

  auto pl = load_documents(fixture_path("plfix.json"));
  CHECK(std::get<InductiveSystem>(single_document(pl, "inductive_system").body) ==
        fixtures::plfix());

  CHECK_THROWS_AS(load_documents(fixture_path("no_such_file.json")), FormatError);
}

TEST_CASE("single_document wants exactly one of a kind") {
  auto docs = load_documents(fixture_path("cov1.json"));
  CHECK(single_document(docs, "covering").name == "cov1");
  CHECK_THROWS_AS(single_document(docs, "semilattice"), FormatError);
  CHECK_THROWS_AS(single_document(docs, "algebra"), FormatError);  // two of them
}

TEST_CASE("every document kind survives a normalized round trip") {
  check_round_trip(Document{"signature", "sig1", fixtures::sig1(), {}});
  check_round_trip(algebra_document(fixtures::ch3(), "ch3"));
  check_round_trip(Document{"semilattice", "chain2", fixtures::chain2(), {}});
  check_round_trip(Document{"covering", "cov1", fixtures::cov1(), {}});

  LallementSystem sys = inductive_to_lallement(fixtures::plfix());
  check_round_trip(system_document(sys, "plsys"));
  check_round_trip(Document{"inductive_system", "plfix", fixtures::plfix(), {}});
  check_round_trip(Document{"labeled_morphism", "id", identity_labeled(sys), {}});
  check_round_trip(Document{
      "homomorphism", "h",
      HomDocument{fixtures::ch3(), fixtures::sl2(), {0, 0, 1}}, {}});
  check_round_trip(Document{
      "plonka_algebra", "pj", PlonkaAlgebra(fixtures::sl2(), {0, 1, 1, 1}), {}});

  SumResult ls = lallement_sum(sys);
  check_round_trip(sum_document(
      SumDocument{ls.algebra, ls.offsets, ls.projection.map(), sys.base(), std::nullopt},
      "lsum"));
  PlonkaSumResult ps = plonka_sum(fixtures::plfix());
  check_round_trip(sum_document(SumDocument{ps.sum.algebra(), ps.offsets,
                                            ps.projection.map(), ps.projection.target(),
                                            ps.sum.d_table()},
                                "psum"));
  check_round_trip(Document{
      "covering_morphism", "t", TargetedMorphismDocument{{0, 1}, {0, 1, 2}}, {}});

  // element names ride along
  Document named = algebra_document(fixtures::sl2(), "sl2");
  named.element_names = {"bottom", "top"};
  check_round_trip(named);
}

TEST_CASE("unvalidated kinds load even when the data is wrong") {
  // a map that is not a homomorphism still parses
  std::string text = serialize(Document{
      "homomorphism", "", HomDocument{fixtures::sl2(), fixtures::sl2(), {1, 0}}, {}});
  auto docs = parse_documents(text);
  CHECK(std::get<HomDocument>(docs[0].body).map == std::vector<int>{1, 0});

  // out-of-range table entries parse and are caught by the validator
  std::string bad = R"({
    "kind": "algebra",
    "signature": {"kind": "signature", "symbols": [{"name": "f", "arity": 2}]},
    "size": 2,
    "tables": {"f": [0, 5, 1, 1]}
  })";
  auto a = std::get<FiniteAlgebra>(parse_documents(bad)[0].body);
  auto v = validate_algebra(a);
  REQUIRE(v.size() == 1);
  CHECK(v[0].condition == "entry-range");
}

TEST_CASE("structural problems come back as format errors with context") {
  std::string broken = "{ \"kind\": ";
  CHECK_THROWS_AS(parse_documents(broken), FormatError);
  CHECK(msg_of([&] { parse_documents(broken); }).find("line 1") != std::string::npos);

  CHECK_THROWS_AS(parse_documents(R"({"kind": "gadget"})"), FormatError);
  CHECK_THROWS_AS(parse_documents(R"({"kind": "algebra", "size": 2})"), FormatError);
  CHECK_THROWS_AS(parse_documents(R"([1, 2, 3])"), FormatError);
  CHECK_THROWS_AS(parse_documents(R"({"kind": "signature", "symbols": []})"), FormatError);

  // tables must cover exactly the declared symbols
  CHECK_THROWS_AS(parse_documents(R"({
    "kind": "algebra",
    "signature": {"kind": "signature", "symbols": [{"name": "f", "arity": 2}]},
    "size": 2,
    "tables": {"f": [0, 0, 1, 1], "g": [0, 1]}
  })"),
                  FormatError);
  CHECK_THROWS_AS(parse_documents(R"({
    "kind": "algebra",
    "signature": {"kind": "signature", "symbols": [{"name": "f", "arity": 2}]},
    "size": 2,
    "tables": {},
    "elements": ["x", "y"]
  })"),
                  FormatError);

  // element labels must cover the carrier
  CHECK_THROWS_AS(parse_documents(R"({
    "kind": "algebra",
    "signature": {"kind": "signature", "symbols": [{"name": "f", "arity": 2}]},
    "size": 2,
    "tables": {"f": [0, 0, 1, 1]},
    "elements": ["only-one"]
  })"),
                  FormatError);

  // duplicate transitions in a system
  CHECK(msg_of([] {
          parse_documents(R"({
            "kind": "inductive_system",
            "base": {"kind": "semilattice", "size": 1, "join": [0]},
            "algebras": [{"kind": "algebra",
                          "signature": {"kind": "signature",
                                        "symbols": [{"name": "f", "arity": 2}]},
                          "size": 1, "tables": {"f": [0]}}],
            "transitions": [
              {"from": 0, "to": 0, "map": [0]},
              {"from": 0, "to": 0, "map": [0]}
            ]
          })");
        }).find("duplicate transition") != std::string::npos);
}

TEST_CASE("bundles resolve earlier names, refusing dangling or mistyped ones") {
  std::string good = R"({
    "documents": [
      {"kind": "algebra", "name": "a",
       "signature": {"kind": "signature", "symbols": [{"name": "f", "arity": 2}]},
       "size": 2, "tables": {"f": [0, 1, 1, 1]}},
      {"kind": "covering", "name": "c", "base": "a", "total": "a", "map": [0, 1]}
    ]
  })";
  auto docs = parse_documents(good);
  REQUIRE(docs.size() == 2);
  auto cov = std::get<Covering>(docs[1].body);
  CHECK(cov.base() == std::get<FiniteAlgebra>(docs[0].body));

  std::string dangling = R"({
    "documents": [
      {"kind": "covering", "name": "c", "base": "nope", "total": "nope", "map": [0, 1]}
    ]
  })";
  CHECK_THROWS_AS(parse_documents(dangling), FormatError);

  std::string mistyped = R"({
    "documents": [
      {"kind": "signature", "name": "s", "symbols": [{"name": "f", "arity": 2}]},
      {"kind": "covering", "name": "c", "base": "s", "total": "s", "map": [0, 1]}
    ]
  })";
  CHECK(msg_of([&] { parse_documents(mistyped); }).find("expected algebra") !=
        std::string::npos);
}
