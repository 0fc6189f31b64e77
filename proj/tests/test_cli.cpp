#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "helpers.hpp"
#include "lalgebra/io.hpp"
#include "lalgebra/sum.hpp"

using json = nlohmann::ordered_json;
using namespace lalgebra;
using testing::fixture_path;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

const char* binary() { return std::getenv("LALGEBRA_BIN"); }

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string(binary()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = "/tmp/lalgebra_cli_" + name;
  std::ofstream f(path, std::ios::binary);
  REQUIRE(f.good());
  f << text;
  return path;
}

}  // namespace

TEST_CASE("exit codes separate pass, violation and usage") {
  REQUIRE(binary() != nullptr);

  RunResult ok = run("check npi " + fixture_path("sl2.json"));
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out).at("passed") == true);

  std::string bad_hom = temp_file(
      "badhom.json",
      serialize(Document{"homomorphism", "h",
                         HomDocument{fixtures::sl2(), fixtures::sl2(), {1, 0}}, {}}));
  RunResult fail = run("check hom " + bad_hom);
  CHECK(fail.code == 1);
  json jf = json::parse(fail.out);
  CHECK(jf.at("passed") == false);
  bool witnessed = false;
  for (const auto& c : jf.at("checks")) {
    if (c.contains("witness")) {
      CHECK(c.at("witness").contains("image_of_value"));
      witnessed = true;
    }
  }
  CHECK(witnessed);

  FiniteAlgebra out_of_range(fixtures::sig1(), 2, {{0, 9, 1, 1}});
  std::string bad_alg = temp_file("badalg.json", serialize(algebra_document(out_of_range, "")));
  RunResult range = run("check algebra " + bad_alg);
  CHECK(range.code == 1);
  CHECK(range.out.find("entry-range") != std::string::npos);

  CHECK(run("check npi /tmp/definitely_not_here.json").code == 2);
  CHECK(run("check frobnicate " + fixture_path("sl2.json")).code == 2);
  // wrong document kind for the property
  CHECK(run("check npi " + fixture_path("chain2.json")).code == 2);
  // bare invocation without a subcommand
  CHECK(run("").code == 2);
}

TEST_CASE("congruence enumeration and subalgebra filtering") {
  REQUIRE(binary() != nullptr);

  RunResult all = run("congruences " + fixture_path("ch3.json"));
  CHECK(all.code == 0);
  json ja = json::parse(all.out);
  CHECK(ja.at("count") == 4);
  CHECK(ja.at("congruences")[0] == json::array({0, 0, 0}));
  CHECK(ja.at("congruences")[3] == json::array({0, 1, 2}));

  RunResult pres = run("congruences " + fixture_path("ch3.json") + " --preserving 0,1");
  CHECK(pres.code == 0);
  json jp = json::parse(pres.out);
  CHECK(jp.at("count") == 2);
  CHECK(jp.at("congruences")[0] == json::array({0, 1, 1}));

  // members must form a closed subset
  FiniteAlgebra succ(fixtures::sig1(), 3, {{1, 1, 1, 2, 2, 2, 0, 0, 0}});
  std::string succ_path = temp_file("succ.json", serialize(algebra_document(succ, "succ")));
  CHECK(run("congruences " + succ_path + " --preserving 0").code == 2);
}

TEST_CASE("order matrices for a chain") {
  REQUIRE(binary() != nullptr);

  RunResult r = run("order " + fixture_path("ch3.json"));
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  json chain = json::array({json::array({1, 1, 1}), json::array({0, 1, 1}),
                            json::array({0, 0, 1})});
  CHECK(j.at("predecessor") == chain);
  CHECK(j.at("preorder") == chain);
}

TEST_CASE("sums from system bundles") {
  REQUIRE(binary() != nullptr);

  RunResult pl = run("sum plonka " + fixture_path("plfix.json"));
  CHECK(pl.code == 0);
  json jp = json::parse(pl.out);
  CHECK(jp.at("kind") == "sum_result");
  CHECK(jp.at("offsets") == json::array({0, 1, 3}));
  CHECK(jp.at("partition_function") == json::array({0, 1, 1, 1, 1, 1, 2, 2, 2}));

  LallementSystem sys = inductive_to_lallement(fixtures::plfix());
  std::string sys_path = temp_file("plsys.json", serialize(system_document(sys, "plsys")));
  RunResult ll = run("sum lallement " + sys_path);
  CHECK(ll.code == 0);
  json jl = json::parse(ll.out);
  CHECK(jl.at("algebra").at("tables").at("·") ==
        json::array({0, 1, 1, 1, 1, 1, 2, 2, 2}));
  CHECK_FALSE(jl.contains("partition_function"));

  // an invalid system reports its violations and exits 1
  LallementSystem bad(fixtures::sl2(), {{fixtures::triv1(), {0}}, {fixtures::lz2(), {1}}},
                      {{{0, 0}, {0}}, {{0, 1}, {0}}, {{1, 1}, {1}}});
  std::string bad_path = temp_file("badsys.json", serialize(system_document(bad, "bad")));
  RunResult rb = run("sum lallement " + bad_path);
  CHECK(rb.code == 1);
  CHECK(json::parse(rb.out).at("passed") == false);

  CHECK(run("sum nonsense " + sys_path).code == 2);
}

TEST_CASE("decompose walks the preserving tuples of a covering") {
  REQUIRE(binary() != nullptr);
  std::string cov = fixture_path("cov1.json");

  RunResult all = run("decompose " + cov + " --all");
  CHECK(all.code == 0);
  json ja = json::parse(all.out);
  CHECK(ja.at("count") == 4);
  CHECK(ja.at("per_index_counts") == json::array({1, 4}));

  RunResult def = run("decompose " + cov);
  CHECK(def.code == 0);
  json jd = json::parse(def.out);
  CHECK(jd.at("unit").at("total_map") == json::array({0, 1, 2}));
  CHECK(jd.at("system").at("kind") == "lallement_system");

  RunResult collapsed = run("decompose " + cov + " --theta \"0,1;0,0,1\"");
  CHECK(collapsed.code == 0);
  json jc = json::parse(collapsed.out);
  CHECK(jc.at("theta") == json::array({json::array({0, 1}), json::array({0, 0, 1})}));

  // collapsing a top fiber is not preserving
  RunResult refused = run("decompose " + cov + " --theta \"0,0;0,1,2\"");
  CHECK(refused.code == 1);
  CHECK(json::parse(refused.out).at("passed") == false);

  CHECK(run("decompose " + cov + " --theta \"0,1;0,0,1\" --all").code == 2);
}

TEST_CASE("factorize reports one verified factorization per admissible tuple") {
  REQUIRE(binary() != nullptr);

  Covering cov = fixtures::cov1();
  PreservingTuple delta{Congruence::identity(2), Congruence::identity(3)};
  UnitMorphism unit = unit_morphism(cov, delta);
  std::string target_path = temp_file(
      "target.json", serialize(system_document(build_system(cov, delta), "target")));
  std::string morph_path = temp_file(
      "morph.json",
      serialize(Document{"covering_morphism", "m",
                         TargetedMorphismDocument{unit.base_map.map(), unit.total_map.map()},
                         {}}));

  RunResult r = run("factorize " + fixture_path("cov1.json") + " " + target_path + " " +
                    morph_path);
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("count") == 1);
  CHECK(j.at("passed") == true);
  REQUIRE(j.at("factorizations").size() == 1);
  CHECK(j.at("factorizations")[0].at("unique") == "verified");
  CHECK(j.at("factorizations")[0].at("found") == 1);
}

TEST_CASE("verify suites are seeded and deterministic") {
  REQUIRE(binary() != nullptr);

  RunResult a = run("verify theta --instances 5 --seed 11");
  RunResult b = run("verify theta --instances 5 --seed 11");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  json ja = json::parse(a.out);
  CHECK(ja.at("suite") == "theta");
  CHECK(ja.at("instances") == 5);
  CHECK(ja.at("passed") == true);

  RunResult small = run("verify prop5.2 --instances 3 --seed 7");
  CHECK(small.code == 0);
  CHECK(json::parse(small.out).at("suite") == "prop5.2");

  RunResult fixt = run("verify prop6.10 " + fixture_path("cov1.json") +
                       " --instances 2 --seed 3");
  CHECK(fixt.code == 0);

  CHECK(run("verify no-such-suite").code == 2);
  CHECK(run("verify theta " + fixture_path("cov1.json")).code == 2);
}

TEST_CASE("limit overrides arrive through the environment") {
  REQUIRE(binary() != nullptr);

  CHECK(run("check npi " + fixture_path("sl2.json"), "LALGEBRA_LIMITS='max_arity=1'").code ==
        2);
  CHECK(run("congruences " + fixture_path("ch3.json"),
            "LALGEBRA_LIMITS='congruence_enum=2'")
            .code == 2);
  CHECK(run("check npi " + fixture_path("sl2.json"), "LALGEBRA_LIMITS='nonsense'").code == 2);
  // harmless override leaves behavior intact
  CHECK(run("congruences " + fixture_path("ch3.json"),
            "LALGEBRA_LIMITS='congruence_enum=8'")
            .code == 0);
}
