#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "lalgebra/decomposition.hpp"
#include "lalgebra/error.hpp"
#include "lalgebra/fixtures.hpp"

using namespace lalgebra;
using testing::binary_algebra;
using testing::LimitGuard;

namespace {

PreservingTuple delta_tuple(const Covering& cov) {
  PreservingTuple t;
  for (int i = 0; i < cov.base().size(); ++i) {
    t.push_back(Congruence::identity(
        static_cast<int>(downset_algebra(cov, i).members.size())));
  }
  return t;
}

TargetedMorphism as_targeted(const UnitMorphism& u) {
  return {u.base_map, u.total_map.map()};
}

}  // namespace

TEST_CASE("covering construction validates base, map and surjectivity") {
  FiniteAlgebra ch3 = fixtures::ch3();
  FiniteAlgebra sl2 = fixtures::sl2();

  CHECK_NOTHROW(Covering(sl2, ch3, {0, 0, 1}));
  CHECK_THROWS_AS(Covering(binary_algebra(2, {1, 0, 0, 1}), ch3, {0, 0, 1}), UsageError);
  CHECK_THROWS_AS(Covering(sl2, ch3, {0, 1, 0}), UsageError);  // not a homomorphism
  CHECK_THROWS_AS(Covering(sl2, ch3, {0, 0, 0}), UsageError);  // not surjective
  CHECK_THROWS_AS(Covering(sl2, ch3, {0, 0}), UsageError);     // wrong length

  Covering cov = fixtures::cov1();
  CHECK(cov.fiber(0) == std::vector<int>{0, 1});
  CHECK(cov.fiber(1) == std::vector<int>{2});
  CHECK(cov.preorder().contains(0, 1));
  CHECK_FALSE(cov.preorder().contains(1, 0));
  CHECK(cov == Covering(sl2, ch3, {0, 0, 1}));
}

TEST_CASE("downset algebras collect fibers below an index") {
  Covering cov = fixtures::cov1();

  DownsetAlgebra d0 = downset_algebra(cov, 0);
  CHECK(d0.downset == std::vector<int>{0});
  CHECK(d0.members == std::vector<int>{0, 1});
  CHECK(d0.algebra == fixtures::sl2());
  CHECK(d0.embed(0, 1) == 1);
  CHECK(d0.unembed(1) == std::pair<int, int>{1, 0});

  DownsetAlgebra d1 = downset_algebra(cov, 1);
  CHECK(d1.downset == std::vector<int>{0, 1});
  CHECK(d1.members == std::vector<int>{0, 1, 2});
  CHECK(d1.algebra == fixtures::ch3());
  CHECK(d1.embed(1, 2) == 2);
  CHECK(d1.embed(0, 0) == 0);
  CHECK(d1.unembed(2) == std::pair<int, int>{2, 1});
}

TEST_CASE("preserving tuples keep every top fiber intact") {
  Covering cov = fixtures::cov1();
  PreservingFamily fam = enumerate_preserving(cov);

  REQUIRE(fam.per_index.size() == 2);
  CHECK(fam.per_index[0].size() == 1);  // collapsing the 2-fiber is out
  CHECK(fam.per_index[1].size() == 4);  // the 1-fiber survives any congruence
  CHECK(fam.count() == 4);

  auto tuples = fam.materialize();
  REQUIRE(tuples.size() == 4);
  CHECK(tuples[0][1] == Congruence::total(3));
  CHECK(tuples[3][1] == Congruence::identity(3));
  for (const auto& t : tuples) CHECK(t[0] == Congruence::identity(2));

  PreservingTuple delta = delta_tuple(cov);
  CHECK(fam.contains(delta));
  CHECK_FALSE(fam.contains({Congruence::total(2), Congruence::identity(3)}));

  std::vector<DownsetAlgebra> downs{downset_algebra(cov, 0), downset_algebra(cov, 1)};
  CHECK(is_preserving(cov, downs, delta));
  CHECK_FALSE(is_preserving(cov, downs, {Congruence::total(2), Congruence::identity(3)}));

  LimitGuard guard;
  limits().pcgr_tuples = 3;
  CHECK_THROWS_AS(fam.materialize(), LimitError);
}

TEST_CASE("the quotient system at the all-singleton tuple rebuilds the covering") {
  Covering cov = fixtures::cov1();
  LallementSystem sys = build_system(cov, delta_tuple(cov));

  CHECK(sys.base() == cov.base());
  CHECK(sys.pair(0).ambient == fixtures::sl2());
  CHECK(sys.pair(0).members == std::vector<int>{0, 1});
  CHECK(sys.pair(1).ambient == fixtures::ch3());
  CHECK(sys.pair(1).members == std::vector<int>{2});
  CHECK(sys.transition(0, 1) == std::vector<int>{0, 1});
  CHECK(validate_system(sys).empty());
  CHECK(is_semi_inductive(sys));

  UnitMorphism unit = unit_morphism(cov, delta_tuple(cov));
  CHECK(unit.base_map.map() == std::vector<int>{0, 1});
  CHECK(unit.total_map.map() == std::vector<int>{0, 1, 2});
  CHECK(unit.total_map.is_bijective());
  CHECK(unit.sum.algebra.table(0) == fixtures::ch3().table(0));

  auto iso = find_block_iso(cov, unit.sum);
  REQUIRE(iso.has_value());
  CHECK(iso->map() == std::vector<int>{0, 1, 2});

  // projection square: f = projection . total_map
  for (int a = 0; a < cov.total().size(); ++a) {
    CHECK(cov.map()[a] == unit.sum.projection(unit.total_map(a)));
  }
}

TEST_CASE("collapsing a lower fiber still quotients cleanly") {
  Covering cov = fixtures::cov1();
  PreservingTuple theta{Congruence::identity(2), Congruence({0, 0, 1})};
  LallementSystem sys = build_system(cov, theta);

  CHECK(sys.pair(0).ambient == fixtures::sl2());
  CHECK(sys.pair(1).ambient == fixtures::sl2());  // ch3 / {0,1 | 2}
  CHECK(sys.pair(1).members == std::vector<int>{1});
  CHECK(sys.transition(0, 1) == std::vector<int>{0, 0});
  CHECK(validate_system(sys).empty());
  CHECK(is_semi_inductive(sys));

  UnitMorphism unit = unit_morphism(cov, theta);
  CHECK(unit.total_map.map() == std::vector<int>{0, 1, 2});
  CHECK(unit.sum.algebra.size() == 3);
}

TEST_CASE("targeted morphisms factor through every admissible tuple") {
  Covering cov = fixtures::cov1();
  PreservingTuple theta{Congruence::identity(2), Congruence({0, 0, 1})};
  LallementSystem target = build_system(cov, theta);
  TargetedMorphism h = as_targeted(unit_morphism(cov, theta));

  TargetAnalysis an = analyze_target(cov, target, h);
  CHECK(an.r[0] == std::vector<int>{0, 1});
  CHECK(an.r[1] == std::vector<int>{0, 0, 1});
  CHECK(an.r_kernels[0] == Congruence::identity(2));
  CHECK(an.r_kernels[1] == Congruence({0, 0, 1}));

  PreservingFamily adm = admissible_for_target(cov, target, h);
  CHECK(adm.per_index[0].size() == 1);
  CHECK(adm.per_index[1].size() == 2);  // identity and the kernel itself
  CHECK(adm.count() == 2);
  CHECK(adm.contains(delta_tuple(cov)));
  CHECK(adm.contains(theta));

  for (const auto& tuple : adm.materialize()) {
    Factorization fact = factorize(cov, target, h, tuple);
    CHECK(validate_labeled(fact.morphism).empty());
    // the factorization composes back to h on every total element
    Homomorphism vbar = sum_morphism(fact.morphism);
    for (int a = 0; a < cov.total().size(); ++a) {
      CHECK(vbar(fact.unit.total_map(a)) == h.total_map[a]);
    }
    UniquenessResult uq = verify_uniqueness(cov, target, h, tuple);
    CHECK(uq.status == UniquenessResult::Status::verified);
    CHECK(uq.found == 1);
  }
}

TEST_CASE("uniqueness search reports its exact bounds") {
  Covering cov = fixtures::cov1();
  PreservingTuple delta = delta_tuple(cov);
  LallementSystem target = build_system(cov, delta);
  TargetedMorphism h = as_targeted(unit_morphism(cov, delta));

  UniquenessResult uq = verify_uniqueness(cov, target, h, delta);
  CHECK(uq.status == UniquenessResult::Status::verified);
  CHECK(uq.candidates == 6);  // maps ch3 -> ch3 fixing the top element
  CHECK(uq.found == 1);

  LimitGuard guard;
  limits().uniqueness_search = 1;
  UniquenessResult refused = verify_uniqueness(cov, target, h, delta);
  CHECK(refused.status == UniquenessResult::Status::not_checked);
  CHECK(refused.found == 0);
  CHECK(refused.candidates > 1);
}
