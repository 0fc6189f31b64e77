#include <doctest.h>

#include <map>
#include <vector>

#include "helpers.hpp"
#include "lalgebra/error.hpp"
#include "lalgebra/fixtures.hpp"
#include "lalgebra/sum.hpp"

using namespace lalgebra;

namespace {

using TransitionMap = std::map<std::pair<int, int>, std::vector<int>>;

LallementSystem plfix_system() { return inductive_to_lallement(fixtures::plfix()); }

}  // namespace

TEST_CASE("the sum of a point below a band") {
  SumResult sum = lallement_sum(plfix_system());

  CHECK(sum.offsets == std::vector<int>{0, 1, 3});
  CHECK(sum.algebra.size() == 3);
  // block 0 absorbs from the left, block 1 is a left-zero band
  CHECK(sum.algebra.table(0) == std::vector<int>{0, 1, 1, 1, 1, 1, 2, 2, 2});
  CHECK(sum.projection.map() == std::vector<int>{0, 1, 1});
  CHECK(sum.projection.target() == fixtures::sl2());
  CHECK(sum.projection.is_surjective());

  CHECK(sum.flat_index(1, 1) == 2);
  CHECK(sum.flat_index(0, 0) == 0);
  CHECK(sum.unflatten(2) == std::pair<int, int>{1, 1});
  CHECK(sum.unflatten(1) == std::pair<int, int>{0, 1});
  CHECK(sum.block_of(2) == 1);
  CHECK(sum.block_size(0) == 1);
  CHECK(sum.block_size(1) == 2);

  // a hand-built system with the same shape sums to the same algebra
  TransitionMap f{{{0, 0}, {0}}, {{0, 1}, {0}}, {{1, 1}, {0, 1}}};
  LallementSystem direct(fixtures::sl2(),
                         {{fixtures::triv1(), {0}}, {fixtures::lz2(), {0, 1}}}, f);
  CHECK(lallement_sum(direct).algebra == sum.algebra);
}

TEST_CASE("summing refuses invalid systems") {
  TransitionMap f{{{0, 0}, {0}}, {{0, 1}, {0}}, {{1, 1}, {1}}};
  LallementSystem bad(fixtures::sl2(), {{fixtures::triv1(), {0}}, {fixtures::lz2(), {1}}}, f);
  CHECK_FALSE(validate_system(bad).empty());
  CHECK_THROWS_AS(lallement_sum(bad), UsageError);
}

TEST_CASE("labeled morphisms act blockwise on sums") {
  LallementSystem sys = plfix_system();
  SumResult sum = lallement_sum(sys);

  LabeledMorphism id = identity_labeled(sys);
  Homomorphism h = sum_morphism(id);
  CHECK(h.map() == std::vector<int>{0, 1, 2});
  CHECK(count_induced_sum_morphisms(id) == 1);

  // collapse the band onto its bottom element
  LabeledMorphism squash{sys, sys, identity_hom(sys.base()), {{0}, {0, 0}}};
  REQUIRE(validate_labeled(squash).empty());
  Homomorphism hs = sum_morphism(squash);
  CHECK(hs.map() == std::vector<int>{0, 1, 1});
  CHECK(count_induced_sum_morphisms(squash) == 1);

  // projection square: base map after projection equals projection after map
  for (int p = 0; p < sum.algebra.size(); ++p) {
    CHECK(sum.projection(hs(p)) == squash.base_map(sum.projection(p)));
  }

  // constant-top component breaks naturality against the point's image
  LabeledMorphism invalid{sys, sys, identity_hom(sys.base()), {{0}, {1, 1}}};
  REQUIRE_FALSE(validate_labeled(invalid).empty());
  CHECK_THROWS_AS(sum_morphism(invalid), UsageError);
}

TEST_CASE("blocks of a semi-inductive sum are subalgebras") {
  SumResult sum = lallement_sum(plfix_system());

  SumComponent c0 = sum_component(sum, 0);
  CHECK(c0.block.members() == std::vector<int>{0});
  CHECK(c0.to_member == std::vector<int>{0});

  SumComponent c1 = sum_component(sum, 1);
  CHECK(c1.block.members() == std::vector<int>{1, 2});
  CHECK(c1.to_member == std::vector<int>{0, 1});
  // the block carries the band structure
  CHECK(induced_algebra(sum.algebra, {1, 2}) == fixtures::lz2());

  // non-semi-inductive systems have no block decomposition
  TransitionMap f{{{0, 0}, {0, 0}}};
  LallementSystem skew(fixtures::triv1(), {{fixtures::lz2(), {0, 1}}}, f);
  REQUIRE(validate_system(skew).empty());
  SumResult skew_sum = lallement_sum(skew);
  CHECK_THROWS_AS(sum_component(skew_sum, 0), UsageError);
}
