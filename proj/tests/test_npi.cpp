#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "lalgebra/error.hpp"
#include "lalgebra/fixtures.hpp"
#include "lalgebra/npi.hpp"
#include "oracles.hpp"

using namespace lalgebra;
using testing::binary_algebra;

TEST_CASE("idempotency and the constant-endomorphism test coincide") {
  // exhaustive over all binary tables on two elements
  for (int bits = 0; bits < 16; ++bits) {
    std::vector<int> t{bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1};
    FiniteAlgebra a = binary_algebra(2, t);
    CHECK(is_idempotent(a) == constant_endomorphism_check(a));
  }
  CHECK(is_idempotent(fixtures::lz2()));
  CHECK_FALSE(is_idempotent(binary_algebra(2, {1, 0, 0, 1})));
}

TEST_CASE("algebraic preorder matches the naive closure oracle") {
  for (const FiniteAlgebra& a :
       {fixtures::sl2(), fixtures::lz2(), fixtures::ch3(),
        binary_algebra(3, {1, 1, 1, 2, 2, 2, 0, 0, 0})}) {
    CHECK(algebraic_preorder(a) == oracles::preorder_oracle(a));
  }
}

TEST_CASE("left-zero band: naturally preordered but not a semilattice") {
  FiniteAlgebra lz2 = fixtures::lz2();
  CHECK(is_naturally_preordered(lz2));
  CHECK(is_npi(lz2));
  // x·y = x makes every pair mutually reachable, so the preorder is total
  Relation pre = algebraic_preorder(lz2);
  CHECK(pre.contains(0, 1));
  CHECK(pre.contains(1, 0));
  CHECK_FALSE(pre.is_antisymmetric());
  CHECK(is_sigma_semilattice(lz2) == std::nullopt);
  CHECK(sigma_semilattice_order_search(lz2).empty());
}

TEST_CASE("semilattice recognition on chains") {
  auto s2 = is_sigma_semilattice(fixtures::sl2());
  REQUIRE(s2.has_value());
  CHECK(s2->join_table() == fixtures::sl2().table(0));
  CHECK(s2->leq(0, 1));
  CHECK_FALSE(s2->leq(1, 0));

  auto s3 = is_sigma_semilattice(fixtures::ch3());
  REQUIRE(s3.has_value());
  CHECK(s3->join_table() == fixtures::ch3().table(0));

  // the algebraic order is the unique witnessing order on these
  CHECK(sigma_semilattice_order_search(fixtures::sl2()).size() == 1);
  CHECK(sigma_semilattice_order_search(fixtures::ch3()).size() == 1);
  Relation order = sigma_semilattice_order_search(fixtures::sl2())[0];
  CHECK(order.contains(0, 1));
  CHECK_FALSE(order.contains(1, 0));

  FiniteAlgebra big(fixtures::sig1(), 5, {std::vector<int>(25, 0)});
  CHECK_THROWS_AS(sigma_semilattice_order_search(big), UsageError);

  Signature unary({{"g", 1}});
  FiniteAlgebra u(unary, 2, {{0, 1}});
  CHECK_THROWS_AS(is_sigma_semilattice(u), UsageError);
}

TEST_CASE("the three characterizations agree and produce a witness") {
  // a non-chain example: 0 and 1 incomparable below a top, x·y = join
  FiniteAlgebra lambda = binary_algebra(3, {0, 2, 2, 2, 1, 2, 2, 2, 2});
  auto ch = npi_characterization(lambda);
  CHECK(ch.monotone);
  CHECK(ch.bounded);
  CHECK(ch.quotient);
  CHECK(ch.all());
  REQUIRE(ch.witness.has_value());
  CHECK(ch.witness->equivalence == Congruence::identity(3));
  CHECK(ch.witness->quotient.join_table() == lambda.table(0));
  CHECK(is_sigma_semilattice(lambda).has_value());

  // left-zero band: all three hold, quotient collapses to a point
  auto lz = npi_characterization(fixtures::lz2());
  CHECK(lz.all());
  REQUIRE(lz.witness.has_value());
  CHECK(lz.witness->equivalence == Congruence::total(2));
  CHECK(lz.witness->quotient.size() == 1);

  // idempotent but not naturally preordered: all three must fail together
  int found_failing = 0;
  for (int bits = 0; bits < 81; ++bits) {
    int b = bits;
    std::vector<int> t(9);
    t[0] = 0; t[4] = 1; t[8] = 2;
    for (int cell : {1, 2, 3, 5}) {
      t[cell] = b % 3;
      b /= 3;
    }
    t[6] = t[2];
    t[7] = t[5];
    FiniteAlgebra a = binary_algebra(3, t);
    auto c = npi_characterization(a);
    CHECK(c.monotone == c.bounded);
    CHECK(c.bounded == c.quotient);
    CHECK(c.monotone == is_naturally_preordered(a));
    if (!c.monotone) ++found_failing;
  }
  CHECK(found_failing > 0);

  FiniteAlgebra succ = binary_algebra(3, {1, 1, 1, 2, 2, 2, 0, 0, 0});
  CHECK_THROWS_AS(npi_characterization(succ), UsageError);
}

TEST_CASE("equivalence classes of the symmetrized preorder are closed") {
  CHECK(equivalence_classes_closed(fixtures::lz2()));
  CHECK(equivalence_classes_closed(fixtures::ch3()));
  FiniteAlgebra succ = binary_algebra(3, {1, 1, 1, 2, 2, 2, 0, 0, 0});
  CHECK_THROWS_AS(equivalence_classes_closed(succ), UsageError);
}

TEST_CASE("semilattices induce algebras with matching preorder") {
  FiniteAlgebra a = semilattice_to_npi(fixtures::chain2(), fixtures::sig1());
  CHECK(a == fixtures::sl2());

  // ternary symbol: operation is the iterated join of its three arguments
  Signature tern({{"m", 3}});
  FiniteAlgebra t = semilattice_to_npi(fixtures::chain2(), tern);
  CHECK(t.apply(0, {0, 1, 0}) == 1);
  CHECK(t.apply(0, {0, 0, 0}) == 0);
  CHECK(is_npi(t));
  auto back = is_sigma_semilattice(t);
  REQUIRE(back.has_value());
  CHECK(back->join_table() == fixtures::chain2().join_table());

  Signature unary({{"g", 1}});
  CHECK_THROWS_AS(semilattice_to_npi(fixtures::chain2(), unary), UsageError);
}
