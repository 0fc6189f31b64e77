#include <doctest.h>

#include <set>
#include <vector>

#include "helpers.hpp"
#include "lalgebra/algebra.hpp"
#include "lalgebra/error.hpp"
#include "lalgebra/fixtures.hpp"

using namespace lalgebra;
using testing::binary_algebra;

TEST_CASE("signature rejects nullary, duplicate and over-limit symbols") {
  CHECK_THROWS_AS(Signature({{"c", 0}}), UsageError);
  CHECK_THROWS_AS(Signature({{"f", 2}, {"f", 1}}), UsageError);
  CHECK_THROWS_AS(Signature({{"f", 4}}), UsageError);  // default max_arity = 3

  Signature sig({{"f", 2}, {"g", 1}});
  CHECK(sig.symbol_count() == 2);
  CHECK(sig.index_of("g") == 1);
  CHECK(sig.index_of("h") == -1);
  CHECK(sig.max_arity() == 2);
  CHECK(sig.is_plural());
  CHECK_FALSE(Signature({{"g", 1}}).is_plural());
}

TEST_CASE("for_each_tuple runs in flat table order") {
  std::vector<std::vector<int>> seen;
  for_each_tuple(2, 2, [&](std::span<const int> t) {
    seen.emplace_back(t.begin(), t.end());
  });
  CHECK(seen == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  // arity 0 visits the empty tuple exactly once
  int calls = 0;
  for_each_tuple(3, 0, [&](std::span<const int> t) {
    CHECK(t.empty());
    ++calls;
  });
  CHECK(calls == 1);

  // the visit order matches flat_index order
  FiniteAlgebra a = fixtures::ch3();
  int expected = 0;
  for_each_tuple(3, 2, [&](std::span<const int> t) {
    CHECK(a.flat_index(t) == expected);
    ++expected;
  });
  CHECK(expected == 9);
}

TEST_CASE("construction checks shape, validate_algebra checks entries") {
  Signature sig = fixtures::sig1();

  CHECK_THROWS_AS(FiniteAlgebra(sig, 2, {{0, 1, 1}}), UsageError);        // short table
  CHECK_THROWS_AS(FiniteAlgebra(sig, 2, {}), UsageError);                 // missing table
  CHECK_THROWS_AS(FiniteAlgebra(sig, 0, {{}}), UsageError);               // empty carrier
  CHECK_THROWS_AS(FiniteAlgebra(sig, 2, {{0, 1, 1, 0}, {0, 1}}), UsageError);

  // out-of-range entries load fine and are reported by the validator
  FiniteAlgebra bad(sig, 2, {{0, 1, 5, -1}});
  auto v = validate_algebra(bad);
  REQUIRE(v.size() == 2);
  CHECK(v[0].condition == "entry-range");
  CHECK(v[1].condition == "entry-range");
  CHECK(validate_algebra(fixtures::ch3()).empty());
}

TEST_CASE("apply reads row-major tables and rejects bad arguments") {
  FiniteAlgebra a = fixtures::ch3();  // x·y = max(x, y)
  CHECK(a.apply(0, {0, 2}) == 2);
  CHECK(a.apply(0, {2, 1}) == 2);
  CHECK(a.apply(0, {1, 1}) == 1);

  CHECK_THROWS_AS(a.apply(0, {1}), UsageError);         // arity mismatch
  CHECK_THROWS_AS(a.apply(0, {1, 2, 0}), UsageError);
  CHECK_THROWS_AS(a.apply(0, {0, 3}), UsageError);      // argument out of range
  CHECK_THROWS_AS(a.apply(0, {-1, 0}), UsageError);

  // first argument varies slowest: table position of (1, 0) is 1*3 + 0
  std::vector<int> args{1, 0};
  CHECK(a.flat_index(std::span<const int>(args.data(), args.size())) == 3);
  CHECK(a.table(0)[3] == a.apply(0, {1, 0}));
}

TEST_CASE("algebra equality is structural") {
  CHECK(fixtures::sl2() == binary_algebra(2, {0, 1, 1, 1}));
  CHECK_FALSE(fixtures::sl2() == fixtures::lz2());
  CHECK_FALSE(fixtures::sl2() == fixtures::ch3());
  // same table, different symbol name
  FiniteAlgebra renamed(Signature({{"*", 2}}), 2, {{0, 1, 1, 1}});
  CHECK_FALSE(fixtures::sl2() == renamed);
}

TEST_CASE("subuniverses: membership, generation, induced algebra") {
  // successor-cycle algebra: x·y = x + 1 mod 3
  FiniteAlgebra succ = binary_algebra(3, {1, 1, 1, 2, 2, 2, 0, 0, 0});

  CHECK_FALSE(is_closed_subset(succ, {0}));
  CHECK(is_closed_subset(succ, {0, 1, 2}));
  CHECK(generated_subuniverse(succ, {0}).members() == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(generated_subuniverse(succ, {}), UsageError);

  FiniteAlgebra ch3 = fixtures::ch3();
  CHECK(is_closed_subset(ch3, {0, 1}));
  CHECK(is_closed_subset(ch3, {1, 2}));
  CHECK(is_closed_subset(ch3, {0, 2}));  // {0,2} is closed under max too
  CHECK(generated_subuniverse(ch3, {1}).members() == std::vector<int>{1});

  Subuniverse sub(ch3, {0, 1});
  CHECK(sub.contains(1));
  CHECK_FALSE(sub.contains(2));
  CHECK(sub.position(1) == 1);
  CHECK_THROWS_AS(sub.position(2), UsageError);
  CHECK_THROWS_AS(Subuniverse(succ, {0}), UsageError);        // not closed
  CHECK_THROWS_AS(Subuniverse(ch3, {}), UsageError);          // empty
  CHECK_THROWS_AS(Subuniverse(ch3, {0, 0}), UsageError);      // duplicate
  CHECK_THROWS_AS(Subuniverse(ch3, {0, 7}), UsageError);      // out of range

  // max on {0,1} inside ch3 relabels to sl2's table; on {1,2} likewise
  CHECK(induced_algebra(ch3, {0, 1}) == fixtures::sl2());
  CHECK(induced_algebra(ch3, {1, 2}).table(0) == fixtures::sl2().table(0));
}
