#pragma once

#include <vector>

#include "lalgebra/algebra.hpp"

namespace lalgebra {

/// A finite join-semilattice given by its join table.  Construction checks
/// idempotency, commutativity and associativity and throws UsageError
/// otherwise, so a Semilattice value is always genuine.
class Semilattice {
 public:
  Semilattice() = default;
  Semilattice(int size, std::vector<int> join_table);

  int size() const { return size_; }
  int join(int x, int y) const { return table_.at(x * size_ + y); }
  bool leq(int x, int y) const { return join(x, y) == y; }
  const std::vector<int>& join_table() const { return table_; }

  /// Pairs (x, y) with x <= y, as a Relation-style list of sorted downsets.
  std::vector<int> downset(int y) const;

  friend bool operator==(const Semilattice&, const Semilattice&) = default;

 private:
  int size_ = 0;
  std::vector<int> table_;
};

/// All join tables on {0..n-1}, i.e. every idempotent commutative
/// associative binary table, in lexicographic table order.  Intended for
/// small n (used by generators with n <= 3).
std::vector<Semilattice> enumerate_semilattices(int n);

}  // namespace lalgebra
