#pragma once

#include <vector>

#include "lalgebra/algebra.hpp"
#include "lalgebra/hom.hpp"

namespace lalgebra {

/// A partition of {0..n-1} in restricted-growth normal form: block_ids[0] = 0
/// and each entry exceeds the running maximum by at most one.  Arbitrary
/// labelings are renumbered on construction, so equal partitions compare
/// equal as vectors.
class Congruence {
 public:
  Congruence() = default;
  /// Renormalizes any labeling (throws UsageError on an empty vector).
  explicit Congruence(std::vector<int> labels);

  static Congruence identity(int n);   // all blocks singletons
  static Congruence total(int n);      // one block

  int size() const { return static_cast<int>(block_ids_.size()); }
  int block_count() const { return blocks_; }
  int block_of(int x) const { return block_ids_.at(x); }
  const std::vector<int>& block_ids() const { return block_ids_; }
  bool related(int x, int y) const { return block_ids_.at(x) == block_ids_.at(y); }

  /// Blocks as sorted member lists, indexed by block id.
  std::vector<std::vector<int>> blocks() const;
  /// Least element of each block (the canonical representatives).
  std::vector<int> representatives() const;

  /// Every block of *this lies inside a block of `coarser`.
  bool refines(const Congruence& coarser) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend bool operator<(const Congruence& a, const Congruence& b) {
    return a.block_ids_ < b.block_ids_;
  }

 private:
  std::vector<int> block_ids_;
  int blocks_ = 0;
};

/// Compatibility of the partition with every operation of `a`.  Checked by
/// single-coordinate substitution, which suffices because the relation is
/// transitive.
bool is_congruence(const FiniteAlgebra& a, const Congruence& c);

struct QuotientResult {
  FiniteAlgebra algebra;     // carrier = block ids
  Homomorphism projection;   // x -> block_of(x)
};

/// Quotient algebra with tables computed on least-element representatives.
/// Throws UsageError when `c` is not a congruence of `a`.
QuotientResult quotient(const FiniteAlgebra& a, const Congruence& c);

/// All congruences of `a` in restricted-growth lexicographic order (the
/// total partition first, the identity partition last).  Refuses with
/// LimitError above the configured carrier cap.
std::vector<Congruence> enumerate_congruences(const FiniteAlgebra& a);

/// No two distinct members of `sub` share a block of `c`.
bool preserves_subalgebra(const Congruence& c, const Subuniverse& sub);

/// Induced map on quotients: for h : A -> B carrying c-related elements to
/// d-related elements, the block map [x]_c -> [h(x)]_d between A/c and B/d.
/// Throws UsageError when that compatibility fails.
Homomorphism quotient_hom(const Homomorphism& h, const Congruence& c, const Congruence& d);

}  // namespace lalgebra
