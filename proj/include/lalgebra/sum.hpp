#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lalgebra/congruence.hpp"
#include "lalgebra/hom.hpp"
#include "lalgebra/lallement.hpp"

namespace lalgebra {

/// The disjoint-union algebra of a system: carrier is the concatenation of
/// the members lists (block i spans offsets[i]..offsets[i+1]-1, elements in
/// increasing member order), and an operation first transports every
/// argument into the ambient algebra of the combined index, applies it
/// there, and tags the result with that index.
struct SumResult {
  FiniteAlgebra algebra;
  std::vector<int> offsets;      // size index_count + 1
  Homomorphism projection;       // sum -> base, (a, i) -> i
  LallementSystem system;        // the summed system

  /// Flat position of member value `a` of block `i`.
  int flat_index(int i, int a) const;
  /// Inverse: flat position -> (member value, block index).
  std::pair<int, int> unflatten(int p) const;
  int block_of(int p) const;
  int block_size(int i) const { return offsets.at(i + 1) - offsets.at(i); }
};

/// Throws UsageError when validate_system(sys) is nonempty.
SumResult lallement_sum(const LallementSystem& sys);

/// The homomorphism between sums induced blockwise by a labeled morphism:
/// (a, i) -> (u_i(a), t(i)).  Its projection square commutes with the base
/// map.  Throws UsageError on an invalid morphism.
Homomorphism sum_morphism(const LabeledMorphism& m);

/// Count all maps between the two sum carriers that are homomorphisms,
/// satisfy the projection square, and restrict blockwise to the morphism's
/// components.  The blockwise restriction pins every value, so the answer
/// is 0 or 1; exactly one is expected (the sum_morphism).
std::int64_t count_induced_sum_morphisms(const LabeledMorphism& m);

/// Block i of a semi-inductive system's sum, with the carrier bijection
/// onto the members of A_i inside M_i.  Construction verifies the block is
/// closed and the first-component map is an isomorphism onto the induced
/// subalgebra; a failure is a ConsistencyError.
struct SumComponent {
  Subuniverse block;           // inside sum.algebra
  std::vector<int> to_member;  // position within block -> member value in M_i
};

SumComponent sum_component(const SumResult& sum, int i);

}  // namespace lalgebra
