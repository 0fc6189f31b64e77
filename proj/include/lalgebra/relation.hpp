#pragma once

#include <cstdint>
#include <vector>

#include "lalgebra/algebra.hpp"

namespace lalgebra {

/// A binary relation on {0..size-1} as a dense boolean matrix.
/// contains(b, a) reads "b is below a" throughout this library.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int size);

  int size() const { return size_; }
  bool contains(int b, int a) const { return bits_[idx(b, a)] != 0; }
  void set(int b, int a, bool v = true) { bits_[idx(b, a)] = v ? 1 : 0; }

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;

  Relation reflexive_transitive_closure() const;

  /// Sorted list of b with b below a.
  std::vector<int> below(int a) const;
  /// Sorted list of c with a below c.
  std::vector<int> above(int a) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  int idx(int b, int a) const { return b * size_ + a; }
  int size_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// The step relation of an algebra: (b, a) is in it exactly when some
/// operation applied to a tuple containing b yields a.  Requires every
/// arity >= 1 (guaranteed by Signature) and at least one symbol.
Relation predecessor_relation(const FiniteAlgebra& a);

/// Reflexive-transitive closure of the step relation; the algebra's
/// intrinsic preorder.
Relation algebraic_preorder(const FiniteAlgebra& a);

}  // namespace lalgebra
