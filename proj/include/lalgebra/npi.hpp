#pragma once

#include <optional>
#include <vector>

#include "lalgebra/algebra.hpp"
#include "lalgebra/congruence.hpp"
#include "lalgebra/relation.hpp"
#include "lalgebra/semilattice.hpp"

namespace lalgebra {

/// F(i, i, ..., i) = i for every symbol and element.
bool is_idempotent(const FiniteAlgebra& a);

/// Every constant self-map is an endomorphism.  Agrees with is_idempotent
/// on every algebra; kept as a genuinely separate computation so the two
/// routes can be played against each other.
bool constant_endomorphism_check(const FiniteAlgebra& a);

/// Every operation is monotone for the algebraic preorder: coordinatewise
/// lower arguments give a lower result.
bool is_naturally_preordered(const FiniteAlgebra& a);

/// If the algebraic preorder is antisymmetric, has binary joins, and every
/// operation is the iterated join of its arguments, return that semilattice;
/// otherwise nullopt.  Requires a plural signature.
std::optional<Semilattice> is_sigma_semilattice(const FiniteAlgebra& a);

/// Exhaustive search over all partial orders on the carrier for orders
/// witnessing the semilattice structure of `a` (joins exist, operations are
/// iterated joins).  Only sensible for n <= 3 (64 candidate relations);
/// used to corroborate that the algebraic preorder is the unique witness.
std::vector<Relation> sigma_semilattice_order_search(const FiniteAlgebra& a);

struct NpiWitness {
  Relation preorder;            // the algebraic preorder of the algebra
  Congruence equivalence;       // x ~ y iff x <= y and y <= x
  Semilattice quotient;         // semilattice structure on the blocks
  FiniteAlgebra quotient_algebra;
};

/// The three equivalent faces of "naturally preordered" for an idempotent
/// algebra, each computed on its own:
///   monotone    — every operation isotone for the preorder;
///   bounded     — arguments below i give a result below i;
///   quotient    — the symmetrized preorder is a congruence whose quotient
///                 is a semilattice under its own operations.
/// Requires is_idempotent(a); the witness is present iff `quotient` holds.
struct NpiCharacterization {
  bool monotone = false;
  bool bounded = false;
  bool quotient = false;
  std::optional<NpiWitness> witness;
  bool all() const { return monotone && bounded && quotient; }
};

NpiCharacterization npi_characterization(const FiniteAlgebra& a);

/// Idempotent and naturally preordered — the algebras this library's
/// structure theory is built over.
bool is_npi(const FiniteAlgebra& a);

/// Every block of the symmetrized preorder is a closed subset.
/// Precondition: is_npi(a).
bool equivalence_classes_closed(const FiniteAlgebra& a);

/// Interpret every symbol of `sig` as the iterated join of `s`.  The result
/// is idempotent and naturally preordered, with preorder equal to the
/// semilattice order.
FiniteAlgebra semilattice_to_npi(const Semilattice& s, const Signature& sig);

}  // namespace lalgebra
