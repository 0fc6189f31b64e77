#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lalgebra/algebra.hpp"
#include "lalgebra/hom.hpp"
#include "lalgebra/inductive.hpp"
#include "lalgebra/relation.hpp"

namespace lalgebra {

/// A closed subset together with its ambient algebra: members is a sorted
/// subuniverse of ambient's carrier.
struct AlgebraicPair {
  FiniteAlgebra ambient;      // M_i
  std::vector<int> members;   // A_i

  friend bool operator==(const AlgebraicPair&, const AlgebraicPair&) = default;
};

/// A family of algebraic pairs indexed by the carrier of an idempotent,
/// naturally preordered base algebra, with transition maps
/// f[i][j] : A_i -> M_j for every preorder pair i <= j.
///
/// Construction enforces shape only (base is npi, index counts line up,
/// members are sorted subsets, transitions keyed by exactly the preorder
/// pairs with in-range values); the compatibility laws between transitions
/// and operations live in validate_system, so invalid-but-well-shaped
/// documents can be loaded and diagnosed.
class LallementSystem {
 public:
  LallementSystem() = default;
  LallementSystem(FiniteAlgebra base, std::vector<AlgebraicPair> pairs,
                  std::map<std::pair<int, int>, std::vector<int>> transitions);

  const FiniteAlgebra& base() const { return base_; }
  const Relation& preorder() const { return preorder_; }
  int index_count() const { return base_.size(); }
  const AlgebraicPair& pair(int i) const { return pairs_.at(i); }
  const std::vector<AlgebraicPair>& pairs() const { return pairs_; }

  const std::map<std::pair<int, int>, std::vector<int>>& transitions() const {
    return transitions_;
  }
  /// The map A_i -> M_j, indexed by position in pair(i).members.
  /// Throws UsageError when i <= j fails in the base preorder.
  const std::vector<int>& transition(int i, int j) const;
  /// Transition applied to a member value (not position) of A_i.
  int transport(int i, int j, int a) const;

  friend bool operator==(const LallementSystem&, const LallementSystem&);

 private:
  FiniteAlgebra base_;
  Relation preorder_;
  std::vector<AlgebraicPair> pairs_;
  std::map<std::pair<int, int>, std::vector<int>> transitions_;
};

/// Empty iff: every members list is closed in its ambient algebra; every
/// transition is a homomorphism on the induced subalgebra; applying an
/// operation to transported arguments lands back in the target members set
/// (condition "a"); and transporting commutes with the operations
/// (condition "b").
std::vector<Violation> validate_system(const LallementSystem& sys);

/// Every diagonal transition is the inclusion A_i -> M_i.
/// Precondition: validate_system(sys) is empty.
bool is_semi_inductive(const LallementSystem& sys);

/// Componentwise morphism between systems over one base: full-carrier
/// homomorphisms u[i] : M_i -> N_i mapping A_i into B_i and commuting with
/// transitions on members.
struct SystemMorphism {
  LallementSystem source, target;
  std::vector<std::vector<int>> components;
};

std::vector<Violation> validate_morphism(const SystemMorphism& m);

/// Pull a system over P back along a surjective npi homomorphism t : I -> P:
/// the i-th pair becomes the t(i)-th pair of `sys`, transitions likewise.
/// Validity is preserved (monotone image of a preorder pair is one).
LallementSystem relabel_system(const LallementSystem& sys, const Homomorphism& t);

/// A morphism between systems over different bases: a surjective base map t
/// plus a SystemMorphism from source into the relabelled target.
struct LabeledMorphism {
  LallementSystem source, target;
  Homomorphism base_map;                     // t : source.base -> target.base
  std::vector<std::vector<int>> components;  // u[i] : M_i -> N_{t(i)}

  friend bool operator==(const LabeledMorphism&, const LabeledMorphism&);
};

std::vector<Violation> validate_labeled(const LabeledMorphism& m);

LabeledMorphism identity_labeled(const LallementSystem& sys);

/// g after f.  Base maps compose; component i is g's component at f's base
/// image.  Throws UsageError unless f.target equals g.source.
LabeledMorphism compose_labeled(const LabeledMorphism& g, const LabeledMorphism& f);

/// View an inductive system as a system over the semilattice-as-algebra
/// base: every pair is (A_i, A_i) and the transitions are taken as given.
/// The result is always valid and semi-inductive.
LallementSystem inductive_to_lallement(const InductiveSystem& ind);

/// Lift a morphism of inductive systems to the corresponding labeled
/// morphism between their system views.  The base map must be join
/// preserving and surjective.
LabeledMorphism inductive_morphism_to_labeled(const InductiveMorphism& m);

}  // namespace lalgebra
