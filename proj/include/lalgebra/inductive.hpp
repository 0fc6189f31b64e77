#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lalgebra/algebra.hpp"
#include "lalgebra/semilattice.hpp"

namespace lalgebra {

/// A semilattice-indexed family of algebras with transition homomorphisms
/// f[i][j] : algebras[i] -> algebras[j] for every i <= j, functorial in the
/// order (identities on the diagonal, composition along chains).
struct InductiveSystem {
  Semilattice base;
  std::vector<FiniteAlgebra> algebras;
  // keyed by (i, j) with i <= j in the base order; full carrier maps
  std::map<std::pair<int, int>, std::vector<int>> transitions;

  const std::vector<int>& transition(int i, int j) const;

  friend bool operator==(const InductiveSystem&, const InductiveSystem&) = default;
};

/// Empty iff: one shared signature; transitions keyed exactly by the order
/// pairs; every transition a homomorphism; diagonal transitions identities;
/// f[j][k] after f[i][j] equals f[i][k] whenever i <= j <= k.
std::vector<Violation> validate_inductive(const InductiveSystem& sys);

/// A morphism of inductive systems over a base map xi : base_A -> base_B
/// (join-preserving), with components w[i] : A_i -> B_{xi(i)} commuting with
/// transitions.
struct InductiveMorphism {
  InductiveSystem source, target;
  std::vector<int> base_map;
  std::vector<std::vector<int>> components;
};

std::vector<Violation> validate_inductive_morphism(const InductiveMorphism& m);

}  // namespace lalgebra
