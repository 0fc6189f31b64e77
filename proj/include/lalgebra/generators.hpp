#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lalgebra/decomposition.hpp"
#include "lalgebra/inductive.hpp"
#include "lalgebra/lallement.hpp"

namespace lalgebra {

/// Deterministic 64-bit generator (splitmix64).  Not std::mt19937 plus
/// distributions on purpose: the stream and every derived draw are fully
/// specified here, so seeded reports are byte-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform-ish draw in [0, n); n must be positive.
  int below(int n);
  int range(int lo, int hi);  // inclusive bounds

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v.at(below(static_cast<int>(v.size())));
  }

 private:
  std::uint64_t state_;
};

/// All idempotent naturally preordered algebras over the one-binary-symbol
/// signature on {0..n-1}, cached per n (intended for n <= 3).
const std::vector<FiniteAlgebra>& all_npi_sig1(int n);

FiniteAlgebra random_algebra(Rng& rng, const Signature& sig, int size);
FiniteAlgebra random_npi_sig1(Rng& rng, int max_size);
Semilattice random_semilattice(Rng& rng, int max_size);

/// A covering with the given bounds: a random npi base, nonempty fibers,
/// and tables drawn fiber-compatibly (the value of an operation is a random
/// element of the fiber over the base result), so the projection is a
/// homomorphism by construction.
Covering random_covering(Rng& rng, int max_base, int max_total);

/// A random member of enumerate_preserving(cov).
PreservingTuple random_preserving_tuple(Rng& rng, const Covering& cov);

/// A random valid semi-inductive system: either the quotient system of a
/// random covering at a random preserving tuple, or the system view of a
/// random inductive system.  max_ambient bounds every |M_i|.
LallementSystem random_semi_inductive_system(Rng& rng, int max_base, int max_ambient);

/// Random inductive system: small semilattice base, random algebras over
/// the one-binary-symbol signature, transitions drawn from the hom sets
/// along cover pairs and composed along chains (resampling until every
/// needed hom set is nonempty).
InductiveSystem random_inductive_system(Rng& rng, int max_base, int max_alg);

/// Random surjective base-collapse of an inductive system, with components
/// searched among commuting families; together with its source and target
/// this is a valid inductive morphism.  Returns nullopt when the bounded
/// search finds none.
std::optional<InductiveMorphism> random_inductive_morphism_from(Rng& rng,
                                                                const InductiveSystem& src,
                                                                int tries);

/// All labeled morphisms from src to tgt over the base map t, found by
/// per-index candidate filtering and a product search over component
/// families (capped by the morphism-search limit).
std::vector<LabeledMorphism> enumerate_labeled_morphisms(const LallementSystem& src,
                                                         const LallementSystem& tgt,
                                                         const Homomorphism& t);

/// A composable pair (g, f) of labeled morphisms, g after f.  Built from a
/// chain of inductive systems when the searches succeed, with identity
/// morphisms as the deterministic fallback, so it never fails.
struct ComposablePair {
  LabeledMorphism f;  // A -> B
  LabeledMorphism g;  // B -> C
};

ComposablePair random_composable_pair(Rng& rng, int max_base, int max_alg);

/// A covering plus a targeted morphism into the sum of a semi-inductive
/// system over a possibly different base.  Mixes unit-style instances
/// (target = own quotient system) with searched instances whose target is
/// the quotient system of a second covering over a collapsed base.
struct FactorizationInstance {
  Covering cov;
  LallementSystem target;
  TargetedMorphism morphism;
};

FactorizationInstance random_factorization_instance(Rng& rng, int max_total,
                                                    int max_base, int max_target_ambient);

}  // namespace lalgebra
