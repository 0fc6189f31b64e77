#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lalgebra/congruence.hpp"
#include "lalgebra/hom.hpp"
#include "lalgebra/lallement.hpp"
#include "lalgebra/sum.hpp"

namespace lalgebra {

/// A surjective homomorphism f : total -> base onto an idempotent,
/// naturally preordered algebra.  Fibers of f are closed in the total
/// algebra (idempotency makes singleton-block preimages subuniverses).
class Covering {
 public:
  Covering() = default;
  Covering(FiniteAlgebra base, FiniteAlgebra total, std::vector<int> map);

  const FiniteAlgebra& base() const { return base_; }
  const FiniteAlgebra& total() const { return total_; }
  const std::vector<int>& map() const { return map_; }
  const Relation& preorder() const { return preorder_; }
  /// Sorted fiber over base element i.
  const std::vector<int>& fiber(int i) const { return fibers_.at(i); }
  const std::vector<std::vector<int>>& fibers() const { return fibers_; }

  friend bool operator==(const Covering& a, const Covering& b);

 private:
  FiniteAlgebra base_, total_;
  std::vector<int> map_;
  Relation preorder_;
  std::vector<std::vector<int>> fibers_;
};

/// The algebra collecting all fibers over the downset of j: members are the
/// total-carrier elements whose image lies below j, ordered by (image,
/// element), with the operation inherited from the total algebra (the
/// downset union is closed because f is a monotone-image homomorphism).
struct DownsetAlgebra {
  int index = 0;                   // j
  std::vector<int> downset;        // sorted i with i <= j
  std::vector<int> members;        // total-carrier elements, fiber blocks in order
  std::vector<int> offsets;        // per downset position, start into members
  FiniteAlgebra algebra;           // relabelled to {0..members.size()-1}

  /// Position of total element `a` embedded from fiber i.
  int embed(int i, int a) const;
  /// Inverse: position -> (total element, fiber index).
  std::pair<int, int> unembed(int p) const;
};

DownsetAlgebra downset_algebra(const Covering& cov, int j);

/// One congruence per base element, each on the corresponding downset
/// algebra.
using PreservingTuple = std::vector<Congruence>;

/// Congruence tuples as per-index lists: the full set is the cross product.
struct PreservingFamily {
  std::vector<std::vector<Congruence>> per_index;

  std::int64_t count() const;
  /// Cross product in per-index lexicographic order; refuses with
  /// LimitError past the configured tuple cap.
  std::vector<PreservingTuple> materialize() const;
  bool contains(const PreservingTuple& t) const;
};

/// All congruences on each downset algebra that stay injective on the
/// embedded top fiber (so the fiber survives the quotient intact).
PreservingFamily enumerate_preserving(const Covering& cov);

bool is_preserving(const Covering& cov, const std::vector<DownsetAlgebra>& downsets,
                   const PreservingTuple& theta);

/// The quotient system at a preserving tuple: the i-th pair is the image of
/// fiber i inside downset_algebra(i)/theta[i], and transporting a block from
/// i to j re-embeds a fiber representative into downset j's quotient.
/// Always valid and semi-inductive.
LallementSystem build_system(const Covering& cov, const PreservingTuple& theta);

/// The comparison morphism from the covering to the sum of its quotient
/// system: base map is the identity, and the total map sends a to (image of
/// a in downset f(a)'s quotient, f(a)).  Its square with the projections
/// commutes exactly.
struct UnitMorphism {
  Homomorphism base_map;     // identity on the base
  Homomorphism total_map;    // total -> sum.algebra
  SumResult sum;             // sum of build_system(cov, theta)
};

UnitMorphism unit_morphism(const Covering& cov, const PreservingTuple& theta);

/// A morphism from a covering into the sum of a target system over another
/// base: a surjective base map t and a total map h into the sum carrier
/// with t . f = projection . h.
struct TargetedMorphism {
  Homomorphism base_map;       // t : cov.base -> target.base
  std::vector<int> total_map;  // h : cov.total -> flat sum positions
};

/// Derived data for factorizations: the target's sum and, per base element
/// j, the composite map r_j : downset_algebra(j) -> N_{t(j)} obtained by
/// pushing a member through h at its own fiber index and transporting.
/// Each r_j is verified to be a homomorphism.
struct TargetAnalysis {
  SumResult target_sum;
  std::vector<DownsetAlgebra> downsets;
  std::vector<std::vector<int>> r;       // per j, map over downset members
  std::vector<Congruence> r_kernels;     // kernel of each r_j
};

TargetAnalysis analyze_target(const Covering& cov, const LallementSystem& target,
                              const TargetedMorphism& m);

/// The tuples through which (t, h) factors: per index, congruences that
/// refine the kernel of r_i and preserve the embedded fiber.  Contains the
/// all-singleton tuple, so it is never empty.
PreservingFamily admissible_for_target(const Covering& cov, const LallementSystem& target,
                                       const TargetedMorphism& m);

/// The factorizing morphism at an admissible tuple: base map t and
/// components v_i(block) = r_i(representative).  Construction checks
/// representative independence, validity as a labeled morphism, and the
/// exact equation  sum_morphism(result) . unit = h ; a failure in any of
/// these is a ConsistencyError (they are consequences of admissibility).
struct Factorization {
  LabeledMorphism morphism;   // from build_system(cov, theta) to target
  UnitMorphism unit;
};

Factorization factorize(const Covering& cov, const LallementSystem& target,
                        const TargetedMorphism& m, const PreservingTuple& theta);

/// Exhaustively confirm that the factorizing morphism is the only labeled
/// morphism composing with the unit to (t, h).  The base map is forced
/// exactly (the unit's base map is an identity), so the search runs over
/// per-index component maps, pre-filtered by the pointwise consequences of
/// the equation, then checked for morphismhood.
struct UniquenessResult {
  enum class Status { verified, failed, not_checked };
  Status status = Status::not_checked;
  std::int64_t candidates = 0;  // families examined (or bound that refused)
  std::int64_t found = 0;       // equation-satisfying morphisms
};

UniquenessResult verify_uniqueness(const Covering& cov, const LallementSystem& target,
                                   const TargetedMorphism& m, const PreservingTuple& theta);

/// Search for a block-respecting isomorphism between the sum of the
/// covering's all-singleton-tuple system and the original total algebra
/// (block i must land on fiber i).  Returns the first one found in
/// per-block lexicographic order.
std::optional<Homomorphism> find_block_iso(const Covering& cov, const SumResult& sum);

}  // namespace lalgebra
