#pragma once

#include <vector>

#include "lalgebra/algebra.hpp"

namespace lalgebra {

class Congruence;

/// Is `map` (length src.size, values in tgt's carrier) structure-preserving?
/// Signature mismatch, wrong length or out-of-range values are usage errors,
/// not a false answer.
bool is_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                     const std::vector<int>& map);

/// A homomorphism with its endpoints.  Validated eagerly: constructing one
/// from a non-homomorphic map throws UsageError.
class Homomorphism {
 public:
  Homomorphism(FiniteAlgebra source, FiniteAlgebra target, std::vector<int> map);

  const FiniteAlgebra& source() const { return source_; }
  const FiniteAlgebra& target() const { return target_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int x) const { return map_.at(x); }

  bool is_surjective() const;
  bool is_injective() const;
  bool is_bijective() const { return is_surjective() && is_injective(); }

  friend bool operator==(const Homomorphism& a, const Homomorphism& b);

 private:
  FiniteAlgebra source_, target_;
  std::vector<int> map_;
};

Homomorphism identity_hom(const FiniteAlgebra& a);

/// g after f; throws UsageError unless f.target equals g.source structurally.
Homomorphism compose_homs(const Homomorphism& g, const Homomorphism& f);

Subuniverse image_subuniverse(const Homomorphism& h);

/// Partition of the source identifying elements with equal images.
Congruence kernel(const Homomorphism& h);

/// All homomorphisms src -> tgt, in lexicographic map order.  Refuses with
/// LimitError when tgt.size^src.size exceeds the morphism-search limit.
std::vector<std::vector<int>> enumerate_homomorphisms(const FiniteAlgebra& src,
                                                      const FiniteAlgebra& tgt);

}  // namespace lalgebra
