#pragma once

#include <span>
#include <vector>

#include "lalgebra/algebra.hpp"
#include "lalgebra/congruence.hpp"
#include "lalgebra/hom.hpp"
#include "lalgebra/inductive.hpp"
#include "lalgebra/npi.hpp"

namespace lalgebra {

/// An algebra with a distinguished binary table D (the candidate partition
/// function).  Construction checks shape only; the five laws live in
/// validate_plonka.
class PlonkaAlgebra {
 public:
  PlonkaAlgebra() = default;
  PlonkaAlgebra(FiniteAlgebra algebra, std::vector<int> d_table);

  const FiniteAlgebra& algebra() const { return algebra_; }
  int d(int x, int y) const { return d_.at(x * algebra_.size() + y); }
  const std::vector<int>& d_table() const { return d_; }

  friend bool operator==(const PlonkaAlgebra&, const PlonkaAlgebra&) = default;

 private:
  FiniteAlgebra algebra_;
  std::vector<int> d_;
};

/// Iterated D over a nonempty sequence, new elements folded in on the
/// right: x0, then D(x0, x1), then D(D(x0, x1), x2), ...
int iterate_D(const PlonkaAlgebra& p, std::span<const int> xs);

/// The five partition-function laws, tagged D1..D5:
///   D1  D(x, x) = x
///   D2  D(x, D(y, z)) = D(D(x, y), z)
///   D3  D(x, D(y, z)) = D(x, D(z, y))
///   D4  D(F(xs), y) = F(D(x_k, y) for each k)
///   D5  D(y, F(xs)) = D(y, iterate_D(xs))
std::vector<Violation> validate_plonka(const PlonkaAlgebra& p);

/// The relation x ~ y iff D(x, y) = x and D(y, x) = y.  For a valid
/// partition function this is a congruence compatible with D as well; both
/// facts are re-checked and a failure is a ConsistencyError.  Precondition:
/// validate_plonka(p) empty (UsageError otherwise).
Congruence induced_congruence(const PlonkaAlgebra& p);

/// The sum of an inductive system with its canonical partition function:
/// carrier as in lallement_sum of the system view, operations transport all
/// arguments to the join index, and D((x, j), (y, k)) transports x to j v k.
struct PlonkaSumResult {
  PlonkaAlgebra sum;
  std::vector<int> offsets;
  Homomorphism projection;   // onto the base semilattice viewed as an algebra
  InductiveSystem system;

  int flat_index(int i, int a) const;
  std::pair<int, int> unflatten(int p) const;
};

/// Precondition: validate_inductive empty and a plural signature.
PlonkaSumResult plonka_sum(const InductiveSystem& ind);

/// The structure-collapse isomorphism: the congruence induced by the sum's
/// partition function must equal the projection's kernel exactly (else
/// ConsistencyError), and the map "block -> base index" is then a bijective
/// homomorphism from the quotient onto the base-as-algebra, commuting with
/// the projections.
struct ThetaResult {
  Congruence phi;             // induced by the sum's D
  QuotientResult quotient;    // sum / phi
  Homomorphism iso;           // quotient -> base-as-algebra
};

ThetaResult theta(const PlonkaSumResult& sum);

/// The sum-level homomorphism of an inductive morphism:
/// (x, i) -> (w_i(x), xi(i)).
Homomorphism plonka_sum_morphism(const InductiveMorphism& m,
                                 const PlonkaSumResult& src_sum,
                                 const PlonkaSumResult& tgt_sum);

}  // namespace lalgebra
