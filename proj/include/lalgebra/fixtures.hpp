#pragma once

#include "lalgebra/decomposition.hpp"
#include "lalgebra/inductive.hpp"

namespace lalgebra::fixtures {

/// One binary symbol "·".
Signature sig1();

/// One-element algebra over sig1.
FiniteAlgebra triv1();
/// Two-element join semilattice as an algebra: x·y = max(x, y).
FiniteAlgebra sl2();
/// Three-element chain under max.
FiniteAlgebra ch3();
/// Left-zero band on two elements: x·y = x.
FiniteAlgebra lz2();

/// The chain collapse ch3 -> sl2 along [0, 0, 1].
Covering cov1();

/// Two-point inductive system over the 2-chain: the one-element algebra
/// below the left-zero band, transition 0 -> 0.
InductiveSystem plfix();

/// The 2-chain as a semilattice.
Semilattice chain2();

}  // namespace lalgebra::fixtures
