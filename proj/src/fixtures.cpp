#include "lalgebra/fixtures.hpp"

namespace lalgebra::fixtures {

Signature sig1() { return Signature({{"·", 2}}); }

FiniteAlgebra triv1() { return FiniteAlgebra(sig1(), 1, {{0}}); }

FiniteAlgebra sl2() { return FiniteAlgebra(sig1(), 2, {{0, 1, 1, 1}}); }

FiniteAlgebra ch3() { return FiniteAlgebra(sig1(), 3, {{0, 1, 2, 1, 1, 2, 2, 2, 2}}); }

FiniteAlgebra lz2() { return FiniteAlgebra(sig1(), 2, {{0, 0, 1, 1}}); }

Covering cov1() { return Covering(sl2(), ch3(), {0, 0, 1}); }

Semilattice chain2() { return Semilattice(2, {0, 1, 1, 1}); }

InductiveSystem plfix() {
  InductiveSystem sys;
  sys.base = chain2();
  sys.algebras = {triv1(), lz2()};
  sys.transitions[{0, 0}] = {0};
  sys.transitions[{0, 1}] = {0};
  sys.transitions[{1, 1}] = {0, 1};
  return sys;
}

}  // namespace lalgebra::fixtures
