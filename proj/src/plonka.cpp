#include "lalgebra/plonka.hpp"

#include <algorithm>
#include <string>

#include "lalgebra/error.hpp"

namespace lalgebra {

PlonkaAlgebra::PlonkaAlgebra(FiniteAlgebra algebra, std::vector<int> d_table)
    : algebra_(std::move(algebra)), d_(std::move(d_table)) {
  int n = algebra_.size();
  if (static_cast<int>(d_.size()) != n * n) {
    throw UsageError("partition-function table must have size*size entries");
  }
  for (int v : d_) {
    if (v < 0 || v >= n) throw UsageError("partition-function entry outside carrier");
  }
}

int iterate_D(const PlonkaAlgebra& p, std::span<const int> xs) {
  if (xs.empty()) throw UsageError("iterate_D needs a nonempty sequence");
  int acc = xs[0];
  for (size_t k = 1; k < xs.size(); ++k) acc = p.d(acc, xs[k]);
  return acc;
}

std::vector<Violation> validate_plonka(const PlonkaAlgebra& p) {
  std::vector<Violation> out;
  const auto& alg = p.algebra();
  int n = alg.size();

  for (int x = 0; x < n; ++x) {
    if (p.d(x, x) != x) {
      out.push_back({"D1", "D(" + std::to_string(x) + ", " + std::to_string(x) + ") = " +
                               std::to_string(p.d(x, x))});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (p.d(x, p.d(y, z)) != p.d(p.d(x, y), z)) {
          out.push_back({"D2", "transitivity-style law fails at (" + std::to_string(x) + ", " +
                                   std::to_string(y) + ", " + std::to_string(z) + ")"});
        }
        if (p.d(x, p.d(y, z)) != p.d(x, p.d(z, y))) {
          out.push_back({"D3", "inner-argument symmetry fails at (" + std::to_string(x) + ", " +
                                   std::to_string(y) + ", " + std::to_string(z) + ")"});
        }
      }
    }
  }
  for (int s = 0; s < alg.signature().symbol_count(); ++s) {
    int arity = alg.signature().symbol(s).arity;
    const std::string& name = alg.signature().symbol(s).name;
    std::vector<int> shifted(arity);
    for_each_tuple(n, arity, [&](std::span<const int> args) {
      for (int y = 0; y < n; ++y) {
        for (int k = 0; k < arity; ++k) shifted[k] = p.d(args[k], y);
        int lhs = p.d(alg.apply(s, args), y);
        int rhs = alg.apply(s, std::span<const int>(shifted.data(), shifted.size()));
        if (lhs != rhs) {
          out.push_back({"D4", "'" + name + "' does not distribute from the left over D at y=" +
                                   std::to_string(y)});
        }
        int l5 = p.d(y, alg.apply(s, args));
        int r5 = p.d(y, iterate_D(p, args));
        if (l5 != r5) {
          out.push_back({"D5", "absorbing '" + name + "' under D differs from the iterate at y=" +
                                   std::to_string(y)});
        }
      }
    });
  }
  return out;
}

Congruence induced_congruence(const PlonkaAlgebra& p) {
  if (!validate_plonka(p).empty()) {
    throw UsageError("induced congruence is defined for valid partition functions only");
  }
  int n = p.algebra().size();
  auto related = [&](int x, int y) { return p.d(x, y) == x && p.d(y, x) == y; };
  for (int x = 0; x < n; ++x) {
    if (!related(x, x)) throw ConsistencyError("mutual-absorption relation lost reflexivity");
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (related(x, y) && related(y, z) && !related(x, z)) {
          throw ConsistencyError("mutual-absorption relation lost transitivity");
        }
      }
    }
  }
  std::vector<int> labels(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = x;
    for (int y = 0; y < n; ++y) {
      if (related(x, y)) labels[x] = std::min(labels[x], y);
    }
  }
  Congruence c{labels};
  if (!is_congruence(p.algebra(), c)) {
    throw ConsistencyError("mutual-absorption classes are not compatible with the operations");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (c.related(x, y) && c.related(u, v) && !c.related(p.d(x, u), p.d(y, v))) {
            throw ConsistencyError("mutual-absorption classes are not compatible with D");
          }
        }
      }
    }
  }
  return c;
}

int PlonkaSumResult::flat_index(int i, int a) const {
  if (i < 0 || i >= static_cast<int>(offsets.size()) - 1) {
    throw UsageError("block index out of range");
  }
  if (a < 0 || a >= offsets[i + 1] - offsets[i]) throw UsageError("element outside block");
  return offsets[i] + a;
}

std::pair<int, int> PlonkaSumResult::unflatten(int p) const {
  if (p < 0 || p >= sum.algebra().size()) throw UsageError("sum position out of range");
  int i = 0;
  while (offsets[i + 1] <= p) ++i;
  return {p - offsets[i], i};
}

PlonkaSumResult plonka_sum(const InductiveSystem& ind) {
  auto bad = validate_inductive(ind);
  if (!bad.empty()) {
    throw UsageError("cannot sum an invalid inductive system: " + bad.front().message);
  }
  const Signature& sig = ind.algebras.at(0).signature();
  if (!sig.is_plural()) {
    throw UsageError("sum construction needs a symbol of arity >= 2");
  }
  int n = ind.base.size();
  std::vector<int> offsets(n + 1, 0);
  for (int i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + ind.algebras[i].size();
  int total = offsets[n];
  std::vector<std::pair<int, int>> elems(total);  // (element, block)
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < ind.algebras[i].size(); ++x) elems[offsets[i] + x] = {x, i};
  }

  std::vector<std::vector<int>> tables(sig.symbol_count());
  for (int s = 0; s < sig.symbol_count(); ++s) {
    int arity = sig.symbol(s).arity;
    std::vector<int> moved(arity);
    for_each_tuple(total, arity, [&](std::span<const int> args) {
      int join = elems[args[0]].second;
      for (int k = 1; k < arity; ++k) join = ind.base.join(join, elems[args[k]].second);
      for (int k = 0; k < arity; ++k) {
        auto [x, i] = elems[args[k]];
        moved[k] = ind.transition(i, join)[x];
      }
      int v = ind.algebras[join].apply(s, std::span<const int>(moved.data(), moved.size()));
      tables[s].push_back(offsets[join] + v);
    });
  }
  FiniteAlgebra sum_alg(ind.algebras[0].signature_ptr(), total, std::move(tables));

  std::vector<int> d(static_cast<size_t>(total) * total);
  for (int pp = 0; pp < total; ++pp) {
    auto [x, j] = elems[pp];
    for (int qq = 0; qq < total; ++qq) {
      int k = elems[qq].second;
      int jk = ind.base.join(j, k);
      d[pp * total + qq] = offsets[jk] + ind.transition(j, jk)[x];
    }
  }

  FiniteAlgebra base_alg = semilattice_to_npi(ind.base, sig);
  std::vector<int> proj(total);
  for (int pp = 0; pp < total; ++pp) proj[pp] = elems[pp].second;
  Homomorphism projection(sum_alg, base_alg, std::move(proj));
  return PlonkaSumResult{PlonkaAlgebra(std::move(sum_alg), std::move(d)), std::move(offsets),
                         std::move(projection), ind};
}

ThetaResult theta(const PlonkaSumResult& s) {
  auto d_bad = validate_plonka(s.sum);
  if (!d_bad.empty()) {
    throw ConsistencyError("sum partition function broke a law: " + d_bad.front().message);
  }
  Congruence phi = induced_congruence(s.sum);
  Congruence ker = kernel(s.projection);
  if (!(phi == ker)) {
    throw ConsistencyError(
        "partition-function congruence differs from the projection kernel; "
        "the collapse theorem would be falsified");
  }
  QuotientResult q = quotient(s.sum.algebra(), phi);
  // block -> base index of any member (well defined: phi = kernel)
  auto reps = phi.representatives();
  std::vector<int> iso_map(phi.block_count());
  for (int b = 0; b < phi.block_count(); ++b) iso_map[b] = s.projection(reps[b]);
  Homomorphism iso(q.algebra, s.projection.target(), std::move(iso_map));
  if (!iso.is_bijective()) {
    throw ConsistencyError("collapse map is not a bijection onto the base");
  }
  for (int p = 0; p < s.sum.algebra().size(); ++p) {
    if (iso(phi.block_of(p)) != s.projection(p)) {
      throw ConsistencyError("collapse map does not commute with the projections");
    }
  }
  return ThetaResult{std::move(phi), std::move(q), std::move(iso)};
}

Homomorphism plonka_sum_morphism(const InductiveMorphism& m, const PlonkaSumResult& src_sum,
                                 const PlonkaSumResult& tgt_sum) {
  auto bad = validate_inductive_morphism(m);
  if (!bad.empty()) {
    throw UsageError("cannot sum an invalid inductive morphism: " + bad.front().message);
  }
  if (!(src_sum.system == m.source) || !(tgt_sum.system == m.target)) {
    throw UsageError("sums do not belong to the morphism endpoints");
  }
  std::vector<int> map(src_sum.sum.algebra().size());
  for (int p = 0; p < src_sum.sum.algebra().size(); ++p) {
    auto [x, i] = src_sum.unflatten(p);
    map[p] = tgt_sum.flat_index(m.base_map[i], m.components[i][x]);
  }
  return Homomorphism(src_sum.sum.algebra(), tgt_sum.sum.algebra(), std::move(map));
}

}  // namespace lalgebra
