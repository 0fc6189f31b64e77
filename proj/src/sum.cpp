#include "lalgebra/sum.hpp"

#include <algorithm>
#include <string>

#include "lalgebra/error.hpp"

namespace lalgebra {

int SumResult::flat_index(int i, int a) const {
  const auto& mem = system.pair(i).members;
  auto it = std::lower_bound(mem.begin(), mem.end(), a);
  if (it == mem.end() || *it != a) {
    throw UsageError("element " + std::to_string(a) + " is not a member of block " +
                     std::to_string(i));
  }
  return offsets[i] + static_cast<int>(it - mem.begin());
}

std::pair<int, int> SumResult::unflatten(int p) const {
  int i = block_of(p);
  return {system.pair(i).members[p - offsets[i]], i};
}

int SumResult::block_of(int p) const {
  if (p < 0 || p >= algebra.size()) throw UsageError("sum position out of range");
  int i = 0;
  while (offsets[i + 1] <= p) ++i;
  return i;
}

SumResult lallement_sum(const LallementSystem& sys) {
  auto bad = validate_system(sys);
  if (!bad.empty()) {
    throw UsageError("cannot sum an invalid system: " + bad.front().message);
  }
  int n = sys.index_count();
  std::vector<int> offsets(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    offsets[i + 1] = offsets[i] + static_cast<int>(sys.pair(i).members.size());
  }
  int total = offsets[n];

  // position -> (member value, block)
  std::vector<std::pair<int, int>> elems(total);
  for (int i = 0; i < n; ++i) {
    const auto& mem = sys.pair(i).members;
    for (size_t p = 0; p < mem.size(); ++p) {
      elems[offsets[i] + p] = {mem[p], i};
    }
  }

  const auto& base = sys.base();
  const Signature& sig = base.signature();
  std::vector<std::vector<int>> tables(sig.symbol_count());
  for (int s = 0; s < sig.symbol_count(); ++s) {
    int arity = sig.symbol(s).arity;
    std::vector<int> idx(arity), transported(arity);
    for_each_tuple(total, arity, [&](std::span<const int> args) {
      for (int k = 0; k < arity; ++k) idx[k] = elems[args[k]].second;
      int i = base.apply(s, std::span<const int>(idx.data(), idx.size()));
      for (int k = 0; k < arity; ++k) {
        transported[k] = sys.transport(idx[k], i, elems[args[k]].first);
      }
      int v = sys.pair(i).ambient.apply(
          s, std::span<const int>(transported.data(), transported.size()));
      // condition "a" of a valid system puts v back among the members
      const auto& memi = sys.pair(i).members;
      auto it = std::lower_bound(memi.begin(), memi.end(), v);
      if (it == memi.end() || *it != v) {
        throw ConsistencyError("operation left the members of a validated system");
      }
      tables[s].push_back(offsets[i] + static_cast<int>(it - memi.begin()));
    });
  }

  FiniteAlgebra sum_alg(base.signature_ptr(), total, std::move(tables));
  std::vector<int> proj(total);
  for (int p = 0; p < total; ++p) proj[p] = elems[p].second;
  Homomorphism projection(sum_alg, base, std::move(proj));
  return SumResult{std::move(sum_alg), std::move(offsets), std::move(projection), sys};
}

Homomorphism sum_morphism(const LabeledMorphism& m) {
  auto bad = validate_labeled(m);
  if (!bad.empty()) {
    throw UsageError("cannot sum an invalid labeled morphism: " + bad.front().message);
  }
  SumResult src = lallement_sum(m.source);
  SumResult tgt = lallement_sum(m.target);
  std::vector<int> map(src.algebra.size());
  for (int p = 0; p < src.algebra.size(); ++p) {
    auto [a, i] = src.unflatten(p);
    map[p] = tgt.flat_index(m.base_map(i), m.components[i][a]);
  }
  return Homomorphism(src.algebra, tgt.algebra, std::move(map));
}

std::int64_t count_induced_sum_morphisms(const LabeledMorphism& m) {
  auto bad = validate_labeled(m);
  if (!bad.empty()) {
    throw UsageError("uniqueness check needs a valid labeled morphism: " + bad.front().message);
  }
  SumResult src = lallement_sum(m.source);
  SumResult tgt = lallement_sum(m.target);
  int sn = src.algebra.size();
  // Every sum position is a member of its block, so the blockwise
  // restriction determines the entire map; only that one candidate can
  // qualify, and the count reduces to checking it.
  std::vector<int> map(sn);
  for (int p = 0; p < sn; ++p) {
    auto [a, i] = src.unflatten(p);
    map[p] = tgt.flat_index(m.base_map(i), m.components[i][a]);
  }
  for (int p = 0; p < sn; ++p) {
    if (tgt.block_of(map[p]) != m.base_map(src.block_of(p))) return 0;
  }
  return is_homomorphism(src.algebra, tgt.algebra, map) ? 1 : 0;
}

SumComponent sum_component(const SumResult& sum, int i) {
  if (i < 0 || i >= sum.system.index_count()) throw UsageError("block index out of range");
  if (!is_semi_inductive(sum.system)) {
    throw UsageError("blocks are subalgebras only for semi-inductive systems");
  }
  std::vector<int> positions;
  for (int p = sum.offsets[i]; p < sum.offsets[i + 1]; ++p) positions.push_back(p);
  // throws (via Subuniverse) if the block is not closed; for a
  // semi-inductive system that would contradict the block structure theorem
  Subuniverse block = [&] {
    try {
      return Subuniverse(sum.algebra, positions);
    } catch (const UsageError&) {
      throw ConsistencyError("block " + std::to_string(i) +
                             " of a semi-inductive sum is not closed");
    }
  }();

  const auto& mem = sum.system.pair(i).members;
  std::vector<int> to_member(positions.size());
  for (size_t k = 0; k < positions.size(); ++k) to_member[k] = mem[k];

  // verify the first-component bijection is operation-preserving into the
  // member subalgebra of M_i
  const auto& mi = sum.system.pair(i).ambient;
  int bsize = static_cast<int>(positions.size());
  for (int s = 0; s < mi.signature().symbol_count(); ++s) {
    int arity = mi.signature().symbol(s).arity;
    std::vector<int> sargs(arity), margs(arity);
    bool ok = true;
    for_each_tuple(bsize, arity, [&](std::span<const int> pos) {
      if (!ok) return;
      for (int k = 0; k < arity; ++k) {
        sargs[k] = positions[pos[k]];
        margs[k] = to_member[pos[k]];
      }
      int sv = sum.algebra.apply(s, std::span<const int>(sargs.data(), sargs.size()));
      int mv = mi.apply(s, std::span<const int>(margs.data(), margs.size()));
      if (sv < sum.offsets[i] || sv >= sum.offsets[i + 1] || to_member[sv - sum.offsets[i]] != mv) {
        ok = false;
      }
    });
    if (!ok) {
      throw ConsistencyError("block " + std::to_string(i) +
                             " is not isomorphic to its member subalgebra");
    }
  }
  return SumComponent{std::move(block), std::move(to_member)};
}

}  // namespace lalgebra
