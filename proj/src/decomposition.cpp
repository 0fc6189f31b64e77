#include "lalgebra/decomposition.hpp"

#include <algorithm>
#include <string>

#include "lalgebra/error.hpp"
#include "lalgebra/limits.hpp"
#include "lalgebra/npi.hpp"

namespace lalgebra {

Covering::Covering(FiniteAlgebra base, FiniteAlgebra total, std::vector<int> map)
    : base_(std::move(base)), total_(std::move(total)), map_(std::move(map)) {
  if (!is_npi(base_)) {
    throw UsageError("covering base must be idempotent and naturally preordered");
  }
  Homomorphism h(total_, base_, map_);  // shape + structure preservation
  if (!h.is_surjective()) {
    throw UsageError("covering map must be surjective");
  }
  preorder_ = algebraic_preorder(base_);
  fibers_.assign(base_.size(), {});
  for (int a = 0; a < total_.size(); ++a) fibers_[map_[a]].push_back(a);
}

bool operator==(const Covering& a, const Covering& b) {
  return a.base_ == b.base_ && a.total_ == b.total_ && a.map_ == b.map_;
}

DownsetAlgebra downset_algebra(const Covering& cov, int j) {
  if (j < 0 || j >= cov.base().size()) throw UsageError("base element out of range");
  DownsetAlgebra out;
  out.index = j;
  out.downset = cov.preorder().below(j);
  for (int i : out.downset) {
    out.offsets.push_back(static_cast<int>(out.members.size()));
    for (int a : cov.fiber(i)) out.members.push_back(a);
  }
  int m = static_cast<int>(out.members.size());
  std::vector<int> pos_of(cov.total().size(), -1);
  for (int p = 0; p < m; ++p) pos_of[out.members[p]] = p;

  const auto& total = cov.total();
  std::vector<std::vector<int>> tables(total.signature().symbol_count());
  for (int s = 0; s < total.signature().symbol_count(); ++s) {
    int arity = total.signature().symbol(s).arity;
    std::vector<int> args(arity);
    for_each_tuple(m, arity, [&](std::span<const int> pos) {
      for (int k = 0; k < arity; ++k) args[k] = out.members[pos[k]];
      int v = total.apply(s, std::span<const int>(args.data(), args.size()));
      if (pos_of[v] < 0) {
        // the fibers over a downset are closed: images of arguments below j
        // stay below j because the base is naturally preordered
        throw ConsistencyError("downset union is not closed in the total algebra");
      }
      tables[s].push_back(pos_of[v]);
    });
  }
  out.algebra = FiniteAlgebra(total.signature_ptr(), m, std::move(tables));
  return out;
}

int DownsetAlgebra::embed(int i, int a) const {
  auto dit = std::lower_bound(downset.begin(), downset.end(), i);
  if (dit == downset.end() || *dit != i) {
    throw UsageError("index " + std::to_string(i) + " is not below " + std::to_string(index));
  }
  int dpos = static_cast<int>(dit - downset.begin());
  int lo = offsets[dpos];
  int hi = (dpos + 1 < static_cast<int>(offsets.size())) ? offsets[dpos + 1]
                                                         : static_cast<int>(members.size());
  for (int p = lo; p < hi; ++p) {
    if (members[p] == a) return p;
  }
  throw UsageError("element " + std::to_string(a) + " is not in the fiber over " +
                   std::to_string(i));
}

std::pair<int, int> DownsetAlgebra::unembed(int p) const {
  if (p < 0 || p >= static_cast<int>(members.size())) {
    throw UsageError("downset position out of range");
  }
  int dpos = 0;
  while (dpos + 1 < static_cast<int>(offsets.size()) && offsets[dpos + 1] <= p) ++dpos;
  return {members[p], downset[dpos]};
}

std::int64_t PreservingFamily::count() const {
  std::int64_t c = 1;
  for (const auto& list : per_index) c *= static_cast<std::int64_t>(list.size());
  return c;
}

std::vector<PreservingTuple> PreservingFamily::materialize() const {
  if (count() > limits().pcgr_tuples) {
    throw LimitError("preserving-tuple product " + std::to_string(count()) +
                     " exceeds the pcgr_tuples limit " + std::to_string(limits().pcgr_tuples));
  }
  std::vector<PreservingTuple> out;
  PreservingTuple current(per_index.size());
  std::vector<size_t> pick(per_index.size(), 0);
  while (true) {
    for (size_t i = 0; i < per_index.size(); ++i) current[i] = per_index[i][pick[i]];
    out.push_back(current);
    int k = static_cast<int>(per_index.size()) - 1;
    while (k >= 0 && pick[k] + 1 == per_index[k].size()) pick[k--] = 0;
    if (k < 0) break;
    ++pick[k];
  }
  return out;
}

bool PreservingFamily::contains(const PreservingTuple& t) const {
  if (t.size() != per_index.size()) return false;
  for (size_t i = 0; i < t.size(); ++i) {
    if (std::find(per_index[i].begin(), per_index[i].end(), t[i]) == per_index[i].end()) {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<DownsetAlgebra> all_downsets(const Covering& cov) {
  std::vector<DownsetAlgebra> out;
  out.reserve(cov.base().size());
  for (int j = 0; j < cov.base().size(); ++j) out.push_back(downset_algebra(cov, j));
  return out;
}

/// Positions of the fiber over i embedded at the top of its own downset
/// algebra.
std::vector<int> own_fiber_positions(const Covering& cov, const DownsetAlgebra& d) {
  std::vector<int> pos;
  pos.reserve(cov.fiber(d.index).size());
  for (int a : cov.fiber(d.index)) pos.push_back(d.embed(d.index, a));
  return pos;
}

bool injective_on(const Congruence& c, const std::vector<int>& positions) {
  for (size_t x = 0; x < positions.size(); ++x) {
    for (size_t y = x + 1; y < positions.size(); ++y) {
      if (c.related(positions[x], positions[y])) return false;
    }
  }
  return true;
}

}  // namespace

PreservingFamily enumerate_preserving(const Covering& cov) {
  PreservingFamily fam;
  for (const auto& d : all_downsets(cov)) {
    auto fiber_pos = own_fiber_positions(cov, d);
    std::vector<Congruence> keep;
    for (auto& c : enumerate_congruences(d.algebra)) {
      if (injective_on(c, fiber_pos)) keep.push_back(std::move(c));
    }
    fam.per_index.push_back(std::move(keep));
  }
  return fam;
}

bool is_preserving(const Covering& cov, const std::vector<DownsetAlgebra>& downsets,
                   const PreservingTuple& theta) {
  if (theta.size() != static_cast<size_t>(cov.base().size())) {
    throw UsageError("need one congruence per base element");
  }
  for (int i = 0; i < cov.base().size(); ++i) {
    const auto& d = downsets[i];
    if (theta[i].size() != d.algebra.size()) {
      throw UsageError("congruence " + std::to_string(i) + " has the wrong carrier");
    }
    if (!is_congruence(d.algebra, theta[i])) return false;
    if (!injective_on(theta[i], own_fiber_positions(cov, d))) return false;
  }
  return true;
}

LallementSystem build_system(const Covering& cov, const PreservingTuple& theta) {
  auto downsets = all_downsets(cov);
  if (!is_preserving(cov, downsets, theta)) {
    throw UsageError("tuple is not preserving for this covering");
  }
  int n = cov.base().size();
  std::vector<QuotientResult> quotients;
  quotients.reserve(n);
  for (int i = 0; i < n; ++i) quotients.push_back(quotient(downsets[i].algebra, theta[i]));

  // members of pair i: blocks of the embedded own fiber (distinct because
  // the tuple preserves it); block_for[i][a] for fiber elements
  std::vector<AlgebraicPair> pairs;
  pairs.reserve(n);
  std::vector<std::vector<int>> fiber_blocks(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> blocks;
    for (int a : cov.fiber(i)) {
      blocks.push_back(theta[i].block_of(downsets[i].embed(i, a)));
    }
    fiber_blocks[i] = blocks;
    std::sort(blocks.begin(), blocks.end());
    pairs.push_back({quotients[i].algebra, std::move(blocks)});
  }

  std::map<std::pair<int, int>, std::vector<int>> trans;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!cov.preorder().contains(i, j)) continue;
      const auto& mem = pairs[i].members;  // sorted block ids at index i
      std::vector<int> map(mem.size());
      for (size_t p = 0; p < mem.size(); ++p) {
        // unique fiber element representing this block
        int rep = -1;
        const auto& fib = cov.fiber(i);
        for (size_t k = 0; k < fib.size(); ++k) {
          if (fiber_blocks[i][k] == mem[p]) {
            rep = fib[k];
            break;
          }
        }
        map[p] = theta[j].block_of(downsets[j].embed(i, rep));
      }
      trans[{i, j}] = std::move(map);
    }
  }
  return LallementSystem(cov.base(), std::move(pairs), std::move(trans));
}

UnitMorphism unit_morphism(const Covering& cov, const PreservingTuple& theta) {
  auto downsets = all_downsets(cov);
  LallementSystem sys = build_system(cov, theta);
  SumResult sum = lallement_sum(sys);
  std::vector<int> h(cov.total().size());
  for (int a = 0; a < cov.total().size(); ++a) {
    int i = cov.map()[a];
    h[a] = sum.flat_index(i, theta[i].block_of(downsets[i].embed(i, a)));
  }
  Homomorphism total_map(cov.total(), sum.algebra, std::move(h));
  return UnitMorphism{identity_hom(cov.base()), std::move(total_map), std::move(sum)};
}

TargetAnalysis analyze_target(const Covering& cov, const LallementSystem& target,
                              const TargetedMorphism& m) {
  if (!(m.base_map.source() == cov.base()) || !(m.base_map.target() == target.base())) {
    throw UsageError("base map endpoints must join the covering base to the target base");
  }
  if (!m.base_map.is_surjective()) {
    throw UsageError("the base map must be surjective");
  }
  if (!is_semi_inductive(target)) {
    throw UsageError("factorization targets must be semi-inductive systems");
  }
  TargetAnalysis out{lallement_sum(target), all_downsets(cov), {}, {}};
  const auto& t = m.base_map;

  if (static_cast<int>(m.total_map.size()) != cov.total().size()) {
    throw UsageError("total map must cover the covering total");
  }
  if (!is_homomorphism(cov.total(), out.target_sum.algebra, m.total_map)) {
    throw UsageError("total map is not a homomorphism into the target sum");
  }
  for (int a = 0; a < cov.total().size(); ++a) {
    if (out.target_sum.block_of(m.total_map[a]) != t(cov.map()[a])) {
      throw UsageError("base square fails at element " + std::to_string(a) +
                       ": projection of the image differs from the mapped fiber index");
    }
  }

  int n = cov.base().size();
  out.r.resize(n);
  for (int j = 0; j < n; ++j) {
    const auto& d = out.downsets[j];
    std::vector<int> rj(d.members.size());
    for (size_t p = 0; p < d.members.size(); ++p) {
      auto [a, i] = d.unembed(static_cast<int>(p));
      int b = out.target_sum.unflatten(m.total_map[a]).first;  // member of B_{t(i)}
      rj[p] = target.transport(t(i), t(j), b);
    }
    if (!is_homomorphism(d.algebra, target.pair(t(j)).ambient, rj)) {
      throw ConsistencyError("derived comparison map at index " + std::to_string(j) +
                             " is not a homomorphism");
    }
    out.r_kernels.push_back(Congruence(rj));
    out.r[j] = std::move(rj);
  }
  return out;
}

PreservingFamily admissible_for_target(const Covering& cov, const LallementSystem& target,
                                       const TargetedMorphism& m) {
  TargetAnalysis an = analyze_target(cov, target, m);
  PreservingFamily fam;
  for (int i = 0; i < cov.base().size(); ++i) {
    const auto& d = an.downsets[i];
    auto fiber_pos = own_fiber_positions(cov, d);
    std::vector<Congruence> keep;
    for (auto& c : enumerate_congruences(d.algebra)) {
      if (!c.refines(an.r_kernels[i])) continue;
      if (!injective_on(c, fiber_pos)) continue;
      keep.push_back(std::move(c));
    }
    fam.per_index.push_back(std::move(keep));
  }
  return fam;
}

Factorization factorize(const Covering& cov, const LallementSystem& target,
                        const TargetedMorphism& m, const PreservingTuple& theta) {
  TargetAnalysis an = analyze_target(cov, target, m);
  if (!is_preserving(cov, an.downsets, theta)) {
    throw UsageError("tuple is not preserving for this covering");
  }
  for (int i = 0; i < cov.base().size(); ++i) {
    if (!theta[i].refines(an.r_kernels[i])) {
      throw UsageError("congruence " + std::to_string(i) +
                       " does not refine the comparison kernel; tuple not admissible");
    }
  }

  LallementSystem sys = build_system(cov, theta);
  UnitMorphism unit = unit_morphism(cov, theta);

  std::vector<std::vector<int>> comps(cov.base().size());
  for (int i = 0; i < cov.base().size(); ++i) {
    std::vector<int> v(theta[i].block_count(), -1);
    for (int p = 0; p < static_cast<int>(an.downsets[i].members.size()); ++p) {
      int b = theta[i].block_of(p);
      if (v[b] == -1) {
        v[b] = an.r[i][p];
      } else if (v[b] != an.r[i][p]) {
        throw ConsistencyError("comparison map is not constant on a block it should absorb");
      }
    }
    comps[i] = std::move(v);
  }

  LabeledMorphism phi{sys, target, m.base_map, std::move(comps)};
  auto bad = validate_labeled(phi);
  if (!bad.empty()) {
    throw ConsistencyError("factorizing morphism failed validation: " + bad.front().message);
  }

  Homomorphism w = sum_morphism(phi);
  for (int a = 0; a < cov.total().size(); ++a) {
    if (w(unit.total_map(a)) != m.total_map[a]) {
      throw ConsistencyError("factorization equation fails at element " + std::to_string(a));
    }
  }
  return Factorization{std::move(phi), std::move(unit)};
}

UniquenessResult verify_uniqueness(const Covering& cov, const LallementSystem& target,
                                   const TargetedMorphism& m, const PreservingTuple& theta) {
  TargetAnalysis an = analyze_target(cov, target, m);
  if (!is_preserving(cov, an.downsets, theta)) {
    throw UsageError("tuple is not preserving for this covering");
  }
  LallementSystem sys = build_system(cov, theta);
  const auto& t = m.base_map;

  // The composite's base map is (candidate base) . identity, so the base
  // map is pinned to t exactly; only components can vary.  The total
  // equation pins each component on the blocks of the embedded own fiber;
  // remaining cells range over the target ambient carrier.
  int n = cov.base().size();
  std::vector<std::vector<std::vector<int>>> candidates(n);
  std::int64_t space_total = 1;
  for (int i = 0; i < n; ++i) {
    int blocks = theta[i].block_count();
    int tsize = target.pair(t(i)).ambient.size();
    std::vector<int> pinned(blocks, -1);
    for (size_t k = 0; k < cov.fiber(i).size(); ++k) {
      int a = cov.fiber(i)[k];
      int b = theta[i].block_of(an.downsets[i].embed(i, a));
      int want = an.target_sum.unflatten(m.total_map[a]).first;
      if (pinned[b] != -1 && pinned[b] != want) return {UniquenessResult::Status::failed, 0, 0};
      pinned[b] = want;
    }
    std::vector<int> free_cells;
    for (int b = 0; b < blocks; ++b) {
      if (pinned[b] == -1) free_cells.push_back(b);
    }
    std::int64_t space = 1;
    for (size_t k = 0; k < free_cells.size(); ++k) {
      space *= tsize;
      if (space > limits().uniqueness_search) {
        return {UniquenessResult::Status::not_checked, space, 0};
      }
    }
    const auto& mi = sys.pair(i).ambient;         // quotient algebra at i
    const auto& ni = target.pair(t(i)).ambient;   // ambient at t(i)
    std::vector<int> map = pinned;
    std::vector<int> choice(free_cells.size(), 0);
    while (true) {
      for (size_t k = 0; k < free_cells.size(); ++k) map[free_cells[k]] = choice[k];
      if (is_homomorphism(mi, ni, map)) candidates[i].push_back(map);
      int k = static_cast<int>(free_cells.size()) - 1;
      while (k >= 0 && choice[k] == tsize - 1) choice[k--] = 0;
      if (k < 0) break;
      ++choice[k];
    }
    if (candidates[i].empty()) return {UniquenessResult::Status::failed, 0, 0};
    space_total *= static_cast<std::int64_t>(candidates[i].size());
    if (space_total > limits().uniqueness_search) {
      return {UniquenessResult::Status::not_checked, space_total, 0};
    }
  }

  // product search over per-index candidates; every family already
  // satisfies the equation and the hom condition, so only the containment
  // and naturality laws remain
  std::int64_t examined = 0, found = 0;
  std::vector<size_t> pick(n, 0);
  std::vector<std::vector<int>> comps(n);
  while (true) {
    ++examined;
    for (int i = 0; i < n; ++i) comps[i] = candidates[i][pick[i]];
    LabeledMorphism cand{sys, target, t, comps};
    bool ok = true;
    try {
      ok = validate_labeled(cand).empty();
    } catch (const UsageError&) {
      ok = false;
    }
    if (ok) ++found;
    int k = n - 1;
    while (k >= 0 && pick[k] + 1 == candidates[k].size()) pick[k--] = 0;
    if (k < 0) break;
    ++pick[k];
  }
  return {found == 1 ? UniquenessResult::Status::verified : UniquenessResult::Status::failed,
          examined, found};
}

std::optional<Homomorphism> find_block_iso(const Covering& cov, const SumResult& sum) {
  int n = cov.base().size();
  if (sum.system.index_count() != n) return std::nullopt;
  std::int64_t combos = 1;
  std::vector<std::vector<std::vector<int>>> perms(n);
  for (int i = 0; i < n; ++i) {
    int bs = sum.block_size(i);
    if (bs != static_cast<int>(cov.fiber(i).size())) return std::nullopt;
    std::vector<int> p(bs);
    for (int k = 0; k < bs; ++k) p[k] = k;
    do {
      perms[i].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    combos *= static_cast<std::int64_t>(perms[i].size());
    if (combos > limits().uniqueness_search) {
      throw LimitError("block-bijection search exceeds the uniqueness_search limit");
    }
  }
  std::vector<size_t> pick(n, 0);
  std::vector<int> map(sum.algebra.size());
  while (true) {
    for (int i = 0; i < n; ++i) {
      const auto& perm = perms[i][pick[i]];
      for (int k = 0; k < sum.block_size(i); ++k) {
        map[sum.offsets[i] + k] = cov.fiber(i)[perm[k]];
      }
    }
    if (is_homomorphism(sum.algebra, cov.total(), map)) {
      return Homomorphism(sum.algebra, cov.total(), map);
    }
    int k = n - 1;
    while (k >= 0 && pick[k] + 1 == perms[k].size()) pick[k--] = 0;
    if (k < 0) break;
    ++pick[k];
  }
  return std::nullopt;
}

}  // namespace lalgebra
