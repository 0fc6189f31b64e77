#include "lalgebra/generators.hpp"

#include <algorithm>
#include <map>

#include "lalgebra/error.hpp"
#include "lalgebra/fixtures.hpp"
#include "lalgebra/limits.hpp"
#include "lalgebra/npi.hpp"
#include "lalgebra/sum.hpp"

namespace lalgebra {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int Rng::below(int n) {
  if (n <= 0) throw UsageError("Rng::below needs a positive bound");
  return static_cast<int>(next() % static_cast<std::uint64_t>(n));
}

int Rng::range(int lo, int hi) {
  if (hi < lo) throw UsageError("Rng::range needs lo <= hi");
  return lo + below(hi - lo + 1);
}

const std::vector<FiniteAlgebra>& all_npi_sig1(int n) {
  if (n < 1 || n > 3) throw UsageError("all_npi_sig1 is meant for carriers of size 1..3");
  static std::map<int, std::vector<FiniteAlgebra>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  Signature sig = fixtures::sig1();
  std::vector<FiniteAlgebra> found;
  // Idempotency pins the diagonal, so enumerate the off-diagonal cells only.
  std::vector<int> off;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) off.push_back(x * n + y);
    }
  }
  std::vector<int> table(n * n, 0);
  for (int x = 0; x < n; ++x) table[x * n + x] = x;
  std::vector<int> cell(off.size(), 0);
  while (true) {
    for (size_t k = 0; k < off.size(); ++k) table[off[k]] = cell[k];
    FiniteAlgebra a(sig, n, {table});
    if (is_naturally_preordered(a)) found.push_back(a);
    int k = static_cast<int>(off.size()) - 1;
    while (k >= 0 && cell[k] == n - 1) cell[k--] = 0;
    if (k < 0) break;
    ++cell[k];
  }
  return cache.emplace(n, std::move(found)).first->second;
}

FiniteAlgebra random_algebra(Rng& rng, const Signature& sig, int size) {
  if (size < 1) throw UsageError("random_algebra needs a nonempty carrier");
  std::vector<std::vector<int>> tables;
  for (int s = 0; s < sig.symbol_count(); ++s) {
    int len = 1;
    for (int k = 0; k < sig.symbol(s).arity; ++k) len *= size;
    std::vector<int> t(len);
    for (int& v : t) v = rng.below(size);
    tables.push_back(std::move(t));
  }
  return FiniteAlgebra(sig, size, std::move(tables));
}

FiniteAlgebra random_npi_sig1(Rng& rng, int max_size) {
  int n = rng.range(1, std::min(max_size, 3));
  return rng.pick(all_npi_sig1(n));
}

Semilattice random_semilattice(Rng& rng, int max_size) {
  int n = rng.range(1, std::min(max_size, 3));
  return rng.pick(enumerate_semilattices(n));
}

namespace {

/// Covering over a fixed base: surjective fiber map, tables drawn so the
/// value of every operation lies in the fiber over the base result.
Covering random_covering_over(Rng& rng, const FiniteAlgebra& base, int max_total) {
  int nb = base.size();
  int nt = rng.range(nb, std::max(nb, max_total));
  std::vector<int> f(nt);
  for (int i = 0; i < nb; ++i) f[i] = i;
  for (int i = nb; i < nt; ++i) f[i] = rng.below(nb);
  std::vector<std::vector<int>> fibers(nb);
  for (int a = 0; a < nt; ++a) fibers[f[a]].push_back(a);

  const Signature& sig = base.signature();
  std::vector<std::vector<int>> tables;
  for (int s = 0; s < sig.symbol_count(); ++s) {
    int arity = sig.symbol(s).arity;
    std::vector<int> table;
    for_each_tuple(nt, arity, [&](std::span<const int> args) {
      std::vector<int> im(args.size());
      for (size_t k = 0; k < args.size(); ++k) im[k] = f[args[k]];
      int j = base.apply(s, im);
      table.push_back(rng.pick(fibers[j]));
    });
    tables.push_back(std::move(table));
  }
  return Covering(base, FiniteAlgebra(sig, nt, std::move(tables)), std::move(f));
}

/// Congruences of `base` whose quotient is again idempotent and naturally
/// preordered.  Always contains the identity congruence.
std::vector<Congruence> npi_quotient_congruences(const FiniteAlgebra& base) {
  std::vector<Congruence> good;
  for (const Congruence& c : enumerate_congruences(base)) {
    if (is_npi(quotient(base, c).algebra)) good.push_back(c);
  }
  return good;
}

InductiveSystem trivial_fibres_system(const Semilattice& base) {
  InductiveSystem sys;
  sys.base = base;
  Signature sig = fixtures::sig1();
  for (int i = 0; i < base.size(); ++i) {
    sys.algebras.push_back(FiniteAlgebra(sig, 1, {{0}}));
  }
  for (int i = 0; i < base.size(); ++i) {
    for (int j = 0; j < base.size(); ++j) {
      if (base.leq(i, j)) sys.transitions[{i, j}] = {0};
    }
  }
  return sys;
}

}  // namespace

Covering random_covering(Rng& rng, int max_base, int max_total) {
  FiniteAlgebra base = random_npi_sig1(rng, max_base);
  return random_covering_over(rng, base, max_total);
}

PreservingTuple random_preserving_tuple(Rng& rng, const Covering& cov) {
  PreservingFamily fam = enumerate_preserving(cov);
  PreservingTuple t;
  for (const auto& list : fam.per_index) t.push_back(rng.pick(list));
  return t;
}

LallementSystem random_semi_inductive_system(Rng& rng, int max_base, int max_ambient) {
  if (rng.below(2) == 0) {
    // Quotients of downset algebras never exceed the total carrier, so the
    // ambient bound is enforced by bounding the covering itself.
    Covering cov = random_covering(rng, max_base, max_ambient);
    return build_system(cov, random_preserving_tuple(rng, cov));
  }
  return inductive_to_lallement(random_inductive_system(rng, max_base, max_ambient));
}

InductiveSystem random_inductive_system(Rng& rng, int max_base, int max_alg) {
  Signature sig = fixtures::sig1();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Semilattice base = random_semilattice(rng, max_base);
    int n = base.size();
    std::vector<FiniteAlgebra> algs;
    for (int i = 0; i < n; ++i) algs.push_back(random_algebra(rng, sig, rng.range(1, max_alg)));

    // Order pairs sorted by interval size: cover pairs get sampled homs,
    // longer pairs are composites along any intermediate point.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && base.leq(i, j)) pairs.push_back({i, j});
      }
    }
    auto gap = [&](const std::pair<int, int>& p) {
      int between = 0;
      for (int k = 0; k < n; ++k) {
        if (k != p.first && k != p.second && base.leq(p.first, k) && base.leq(k, p.second)) {
          ++between;
        }
      }
      return between;
    };
    std::stable_sort(pairs.begin(), pairs.end(),
                     [&](const auto& a, const auto& b) { return gap(a) < gap(b); });

    InductiveSystem sys;
    sys.base = base;
    sys.algebras = algs;
    for (int i = 0; i < n; ++i) {
      std::vector<int> id(algs[i].size());
      for (size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int>(k);
      sys.transitions[{i, i}] = std::move(id);
    }
    bool ok = true;
    for (const auto& [i, j] : pairs) {
      int via = -1;
      for (int k = 0; k < n && via < 0; ++k) {
        if (k != i && k != j && base.leq(i, k) && base.leq(k, j)) via = k;
      }
      if (via >= 0) {
        const auto& first = sys.transitions.at({i, via});
        const auto& second = sys.transitions.at({via, j});
        std::vector<int> comp(first.size());
        for (size_t k = 0; k < first.size(); ++k) comp[k] = second[first[k]];
        sys.transitions[{i, j}] = std::move(comp);
        continue;
      }
      auto homs = enumerate_homomorphisms(algs[i], algs[j]);
      if (homs.empty()) {
        ok = false;
        break;
      }
      sys.transitions[{i, j}] = rng.pick(homs);
    }
    if (ok && validate_inductive(sys).empty()) return sys;
  }
  // Bounded resampling failed; singleton components always work.
  return trivial_fibres_system(random_semilattice(rng, max_base));
}

std::optional<InductiveMorphism> random_inductive_morphism_from(Rng& rng,
                                                                const InductiveSystem& src,
                                                                int tries) {
  if (tries < 1) return std::nullopt;
  // Collapse the base along a random join-congruence.  Each block of such a
  // congruence is join-closed, so it has a top element; mapping a block to
  // its top gives a monotone section, and pushing algebras and transitions
  // through that section yields a target system whose structure maps are
  // transitions of the source.  Naturality then holds by functoriality.
  Signature joinsig({{"v", 2}});
  FiniteAlgebra base_alg(joinsig, src.base.size(), {src.base.join_table()});
  auto congruences = enumerate_congruences(base_alg);
  const Congruence& c = rng.pick(congruences);

  QuotientResult q = quotient(base_alg, c);
  Semilattice tgt_base(q.algebra.size(), q.algebra.table(0));

  std::vector<int> top(tgt_base.size(), -1);
  for (int i = 0; i < src.base.size(); ++i) {
    int b = c.block_of(i);
    top[b] = top[b] < 0 ? i : src.base.join(top[b], i);
  }

  InductiveSystem tgt;
  tgt.base = tgt_base;
  for (int b = 0; b < tgt_base.size(); ++b) tgt.algebras.push_back(src.algebras[top[b]]);
  for (int b = 0; b < tgt_base.size(); ++b) {
    for (int b2 = 0; b2 < tgt_base.size(); ++b2) {
      if (tgt_base.leq(b, b2)) tgt.transitions[{b, b2}] = src.transition(top[b], top[b2]);
    }
  }

  InductiveMorphism m;
  m.source = src;
  m.target = std::move(tgt);
  m.base_map = q.projection.map();
  for (int i = 0; i < src.base.size(); ++i) {
    m.components.push_back(src.transition(i, top[c.block_of(i)]));
  }
  if (!validate_inductive_morphism(m).empty()) return std::nullopt;
  return m;
}

std::vector<LabeledMorphism> enumerate_labeled_morphisms(const LallementSystem& src,
                                                         const LallementSystem& tgt,
                                                         const Homomorphism& t) {
  std::vector<std::vector<std::vector<int>>> candidates(src.index_count());
  std::int64_t total = 1;
  for (int i = 0; i < src.index_count(); ++i) {
    const auto& mi = src.pair(i);
    const auto& ni = tgt.pair(t(i));
    for (auto& map : enumerate_homomorphisms(mi.ambient, ni.ambient)) {
      bool contained = true;
      for (int a : mi.members) {
        if (!std::binary_search(ni.members.begin(), ni.members.end(), map[a])) {
          contained = false;
          break;
        }
      }
      if (contained) candidates[i].push_back(std::move(map));
    }
    if (candidates[i].empty()) return {};
    total *= static_cast<std::int64_t>(candidates[i].size());
    if (total > limits().morphism_search) {
      throw LimitError("labeled-morphism search space exceeds morphism_search");
    }
  }

  std::vector<LabeledMorphism> out;
  std::vector<size_t> choice(candidates.size(), 0);
  while (true) {
    LabeledMorphism m{src, tgt, t, {}};
    for (size_t i = 0; i < choice.size(); ++i) m.components.push_back(candidates[i][choice[i]]);
    if (validate_labeled(m).empty()) out.push_back(std::move(m));
    int k = static_cast<int>(choice.size()) - 1;
    while (k >= 0 && choice[k] + 1 == candidates[k].size()) choice[k--] = 0;
    if (k < 0) break;
    ++choice[k];
  }
  return out;
}

ComposablePair random_composable_pair(Rng& rng, int max_base, int max_alg) {
  InductiveSystem a = random_inductive_system(rng, max_base, max_alg);
  auto f = random_inductive_morphism_from(rng, a, 4);
  if (f) {
    auto g = random_inductive_morphism_from(rng, f->target, 4);
    if (g) {
      return {inductive_morphism_to_labeled(*f), inductive_morphism_to_labeled(*g)};
    }
  }
  LallementSystem sys = inductive_to_lallement(a);
  return {identity_labeled(sys), identity_labeled(sys)};
}

FactorizationInstance random_factorization_instance(Rng& rng, int max_total, int max_base,
                                                    int max_target_ambient) {
  Covering cov = random_covering(rng, max_base, max_total);

  if (rng.below(2) == 0) {
    // Searched instance: collapse the base, cover the collapsed base with a
    // second covering, and look for a block-respecting total map into the
    // sum of its identity-tuple system.
    auto collapses = npi_quotient_congruences(cov.base());
    const Congruence& c = rng.pick(collapses);
    QuotientResult q = quotient(cov.base(), c);
    Homomorphism t = q.projection;

    Covering cov2 = random_covering_over(rng, q.algebra, max_target_ambient);
    PreservingTuple identity_tuple;
    for (int j = 0; j < cov2.base().size(); ++j) {
      identity_tuple.push_back(Congruence::identity(
          static_cast<int>(downset_algebra(cov2, j).members.size())));
    }
    LallementSystem target = build_system(cov2, identity_tuple);
    SumResult sum = lallement_sum(target);

    // h(a) must project to t(f(a)); enumerate within those blocks.
    int nt = cov.total().size();
    std::vector<std::vector<int>> allowed(nt);
    std::int64_t space = 1;
    for (int a = 0; a < nt; ++a) {
      int block = t(cov.map()[a]);
      for (int p = 0; p < sum.algebra.size(); ++p) {
        if (sum.block_of(p) == block) allowed[a].push_back(p);
      }
      space *= static_cast<std::int64_t>(allowed[a].size());
    }
    if (space >= 1 && space <= 20'000) {
      std::vector<size_t> choice(nt, 0);
      while (true) {
        std::vector<int> h(nt);
        for (int a = 0; a < nt; ++a) h[a] = allowed[a][choice[a]];
        if (is_homomorphism(cov.total(), sum.algebra, h)) {
          return {cov, target, TargetedMorphism{t, std::move(h)}};
        }
        int k = nt - 1;
        while (k >= 0 && choice[k] + 1 == allowed[k].size()) choice[k--] = 0;
        if (k < 0) break;
        ++choice[k];
      }
    }
  }

  // Unit-style instance: the covering maps into the sum of its own quotient
  // system through the comparison morphism.
  PreservingTuple theta = random_preserving_tuple(rng, cov);
  UnitMorphism unit = unit_morphism(cov, theta);
  LallementSystem target = build_system(cov, theta);
  return {cov, target,
          TargetedMorphism{identity_hom(cov.base()), unit.total_map.map()}};
}

}  // namespace lalgebra
