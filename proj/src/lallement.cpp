#include "lalgebra/lallement.hpp"

#include <algorithm>
#include <string>

#include "lalgebra/error.hpp"
#include "lalgebra/npi.hpp"

namespace lalgebra {

namespace {

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

int member_position(const std::vector<int>& members, int value) {
  auto it = std::lower_bound(members.begin(), members.end(), value);
  if (it == members.end() || *it != value) return -1;
  return static_cast<int>(it - members.begin());
}

}  // namespace

LallementSystem::LallementSystem(FiniteAlgebra base, std::vector<AlgebraicPair> pairs,
                                 std::map<std::pair<int, int>, std::vector<int>> transitions)
    : base_(std::move(base)), pairs_(std::move(pairs)), transitions_(std::move(transitions)) {
  if (!is_npi(base_)) {
    throw UsageError("system base must be idempotent and naturally preordered");
  }
  preorder_ = algebraic_preorder(base_);
  if (static_cast<int>(pairs_.size()) != base_.size()) {
    throw UsageError("need one algebraic pair per base element");
  }
  for (int i = 0; i < base_.size(); ++i) {
    const auto& p = pairs_[i];
    if (!(p.ambient.signature() == base_.signature())) {
      throw UsageError("ambient algebra " + std::to_string(i) +
                       " does not share the base signature");
    }
    if (p.members.empty()) throw UsageError("member list " + std::to_string(i) + " is empty");
    for (size_t k = 0; k < p.members.size(); ++k) {
      if (p.members[k] < 0 || p.members[k] >= p.ambient.size()) {
        throw UsageError("member outside ambient carrier at index " + std::to_string(i));
      }
      if (k > 0 && p.members[k] <= p.members[k - 1]) {
        throw UsageError("member list " + std::to_string(i) + " must be strictly increasing");
      }
    }
  }
  for (int i = 0; i < base_.size(); ++i) {
    for (int j = 0; j < base_.size(); ++j) {
      bool rel = preorder_.contains(i, j);
      bool present = transitions_.count({i, j}) > 0;
      if (rel && !present) {
        throw UsageError("missing transition for preorder pair " + pair_str(i, j));
      }
      if (!rel && present) {
        throw UsageError("transition " + pair_str(i, j) + " is not a preorder pair");
      }
    }
  }
  for (const auto& [key, map] : transitions_) {
    auto [i, j] = key;
    if (map.size() != pairs_[i].members.size()) {
      throw UsageError("transition " + pair_str(i, j) + " must have one value per member");
    }
    for (int v : map) {
      if (v < 0 || v >= pairs_[j].ambient.size()) {
        throw UsageError("transition " + pair_str(i, j) + " value outside target carrier");
      }
    }
  }
}

const std::vector<int>& LallementSystem::transition(int i, int j) const {
  if (i < 0 || i >= base_.size() || j < 0 || j >= base_.size() || !preorder_.contains(i, j)) {
    throw UsageError("transition requested for non-preorder pair " + pair_str(i, j));
  }
  return transitions_.at({i, j});
}

int LallementSystem::transport(int i, int j, int a) const {
  int p = member_position(pairs_.at(i).members, a);
  if (p < 0) {
    throw UsageError("element " + std::to_string(a) + " is not a member at index " +
                     std::to_string(i));
  }
  return transition(i, j)[p];
}

bool operator==(const LallementSystem& a, const LallementSystem& b) {
  return a.base_ == b.base_ && a.pairs_ == b.pairs_ && a.transitions_ == b.transitions_;
}

std::vector<Violation> validate_system(const LallementSystem& sys) {
  std::vector<Violation> out;
  int n = sys.index_count();

  std::vector<bool> closed(n, true);
  for (int i = 0; i < n; ++i) {
    closed[i] = is_closed_subset(sys.pair(i).ambient, sys.pair(i).members);
    if (!closed[i]) {
      out.push_back({"closure", "members at index " + std::to_string(i) +
                                    " are not closed in their ambient algebra"});
    }
  }

  // transitions are homomorphisms on the member subalgebras
  for (const auto& [key, map] : sys.transitions()) {
    auto [i, j] = key;
    if (!closed[i]) continue;
    const auto& mi = sys.pair(i).ambient;
    const auto& mj = sys.pair(j).ambient;
    const auto& mem = sys.pair(i).members;
    int msize = static_cast<int>(mem.size());
    for (int s = 0; s < mi.signature().symbol_count(); ++s) {
      int arity = mi.signature().symbol(s).arity;
      bool ok = true;
      std::vector<int> args(arity), mapped(arity);
      for_each_tuple(msize, arity, [&](std::span<const int> pos) {
        if (!ok) return;
        for (int k = 0; k < arity; ++k) {
          args[k] = mem[pos[k]];
          mapped[k] = map[pos[k]];
        }
        int inner = mi.apply(s, std::span<const int>(args.data(), args.size()));
        int p = member_position(mem, inner);
        if (p < 0) {  // closure violation already recorded
          ok = false;
          return;
        }
        if (map[p] != mj.apply(s, std::span<const int>(mapped.data(), mapped.size()))) {
          out.push_back({"hom", "transition " + pair_str(i, j) + " breaks '" +
                                    mi.signature().symbol(s).name + "' at a member tuple"});
          ok = false;
        }
      });
    }
  }

  // conditions (a) and (b): operations on transported arguments
  const auto& base = sys.base();
  for (int s = 0; s < base.signature().symbol_count(); ++s) {
    int arity = base.signature().symbol(s).arity;
    for_each_tuple(n, arity, [&](std::span<const int> idx) {
      int i = base.apply(s, idx);
      const auto& mi = sys.pair(i).ambient;
      const auto& memi = sys.pair(i).members;
      // argument tuples: positions within each A_{idx[k]}
      std::vector<int> sizes(arity);
      for (int k = 0; k < arity; ++k) {
        sizes[k] = static_cast<int>(sys.pair(idx[k]).members.size());
      }
      std::vector<int> pos(arity, 0);
      while (true) {
        std::vector<int> transported(arity);
        for (int k = 0; k < arity; ++k) {
          transported[k] = sys.transition(idx[k], i)[pos[k]];
        }
        int v = mi.apply(s, std::span<const int>(transported.data(), transported.size()));
        int vp = member_position(memi, v);
        if (vp < 0) {
          out.push_back({"a", "'" + base.signature().symbol(s).name + "' on indices " +
                                  [&] {
                                    std::string t;
                                    for (int k = 0; k < arity; ++k) {
                                      t += (k ? "," : "") + std::to_string(idx[k]);
                                    }
                                    return t;
                                  }() +
                                  " leaves the members at index " + std::to_string(i)});
        } else {
          for (int j = 0; j < n; ++j) {
            if (!sys.preorder().contains(i, j)) continue;
            const auto& mj = sys.pair(j).ambient;
            std::vector<int> far(arity);
            for (int k = 0; k < arity; ++k) {
              far[k] = sys.transition(idx[k], j)[pos[k]];
            }
            int lhs = sys.transition(i, j)[vp];
            int rhs = mj.apply(s, std::span<const int>(far.data(), far.size()));
            if (lhs != rhs) {
              out.push_back({"b", "transport to index " + std::to_string(j) +
                                      " disagrees with '" + base.signature().symbol(s).name +
                                      "' computed there (from index " + std::to_string(i) + ")"});
            }
          }
        }
        int k = arity - 1;
        while (k >= 0 && pos[k] == sizes[k] - 1) pos[k--] = 0;
        if (k < 0) break;
        ++pos[k];
      }
    });
  }
  return out;
}

bool is_semi_inductive(const LallementSystem& sys) {
  if (!validate_system(sys).empty()) {
    throw UsageError("semi-inductive only makes sense for valid systems");
  }
  for (int i = 0; i < sys.index_count(); ++i) {
    const auto& mem = sys.pair(i).members;
    const auto& diag = sys.transition(i, i);
    for (size_t p = 0; p < mem.size(); ++p) {
      if (diag[p] != mem[p]) return false;
    }
  }
  return true;
}

namespace {

/// Shared law checks for a componentwise family source -> relabelled target.
std::vector<Violation> morphism_laws(const LallementSystem& src, const LallementSystem& tgt,
                                     const std::vector<std::vector<int>>& u) {
  std::vector<Violation> out;
  int n = src.index_count();
  for (int i = 0; i < n; ++i) {
    if (!is_homomorphism(src.pair(i).ambient, tgt.pair(i).ambient, u[i])) {
      out.push_back({"hom", "component " + std::to_string(i) + " is not a homomorphism"});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int a : src.pair(i).members) {
      if (member_position(tgt.pair(i).members, u[i][a]) < 0) {
        out.push_back({"containment", "component " + std::to_string(i) +
                                          " maps member " + std::to_string(a) +
                                          " outside the target members"});
        break;
      }
    }
  }
  if (!out.empty()) return out;
  for (const auto& [key, f] : src.transitions()) {
    auto [i, j] = key;
    const auto& g = tgt.transition(i, j);
    const auto& memi = src.pair(i).members;
    for (size_t p = 0; p < memi.size(); ++p) {
      int lhs = u[j][f[p]];
      int rhs = g[member_position(tgt.pair(i).members, u[i][memi[p]])];
      if (lhs != rhs) {
        out.push_back({"natural", "square fails at pair " + pair_str(i, j) + ", member " +
                                      std::to_string(memi[p])});
        break;
      }
    }
  }
  return out;
}

void check_component_shape(const LallementSystem& src, const LallementSystem& tgt,
                           const std::vector<std::vector<int>>& u) {
  if (static_cast<int>(u.size()) != src.index_count()) {
    throw UsageError("need one component per index");
  }
  for (int i = 0; i < src.index_count(); ++i) {
    if (static_cast<int>(u[i].size()) != src.pair(i).ambient.size()) {
      throw UsageError("component " + std::to_string(i) + " must cover the ambient carrier");
    }
    for (int v : u[i]) {
      if (v < 0 || v >= tgt.pair(i).ambient.size()) {
        throw UsageError("component " + std::to_string(i) + " value outside target carrier");
      }
    }
  }
}

}  // namespace

std::vector<Violation> validate_morphism(const SystemMorphism& m) {
  if (!(m.source.base() == m.target.base())) {
    throw UsageError("componentwise morphisms need one shared base");
  }
  if (!validate_system(m.source).empty() || !validate_system(m.target).empty()) {
    throw UsageError("morphism endpoints must be valid systems");
  }
  check_component_shape(m.source, m.target, m.components);
  return morphism_laws(m.source, m.target, m.components);
}

LallementSystem relabel_system(const LallementSystem& sys, const Homomorphism& t) {
  if (!(t.target() == sys.base())) {
    throw UsageError("relabel map must land in the system base");
  }
  if (!t.is_surjective()) {
    throw UsageError("relabel map must be surjective");
  }
  const auto& newbase = t.source();
  Relation pre = algebraic_preorder(newbase);
  std::vector<AlgebraicPair> pairs;
  pairs.reserve(newbase.size());
  for (int i = 0; i < newbase.size(); ++i) pairs.push_back(sys.pair(t(i)));
  std::map<std::pair<int, int>, std::vector<int>> trans;
  for (int i = 0; i < newbase.size(); ++i) {
    for (int j = 0; j < newbase.size(); ++j) {
      if (pre.contains(i, j)) trans[{i, j}] = sys.transition(t(i), t(j));
    }
  }
  return LallementSystem(newbase, std::move(pairs), std::move(trans));
}

bool operator==(const LabeledMorphism& a, const LabeledMorphism& b) {
  return a.source == b.source && a.target == b.target && a.base_map == b.base_map &&
         a.components == b.components;
}

std::vector<Violation> validate_labeled(const LabeledMorphism& m) {
  if (!(m.base_map.source() == m.source.base()) || !(m.base_map.target() == m.target.base())) {
    throw UsageError("base map endpoints must match the system bases");
  }
  if (!m.base_map.is_surjective()) {
    throw UsageError("labeled morphisms require a surjective base map");
  }
  if (!validate_system(m.source).empty() || !validate_system(m.target).empty()) {
    throw UsageError("morphism endpoints must be valid systems");
  }
  LallementSystem pulled = relabel_system(m.target, m.base_map);
  check_component_shape(m.source, pulled, m.components);
  return morphism_laws(m.source, pulled, m.components);
}

LabeledMorphism identity_labeled(const LallementSystem& sys) {
  std::vector<std::vector<int>> comps;
  comps.reserve(sys.index_count());
  for (int i = 0; i < sys.index_count(); ++i) {
    std::vector<int> id(sys.pair(i).ambient.size());
    for (size_t x = 0; x < id.size(); ++x) id[x] = static_cast<int>(x);
    comps.push_back(std::move(id));
  }
  return LabeledMorphism{sys, sys, identity_hom(sys.base()), std::move(comps)};
}

LabeledMorphism compose_labeled(const LabeledMorphism& g, const LabeledMorphism& f) {
  if (!(f.target == g.source)) {
    throw UsageError("compose_labeled: inner target differs from outer source");
  }
  Homomorphism base = compose_homs(g.base_map, f.base_map);
  std::vector<std::vector<int>> comps;
  comps.reserve(f.source.index_count());
  for (int i = 0; i < f.source.index_count(); ++i) {
    const auto& u = f.components[i];
    const auto& v = g.components[f.base_map(i)];
    std::vector<int> w(u.size());
    for (size_t x = 0; x < u.size(); ++x) w[x] = v[u[x]];
    comps.push_back(std::move(w));
  }
  return LabeledMorphism{f.source, g.target, std::move(base), std::move(comps)};
}

LallementSystem inductive_to_lallement(const InductiveSystem& ind) {
  auto bad = validate_inductive(ind);
  if (!bad.empty()) {
    throw UsageError("system view needs a valid inductive system: " + bad.front().message);
  }
  const Signature& sig = ind.algebras.at(0).signature();
  FiniteAlgebra base = semilattice_to_npi(ind.base, sig);
  Relation pre = algebraic_preorder(base);
  for (int i = 0; i < base.size(); ++i) {
    for (int j = 0; j < base.size(); ++j) {
      if (pre.contains(i, j) != ind.base.leq(i, j)) {
        throw ConsistencyError("semilattice order and induced preorder disagree");
      }
    }
  }
  std::vector<AlgebraicPair> pairs;
  pairs.reserve(ind.algebras.size());
  for (const auto& alg : ind.algebras) {
    std::vector<int> all(alg.size());
    for (int x = 0; x < alg.size(); ++x) all[x] = x;
    pairs.push_back({alg, std::move(all)});
  }
  std::map<std::pair<int, int>, std::vector<int>> trans(ind.transitions.begin(),
                                                        ind.transitions.end());
  return LallementSystem(std::move(base), std::move(pairs), std::move(trans));
}

LabeledMorphism inductive_morphism_to_labeled(const InductiveMorphism& m) {
  auto bad = validate_inductive_morphism(m);
  if (!bad.empty()) {
    throw UsageError("not a valid inductive morphism: " + bad.front().message);
  }
  LallementSystem src = inductive_to_lallement(m.source);
  LallementSystem tgt = inductive_to_lallement(m.target);
  Homomorphism base(src.base(), tgt.base(), m.base_map);
  if (!base.is_surjective()) {
    throw UsageError("labeled view needs a surjective base map");
  }
  return LabeledMorphism{std::move(src), std::move(tgt), std::move(base), m.components};
}

}  // namespace lalgebra
