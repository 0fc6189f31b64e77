#include "lalgebra/inductive.hpp"

#include <string>

#include "lalgebra/error.hpp"
#include "lalgebra/hom.hpp"

namespace lalgebra {

const std::vector<int>& InductiveSystem::transition(int i, int j) const {
  auto it = transitions.find({i, j});
  if (it == transitions.end()) {
    throw UsageError("no transition stored for (" + std::to_string(i) + ", " +
                     std::to_string(j) + ")");
  }
  return it->second;
}

std::vector<Violation> validate_inductive(const InductiveSystem& sys) {
  std::vector<Violation> out;
  int n = sys.base.size();
  if (static_cast<int>(sys.algebras.size()) != n) {
    out.push_back({"shape", "need one algebra per base element (" + std::to_string(n) +
                                "), got " + std::to_string(sys.algebras.size())});
    return out;
  }
  for (int i = 1; i < n; ++i) {
    if (!(sys.algebras[i].signature() == sys.algebras[0].signature())) {
      out.push_back({"shape", "algebra " + std::to_string(i) + " has a different signature"});
      return out;
    }
  }
  // keys must be exactly the order pairs
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool rel = sys.base.leq(i, j);
      bool present = sys.transitions.count({i, j}) > 0;
      if (rel && !present) {
        out.push_back({"shape", "missing transition (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")"});
      } else if (!rel && present) {
        out.push_back({"shape", "transition (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") is not an order pair"});
      }
    }
  }
  if (!out.empty()) return out;

  for (const auto& [key, map] : sys.transitions) {
    auto [i, j] = key;
    const auto& src = sys.algebras[i];
    const auto& tgt = sys.algebras[j];
    if (static_cast<int>(map.size()) != src.size()) {
      out.push_back({"shape", "transition (" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") has wrong length"});
      continue;
    }
    bool in_range = true;
    for (int v : map) {
      if (v < 0 || v >= tgt.size()) in_range = false;
    }
    if (!in_range) {
      out.push_back({"shape", "transition (" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") has out-of-range values"});
      continue;
    }
    if (!is_homomorphism(src, tgt, map)) {
      out.push_back({"hom", "transition (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") is not a homomorphism"});
    }
  }
  if (!out.empty()) return out;

  for (int i = 0; i < n; ++i) {
    const auto& diag = sys.transition(i, i);
    for (int x = 0; x < sys.algebras[i].size(); ++x) {
      if (diag[x] != x) {
        out.push_back({"identity", "transition (" + std::to_string(i) + ", " +
                                       std::to_string(i) + ") is not the identity"});
        break;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!sys.base.leq(i, j)) continue;
      for (int k = 0; k < n; ++k) {
        if (!sys.base.leq(j, k)) continue;
        const auto& f_ij = sys.transition(i, j);
        const auto& f_jk = sys.transition(j, k);
        const auto& f_ik = sys.transition(i, k);
        for (int x = 0; x < sys.algebras[i].size(); ++x) {
          if (f_jk[f_ij[x]] != f_ik[x]) {
            out.push_back({"functorial",
                           "transitions disagree along " + std::to_string(i) + " <= " +
                               std::to_string(j) + " <= " + std::to_string(k) + " at element " +
                               std::to_string(x)});
            break;
          }
        }
      }
    }
  }
  return out;
}

std::vector<Violation> validate_inductive_morphism(const InductiveMorphism& m) {
  std::vector<Violation> out;
  auto src_bad = validate_inductive(m.source);
  auto tgt_bad = validate_inductive(m.target);
  if (!src_bad.empty() || !tgt_bad.empty()) {
    out.push_back({"shape", "endpoints must be valid inductive systems"});
    return out;
  }
  int n = m.source.base.size();
  if (static_cast<int>(m.base_map.size()) != n ||
      static_cast<int>(m.components.size()) != n) {
    out.push_back({"shape", "base map and components must cover every base element"});
    return out;
  }
  for (int v : m.base_map) {
    if (v < 0 || v >= m.target.base.size()) {
      out.push_back({"shape", "base map value outside the target base"});
      return out;
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int lhs = m.base_map[m.source.base.join(x, y)];
      int rhs = m.target.base.join(m.base_map[x], m.base_map[y]);
      if (lhs != rhs) {
        out.push_back({"base", "base map does not preserve joins at (" + std::to_string(x) +
                                   ", " + std::to_string(y) + ")"});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const auto& w = m.components[i];
    const auto& src = m.source.algebras[i];
    const auto& tgt = m.target.algebras[m.base_map[i]];
    if (static_cast<int>(w.size()) != src.size()) {
      out.push_back({"shape", "component " + std::to_string(i) + " has wrong length"});
      continue;
    }
    bool in_range = true;
    for (int v : w) {
      if (v < 0 || v >= tgt.size()) in_range = false;
    }
    if (!in_range) {
      out.push_back({"shape", "component " + std::to_string(i) + " has out-of-range values"});
      continue;
    }
    if (!is_homomorphism(src, tgt, w)) {
      out.push_back({"hom", "component " + std::to_string(i) + " is not a homomorphism"});
    }
  }
  if (!out.empty()) return out;
  // naturality: w_j . f_ij = g_{xi(i), xi(j)} . w_i
  for (const auto& [key, f] : m.source.transitions) {
    auto [i, j] = key;
    const auto& g = m.target.transition(m.base_map[i], m.base_map[j]);
    for (int x = 0; x < m.source.algebras[i].size(); ++x) {
      if (m.components[j][f[x]] != g[m.components[i][x]]) {
        out.push_back({"natural", "square fails at index pair (" + std::to_string(i) + ", " +
                                      std::to_string(j) + "), element " + std::to_string(x)});
        break;
      }
    }
  }
  return out;
}

}  // namespace lalgebra
