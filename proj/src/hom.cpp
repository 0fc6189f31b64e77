#include "lalgebra/hom.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "lalgebra/congruence.hpp"
#include "lalgebra/error.hpp"
#include "lalgebra/limits.hpp"

namespace lalgebra {

namespace {

void check_map_shape(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                     const std::vector<int>& map) {
  if (!(src.signature() == tgt.signature())) {
    throw UsageError("homomorphism endpoints must share one signature");
  }
  if (static_cast<int>(map.size()) != src.size()) {
    throw UsageError("map has " + std::to_string(map.size()) + " entries for a carrier of " +
                     std::to_string(src.size()));
  }
  for (int v : map) {
    if (v < 0 || v >= tgt.size()) {
      throw UsageError("map value " + std::to_string(v) + " outside target carrier");
    }
  }
}

}  // namespace

bool is_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                     const std::vector<int>& map) {
  check_map_shape(src, tgt, map);
  for (int s = 0; s < src.signature().symbol_count(); ++s) {
    int arity = src.signature().symbol(s).arity;
    bool ok = true;
    std::vector<int> image(arity);
    for_each_tuple(src.size(), arity, [&](std::span<const int> args) {
      if (!ok) return;
      for (int k = 0; k < arity; ++k) image[k] = map[args[k]];
      if (map[src.apply(s, args)] !=
          tgt.apply(s, std::span<const int>(image.data(), image.size()))) {
        ok = false;
      }
    });
    if (!ok) return false;
  }
  return true;
}

Homomorphism::Homomorphism(FiniteAlgebra source, FiniteAlgebra target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!is_homomorphism(source_, target_, map_)) {
    throw UsageError("map is not a homomorphism");
  }
}

bool Homomorphism::is_surjective() const {
  std::vector<char> hit(target_.size(), 0);
  for (int v : map_) hit[v] = 1;
  return std::find(hit.begin(), hit.end(), 0) == hit.end();
}

bool Homomorphism::is_injective() const {
  std::set<int> seen(map_.begin(), map_.end());
  return static_cast<int>(seen.size()) == source_.size();
}

bool operator==(const Homomorphism& a, const Homomorphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.map_ == b.map_;
}

Homomorphism identity_hom(const FiniteAlgebra& a) {
  std::vector<int> id(a.size());
  for (int i = 0; i < a.size(); ++i) id[i] = i;
  return Homomorphism(a, a, std::move(id));
}

Homomorphism compose_homs(const Homomorphism& g, const Homomorphism& f) {
  if (!(f.target() == g.source())) {
    throw UsageError("compose_homs: inner target differs from outer source");
  }
  std::vector<int> m(f.source().size());
  for (int i = 0; i < f.source().size(); ++i) m[i] = g(f(i));
  return Homomorphism(f.source(), g.target(), std::move(m));
}

Subuniverse image_subuniverse(const Homomorphism& h) {
  std::set<int> img(h.map().begin(), h.map().end());
  return Subuniverse(h.target(), std::vector<int>(img.begin(), img.end()));
}

Congruence kernel(const Homomorphism& h) { return Congruence(h.map()); }

std::vector<std::vector<int>> enumerate_homomorphisms(const FiniteAlgebra& src,
                                                      const FiniteAlgebra& tgt) {
  if (!(src.signature() == tgt.signature())) {
    throw UsageError("hom enumeration endpoints must share one signature");
  }
  std::int64_t space = 1;
  for (int i = 0; i < src.size(); ++i) {
    space *= tgt.size();
    if (space > limits().morphism_search) {
      throw LimitError("hom search space exceeds morphism_search limit " +
                       std::to_string(limits().morphism_search));
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> map(src.size(), 0);
  while (true) {
    if (is_homomorphism(src, tgt, map)) out.push_back(map);
    int k = src.size() - 1;
    while (k >= 0 && map[k] == tgt.size() - 1) map[k--] = 0;
    if (k < 0) break;
    ++map[k];
  }
  return out;
}

}  // namespace lalgebra
