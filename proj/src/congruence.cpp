#include "lalgebra/congruence.hpp"

#include <algorithm>

#include "lalgebra/error.hpp"
#include "lalgebra/limits.hpp"

namespace lalgebra {

Congruence::Congruence(std::vector<int> labels) {
  if (labels.empty()) throw UsageError("a partition needs a nonempty underlying set");
  // Renumber blocks by first occurrence: restricted-growth normal form.
  block_ids_.assign(labels.size(), -1);
  std::vector<std::pair<int, int>> seen;  // (raw label, block id)
  for (size_t x = 0; x < labels.size(); ++x) {
    int raw = labels[x];
    int id = -1;
    for (const auto& [r, b] : seen) {
      if (r == raw) {
        id = b;
        break;
      }
    }
    if (id == -1) {
      id = blocks_++;
      seen.emplace_back(raw, id);
    }
    block_ids_[x] = id;
  }
}

Congruence Congruence::identity(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return Congruence(std::move(ids));
}

Congruence Congruence::total(int n) { return Congruence(std::vector<int>(n, 0)); }

std::vector<std::vector<int>> Congruence::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int x = 0; x < size(); ++x) out[block_ids_[x]].push_back(x);
  return out;
}

std::vector<int> Congruence::representatives() const {
  std::vector<int> rep(blocks_, -1);
  for (int x = size() - 1; x >= 0; --x) rep[block_ids_[x]] = x;
  return rep;
}

bool Congruence::refines(const Congruence& coarser) const {
  if (coarser.size() != size()) {
    throw UsageError("refinement compares partitions of one set");
  }
  // block-of representative in the coarser partition must be constant on
  // each fine block
  std::vector<int> image(blocks_, -1);
  for (int x = 0; x < size(); ++x) {
    int b = block_ids_[x];
    if (image[b] == -1) {
      image[b] = coarser.block_of(x);
    } else if (image[b] != coarser.block_of(x)) {
      return false;
    }
  }
  return true;
}

bool is_congruence(const FiniteAlgebra& a, const Congruence& c) {
  if (c.size() != a.size()) {
    throw UsageError("partition size differs from the carrier");
  }
  // Single-coordinate substitution: swapping one argument for a related one
  // must keep results related.  Full blockwise-related tuples follow by
  // chaining substitutions (the relation is transitive).
  for (int s = 0; s < a.signature().symbol_count(); ++s) {
    int arity = a.signature().symbol(s).arity;
    bool ok = true;
    std::vector<int> mutated(arity);
    for_each_tuple(a.size(), arity, [&](std::span<const int> args) {
      if (!ok) return;
      int base = a.apply(s, args);
      for (int m = 0; m < arity && ok; ++m) {
        for (int b = 0; b < a.size(); ++b) {
          if (b == args[m] || !c.related(b, args[m])) continue;
          for (int k = 0; k < arity; ++k) mutated[k] = args[k];
          mutated[m] = b;
          int other = a.apply(s, std::span<const int>(mutated.data(), mutated.size()));
          if (!c.related(base, other)) {
            ok = false;
            break;
          }
        }
      }
    });
    if (!ok) return false;
  }
  return true;
}

QuotientResult quotient(const FiniteAlgebra& a, const Congruence& c) {
  if (!is_congruence(a, c)) {
    throw UsageError("cannot quotient by a non-congruence");
  }
  auto reps = c.representatives();
  int q = c.block_count();
  std::vector<std::vector<int>> tables(a.signature().symbol_count());
  for (int s = 0; s < a.signature().symbol_count(); ++s) {
    int arity = a.signature().symbol(s).arity;
    std::vector<int> args(arity);
    for_each_tuple(q, arity, [&](std::span<const int> blockargs) {
      for (int k = 0; k < arity; ++k) args[k] = reps[blockargs[k]];
      tables[s].push_back(c.block_of(a.apply(s, std::span<const int>(args.data(), args.size()))));
    });
  }
  FiniteAlgebra qa(a.signature_ptr(), q, std::move(tables));
  Homomorphism pr(a, qa, c.block_ids());
  return {std::move(qa), std::move(pr)};
}

std::vector<Congruence> enumerate_congruences(const FiniteAlgebra& a) {
  if (a.size() > limits().congruence_enum) {
    throw LimitError("carrier of " + std::to_string(a.size()) +
                     " exceeds the congruence_enum limit " +
                     std::to_string(limits().congruence_enum));
  }
  std::vector<Congruence> out;
  int n = a.size();
  // Walk restricted-growth strings in lexicographic order.
  std::vector<int> rgs(n, 0);
  while (true) {
    Congruence c(rgs);
    if (is_congruence(a, c)) out.push_back(std::move(c));
    // successor: find the rightmost position that may still grow
    int k = n - 1;
    for (; k >= 1; --k) {
      int maxprefix = 0;
      for (int j = 0; j < k; ++j) maxprefix = std::max(maxprefix, rgs[j]);
      if (rgs[k] <= maxprefix) break;
    }
    if (k < 1) break;
    ++rgs[k];
    for (int j = k + 1; j < n; ++j) rgs[j] = 0;
  }
  return out;
}

bool preserves_subalgebra(const Congruence& c, const Subuniverse& sub) {
  if (c.size() != sub.parent().size()) {
    throw UsageError("partition and subuniverse live on different carriers");
  }
  const auto& mem = sub.members();
  for (size_t x = 0; x < mem.size(); ++x) {
    for (size_t y = x + 1; y < mem.size(); ++y) {
      if (c.related(mem[x], mem[y])) return false;
    }
  }
  return true;
}

Homomorphism quotient_hom(const Homomorphism& h, const Congruence& c, const Congruence& d) {
  auto qa = quotient(h.source(), c);
  auto qb = quotient(h.target(), d);
  std::vector<int> map(c.block_count(), -1);
  for (int x = 0; x < h.source().size(); ++x) {
    int b = c.block_of(x);
    int v = d.block_of(h(x));
    if (map[b] == -1) {
      map[b] = v;
    } else if (map[b] != v) {
      throw UsageError("map does not carry the source partition into the target one");
    }
  }
  return Homomorphism(qa.algebra, qb.algebra, std::move(map));
}

}  // namespace lalgebra
