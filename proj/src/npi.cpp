#include "lalgebra/npi.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "lalgebra/error.hpp"

namespace lalgebra {

bool is_idempotent(const FiniteAlgebra& a) {
  for (int s = 0; s < a.signature().symbol_count(); ++s) {
    int arity = a.signature().symbol(s).arity;
    std::vector<int> diag(arity);
    for (int i = 0; i < a.size(); ++i) {
      std::fill(diag.begin(), diag.end(), i);
      if (a.apply(s, std::span<const int>(diag.data(), diag.size())) != i) return false;
    }
  }
  return true;
}

bool constant_endomorphism_check(const FiniteAlgebra& a) {
  for (int c = 0; c < a.size(); ++c) {
    std::vector<int> constant(a.size(), c);
    if (!is_homomorphism(a, a, constant)) return false;
  }
  return true;
}

bool is_naturally_preordered(const FiniteAlgebra& a) {
  Relation leq = algebraic_preorder(a);
  int n = a.size();
  for (int s = 0; s < a.signature().symbol_count(); ++s) {
    int arity = a.signature().symbol(s).arity;
    bool ok = true;
    std::vector<int> lower(arity);
    // every coordinatewise-lower tuple must give a lower value
    for_each_tuple(n, arity, [&](std::span<const int> upper) {
      if (!ok) return;
      int up = a.apply(s, upper);
      std::function<void(int)> rec = [&](int k) {
        if (!ok) return;
        if (k == arity) {
          if (!leq.contains(a.apply(s, std::span<const int>(lower.data(), lower.size())), up)) {
            ok = false;
          }
          return;
        }
        for (int b = 0; b < n && ok; ++b) {
          if (!leq.contains(b, upper[k])) continue;
          lower[k] = b;
          rec(k + 1);
        }
      };
      rec(0);
    });
    if (!ok) return false;
  }
  return true;
}

namespace {

/// Join table extracted from an order relation, or empty if some pair has
/// no unique least upper bound.
std::vector<int> join_table_of(const Relation& ord) {
  int n = ord.size();
  std::vector<int> table(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int best = -1;
      for (int u = 0; u < n; ++u) {
        if (!ord.contains(x, u) || !ord.contains(y, u)) continue;
        if (best == -1 || ord.contains(u, best)) best = u;
      }
      if (best == -1) return {};
      // least: below every other upper bound
      for (int u = 0; u < n; ++u) {
        if (ord.contains(x, u) && ord.contains(y, u) && !ord.contains(best, u)) return {};
      }
      table[x * n + y] = best;
    }
  }
  return table;
}

bool operations_are_iterated_joins(const FiniteAlgebra& a, const std::vector<int>& join) {
  int n = a.size();
  for (int s = 0; s < a.signature().symbol_count(); ++s) {
    int arity = a.signature().symbol(s).arity;
    bool ok = true;
    for_each_tuple(n, arity, [&](std::span<const int> args) {
      if (!ok) return;
      int acc = args[0];
      for (int k = 1; k < arity; ++k) acc = join[acc * n + args[k]];
      if (a.apply(s, args) != acc) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::optional<Semilattice> is_sigma_semilattice(const FiniteAlgebra& a) {
  if (!a.signature().is_plural()) {
    throw UsageError("semilattice detection needs a symbol of arity >= 2");
  }
  Relation leq = algebraic_preorder(a);
  if (!leq.is_antisymmetric()) return std::nullopt;
  auto join = join_table_of(leq);
  if (join.empty()) return std::nullopt;
  if (!operations_are_iterated_joins(a, join)) return std::nullopt;
  return Semilattice(a.size(), std::move(join));
}

std::vector<Relation> sigma_semilattice_order_search(const FiniteAlgebra& a) {
  int n = a.size();
  if (n > 4) {
    throw UsageError("full order search is exponential; carriers above 4 refused");
  }
  std::vector<std::pair<int, int>> cells;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) cells.emplace_back(x, y);
    }
  }
  std::vector<Relation> found;
  // all reflexive relations via subsets of the off-diagonal cells
  for (std::uint64_t mask = 0; mask < (1ull << cells.size()); ++mask) {
    Relation r(n);
    for (int i = 0; i < n; ++i) r.set(i, i);
    for (size_t c = 0; c < cells.size(); ++c) {
      if (mask & (1ull << c)) r.set(cells[c].first, cells[c].second);
    }
    if (!r.is_transitive() || !r.is_antisymmetric()) continue;
    auto join = join_table_of(r);
    if (join.empty()) continue;
    if (!operations_are_iterated_joins(a, join)) continue;
    found.push_back(std::move(r));
  }
  return found;
}

NpiCharacterization npi_characterization(const FiniteAlgebra& a) {
  if (!is_idempotent(a)) {
    throw UsageError("this characterization applies to idempotent algebras only");
  }
  NpiCharacterization out;
  Relation leq = algebraic_preorder(a);
  int n = a.size();

  out.monotone = is_naturally_preordered(a);

  // bounded-above closure: arguments below i give a value below i
  out.bounded = true;
  for (int s = 0; s < a.signature().symbol_count() && out.bounded; ++s) {
    int arity = a.signature().symbol(s).arity;
    for (int i = 0; i < n && out.bounded; ++i) {
      std::vector<int> args(arity);
      std::function<void(int)> rec = [&](int k) {
        if (!out.bounded) return;
        if (k == arity) {
          if (!leq.contains(a.apply(s, std::span<const int>(args.data(), args.size())), i)) {
            out.bounded = false;
          }
          return;
        }
        for (int b = 0; b < n && out.bounded; ++b) {
          if (!leq.contains(b, i)) continue;
          args[k] = b;
          rec(k + 1);
        }
      };
      rec(0);
    }
  }

  // symmetrization: x ~ y iff x <= y <= x; labels = least related element
  std::vector<int> labels(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = x;
    for (int y = 0; y < n; ++y) {
      if (leq.contains(x, y) && leq.contains(y, x)) {
        labels[x] = std::min(labels[x], y);
      }
    }
  }
  Congruence sym{labels};
  out.quotient = false;
  if (is_congruence(a, sym)) {
    auto q = quotient(a, sym);
    auto sl = is_sigma_semilattice(q.algebra);
    if (sl.has_value()) {
      out.quotient = true;
      out.witness = NpiWitness{leq, sym, *sl, q.algebra};
    }
  }
  return out;
}

bool is_npi(const FiniteAlgebra& a) {
  return is_idempotent(a) && is_naturally_preordered(a);
}

bool equivalence_classes_closed(const FiniteAlgebra& a) {
  if (!is_npi(a)) {
    throw UsageError("equivalence classes are meaningful for idempotent "
                     "naturally preordered algebras only");
  }
  auto ch = npi_characterization(a);
  if (!ch.witness.has_value()) {
    throw ConsistencyError("naturally preordered algebra lost its quotient witness");
  }
  for (const auto& block : ch.witness->equivalence.blocks()) {
    if (!is_closed_subset(a, block)) return false;
  }
  return true;
}

FiniteAlgebra semilattice_to_npi(const Semilattice& s, const Signature& sig) {
  if (!sig.is_plural()) {
    throw UsageError("a semilattice can only model a signature with some arity >= 2");
  }
  int n = s.size();
  std::vector<std::vector<int>> tables(sig.symbol_count());
  for (int sym = 0; sym < sig.symbol_count(); ++sym) {
    int arity = sig.symbol(sym).arity;
    for_each_tuple(n, arity, [&](std::span<const int> args) {
      int acc = args[0];
      for (int k = 1; k < arity; ++k) acc = s.join(acc, args[k]);
      tables[sym].push_back(acc);
    });
  }
  return FiniteAlgebra(sig, n, std::move(tables));
}

}  // namespace lalgebra
