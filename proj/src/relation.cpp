#include "lalgebra/relation.hpp"

#include "lalgebra/error.hpp"

namespace lalgebra {

Relation::Relation(int size) : size_(size), bits_(static_cast<size_t>(size) * size, 0) {
  if (size < 0) throw UsageError("relation size must be nonnegative");
}

bool Relation::is_reflexive() const {
  for (int i = 0; i < size_; ++i) {
    if (!contains(i, i)) return false;
  }
  return true;
}

bool Relation::is_transitive() const {
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      if (!contains(a, b)) continue;
      for (int c = 0; c < size_; ++c) {
        if (contains(b, c) && !contains(a, c)) return false;
      }
    }
  }
  return true;
}

bool Relation::is_antisymmetric() const {
  for (int a = 0; a < size_; ++a) {
    for (int b = a + 1; b < size_; ++b) {
      if (contains(a, b) && contains(b, a)) return false;
    }
  }
  return true;
}

Relation Relation::reflexive_transitive_closure() const {
  Relation r = *this;
  for (int i = 0; i < size_; ++i) r.set(i, i);
  // Floyd–Warshall on booleans.
  for (int k = 0; k < size_; ++k) {
    for (int i = 0; i < size_; ++i) {
      if (!r.contains(i, k)) continue;
      for (int j = 0; j < size_; ++j) {
        if (r.contains(k, j)) r.set(i, j);
      }
    }
  }
  return r;
}

std::vector<int> Relation::below(int a) const {
  std::vector<int> out;
  for (int b = 0; b < size_; ++b) {
    if (contains(b, a)) out.push_back(b);
  }
  return out;
}

std::vector<int> Relation::above(int a) const {
  std::vector<int> out;
  for (int c = 0; c < size_; ++c) {
    if (contains(a, c)) out.push_back(c);
  }
  return out;
}

Relation predecessor_relation(const FiniteAlgebra& a) {
  if (a.signature().symbol_count() == 0) {
    throw UsageError("predecessor relation needs at least one operation symbol");
  }
  Relation r(a.size());
  for (int s = 0; s < a.signature().symbol_count(); ++s) {
    int arity = a.signature().symbol(s).arity;
    for_each_tuple(a.size(), arity, [&](std::span<const int> args) {
      int out = a.apply(s, args);
      for (int b : args) r.set(b, out);
    });
  }
  return r;
}

Relation algebraic_preorder(const FiniteAlgebra& a) {
  return predecessor_relation(a).reflexive_transitive_closure();
}

}  // namespace lalgebra
