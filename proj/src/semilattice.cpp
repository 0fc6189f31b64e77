#include "lalgebra/semilattice.hpp"

#include "lalgebra/error.hpp"

namespace lalgebra {

Semilattice::Semilattice(int size, std::vector<int> join_table)
    : size_(size), table_(std::move(join_table)) {
  if (size_ < 1) throw UsageError("semilattice carrier must be nonempty");
  if (static_cast<int>(table_.size()) != size_ * size_) {
    throw UsageError("join table must have size*size entries");
  }
  for (int v : table_) {
    if (v < 0 || v >= size_) throw UsageError("join table entry outside carrier");
  }
  for (int x = 0; x < size_; ++x) {
    if (join(x, x) != x) throw UsageError("join is not idempotent");
    for (int y = 0; y < size_; ++y) {
      if (join(x, y) != join(y, x)) throw UsageError("join is not commutative");
      for (int z = 0; z < size_; ++z) {
        if (join(join(x, y), z) != join(x, join(y, z))) {
          throw UsageError("join is not associative");
        }
      }
    }
  }
}

std::vector<int> Semilattice::downset(int y) const {
  std::vector<int> out;
  for (int x = 0; x < size_; ++x) {
    if (leq(x, y)) out.push_back(x);
  }
  return out;
}

std::vector<Semilattice> enumerate_semilattices(int n) {
  if (n < 1) throw UsageError("semilattice enumeration needs n >= 1");
  // Free cells: the strict upper triangle; diagonal fixed by idempotency,
  // lower triangle mirrored by commutativity.
  std::vector<std::pair<int, int>> cells;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) cells.emplace_back(x, y);
  }
  std::vector<Semilattice> out;
  std::vector<int> choice(cells.size(), 0);
  while (true) {
    std::vector<int> table(n * n);
    for (int x = 0; x < n; ++x) table[x * n + x] = x;
    for (size_t c = 0; c < cells.size(); ++c) {
      auto [x, y] = cells[c];
      table[x * n + y] = choice[c];
      table[y * n + x] = choice[c];
    }
    bool assoc = true;
    for (int x = 0; x < n && assoc; ++x) {
      for (int y = 0; y < n && assoc; ++y) {
        for (int z = 0; z < n; ++z) {
          if (table[table[x * n + y] * n + z] != table[x * n + table[y * n + z]]) {
            assoc = false;
            break;
          }
        }
      }
    }
    if (assoc) out.emplace_back(n, table);
    int k = static_cast<int>(cells.size()) - 1;
    while (k >= 0 && choice[k] == n - 1) choice[k--] = 0;
    if (k < 0) break;
    ++choice[k];
  }
  return out;
}

}  // namespace lalgebra
