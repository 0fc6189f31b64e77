#include "lalgebra/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "lalgebra/error.hpp"

namespace lalgebra {

void for_each_tuple(int size, int arity,
                    const std::function<void(std::span<const int>)>& body) {
  if (arity == 0) {
    body({});
    return;
  }
  if (size <= 0) return;
  std::vector<int> t(arity, 0);
  while (true) {
    body(std::span<const int>(t.data(), t.size()));
    int k = arity - 1;
    while (k >= 0 && t[k] == size - 1) t[k--] = 0;
    if (k < 0) return;
    ++t[k];
  }
}

namespace {

std::int64_t table_length(int size, int arity) {
  std::int64_t len = 1;
  for (int k = 0; k < arity; ++k) len *= size;
  return len;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::shared_ptr<const Signature> sig, int size,
                             std::vector<std::vector<int>> tables)
    : sig_(std::move(sig)), size_(size), tables_(std::move(tables)) {
  if (!sig_) throw UsageError("algebra needs a signature");
  if (size_ < 1) throw UsageError("carrier must be nonempty");
  if (static_cast<int>(tables_.size()) != sig_->symbol_count()) {
    throw UsageError("expected " + std::to_string(sig_->symbol_count()) + " tables, got " +
                     std::to_string(tables_.size()));
  }
  for (int s = 0; s < sig_->symbol_count(); ++s) {
    auto want = table_length(size_, sig_->symbol(s).arity);
    if (static_cast<std::int64_t>(tables_[s].size()) != want) {
      throw UsageError("table for '" + sig_->symbol(s).name + "' has " +
                       std::to_string(tables_[s].size()) + " entries, expected " +
                       std::to_string(want));
    }
  }
}

FiniteAlgebra::FiniteAlgebra(const Signature& sig, int size,
                             std::vector<std::vector<int>> tables)
    : FiniteAlgebra(std::make_shared<Signature>(sig), size, std::move(tables)) {}

int FiniteAlgebra::flat_index(std::span<const int> args) const {
  int idx = 0;
  for (int a : args) idx = idx * size_ + a;
  return idx;
}

int FiniteAlgebra::apply(int s, std::span<const int> args) const {
  const auto& sym = sig_->symbol(s);
  if (static_cast<int>(args.size()) != sym.arity) {
    throw UsageError("'" + sym.name + "' takes " + std::to_string(sym.arity) +
                     " arguments, got " + std::to_string(args.size()));
  }
  for (int a : args) {
    if (a < 0 || a >= size_) throw UsageError("argument out of carrier range");
  }
  return tables_[s][flat_index(args)];
}

int FiniteAlgebra::apply(int s, std::initializer_list<int> args) const {
  std::vector<int> v(args);
  return apply(s, std::span<const int>(v.data(), v.size()));
}

bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size_ != b.size_) return false;
  if (a.sig_ == b.sig_ || (a.sig_ && b.sig_ && *a.sig_ == *b.sig_)) {
    return a.tables_ == b.tables_;
  }
  return false;
}

std::vector<Violation> validate_algebra(const FiniteAlgebra& a) {
  std::vector<Violation> out;
  for (int s = 0; s < a.signature().symbol_count(); ++s) {
    const auto& tab = a.table(s);
    for (size_t i = 0; i < tab.size(); ++i) {
      if (tab[i] < 0 || tab[i] >= a.size()) {
        out.push_back({"entry-range",
                       "table '" + a.signature().symbol(s).name + "' entry " +
                           std::to_string(i) + " = " + std::to_string(tab[i]) +
                           " outside carrier of size " + std::to_string(a.size())});
      }
    }
  }
  return out;
}

namespace {

void check_member_list(int carrier, const std::vector<int>& members) {
  if (members.empty()) throw UsageError("member list must be nonempty");
  for (size_t k = 0; k < members.size(); ++k) {
    if (members[k] < 0 || members[k] >= carrier) {
      throw UsageError("member " + std::to_string(members[k]) + " outside carrier");
    }
    if (k > 0 && members[k] <= members[k - 1]) {
      throw UsageError("member list must be strictly increasing");
    }
  }
}

}  // namespace

Subuniverse::Subuniverse(FiniteAlgebra parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  check_member_list(parent_.size(), members_);
  if (!is_closed_subset(parent_, members_)) {
    throw UsageError("member list is not closed under the operations");
  }
}

bool Subuniverse::contains(int x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

int Subuniverse::position(int x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) {
    throw UsageError("element " + std::to_string(x) + " is not a member");
  }
  return static_cast<int>(it - members_.begin());
}

bool is_closed_subset(const FiniteAlgebra& a, const std::vector<int>& members) {
  check_member_list(a.size(), members);
  int m = static_cast<int>(members.size());
  bool closed = true;
  for (int s = 0; s < a.signature().symbol_count() && closed; ++s) {
    int arity = a.signature().symbol(s).arity;
    std::vector<int> args(arity);
    for_each_tuple(m, arity, [&](std::span<const int> pos) {
      if (!closed) return;
      for (int k = 0; k < arity; ++k) args[k] = members[pos[k]];
      int v = a.apply(s, std::span<const int>(args.data(), args.size()));
      if (!std::binary_search(members.begin(), members.end(), v)) closed = false;
    });
  }
  return closed;
}

Subuniverse generated_subuniverse(const FiniteAlgebra& a, const std::vector<int>& seed) {
  if (seed.empty()) throw UsageError("generated_subuniverse needs a nonempty seed");
  std::set<int> current(seed.begin(), seed.end());
  for (int x : current) {
    if (x < 0 || x >= a.size()) throw UsageError("seed element outside carrier");
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> mem(current.begin(), current.end());
    int m = static_cast<int>(mem.size());
    for (int s = 0; s < a.signature().symbol_count(); ++s) {
      int arity = a.signature().symbol(s).arity;
      std::vector<int> args(arity);
      for_each_tuple(m, arity, [&](std::span<const int> pos) {
        for (int k = 0; k < arity; ++k) args[k] = mem[pos[k]];
        int v = a.apply(s, std::span<const int>(args.data(), args.size()));
        if (current.insert(v).second) grew = true;
      });
    }
  }
  return Subuniverse(a, std::vector<int>(current.begin(), current.end()));
}

FiniteAlgebra induced_algebra(const FiniteAlgebra& a, const std::vector<int>& members) {
  if (!is_closed_subset(a, members)) {
    throw UsageError("cannot induce an algebra on a non-closed subset");
  }
  int m = static_cast<int>(members.size());
  std::vector<int> back(a.size(), -1);
  for (int p = 0; p < m; ++p) back[members[p]] = p;
  std::vector<std::vector<int>> tables(a.signature().symbol_count());
  for (int s = 0; s < a.signature().symbol_count(); ++s) {
    int arity = a.signature().symbol(s).arity;
    std::vector<int> args(arity);
    tables[s].reserve(static_cast<size_t>(table_length(m, arity)));
    for_each_tuple(m, arity, [&](std::span<const int> pos) {
      for (int k = 0; k < arity; ++k) args[k] = members[pos[k]];
      tables[s].push_back(back[a.apply(s, std::span<const int>(args.data(), args.size()))]);
    });
  }
  return FiniteAlgebra(a.signature_ptr(), m, std::move(tables));
}

}  // namespace lalgebra
