#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lalgebra/signature.hpp"

namespace lalgebra {

/// One structural complaint from a validator.  `condition` is a short tag
/// ("entry-range", "closure", "hom", "a", "b", ...) and `message` spells out
/// the symbol and index tuple involved.
struct Violation {
  std::string condition;
  std::string message;
};

/// Run `body` over every `arity`-tuple with entries in {0..size-1}, in
/// lexicographic order.  The span passed to `body` is reused between calls.
void for_each_tuple(int size, int arity,
                    const std::function<void(std::span<const int>)>& body);

/// A finite algebra: carrier {0..size-1} plus one dense operation table per
/// signature symbol, stored row-major (first argument varies slowest).
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;

  /// Throws UsageError on shape problems (table sizes, arity over the
  /// configured cap).  Out-of-range table entries are reported by
  /// validate_algebra instead, so documents can be loaded and then checked.
  FiniteAlgebra(std::shared_ptr<const Signature> sig, int size,
                std::vector<std::vector<int>> tables);
  FiniteAlgebra(const Signature& sig, int size,
                std::vector<std::vector<int>> tables);

  const Signature& signature() const { return *sig_; }
  std::shared_ptr<const Signature> signature_ptr() const { return sig_; }
  int size() const { return size_; }

  const std::vector<int>& table(int s) const { return tables_.at(s); }

  /// Flat row-major index of `args` in an `arity`-dimensional table.
  int flat_index(std::span<const int> args) const;

  int apply(int s, std::span<const int> args) const;
  int apply(int s, std::initializer_list<int> args) const;

  /// Same carrier, same signature contents, same tables.
  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b);

 private:
  std::shared_ptr<const Signature> sig_;
  int size_ = 0;
  std::vector<std::vector<int>> tables_;
};

/// Every table has length size^arity and entries inside the carrier.
std::vector<Violation> validate_algebra(const FiniteAlgebra& a);

/// A nonempty closed subset of an algebra's carrier, kept sorted.
class Subuniverse {
 public:
  /// Throws UsageError unless `members` is nonempty, in-range, duplicate-free
  /// and closed under every operation.
  Subuniverse(FiniteAlgebra parent, std::vector<int> members);

  const FiniteAlgebra& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  bool contains(int x) const;
  /// Position of `x` in the sorted member list; throws UsageError if absent.
  int position(int x) const;

 private:
  FiniteAlgebra parent_;
  std::vector<int> members_;
};

bool is_closed_subset(const FiniteAlgebra& a, const std::vector<int>& members);

/// Least subuniverse containing `seed` (throws UsageError on empty seed,
/// since carriers here are nonempty by definition).
Subuniverse generated_subuniverse(const FiniteAlgebra& a, const std::vector<int>& seed);

/// The algebra induced on a closed subset, relabelled to {0..k-1} along the
/// sorted member list.
FiniteAlgebra induced_algebra(const FiniteAlgebra& a, const std::vector<int>& members);

}  // namespace lalgebra
