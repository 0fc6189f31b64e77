#pragma once

#include <string>
#include <vector>

namespace lalgebra {

struct OperationSymbol {
  std::string name;
  int arity = 0;

  friend bool operator==(const OperationSymbol&, const OperationSymbol&) = default;
};

/// A finite list of operation symbols with positive arities.  Nullary
/// symbols are rejected outright (constants are outside this library's
/// scope).  A signature is "plural" when some symbol has arity >= 2; most
/// of the structure theory requires that.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OperationSymbol> symbols);

  int symbol_count() const { return static_cast<int>(symbols_.size()); }
  const OperationSymbol& symbol(int s) const { return symbols_.at(s); }
  const std::vector<OperationSymbol>& symbols() const { return symbols_; }

  /// Index of the symbol with the given name, or -1.
  int index_of(const std::string& name) const;

  int max_arity() const;
  bool is_plural() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<OperationSymbol> symbols_;
};

}  // namespace lalgebra
