#include "lalgebra/signature.hpp"

#include <algorithm>
#include <set>

#include "lalgebra/error.hpp"
#include "lalgebra/limits.hpp"

namespace lalgebra {

Signature::Signature(std::vector<OperationSymbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.arity < 1) {
      throw UsageError("symbol '" + s.name + "' has arity " + std::to_string(s.arity) +
                       "; nullary symbols are not supported");
    }
    if (s.arity > limits().max_arity) {
      throw UsageError("symbol '" + s.name + "' has arity " + std::to_string(s.arity) +
                       ", above the max_arity limit " + std::to_string(limits().max_arity));
    }
    if (!seen.insert(s.name).second) {
      throw UsageError("duplicate symbol name '" + s.name + "'");
    }
  }
}

int Signature::index_of(const std::string& name) const {
  for (int i = 0; i < symbol_count(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return -1;
}

int Signature::max_arity() const {
  int m = 0;
  for (const auto& s : symbols_) m = std::max(m, s.arity);
  return m;
}

bool Signature::is_plural() const { return max_arity() >= 2; }

}  // namespace lalgebra
