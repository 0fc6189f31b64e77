#pragma once

#include <string>
#include <vector>

#include "lalgebra/fixtures.hpp"
#include "lalgebra/limits.hpp"

namespace testing {

/// Scoped override of the global limits; restores the previous values on
/// exit so tests can tighten a cap without leaking it into later cases.
class LimitGuard {
 public:
  LimitGuard() : saved_(lalgebra::limits()) {}
  ~LimitGuard() { lalgebra::limits() = saved_; }
  LimitGuard(const LimitGuard&) = delete;
  LimitGuard& operator=(const LimitGuard&) = delete;

 private:
  lalgebra::Limits saved_;
};

/// An algebra over the one-binary-symbol signature from a flat table.
inline lalgebra::FiniteAlgebra binary_algebra(int n, std::vector<int> table) {
  return lalgebra::FiniteAlgebra(lalgebra::fixtures::sig1(), n, {std::move(table)});
}

inline std::string fixture_path(const std::string& file) {
  return std::string(FIXTURE_DIR) + "/" + file;
}

}  // namespace testing
