#pragma once

#include <cstdint>
#include <string>

namespace lalgebra {

/// Global enumeration bounds.  Every exhaustive search in the library refuses
/// to run past these instead of silently truncating.  The CLI seeds them from
/// the LALGEBRA_LIMITS environment variable ("key=value,key=value").
struct Limits {
  int max_arity = 3;                        // operation arity cap
  int congruence_enum = 8;                  // carrier cap for partition enumeration
  std::int64_t pcgr_tuples = 10'000;        // materialized preserving-tuple cap
  std::int64_t uniqueness_search = 1'000'000;  // candidate maps in uniqueness checks
  std::int64_t morphism_search = 1'000'000;    // candidate maps in hom/morphism enumeration
};

Limits& limits();

/// Parse an override spec like "congruence_enum=10,max_arity=4" into `lim`.
/// Unknown keys or malformed entries raise UsageError.
void apply_limit_overrides(Limits& lim, const std::string& spec);

}  // namespace lalgebra
