#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lalgebra/decomposition.hpp"

namespace lalgebra {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int instances = 0;   // 0 = suite default
  int max_size = 0;    // 0 = suite default; caps generated carrier sizes
  std::optional<Covering> fixture;  // extra instance 0 for the factorization suite
};

/// Outcome of one law checked on one instance.
struct CheckResult {
  int instance = 0;
  std::string claim;
  bool passed = false;
  std::string witness;  // empty when passed; JSON fragment otherwise
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int instances = 0;
  bool passed = false;
  std::vector<CheckResult> checks;  // failures always included; passes summarized
  int checks_run = 0;
  int checks_failed = 0;
  std::string to_json() const;  // deterministic: fixed field order, 2-space indent
};

/// Names accepted: prop4.7, prop5.2, prop5.5, prop6.3, prop6.10 (alias
/// multiadjoint), theta, plonka-axioms.  Throws UsageError on anything else.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

std::vector<std::string> suite_names();

// Individual suites (run_suite dispatches to these).
SuiteReport suite_idempotent_npi_equivalences(const SuiteOptions&);  // exhaustive n <= 3
SuiteReport suite_sum_projection(const SuiteOptions&);               // seeded systems
SuiteReport suite_functor_laws(const SuiteOptions&);                 // composable pairs
SuiteReport suite_sum_blocks(const SuiteOptions&);                   // semi-inductive block isos
SuiteReport suite_factorization(const SuiteOptions&);                // existence/uniqueness/round trip
SuiteReport suite_theta(const SuiteOptions&);                        // kernel + iso + table agreement
SuiteReport suite_plonka_axioms(const SuiteOptions&);                // D1..D5 on generated sums

}  // namespace lalgebra
