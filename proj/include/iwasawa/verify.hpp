#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace iwasawa {

struct OracleCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when everything agreed

  bool pass() const { return failures == 0; }
};

struct OracleSuiteOptions {
  /// Largest group order for the fixed-space sweep.
  std::uint64_t max_order = 100;
  std::uint64_t star_max_m = 1000;
  std::uint64_t star_max_p = 50;
  unsigned random_cases = 50;
  std::uint64_t seed = 1;
};

/// Runs each module's reference computation against the fast path.
std::vector<OracleCheck> run_oracle_suite(const OracleSuiteOptions& opt);

}  // namespace iwasawa
