#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sparks {

struct FuzzReport {
  std::string suite;
  long cases = 0;
  std::uint64_t seed = 0;
  long passed = 0;
  /// First failing case, rendered verbatim.
  std::optional<std::string> counterexample;

  [[nodiscard]] bool ok() const { return !counterexample && passed == cases; }
};

const std::vector<std::string>& fuzz_suites();

/// Runs a named property suite (leibniz, assoc, commut, roundtrip, agreement)
/// deterministically from `seed`; stops at the first counterexample. Throws
/// std::invalid_argument for an unknown suite.
FuzzReport run_fuzz(const std::string& suite, long cases, std::uint64_t seed);

}  // namespace sparks
