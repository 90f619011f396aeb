#pragma once

// Theorem-verification suites. Each check measures one deviation and compares
// it with a fixed tolerance; negative controls pass when the deviation stays
// above their threshold instead. Results depend only on the seed.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hyperfourier {

enum class Bound {
  AtMost,  // pass when deviation <= tolerance
  Above,   // negative control: pass when deviation > tolerance
};

struct CheckResult {
  std::string suite;
  std::string name;
  int criterion = 0;  // acceptance criterion this check feeds, 0 for supporting checks
  double deviation = 0.0;
  double tolerance = 0.0;
  Bound bound = Bound::AtMost;
  bool pass = false;
  double seconds = 0.0;
  std::string note;  // set when the check threw instead of producing a deviation
};

struct RunReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(std::string_view suite, std::string_view name) const;
};

/// quat, clifford, qft, qftr, gl2, spacetime.
const std::vector<std::string>& verification_suites();

/// Runs one suite or "all". Throws PreconditionError for an unknown suite.
/// Each suite draws from its own generator seeded by (seed, suite name), so a
/// suite reports the same values alone and inside "all".
RunReport run_verification(std::string_view suite, std::uint64_t seed);

/// Fixed-width table, one row per check, then an overall line.
std::string format_report(const RunReport& report, bool with_times = true);

}  // namespace hyperfourier
