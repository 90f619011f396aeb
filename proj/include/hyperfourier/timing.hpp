#pragma once

// Direct vs. fast QFT timings on random square fields.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hyperfourier {

/// Relative error allowed between the two paths before any timing is taken.
inline constexpr double kPathMatchTolerance = 1e-9;

struct SpeedRow {
  std::size_t size = 0;       // field is size x size
  double match_error = 0.0;   // relative error of fast vs. direct forward QFT
  bool matched = false;       // timings are only taken when matched
  double direct_seconds = 0.0;
  double fast_seconds = 0.0;  // mean over enough repetitions to fill a few tenths of a second

  double speedup() const { return fast_seconds > 0.0 ? direct_seconds / fast_seconds : 0.0; }
};

/// Throws UnsupportedSizeError when size is not a power of two.
SpeedRow compare_qft_paths(std::size_t size, std::uint64_t seed);

std::string format_speed_table(const std::vector<SpeedRow>& rows);

}  // namespace hyperfourier
