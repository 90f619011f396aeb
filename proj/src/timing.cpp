#include "hyperfourier/timing.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include "hyperfourier/errors.hpp"
#include "hyperfourier/fft.hpp"
#include "hyperfourier/qft2d.hpp"

namespace hyperfourier {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

SpeedRow compare_qft_paths(std::size_t size, std::uint64_t seed) {
  if (!fft::is_power_of_two(size)) {
    throw UnsupportedSizeError("benchmark size " + std::to_string(size) + " is not a power of two");
  }
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  QuaternionField2D f(size, size);
  for (Quaternion& q : f.data()) q = {u(gen), u(gen), u(gen), u(gen)};

  SpeedRow row;
  row.size = size;
  auto start = Clock::now();
  const QSpectrum2D direct = qft_forward_direct(f);
  row.direct_seconds = seconds_since(start);
  const QSpectrum2D fast = qft_forward_fast(f);
  row.match_error = relative_error(fast, direct);
  row.matched = row.match_error <= kPathMatchTolerance;
  if (!row.matched) {
    row.direct_seconds = 0.0;
    return row;
  }

  // best of a few direct runs while they stay cheap
  for (int rep = 1; rep < 3 && row.direct_seconds < 0.5; ++rep) {
    start = Clock::now();
    (void)qft_forward_direct(f);
    row.direct_seconds = std::min(row.direct_seconds, seconds_since(start));
  }
  int reps = 0;
  start = Clock::now();
  double elapsed = 0.0;
  do {
    (void)qft_forward_fast(f);
    ++reps;
    elapsed = seconds_since(start);
  } while (elapsed < 0.2);
  row.fast_seconds = elapsed / reps;
  return row;
}

std::string format_speed_table(const std::vector<SpeedRow>& rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-9s %11s %12s %12s %9s\n", "size", "match", "direct[s]", "fast[s]", "speedup");
  out += line;
  for (const SpeedRow& r : rows) {
    const std::string size = std::to_string(r.size) + "x" + std::to_string(r.size);
    if (r.matched) {
      std::snprintf(line, sizeof line, "%-9s %11.3e %12.6f %12.6f %8.1fx\n", size.c_str(), r.match_error,
                    r.direct_seconds, r.fast_seconds, r.speedup());
    } else {
      std::snprintf(line, sizeof line, "%-9s %11.3e  paths disagree, not timed\n", size.c_str(), r.match_error);
    }
    out += line;
  }
  return out;
}

}  // namespace hyperfourier
