#pragma once

// Complex radix-2 FFT over strided lines and dense row-major N-D arrays.
// sign = -1 computes sum x[n] exp(-2 pi i k n / N); sign = +1 the
// unnormalized backward transform.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hyperfourier::fft {

using Complex = std::complex<double>;

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

class Radix2Plan {
 public:
  /// Throws UnsupportedSizeError unless n is a power of two.
  explicit Radix2Plan(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  /// In-place transform of `n` contiguous values.
  void execute(Complex* data, int sign) const;

 private:
  std::size_t n_;
  std::vector<std::size_t> bit_reverse_;
  std::vector<Complex> twiddles_;  // exp(-2 pi i k / n), k < n/2
};

/// Transforms every axis of a row-major array; `dims` is major-to-minor.
/// Lines along each axis are processed in parallel.
void transform_nd(std::span<Complex> data, std::span<const std::size_t> dims, int sign);

}  // namespace hyperfourier::fft
