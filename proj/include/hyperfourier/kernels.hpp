#pragma once

// Transform kernels shared by the 2D quaternion and the 4D volume-time
// transforms. Every kernel comes in two flavours:
//
//   *_direct  serial brute-force summation, kept as the reference oracle
//   *_fast    FFT-based, data-parallel over lines (OpenMP)
//
// Arrays are row-major with dims listed major-to-minor. No normalization is
// applied; `sign` selects exp(-...) (sign = -1) or exp(+...) (sign = +1).

#include <cstddef>
#include <span>
#include <vector>

#include "hyperfourier/quaternion.hpp"

namespace hyperfourier::kernels {

/// Axis roles for a two-sided transform: axes flagged `left` contribute to
/// the phase of the left exp(i ...) factor, the others to the right exp(j ...).
struct TwoSidedLayout {
  std::vector<std::size_t> dims;
  std::vector<bool> left;

  std::size_t size() const;
};

/// F[k] = sum_x exp(sign i 2pi a(x,k)) f[x] exp(sign j 2pi b(x,k)), where a
/// (b) sums x_ax k_ax / n_ax over the left (right) axes.
std::vector<Quaternion> two_sided_direct(std::span<const Quaternion> in, const TwoSidedLayout& layout,
                                         int sign);

/// Same result via the +/- split: each half is one complex N-D FFT, the "+"
/// half read back with its right-axis frequencies negated. Throws
/// UnsupportedSizeError unless every dimension is a power of two.
std::vector<Quaternion> two_sided_fast(std::span<const Quaternion> in, const TwoSidedLayout& layout, int sign);

/// Which exponential sits next to f in a right-sided 2D transform.
enum class RightOrder {
  IThenJ,  // f exp(sign i 2pi m x/M) exp(sign j 2pi n y/N)
  JThenI,  // f exp(sign j 2pi n y/N) exp(sign i 2pi m x/M)
};

/// Right-sided 2D transform on an M x N grid stored y-major (index y*M + x).
std::vector<Quaternion> right_sided_direct(std::span<const Quaternion> in, std::size_t M, std::size_t N, int sign,
                                           RightOrder order);

/// FFT form of right_sided_direct via f = a + b j with a, b in span{1, i}.
std::vector<Quaternion> right_sided_fast(std::span<const Quaternion> in, std::size_t M, std::size_t N, int sign,
                                         RightOrder order);

/// True when every dimension admits the fast kernels.
bool fast_path_supported(std::span<const std::size_t> dims);

}  // namespace hyperfourier::kernels
