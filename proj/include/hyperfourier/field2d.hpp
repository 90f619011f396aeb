#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "hyperfourier/errors.hpp"
#include "hyperfourier/quaternion.hpp"

namespace hyperfourier {

/// M x N grid of quaternions, x fastest (index y*M + x), with sample spacings.
/// `Tag` keeps sample-domain fields and spectra apart at compile time.
template <class Tag>
class QuaternionGrid2D {
 public:
  QuaternionGrid2D(std::size_t M, std::size_t N, double dx = 1.0, double dy = 1.0)
      : QuaternionGrid2D(M, N, std::vector<Quaternion>(M * N), dx, dy) {}

  QuaternionGrid2D(std::size_t M, std::size_t N, std::vector<Quaternion> data, double dx = 1.0, double dy = 1.0)
      : M_(M), N_(N), dx_(dx), dy_(dy), data_(std::move(data)) {
    if (M == 0 || N == 0) throw PreconditionError("grid dimensions must be positive");
    if (!(dx > 0.0) || !(dy > 0.0)) throw PreconditionError("grid spacings must be positive");
    if (data_.size() != M * N) throw PreconditionError("grid data length must equal M * N");
  }

  std::size_t M() const noexcept { return M_; }
  std::size_t N() const noexcept { return N_; }
  double dx() const noexcept { return dx_; }
  double dy() const noexcept { return dy_; }
  std::size_t size() const noexcept { return data_.size(); }

  Quaternion& at(std::size_t x, std::size_t y) { return data_[y * M_ + x]; }
  const Quaternion& at(std::size_t x, std::size_t y) const { return data_[y * M_ + x]; }

  /// Periodic access; indices wrap modulo the grid.
  const Quaternion& wrapped(long long x, long long y) const {
    return at(wrap(x, M_), wrap(y, N_));
  }

  std::span<Quaternion> data() noexcept { return data_; }
  std::span<const Quaternion> data() const noexcept { return data_; }
  const std::vector<Quaternion>& values() const noexcept { return data_; }

  /// Angular frequency of bin (m, n): 2 pi m~ / (M dx) with m~ the signed bin index.
  double angular_u(std::size_t m) const { return 2.0 * std::numbers::pi * signed_bin(m, M_) / (M_ * dx_); }
  double angular_v(std::size_t n) const { return 2.0 * std::numbers::pi * signed_bin(n, N_) / (N_ * dy_); }

  static std::size_t wrap(long long i, std::size_t n) {
    const auto nn = static_cast<long long>(n);
    return static_cast<std::size_t>(((i % nn) + nn) % nn);
  }

  /// Bin index mapped to (-n/2, n/2].
  static double signed_bin(std::size_t k, std::size_t n) {
    return 2 * k > n ? static_cast<double>(k) - static_cast<double>(n) : static_cast<double>(k);
  }

 private:
  std::size_t M_;
  std::size_t N_;
  double dx_;
  double dy_;
  std::vector<Quaternion> data_;
};

struct FieldTag;
struct SpectrumTag;

using QuaternionField2D = QuaternionGrid2D<FieldTag>;
using QSpectrum2D = QuaternionGrid2D<SpectrumTag>;

template <class Tag>
bool same_shape(const QuaternionGrid2D<Tag>& a, const QuaternionGrid2D<Tag>& b) {
  return a.M() == b.M() && a.N() == b.N();
}

/// Quaternion-valued inner product sum f conj(g).
template <class Tag>
Quaternion inner_product(const QuaternionGrid2D<Tag>& f, const QuaternionGrid2D<Tag>& g) {
  if (!same_shape(f, g)) throw PreconditionError("inner_product: shapes differ");
  Quaternion acc;
  for (std::size_t n = 0; n < f.size(); ++n) acc += f.data()[n] * conj(g.data()[n]);
  return acc;
}

/// Symmetric scalar product sum <f conj(g)>_0.
template <class Tag>
double scalar_product(const QuaternionGrid2D<Tag>& f, const QuaternionGrid2D<Tag>& g) {
  return scalar_part(inner_product(f, g));
}

template <class Tag>
double energy(const QuaternionGrid2D<Tag>& f) {
  double e = 0.0;
  for (const Quaternion& q : f.data()) e += norm_squared(q);
  return e;
}

/// sqrt(sum |a - b|^2) / sqrt(sum |b|^2); absolute when b is zero.
template <class Tag>
double relative_error(const QuaternionGrid2D<Tag>& a, const QuaternionGrid2D<Tag>& b) {
  if (!same_shape(a, b)) throw PreconditionError("relative_error: shapes differ");
  double diff = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) diff += norm_squared(a.data()[n] - b.data()[n]);
  const double ref = energy(b);
  return ref > 0.0 ? std::sqrt(diff / ref) : std::sqrt(diff);
}

template <class Tag>
double max_abs_diff(const QuaternionGrid2D<Tag>& a, const QuaternionGrid2D<Tag>& b) {
  if (!same_shape(a, b)) throw PreconditionError("max_abs_diff: shapes differ");
  double m = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) m = std::fmax(m, max_abs_diff(a.data()[n], b.data()[n]));
  return m;
}

}  // namespace hyperfourier
