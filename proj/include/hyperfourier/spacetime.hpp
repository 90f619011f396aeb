#pragma once

// Volume-time and spacetime Fourier transforms of Cl(3,1)-valued 4D fields.
//
//   F[s, u] = sum_{t, x} exp(-e0 2pi ts/T) f[t, x] exp(-i3 2pi (mx/X + ny/Y + pz/Z))
//
// with u = (m, n, p). The VtFT is this sum for fields valued in
// span{1, e0, i3, i4}; the SFT applies the same kernels to any Cl(3,1) value.
// The inverse flips both kernel signs and divides by T X Y Z.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "hyperfourier/autom.hpp"
#include "hyperfourier/clifford.hpp"
#include "hyperfourier/errors.hpp"
#include "hyperfourier/qft2d.hpp"

namespace hyperfourier {

/// T x X x Y x Z grid of Cl(3,1) multivectors, t-major (z fastest).
template <class Tag>
class SpacetimeGrid4D {
 public:
  using Dims = std::array<std::size_t, 4>;
  using Spacings = std::array<double, 4>;
  using Index = std::array<std::size_t, 4>;

  explicit SpacetimeGrid4D(Dims dims, Spacings spacing = {1.0, 1.0, 1.0, 1.0})
      : SpacetimeGrid4D(dims, std::vector<Multivector>(product(dims), Multivector(sta::signature())), spacing) {}

  SpacetimeGrid4D(Dims dims, std::vector<Multivector> data, Spacings spacing = {1.0, 1.0, 1.0, 1.0})
      : dims_(dims), spacing_(spacing), data_(std::move(data)) {
    for (std::size_t a = 0; a < 4; ++a) {
      if (dims_[a] == 0) throw PreconditionError("spacetime grid dimensions must be positive");
      if (!(spacing_[a] > 0.0)) throw PreconditionError("spacetime grid spacings must be positive");
    }
    if (data_.size() != product(dims_)) throw PreconditionError("spacetime grid data length must equal T*X*Y*Z");
    for (const Multivector& mv : data_) {
      if (mv.signature() != sta::signature()) throw SignatureMismatch("spacetime grid samples must lie in Cl(3,1)");
    }
  }

  const Dims& dims() const noexcept { return dims_; }
  const Spacings& spacing() const noexcept { return spacing_; }
  std::size_t size() const noexcept { return data_.size(); }

  std::size_t offset(const Index& i) const { return ((i[0] * dims_[1] + i[1]) * dims_[2] + i[2]) * dims_[3] + i[3]; }
  Index index(std::size_t offset) const {
    Index i{};
    for (std::size_t a = 4; a-- > 0;) {
      i[a] = offset % dims_[a];
      offset /= dims_[a];
    }
    return i;
  }

  Multivector& at(const Index& i) { return data_[offset(i)]; }
  const Multivector& at(const Index& i) const { return data_[offset(i)]; }

  std::span<Multivector> data() noexcept { return data_; }
  std::span<const Multivector> data() const noexcept { return data_; }

  /// Angular frequency of bin k on axis a: 2 pi k~ / (n_a d_a) with k~ the signed bin.
  double angular(std::size_t axis, std::size_t k) const {
    return 2.0 * std::numbers::pi * QuaternionField2D::signed_bin(k, dims_[axis]) / (dims_[axis] * spacing_[axis]);
  }

  static std::size_t product(const Dims& d) { return d[0] * d[1] * d[2] * d[3]; }

 private:
  Dims dims_;
  Spacings spacing_;
  std::vector<Multivector> data_;
};

using SpacetimeField4D = SpacetimeGrid4D<FieldTag>;
using STSpectrum4D = SpacetimeGrid4D<SpectrumTag>;

template <class Tag>
double energy(const SpacetimeGrid4D<Tag>& f) {
  double e = 0.0;
  for (const Multivector& mv : f.data()) e += norm_squared(mv);
  return e;
}

/// Frobenius relative error against b; absolute when b is zero.
template <class Tag>
double relative_error(const SpacetimeGrid4D<Tag>& a, const SpacetimeGrid4D<Tag>& b) {
  if (a.dims() != b.dims()) throw PreconditionError("relative_error: shapes differ");
  double diff = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) diff += norm_squared(a.data()[n] - b.data()[n]);
  const double ref = energy(b);
  return ref > 0.0 ? std::sqrt(diff / ref) : std::sqrt(diff);
}

template <class Tag>
double max_abs_diff(const SpacetimeGrid4D<Tag>& a, const SpacetimeGrid4D<Tag>& b) {
  if (a.dims() != b.dims()) throw PreconditionError("max_abs_diff: shapes differ");
  double m = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) m = std::fmax(m, max_abs_diff(a.data()[n], b.data()[n]));
  return m;
}

// VtFT. Samples outside span{1, e0, i3, i4} raise SupportError naming the
// first offending (t, x, y, z) index.
STSpectrum4D vtft_forward_direct(const SpacetimeField4D& f);
STSpectrum4D vtft_forward_fast(const SpacetimeField4D& f);
STSpectrum4D vtft_forward(const SpacetimeField4D& f, TransformPath path = TransformPath::Auto);
SpacetimeField4D vtft_inverse_direct(const STSpectrum4D& F);
SpacetimeField4D vtft_inverse_fast(const STSpectrum4D& F);
SpacetimeField4D vtft_inverse(const STSpectrum4D& F, TransformPath path = TransformPath::Auto);

/// Per-sample Clifford-product summation; the oracle for small grids.
STSpectrum4D sft_forward_direct(const SpacetimeField4D& f);
SpacetimeField4D sft_inverse_direct(const STSpectrum4D& F);
/// Four fast VtFTs through decompose_vt, recombined by right multiplication.
STSpectrum4D sft_forward_fast(const SpacetimeField4D& f);
SpacetimeField4D sft_inverse_fast(const STSpectrum4D& F);
STSpectrum4D sft_forward(const SpacetimeField4D& f, TransformPath path = TransformPath::Auto);
SpacetimeField4D sft_inverse(const STSpectrum4D& F, TransformPath path = TransformPath::Auto);

/// Right factors 1, e1, e2, e3 of the V_t decomposition.
Multivector vt_right_factor(int k);

/// Coefficients g_k with mv = g_0 + g_1 e1 + g_2 e2 + g_3 e3, each g_k V_t-valued.
std::array<Multivector, 4> decompose_vt(const Multivector& mv);
Multivector recompose_vt(const std::array<Multivector, 4>& parts);

template <class Tag>
std::array<SpacetimeGrid4D<Tag>, 4> decompose_vt(const SpacetimeGrid4D<Tag>& f) {
  std::array<SpacetimeGrid4D<Tag>, 4> out{SpacetimeGrid4D<Tag>(f.dims(), f.spacing()),
                                          SpacetimeGrid4D<Tag>(f.dims(), f.spacing()),
                                          SpacetimeGrid4D<Tag>(f.dims(), f.spacing()),
                                          SpacetimeGrid4D<Tag>(f.dims(), f.spacing())};
  for (std::size_t n = 0; n < f.size(); ++n) {
    const auto g = decompose_vt(f.data()[n]);
    for (std::size_t k = 0; k < 4; ++k) out[k].data()[n] = g[k];
  }
  return out;
}

template <class Tag>
SpacetimeGrid4D<Tag> recompose_vt(const std::array<SpacetimeGrid4D<Tag>, 4>& parts) {
  SpacetimeGrid4D<Tag> out(parts[0].dims(), parts[0].spacing());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out.data()[n] = recompose_vt({parts[0].data()[n], parts[1].data()[n], parts[2].data()[n], parts[3].data()[n]});
  }
  return out;
}

/// f_+- = (f +- e0 f i3) / 2.
std::pair<Multivector, Multivector> split_spacetime_pm(const Multivector& mv);

template <class Tag>
std::pair<SpacetimeGrid4D<Tag>, SpacetimeGrid4D<Tag>> split_spacetime_pm(const SpacetimeGrid4D<Tag>& f) {
  SpacetimeGrid4D<Tag> plus(f.dims(), f.spacing()), minus(f.dims(), f.spacing());
  for (std::size_t n = 0; n < f.size(); ++n) {
    auto [p, m] = split_spacetime_pm(f.data()[n]);
    plus.data()[n] = std::move(p);
    minus.data()[n] = std::move(m);
  }
  return {std::move(plus), std::move(minus)};
}

/// Sum of squared magnitudes of f_+ and f_-; magnitudes use the euclidean adjoint.
struct EnergySplit {
  double plus;
  double minus;
};
EnergySplit wave_packet_energy_split(const SpacetimeField4D& f);

/// Right-sided kernel with a Minkowski phase, summed directly:
///   sum f exp(-i3 2pi (mx/X + ny/Y + pz/Z + time_sign ts/T)).
/// For e0 f i3 = f (the + half) the SFT equals this with time_sign = -1; for
/// the - half with time_sign = +1.
STSpectrum4D minkowski_half_transform(const SpacetimeField4D& f, int time_sign);

/// SFT assembled as minkowski_half_transform(f_+, -1) + minkowski_half_transform(f_-, +1).
STSpectrum4D sft_recombined(const SpacetimeField4D& f);

/// Transformation law under x -> A x for signed permutations of (t, x, y, z)
/// that map the grid onto itself:
///   SFT{f(A x)}(u) = |det A^-1| {F_-(adj(A^-1) u) + F_+(U_e0 adj(A^-1) U_e0 u)}.
struct SpacetimeGlReport {
  double law;       // relative error of the split law
  double unsplit;   // relative error of F(adj(A^-1) u), without the split
};
/// Throws UnsupportedMapError unless A is a signed permutation pairing axes of equal size.
SpacetimeGlReport verify_sft_gl(const LinearMap4& A, const SpacetimeField4D& f);

/// Samples g[x] = f[A x mod dims]; same preconditions as verify_sft_gl.
SpacetimeField4D lattice_transform(const SpacetimeField4D& f, const LinearMap4& A);

}  // namespace hyperfourier
