#pragma once

// Discrete quaternion Fourier transforms of 2D quaternion fields.
//
// Two-sided QFT:   F[m,n] = sum_{x,y} exp(-i 2pi m x/M) f[x,y] exp(-j 2pi n y/N)
// Right-sided QFTr: F[m,n] = sum_{x,y} f[x,y] exp(-i 2pi m x/M) exp(-j 2pi n y/N)
//
// The forward transforms are unnormalized, the inverses carry 1/(MN). Bin m
// corresponds to the angular frequency u = 2 pi m / (M dx) (see
// QuaternionGrid2D::angular_u), so the continuous-domain factor 1/(2 pi)^2
// turns into 1/(MN) here.

#include "hyperfourier/field2d.hpp"

namespace hyperfourier {

enum class TransformPath {
  Auto,    // fast when every dimension is a power of two, direct otherwise (with a warning)
  Direct,  // brute-force summation oracle
  Fast,    // FFT; throws UnsupportedSizeError on other sizes
};

QSpectrum2D qft_forward_direct(const QuaternionField2D& f);
QSpectrum2D qft_forward_fast(const QuaternionField2D& f);
QSpectrum2D qft_forward(const QuaternionField2D& f, TransformPath path = TransformPath::Auto);

QuaternionField2D qft_inverse_direct(const QSpectrum2D& F);
QuaternionField2D qft_inverse_fast(const QSpectrum2D& F);
QuaternionField2D qft_inverse(const QSpectrum2D& F, TransformPath path = TransformPath::Auto);

QSpectrum2D qftr_forward_direct(const QuaternionField2D& f);
QSpectrum2D qftr_forward_fast(const QuaternionField2D& f);
QSpectrum2D qftr_forward(const QuaternionField2D& f, TransformPath path = TransformPath::Auto);

/// Inverse QFTr: (1/MN) sum F exp(+j 2pi n y/N) exp(+i 2pi m x/M). The
/// exponential order is the reverse of the forward transform.
QuaternionField2D qftr_inverse_direct(const QSpectrum2D& F);
QuaternionField2D qftr_inverse_fast(const QSpectrum2D& F);
QuaternionField2D qftr_inverse(const QSpectrum2D& F, TransformPath path = TransformPath::Auto);

template <class Tag>
struct GridSplit {
  QuaternionGrid2D<Tag> plus;
  QuaternionGrid2D<Tag> minus;
};

/// Pointwise split_pm. Works on fields and spectra alike.
template <class Tag>
GridSplit<Tag> split_field_pm(const QuaternionGrid2D<Tag>& f) {
  GridSplit<Tag> out{QuaternionGrid2D<Tag>(f.M(), f.N(), f.dx(), f.dy()),
                     QuaternionGrid2D<Tag>(f.M(), f.N(), f.dx(), f.dy())};
  for (std::size_t n = 0; n < f.size(); ++n) {
    const SplitPair s = split_pm(f.data()[n]);
    out.plus.data()[n] = s.plus;
    out.minus.data()[n] = s.minus;
  }
  return out;
}

/// F = F_r + i F_i + F_j j + i F_k j from four transforms of real component fields.
QSpectrum2D qft_via_components(const QuaternionField2D& f, TransformPath path = TransformPath::Auto);

/// g[x,y] = f[x - x0, y - y0] (periodic).
QuaternionField2D circular_shift(const QuaternionField2D& f, long long x0, long long y0);

/// g[x,y] = exp(i 2pi m0 x/M) f[x,y] exp(j 2pi n0 y/N); its QFT is F[m - m0, n - n0].
QuaternionField2D modulate(const QuaternionField2D& f, long long m0, long long n0);

/// g[x,y] = f[a x mod M, b y mod N]. Requires gcd(a, M) = gcd(b, N) = 1 so the
/// map permutes the lattice; then G[m,n] = F[a^-1 m, b^-1 n].
QuaternionField2D lattice_dilate(const QuaternionField2D& f, long long a, long long b);

/// Multiplicative inverse of a modulo n; throws PreconditionError when gcd(a, n) != 1.
long long modular_inverse(long long a, long long n);

}  // namespace hyperfourier
