#include "hyperfourier/qft2d.hpp"

#include <numeric>
#include <string>

#include "hyperfourier/kernels.hpp"
#include "hyperfourier/parallel.hpp"

namespace hyperfourier {

namespace {

// Axis 0 is y (major, right exponential), axis 1 is x (minor, left exponential).
kernels::TwoSidedLayout layout_2d(std::size_t M, std::size_t N) { return {{N, M}, {false, true}}; }

bool fast_ok(std::size_t M, std::size_t N) {
  const std::size_t dims[2] = {N, M};
  return kernels::fast_path_supported(dims);
}

bool use_fast(TransformPath path, std::size_t M, std::size_t N, const char* name) {
  switch (path) {
    case TransformPath::Direct:
      return false;
    case TransformPath::Fast:
      return true;
    case TransformPath::Auto:
      break;
  }
  if (fast_ok(M, N)) return true;
  warn(std::string(name) + ": " + std::to_string(M) + "x" + std::to_string(N) +
       " is not a power-of-two grid, falling back to the O((MN)^2) direct transform");
  return false;
}

template <class OutTag, class InTag>
QuaternionGrid2D<OutTag> wrap_result(const QuaternionGrid2D<InTag>& in, std::vector<Quaternion> data,
                                     double scale = 1.0) {
  if (scale != 1.0) {
    for (Quaternion& q : data) q *= scale;
  }
  return QuaternionGrid2D<OutTag>(in.M(), in.N(), std::move(data), in.dx(), in.dy());
}

template <class Tag>
double inverse_scale(const QuaternionGrid2D<Tag>& g) {
  return 1.0 / static_cast<double>(g.M() * g.N());
}

}  // namespace

QSpectrum2D qft_forward_direct(const QuaternionField2D& f) {
  return wrap_result<SpectrumTag>(f, kernels::two_sided_direct(f.data(), layout_2d(f.M(), f.N()), -1));
}

QSpectrum2D qft_forward_fast(const QuaternionField2D& f) {
  return wrap_result<SpectrumTag>(f, kernels::two_sided_fast(f.data(), layout_2d(f.M(), f.N()), -1));
}

QSpectrum2D qft_forward(const QuaternionField2D& f, TransformPath path) {
  return use_fast(path, f.M(), f.N(), "qft") ? qft_forward_fast(f) : qft_forward_direct(f);
}

QuaternionField2D qft_inverse_direct(const QSpectrum2D& F) {
  return wrap_result<FieldTag>(F, kernels::two_sided_direct(F.data(), layout_2d(F.M(), F.N()), +1),
                               inverse_scale(F));
}

QuaternionField2D qft_inverse_fast(const QSpectrum2D& F) {
  return wrap_result<FieldTag>(F, kernels::two_sided_fast(F.data(), layout_2d(F.M(), F.N()), +1),
                               inverse_scale(F));
}

QuaternionField2D qft_inverse(const QSpectrum2D& F, TransformPath path) {
  return use_fast(path, F.M(), F.N(), "iqft") ? qft_inverse_fast(F) : qft_inverse_direct(F);
}

QSpectrum2D qftr_forward_direct(const QuaternionField2D& f) {
  return wrap_result<SpectrumTag>(
      f, kernels::right_sided_direct(f.data(), f.M(), f.N(), -1, kernels::RightOrder::IThenJ));
}

QSpectrum2D qftr_forward_fast(const QuaternionField2D& f) {
  return wrap_result<SpectrumTag>(
      f, kernels::right_sided_fast(f.data(), f.M(), f.N(), -1, kernels::RightOrder::IThenJ));
}

QSpectrum2D qftr_forward(const QuaternionField2D& f, TransformPath path) {
  return use_fast(path, f.M(), f.N(), "qftr") ? qftr_forward_fast(f) : qftr_forward_direct(f);
}

QuaternionField2D qftr_inverse_direct(const QSpectrum2D& F) {
  return wrap_result<FieldTag>(
      F, kernels::right_sided_direct(F.data(), F.M(), F.N(), +1, kernels::RightOrder::JThenI), inverse_scale(F));
}

QuaternionField2D qftr_inverse_fast(const QSpectrum2D& F) {
  return wrap_result<FieldTag>(
      F, kernels::right_sided_fast(F.data(), F.M(), F.N(), +1, kernels::RightOrder::JThenI), inverse_scale(F));
}

QuaternionField2D qftr_inverse(const QSpectrum2D& F, TransformPath path) {
  return use_fast(path, F.M(), F.N(), "iqftr") ? qftr_inverse_fast(F) : qftr_inverse_direct(F);
}

QSpectrum2D qft_via_components(const QuaternionField2D& f, TransformPath path) {
  const std::size_t M = f.M();
  const std::size_t N = f.N();
  QuaternionField2D parts[4] = {QuaternionField2D(M, N, f.dx(), f.dy()), QuaternionField2D(M, N, f.dx(), f.dy()),
                                QuaternionField2D(M, N, f.dx(), f.dy()), QuaternionField2D(M, N, f.dx(), f.dy())};
  for (std::size_t n = 0; n < f.size(); ++n) {
    const Quaternion& q = f.data()[n];
    parts[0].data()[n] = q.r;
    parts[1].data()[n] = q.i;
    parts[2].data()[n] = q.j;
    parts[3].data()[n] = q.k;
  }
  const QSpectrum2D Fr = qft_forward(parts[0], path);
  const QSpectrum2D Fi = qft_forward(parts[1], path);
  const QSpectrum2D Fj = qft_forward(parts[2], path);
  const QSpectrum2D Fk = qft_forward(parts[3], path);

  constexpr Quaternion I = Quaternion::unit_i();
  constexpr Quaternion J = Quaternion::unit_j();
  QSpectrum2D out(M, N, f.dx(), f.dy());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out.data()[n] = Fr.data()[n] + I * Fi.data()[n] + Fj.data()[n] * J + I * Fk.data()[n] * J;
  }
  return out;
}

QuaternionField2D circular_shift(const QuaternionField2D& f, long long x0, long long y0) {
  QuaternionField2D g(f.M(), f.N(), f.dx(), f.dy());
  for (std::size_t y = 0; y < f.N(); ++y) {
    for (std::size_t x = 0; x < f.M(); ++x) {
      g.at(x, y) = f.wrapped(static_cast<long long>(x) - x0, static_cast<long long>(y) - y0);
    }
  }
  return g;
}

QuaternionField2D modulate(const QuaternionField2D& f, long long m0, long long n0) {
  const std::size_t M = f.M();
  const std::size_t N = f.N();
  const std::size_t mm = QuaternionField2D::wrap(m0, M);
  const std::size_t nn = QuaternionField2D::wrap(n0, N);
  QuaternionField2D g(M, N, f.dx(), f.dy());
  for (std::size_t y = 0; y < N; ++y) {
    const Quaternion right = exp_j(2.0 * std::numbers::pi * static_cast<double>(nn * y % N) / N);
    for (std::size_t x = 0; x < M; ++x) {
      const Quaternion left = exp_i(2.0 * std::numbers::pi * static_cast<double>(mm * x % M) / M);
      g.at(x, y) = left * f.at(x, y) * right;
    }
  }
  return g;
}

long long modular_inverse(long long a, long long n) {
  const long long aa = static_cast<long long>(QuaternionField2D::wrap(a, static_cast<std::size_t>(n)));
  if (std::gcd(aa, n) != 1) {
    throw PreconditionError("modular_inverse: " + std::to_string(a) + " is not invertible modulo " +
                            std::to_string(n));
  }
  for (long long t = 1; t <= n; ++t) {
    if ((aa * t) % n == 1 % n) return t % n;
  }
  return 0;
}

QuaternionField2D lattice_dilate(const QuaternionField2D& f, long long a, long long b) {
  // Validates invertibility; throws otherwise.
  modular_inverse(a, static_cast<long long>(f.M()));
  modular_inverse(b, static_cast<long long>(f.N()));
  QuaternionField2D g(f.M(), f.N(), f.dx(), f.dy());
  for (std::size_t y = 0; y < f.N(); ++y) {
    for (std::size_t x = 0; x < f.M(); ++x) {
      g.at(x, y) = f.wrapped(a * static_cast<long long>(x), b * static_cast<long long>(y));
    }
  }
  return g;
}

}  // namespace hyperfourier
