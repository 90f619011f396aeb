#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "doctest.h"
#include "hyperfourier/errors.hpp"
#include "hyperfourier/fft.hpp"
#include "hyperfourier/parallel.hpp"
#include "hyperfourier/qft2d.hpp"
#include "support.hpp"

using namespace hyperfourier;

namespace {

constexpr Quaternion I = Quaternion::unit_i();
constexpr Quaternion J = Quaternion::unit_j();
constexpr Quaternion K = Quaternion::unit_k();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Textbook double sum built from axis_exp per term. Independent of the
// phase-table kernels used by the library's direct path.
QSpectrum2D naive_qft(const QuaternionField2D& f) {
  QSpectrum2D F(f.M(), f.N(), f.dx(), f.dy());
  for (std::size_t n = 0; n < f.N(); ++n) {
    for (std::size_t m = 0; m < f.M(); ++m) {
      Quaternion acc;
      for (std::size_t y = 0; y < f.N(); ++y) {
        for (std::size_t x = 0; x < f.M(); ++x) {
          const double a = -kTwoPi * double(m * x) / double(f.M());
          const double b = -kTwoPi * double(n * y) / double(f.N());
          acc += axis_exp(I, a) * f.at(x, y) * axis_exp(J, b);
        }
      }
      F.at(m, n) = acc;
    }
  }
  return F;
}

QSpectrum2D naive_qftr(const QuaternionField2D& f) {
  QSpectrum2D F(f.M(), f.N(), f.dx(), f.dy());
  for (std::size_t n = 0; n < f.N(); ++n) {
    for (std::size_t m = 0; m < f.M(); ++m) {
      Quaternion acc;
      for (std::size_t y = 0; y < f.N(); ++y) {
        for (std::size_t x = 0; x < f.M(); ++x) {
          const double a = -kTwoPi * double(m * x) / double(f.M());
          const double b = -kTwoPi * double(n * y) / double(f.N());
          acc += f.at(x, y) * axis_exp(I, a) * axis_exp(J, b);
        }
      }
      F.at(m, n) = acc;
    }
  }
  return F;
}

QuaternionField2D field_in_span_1i(hftest::Rng& rng, std::size_t M, std::size_t N) {
  QuaternionField2D f(M, N);
  for (auto& q : f.data()) q = Quaternion(rng.uniform(), rng.uniform(), 0, 0);
  return f;
}

template <class Tag, class Fn>
QuaternionGrid2D<Tag> map_grid(const QuaternionGrid2D<Tag>& g, Fn fn) {
  QuaternionGrid2D<Tag> out(g.M(), g.N(), g.dx(), g.dy());
  for (std::size_t n = 0; n < g.size(); ++n) out.data()[n] = fn(g.data()[n]);
  return out;
}

Quaternion unit_power(const Quaternion& unit, int p) {
  Quaternion r(1.0);
  for (int t = 0; t < p; ++t) r = r * unit;
  return r;
}

// Sum over the grid of a * conj(b), normalized by nothing.
template <class Tag>
Quaternion sum_f_conj_g(const QuaternionGrid2D<Tag>& a, const QuaternionGrid2D<Tag>& b) {
  return inner_product(a, b);
}

struct SilenceWarnings {
  SilenceWarnings() { set_warning_sink([](std::string_view) {}); }
  ~SilenceWarnings() { set_warning_sink(nullptr); }
};

}  // namespace

TEST_CASE("radix-2 FFT matches a naive DFT") {
  hftest::Rng rng(20);
  for (std::size_t n : {1u, 2u, 8u, 64u}) {
    std::vector<fft::Complex> data(n), ref(n);
    for (auto& c : data) c = {rng.uniform(), rng.uniform()};
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t x = 0; x < n; ++x) ref[k] += data[x] * std::polar(1.0, -kTwoPi * double(k * x) / double(n));
    }
    fft::Radix2Plan(n).execute(data.data(), -1);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(data[k] - ref[k]) <= 1e-12 * double(n));
  }
  CHECK_THROWS_AS(fft::Radix2Plan(6), UnsupportedSizeError);
}

TEST_CASE("qft examples") {
  QuaternionField2D ones(4, 4, std::vector<Quaternion>(16, Quaternion(1.0)));
  for (auto path : {TransformPath::Direct, TransformPath::Fast}) {
    const QSpectrum2D F = qft_forward(ones, path);
    CHECK(max_abs_diff(F.at(0, 0), Quaternion(16.0)) <= 1e-12);
    double rest = 0.0;
    for (std::size_t n = 1; n < F.size(); ++n) rest = std::fmax(rest, norm(F.data()[n]));
    CHECK(rest <= 1e-12);
  }

  QuaternionField2D delta(4, 4);
  delta.at(0, 0) = Quaternion(1.0);
  const QSpectrum2D Fdelta = qft_forward(delta, TransformPath::Fast);
  for (const Quaternion& q : Fdelta.data()) CHECK(max_abs_diff(q, Quaternion(1.0)) <= 1e-12);

  QuaternionField2D dj(4, 4);
  dj.at(1, 0) = J;
  const QSpectrum2D Fj = qft_forward_direct(dj);
  CHECK(max_abs_diff(Fj.at(1, 0), -K) <= 1e-12);
  for (std::size_t m = 0; m < 4; ++m) {
    const Quaternion expected = axis_exp(I, -std::numbers::pi * double(m) / 2) * J;
    for (std::size_t n = 0; n < 4; ++n) CHECK(max_abs_diff(Fj.at(m, n), expected) <= 1e-12);
  }
  CHECK(max_abs_diff(qftr_forward_direct(dj).at(1, 0), K) <= 1e-12);
  CHECK(max_abs_diff(qftr_forward_fast(dj).at(1, 0), K) <= 1e-12);
}

TEST_CASE("direct path agrees with the textbook sum") {
  hftest::Rng rng(21);
  for (auto [M, N] : {std::pair{4u, 4u}, std::pair{3u, 5u}, std::pair{6u, 2u}}) {
    const QuaternionField2D f = rng.field(M, N);
    CHECK(relative_error(qft_forward_direct(f), naive_qft(f)) <= 1e-13);
    CHECK(relative_error(qftr_forward_direct(f), naive_qftr(f)) <= 1e-13);
  }
}

TEST_CASE("fast paths agree with the direct oracle") {
  hftest::Rng rng(22);
  for (auto [M, N] : {std::pair{16u, 16u}, std::pair{8u, 32u}, std::pair{1u, 8u}, std::pair{4u, 1u}}) {
    const QuaternionField2D f = rng.field(M, N);
    CHECK(relative_error(qft_forward_fast(f), qft_forward_direct(f)) <= 1e-9);
    CHECK(relative_error(qftr_forward_fast(f), qftr_forward_direct(f)) <= 1e-9);
    const QSpectrum2D F(M, N, std::vector<Quaternion>(f.values()));
    CHECK(relative_error(qft_inverse_fast(F), qft_inverse_direct(F)) <= 1e-9);
    CHECK(relative_error(qftr_inverse_fast(F), qftr_inverse_direct(F)) <= 1e-9);
    CHECK(relative_error(qft_via_components(f, TransformPath::Fast), qft_forward_direct(f)) <= 1e-9);
  }
}

TEST_CASE("unsupported sizes") {
  hftest::Rng rng(23);
  const QuaternionField2D f = rng.field(6, 4);
  CHECK_THROWS_AS(qft_forward_fast(f), UnsupportedSizeError);
  CHECK_THROWS_AS(qft_forward(f, TransformPath::Fast), UnsupportedSizeError);
  try {
    qftr_forward_fast(f);
  } catch (const UnsupportedSizeError& e) {
    CHECK(std::string(e.what()).find("direct") != std::string::npos);
  }
  std::string captured;
  set_warning_sink([&](std::string_view msg) { captured = msg; });
  const QSpectrum2D F = qft_forward(f);
  set_warning_sink(nullptr);
  CHECK(captured.find("direct") != std::string::npos);
  CHECK(relative_error(F, qft_forward_direct(f)) == 0.0);
}

TEST_CASE("round trips") {
  hftest::Rng rng(24);
  SilenceWarnings quiet;
  for (auto [M, N] : {std::pair{8u, 8u}, std::pair{64u, 64u}, std::pair{5u, 3u}}) {
    const QuaternionField2D f = rng.field(M, N);
    CHECK(relative_error(qft_inverse(qft_forward(f)), f) <= 1e-10);
    CHECK(relative_error(qftr_inverse(qftr_forward(f)), f) <= 1e-10);
  }
  const QuaternionField2D f = rng.field(8, 8);
  CHECK(relative_error(qft_inverse_direct(qft_forward_direct(f)), f) <= 1e-10);
  CHECK(relative_error(qftr_inverse_direct(qftr_forward_direct(f)), f) <= 1e-10);

  QSpectrum2D dc(4, 4);
  dc.at(0, 0) = Quaternion(16.0);
  const QuaternionField2D c1 = qft_inverse(dc), c2 = qftr_inverse(dc);
  for (const Quaternion& q : c1.data()) CHECK(max_abs_diff(q, Quaternion(1.0)) <= 1e-12);
  for (const Quaternion& q : c2.data()) CHECK(max_abs_diff(q, Quaternion(1.0)) <= 1e-12);
  const QSpectrum2D flat(4, 4, std::vector<Quaternion>(16, Quaternion(1.0)));
  const QuaternionField2D d = qft_inverse(flat);
  CHECK(max_abs_diff(d.at(0, 0), Quaternion(1.0)) <= 1e-12);
  CHECK(energy(d) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("qftr inverse needs the reversed exponential order") {
  hftest::Rng rng(25);
  const QuaternionField2D f = rng.field(8, 8);
  const QSpectrum2D F = qftr_forward_direct(f);
  // same-order inverse: (1/MN) sum F exp(+i ...) exp(+j ...)
  QuaternionField2D wrong(8, 8);
  for (std::size_t y = 0; y < 8; ++y) {
    for (std::size_t x = 0; x < 8; ++x) {
      Quaternion acc;
      for (std::size_t n = 0; n < 8; ++n) {
        for (std::size_t m = 0; m < 8; ++m) {
          acc += F.at(m, n) * axis_exp(I, kTwoPi * double(m * x) / 8) * axis_exp(J, kTwoPi * double(n * y) / 8);
        }
      }
      wrong.at(x, y) = acc / 64.0;
    }
  }
  CHECK(relative_error(wrong, f) > 1e-2);
  CHECK(relative_error(qftr_inverse(F), f) <= 1e-10);
}

TEST_CASE("split of fields and spectra") {
  QuaternionField2D ones(3, 2, std::vector<Quaternion>(6, Quaternion(1.0)));
  const auto s = split_field_pm(ones);
  for (const Quaternion& q : s.plus.data()) CHECK(q == Quaternion(0.5, 0, 0, 0.5));
  for (const Quaternion& q : s.minus.data()) CHECK(q == Quaternion(0.5, 0, 0, -0.5));

  QuaternionField2D fi(2, 2, std::vector<Quaternion>(4, I));
  const auto si = split_field_pm(fi);
  CHECK(max_abs_diff(si.plus.at(1, 1), I * Quaternion(0.5, 0, 0, 0.5)) <= 1e-15);
  CHECK(max_abs_diff(si.minus.at(1, 1), I * Quaternion(0.5, 0, 0, -0.5)) <= 1e-15);

  hftest::Rng rng(26);
  const QuaternionField2D f = rng.field(16, 8);
  const auto sf = split_field_pm(f);
  const auto sF = split_field_pm(qft_forward_direct(f));
  CHECK(relative_error(qft_forward_direct(sf.plus), sF.plus) <= 1e-12);
  CHECK(relative_error(qft_forward_direct(sf.minus), sF.minus) <= 1e-12);
}

TEST_CASE("minus-only field reduces to one complex FFT") {
  // f = c(x,y) (1 - k)/2 with complex c = a + b i. The minus half carries
  // exp(-i(xu + yv)), so F = C (1 - k)/2 with C the ordinary 2D DFT of c.
  hftest::Rng rng(27);
  const std::size_t M = 8, N = 4;
  std::vector<fft::Complex> c(M * N);
  QuaternionField2D f(M, N);
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] = {rng.uniform(), rng.uniform()};
    f.data()[n] = Quaternion(c[n].real(), c[n].imag(), 0, 0) * Quaternion(0.5, 0, 0, -0.5);
  }
  CHECK(energy(split_field_pm(f).plus) <= 1e-30);
  const std::size_t dims[2] = {N, M};
  fft::transform_nd(c, dims, -1);
  const QSpectrum2D F = qft_forward_fast(f);
  for (std::size_t n = 0; n < c.size(); ++n) {
    const Quaternion expected = Quaternion(c[n].real(), c[n].imag(), 0, 0) * Quaternion(0.5, 0, 0, -0.5);
    CHECK(max_abs_diff(F.data()[n], expected) <= 1e-12);
  }
}

TEST_CASE("component reduction") {
  hftest::Rng rng(28);
  QuaternionField2D g(8, 8);
  for (auto& q : g.data()) q = Quaternion(rng.uniform());
  CHECK(relative_error(qft_via_components(g), qft_forward_direct(g)) <= 1e-12);
  const QuaternionField2D ig = map_grid(g, [](const Quaternion& q) { return I * q; });
  const QSpectrum2D G = qft_forward_direct(g);
  CHECK(relative_error(qft_via_components(ig), map_grid(G, [](const Quaternion& q) { return I * q; })) <= 1e-12);
  const QuaternionField2D f = rng.field(8, 8);
  CHECK(relative_error(qft_via_components(f, TransformPath::Direct), qft_forward_direct(f)) <= 1e-9);
}

TEST_CASE("scalar Plancherel and Parseval for the QFT") {
  hftest::Rng rng(29);
  for (int t = 0; t < 20; ++t) {
    const QuaternionField2D f = rng.field(8, 8);
    const QuaternionField2D g = rng.field(8, 8);
    const QSpectrum2D F = qft_forward(f);
    const QSpectrum2D G = qft_forward(g);
    const double lhs = scalar_product(f, g);
    const double rhs = scalar_product(F, G) / 64.0;
    CHECK(std::fabs(lhs - rhs) <= 1e-9 * std::sqrt(energy(f) * energy(g)));
    CHECK(energy(f) == doctest::Approx(energy(F) / 64.0).epsilon(1e-10));
    CHECK(energy(F) == doctest::Approx(energy(qftr_forward(f))).epsilon(1e-10));
  }
}

TEST_CASE("quaternion Plancherel: holds for QFTr, fails for QFT") {
  hftest::Rng rng(30);
  double worst_r = 0.0;
  for (int t = 0; t < 20; ++t) {
    const QuaternionField2D f = rng.field(8, 8);
    const QuaternionField2D g = rng.field(8, 8);
    const Quaternion lhs = sum_f_conj_g(f, g);
    const Quaternion rhs = sum_f_conj_g(qftr_forward(f), qftr_forward(g)) / 64.0;
    worst_r = std::fmax(worst_r, norm(lhs - rhs) / std::sqrt(energy(f) * energy(g)));
  }
  CHECK(worst_r <= 1e-9);

  // a delta paired with 𝒋 times a shifted delta: the QFT kernels do not cancel
  QuaternionField2D f(4, 4), g(4, 4);
  f.at(1, 0) = Quaternion(1.0);
  g.at(1, 0) = J;
  g.at(0, 1) = Quaternion(1.0);
  const Quaternion lhs = sum_f_conj_g(f, g);
  const Quaternion rhs = sum_f_conj_g(qft_forward(f), qft_forward(g)) / 16.0;
  CHECK(norm(lhs - rhs) / std::sqrt(energy(f) * energy(g)) > 1e-3);
}

TEST_CASE("QFT lattice laws") {
  hftest::Rng rng(31);
  const std::size_t M = 8, N = 8;
  for (int t = 0; t < 10; ++t) {
    const QuaternionField2D f = rng.field(M, N);
    const QuaternionField2D g = rng.field(M, N);
    const QSpectrum2D F = qft_forward(f);
    const QSpectrum2D G = qft_forward(g);

    // left linearity with span{1,i} constants, right with span{1,j}
    const Quaternion a(rng.uniform(), rng.uniform(), 0, 0), b(rng.uniform(), rng.uniform(), 0, 0);
    const Quaternion ap(rng.uniform(), 0, rng.uniform(), 0), bp(rng.uniform(), 0, rng.uniform(), 0);
    QuaternionField2D lin(M, N), rlin(M, N);
    QSpectrum2D lin_ref(M, N), rlin_ref(M, N);
    for (std::size_t n = 0; n < f.size(); ++n) {
      lin.data()[n] = a * f.data()[n] + b * g.data()[n];
      lin_ref.data()[n] = a * F.data()[n] + b * G.data()[n];
      rlin.data()[n] = f.data()[n] * ap + g.data()[n] * bp;
      rlin_ref.data()[n] = F.data()[n] * ap + G.data()[n] * bp;
    }
    CHECK(relative_error(qft_forward(lin), lin_ref) <= 1e-10);
    CHECK(relative_error(qft_forward(rlin), rlin_ref) <= 1e-10);

    // shift
    const int x0 = rng.integer(-9, 9), y0 = rng.integer(-9, 9);
    QSpectrum2D shifted_ref(M, N);
    for (std::size_t n = 0; n < N; ++n) {
      for (std::size_t m = 0; m < M; ++m) {
        shifted_ref.at(m, n) = axis_exp(I, -kTwoPi * double(m) * x0 / double(M)) * F.at(m, n) *
                               axis_exp(J, -kTwoPi * double(n) * y0 / double(N));
      }
    }
    CHECK(relative_error(qft_forward(circular_shift(f, x0, y0)), shifted_ref) <= 1e-10);

    // modulation
    const int m0 = rng.integer(-9, 9), n0 = rng.integer(-9, 9);
    QSpectrum2D mod_ref(M, N);
    for (std::size_t n = 0; n < N; ++n) {
      for (std::size_t m = 0; m < M; ++m) mod_ref.at(m, n) = F.wrapped(long(m) - m0, long(n) - n0);
    }
    CHECK(relative_error(qft_forward(modulate(f, m0, n0)), mod_ref) <= 1e-10);

    // powers of i, j
    for (int p = 0; p < 4; ++p) {
      for (int q = 0; q < 4; ++q) {
        const Quaternion ip = unit_power(I, p), jq = unit_power(J, q);
        const auto lhs = qft_forward(map_grid(f, [&](const Quaternion& v) { return ip * v * jq; }));
        const auto rhs = map_grid(F, [&](const Quaternion& v) { return ip * v * jq; });
        CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * std::sqrt(energy(F)));
      }
    }
  }
}

TEST_CASE("left linearity with generic constants needs the right-sided transform") {
  hftest::Rng rng(32);
  const QuaternionField2D f = rng.field(8, 8);
  const Quaternion a = rng.quaternion();
  const auto af = map_grid(f, [&](const Quaternion& v) { return a * v; });
  CHECK(relative_error(qftr_forward(af), map_grid(qftr_forward(f), [&](const Quaternion& v) { return a * v; })) <= 1e-10);
  CHECK(relative_error(qft_forward(af), map_grid(qft_forward(f), [&](const Quaternion& v) { return a * v; })) > 1e-3);
}

TEST_CASE("QFTr shift law needs i f = f i") {
  hftest::Rng rng(33);
  const std::size_t M = 8, N = 8;
  const int x0 = 3, y0 = -2;
  auto simple_shift_rhs = [&](const QSpectrum2D& F) {
    QSpectrum2D out(M, N);
    for (std::size_t n = 0; n < N; ++n) {
      for (std::size_t m = 0; m < M; ++m) {
        out.at(m, n) = axis_exp(I, -kTwoPi * double(m) * x0 / double(M)) * F.at(m, n) *
                       axis_exp(J, -kTwoPi * double(n) * y0 / double(N));
      }
    }
    return out;
  };

  const QuaternionField2D commuting = field_in_span_1i(rng, M, N);
  CHECK(relative_error(qftr_forward(circular_shift(commuting, x0, y0)), simple_shift_rhs(qftr_forward(commuting))) <=
        1e-10);
  const QuaternionField2D generic = rng.field(M, N);
  CHECK(relative_error(qftr_forward(circular_shift(generic, x0, y0)), simple_shift_rhs(qftr_forward(generic))) > 1e-2);

  // general row: F{f e^{-i x0 u}}(u) e^{-j y0 v}, the inner factor depending on the output bin
  QSpectrum2D general(M, N);
  for (std::size_t n = 0; n < N; ++n) {
    for (std::size_t m = 0; m < M; ++m) {
      const Quaternion phase = axis_exp(I, -kTwoPi * double(m) * x0 / double(M));
      Quaternion acc;
      for (std::size_t y = 0; y < N; ++y) {
        for (std::size_t x = 0; x < M; ++x) {
          acc += generic.at(x, y) * phase * axis_exp(I, -kTwoPi * double(m * x) / double(M)) *
                 axis_exp(J, -kTwoPi * double(n * y) / double(N));
        }
      }
      general.at(m, n) = acc * axis_exp(J, -kTwoPi * double(n) * y0 / double(N));
    }
  }
  CHECK(relative_error(qftr_forward(circular_shift(generic, x0, y0)), general) <= 1e-10);
}

TEST_CASE("QFTr equals QFT when i f = f i") {
  hftest::Rng rng(34);
  for (int t = 0; t < 5; ++t) {
    const QuaternionField2D f = field_in_span_1i(rng, 8, 4);
    CHECK(relative_error(qftr_forward(f), qft_forward(f)) <= 1e-12);
  }
  const QuaternionField2D g = rng.field(8, 4);
  CHECK(relative_error(qftr_forward(g), qft_forward(g)) > 1e-2);
}

TEST_CASE("lattice dilation") {
  hftest::Rng rng(35);
  SilenceWarnings quiet;
  const QuaternionField2D f = rng.field(9, 8);
  const QSpectrum2D F = qft_forward(f);
  for (auto [a, b] : {std::pair{2, 3}, std::pair{-1, 1}, std::pair{4, -3}, std::pair{5, 5}}) {
    const QSpectrum2D G = qft_forward(lattice_dilate(f, a, b));
    const long long ai = modular_inverse(a, 9), bi = modular_inverse(b, 8);
    QSpectrum2D ref(9, 8);
    for (std::size_t n = 0; n < 8; ++n) {
      for (std::size_t m = 0; m < 9; ++m) ref.at(m, n) = F.wrapped(ai * long(m), bi * long(n));
    }
    CHECK(relative_error(G, ref) <= 1e-10);
  }
  CHECK_THROWS_AS(lattice_dilate(f, 3, 1), PreconditionError);
  CHECK(modular_inverse(3, 8) == 3);
  CHECK(modular_inverse(-1, 7) == 6);
}

TEST_CASE("shift by zero is the identity") {
  hftest::Rng rng(36);
  const QuaternionField2D f = rng.field(4, 6);
  CHECK(max_abs_diff(circular_shift(f, 0, 0), f) == 0.0);
  CHECK(max_abs_diff(circular_shift(f, 4, 6), f) == 0.0);
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(QuaternionField2D(0, 3), PreconditionError);
  CHECK_THROWS_AS(QuaternionField2D(2, 2, 0.0, 1.0), PreconditionError);
  CHECK_THROWS_AS(QuaternionField2D(2, 2, std::vector<Quaternion>(3)), PreconditionError);
  const QuaternionField2D f(8, 4, 0.5, 2.0);
  CHECK(f.angular_u(1) == doctest::Approx(kTwoPi / 4.0));
  CHECK(f.angular_u(7) == doctest::Approx(-kTwoPi / 4.0));
  CHECK(f.angular_v(2) == doctest::Approx(kTwoPi * 2.0 / 8.0));
}
