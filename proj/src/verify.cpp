#include "hyperfourier/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "hyperfourier/autom.hpp"
#include "hyperfourier/clifford.hpp"
#include "hyperfourier/contin.hpp"
#include "hyperfourier/errors.hpp"
#include "hyperfourier/qft2d.hpp"
#include "hyperfourier/quaternion.hpp"
#include "hyperfourier/spacetime.hpp"

namespace hyperfourier {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Quaternion I = Quaternion::unit_i();
constexpr Quaternion J = Quaternion::unit_j();

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::string_view suite) : gen_(seed ^ fnv1a(suite)) {}

  double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Quaternion quaternion() { return {uniform(), uniform(), uniform(), uniform()}; }

  Multivector multivector(Signature sig, unsigned blade_limit = kMaxBlades) {
    Multivector m(sig);
    for (unsigned b = 0; b < static_cast<unsigned>(sig.blade_count()) && b < blade_limit; ++b) m[b] = uniform();
    return m;
  }

  QuaternionField2D field(std::size_t M, std::size_t N) {
    QuaternionField2D f(M, N);
    for (Quaternion& q : f.data()) q = quaternion();
    return f;
  }

  QuaternionField2D commuting_field(std::size_t M, std::size_t N) {
    QuaternionField2D f(M, N);
    for (Quaternion& q : f.data()) q = {uniform(), uniform(), 0.0, 0.0};
    return f;
  }

  SpacetimeField4D spacetime_field(SpacetimeField4D::Dims d) {
    SpacetimeField4D f(d);
    for (Multivector& mv : f.data()) mv = multivector(sta::signature());
    return f;
  }

  SpacetimeField4D vt_field(SpacetimeField4D::Dims d) {
    SpacetimeField4D f(d);
    for (Multivector& mv : f.data()) mv = iso_h_to_vt(quaternion()).multivector();
    return f;
  }

 private:
  std::mt19937_64 gen_;
};

class SuiteRun {
 public:
  SuiteRun(std::string suite, RunReport& report) : suite_(std::move(suite)), report_(report) {}

  void check(std::string name, int criterion, double tolerance, Bound bound, const std::function<double()>& fn) {
    CheckResult r;
    r.suite = suite_;
    r.name = std::move(name);
    r.criterion = criterion;
    r.tolerance = tolerance;
    r.bound = bound;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.deviation = fn();
    } catch (const std::exception& e) {
      r.deviation = std::numeric_limits<double>::quiet_NaN();
      r.note = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // NaN fails either bound
    r.pass = bound == Bound::AtMost ? r.deviation <= tolerance : r.deviation > tolerance;
    report_.checks.push_back(std::move(r));
  }

  void at_most(std::string name, int criterion, double tolerance, const std::function<double()>& fn) {
    check(std::move(name), criterion, tolerance, Bound::AtMost, fn);
  }
  void above(std::string name, int criterion, double tolerance, const std::function<double()>& fn) {
    check(std::move(name), criterion, tolerance, Bound::Above, fn);
  }

 private:
  std::string suite_;
  RunReport& report_;
};

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

template <class Tag>
SpacetimeGrid4D<Tag> right_multiply(const SpacetimeGrid4D<Tag>& f, const Multivector& a) {
  SpacetimeGrid4D<Tag> out(f.dims(), f.spacing());
  for (std::size_t n = 0; n < f.size(); ++n) out.data()[n] = f.data()[n] * a;
  return out;
}

// exp(-i 2pi m x0/M) F[m,n] exp(-j 2pi n y0/N)
QSpectrum2D shift_rhs(const QSpectrum2D& F, long long x0, long long y0) {
  QSpectrum2D out(F.M(), F.N());
  for (std::size_t n = 0; n < F.N(); ++n) {
    for (std::size_t m = 0; m < F.M(); ++m) {
      out.at(m, n) = exp_i(-kTwoPi * double(m) * double(x0) / double(F.M())) * F.at(m, n) *
                     exp_j(-kTwoPi * double(n) * double(y0) / double(F.N()));
    }
  }
  return out;
}

// --- quat -------------------------------------------------------------------

void suite_quat(SuiteRun& s, Sampler& rng) {
  s.at_most("product associativity, 10^4 triples", 0, 1e-12, [&] {
    double d = 0.0;
    for (int t = 0; t < 10000; ++t) {
      const Quaternion a = rng.quaternion(), b = rng.quaternion(), c = rng.quaternion();
      d = std::fmax(d, max_abs_diff((a * b) * c, a * (b * c)));
    }
    return d;
  });
  s.at_most("norm is multiplicative (relative), 10^4 pairs", 0, 1e-10, [&] {
    double d = 0.0;
    for (int t = 0; t < 10000; ++t) {
      const Quaternion a = rng.quaternion(), b = rng.quaternion();
      d = std::fmax(d, std::fabs(norm(a * b) - norm(a) * norm(b)) / (norm(a) * norm(b)));
    }
    return d;
  });
  s.at_most("conjugation reverses products, 10^4 pairs", 0, 1e-12, [&] {
    double d = 0.0;
    for (int t = 0; t < 10000; ++t) {
      const Quaternion a = rng.quaternion(), b = rng.quaternion();
      d = std::fmax(d, max_abs_diff(conj(a * b), conj(b) * conj(a)));
    }
    return d;
  });
  s.at_most("scalar part is cyclic, 10^4 triples", 0, 1e-12, [&] {
    double d = 0.0;
    for (int t = 0; t < 10000; ++t) {
      const Quaternion a = rng.quaternion(), b = rng.quaternion(), c = rng.quaternion();
      d = std::fmax(d, std::fabs(scalar_part(a * b * c) - scalar_part(b * c * a)));
    }
    return d;
  });
  s.at_most("split: q = q+ + q-, i q+- j = +-q+-", 0, 1e-12, [&] {
    double d = 0.0;
    for (int t = 0; t < 10000; ++t) {
      const Quaternion q = rng.quaternion();
      const SplitPair p = split_pm(q);
      d = std::fmax(d, max_abs_diff(p.plus + p.minus, q));
      d = std::fmax(d, max_abs_diff(I * p.plus * J, p.plus));
      d = std::fmax(d, max_abs_diff(I * p.minus * J, -p.minus));
    }
    return d;
  });
  s.at_most("ij-form round trip", 0, 0.0, [&] {
    double d = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const Quaternion q = rng.quaternion();
      const IJForm f = to_ij_form(q);
      d = std::fmax(d, max_abs_diff(from_ij_form(f), q));
      d = std::fmax(d, max_abs_diff(Quaternion(f.scalar) + I * f.left_i + f.right_j * J + I * f.i_both_j * J, q));
    }
    return d;
  });
}

// --- clifford ---------------------------------------------------------------

void suite_clifford(SuiteRun& s, Sampler& rng) {
  const Signature sigs[] = {Signature(0, 2), Signature(2, 0), Signature(3, 0), Signature(3, 1),
                            Signature(1, 1), Signature(0, 4), Signature(4, 0), Signature(1, 3)};
  s.at_most("associativity, 8 signatures x 1000 triples", 8, 1e-11, [&] {
    double d = 0.0;
    for (const Signature& sig : sigs) {
      for (int t = 0; t < 1000; ++t) {
        const Multivector a = rng.multivector(sig), b = rng.multivector(sig), c = rng.multivector(sig);
        d = std::fmax(d, max_abs_diff((a * b) * c, a * (b * c)));
      }
    }
    return d;
  });
  s.at_most("reversion reverses products, 8 signatures x 1000 pairs", 8, 1e-11, [&] {
    double d = 0.0;
    for (const Signature& sig : sigs) {
      for (int t = 0; t < 1000; ++t) {
        const Multivector a = rng.multivector(sig), b = rng.multivector(sig);
        d = std::fmax(d, max_abs_diff(reverse(a * b), reverse(b) * reverse(a)));
      }
    }
    return d;
  });
  s.at_most("e0^2 = i3^2 = i4^2 = -1", 8, 1e-11, [&] {
    const Multivector minus_one = Multivector::scalar(sta::signature(), -1.0);
    return std::fmax(max_abs_diff(sta::e0() * sta::e0(), minus_one),
                     std::fmax(max_abs_diff(sta::i3() * sta::i3(), minus_one),
                               max_abs_diff(sta::i4() * sta::i4(), minus_one)));
  });
  s.at_most("i3 commutes with Cl(3,0), 1000 elements", 8, 1e-11, [&] {
    double d = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const Multivector a = rng.multivector(sta::signature(), 8);
      d = std::fmax(d, max_abs_diff(sta::i3() * a, a * sta::i3()));
    }
    return d;
  });
  s.at_most("dual(e0) = i3", 8, 1e-11, [&] { return max_abs_diff(dual(sta::e0()), sta::i3()); });
  s.at_most("H -> Cl(0,2) homomorphism, 1000 pairs", 8, 1e-11, [&] {
    double d = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const Quaternion p = rng.quaternion(), q = rng.quaternion();
      d = std::fmax(d, max_abs_diff(iso_h_to_cl02(p * q), iso_h_to_cl02(p) * iso_h_to_cl02(q)));
    }
    return d;
  });
  s.at_most("H -> Cl+(3,0) homomorphism, 1000 pairs", 8, 1e-11, [&] {
    double d = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const Quaternion p = rng.quaternion(), q = rng.quaternion();
      d = std::fmax(d, max_abs_diff(iso_h_to_cl30plus(p * q), iso_h_to_cl30plus(p) * iso_h_to_cl30plus(q)));
    }
    return d;
  });
  s.at_most("H -> V_t homomorphism, 1000 pairs", 8, 1e-11, [&] {
    double d = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const Quaternion p = rng.quaternion(), q = rng.quaternion();
      d = std::fmax(d, max_abs_diff(iso_h_to_vt(p * q).multivector(),
                                    iso_h_to_vt(p).multivector() * iso_h_to_vt(q).multivector()));
    }
    return d;
  });
}

// --- qft --------------------------------------------------------------------

void suite_qft(SuiteRun& s, Sampler& rng) {
  s.at_most("round trip 64x64", 1, 1e-10, [&] {
    const QuaternionField2D f = rng.field(64, 64);
    return relative_error(qft_inverse(qft_forward(f)), f);
  });
  s.at_most("fast = direct, forward 16x16", 2, 1e-9, [&] {
    const QuaternionField2D f = rng.field(16, 16);
    return relative_error(qft_forward_fast(f), qft_forward_direct(f));
  });
  s.at_most("fast = direct, inverse 16x16", 2, 1e-9, [&] {
    const QuaternionField2D f = rng.field(16, 16);
    const QSpectrum2D F(16, 16, f.values());
    return relative_error(qft_inverse_fast(F), qft_inverse_direct(F));
  });
  s.at_most("scalar Plancherel, 100 pairs", 3, 1e-9, [&] {
    double d = 0.0;
    for (int t = 0; t < 100; ++t) {
      const QuaternionField2D f = rng.field(16, 16), g = rng.field(16, 16);
      const double lhs = scalar_product(f, g);
      const double rhs = scalar_product(qft_forward(f), qft_forward(g)) / 256.0;
      d = std::fmax(d, std::fabs(lhs - rhs) / std::sqrt(energy(f) * energy(g)));
    }
    return d;
  });
  s.at_most("Parseval, 100 fields", 3, 1e-10, [&] {
    double d = 0.0;
    for (int t = 0; t < 100; ++t) {
      const QuaternionField2D f = rng.field(16, 16);
      d = std::fmax(d, std::fabs(energy(f) - energy(qft_forward(f)) / 256.0) / energy(f));
    }
    return d;
  });
  s.at_most("|QFT f| = |QFTr f|, 100 fields", 3, 1e-10, [&] {
    double d = 0.0;
    for (int t = 0; t < 100; ++t) {
      const QuaternionField2D f = rng.field(16, 16);
      const double a = std::sqrt(energy(qft_forward(f))), b = std::sqrt(energy(qftr_forward(f)));
      d = std::fmax(d, std::fabs(a - b) / b);
    }
    return d;
  });
  s.above("quaternion Plancherel fails for the QFT (f = delta(1,0), g = j delta(1,0) + delta(0,1))", 4, 1e-3, [&] {
    QuaternionField2D f(4, 4), g(4, 4);
    f.at(1, 0) = Quaternion(1.0);
    g.at(1, 0) = J;
    g.at(0, 1) = Quaternion(1.0);
    const Quaternion lhs = inner_product(f, g);
    const Quaternion rhs = inner_product(qft_forward(f), qft_forward(g)) / 16.0;
    return norm(lhs - rhs) / std::sqrt(energy(f) * energy(g));
  });
  s.at_most("left linearity, span{1,i} constants, 50 trials", 5, 1e-10, [&] {
    double d = 0.0;
    for (int t = 0; t < 50; ++t) {
      const QuaternionField2D f = rng.field(8, 8), g = rng.field(8, 8);
      const Quaternion a(rng.uniform(), rng.uniform(), 0, 0), b(rng.uniform(), rng.uniform(), 0, 0);
      const QSpectrum2D F = qft_forward(f), G = qft_forward(g);
      QuaternionField2D h(8, 8);
      QSpectrum2D ref(8, 8);
      for (std::size_t n = 0; n < h.size(); ++n) {
        h.data()[n] = a * f.data()[n] + b * g.data()[n];
        ref.data()[n] = a * F.data()[n] + b * G.data()[n];
      }
      d = std::fmax(d, relative_error(qft_forward(h), ref));
    }
    return d;
  });
  s.at_most("right linearity, span{1,j} constants, 50 trials", 5, 1e-10, [&] {
    double d = 0.0;
    for (int t = 0; t < 50; ++t) {
      const QuaternionField2D f = rng.field(8, 8), g = rng.field(8, 8);
      const Quaternion a(rng.uniform(), 0, rng.uniform(), 0), b(rng.uniform(), 0, rng.uniform(), 0);
      const QSpectrum2D F = qft_forward(f), G = qft_forward(g);
      QuaternionField2D h(8, 8);
      QSpectrum2D ref(8, 8);
      for (std::size_t n = 0; n < h.size(); ++n) {
        h.data()[n] = f.data()[n] * a + g.data()[n] * b;
        ref.data()[n] = F.data()[n] * a + G.data()[n] * b;
      }
      d = std::fmax(d, relative_error(qft_forward(h), ref));
    }
    return d;
  });
  s.at_most("shift, 50 trials", 5, 1e-10, [&] {
    double d = 0.0;
    for (int t = 0; t < 50; ++t) {
      const QuaternionField2D f = rng.field(8, 8);
      const int x0 = rng.integer(-9, 9), y0 = rng.integer(-9, 9);
      d = std::fmax(d, relative_error(qft_forward(circular_shift(f, x0, y0)), shift_rhs(qft_forward(f), x0, y0)));
    }
    return d;
  });
  s.at_most("modulation, 50 trials", 5, 1e-10, [&] {
    double d = 0.0;
    for (int t = 0; t < 50; ++t) {
      const QuaternionField2D f = rng.field(8, 8);
      const int m0 = rng.integer(-9, 9), n0 = rng.integer(-9, 9);
      const QSpectrum2D F = qft_forward(f);
      QSpectrum2D ref(8, 8);
      for (std::size_t n = 0; n < 8; ++n) {
        for (std::size_t m = 0; m < 8; ++m) ref.at(m, n) = F.wrapped(long(m) - m0, long(n) - n0);
      }
      d = std::fmax(d, relative_error(qft_forward(modulate(f, m0, n0)), ref));
    }
    return d;
  });
  s.at_most("powers of i and j, m, n <= 3, 50 trials", 5, 1e-10, [&] {
    double d = 0.0;
    for (int t = 0; t < 50; ++t) {
      const QuaternionField2D f = rng.field(8, 8);
      const QSpectrum2D F = qft_forward(f);
      for (int p = 0; p <= 3; ++p) {
        for (int q = 0; q <= 3; ++q) {
          const Quaternion ip = unit_power(I, p), jq = unit_power(J, q);
          const auto lhs = qft_forward(map_grid(f, [&](const Quaternion& v) { return ip * v * jq; }));
          d = std::fmax(d, relative_error(lhs, map_grid(F, [&](const Quaternion& v) { return ip * v * jq; })));
        }
      }
    }
    return d;
  });
  s.above("left linearity with a generic constant fails for the QFT", 0, 1e-3, [&] {
    const QuaternionField2D f = rng.field(8, 8);
    const Quaternion a = rng.quaternion();
    return relative_error(qft_forward(map_grid(f, [&](const Quaternion& v) { return a * v; })),
                          map_grid(qft_forward(f), [&](const Quaternion& v) { return a * v; }));
  });
}

// --- qftr -------------------------------------------------------------------

AnalyticTestFunction generic_function() {
  return AnalyticTestFunction::gaussian({0.3, 0.5, 0.7, -0.4}, 1.0, 1.0, 0.3, -0.2) +
         AnalyticTestFunction::gaussian({-0.2, 0.1, 0.6, 0.8}, 0.8, 1.2, -0.5, 0.4);
}

AnalyticTestFunction commuting_function() {
  return AnalyticTestFunction::gaussian({0.3, 0.5, 0, 0}, 1.0, 1.0, 0.3, -0.2) +
         AnalyticTestFunction::gaussian({-0.2, 0.9, 0, 0}, 0.8, 1.2, -0.5, 0.4);
}

void suite_qftr(SuiteRun& s, Sampler& rng) {
  s.at_most("round trip 64x64", 1, 1e-10, [&] {
    const QuaternionField2D f = rng.field(64, 64);
    return relative_error(qftr_inverse(qftr_forward(f)), f);
  });
  s.at_most("fast = direct, forward 16x16", 2, 1e-9, [&] {
    const QuaternionField2D f = rng.field(16, 16);
    return relative_error(qftr_forward_fast(f), qftr_forward_direct(f));
  });
  s.at_most("fast = direct, inverse 16x16", 2, 1e-9, [&] {
    const QuaternionField2D f = rng.field(16, 16);
    const QSpectrum2D F(16, 16, f.values());
    return relative_error(qftr_inverse_fast(F), qftr_inverse_direct(F));
  });
  s.at_most("quaternion Plancherel, 100 pairs", 3, 1e-9, [&] {
    double d = 0.0;
    for (int t = 0; t < 100; ++t) {
      const QuaternionField2D f = rng.field(16, 16), g = rng.field(16, 16);
      const Quaternion lhs = inner_product(f, g);
      const Quaternion rhs = inner_product(qftr_forward(f), qftr_forward(g)) / 256.0;
      d = std::fmax(d, norm(lhs - rhs) / std::sqrt(energy(f) * energy(g)));
    }
    return d;
  });
  s.at_most("quaternion Parseval, 100 fields", 3, 1e-10, [&] {
    double d = 0.0;
    for (int t = 0; t < 100; ++t) {
      const QuaternionField2D f = rng.field(16, 16);
      const QSpectrum2D F = qftr_forward(f);
      d = std::fmax(d, norm(inner_product(f, f) - inner_product(F, F) / 256.0) / energy(f));
    }
    return d;
  });
  s.at_most("left linearity, generic constants, 50 trials", 5, 1e-10, [&] {
    double d = 0.0;
    for (int t = 0; t < 50; ++t) {
      const QuaternionField2D f = rng.field(8, 8), g = rng.field(8, 8);
      const Quaternion a = rng.quaternion(), b = rng.quaternion();
      const QSpectrum2D F = qftr_forward(f), G = qftr_forward(g);
      QuaternionField2D h(8, 8);
      QSpectrum2D ref(8, 8);
      for (std::size_t n = 0; n < h.size(); ++n) {
        h.data()[n] = a * f.data()[n] + b * g.data()[n];
        ref.data()[n] = a * F.data()[n] + b * G.data()[n];
      }
      d = std::fmax(d, relative_error(qftr_forward(h), ref));
    }
    return d;
  });
  s.at_most("shift rule holds when i f = f i", 5, 1e-10, [&] {
    const QuaternionField2D f = rng.commuting_field(8, 8);
    return relative_error(qftr_forward(circular_shift(f, 3, -2)), shift_rhs(qftr_forward(f), 3, -2));
  });
  s.above("shift rule fails for generic f", 5, 1e-2, [&] {
    const QuaternionField2D f = rng.field(8, 8);
    return relative_error(qftr_forward(circular_shift(f, 3, -2)), shift_rhs(qftr_forward(f), 3, -2));
  });
  s.at_most("derivative rule d/dx holds when i f = f i", 5, 1e-4,
            [&] { return verify_qftr_partial_deriv(commuting_function(), 1, 0).plain.relative(); });
  s.above("derivative rule d/dx fails for generic f", 5, 1e-1,
          [&] { return verify_qftr_partial_deriv(generic_function(), 1, 0).plain.relative(); });
  s.at_most("derivative rule d/dx, general form with i^-1", 5, 1e-4,
            [&] { return verify_qftr_partial_deriv(generic_function(), 1, 0).general.relative(); });
  s.at_most("power rule x holds when i f = f i", 5, 1e-3,
            [&] { return verify_qftr_powers_xy(commuting_function(), 1, 0).plain.relative(); });
  s.above("power rule x fails for generic f", 5, 1e-1,
          [&] { return verify_qftr_powers_xy(generic_function(), 1, 0).plain.relative(); });
  s.at_most("power rule x, general form with i^-1", 5, 1e-3,
            [&] { return verify_qftr_powers_xy(generic_function(), 1, 0).general.relative(); });
}

// --- gl2 --------------------------------------------------------------------

void suite_gl2(SuiteRun& s, Sampler& rng) {
  const AnalyticTestFunction unit = AnalyticTestFunction::gaussian();
  const AnalyticTestFunction aniso = generic_function();
  struct Named {
    const char* name;
    LinearMap2 map;
  };
  const Named maps[] = {{"identity", LinearMap2::identity()},
                        {"stretch diag(2,1)", LinearMap2::diagonal(2, 1)},
                        {"reflection diag(-1,1)", LinearMap2::diagonal(-1, 1)},
                        {"rotation pi/6", LinearMap2::rotation(std::numbers::pi / 6)}};
  for (const Named& m : maps) {
    GlReport r;
    s.at_most(std::string("GL law, ") + m.name + ", unit Gaussian: quadrature", 6, 1e-3, [&] {
      r = verify_gl_law(m.map, unit);
      return r.geometric.relative();
    });
    s.at_most(std::string("GL law, ") + m.name + ", unit Gaussian: matrix = geometric route", 6, 1e-10,
              [&] { return r.matrix_route.relative(); });
  }
  const LinearMap2 general(1.2, 0.4, -0.3, 0.9);
  GlReport g;
  s.at_most("GL law, general map, anisotropic f: quadrature", 0, 1e-3, [&] {
    g = verify_gl_law(general, aniso);
    return g.geometric.relative();
  });
  s.at_most("GL law, general map, anisotropic f: matrix = geometric route", 0, 1e-10,
            [&] { return g.matrix_route.relative(); });
  s.above("GL law, rotation, anisotropic f: swapped B labels fail", 0, 1e-1,
          [&] { return verify_gl_law(LinearMap2::rotation(std::numbers::pi / 6), aniso).labels_swapped.relative(); });
  s.at_most("reflection law, a = (1, 1)", 0, 1e-3, [&] { return verify_reflection_law({1, 1}, aniso).law.relative(); });

  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      const std::string mn = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      const bool odd = (m % 2) || (n % 2);
      LawReport p, d;
      s.at_most("powers x^m y^n " + mn + ": quadrature law", 7, 1e-3, [&] {
        p = verify_powers_xy(aniso, m, n);
        return p.law.relative();
      });
      s.at_most("powers x^m y^n " + mn + ": closed form", 7, 1e-3, [&] { return p.analytic.relative(); });
      if (odd) {
        s.above("powers x^m y^n " + mn + ": wrong placement fails", 7, 1e-1,
                [&] { return p.wrong_placement.relative(); });
      }
      s.at_most("derivative d^(m+n) " + mn + ": quadrature law", 7, 1e-3, [&] {
        d = verify_partial_deriv(aniso, m, n);
        return d.law.relative();
      });
      s.at_most("derivative d^(m+n) " + mn + ": closed form", 7, 1e-3, [&] { return d.analytic.relative(); });
      if (odd) {
        s.above("derivative d^(m+n) " + mn + ": wrong placement fails", 7, 1e-1,
                [&] { return d.wrong_placement.relative(); });
      }
    }
  }

  s.at_most("polar decomposition A = R S, 1000 maps", 0, 1e-11, [&] {
    double dev = 0.0;
    for (int t = 0; t < 1000; ++t) {
      double a, b, c, e;
      do {
        a = rng.uniform(-2, 2), b = rng.uniform(-2, 2), c = rng.uniform(-2, 2), e = rng.uniform(-2, 2);
      } while (std::fabs(a * e - b * c) < 0.05);
      const LinearMap2 A(a, b, c, e);
      const auto p = polar_decompose(A);
      dev = std::fmax(dev, max_abs_diff(p.R * p.S, A));
      dev = std::fmax(dev, max_abs_diff(p.R.transpose() * p.R, LinearMap2::identity()));
    }
    return dev;
  });
}

// --- spacetime --------------------------------------------------------------

void suite_spacetime(SuiteRun& s, Sampler& rng) {
  using Dims = SpacetimeField4D::Dims;
  s.at_most("VtFT round trip 8^4", 1, 1e-10, [&] {
    const SpacetimeField4D f = rng.vt_field({8, 8, 8, 8});
    return relative_error(vtft_inverse(vtft_forward(f)), f);
  });
  s.at_most("SFT round trip 8^4", 1, 1e-10, [&] {
    const SpacetimeField4D f = rng.spacetime_field({8, 8, 8, 8});
    return relative_error(sft_inverse(sft_forward(f)), f);
  });
  s.at_most("VtFT fast = direct, forward 4^4", 2, 1e-9, [&] {
    const SpacetimeField4D f = rng.vt_field({4, 4, 4, 4});
    return relative_error(vtft_forward_fast(f), vtft_forward_direct(f));
  });
  s.at_most("VtFT fast = direct, inverse 4^4", 2, 1e-9, [&] {
    const SpacetimeField4D f = rng.vt_field({4, 4, 4, 4});
    const STSpectrum4D F(f.dims(), {f.data().begin(), f.data().end()});
    return relative_error(vtft_inverse_fast(F), vtft_inverse_direct(F));
  });
  s.at_most("SFT fast = direct Clifford sum, forward 4^4", 2, 1e-9, [&] {
    const SpacetimeField4D f = rng.spacetime_field({4, 4, 4, 4});
    return relative_error(sft_forward_fast(f), sft_forward_direct(f));
  });
  s.at_most("SFT fast = direct Clifford sum, inverse 4^4", 2, 1e-9, [&] {
    const SpacetimeField4D f = rng.spacetime_field({4, 4, 4, 4});
    const STSpectrum4D F(f.dims(), {f.data().begin(), f.data().end()});
    return relative_error(sft_inverse_fast(F), sft_inverse_direct(F));
  });

  const SpacetimeField4D f = rng.spacetime_field({4, 4, 4, 4});
  s.at_most("right linearity, 100 Cl(3,0) constants", 9, 1e-11, [&] {
    const STSpectrum4D F = sft_forward(f);
    double d = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Multivector alpha = rng.multivector(sta::signature(), 8);
      d = std::fmax(d, relative_error(sft_forward(right_multiply(f, alpha)), right_multiply(F, alpha)));
    }
    return d;
  });
  s.at_most("inverse right linearity, 100 Cl(3,0) constants", 9, 1e-11, [&] {
    const STSpectrum4D F(f.dims(), {f.data().begin(), f.data().end()});
    const SpacetimeField4D back = sft_inverse(F);
    double d = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Multivector alpha = rng.multivector(sta::signature(), 8);
      d = std::fmax(d, relative_error(sft_inverse(right_multiply(F, alpha)), right_multiply(back, alpha)));
    }
    return d;
  });
  s.at_most("V_t decomposition reconstructs exactly", 9, 0.0, [&] {
    return max_abs_diff(recompose_vt(decompose_vt(f)), f);
  });
  const SpacetimeField4D v = rng.vt_field({4, 4, 4, 4});
  s.at_most("Minkowski kernel, + half", 9, 1e-10, [&] {
    return relative_error(minkowski_half_transform(split_spacetime_pm(v).first, -1),
                          split_spacetime_pm(vtft_forward(v)).first);
  });
  s.at_most("Minkowski kernel, - half", 9, 1e-10, [&] {
    return relative_error(minkowski_half_transform(split_spacetime_pm(v).second, +1),
                          split_spacetime_pm(vtft_forward(v)).second);
  });
  s.at_most("recombination of the Minkowski halves", 9, 1e-10,
            [&] { return relative_error(sft_recombined(f), sft_forward(f)); });

  struct Named {
    const char* name;
    LinearMap4 map;
  };
  const Named maps[] = {{"reflection x -> -x", LinearMap4::axis_reflection(1)},
                        {"reflection t -> -t", LinearMap4::axis_reflection(0)},
                        {"swap y <-> z", LinearMap4::axis_swap(2, 3)},
                        {"swap t <-> x", LinearMap4::axis_swap(0, 1)}};
  for (const Named& m : maps) {
    s.at_most(std::string("lattice GL law, ") + m.name, 9, 1e-9, [&] { return verify_sft_gl(m.map, f).law; });
  }
  s.above("lattice GL law without the split fails for swap t <-> x", 9, 1e-1,
          [&] { return verify_sft_gl(LinearMap4::axis_swap(0, 1), f).unsplit; });

  s.at_most("Parseval with the euclidean adjoint", 0, 1e-9, [&] {
    const SpacetimeField4D g = rng.spacetime_field(Dims{4, 8, 2, 4});
    return std::fabs(energy(g) - energy(sft_forward(g)) / double(g.size())) / energy(g);
  });
  s.at_most("e0/i3 split commutes with the SFT", 0, 1e-10, [&] {
    const auto [fp, fm] = split_spacetime_pm(f);
    const auto [Fp, Fm] = split_spacetime_pm(sft_forward(f));
    return std::fmax(relative_error(sft_forward(fp), Fp), relative_error(sft_forward(fm), Fm));
  });
  s.at_most("split energies add up to the total", 0, 1e-10, [&] {
    const EnergySplit e = wave_packet_energy_split(f);
    return std::fabs(e.plus + e.minus - energy(f)) / energy(f);
  });
}

using SuiteFn = void (*)(SuiteRun&, Sampler&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {{"quat", suite_quat}, {"clifford", suite_clifford}, {"qft", suite_qft},
                                  {"qftr", suite_qftr}, {"gl2", suite_gl2},           {"spacetime", suite_spacetime}};

}  // namespace

bool RunReport::passed() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

const CheckResult* RunReport::find(std::string_view suite, std::string_view name) const {
  for (const CheckResult& c : checks) {
    if (c.suite == suite && c.name == name) return &c;
  }
  return nullptr;
}

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const SuiteEntry& e : kSuites) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

RunReport run_verification(std::string_view suite, std::uint64_t seed) {
  RunReport report;
  report.seed = seed;
  bool found = false;
  for (const SuiteEntry& e : kSuites) {
    if (suite != "all" && suite != e.name) continue;
    found = true;
    Sampler rng(seed, e.name);
    SuiteRun run(e.name, report);
    e.fn(run, rng);
  }
  if (!found) throw PreconditionError("unknown verification suite '" + std::string(suite) + "'");
  return report;
}

std::string format_report(const RunReport& report, bool with_times) {
  std::string out;
  char line[512];
  int width = 5;
  for (const CheckResult& c : report.checks) width = std::max(width, static_cast<int>(c.name.size()));
  std::snprintf(line, sizeof line, "%-10s %-*s %4s %11s %2s %9s %4s%s\n", "suite", width, "check", "crit", "deviation",
                "", "tolerance", "", with_times ? "   time[s]" : "");
  out += line;
  std::size_t failed = 0;
  for (const CheckResult& c : report.checks) {
    if (!c.pass) ++failed;
    std::snprintf(line, sizeof line, "%-10s %-*s %4s %11.3e %2s %9.1e %4s", c.suite.c_str(), width, c.name.c_str(),
                  c.criterion ? std::to_string(c.criterion).c_str() : "-", c.deviation,
                  c.bound == Bound::AtMost ? "<=" : ">", c.tolerance, c.pass ? "PASS" : "FAIL");
    out += line;
    if (with_times) {
      std::snprintf(line, sizeof line, " %9.3f", c.seconds);
      out += line;
    }
    out += "\n";
    if (!c.note.empty()) out += "           error: " + c.note + "\n";
  }
  std::snprintf(line, sizeof line, "%zu checks, %zu failed, seed %llu: %s\n", report.checks.size(), failed,
                static_cast<unsigned long long>(report.seed), failed == 0 && !report.checks.empty() ? "PASS" : "FAIL");
  out += line;
  return out;
}

}  // namespace hyperfourier
