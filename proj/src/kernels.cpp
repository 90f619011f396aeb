#include "hyperfourier/kernels.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "hyperfourier/errors.hpp"
#include "hyperfourier/fft.hpp"
#include "hyperfourier/parallel.hpp"

namespace hyperfourier::kernels {

using fft::Complex;

namespace {

std::size_t negate_index(std::size_t k, std::size_t n) { return (n - k) % n; }

struct PhaseTable {
  std::vector<double> cos;
  std::vector<double> sin;

  explicit PhaseTable(std::size_t period) : cos(period), sin(period) {
    for (std::size_t t = 0; t < period; ++t) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(period);
      cos[t] = std::cos(angle);
      sin[t] = std::sin(angle);
    }
  }
};

void validate(std::span<const Quaternion> in, const TwoSidedLayout& layout) {
  if (layout.dims.size() != layout.left.size()) {
    throw PreconditionError("TwoSidedLayout: dims and left flags differ in length");
  }
  if (in.size() != layout.size()) throw PreconditionError("two-sided kernel: input size does not match layout");
}

void require_fast(std::span<const std::size_t> dims) {
  if (!fast_path_supported(dims)) {
    std::string shape;
    for (std::size_t d : dims) shape += (shape.empty() ? "" : "x") + std::to_string(d);
    throw UnsupportedSizeError("fast transform needs power-of-two dimensions (got " + shape +
                               "); use the direct path instead");
  }
}

// Swaps the roles of i and j: (r, i, j, k) -> (r, j, i, -k). An automorphism and an involution.
Quaternion swap_ij(const Quaternion& q) { return {q.r, q.j, q.i, -q.k}; }

}  // namespace

std::size_t TwoSidedLayout::size() const {
  std::size_t n = 1;
  for (std::size_t d : dims) n *= d;
  return n;
}

bool fast_path_supported(std::span<const std::size_t> dims) {
  for (std::size_t d : dims) {
    if (!fft::is_power_of_two(d)) return false;
  }
  return true;
}

std::vector<Quaternion> two_sided_direct(std::span<const Quaternion> in, const TwoSidedLayout& layout, int sign) {
  validate(in, layout);
  const std::size_t rank = layout.dims.size();
  const std::size_t total = layout.size();

  std::size_t left_period = 1;
  std::size_t right_period = 1;
  for (std::size_t a = 0; a < rank; ++a) {
    std::size_t& period = layout.left[a] ? left_period : right_period;
    period = std::lcm(period, layout.dims[a]);
  }
  const PhaseTable left_table(left_period);
  const PhaseTable right_table(right_period);

  std::vector<std::size_t> coords(total * rank);
  for (std::size_t n = 0; n < total; ++n) {
    std::size_t rest = n;
    for (std::size_t a = rank; a-- > 0;) {
      coords[n * rank + a] = rest % layout.dims[a];
      rest /= layout.dims[a];
    }
  }

  const double s = sign < 0 ? -1.0 : 1.0;
  std::vector<Quaternion> out(total);
  std::vector<std::vector<std::size_t>> phase(rank);
  for (std::size_t k = 0; k < total; ++k) {
    for (std::size_t a = 0; a < rank; ++a) {
      const std::size_t n = layout.dims[a];
      const std::size_t scale = (layout.left[a] ? left_period : right_period) / n;
      phase[a].resize(n);
      for (std::size_t x = 0; x < n; ++x) phase[a][x] = (x * coords[k * rank + a] % n) * scale;
    }
    Quaternion acc;
    for (std::size_t x = 0; x < total; ++x) {
      std::size_t lp = 0;
      std::size_t rp = 0;
      for (std::size_t a = 0; a < rank; ++a) {
        const std::size_t p = phase[a][coords[x * rank + a]];
        if (layout.left[a]) {
          lp += p;
        } else {
          rp += p;
        }
      }
      lp %= left_period;
      rp %= right_period;
      const Quaternion lk(left_table.cos[lp], s * left_table.sin[lp], 0.0, 0.0);
      const Quaternion rk(right_table.cos[rp], 0.0, s * right_table.sin[rp], 0.0);
      acc += lk * in[x] * rk;
    }
    out[k] = acc;
  }
  return out;
}

std::vector<Quaternion> two_sided_fast(std::span<const Quaternion> in, const TwoSidedLayout& layout, int sign) {
  validate(in, layout);
  require_fast(layout.dims);
  const std::size_t rank = layout.dims.size();
  const auto total = static_cast<long long>(layout.size());

  // q_+ = c_+ (1+k)/2 with c_+ = (r+k) + i(i-j); q_- = c_- (1-k)/2 with c_- = (r-k) + i(i+j).
  std::vector<Complex> plus(layout.size());
  std::vector<Complex> minus(layout.size());
#pragma omp parallel for schedule(static) num_threads(worker_threads())
  for (long long n = 0; n < total; ++n) {
    const Quaternion& q = in[n];
    plus[n] = {q.r + q.k, q.i - q.j};
    minus[n] = {q.r - q.k, q.i + q.j};
  }
  fft::transform_nd(plus, layout.dims, sign);
  fft::transform_nd(minus, layout.dims, sign);

  std::vector<Quaternion> out(layout.size());
#pragma omp parallel for schedule(static) num_threads(worker_threads())
  for (long long k = 0; k < total; ++k) {
    // Index of k with every right-axis frequency negated.
    std::size_t rest = static_cast<std::size_t>(k);
    std::size_t mirrored = 0;
    std::size_t stride = 1;
    for (std::size_t a = rank; a-- > 0;) {
      const std::size_t n = layout.dims[a];
      const std::size_t c = rest % n;
      rest /= n;
      mirrored += (layout.left[a] ? c : negate_index(c, n)) * stride;
      stride *= n;
    }
    const Complex p = plus[mirrored];
    const Complex m = minus[k];
    out[k] = Quaternion(0.5 * (p.real() + m.real()), 0.5 * (p.imag() + m.imag()), 0.5 * (m.imag() - p.imag()),
                        0.5 * (p.real() - m.real()));
  }
  return out;
}

std::vector<Quaternion> right_sided_direct(std::span<const Quaternion> in, std::size_t M, std::size_t N, int sign,
                                           RightOrder order) {
  if (in.size() != M * N) throw PreconditionError("right_sided_direct: input size does not match M x N");
  const PhaseTable xt(M);
  const PhaseTable yt(N);
  const double s = sign < 0 ? -1.0 : 1.0;
  std::vector<Quaternion> out(M * N);
  for (std::size_t n = 0; n < N; ++n) {
    for (std::size_t m = 0; m < M; ++m) {
      Quaternion acc;
      for (std::size_t y = 0; y < N; ++y) {
        const std::size_t py = y * n % N;
        const Quaternion jk(yt.cos[py], 0.0, s * yt.sin[py], 0.0);
        for (std::size_t x = 0; x < M; ++x) {
          const std::size_t px = x * m % M;
          const Quaternion ik(xt.cos[px], s * xt.sin[px], 0.0, 0.0);
          const Quaternion& f = in[y * M + x];
          acc += order == RightOrder::IThenJ ? f * ik * jk : f * jk * ik;
        }
      }
      out[n * M + m] = acc;
    }
  }
  return out;
}

std::vector<Quaternion> right_sided_fast(std::span<const Quaternion> in, std::size_t M, std::size_t N, int sign,
                                         RightOrder order) {
  if (in.size() != M * N) throw PreconditionError("right_sided_fast: input size does not match M x N");
  const std::size_t dims[2] = {N, M};
  require_fast(dims);

  // JThenI is IThenJ with i and j exchanged, the i exponential now running along y.
  const bool swapped = order == RightOrder::JThenI;
  const std::size_t first_axis = swapped ? 0 : 1;
  const auto total = static_cast<long long>(M * N);

  // f = a + b j with a = r + i i, b = j + k i.
  std::vector<Complex> a(M * N);
  std::vector<Complex> b(M * N);
#pragma omp parallel for schedule(static) num_threads(worker_threads())
  for (long long n = 0; n < total; ++n) {
    const Quaternion q = swapped ? swap_ij(in[n]) : in[n];
    a[n] = {q.r, q.i};
    b[n] = {q.j, q.k};
  }
  fft::transform_nd(a, dims, sign);
  fft::transform_nd(b, dims, sign);

  const Complex minus_i(0.0, -1.0);
  std::vector<Quaternion> out(M * N);
#pragma omp parallel for schedule(static) num_threads(worker_threads())
  for (long long idx = 0; idx < total; ++idx) {
    const std::size_t c[2] = {static_cast<std::size_t>(idx) / M, static_cast<std::size_t>(idx) % M};
    const std::size_t second_axis = 1 - first_axis;
    auto at = [&](const std::vector<Complex>& v, bool neg_first, bool neg_second) {
      std::size_t cc[2] = {c[0], c[1]};
      if (neg_first) cc[first_axis] = negate_index(cc[first_axis], dims[first_axis]);
      if (neg_second) cc[second_axis] = negate_index(cc[second_axis], dims[second_axis]);
      return v[cc[0] * M + cc[1]];
    };
    // a exp(s i alpha): cos/sin parts of the second-axis sum from D[.., n] and D[.., -n].
    const Complex da = at(a, false, false);
    const Complex da_m = at(a, false, true);
    const Complex cos_a = 0.5 * (da + da_m);
    const Complex sin_a = minus_i * 0.5 * (da - da_m);
    // b j exp(s i alpha) = b exp(-s i alpha) j: first-axis frequency negated.
    const Complex eb = at(b, true, false);
    const Complex eb_m = at(b, true, true);
    const Complex cos_b = 0.5 * (eb + eb_m);
    const Complex sin_b = minus_i * 0.5 * (eb - eb_m);
    const Complex p = cos_a - sin_b;
    const Complex q = sin_a + cos_b;
    const Quaternion r(p.real(), p.imag(), q.real(), q.imag());
    out[idx] = swapped ? swap_ij(r) : r;
  }
  return out;
}

}  // namespace hyperfourier::kernels
