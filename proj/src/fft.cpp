#include "hyperfourier/fft.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "hyperfourier/errors.hpp"
#include "hyperfourier/parallel.hpp"

namespace hyperfourier::fft {

Radix2Plan::Radix2Plan(std::size_t n) : n_(n) {
  if (!is_power_of_two(n)) {
    throw UnsupportedSizeError("radix-2 FFT needs a power-of-two length, got " + std::to_string(n));
  }
  bit_reverse_.resize(n);
  int bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
    bit_reverse_[i] = r;
  }
  twiddles_.resize(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    twiddles_[k] = {std::cos(angle), std::sin(angle)};
  }
}

void Radix2Plan::execute(Complex* data, int sign) const {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t r = bit_reverse_[i];
    if (i < r) std::swap(data[i], data[r]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Complex w = twiddles_[k * step];
        if (sign > 0) w = std::conj(w);
        const Complex u = data[start + k];
        const Complex v = data[start + k + half] * w;
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
}

void transform_nd(std::span<Complex> data, std::span<const std::size_t> dims, int sign) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (total != data.size()) throw PreconditionError("transform_nd: data size does not match dims");

  std::size_t outer = 1;
  for (std::size_t axis = 0; axis < dims.size(); ++axis) {
    const std::size_t n = dims[axis];
    std::size_t inner = 1;
    for (std::size_t b = axis + 1; b < dims.size(); ++b) inner *= dims[b];
    if (n > 1) {
      const Radix2Plan plan(n);
      const auto lines = static_cast<long long>(outer * inner);
      Complex* base = data.data();
#pragma omp parallel num_threads(worker_threads())
      {
        std::vector<Complex> line(n);
#pragma omp for schedule(static)
        for (long long l = 0; l < lines; ++l) {
          const std::size_t o = static_cast<std::size_t>(l) / inner;
          const std::size_t in = static_cast<std::size_t>(l) % inner;
          Complex* start = base + o * n * inner + in;
          for (std::size_t t = 0; t < n; ++t) line[t] = start[t * inner];
          plan.execute(line.data(), sign);
          for (std::size_t t = 0; t < n; ++t) start[t * inner] = line[t];
        }
      }
    }
    outer *= n;
  }
}

}  // namespace hyperfourier::fft
