#pragma once

// Shared test helpers: seeded generators and independent oracles.

#include <array>
#include <cmath>
#include <random>

#include "hyperfourier/clifford.hpp"
#include "hyperfourier/field2d.hpp"
#include "hyperfourier/quaternion.hpp"

namespace hftest {

using hyperfourier::Multivector;
using hyperfourier::Quaternion;
using hyperfourier::QuaternionField2D;
using hyperfourier::Signature;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Quaternion quaternion() { return {uniform(), uniform(), uniform(), uniform()}; }

  Multivector multivector(Signature sig) {
    Multivector m(sig);
    for (int b = 0; b < sig.blade_count(); ++b) m[b] = uniform();
    return m;
  }

  QuaternionField2D field(std::size_t M, std::size_t N) {
    QuaternionField2D f(M, N);
    for (auto& q : f.data()) q = quaternion();
    return f;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Hamilton product expanded term by term from the unit multiplication table
// (1, i, j, k) x (1, i, j, k). Independent of the closed-form operator*.
inline Quaternion table_product(const Quaternion& a, const Quaternion& b) {
  // unit index and sign of e_row * e_col
  static constexpr int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const std::array<double, 4> x{a.r, a.i, a.j, a.k};
  const std::array<double, 4> y{b.r, b.i, b.j, b.k};
  std::array<double, 4> out{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out[idx[r][c]] += sgn[r][c] * x[r] * y[c];
  }
  return {out[0], out[1], out[2], out[3]};
}

// Blade product by explicit word reduction: concatenate basis index lists and
// bubble-sort, flipping sign per swap and contracting equal neighbours.
inline std::pair<unsigned, int> word_blade_product(const Signature& sig, unsigned a, unsigned b) {
  int word[8];
  int len = 0;
  for (int v = 0; v < sig.dimension(); ++v) {
    if (a & (1u << v)) word[len++] = v;
  }
  for (int v = 0; v < sig.dimension(); ++v) {
    if (b & (1u << v)) word[len++] = v;
  }
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t + 1 < len; ++t) {
      if (word[t] > word[t + 1]) {
        std::swap(word[t], word[t + 1]);
        sign = -sign;
        changed = true;
      } else if (word[t] == word[t + 1]) {
        sign *= sig.square(word[t]);
        for (int u = t; u + 2 < len; ++u) word[u] = word[u + 2];
        len -= 2;
        changed = true;
        break;
      }
    }
  }
  unsigned mask = 0;
  for (int t = 0; t < len; ++t) mask |= 1u << word[t];
  return {mask, sign};
}

inline Multivector word_product(const Multivector& a, const Multivector& b) {
  Multivector out(a.signature());
  for (int x = 0; x < a.blade_count(); ++x) {
    for (int y = 0; y < b.blade_count(); ++y) {
      const auto [mask, sign] = word_blade_product(a.signature(), x, y);
      out[mask] += sign * a[x] * b[y];
    }
  }
  return out;
}

}  // namespace hftest
