#pragma once

// Hamilton quaternions q = r + i*i + j*j + k*k with i^2 = j^2 = k^2 = ijk = -1.

#include <cmath>
#include <utility>

namespace hyperfourier {

struct Quaternion {
  double r = 0.0;
  double i = 0.0;
  double j = 0.0;
  double k = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double r_, double i_, double j_, double k_) : r(r_), i(i_), j(j_), k(k_) {}
  // Implicit on purpose: real scalars embed as the scalar part.
  constexpr Quaternion(double scalar) : r(scalar) {}  // NOLINT(google-explicit-constructor)

  static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    r += o.r;
    i += o.i;
    j += o.j;
    k += o.k;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    r -= o.r;
    i -= o.i;
    j -= o.j;
    k -= o.k;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    r *= s;
    i *= s;
    j *= s;
    k *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.r, -a.i, -a.j, -a.k}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

/// Hamilton product. Non-commutative.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.r * b.r - a.i * b.i - a.j * b.j - a.k * b.k,
          a.r * b.i + a.i * b.r + a.j * b.k - a.k * b.j,
          a.r * b.j - a.i * b.k + a.j * b.r + a.k * b.i,
          a.r * b.k + a.i * b.j - a.j * b.i + a.k * b.r};
}

constexpr Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

/// Quaternion conjugate; reverses products: conj(pq) = conj(q) conj(p).
constexpr Quaternion conj(const Quaternion& q) { return {q.r, -q.i, -q.j, -q.k}; }

constexpr double norm_squared(const Quaternion& q) {
  return q.r * q.r + q.i * q.i + q.j * q.j + q.k * q.k;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_squared(q)); }

/// Grade-zero selection <q>_0.
constexpr double scalar_part(const Quaternion& q) { return q.r; }

/// Largest absolute coefficient difference.
inline double max_abs_diff(const Quaternion& a, const Quaternion& b) {
  return std::fmax(std::fmax(std::fabs(a.r - b.r), std::fabs(a.i - b.i)),
                   std::fmax(std::fabs(a.j - b.j), std::fabs(a.k - b.k)));
}

struct SplitPair {
  Quaternion plus;
  Quaternion minus;
};

/// i q j, the involution behind the +/- split.
constexpr Quaternion i_sandwich_j(const Quaternion& q) { return {q.k, -q.j, -q.i, q.r}; }

/// q_(+/-) = (q +/- i q j) / 2. q_+ lies in the right ideal of (1+k)/2, q_- in that of (1-k)/2.
constexpr SplitPair split_pm(const Quaternion& q) {
  const Quaternion s = i_sandwich_j(q);
  return {(q + s) * 0.5, (q - s) * 0.5};
}

/// Coefficients of the "ij-form" q = a + i b + c j + i d j (every i on the left,
/// every j on the right). For quaternions these are simply (r, i, j, k).
struct IJForm {
  double scalar;
  double left_i;
  double right_j;
  double i_both_j;
};

constexpr IJForm to_ij_form(const Quaternion& q) { return {q.r, q.i, q.j, q.k}; }

constexpr Quaternion from_ij_form(const IJForm& f) {
  constexpr Quaternion I = Quaternion::unit_i();
  constexpr Quaternion J = Quaternion::unit_j();
  return Quaternion(f.scalar) + I * f.left_i + Quaternion(f.right_j) * J + I * Quaternion(f.i_both_j) * J;
}

/// exp(axis * angle) = cos(angle) + axis sin(angle). Throws PreconditionError
/// unless `axis` is a pure unit quaternion within 1e-12.
Quaternion axis_exp(const Quaternion& axis, double angle);

/// cos(a) + i sin(a). Unchecked fast form of axis_exp for the i axis.
inline Quaternion exp_i(double angle) { return {std::cos(angle), std::sin(angle), 0.0, 0.0}; }
inline Quaternion exp_j(double angle) { return {std::cos(angle), 0.0, std::sin(angle), 0.0}; }

}  // namespace hyperfourier
