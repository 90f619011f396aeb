#pragma once

// Dense multivectors of Cl(p,q), p+q <= 4.
//
// Blades are addressed by bitmask: bit b set means basis vector b is a factor.
// The coefficient belongs to the blade written in ascending index order. The
// first p basis vectors square to +1, the last q to -1. For Cl(3,1) the
// basis order is (e1, e2, e3, e0), so e0 is bit 3 and the Euclidean blades of
// Cl(3,0) occupy masks 0..7.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperfourier/quaternion.hpp"

namespace hyperfourier {

inline constexpr int kMaxCliffordDim = 4;
inline constexpr int kMaxBlades = 1 << kMaxCliffordDim;

class Signature {
 public:
  /// Throws PreconditionError unless p + q <= 4.
  Signature(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int dimension() const noexcept { return p_ + q_; }
  int blade_count() const noexcept { return 1 << dimension(); }

  /// +1 or -1: the square of basis vector `index`.
  int square(int index) const noexcept { return index < p_ ? 1 : -1; }

  /// Basis labels in index order, e.g. {e1, e2, e3, e0} for Cl(3,1).
  std::vector<std::string> basis_order() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::uint8_t p_;
  std::uint8_t q_;
};

/// Grade of a blade bitmask.
constexpr int blade_grade(unsigned mask) { return __builtin_popcount(mask); }

/// Sign of the product of canonical blades a and b; the result blade is a ^ b.
int blade_product_sign(const Signature& sig, unsigned a, unsigned b);

class Multivector {
 public:
  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector scalar(Signature sig, double value);
  static Multivector blade(Signature sig, unsigned mask, double coeff = 1.0);
  /// Grade-1 basis vector by index in the signature's basis order.
  static Multivector basis_vector(Signature sig, int index, double coeff = 1.0);

  const Signature& signature() const noexcept { return sig_; }
  int blade_count() const noexcept { return sig_.blade_count(); }

  double operator[](unsigned mask) const { return coeffs_[mask]; }
  double& operator[](unsigned mask) { return coeffs_[mask]; }
  const std::array<double, kMaxBlades>& coefficients() const noexcept { return coeffs_; }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  Signature sig_;
  std::array<double, kMaxBlades> coeffs_{};
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator-(Multivector a);
Multivector operator*(Multivector a, double s);
Multivector operator*(double s, Multivector a);

/// Geometric product. Throws SignatureMismatch when the algebras differ.
Multivector operator*(const Multivector& a, const Multivector& b);
inline Multivector mv_product(const Multivector& a, const Multivector& b) { return a * b; }

/// Reversion: grade g picks up (-1)^(g(g-1)/2).
Multivector reverse(const Multivector& a);

/// Euclidean adjoint: reversion combined with v -> v^-1 on every basis vector.
/// <a adjoint(a)>_0 is the sum of squared coefficients. On the volume-time
/// subalgebra of Cl(3,1) it is the transported quaternion conjugate.
Multivector euclidean_adjoint(const Multivector& a);

/// Projection onto grade g. Throws PreconditionError unless 0 <= g <= p+q.
Multivector grade(const Multivector& a, int g);

inline double scalar_part(const Multivector& a) { return a[0]; }

double norm_squared(const Multivector& a);
double max_abs_diff(const Multivector& a, const Multivector& b);

/// Inverse of a blade or of any element whose square is a nonzero scalar.
/// Throws PreconditionError otherwise.
Multivector versor_inverse(const Multivector& a);

std::string to_string(const Multivector& a);

/// Named elements of the spacetime algebra Cl(3,1).
namespace sta {
Signature signature();
inline constexpr int kE1 = 0;
inline constexpr int kE2 = 1;
inline constexpr int kE3 = 2;
inline constexpr int kE0 = 3;
Multivector e(int index);  // by basis index kE1..kE0
Multivector e0();
Multivector e1();
Multivector e2();
Multivector e3();
/// Spatial volume trivector e1 e2 e3.
Multivector i3();
/// Pseudoscalar e0 e1 e2 e3 (stored as -1 times canonical blade e1e2e3e0).
Multivector i4();
}  // namespace sta

/// a * i4^-1. Throws SignatureMismatch unless a is in Cl(3,1).
Multivector dual(const Multivector& a);

/// Element of span{1, e0, i3, i4} in Cl(3,1).
class VtElement {
 public:
  VtElement();
  /// Throws SupportError when `mv` has coefficients outside the subalgebra
  /// larger than `tol` times (1 + |mv|).
  explicit VtElement(const Multivector& mv, double tol = 1e-12);

  const Multivector& multivector() const noexcept { return mv_; }
  double scalar() const;
  double e0() const;
  double i3() const;
  double i4() const;

  friend VtElement operator*(const VtElement& a, const VtElement& b);

 private:
  Multivector mv_;
};

/// True when every coefficient outside span{1, e0, i3, i4} is within tol*(1+|mv|).
bool is_volume_time(const Multivector& mv, double tol = 1e-12);

// Quaternion isomorphisms. Images of (i, j, k):
//   Cl(0,2):   e1, e2, e1e2
//   Cl+(3,0):  e3e2, e1e3, e2e1
//   V_t:       e0, i3, i4
// Inverse maps throw SupportError for elements outside the image.
Multivector iso_h_to_cl02(const Quaternion& q);
Quaternion iso_cl02_to_h(const Multivector& mv, double tol = 1e-12);
Multivector iso_h_to_cl30plus(const Quaternion& q);
Quaternion iso_cl30plus_to_h(const Multivector& mv, double tol = 1e-12);
VtElement iso_h_to_vt(const Quaternion& q);
Quaternion iso_vt_to_h(const VtElement& v);

}  // namespace hyperfourier
