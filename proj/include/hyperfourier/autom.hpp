#pragma once

// Real linear automorphisms of R^2 and R^{3,1}.
//
// Matrices act on column vectors. LinearMap2 stores [[a, b], [c, d]];
// LinearMap4 uses the coordinate order (t, x, y, z), so axis 0 is e0.

#include <array>

#include <Eigen/Dense>

namespace hyperfourier {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double norm(Vec2 a);

class LinearMap2 {
 public:
  /// Throws SingularMapError when |det| <= 1e-14 * max|entry|^2.
  LinearMap2(double a, double b, double c, double d);

  static LinearMap2 identity() { return {1, 0, 0, 1}; }
  static LinearMap2 diagonal(double a, double d) { return {a, 0, 0, d}; }
  /// Counter-clockwise rotation [[cos, -sin], [sin, cos]].
  static LinearMap2 rotation(double theta);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  double det() const noexcept { return det_; }

  LinearMap2 inverse() const;
  LinearMap2 transpose() const { return {a_, c_, b_, d_}; }
  Vec2 apply(Vec2 v) const { return {a_ * v.x + b_ * v.y, c_ * v.x + d_ * v.y}; }

  friend LinearMap2 operator*(const LinearMap2& l, const LinearMap2& r);

 private:
  double a_, b_, c_, d_, det_;
};

double max_abs_diff(const LinearMap2& l, const LinearMap2& r);

class LinearMap4 {
 public:
  using Matrix = Eigen::Matrix4d;
  using Vector = std::array<double, 4>;

  /// Throws SingularMapError when |det| <= 1e-14 * max|entry|^4.
  explicit LinearMap4(const Matrix& m);

  static LinearMap4 identity() { return LinearMap4(Matrix::Identity()); }
  /// Flips coordinate `axis` (0 = t).
  static LinearMap4 axis_reflection(int axis);
  /// Exchanges coordinates `i` and `k`.
  static LinearMap4 axis_swap(int i, int k);

  const Matrix& matrix() const noexcept { return m_; }
  double operator()(int row, int col) const { return m_(row, col); }
  double det() const noexcept { return det_; }

  LinearMap4 inverse() const { return LinearMap4(m_.inverse()); }
  LinearMap4 transpose() const { return LinearMap4(m_.transpose()); }
  Vector apply(const Vector& v) const;

  /// True when every row and column holds exactly one entry, equal to +1 or -1.
  bool is_signed_permutation(double tol = 1e-12) const;

  friend LinearMap4 operator*(const LinearMap4& l, const LinearMap4& r) { return LinearMap4(l.m_ * r.m_); }

 private:
  Matrix m_;
  double det_;
};

double max_abs_diff(const LinearMap4& l, const LinearMap4& r);

/// A = R S with R orthogonal and S symmetric positive definite. When det A < 0
/// the reflection stays in R (det R = -1).
template <class Map>
struct Polar {
  Map R;
  Map S;
};

/// Closed form: R is A + |det A| A^-T rescaled to unit determinant magnitude.
Polar<LinearMap2> polar_decompose(const LinearMap2& A);
/// Newton iteration X <- (X + X^-T)/2 until the update falls below 1e-13.
Polar<LinearMap4> polar_decompose(const LinearMap4& A);

struct BMatrices {
  LinearMap2 plus;   // (A^-1)^T
  LinearMap2 minus;  // (1/det A) [[d, c], [b, a]]
  double det;        // 1/det A, shared by both
};

/// Frequency-side matrices of a 2D linear change of variables. Throws
/// std::logic_error if either determinant drifts from 1/det A.
BMatrices b_matrices(const LinearMap2& A);

/// U_n x = -n^-1 x n, computed with the geometric product of Cl(2,0).
/// Throws PreconditionError for n = 0.
Vec2 reflect(Vec2 n, Vec2 x);
/// Matrix of U_n, I - 2 n n^T / |n|^2.
LinearMap2 reflection_matrix(Vec2 n);

/// Matrix of x -> U_b(U_a x): a rotation by twice the angle from a to b.
LinearMap2 rotation_from_reflections(Vec2 a, Vec2 b);

/// U_e M U_e with U_e flipping coordinate `axis`.
LinearMap2 conj_by_axis_reflection(const LinearMap2& M, int axis);
LinearMap4 conj_by_axis_reflection(const LinearMap4& M, int axis);

/// Adjoint with respect to the Euclidean pairing: the transpose.
inline LinearMap2 adjoint(const LinearMap2& M) { return M.transpose(); }
inline LinearMap4 adjoint(const LinearMap4& M) { return M.transpose(); }

}  // namespace hyperfourier
