#include "hyperfourier/autom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperfourier/clifford.hpp"
#include "hyperfourier/errors.hpp"

namespace hyperfourier {

namespace {

constexpr double kSingularRel = 1e-14;

void require_axis(int axis, int dim) {
  if (axis < 0 || axis >= dim) {
    throw PreconditionError("axis index " + std::to_string(axis) + " out of range for dimension " +
                            std::to_string(dim));
  }
}

Multivector to_cl20(Vec2 v) {
  const Signature s(2, 0);
  return Multivector::basis_vector(s, 0, v.x) + Multivector::basis_vector(s, 1, v.y);
}

}  // namespace

double norm(Vec2 a) { return std::hypot(a.x, a.y); }

LinearMap2::LinearMap2(double a, double b, double c, double d)
    : a_(a), b_(b), c_(c), d_(d), det_(a * d - b * c) {
  const double scale = std::max({std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d)});
  if (!(std::fabs(det_) > kSingularRel * scale * scale)) {
    throw SingularMapError("singular 2x2 map (det = " + std::to_string(det_) + ")");
  }
}

LinearMap2 LinearMap2::rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, -s, s, c};
}

LinearMap2 LinearMap2::inverse() const { return {d_ / det_, -b_ / det_, -c_ / det_, a_ / det_}; }

LinearMap2 operator*(const LinearMap2& l, const LinearMap2& r) {
  return {l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_, l.c_ * r.a_ + l.d_ * r.c_,
          l.c_ * r.b_ + l.d_ * r.d_};
}

double max_abs_diff(const LinearMap2& l, const LinearMap2& r) {
  return std::max({std::fabs(l.a() - r.a()), std::fabs(l.b() - r.b()), std::fabs(l.c() - r.c()),
                   std::fabs(l.d() - r.d())});
}

LinearMap4::LinearMap4(const Matrix& m) : m_(m), det_(m.determinant()) {
  const double scale = m.cwiseAbs().maxCoeff();
  if (!(std::fabs(det_) > kSingularRel * std::pow(scale, 4))) {
    throw SingularMapError("singular 4x4 map (det = " + std::to_string(det_) + ")");
  }
}

LinearMap4 LinearMap4::axis_reflection(int axis) {
  require_axis(axis, 4);
  Matrix m = Matrix::Identity();
  m(axis, axis) = -1.0;
  return LinearMap4(m);
}

LinearMap4 LinearMap4::axis_swap(int i, int k) {
  require_axis(i, 4);
  require_axis(k, 4);
  Matrix m = Matrix::Identity();
  m.row(i).swap(m.row(k));
  return LinearMap4(m);
}

LinearMap4::Vector LinearMap4::apply(const Vector& v) const {
  const Eigen::Vector4d r = m_ * Eigen::Vector4d(v[0], v[1], v[2], v[3]);
  return {r[0], r[1], r[2], r[3]};
}

bool LinearMap4::is_signed_permutation(double tol) const {
  for (int r = 0; r < 4; ++r) {
    int row_hits = 0;
    int col_hits = 0;
    for (int c = 0; c < 4; ++c) {
      for (const double v : {m_(r, c), m_(c, r)}) {
        if (std::fabs(v) > tol && std::fabs(std::fabs(v) - 1.0) > tol) return false;
      }
      row_hits += std::fabs(m_(r, c)) > tol;
      col_hits += std::fabs(m_(c, r)) > tol;
    }
    if (row_hits != 1 || col_hits != 1) return false;
  }
  return true;
}

double max_abs_diff(const LinearMap4& l, const LinearMap4& r) { return (l.matrix() - r.matrix()).cwiseAbs().maxCoeff(); }

Polar<LinearMap2> polar_decompose(const LinearMap2& A) {
  // |det A| A^-T is the cofactor matrix up to the sign of det A. Adding it to A
  // gives a multiple of the orthogonal factor.
  const double s = A.det() > 0 ? 1.0 : -1.0;
  const double pa = A.a() + s * A.d();
  const double pb = A.b() - s * A.c();
  const double pc = A.c() - s * A.b();
  const double pd = A.d() + s * A.a();
  const double scale = std::sqrt(std::fabs(pa * pd - pb * pc));
  const LinearMap2 R(pa / scale, pb / scale, pc / scale, pd / scale);
  const LinearMap2 raw = R.transpose() * A;
  const double off = 0.5 * (raw.b() + raw.c());
  return {R, LinearMap2(raw.a(), off, off, raw.d())};
}

Polar<LinearMap4> polar_decompose(const LinearMap4& A) {
  Eigen::Matrix4d X = A.matrix();
  for (int iter = 0; iter < 100; ++iter) {
    const Eigen::Matrix4d next = 0.5 * (X + X.inverse().transpose());
    const double delta = (next - X).cwiseAbs().maxCoeff();
    X = next;
    if (delta <= 1e-13) break;
  }
  const Eigen::Matrix4d S = X.transpose() * A.matrix();
  return {LinearMap4(X), LinearMap4(0.5 * (S + S.transpose()))};
}

BMatrices b_matrices(const LinearMap2& A) {
  const double det = A.det();
  const LinearMap2 plus = A.inverse().transpose();
  const LinearMap2 minus(A.d() / det, A.c() / det, A.b() / det, A.a() / det);
  const double inv = 1.0 / det;
  for (const double d : {plus.det(), minus.det()}) {
    if (std::fabs(d - inv) > 1e-12 * std::fabs(inv)) {
      throw std::logic_error("b_matrices: determinant differs from 1/det A");
    }
  }
  return {plus, minus, inv};
}

Vec2 reflect(Vec2 n, Vec2 x) {
  if (n.x == 0.0 && n.y == 0.0) throw PreconditionError("reflect: normal vector must be nonzero");
  const Multivector nv = to_cl20(n);
  const Multivector r = -(versor_inverse(nv) * to_cl20(x) * nv);
  return {r[0b01], r[0b10]};
}

LinearMap2 reflection_matrix(Vec2 n) {
  const double n2 = dot(n, n);
  if (n2 == 0.0) throw PreconditionError("reflection_matrix: normal vector must be nonzero");
  return {1.0 - 2.0 * n.x * n.x / n2, -2.0 * n.x * n.y / n2, -2.0 * n.x * n.y / n2, 1.0 - 2.0 * n.y * n.y / n2};
}

LinearMap2 rotation_from_reflections(Vec2 a, Vec2 b) {
  const Vec2 c0 = reflect(b, reflect(a, {1.0, 0.0}));
  const Vec2 c1 = reflect(b, reflect(a, {0.0, 1.0}));
  return {c0.x, c1.x, c0.y, c1.y};
}

LinearMap2 conj_by_axis_reflection(const LinearMap2& M, int axis) {
  require_axis(axis, 2);
  // Flipping one axis on both sides negates the off-diagonal entries.
  return {M.a(), -M.b(), -M.c(), M.d()};
}

LinearMap4 conj_by_axis_reflection(const LinearMap4& M, int axis) {
  require_axis(axis, 4);
  Eigen::Matrix4d m = M.matrix();
  m.row(axis) *= -1.0;
  m.col(axis) *= -1.0;
  return LinearMap4(m);
}

}  // namespace hyperfourier
