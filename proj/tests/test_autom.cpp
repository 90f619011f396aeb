#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hyperfourier/autom.hpp"
#include "hyperfourier/errors.hpp"
#include "support.hpp"

using namespace hyperfourier;

namespace {

constexpr double kPi = std::numbers::pi;

LinearMap2 random_map(hftest::Rng& rng) {
  while (true) {
    const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2), c = rng.uniform(-2, 2), d = rng.uniform(-2, 2);
    if (std::fabs(a * d - b * c) > 0.05) return {a, b, c, d};
  }
}

// Singular values of a 2x2 matrix from the eigenvalues of A^T A.
std::pair<double, double> singular_values(const LinearMap2& A) {
  const LinearMap2 G = A.transpose() * A;
  const double tr = G.a() + G.d();
  const double disc = std::sqrt(std::fmax(0.0, tr * tr / 4 - G.det()));
  return {std::sqrt(tr / 2 + disc), std::sqrt(std::fmax(0.0, tr / 2 - disc))};
}

}  // namespace

TEST_CASE("construction and algebra") {
  CHECK_THROWS_AS(LinearMap2(1, 2, 2, 4), SingularMapError);
  CHECK_THROWS_AS(LinearMap2(0, 0, 0, 0), SingularMapError);
  const LinearMap2 A(1, 2, 3, 4);
  CHECK(A.det() == -2.0);
  CHECK(max_abs_diff(A * A.inverse(), LinearMap2::identity()) <= 1e-15);
  CHECK(max_abs_diff(adjoint(A), LinearMap2(1, 3, 2, 4)) == 0.0);
  const Vec2 v = A.apply({1, 1});
  CHECK(v == Vec2{3, 7});
  CHECK(max_abs_diff(adjoint(LinearMap2(2, 1, 1, 3)), LinearMap2(2, 1, 1, 3)) == 0.0);
  const LinearMap2 R = LinearMap2::rotation(0.4);
  CHECK(max_abs_diff(adjoint(R), R.inverse()) <= 1e-15);
}

TEST_CASE("polar decomposition examples") {
  const auto id = polar_decompose(LinearMap2::identity());
  CHECK(max_abs_diff(id.R, LinearMap2::identity()) <= 1e-15);
  CHECK(max_abs_diff(id.S, LinearMap2::identity()) <= 1e-15);

  const auto dg = polar_decompose(LinearMap2::diagonal(2, 3));
  CHECK(max_abs_diff(dg.R, LinearMap2::identity()) <= 1e-15);
  CHECK(max_abs_diff(dg.S, LinearMap2::diagonal(2, 3)) <= 1e-15);

  const LinearMap2 A(0, -2, 1, 0);
  const auto p = polar_decompose(A);
  CHECK(max_abs_diff(p.R, LinearMap2(0, -1, 1, 0)) <= 1e-15);
  CHECK(max_abs_diff(p.S, LinearMap2::diagonal(1, 2)) <= 1e-15);
  CHECK(max_abs_diff(p.R * p.S, A) <= 1e-15);
  CHECK(max_abs_diff(p.R.transpose() * p.R, LinearMap2::identity()) <= 1e-15);
}

TEST_CASE("polar decomposition properties") {
  hftest::Rng rng(40);
  for (int t = 0; t < 1000; ++t) {
    const LinearMap2 A = random_map(rng);
    const auto p = polar_decompose(A);
    CHECK(max_abs_diff(p.R * p.S, A) <= 1e-11);
    CHECK(max_abs_diff(p.R.transpose() * p.R, LinearMap2::identity()) <= 1e-12);
    CHECK(p.S.b() == p.S.c());
    CHECK(std::fabs(p.R.det() - (A.det() > 0 ? 1.0 : -1.0)) <= 1e-12);
    // S positive definite with eigenvalues equal to the singular values of A
    const auto [s1, s2] = singular_values(A);
    const auto [e1, e2] = singular_values(p.S);
    CHECK(p.S.a() > 0);
    CHECK(p.S.det() > 0);
    CHECK(std::fabs(s1 - e1) <= 1e-10 * s1);
    CHECK(std::fabs(s2 - e2) <= 1e-10 * s1);
  }
  CHECK_THROWS_AS(polar_decompose(LinearMap2(1, 1, 1, 1)), SingularMapError);
}

TEST_CASE("polar decomposition in four dimensions") {
  hftest::Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    Eigen::Matrix4d m;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) m(r, c) = rng.uniform() + (r == c ? 2.0 : 0.0);
    }
    if (t % 2) m.row(0) *= -1.0;
    const LinearMap4 A(m);
    const auto p = polar_decompose(A);
    CHECK(max_abs_diff(p.R * p.S, A) <= 1e-11);
    CHECK((p.R.matrix().transpose() * p.R.matrix() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((p.S.matrix() - p.S.matrix().transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(p.S.matrix()).eigenvalues().minCoeff() > 0.0);
    CHECK(std::fabs(std::fabs(p.R.det()) - 1.0) <= 1e-12);
  }
}

TEST_CASE("b matrices") {
  const auto I = b_matrices(LinearMap2::identity());
  CHECK(max_abs_diff(I.plus, LinearMap2::identity()) == 0.0);
  CHECK(max_abs_diff(I.minus, LinearMap2::identity()) == 0.0);

  const auto D = b_matrices(LinearMap2::diagonal(2, -4));
  CHECK(max_abs_diff(D.plus, LinearMap2::diagonal(0.5, -0.25)) <= 1e-15);
  CHECK(max_abs_diff(D.minus, LinearMap2::diagonal(0.5, -0.25)) <= 1e-15);
  CHECK(D.det == -0.125);

  const LinearMap2 R = LinearMap2::rotation(kPi / 6);
  const auto B = b_matrices(R);
  CHECK(max_abs_diff(B.plus, R) <= 1e-15);
  CHECK(max_abs_diff(B.minus, R.inverse()) <= 1e-15);

  hftest::Rng rng(42);
  for (int t = 0; t < 1000; ++t) {
    const LinearMap2 A = random_map(rng);
    const auto b = b_matrices(A);
    CHECK(max_abs_diff(b.plus, adjoint(A.inverse())) <= 1e-12);
    CHECK(max_abs_diff(conj_by_axis_reflection(b.plus, 0), b.minus) <= 1e-12);
    CHECK(std::fabs(b.plus.det() - 1.0 / A.det()) <= 1e-12 * std::fabs(1.0 / A.det()));
  }
}

TEST_CASE("reflections") {
  CHECK(reflect({1, 0}, {0.3, -0.7}) == Vec2{-0.3, -0.7});
  const Vec2 n{2, 1};
  const Vec2 perp{-1, 2};
  CHECK(norm(reflect(n, perp) - perp) <= 1e-15);
  CHECK(norm(reflect(n, n) + n) <= 1e-15);
  CHECK_THROWS_AS(reflect({0, 0}, {1, 1}), PreconditionError);
  CHECK_THROWS_AS(reflection_matrix({0, 0}), PreconditionError);

  hftest::Rng rng(43);
  for (int t = 0; t < 1000; ++t) {
    const Vec2 a{rng.uniform(), rng.uniform()};
    const Vec2 x{rng.uniform(), rng.uniform()};
    const Vec2 r = reflect(a, x);
    CHECK(norm(r - reflection_matrix(a).apply(x)) <= 1e-12);
    CHECK(std::fabs(norm(r) - norm(x)) <= 1e-12);
    CHECK(norm(reflect(a, r) - x) <= 1e-12);
    CHECK(reflection_matrix(a).det() == doctest::Approx(-1.0).epsilon(1e-12));
  }
}

TEST_CASE("rotations from reflections") {
  const Vec2 e1{1, 0};
  CHECK(max_abs_diff(rotation_from_reflections(e1, e1), LinearMap2::identity()) <= 1e-15);
  const Vec2 d{std::sqrt(0.5), std::sqrt(0.5)};
  const LinearMap2 R = rotation_from_reflections(e1, d);
  CHECK(max_abs_diff(R, LinearMap2::rotation(kPi / 2)) <= 1e-15);
  // composing the two reflect calls by hand
  const Vec2 x{0.4, -1.1};
  CHECK(norm(R.apply(x) - reflect(d, reflect(e1, x))) <= 1e-15);

  hftest::Rng rng(44);
  for (int t = 0; t < 100; ++t) {
    const double alpha = rng.uniform(-kPi, kPi), beta = rng.uniform(-kPi, kPi);
    const Vec2 a{std::cos(alpha), std::sin(alpha)}, b{2 * std::cos(beta), 2 * std::sin(beta)};
    const LinearMap2 Rab = rotation_from_reflections(a, b);
    CHECK(max_abs_diff(Rab * rotation_from_reflections(b, a), LinearMap2::identity()) <= 1e-12);
    CHECK(max_abs_diff(Rab, LinearMap2::rotation(2 * (beta - alpha))) <= 1e-12);
    CHECK(std::fabs(std::fabs(Rab.det()) - 1.0) <= 1e-12);
  }
}

TEST_CASE("conjugation by axis reflections") {
  CHECK(max_abs_diff(conj_by_axis_reflection(LinearMap2::identity(), 0), LinearMap2::identity()) == 0.0);
  const LinearMap2 R = LinearMap2::rotation(0.7);
  CHECK(max_abs_diff(conj_by_axis_reflection(R, 0), LinearMap2::rotation(-0.7)) <= 1e-15);
  // matrix oracle U R U
  const LinearMap2 U = LinearMap2::diagonal(-1, 1);
  CHECK(max_abs_diff(conj_by_axis_reflection(R, 0), U * R * U) <= 1e-15);
  CHECK(max_abs_diff(conj_by_axis_reflection(LinearMap2::diagonal(3, 5), 0), LinearMap2::diagonal(3, 5)) == 0.0);
  const LinearMap2 A(1, 2, 3, 4);
  CHECK(max_abs_diff(conj_by_axis_reflection(conj_by_axis_reflection(A, 1), 1), A) == 0.0);
  CHECK_THROWS_AS(conj_by_axis_reflection(A, 2), PreconditionError);

  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(0, 1) = 0.5;
  m(2, 3) = -0.25;
  const LinearMap4 M(m);
  const LinearMap4 U0 = LinearMap4::axis_reflection(0);
  CHECK(max_abs_diff(conj_by_axis_reflection(M, 0), U0 * M * U0) == 0.0);
  CHECK(max_abs_diff(conj_by_axis_reflection(conj_by_axis_reflection(M, 0), 0), M) == 0.0);
}

TEST_CASE("four-dimensional maps") {
  CHECK(LinearMap4::identity().is_signed_permutation());
  CHECK(LinearMap4::axis_swap(2, 3).is_signed_permutation());
  CHECK((LinearMap4::axis_reflection(1) * LinearMap4::axis_swap(1, 2)).is_signed_permutation());
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(0, 0) = 2.0;
  CHECK_FALSE(LinearMap4(m).is_signed_permutation());
  m(0, 0) = 0.0;
  CHECK_THROWS_AS(LinearMap4{m}, SingularMapError);
  const auto v = LinearMap4::axis_swap(1, 3).apply({1, 2, 3, 4});
  CHECK(v == LinearMap4::Vector{1, 4, 3, 2});
  CHECK(LinearMap4::axis_reflection(2).det() == -1.0);
}
