#pragma once

// Continuous-domain quaternion Fourier transforms evaluated by quadrature.
//
//   QFT:  F(u, v) = int exp(-i x u) f(x, y) exp(-j y v) dx dy
//   QFTr: F(u, v) = int f(x, y) exp(-i x u) exp(-j y v) dx dy
//
// Test functions are sums of separable terms q * p(x) g(x) * r(y) h(y) with a
// quaternion constant q, real polynomials p, r and Gaussians g, h. That family
// is closed under derivatives, monomial products and the +/- split, and every
// member has a closed-form transform.

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "hyperfourier/autom.hpp"
#include "hyperfourier/quaternion.hpp"

namespace hyperfourier {

/// p(x) exp(-(x - center)^2 / (2 sigma^2)) with p given by ascending coefficients.
struct GaussianFactor {
  std::vector<double> poly{1.0};
  double sigma = 1.0;
  double center = 0.0;

  double operator()(double x) const;
  GaussianFactor derivative() const;
  GaussianFactor times_power(int m) const;
  /// int p(x) g(x) exp(-I x u) dx as a complex number in the plane of I.
  std::complex<double> transform(double u) const;
};

struct AnalyticTerm {
  Quaternion coeff{1.0};
  GaussianFactor fx;
  GaussianFactor fy;
};

class AnalyticTestFunction {
 public:
  AnalyticTestFunction() = default;
  explicit AnalyticTestFunction(std::vector<AnalyticTerm> terms);

  /// coeff * exp(-(x-cx)^2/(2 sx^2) - (y-cy)^2/(2 sy^2)). Throws PreconditionError unless sx, sy > 0.
  static AnalyticTestFunction gaussian(const Quaternion& coeff = Quaternion(1.0), double sx = 1.0, double sy = 1.0,
                                       double cx = 0.0, double cy = 0.0);

  const std::vector<AnalyticTerm>& terms() const noexcept { return terms_; }

  Quaternion operator()(double x, double y) const;
  AnalyticTestFunction operator+(const AnalyticTestFunction& o) const;

  AnalyticTestFunction partial(int m, int n) const;
  AnalyticTestFunction times_monomial(int m, int n) const;
  AnalyticTestFunction left_multiply(const Quaternion& q) const;
  AnalyticTestFunction right_multiply(const Quaternion& q) const;
  /// Coefficient-wise split_pm, i.e. the pointwise f_+ and f_-.
  AnalyticTestFunction split_plus() const;
  AnalyticTestFunction split_minus() const;

  Quaternion qft(double u, double v) const;
  Quaternion qftr(double u, double v) const;

  /// Smallest Gaussian width over all terms and axes.
  double min_sigma() const;

  struct Box {
    double x0, x1, y0, y1;
  };
  /// Union of [center - L sigma, center + L sigma] over terms, per axis.
  Box support(double L) const;

 private:
  std::vector<AnalyticTerm> terms_;
};

struct QuadratureSpec {
  double half_width = 8.0;  // L, in units of sigma
  int samples = 256;        // S, per axis
  std::string rule = "trapezoid";

  /// Throws PreconditionError unless L >= 6, S >= 128 and the rule is trapezoid.
  void validate() const;
};

/// Trapezoid samples of an integrand on a rectangle, reusable across frequencies.
class SampledIntegrand {
 public:
  using Function = std::function<Quaternion(double, double)>;

  SampledIntegrand(const Function& f, AnalyticTestFunction::Box box, const QuadratureSpec& spec);
  /// Samples f over its own support box.
  SampledIntegrand(const AnalyticTestFunction& f, const QuadratureSpec& spec);
  /// Samples x -> f(A x) over the preimage of f's support box.
  SampledIntegrand(const AnalyticTestFunction& f, const LinearMap2& A, const QuadratureSpec& spec);

  Quaternion qft(double u, double v) const { return transform(u, v, 0, 0, false); }
  Quaternion qftr(double u, double v) const { return transform(u, v, 0, 0, true); }

  /// Central difference quotient of qft (qftr) of order m in u and n in v,
  /// m, n <= 2, step 1e-3. The differences are taken on the kernel factors,
  /// which gives the same sum as differencing transform values without the
  /// cancellation.
  Quaternion qft_difference(double u, double v, int m, int n) const { return transform(u, v, m, n, false); }
  Quaternion qftr_difference(double u, double v, int m, int n) const { return transform(u, v, m, n, true); }

 private:
  void sample(const Function& f, AnalyticTestFunction::Box box, int S);
  Quaternion transform(double u, double v, int m, int n, bool right_sided) const;

  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<double> wx_;
  std::vector<double> wy_;
  std::vector<Quaternion> values_;  // index iy * S + ix
};

Quaternion cqft_eval(const AnalyticTestFunction& f, double u, double v, const QuadratureSpec& spec = {});
Quaternion cqftr_eval(const AnalyticTestFunction& f, double u, double v, const QuadratureSpec& spec = {});

/// Probe frequencies {-2, -1, 0, 1, 2} / sigma per axis, 25 points.
std::vector<Vec2> probe_grid(double sigma);

/// Maximum |lhs - rhs| over the probes and the largest |rhs|; relative() divides them.
struct Deviation {
  double max_abs = 0.0;
  double scale = 0.0;

  double relative() const { return scale > 0.0 ? max_abs / scale : max_abs; }
  void add(const Quaternion& lhs, const Quaternion& rhs);
};

struct LawReport {
  Deviation law;           // quadrature LHS against the stated RHS
  Deviation analytic;      // quadrature LHS against its closed form
  Deviation wrong_placement;  // the same law with factors placed on the wrong side
};

/// QFT{x^m y^n f} = i^m d^{m+n}/du^m dv^n F j^n, RHS by central differences
/// (step 1e-3) of the quadrature transform. The wrong placement puts i^m on
/// the right and j^n on the left.
LawReport verify_powers_xy(const AnalyticTestFunction& f, int m, int n, const QuadratureSpec& spec = {});

/// QFT{d^{m+n} f / dx^m dy^n} = (i u)^m F (j v)^n. The wrong placement swaps
/// the two factors to the opposite sides.
LawReport verify_partial_deriv(const AnalyticTestFunction& f, int m, int n, const QuadratureSpec& spec = {});

/// Right-sided variants of the derivative and power rules:
///   plain:   QFTr{d f} = (i u)^m Fr (j v)^n,  QFTr{x^m y^n f} = i^m d Fr j^n
///   general: QFTr{d f i^-m} = u^m Fr (j v)^n, QFTr{x^m y^n f i^-m} = d Fr j^n
/// The plain forms hold only when i f = f i; the general forms always hold.
struct QftrLawReport {
  Deviation plain;
  Deviation general;
};
QftrLawReport verify_qftr_partial_deriv(const AnalyticTestFunction& f, int m, int n, const QuadratureSpec& spec = {});
QftrLawReport verify_qftr_powers_xy(const AnalyticTestFunction& f, int m, int n, const QuadratureSpec& spec = {});

struct GlReport {
  Deviation geometric;     // LHS against |det A^-1| {F_-(adj(A^-1) u) + F_+(U_e1 adj(A^-1) U_e1 u)}
  Deviation matrix_route;  // matrix form with (B_plus, B_minus, det B) against the geometric RHS
  Deviation analytic;      // geometric RHS with closed-form F_+- against the quadrature RHS
  Deviation labels_swapped;  // F_+ at B_plus u and F_- at B_minus u
  Deviation signed_det;    // det A^-1 without absolute value
};

/// Transformation law of the QFT under x -> A x. LHS is the quadrature transform
/// of f(A x), RHS uses quadrature transforms of f_+ and f_- at the mapped frequencies.
GlReport verify_gl_law(const LinearMap2& A, const AnalyticTestFunction& f, const QuadratureSpec& spec = {});

/// Reflection law: QFT{f(U_a x)} = F_-(U_a u) + F_+(U_a' u) with a' = U_e1 a.
/// The second deviation swaps a and a'.
struct ReflectionReport {
  Deviation law;
  Deviation swapped;
};
ReflectionReport verify_reflection_law(Vec2 a, const AnalyticTestFunction& f, const QuadratureSpec& spec = {});

/// Shift row: QFT{f(x - x0)} = exp(-i x0 u) F exp(-j y0 v).
Deviation verify_shift(const AnalyticTestFunction& f, Vec2 x0, const QuadratureSpec& spec = {});
/// Modulation row: QFT{exp(i x u0) f exp(j y v0)} = F(u - u0, v - v0).
Deviation verify_modulation(const AnalyticTestFunction& f, Vec2 u0, const QuadratureSpec& spec = {});

}  // namespace hyperfourier
