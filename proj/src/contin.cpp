#include "hyperfourier/contin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperfourier/errors.hpp"

namespace hyperfourier {

namespace {

using Complex = std::complex<double>;
using CPoly = std::vector<Complex>;

constexpr double kFdStep = 1e-3;

Quaternion in_i_plane(Complex z) { return {z.real(), z.imag(), 0, 0}; }
Quaternion in_j_plane(Complex z) { return {z.real(), 0, z.imag(), 0}; }

Complex eval(const CPoly& p, double u) {
  Complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * u + *it;
  return acc;
}

Quaternion power(const Quaternion& q, int m) {
  Quaternion r(1.0);
  for (int t = 0; t < m; ++t) r = r * q;
  return r;
}

void require_order(int m, int n, const char* what) {
  if (m < 0 || n < 0) throw PreconditionError(std::string(what) + ": orders must be non-negative");
}

// Central difference of exp(-I t w) in w, order 0..2, step h, divided by exp(-I t w):
// order 1: -I sin(t h) / h, order 2: -4 sin^2(t h / 2) / h^2.
std::complex<double> difference_factor(int order, double t) {
  const double h = kFdStep;
  switch (order) {
    case 0:
      return 1.0;
    case 1:
      return {0.0, -std::sin(t * h) / h};
    case 2: {
      const double s = std::sin(0.5 * t * h);
      return -4.0 * s * s / (h * h);
    }
    default:
      throw PreconditionError("finite differences are provided for orders 0..2 only");
  }
}

AnalyticTestFunction::Box preimage_box(const AnalyticTestFunction::Box& b, const LinearMap2& A) {
  const LinearMap2 inv = A.inverse();
  AnalyticTestFunction::Box out{1e300, -1e300, 1e300, -1e300};
  for (const double x : {b.x0, b.x1}) {
    for (const double y : {b.y0, b.y1}) {
      const Vec2 p = inv.apply({x, y});
      out.x0 = std::min(out.x0, p.x);
      out.x1 = std::max(out.x1, p.x);
      out.y0 = std::min(out.y0, p.y);
      out.y1 = std::max(out.y1, p.y);
    }
  }
  return out;
}

}  // namespace

double GaussianFactor::operator()(double x) const {
  double p = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) p = p * x + *it;
  const double t = (x - center) / sigma;
  return p * std::exp(-0.5 * t * t);
}

GaussianFactor GaussianFactor::derivative() const {
  // (p g)' = (p' - p (x - c) / sigma^2) g
  std::vector<double> out(poly.size() + 1, 0.0);
  const double s2 = sigma * sigma;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (k > 0) out[k - 1] += k * poly[k];
    out[k + 1] -= poly[k] / s2;
    out[k] += poly[k] * center / s2;
  }
  return {out, sigma, center};
}

GaussianFactor GaussianFactor::times_power(int m) const {
  std::vector<double> out(poly.size() + m, 0.0);
  std::copy(poly.begin(), poly.end(), out.begin() + m);
  return {out, sigma, center};
}

std::complex<double> GaussianFactor::transform(double u) const {
  // x^k g <-> (I d/du)^k G with G(u) = sigma sqrt(2 pi) exp(-sigma^2 u^2 / 2 - I u c).
  // (I d/du)^k G = I^k P_k(u) G, P_{k+1} = P_k' + P_k (-sigma^2 u - I c).
  const Complex I(0.0, 1.0);
  const double s2 = sigma * sigma;
  CPoly P{1.0};
  Complex acc = 0.0;
  Complex ik = 1.0;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (poly[k] != 0.0) acc += poly[k] * ik * eval(P, u);
    CPoly next(P.size() + 1, 0.0);
    for (std::size_t e = 0; e < P.size(); ++e) {
      if (e > 0) next[e - 1] += static_cast<double>(e) * P[e];
      next[e + 1] += -s2 * P[e];
      next[e] += -I * center * P[e];
    }
    P = std::move(next);
    ik *= I;
  }
  const Complex G = sigma * std::sqrt(2.0 * std::numbers::pi) * std::exp(Complex(-0.5 * s2 * u * u, -u * center));
  return acc * G;
}

AnalyticTestFunction::AnalyticTestFunction(std::vector<AnalyticTerm> terms) : terms_(std::move(terms)) {
  for (const AnalyticTerm& t : terms_) {
    if (!(t.fx.sigma > 0.0) || !(t.fy.sigma > 0.0)) throw PreconditionError("Gaussian widths must be positive");
  }
}

AnalyticTestFunction AnalyticTestFunction::gaussian(const Quaternion& coeff, double sx, double sy, double cx,
                                                    double cy) {
  return AnalyticTestFunction({AnalyticTerm{coeff, {{1.0}, sx, cx}, {{1.0}, sy, cy}}});
}

Quaternion AnalyticTestFunction::operator()(double x, double y) const {
  Quaternion acc;
  for (const AnalyticTerm& t : terms_) acc += t.coeff * (t.fx(x) * t.fy(y));
  return acc;
}

AnalyticTestFunction AnalyticTestFunction::operator+(const AnalyticTestFunction& o) const {
  std::vector<AnalyticTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return AnalyticTestFunction(std::move(all));
}

AnalyticTestFunction AnalyticTestFunction::partial(int m, int n) const {
  require_order(m, n, "partial");
  std::vector<AnalyticTerm> out = terms_;
  for (AnalyticTerm& t : out) {
    for (int k = 0; k < m; ++k) t.fx = t.fx.derivative();
    for (int k = 0; k < n; ++k) t.fy = t.fy.derivative();
  }
  return AnalyticTestFunction(std::move(out));
}

AnalyticTestFunction AnalyticTestFunction::times_monomial(int m, int n) const {
  require_order(m, n, "times_monomial");
  std::vector<AnalyticTerm> out = terms_;
  for (AnalyticTerm& t : out) {
    t.fx = t.fx.times_power(m);
    t.fy = t.fy.times_power(n);
  }
  return AnalyticTestFunction(std::move(out));
}

AnalyticTestFunction AnalyticTestFunction::left_multiply(const Quaternion& q) const {
  std::vector<AnalyticTerm> out = terms_;
  for (AnalyticTerm& t : out) t.coeff = q * t.coeff;
  return AnalyticTestFunction(std::move(out));
}

AnalyticTestFunction AnalyticTestFunction::right_multiply(const Quaternion& q) const {
  std::vector<AnalyticTerm> out = terms_;
  for (AnalyticTerm& t : out) t.coeff = t.coeff * q;
  return AnalyticTestFunction(std::move(out));
}

AnalyticTestFunction AnalyticTestFunction::split_plus() const {
  std::vector<AnalyticTerm> out = terms_;
  for (AnalyticTerm& t : out) t.coeff = split_pm(t.coeff).plus;
  return AnalyticTestFunction(std::move(out));
}

AnalyticTestFunction AnalyticTestFunction::split_minus() const {
  std::vector<AnalyticTerm> out = terms_;
  for (AnalyticTerm& t : out) t.coeff = split_pm(t.coeff).minus;
  return AnalyticTestFunction(std::move(out));
}

Quaternion AnalyticTestFunction::qft(double u, double v) const {
  Quaternion acc;
  for (const AnalyticTerm& t : terms_) acc += in_i_plane(t.fx.transform(u)) * t.coeff * in_j_plane(t.fy.transform(v));
  return acc;
}

Quaternion AnalyticTestFunction::qftr(double u, double v) const {
  Quaternion acc;
  for (const AnalyticTerm& t : terms_) acc += t.coeff * in_i_plane(t.fx.transform(u)) * in_j_plane(t.fy.transform(v));
  return acc;
}

double AnalyticTestFunction::min_sigma() const {
  double s = 1e300;
  for (const AnalyticTerm& t : terms_) s = std::min({s, t.fx.sigma, t.fy.sigma});
  return terms_.empty() ? 1.0 : s;
}

AnalyticTestFunction::Box AnalyticTestFunction::support(double L) const {
  if (terms_.empty()) return {-L, L, -L, L};
  Box b{1e300, -1e300, 1e300, -1e300};
  for (const AnalyticTerm& t : terms_) {
    b.x0 = std::min(b.x0, t.fx.center - L * t.fx.sigma);
    b.x1 = std::max(b.x1, t.fx.center + L * t.fx.sigma);
    b.y0 = std::min(b.y0, t.fy.center - L * t.fy.sigma);
    b.y1 = std::max(b.y1, t.fy.center + L * t.fy.sigma);
  }
  return b;
}

void QuadratureSpec::validate() const {
  if (!(half_width >= 6.0)) throw PreconditionError("quadrature half-width must be at least 6 sigma");
  if (samples < 128) throw PreconditionError("quadrature needs at least 128 samples per axis");
  if (rule != "trapezoid") throw PreconditionError("unknown quadrature rule '" + rule + "'");
}

SampledIntegrand::SampledIntegrand(const Function& f, AnalyticTestFunction::Box box, const QuadratureSpec& spec) {
  spec.validate();
  sample(f, box, spec.samples);
}

SampledIntegrand::SampledIntegrand(const AnalyticTestFunction& f, const QuadratureSpec& spec) {
  spec.validate();
  sample([&f](double x, double y) { return f(x, y); }, f.support(spec.half_width), spec.samples);
}

SampledIntegrand::SampledIntegrand(const AnalyticTestFunction& f, const LinearMap2& A, const QuadratureSpec& spec) {
  spec.validate();
  sample(
      [&f, &A](double x, double y) {
        const Vec2 p = A.apply({x, y});
        return f(p.x, p.y);
      },
      preimage_box(f.support(spec.half_width), A), spec.samples);
}

void SampledIntegrand::sample(const Function& f, AnalyticTestFunction::Box box, int S) {
  const auto axis = [S](double lo, double hi, std::vector<double>& pts, std::vector<double>& w) {
    const double h = (hi - lo) / (S - 1);
    pts.resize(S);
    w.assign(S, h);
    for (int k = 0; k < S; ++k) pts[k] = lo + h * k;
    w.front() *= 0.5;
    w.back() *= 0.5;
  };
  axis(box.x0, box.x1, xs_, wx_);
  axis(box.y0, box.y1, ys_, wy_);
  values_.resize(static_cast<std::size_t>(S) * S);
  for (int iy = 0; iy < S; ++iy) {
    for (int ix = 0; ix < S; ++ix) values_[static_cast<std::size_t>(iy) * S + ix] = f(xs_[ix], ys_[iy]) * (wx_[ix] * wy_[iy]);
  }
}

Quaternion SampledIntegrand::transform(double u, double v, int m, int n, bool right_sided) const {
  // sum_y [ sum_x kx f ] ky for the two-sided kernel, sum_y [ sum_x f kx ] ky for the right-sided one.
  const std::size_t S = xs_.size();
  std::vector<Quaternion> kx(S);
  for (std::size_t ix = 0; ix < S; ++ix) kx[ix] = exp_i(-xs_[ix] * u) * in_i_plane(difference_factor(m, xs_[ix]));
  Quaternion total;
  for (std::size_t iy = 0; iy < S; ++iy) {
    Quaternion row;
    const Quaternion* line = &values_[iy * S];
    if (right_sided) {
      for (std::size_t ix = 0; ix < S; ++ix) row += line[ix] * kx[ix];
    } else {
      for (std::size_t ix = 0; ix < S; ++ix) row += kx[ix] * line[ix];
    }
    total += row * (exp_j(-ys_[iy] * v) * in_j_plane(difference_factor(n, ys_[iy])));
  }
  return total;
}

Quaternion cqft_eval(const AnalyticTestFunction& f, double u, double v, const QuadratureSpec& spec) {
  return SampledIntegrand(f, spec).qft(u, v);
}

Quaternion cqftr_eval(const AnalyticTestFunction& f, double u, double v, const QuadratureSpec& spec) {
  return SampledIntegrand(f, spec).qftr(u, v);
}

std::vector<Vec2> probe_grid(double sigma) {
  std::vector<Vec2> out;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) out.push_back({a / sigma, b / sigma});
  }
  return out;
}

void Deviation::add(const Quaternion& lhs, const Quaternion& rhs) {
  max_abs = std::fmax(max_abs, norm(lhs - rhs));
  scale = std::fmax(scale, norm(rhs));
}

LawReport verify_powers_xy(const AnalyticTestFunction& f, int m, int n, const QuadratureSpec& spec) {
  require_order(m, n, "verify_powers_xy");
  const AnalyticTestFunction g = f.times_monomial(m, n);
  const SampledIntegrand sf(f, spec);
  const SampledIntegrand sg(g, spec);
  const Quaternion im = power(Quaternion::unit_i(), m);
  const Quaternion jn = power(Quaternion::unit_j(), n);
  LawReport r;
  for (const Vec2 p : probe_grid(f.min_sigma())) {
    const Quaternion lhs = sg.qft(p.x, p.y);
    const Quaternion d = sf.qft_difference(p.x, p.y, m, n);
    r.law.add(lhs, im * d * jn);
    r.analytic.add(lhs, g.qft(p.x, p.y));
    r.wrong_placement.add(lhs, jn * d * im);
  }
  return r;
}

LawReport verify_partial_deriv(const AnalyticTestFunction& f, int m, int n, const QuadratureSpec& spec) {
  require_order(m, n, "verify_partial_deriv");
  const AnalyticTestFunction g = f.partial(m, n);
  const SampledIntegrand sf(f, spec);
  const SampledIntegrand sg(g, spec);
  LawReport r;
  for (const Vec2 p : probe_grid(f.min_sigma())) {
    const Quaternion lhs = sg.qft(p.x, p.y);
    const Quaternion F = sf.qft(p.x, p.y);
    const Quaternion iu = power(Quaternion(0, p.x, 0, 0), m);
    const Quaternion jv = power(Quaternion(0, 0, p.y, 0), n);
    r.law.add(lhs, iu * F * jv);
    r.analytic.add(lhs, g.qft(p.x, p.y));
    r.wrong_placement.add(lhs, jv * F * iu);
  }
  return r;
}

QftrLawReport verify_qftr_partial_deriv(const AnalyticTestFunction& f, int m, int n, const QuadratureSpec& spec) {
  require_order(m, n, "verify_qftr_partial_deriv");
  const AnalyticTestFunction g = f.partial(m, n);
  const Quaternion i_inv_m = power(conj(Quaternion::unit_i()), m);
  const SampledIntegrand sf(f, spec);
  const SampledIntegrand sg(g, spec);
  const SampledIntegrand sgi(g.right_multiply(i_inv_m), spec);
  QftrLawReport r;
  for (const Vec2 p : probe_grid(f.min_sigma())) {
    const Quaternion F = sf.qftr(p.x, p.y);
    const Quaternion jv = power(Quaternion(0, 0, p.y, 0), n);
    r.plain.add(sg.qftr(p.x, p.y), power(Quaternion(0, p.x, 0, 0), m) * F * jv);
    r.general.add(sgi.qftr(p.x, p.y), std::pow(p.x, m) * F * jv);
  }
  return r;
}

QftrLawReport verify_qftr_powers_xy(const AnalyticTestFunction& f, int m, int n, const QuadratureSpec& spec) {
  require_order(m, n, "verify_qftr_powers_xy");
  const AnalyticTestFunction g = f.times_monomial(m, n);
  const Quaternion i_inv_m = power(conj(Quaternion::unit_i()), m);
  const SampledIntegrand sf(f, spec);
  const SampledIntegrand sg(g, spec);
  const SampledIntegrand sgi(g.right_multiply(i_inv_m), spec);
  const Quaternion im = power(Quaternion::unit_i(), m);
  const Quaternion jn = power(Quaternion::unit_j(), n);
  QftrLawReport r;
  for (const Vec2 p : probe_grid(f.min_sigma())) {
    const Quaternion d = sf.qftr_difference(p.x, p.y, m, n);
    r.plain.add(sg.qftr(p.x, p.y), im * d * jn);
    r.general.add(sgi.qftr(p.x, p.y), d * jn);
  }
  return r;
}

GlReport verify_gl_law(const LinearMap2& A, const AnalyticTestFunction& f, const QuadratureSpec& spec) {
  const AnalyticTestFunction fp = f.split_plus();
  const AnalyticTestFunction fm = f.split_minus();
  const SampledIntegrand lhs_q(f, A, spec);
  const SampledIntegrand sp(fp, spec);
  const SampledIntegrand sm(fm, spec);

  // geometric route
  const LinearMap2 Ainv = A.inverse();
  const LinearMap2 G = adjoint(Ainv);
  const LinearMap2 Gc = conj_by_axis_reflection(G, 0);
  const double det_abs = std::fabs(Ainv.det());
  // matrix route
  const BMatrices B = b_matrices(A);

  GlReport r;
  for (const Vec2 p : probe_grid(f.min_sigma())) {
    const Quaternion lhs = lhs_q.qft(p.x, p.y);
    const Vec2 gm = G.apply(p);
    const Vec2 gp = Gc.apply(p);
    const Quaternion halves = sm.qft(gm.x, gm.y) + sp.qft(gp.x, gp.y);
    const Quaternion geometric = det_abs * halves;
    r.geometric.add(lhs, geometric);

    const Vec2 bp = B.plus.apply(p);
    const Vec2 bm = B.minus.apply(p);
    r.matrix_route.add(std::fabs(B.det) * (sm.qft(bp.x, bp.y) + sp.qft(bm.x, bm.y)), geometric);
    r.analytic.add(geometric, det_abs * (fm.qft(gm.x, gm.y) + fp.qft(gp.x, gp.y)));
    r.labels_swapped.add(lhs, std::fabs(B.det) * (sp.qft(bp.x, bp.y) + sm.qft(bm.x, bm.y)));
    r.signed_det.add(lhs, Ainv.det() * halves);
  }
  return r;
}

ReflectionReport verify_reflection_law(Vec2 a, const AnalyticTestFunction& f, const QuadratureSpec& spec) {
  const LinearMap2 Ua = reflection_matrix(a);
  const LinearMap2 Ua2 = reflection_matrix(reflect({1.0, 0.0}, a));
  const SampledIntegrand lhs_q(f, Ua, spec);
  const SampledIntegrand sp(f.split_plus(), spec);
  const SampledIntegrand sm(f.split_minus(), spec);
  ReflectionReport r;
  for (const Vec2 p : probe_grid(f.min_sigma())) {
    const Quaternion lhs = lhs_q.qft(p.x, p.y);
    const Vec2 q1 = Ua.apply(p);
    const Vec2 q2 = Ua2.apply(p);
    r.law.add(lhs, sm.qft(q1.x, q1.y) + sp.qft(q2.x, q2.y));
    r.swapped.add(lhs, sm.qft(q2.x, q2.y) + sp.qft(q1.x, q1.y));
  }
  return r;
}

Deviation verify_shift(const AnalyticTestFunction& f, Vec2 x0, const QuadratureSpec& spec) {
  AnalyticTestFunction::Box box = f.support(spec.half_width);
  box = {box.x0 + x0.x, box.x1 + x0.x, box.y0 + x0.y, box.y1 + x0.y};
  const SampledIntegrand shifted([&](double x, double y) { return f(x - x0.x, y - x0.y); }, box, spec);
  const SampledIntegrand sf(f, spec);
  Deviation d;
  for (const Vec2 p : probe_grid(f.min_sigma())) {
    d.add(shifted.qft(p.x, p.y), exp_i(-x0.x * p.x) * sf.qft(p.x, p.y) * exp_j(-x0.y * p.y));
  }
  return d;
}

Deviation verify_modulation(const AnalyticTestFunction& f, Vec2 u0, const QuadratureSpec& spec) {
  const SampledIntegrand modulated([&](double x, double y) { return exp_i(x * u0.x) * f(x, y) * exp_j(y * u0.y); },
                                   f.support(spec.half_width), spec);
  const SampledIntegrand sf(f, spec);
  Deviation d;
  for (const Vec2 p : probe_grid(f.min_sigma())) d.add(modulated.qft(p.x, p.y), sf.qft(p.x - u0.x, p.y - u0.y));
  return d;
}

}  // namespace hyperfourier
