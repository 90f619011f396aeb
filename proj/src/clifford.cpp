#include "hyperfourier/clifford.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hyperfourier/errors.hpp"

namespace hyperfourier {

namespace {

struct ProductTable {
  std::array<std::array<signed char, kMaxBlades>, kMaxBlades> sign{};
};

int compute_blade_sign(const Signature& sig, unsigned a, unsigned b) {
  // Transpositions needed to move every factor of b past the higher factors of a.
  int swaps = 0;
  for (unsigned x = a >> 1; x != 0; x >>= 1) swaps += __builtin_popcount(x & b);
  int sign = (swaps & 1) ? -1 : 1;
  for (unsigned common = a & b; common != 0; common &= common - 1) {
    sign *= sig.square(__builtin_ctz(common));
  }
  return sign;
}

class ProductTables {
 public:
  ProductTables() {
    for (int p = 0; p <= kMaxCliffordDim; ++p) {
      for (int q = 0; p + q <= kMaxCliffordDim; ++q) {
        const Signature sig(p, q);
        ProductTable& t = tables_[index(p, q)];
        for (int a = 0; a < sig.blade_count(); ++a) {
          for (int b = 0; b < sig.blade_count(); ++b) {
            t.sign[a][b] = static_cast<signed char>(compute_blade_sign(sig, a, b));
          }
        }
      }
    }
    check_spacetime_conventions();
  }

  const ProductTable& get(const Signature& sig) const { return tables_[index(sig.p(), sig.q())]; }

 private:
  static int index(int p, int q) { return p * (kMaxCliffordDim + 1) + q; }

  // e0, i3 and i4 must all square to -1; every spacetime result depends on it.
  void check_spacetime_conventions() const {
    const ProductTable& t = tables_[index(3, 1)];
    constexpr unsigned e0 = 1u << sta::kE0;
    constexpr unsigned i3 = 0b0111;
    constexpr unsigned i4 = 0b1111;
    if (t.sign[e0][e0] != -1 || t.sign[i3][i3] != -1 || t.sign[i4][i4] != -1 || t.sign[e0][i3] != -1) {
      throw std::logic_error("Cl(3,1) sign conventions broken: e0^2, i3^2, i4^2 must be -1");
    }
  }

  std::array<ProductTable, (kMaxCliffordDim + 1) * (kMaxCliffordDim + 1)> tables_{};
};

const ProductTables& tables() {
  static const ProductTables instance;
  return instance;
}

void require_same(const Signature& a, const Signature& b) {
  if (!(a == b)) {
    throw SignatureMismatch("multivector signatures differ: Cl(" + std::to_string(a.p()) + "," +
                            std::to_string(a.q()) + ") vs Cl(" + std::to_string(b.p()) + "," +
                            std::to_string(b.q()) + ")");
  }
}

int reverse_sign(unsigned mask) {
  const int g = blade_grade(mask);
  return ((g * (g - 1) / 2) & 1) ? -1 : 1;
}

}  // namespace

Signature::Signature(int p, int q) {
  if (p < 0 || q < 0 || p + q > kMaxCliffordDim) {
    throw PreconditionError("Signature: need p, q >= 0 and p + q <= 4");
  }
  p_ = static_cast<std::uint8_t>(p);
  q_ = static_cast<std::uint8_t>(q);
}

std::vector<std::string> Signature::basis_order() const {
  std::vector<std::string> labels;
  for (int b = 0; b < dimension(); ++b) labels.push_back("e" + std::to_string(b + 1));
  if (p_ == 3 && q_ == 1) labels[sta::kE0] = "e0";
  return labels;
}

int blade_product_sign(const Signature& sig, unsigned a, unsigned b) { return tables().get(sig).sign[a][b]; }

Multivector Multivector::scalar(Signature sig, double value) {
  Multivector m(sig);
  m.coeffs_[0] = value;
  return m;
}

Multivector Multivector::blade(Signature sig, unsigned mask, double coeff) {
  if (mask >= static_cast<unsigned>(sig.blade_count())) {
    throw PreconditionError("Multivector::blade: mask out of range");
  }
  Multivector m(sig);
  m.coeffs_[mask] = coeff;
  return m;
}

Multivector Multivector::basis_vector(Signature sig, int index, double coeff) {
  if (index < 0 || index >= sig.dimension()) {
    throw PreconditionError("Multivector::basis_vector: index out of range");
  }
  return blade(sig, 1u << index, coeff);
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same(sig_, o.sig_);
  for (int b = 0; b < blade_count(); ++b) coeffs_[b] += o.coeffs_[b];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same(sig_, o.sig_);
  for (int b = 0; b < blade_count(); ++b) coeffs_[b] -= o.coeffs_[b];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (int b = 0; b < blade_count(); ++b) coeffs_[b] *= s;
  return *this;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator-(Multivector a) { return a *= -1.0; }
Multivector operator*(Multivector a, double s) { return a *= s; }
Multivector operator*(double s, Multivector a) { return a *= s; }

Multivector operator*(const Multivector& a, const Multivector& b) {
  require_same(a.signature(), b.signature());
  const ProductTable& t = tables().get(a.signature());
  const int n = a.blade_count();
  Multivector out(a.signature());
  for (int x = 0; x < n; ++x) {
    const double ax = a[x];
    if (ax == 0.0) continue;
    for (int y = 0; y < n; ++y) {
      out[x ^ y] += t.sign[x][y] * ax * b[y];
    }
  }
  return out;
}

Multivector reverse(const Multivector& a) {
  Multivector out(a.signature());
  for (int b = 0; b < a.blade_count(); ++b) out[b] = reverse_sign(b) * a[b];
  return out;
}

Multivector euclidean_adjoint(const Multivector& a) {
  const Signature& sig = a.signature();
  Multivector out(sig);
  for (int b = 0; b < a.blade_count(); ++b) {
    int sign = reverse_sign(b);
    for (unsigned bits = b; bits != 0; bits &= bits - 1) sign *= sig.square(__builtin_ctz(bits));
    out[b] = sign * a[b];
  }
  return out;
}

Multivector grade(const Multivector& a, int g) {
  if (g < 0 || g > a.signature().dimension()) {
    throw PreconditionError("grade: g = " + std::to_string(g) + " outside [0, " +
                            std::to_string(a.signature().dimension()) + "]");
  }
  Multivector out(a.signature());
  for (int b = 0; b < a.blade_count(); ++b) {
    if (blade_grade(b) == g) out[b] = a[b];
  }
  return out;
}

double norm_squared(const Multivector& a) {
  double s = 0.0;
  for (int b = 0; b < a.blade_count(); ++b) s += a[b] * a[b];
  return s;
}

double max_abs_diff(const Multivector& a, const Multivector& b) {
  require_same(a.signature(), b.signature());
  double m = 0.0;
  for (int x = 0; x < a.blade_count(); ++x) m = std::fmax(m, std::fabs(a[x] - b[x]));
  return m;
}

Multivector versor_inverse(const Multivector& a) {
  const Multivector rev = reverse(a);
  const Multivector sq = a * rev;
  const double scale = std::fmax(1.0, norm_squared(a));
  for (int b = 1; b < sq.blade_count(); ++b) {
    if (std::fabs(sq[b]) > 1e-12 * scale) {
      throw PreconditionError("versor_inverse: a * reverse(a) is not a scalar");
    }
  }
  if (sq[0] == 0.0) throw PreconditionError("versor_inverse: null element has no inverse");
  return rev * (1.0 / sq[0]);
}

std::string to_string(const Multivector& a) {
  const auto labels = a.signature().basis_order();
  std::string out;
  for (int b = 0; b < a.blade_count(); ++b) {
    if (a[b] == 0.0) continue;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%+.6g", a[b]);
    out += buf;
    for (int v = 0; v < a.signature().dimension(); ++v) {
      if (b & (1 << v)) out += "*" + labels[v];
    }
    out += " ";
  }
  return out.empty() ? "0" : out.substr(0, out.size() - 1);
}

namespace sta {

Signature signature() { return Signature(3, 1); }
Multivector e(int index) { return Multivector::basis_vector(signature(), index); }
Multivector e0() { return e(kE0); }
Multivector e1() { return e(kE1); }
Multivector e2() { return e(kE2); }
Multivector e3() { return e(kE3); }
Multivector i3() { return Multivector::blade(signature(), 0b0111); }
Multivector i4() { return Multivector::blade(signature(), 0b1111, -1.0); }

}  // namespace sta

Multivector dual(const Multivector& a) {
  require_same(a.signature(), sta::signature());
  // i4^-1 = -i4
  return a * (-sta::i4());
}

namespace {

constexpr unsigned kVtE0 = 1u << sta::kE0;
constexpr unsigned kVtI3 = 0b0111;
constexpr unsigned kVtI4 = 0b1111;

double support_scale(const Multivector& mv) { return 1.0 + std::sqrt(norm_squared(mv)); }

}  // namespace

bool is_volume_time(const Multivector& mv, double tol) {
  if (!(mv.signature() == sta::signature())) return false;
  const double limit = tol * support_scale(mv);
  for (unsigned b = 0; b < kMaxBlades; ++b) {
    if (b == 0 || b == kVtE0 || b == kVtI3 || b == kVtI4) continue;
    if (std::fabs(mv[b]) > limit) return false;
  }
  return true;
}

VtElement::VtElement() : mv_(sta::signature()) {}

VtElement::VtElement(const Multivector& mv, double tol) : mv_(sta::signature()) {
  require_same(mv.signature(), sta::signature());
  if (!is_volume_time(mv, tol)) {
    throw SupportError("VtElement: multivector has support outside span{1, e0, i3, i4}: " + to_string(mv));
  }
  mv_[0] = mv[0];
  mv_[kVtE0] = mv[kVtE0];
  mv_[kVtI3] = mv[kVtI3];
  mv_[kVtI4] = mv[kVtI4];
}

double VtElement::scalar() const { return mv_[0]; }
double VtElement::e0() const { return mv_[kVtE0]; }
double VtElement::i3() const { return mv_[kVtI3]; }
double VtElement::i4() const { return -mv_[kVtI4]; }

VtElement operator*(const VtElement& a, const VtElement& b) { return VtElement(a.mv_ * b.mv_); }

namespace {

// Image of 1, i, j, k as (mask, sign) pairs.
struct QuaternionImage {
  std::array<unsigned, 4> mask;
  std::array<double, 4> sign;
};

constexpr QuaternionImage kCl02Image{{0u, 0b01u, 0b10u, 0b11u}, {1.0, 1.0, 1.0, 1.0}};
// e32 = -e23, e13 = +e13, e21 = -e12
constexpr QuaternionImage kCl30PlusImage{{0u, 0b110u, 0b101u, 0b011u}, {1.0, -1.0, 1.0, -1.0}};

Multivector embed(const Quaternion& q, Signature sig, const QuaternionImage& img) {
  Multivector m(sig);
  const double c[4] = {q.r, q.i, q.j, q.k};
  for (int n = 0; n < 4; ++n) m[img.mask[n]] += img.sign[n] * c[n];
  return m;
}

Quaternion extract(const Multivector& mv, Signature sig, const QuaternionImage& img, double tol,
                   const char* name) {
  require_same(mv.signature(), sig);
  const double limit = tol * support_scale(mv);
  for (int b = 0; b < mv.blade_count(); ++b) {
    bool in_image = false;
    for (unsigned m : img.mask) in_image = in_image || (static_cast<unsigned>(b) == m);
    if (!in_image && std::fabs(mv[b]) > limit) {
      throw SupportError(std::string(name) + ": multivector outside the quaternion image: " + to_string(mv));
    }
  }
  return {img.sign[0] * mv[img.mask[0]], img.sign[1] * mv[img.mask[1]], img.sign[2] * mv[img.mask[2]],
          img.sign[3] * mv[img.mask[3]]};
}

}  // namespace

Multivector iso_h_to_cl02(const Quaternion& q) { return embed(q, Signature(0, 2), kCl02Image); }

Quaternion iso_cl02_to_h(const Multivector& mv, double tol) {
  return extract(mv, Signature(0, 2), kCl02Image, tol, "iso_cl02_to_h");
}

Multivector iso_h_to_cl30plus(const Quaternion& q) { return embed(q, Signature(3, 0), kCl30PlusImage); }

Quaternion iso_cl30plus_to_h(const Multivector& mv, double tol) {
  return extract(mv, Signature(3, 0), kCl30PlusImage, tol, "iso_cl30plus_to_h");
}

VtElement iso_h_to_vt(const Quaternion& q) {
  Multivector m(sta::signature());
  m[0] = q.r;
  m[kVtE0] = q.i;
  m[kVtI3] = q.j;
  m[kVtI4] = -q.k;
  return VtElement(m);
}

Quaternion iso_vt_to_h(const VtElement& v) { return {v.scalar(), v.e0(), v.i3(), v.i4()}; }

}  // namespace hyperfourier
