#include "hyperfourier/spacetime.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hyperfourier/kernels.hpp"
#include "hyperfourier/parallel.hpp"

namespace hyperfourier {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

kernels::TwoSidedLayout layout_4d(const SpacetimeField4D::Dims& d) {
  return {{d[0], d[1], d[2], d[3]}, {true, false, false, false}};
}

std::string index_string(const SpacetimeField4D::Index& i) {
  return "(" + std::to_string(i[0]) + ", " + std::to_string(i[1]) + ", " + std::to_string(i[2]) + ", " +
         std::to_string(i[3]) + ")";
}

template <class Tag>
std::vector<Quaternion> to_quaternions(const SpacetimeGrid4D<Tag>& f, const char* name) {
  std::vector<Quaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    const Multivector& mv = f.data()[n];
    if (!is_volume_time(mv)) {
      throw SupportError(std::string(name) + ": sample at (t, x, y, z) = " + index_string(f.index(n)) +
                         " is not in span{1, e0, i3, i4}");
    }
    out[n] = iso_vt_to_h(VtElement(mv));
  }
  return out;
}

template <class OutTag, class InTag>
SpacetimeGrid4D<OutTag> from_quaternions(const SpacetimeGrid4D<InTag>& shape, const std::vector<Quaternion>& q,
                                         double scale) {
  std::vector<Multivector> data;
  data.reserve(q.size());
  for (const Quaternion& v : q) data.push_back(iso_h_to_vt(v * scale).multivector());
  return SpacetimeGrid4D<OutTag>(shape.dims(), std::move(data), shape.spacing());
}

template <class Tag>
double inverse_scale(const SpacetimeGrid4D<Tag>& g) {
  return 1.0 / static_cast<double>(g.size());
}

bool use_fast(TransformPath path, const SpacetimeField4D::Dims& d, const char* name) {
  switch (path) {
    case TransformPath::Direct:
      return false;
    case TransformPath::Fast:
      return true;
    case TransformPath::Auto:
      break;
  }
  if (kernels::fast_path_supported(d)) return true;
  warn(std::string(name) + ": " + std::to_string(d[0]) + "x" + std::to_string(d[1]) + "x" + std::to_string(d[2]) +
       "x" + std::to_string(d[3]) + " is not a power-of-two grid, falling back to the direct transform");
  return false;
}

Multivector exp_blade(const Multivector& blade, double angle) {
  return Multivector::scalar(sta::signature(), std::cos(angle)) + blade * std::sin(angle);
}

// Phase 2 pi (a_t ts/T, a_s (mx/X + ny/Y + pz/Z)) between a sample and a bin,
// reduced modulo each axis size before scaling to keep the argument small.
double time_phase(const SpacetimeField4D::Dims& d, std::size_t t, std::size_t s) {
  return kTwoPi * static_cast<double>((t * s) % d[0]) / static_cast<double>(d[0]);
}

double space_phase(const SpacetimeField4D::Dims& d, const SpacetimeField4D::Index& x,
                   const SpacetimeField4D::Index& u) {
  double p = 0.0;
  for (std::size_t a = 1; a < 4; ++a) p += static_cast<double>((x[a] * u[a]) % d[a]) / static_cast<double>(d[a]);
  return kTwoPi * p;
}

template <class OutTag, class InTag>
SpacetimeGrid4D<OutTag> clifford_sum(const SpacetimeGrid4D<InTag>& in, int sign, double scale) {
  const auto& d = in.dims();
  const Multivector e0 = sta::e0(), i3 = sta::i3();
  SpacetimeGrid4D<OutTag> out(d, in.spacing());
  for (std::size_t k = 0; k < in.size(); ++k) {
    const auto u = in.index(k);
    Multivector acc(sta::signature());
    for (std::size_t n = 0; n < in.size(); ++n) {
      const auto x = in.index(n);
      acc += exp_blade(e0, sign * time_phase(d, x[0], u[0])) * in.data()[n] *
             exp_blade(i3, sign * space_phase(d, x, u));
    }
    out.data()[k] = acc * scale;
  }
  return out;
}

struct DecompositionTable {
  // blade mask -> (component k, V_t blade mask, sign) with blade = sign * vt * e_k
  std::array<int, kMaxBlades> part{};
  std::array<unsigned, kMaxBlades> vt_mask{};
  std::array<double, kMaxBlades> sign{};
};

// Built from products of the V_t basis {1, e0, i3, i4} with the right factors
// {1, e1, e2, e3}; every Cl(3,1) blade is hit exactly once.
const DecompositionTable& decomposition_table() {
  static const DecompositionTable table = [] {
    DecompositionTable t;
    std::array<bool, kMaxBlades> seen{};
    const unsigned vt_masks[4] = {0u, 1u << sta::kE0, 0b0111u, 0b1111u};
    for (int k = 0; k < 4; ++k) {
      for (const unsigned vm : vt_masks) {
        const Multivector p = Multivector::blade(sta::signature(), vm) * vt_right_factor(k);
        for (unsigned b = 0; b < kMaxBlades; ++b) {
          if (p[b] == 0.0) continue;
          if (seen[b]) throw std::logic_error("V_t decomposition table hits a blade twice");
          seen[b] = true;
          t.part[b] = k;
          t.vt_mask[b] = vm;
          t.sign[b] = p[b];
        }
      }
    }
    for (bool s : seen) {
      if (!s) throw std::logic_error("V_t decomposition table misses a blade");
    }
    return t;
  }();
  return table;
}

std::vector<std::pair<std::size_t, std::size_t>> permutation_pairs(const LinearMap4& A,
                                                                   const SpacetimeField4D::Dims& d) {
  if (!A.is_signed_permutation()) {
    throw UnsupportedMapError("spacetime GL law: only signed permutations map the lattice onto itself");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (A(r, c) == 0.0) continue;
      if (d[r] != d[c]) {
        throw UnsupportedMapError("spacetime GL law: the map pairs axes " + std::to_string(r) + " and " +
                                  std::to_string(c) + " of different sizes");
      }
      pairs.emplace_back(r, c);
    }
  }
  return pairs;
}

// Integer action of a signed permutation on grid indices, wrapped periodically.
SpacetimeField4D::Index apply_lattice(const LinearMap4& A, const SpacetimeField4D::Dims& d,
                                      const SpacetimeField4D::Index& x) {
  SpacetimeField4D::Index y{};
  for (std::size_t r = 0; r < 4; ++r) {
    long long acc = 0;
    for (std::size_t c = 0; c < 4; ++c) acc += std::llround(A(r, c)) * static_cast<long long>(x[c]);
    y[r] = QuaternionField2D::wrap(acc, d[r]);
  }
  return y;
}

}  // namespace

STSpectrum4D vtft_forward_direct(const SpacetimeField4D& f) {
  return from_quaternions<SpectrumTag>(
      f, kernels::two_sided_direct(to_quaternions(f, "vtft"), layout_4d(f.dims()), -1), 1.0);
}

STSpectrum4D vtft_forward_fast(const SpacetimeField4D& f) {
  return from_quaternions<SpectrumTag>(f, kernels::two_sided_fast(to_quaternions(f, "vtft"), layout_4d(f.dims()), -1),
                                       1.0);
}

STSpectrum4D vtft_forward(const SpacetimeField4D& f, TransformPath path) {
  return use_fast(path, f.dims(), "vtft") ? vtft_forward_fast(f) : vtft_forward_direct(f);
}

SpacetimeField4D vtft_inverse_direct(const STSpectrum4D& F) {
  return from_quaternions<FieldTag>(
      F, kernels::two_sided_direct(to_quaternions(F, "ivtft"), layout_4d(F.dims()), +1), inverse_scale(F));
}

SpacetimeField4D vtft_inverse_fast(const STSpectrum4D& F) {
  return from_quaternions<FieldTag>(F, kernels::two_sided_fast(to_quaternions(F, "ivtft"), layout_4d(F.dims()), +1),
                                    inverse_scale(F));
}

SpacetimeField4D vtft_inverse(const STSpectrum4D& F, TransformPath path) {
  return use_fast(path, F.dims(), "ivtft") ? vtft_inverse_fast(F) : vtft_inverse_direct(F);
}

STSpectrum4D sft_forward_direct(const SpacetimeField4D& f) { return clifford_sum<SpectrumTag>(f, -1, 1.0); }

SpacetimeField4D sft_inverse_direct(const STSpectrum4D& F) {
  return clifford_sum<FieldTag>(F, +1, inverse_scale(F));
}

STSpectrum4D sft_forward_fast(const SpacetimeField4D& f) {
  const auto g = decompose_vt(f);
  return recompose_vt<SpectrumTag>(
      {vtft_forward_fast(g[0]), vtft_forward_fast(g[1]), vtft_forward_fast(g[2]), vtft_forward_fast(g[3])});
}

SpacetimeField4D sft_inverse_fast(const STSpectrum4D& F) {
  const auto g = decompose_vt(F);
  return recompose_vt<FieldTag>(
      {vtft_inverse_fast(g[0]), vtft_inverse_fast(g[1]), vtft_inverse_fast(g[2]), vtft_inverse_fast(g[3])});
}

STSpectrum4D sft_forward(const SpacetimeField4D& f, TransformPath path) {
  return use_fast(path, f.dims(), "sft") ? sft_forward_fast(f) : sft_forward_direct(f);
}

SpacetimeField4D sft_inverse(const STSpectrum4D& F, TransformPath path) {
  return use_fast(path, F.dims(), "isft") ? sft_inverse_fast(F) : sft_inverse_direct(F);
}

Multivector vt_right_factor(int k) {
  if (k < 0 || k > 3) throw PreconditionError("vt_right_factor: k must be 0..3");
  return k == 0 ? Multivector::scalar(sta::signature(), 1.0) : sta::e(k - 1);
}

std::array<Multivector, 4> decompose_vt(const Multivector& mv) {
  if (mv.signature() != sta::signature()) throw SignatureMismatch("decompose_vt: expected Cl(3,1)");
  const DecompositionTable& t = decomposition_table();
  std::array<Multivector, 4> g{Multivector(sta::signature()), Multivector(sta::signature()),
                               Multivector(sta::signature()), Multivector(sta::signature())};
  // sign is +-1, so mv[b] * sign recovers the V_t coefficient
  for (unsigned b = 0; b < kMaxBlades; ++b) g[t.part[b]][t.vt_mask[b]] += mv[b] * t.sign[b];
  return g;
}

Multivector recompose_vt(const std::array<Multivector, 4>& parts) {
  Multivector out(sta::signature());
  for (int k = 0; k < 4; ++k) out += parts[k] * vt_right_factor(k);
  return out;
}

std::pair<Multivector, Multivector> split_spacetime_pm(const Multivector& mv) {
  const Multivector r = sta::e0() * mv * sta::i3();
  return {0.5 * (mv + r), 0.5 * (mv - r)};
}

EnergySplit wave_packet_energy_split(const SpacetimeField4D& f) {
  EnergySplit e{0.0, 0.0};
  for (const Multivector& mv : f.data()) {
    const auto [p, m] = split_spacetime_pm(mv);
    e.plus += scalar_part(p * euclidean_adjoint(p));
    e.minus += scalar_part(m * euclidean_adjoint(m));
  }
  return e;
}

STSpectrum4D minkowski_half_transform(const SpacetimeField4D& f, int time_sign) {
  if (time_sign != 1 && time_sign != -1) throw PreconditionError("minkowski_half_transform: time_sign must be +-1");
  const auto& d = f.dims();
  const Multivector i3 = sta::i3();
  STSpectrum4D out(d, f.spacing());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto u = f.index(k);
    Multivector acc(sta::signature());
    for (std::size_t n = 0; n < f.size(); ++n) {
      const auto x = f.index(n);
      acc += f.data()[n] * exp_blade(i3, -(space_phase(d, x, u) + time_sign * time_phase(d, x[0], u[0])));
    }
    out.data()[k] = acc;
  }
  return out;
}

STSpectrum4D sft_recombined(const SpacetimeField4D& f) {
  const auto [plus, minus] = split_spacetime_pm(f);
  STSpectrum4D out = minkowski_half_transform(plus, -1);
  const STSpectrum4D m = minkowski_half_transform(minus, +1);
  for (std::size_t n = 0; n < out.size(); ++n) out.data()[n] += m.data()[n];
  return out;
}

SpacetimeField4D lattice_transform(const SpacetimeField4D& f, const LinearMap4& A) {
  permutation_pairs(A, f.dims());
  SpacetimeField4D g(f.dims(), f.spacing());
  for (std::size_t n = 0; n < g.size(); ++n) g.data()[n] = f.at(apply_lattice(A, f.dims(), g.index(n)));
  return g;
}

SpacetimeGlReport verify_sft_gl(const LinearMap4& A, const SpacetimeField4D& f) {
  const auto& d = f.dims();
  const SpacetimeField4D g = lattice_transform(f, A);
  const STSpectrum4D lhs = sft_forward(g);

  const auto [fp, fm] = split_spacetime_pm(f);
  const STSpectrum4D F = sft_forward(f);
  const STSpectrum4D Fp = sft_forward(fp);
  const STSpectrum4D Fm = sft_forward(fm);

  const LinearMap4 B = adjoint(A.inverse());
  const LinearMap4 Bt = conj_by_axis_reflection(B, 0);  // U_e0 B U_e0, e0 is the t axis
  const double det_factor = std::fabs(1.0 / A.det());

  STSpectrum4D rhs(d, f.spacing()), unsplit(d, f.spacing());
  for (std::size_t n = 0; n < rhs.size(); ++n) {
    const auto u = rhs.index(n);
    rhs.data()[n] = det_factor * (Fm.at(apply_lattice(B, d, u)) + Fp.at(apply_lattice(Bt, d, u)));
    unsplit.data()[n] = det_factor * F.at(apply_lattice(B, d, u));
  }
  return {relative_error(lhs, rhs), relative_error(lhs, unsplit)};
}

}  // namespace hyperfourier
