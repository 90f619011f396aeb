#include "doctest.h"
#include "hyperfourier/clifford.hpp"
#include "hyperfourier/errors.hpp"
#include "support.hpp"

using namespace hyperfourier;

namespace {

const Signature kSigs[] = {Signature(0, 2), Signature(2, 0), Signature(3, 0), Signature(3, 1),
                           Signature(1, 1), Signature(0, 4), Signature(4, 0), Signature(1, 3)};

bool close(const Multivector& a, const Multivector& b, double tol = 1e-12) { return max_abs_diff(a, b) <= tol; }

Multivector blade(const Signature& s, unsigned mask, double c = 1.0) { return Multivector::blade(s, mask, c); }

}  // namespace

TEST_CASE("signature") {
  CHECK_THROWS_AS(Signature(3, 2), PreconditionError);
  const Signature sta_sig = sta::signature();
  CHECK(sta_sig.p() == 3);
  CHECK(sta_sig.q() == 1);
  CHECK(sta_sig.basis_order() == std::vector<std::string>{"e1", "e2", "e3", "e0"});
  CHECK(sta_sig.square(sta::kE0) == -1);
  CHECK(sta_sig.square(sta::kE1) == 1);
}

TEST_CASE("blade table matches word reduction in every signature") {
  for (const Signature& s : kSigs) {
    for (int a = 0; a < s.blade_count(); ++a) {
      for (int b = 0; b < s.blade_count(); ++b) {
        CHECK(blade_product_sign(s, a, b) == hftest::word_blade_product(s, a, b).second);
        CHECK((static_cast<unsigned>(a) ^ static_cast<unsigned>(b)) == hftest::word_blade_product(s, a, b).first);
      }
    }
  }
}

TEST_CASE("product examples") {
  using namespace sta;
  CHECK(e0() * e0() == Multivector::scalar(signature(), -1.0));
  CHECK(e1() * e1() == Multivector::scalar(signature(), 1.0));
  CHECK(close(e0() * i3(), i4()));
  CHECK(close(i3() * e0(), -i4()));
  CHECK(close(i3() * i3(), Multivector::scalar(signature(), -1.0)));
  CHECK(close(i4() * i4(), Multivector::scalar(signature(), -1.0)));
  hftest::Rng rng(10);
  const Multivector x = rng.multivector(signature());
  CHECK(Multivector::scalar(signature(), 1.0) * x == x);
  CHECK_THROWS_AS(e0() * Multivector::scalar(Signature(3, 0), 1.0), SignatureMismatch);
}

TEST_CASE("reverse and grade") {
  const Signature s = sta::signature();
  CHECK(reverse(Multivector::scalar(s, 2.0)) == Multivector::scalar(s, 2.0));
  CHECK(reverse(blade(s, 0b0011)) == blade(s, 0b0011, -1.0));
  CHECK(close(reverse(sta::i4()), sta::i4()));
  CHECK(reverse(blade(s, 0b0111)) == blade(s, 0b0111, -1.0));

  CHECK(grade(Multivector::scalar(s, 3.0) + sta::e1(), 0) == Multivector::scalar(s, 3.0));
  const Multivector e0e1 = sta::e0() * sta::e1();
  CHECK(grade(e0e1 + sta::e2(), 2) == e0e1);
  CHECK(close(grade(sta::e0() * e0e1, 1), -sta::e1()));
  CHECK_THROWS_AS(grade(sta::e1(), 5), PreconditionError);
  CHECK_THROWS_AS(grade(sta::e1(), -1), PreconditionError);
}

TEST_CASE("dual") {
  using namespace sta;
  CHECK(close(dual(e0()), i3()));
  CHECK(close(dual(i4()), Multivector::scalar(signature(), 1.0)));
  // e1 * i4^-1 reduced by the word oracle
  const Multivector expected = hftest::word_product(e1(), versor_inverse(i4()));
  CHECK(close(dual(e1()), expected));
  // single blade e2 e3 e0, sign fixed by the oracle above
  const Multivector d = dual(e1());
  CHECK(std::fabs(d[0b1110]) == 1.0);
  CHECK(norm_squared(d) == 1.0);
  CHECK_THROWS_AS(dual(Multivector::scalar(Signature(3, 0), 1.0)), SignatureMismatch);
}

TEST_CASE("spacetime conventions") {
  using namespace sta;
  for (const Multivector& ek : {e1(), e2(), e3()}) CHECK(close(i3() * ek, ek * i3()));
  CHECK(close(e0() * i3(), -(i3() * e0())));
}

TEST_CASE("random algebra invariants") {
  hftest::Rng rng(11);
  for (const Signature& s : kSigs) {
    double assoc = 0.0;
    double oracle = 0.0;
    double rev = 0.0;
    for (int t = 0; t < 10000; ++t) {
      const Multivector a = rng.multivector(s);
      const Multivector b = rng.multivector(s);
      const Multivector c = rng.multivector(s);
      assoc = std::fmax(assoc, max_abs_diff((a * b) * c, a * (b * c)));
      if (t < 1000) {
        oracle = std::fmax(oracle, max_abs_diff(a * b, hftest::word_product(a, b)));
        rev = std::fmax(rev, max_abs_diff(reverse(a * b), reverse(b) * reverse(a)));
      }
    }
    CHECK(assoc <= 1e-11);
    CHECK(oracle <= 1e-12);
    CHECK(rev <= 1e-12);
  }
}

TEST_CASE("euclidean adjoint gives the coefficient norm") {
  hftest::Rng rng(12);
  for (const Signature& s : kSigs) {
    const Multivector a = rng.multivector(s);
    CHECK(scalar_part(a * euclidean_adjoint(a)) == doctest::Approx(norm_squared(a)).epsilon(1e-13));
  }
}

TEST_CASE("quaternion isomorphisms") {
  const Quaternion one(1.0);
  CHECK(iso_h_to_cl02(one) == Multivector::scalar(Signature(0, 2), 1.0));
  CHECK(iso_h_to_cl30plus(one) == Multivector::scalar(Signature(3, 0), 1.0));
  CHECK(iso_h_to_vt(one).multivector() == Multivector::scalar(sta::signature(), 1.0));

  const Quaternion I = Quaternion::unit_i(), J = Quaternion::unit_j(), K = Quaternion::unit_k();
  CHECK(close(iso_h_to_vt(I).multivector() * iso_h_to_vt(J).multivector(), iso_h_to_vt(K).multivector()));
  CHECK(close(iso_h_to_vt(K).multivector(), sta::i4()));
  CHECK(close(iso_h_to_cl30plus(J) * iso_h_to_cl30plus(K), iso_h_to_cl30plus(I)));
  // e13 * e21 = e32 written out in Cl(3,0)
  const Signature s3(3, 0);
  const Multivector e1 = Multivector::basis_vector(s3, 0), e2 = Multivector::basis_vector(s3, 1),
                    e3 = Multivector::basis_vector(s3, 2);
  CHECK(close((e1 * e3) * (e2 * e1), e3 * e2));
  CHECK(close(iso_h_to_cl30plus(I), e3 * e2));
  CHECK(close(iso_h_to_cl02(K), Multivector::basis_vector(Signature(0, 2), 0) * Multivector::basis_vector(Signature(0, 2), 1)));

  hftest::Rng rng(13);
  double hom = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Quaternion p = rng.quaternion();
    const Quaternion q = rng.quaternion();
    hom = std::fmax(hom, max_abs_diff(iso_h_to_cl02(p * q), iso_h_to_cl02(p) * iso_h_to_cl02(q)));
    hom = std::fmax(hom, max_abs_diff(iso_h_to_cl30plus(p * q), iso_h_to_cl30plus(p) * iso_h_to_cl30plus(q)));
    hom = std::fmax(hom, max_abs_diff(iso_h_to_vt(p * q).multivector(),
                                      iso_h_to_vt(p).multivector() * iso_h_to_vt(q).multivector()));
    CHECK(iso_cl02_to_h(iso_h_to_cl02(p)) == p);
    CHECK(iso_cl30plus_to_h(iso_h_to_cl30plus(p)) == p);
    CHECK(iso_vt_to_h(iso_h_to_vt(p)) == p);
    // reversion corresponds to conjugation in Cl+(3,0)
    CHECK(close(reverse(iso_h_to_cl30plus(p)), iso_h_to_cl30plus(conj(p))));
  }
  CHECK(hom <= 1e-12);

  CHECK_THROWS_AS(iso_cl30plus_to_h(e1), SupportError);
  CHECK_THROWS_AS(iso_cl02_to_h(Multivector::scalar(Signature(3, 0), 1.0)), SignatureMismatch);
  CHECK_THROWS_AS(VtElement(sta::e1()), SupportError);
}

TEST_CASE("volume-time closure") {
  hftest::Rng rng(14);
  for (int t = 0; t < 1000; ++t) {
    const VtElement a = iso_h_to_vt(rng.quaternion());
    const VtElement b = iso_h_to_vt(rng.quaternion());
    CHECK(is_volume_time(a.multivector() * b.multivector()));
  }
  CHECK_FALSE(is_volume_time(sta::e2()));
}

TEST_CASE("versor inverse") {
  CHECK(close(versor_inverse(sta::e0()) * sta::e0(), Multivector::scalar(sta::signature(), 1.0)));
  CHECK(close(versor_inverse(sta::i4()), -sta::i4()));
  const Multivector not_versor = sta::e1() + sta::e0() * sta::e1();
  CHECK_THROWS_AS(versor_inverse(not_versor + sta::e2() * sta::e3()), PreconditionError);
}
