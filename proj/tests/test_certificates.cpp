#include "doctest.h"

#include <algorithm>
#include <random>

#include "sphcert/certificates.hpp"
#include "sphcert/harmonic_families.hpp"
#include "test_support.hpp"

using namespace sphcert;

namespace {

SpherePolynomial sx(int v) { return SpherePolynomial::coordinate(3, v); }
SpherePolynomial sc(long v) { return SpherePolynomial::constant(3, make_rational(v)); }
Polynomial x(int m, int v) { return Polynomial::variable(m, v); }

}  // namespace

TEST_CASE("stereographic family examples") {
  const auto h0 = stereographic_harmonic(0, Part::Re);
  CHECK(h0.value() == SphereRationalFunction::constant(3, Rational(1)));
  CHECK(stereographic_harmonic(0, Part::Im).value().is_zero());

  const auto h1 = stereographic_harmonic(1, Part::Re);
  CHECK(h1.value() == SphereRationalFunction(sx(1), sc(1) - sx(3)));
  CHECK(h1.provenance() == "stereo:k=1:re");

  const auto h2 = stereographic_harmonic(2, Part::Re);
  CHECK(h2.value() == SphereRationalFunction(sx(1) * sx(1) - sx(2) * sx(2), sc(1) - sx(3), 2));
  const auto h2i = stereographic_harmonic(2, Part::Im);
  CHECK(h2i.value() == SphereRationalFunction(sx(1) * sx(2) * Rational(2), sc(1) - sx(3), 2));
}

TEST_CASE("every family member is exactly harmonic with denominator vanishing only at the pole") {
  for (int k = 0; k <= 6; ++k)
    for (Part part : {Part::Re, Part::Im}) {
      const auto h = stereographic_harmonic(k, part);
      CHECK(laplace_sphere(h.value()).is_zero());
      CHECK(denominator_vanishes_only_at_pole(h));
    }
}

TEST_CASE("family is closed under rotations about the pole axis") {
  for (int k = 0; k <= 6; ++k)
    for (Part part : {Part::Re, Part::Im}) {
      const auto h = stereographic_harmonic(k, part);
      const auto rotated = apply_rotation_field(RotationField(1, 2), h.value());
      CHECK_NOTHROW(HarmonicFunction(rotated, h.domain(), "custom"));
    }
}

TEST_CASE("harmonic function constructor rejects non-harmonic input") {
  const SphereRationalFunction f(sx(1) * sx(1));
  CHECK_THROWS_AS(HarmonicFunction(f, CapDomain::north_pole_excluded(), "custom"), HarmonicityError);
  CHECK_THROWS_AS(CapDomain::north_pole_excluded(3.5), std::invalid_argument);
  CHECK_THROWS_AS(CapDomain::north_pole_excluded(0.0), std::invalid_argument);
}

TEST_CASE("planar combinations") {
  const auto sum = planar_combination({{1, Part::Re, Rational(1)}, {1, Part::Im, Rational(1)}});
  CHECK(sum.value() == SphereRationalFunction(sx(1) + sx(2), sc(1) - sx(3)));
  CHECK(planar_combination({}).value().is_zero());
  const auto shifted = planar_combination({{2, Part::Re, Rational(1)}, {0, Part::Re, Rational(-1)}});
  CHECK(shifted.value() == stereographic_harmonic(2, Part::Re).value() - SphereRationalFunction::constant(3, Rational(1)));
  CHECK(laplace_sphere(shifted.value()).is_zero());
}

TEST_CASE("family descriptors") {
  CHECK(parse_family("stereo:k=3:re").provenance() == "stereo:k=3:re");
  CHECK(parse_family("stereo:k=2:im").value() == stereographic_harmonic(2, Part::Im).value());
  CHECK_THROWS_AS(parse_family("nosuch"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("stereo:k=x:re"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("stereo:k=2:zz"), std::invalid_argument);
}

TEST_CASE("euclidean harmonic polynomials") {
  const auto planar = generate_harmonic_basis(2, 2);
  // span{x1^2 - x2^2, x1 x2}
  const Polynomial a = x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2);
  const Polynomial b = x(2, 1) * x(2, 2);
  for (const auto& p : planar) {
    bool in_span = false;
    for (long s = -2; s <= 2 && !in_span; ++s)
      for (long t = -2; t <= 2 && !in_span; ++t)
        in_span = (s != 0 || t != 0) && p == a * make_rational(s) + b * make_rational(t);
    CHECK(in_span);
  }
  CHECK(euclidean_harmonic(3, 1, {Rational(1), Rational(0), Rational(0)}) == x(3, 1));
  CHECK(euclidean_harmonic(3, 0, {Rational(7)}) == Polynomial::constant(3, Rational(7)));
  CHECK_THROWS_AS(euclidean_harmonic(3, 2, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("delta_power examples") {
  const SphereRationalFunction f(sx(1) * sx(1));
  CHECK(delta_power(f, 0) == f);
  // Leibniz oracle: 2 x1 lap x1 + 2 sum (X x1)^2 = -4 x1^2 + 2 (x2^2 + x3^2)
  const SphereRationalFunction oracle(sx(1) * sx(1) * Rational(-4) + (sx(2) * sx(2) + sx(3) * sx(3)) * Rational(2));
  CHECK(delta_power(f, 1) == oracle);
  CHECK(delta_power(f, 1) == SphereRationalFunction(sc(2) - sx(1) * sx(1) * Rational(6)));
  for (int k = 1; k <= 3; ++k) CHECK(delta_power(SphereRationalFunction::constant(3, Rational(1)), k).is_zero());
}

TEST_CASE("generalized Leibniz identity isolates harmonicity") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 3 + trial % 2;
    const auto f = testing::random_rational_function(m, rng, 2);
    SphereRationalFunction rhs = f * laplace_sphere(f) * Rational(2);
    for (const auto& field : rotation_fields(m)) {
      const auto xf = apply_rotation_field(field, f);
      rhs += xf * xf * Rational(2);
    }
    CHECK(laplace_sphere(f * f) == rhs);
  }
}

TEST_CASE("certificate terms") {
  const auto h = stereographic_harmonic(1, Part::Re);
  const auto k1 = sos_certificate(h, 1);
  REQUIRE(k1.size() == 3);
  CHECK(k1[0] == apply_rotation_field(RotationField(1, 2), h.value()));
  CHECK(k1[1] == apply_rotation_field(RotationField(1, 3), h.value()));
  CHECK(k1[2] == apply_rotation_field(RotationField(2, 3), h.value()));

  const auto k2 = sos_certificate(h, 2);
  CHECK(k2.size() == 9);
  // Oracle for k = 2: lap_S of the k = 1 certificate value.
  SphereRationalFunction level1(3), level2(3);
  for (const auto& t : k1) level1 += t * t * Rational(2);
  for (const auto& t : k2) level2 += t * t * Rational(4);
  CHECK(laplace_sphere(level1) == level2);

  for (const auto& t : sos_certificate(stereographic_harmonic(0, Part::Re), 1)) CHECK(t.is_zero());
  CHECK_THROWS(sos_certificate(h, 0));
}

TEST_CASE("certificate sum is independent of summation order") {
  const auto terms = sos_certificate(stereographic_harmonic(2, Part::Im), 2);
  SphereRationalFunction forward(3), backward(3), shuffled(3);
  for (const auto& t : terms) forward += t * t;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) backward += *it * *it;
  std::vector<std::size_t> order(terms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = (i * 4) % order.size();
  for (auto i : order) shuffled += terms[i] * terms[i];
  CHECK(forward == backward);
  CHECK(forward == shuffled);
}

TEST_CASE("verify_certificate") {
  const auto h = stereographic_harmonic(1, Part::Re);
  CertificateOptions opts;
  opts.sample_count = 40;
  const auto r1 = verify_certificate(h, 1, opts);
  CHECK(r1.equality_verified);
  CHECK(r1.terms_harmonic);
  CHECK(r1.term_count == 3);
  CHECK(r1.samples.size() == 40);
  CHECK(r1.all_samples_nonnegative());
  // Independent Leibniz oracle with lap_S h = 0.
  SphereRationalFunction oracle(3);
  for (const auto& field : rotation_fields(3)) {
    const auto xh = apply_rotation_field(field, h.value());
    oracle += xh * xh * Rational(2);
  }
  CHECK(delta_power(h.value() * h.value(), 1) == oracle);

  const auto r3 = verify_certificate(h, 3, opts);
  CHECK(r3.term_count == 27);
  CHECK(r3.passed());

  const auto trivial = verify_certificate(stereographic_harmonic(0, Part::Re), 4, opts);
  CHECK(trivial.passed());
  CHECK(trivial.trivial);
  CHECK(trivial.term_count == 0);
  CHECK_FALSE(r3.trivial);
  for (const auto& s : trivial.samples) CHECK(s.value == 0);

  const auto zero = verify_certificate(h, 0, opts);
  CHECK(zero.passed());
}

TEST_CASE("sampling at the pole is rejected") {
  const auto h = stereographic_harmonic(1, Part::Re);
  CHECK_THROWS_AS(sample_certificate_value(h.value(), h.domain(), h.domain().pole), std::domain_error);
}

TEST_CASE("parallel certificate matches sequential") {
  const auto h = stereographic_harmonic(3, Part::Re);
  CHECK(sos_certificate(h, 2, 4) == sos_certificate(h, 2, 1));
}

TEST_CASE("euclidean certificate") {
  const Polynomial p = x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2);
  CHECK(euclid_delta_power(p * p, 1) == (x(2, 1) * x(2, 1) + x(2, 2) * x(2, 2)) * Rational(8));
  CHECK(euclid_delta_power(p * p, 2) == Polynomial::constant(2, Rational(32)));
  CHECK(euclid_delta_power(p * p, 3).is_zero());
  for (int k = 0; k <= 3; ++k) {
    const auto r = euclid_certificate(p, k);
    CHECK(r.passed());
    CHECK(r.term_count == (1u << k));
  }
  const auto lin = euclid_certificate(x(3, 1), 1);
  CHECK(lin.delta_power_value == Polynomial::constant(3, Rational(2)));
  CHECK(euclid_certificate(x(3, 1), 2).delta_power_value.is_zero());
  CHECK(euclid_certificate(Polynomial::constant(3, Rational(5)), 2).delta_power_value.is_zero());
  CHECK_THROWS_AS(euclid_certificate(x(3, 1) * x(3, 1), 1), PreconditionError);
}
