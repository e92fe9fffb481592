#include "doctest.h"

#include "sphcert/homogeneous.hpp"

using namespace sphcert;

namespace {

SpherePolynomial sx(int m, int v) { return SpherePolynomial::coordinate(m, v); }
SphereRationalFunction fx(int m, int v) { return SphereRationalFunction(sx(m, v)); }

}  // namespace

TEST_CASE("so(m) realization") {
  const auto e12 = realize_so_field(3, 1, 2);
  // E12 -> x2 d1 - x1 d2
  CHECK(e12.apply(fx(3, 1)) == fx(3, 2));
  CHECK(e12.apply(fx(3, 2)) == -fx(3, 1));
  const auto r = so_realization(3);
  CHECK(r.realize(LieVector(3)).is_zero());
  CHECK(r.realize({Rational(1), Rational(1), Rational(0)}) ==
        FieldCombination(3, RotationField(1, 2), Rational(-1)) + FieldCombination(3, RotationField(1, 3), Rational(-1)));
}

TEST_CASE("realization is an antihomomorphism") {
  const auto suite = identity_test_suite(3, 2, 10);
  CHECK(check_antihomomorphism(so_algebra(3), so_realization(3), suite));
  CHECK(check_antihomomorphism(so_algebra(4), so_realization(4), identity_test_suite(4, 2, 10)));
  CHECK(check_antihomomorphism(su2_algebra(), su2_realization(), identity_test_suite(4, 2, 10)));

  // A wrong sign breaks it.
  const auto v = su2_fields();
  const Realization flipped(3, 4, {v[0] * make_rational(1, 2), v[1] * make_rational(1, 2), v[2] * make_rational(-1, 2)});
  CHECK_FALSE(check_antihomomorphism(su2_algebra(), flipped, identity_test_suite(4, 1, 2)).holds);
}

TEST_CASE("projected Casimir examples") {
  const auto g3 = so_algebra(3);
  const ProjectedCasimir omega3(casimir_element(default_form(g3)), so_realization(3));
  const auto suite = identity_test_suite(3, 3, 10);
  for (const auto& f : suite) {
    SphereRationalFunction squares(3);
    for (const auto& x : rotation_fields(3)) squares += apply_rotation_field(x, apply_rotation_field(x, f));
    CHECK(omega3.apply(f) == squares);
  }
  CHECK(omega3.apply(SphereRationalFunction::constant(3, Rational(1))).is_zero());

  const auto g4 = so_algebra(4);
  const ProjectedCasimir omega4(casimir_element(default_form(g4)), so_realization(4));
  CHECK(omega4.apply(fx(4, 1)) == fx(4, 1) * Rational(-3));
}

TEST_CASE("Omega+ equals the spherical Laplacian") {
  CHECK(verify_lap_eq_casimir(3, identity_test_suite(3)));
  CHECK(verify_lap_eq_casimir(4, identity_test_suite(4, 3, 10)));
}

TEST_CASE("scaled and Killing forms give proportional operators") {
  const auto g = so_algebra(4);
  const auto suite = identity_test_suite(4, 2, 6);
  const ProjectedCasimir scaled(casimir_element(default_form(g).scaled(Rational(3))), so_realization(4));
  const auto factor = casimir_laplacian_factor(scaled, suite);
  REQUIRE(factor);
  CHECK(*factor == make_rational(1, 3));
  CHECK_FALSE(check_casimir_equals_laplacian(scaled, suite).holds);

  // -Killing = 2(m-2) * default on so(m).
  const ProjectedCasimir killing(casimir_element(killing_form(g).scaled(Rational(-1))), so_realization(4));
  const auto kf = casimir_laplacian_factor(killing, suite);
  REQUIRE(kf);
  CHECK(*kf == make_rational(1, 4));
}

TEST_CASE("Omega+ is basis independent") {
  const auto g = so_algebra(4);
  const auto b = default_form(g);
  const ProjectedCasimir standard(casimir_element(b), so_realization(4));
  const ProjectedCasimir other(casimir_element(b, random_basis(g.dim(), 17)), so_realization(4));
  CHECK(check_same_operator(standard, other, identity_test_suite(4, 2, 8)));
}

TEST_CASE("Omega+ commutes with realized fields") {
  const SphereRationalFunction stereo(sx(3, 1), SpherePolynomial::constant(3, Rational(1)) - sx(3, 3));
  const auto g = so_algebra(3);
  const ProjectedCasimir omega(casimir_element(default_form(g)), so_realization(3));
  const auto e13 = realize_so_field(3, 1, 3);
  CHECK(e13.apply(omega.apply(stereo)) == omega.apply(e13.apply(stereo)));

  const auto r3 = verify_commutation_theorem(3, identity_test_suite(3, 3, 10));
  CHECK(r3.m_part);
  CHECK(r3.all_of_g);
  const auto r4 = verify_commutation_theorem(4, identity_test_suite(4, 2, 6));
  CHECK(r4.m_part);
  CHECK(r4.all_of_g);
}

TEST_CASE("su(2) group case on S^3") {
  CHECK(su2_sum_of_squares(fx(4, 1)) == fx(4, 1) * Rational(-3));
  CHECK(su2_sum_of_squares(fx(4, 1) * fx(4, 3)) == fx(4, 1) * fx(4, 3) * Rational(-8));
  CHECK(su2_sum_of_squares(SphereRationalFunction::constant(4, Rational(1))).is_zero());
  CHECK(verify_su2_group_case(identity_test_suite(4, 3, 10)));

  const ProjectedCasimir omega(casimir_element(su2_sphere_form()), su2_realization());
  CHECK(check_casimir_equals_laplacian(omega, identity_test_suite(4, 2, 6)));
  const ProjectedCasimir unit(casimir_element(default_form(su2_algebra())), su2_realization());
  const auto factor = casimir_laplacian_factor(unit, identity_test_suite(4, 2, 6));
  REQUIRE(factor);
  CHECK(*factor == make_rational(1, 4));
}
