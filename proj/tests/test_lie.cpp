#include "doctest.h"

#include "sphcert/homogeneous.hpp"
#include "sphcert/lie_algebra.hpp"

using namespace sphcert;

namespace {

LieVector so_vec(int m, int i, int j, long c = 1) {
  LieVector v(static_cast<std::size_t>(m * (m - 1) / 2));
  v[so_index(m, i, j)] = c;
  return v;
}

}  // namespace

TEST_CASE("so(m) structure constants") {
  const auto g = so_algebra(3);
  CHECK(g.dim() == 3);
  CHECK(g.bracket(so_vec(3, 1, 2), so_vec(3, 1, 3)) == so_vec(3, 2, 3, -1));
  CHECK(g.bracket(so_vec(3, 1, 2), so_vec(3, 1, 2)) == g.zero());
  CHECK(so_algebra(4).dim() == 6);
  CHECK_THROWS_AS(g.bracket(so_vec(3, 1, 2), so_vec(4, 1, 2)), std::invalid_argument);
}

TEST_CASE("bracket is bilinear and antisymmetric; Jacobi holds") {
  for (int m = 2; m <= 6; ++m) {
    const auto g = so_algebra(m);
    CHECK(check_antisymmetry(g));
    CHECK(check_jacobi(g));
  }
  CHECK(check_jacobi(su2_algebra()));
  CHECK(check_antisymmetry(su2_algebra()));

  const auto g = so_algebra(4);
  const auto u = random_basis(6, 1), v = random_basis(6, 2);
  const LieVector a = u[0], b = v[1], c = u[2];
  LieVector ab = a;
  for (std::size_t i = 0; i < 6; ++i) ab[i] += b[i] * 3;
  LieVector lhs = g.bracket(ab, c), rhs = g.bracket(a, c), rhs2 = g.bracket(b, c);
  for (std::size_t i = 0; i < 6; ++i) rhs[i] += rhs2[i] * 3;
  CHECK(lhs == rhs);
}

TEST_CASE("a broken algebra fails Jacobi with a witness") {
  // [a, b] = a, [a, c] = b, [b, c] = 0: Jacobi on (a, b, c) gives -b.
  std::vector<std::vector<LieVector>> c(3, std::vector<LieVector>(3, LieVector(3)));
  c[0][1] = {1, 0, 0};
  c[1][0] = {-1, 0, 0};
  c[0][2] = {0, 1, 0};
  c[2][0] = {0, -1, 0};
  const LieAlgebra bad("bad", {"a", "b", "c"}, c);
  const auto v = check_jacobi(bad);
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("trace and Killing forms") {
  const auto g = so_algebra(3);
  const auto b = trace_form(g, make_rational(-1, 2));
  CHECK(b.gram() == Matrix::identity(3));
  CHECK(killing_form(g).gram()(0, 0) == -2);
  for (int m = 3; m <= 6; ++m) {
    const auto h = so_algebra(m);
    CHECK(killing_form(h).gram() == trace_form(h, Rational(m - 2)).gram());
    CHECK(killing_form(h).gram().is_symmetric());
  }
  CHECK(killing_form(su2_algebra()).gram() == Matrix::identity(3) * Rational(-2));
  CHECK_THROWS_AS(trace_form(su2_algebra(), Rational(1)), std::invalid_argument);
}

TEST_CASE("ad-invariance") {
  for (int m = 3; m <= 5; ++m) {
    const auto g = so_algebra(m);
    CHECK(check_ad_invariance(g, trace_form(g, Rational(-1))));
    CHECK(check_ad_invariance(g, killing_form(g)));
  }
  CHECK(check_ad_invariance(su2_algebra(), default_form(su2_algebra())));
  const auto ab = abelian_algebra(3);
  Matrix any(3, 3);
  any(0, 0) = 5;
  any(0, 2) = any(2, 0) = 1;
  CHECK(check_ad_invariance(ab, BilinearForm(any)));

  const auto g = so_algebra(3);
  const auto bad = check_ad_invariance(g, perturbed_form(g));
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness.find("B([Z,X],Y)") != std::string::npos);
  CHECK(check_positive_definite(perturbed_form(g)));
}

TEST_CASE("positive definiteness by principal minors") {
  for (int m = 3; m <= 5; ++m) CHECK(check_positive_definite(default_form(so_algebra(m))));
  CHECK(check_positive_definite(default_form(su2_algebra())));
  CHECK_FALSE(check_positive_definite(killing_form(so_algebra(3))));
}

TEST_CASE("orthogonal decompositions") {
  const auto g4 = so_algebra(4);
  const auto dec = orthogonal_decomposition(g4, so_stabilizer_basis(4), default_form(g4));
  REQUIRE(dec.m_basis.size() == 3);
  const std::vector<LieVector> expected_m{so_vec(4, 1, 4), so_vec(4, 2, 4), so_vec(4, 3, 4)};
  for (const auto& v : dec.m_basis) CHECK(in_span(expected_m, v));
  CHECK(check_reductive(g4, dec, default_form(g4)));

  const auto g3 = so_algebra(3);
  const auto group = orthogonal_decomposition(g3, {}, default_form(g3));
  CHECK(group.m_basis.size() == 3);

  const auto dec3 = orthogonal_decomposition(g3, so_stabilizer_basis(3), default_form(g3));
  const std::vector<LieVector> expected3{so_vec(3, 1, 3), so_vec(3, 2, 3)};
  REQUIRE(dec3.m_basis.size() == 2);
  for (const auto& v : dec3.m_basis) CHECK(in_span(expected3, v));

  // span{E12, E13} is not closed: [E12, E13] = -E23.
  CHECK_THROWS_AS(orthogonal_decomposition(g3, {so_vec(3, 1, 2), so_vec(3, 1, 3)}, default_form(g3)),
                  NotSubalgebraError);
  CHECK_THROWS_AS(orthogonal_decomposition(g3, {}, killing_form(g3)), std::invalid_argument);
}

TEST_CASE("natural reductivity") {
  for (int m = 3; m <= 5; ++m) {
    const auto g = so_algebra(m);
    const auto b = default_form(g);
    CHECK(check_natural_reductivity(g, orthogonal_decomposition(g, so_stabilizer_basis(m), b), b));
  }
  const auto g3 = so_algebra(3);
  CHECK(check_natural_reductivity(g3, orthogonal_decomposition(g3, {}, default_form(g3)), default_form(g3)));

  const auto bad_form = perturbed_form(g3);
  const auto dec = orthogonal_decomposition(g3, {}, bad_form);
  const auto v = check_natural_reductivity(g3, dec, bad_form);
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("Casimir elements") {
  const auto g = so_algebra(3);
  const auto b = default_form(g);
  const auto omega = casimir_element(b);
  for (std::size_t i = 0; i < 3; ++i) CHECK(omega.pairs[i].first == omega.pairs[i].second);
  CHECK(check_gram_consistency(omega, b));

  const auto scaled = casimir_element(b.scaled(Rational(3)));
  for (std::size_t i = 0; i < 3; ++i) {
    LieVector expected = omega.pairs[i].first;
    for (auto& x : expected) x /= 3;
    CHECK(scaled.pairs[i].first == expected);
  }

  const auto other = casimir_element(b, random_basis(3, 5));
  CHECK(check_gram_consistency(other, b));
  CHECK_THROWS_AS(casimir_element(BilinearForm(Matrix(3, 3))), std::domain_error);
}
