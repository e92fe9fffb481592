#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "sphcert/growth.hpp"
#include "sphcert/harmonic_families.hpp"
#include "sphcert/sphere_ops.hpp"

using namespace sphcert;

namespace {

SpherePolynomial sx(int v) { return SpherePolynomial::coordinate(3, v); }
SpherePolynomial sc(long v) { return SpherePolynomial::constant(3, make_rational(v)); }

const SpherePoint kSouth{Rational(0), Rational(0), Rational(-1)};
const std::vector<double> kSouthD{0.0, 0.0, -1.0};

// Rotation from the quaternion (1, 2, 3, 4), all entries over 30.
std::vector<std::vector<Rational>> sample_rotation() {
  const long e[3][3] = {{-20, 4, 22}, {20, -10, 20}, {10, 28, 4}};
  std::vector<std::vector<Rational>> r(3, std::vector<Rational>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = make_rational(e[i][j], 30);
  return r;
}

template <class V>
V rotate_point(const std::vector<std::vector<Rational>>& a, const V& p) {
  V out(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += a[i][j] * p[j];
  return out;
}

}  // namespace

TEST_CASE("circle points lie at the right geodesic distance") {
  const std::vector<std::vector<double>> centers = {{0, 0, -1}, {1, 0, 0}, {0.6, 0, 0.8}, {2. / 3, -1. / 3, 2. / 3}};
  for (const auto& c : centers)
    for (double r : {0.1, 0.7, 1.5})
      for (double phi : {0.0, 1.0, 4.0}) {
        const auto p = geodesic_circle_point(c, r, phi);
        double norm = 0.0, dot = 0.0;
        for (int i = 0; i < 3; ++i) {
          norm += p[i] * p[i];
          dot += p[i] * c[i];
        }
        CHECK(std::abs(norm - 1.0) < 1e-14);
        CHECK(std::abs(std::acos(std::clamp(dot, -1.0, 1.0)) - r) < 1e-12);
      }
}

TEST_CASE("spherical mean examples and errors") {
  const auto cap = CapDomain::north_pole_excluded();
  const auto one = SphereRationalFunction::constant(3, Rational(1));
  for (double r : {0.0, 0.3, 1.2, 2.0}) CHECK(spherical_mean(one, cap, kSouthD, r, 16) == doctest::Approx(1.0).epsilon(1e-15));

  const auto h = stereographic_harmonic(1, Part::Re).value();
  const auto g = h * h;
  CHECK(spherical_mean(g, cap, kSouthD, 1e-6, 64) < 1e-11);
  // |w| = tan(r/2) on the circle and h = Re w, so the mean of h^2 is tan^2(r/2)/2.
  for (double r : {0.2, 0.4, 0.8}) {
    const double m256 = spherical_mean(g, cap, kSouthD, r, 256);
    const double m512 = spherical_mean(g, cap, kSouthD, r, 512);
    CHECK(std::abs(m256 - m512) <= 1e-12);
    CHECK(std::abs(m256 - std::pow(std::tan(r / 2), 2) / 2) <= 1e-14);
  }

  CHECK_THROWS_AS(spherical_mean(g, cap, kSouthD, 0.5, 7), GrowthError);
  CHECK_THROWS_AS(spherical_mean(g, cap, kSouthD, 2.5, 64), GrowthError);
  CHECK_THROWS_AS(spherical_mean(g, cap, {1.0, 0.0, 0.0}, 1.0, 64), GrowthError);
}

TEST_CASE("quadrature converges for the shipped families") {
  const auto cap = CapDomain::north_pole_excluded();
  for (int k = 0; k <= 6; ++k)
    for (Part part : {Part::Re, Part::Im}) {
      const auto g = stereographic_harmonic(k, part).value();
      const auto sq = g * g;
      for (double r : {0.3, 0.9, 1.2}) {
        const double a = spherical_mean(sq, cap, kSouthD, r, 256);
        const double b = spherical_mean(sq, cap, kSouthD, r, 512);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
      }
    }
}

TEST_CASE("growth of the shipped families is monotone with the expected curvature") {
  const auto cap = CapDomain::north_pole_excluded();
  for (int k = 0; k <= 6; ++k)
    for (Part part : {Part::Re, Part::Im}) {
      const auto h = stereographic_harmonic(k, part);
      const auto report = analyze_growth(h.value(), cap, kSouth, h.provenance());
      CAPTURE(h.provenance());
      CHECK(report.radii.size() == 40);
      CHECK(report.radii.back() == doctest::Approx(1.2));
      CHECK(report.monotone);
      CHECK(report.second_derivative.ok);
      CHECK(report.second_derivative.error <= 1e-6);
    }
}

TEST_CASE("second derivative matches the symbolic Laplacian away from the south pole") {
  const auto cap = CapDomain::north_pole_excluded();
  const SpherePoint center{make_rational(2, 3), make_rational(-1, 3), make_rational(-2, 3)};
  const SphereRationalFunction sum(sx(1) + sx(2), sc(1) - sx(3));
  for (const auto& f : {stereographic_harmonic(1, Part::Re).value(), sum, stereographic_harmonic(3, Part::Im).value()}) {
    GrowthOptions opts;
    opts.rmax = 0.6;
    const auto report = analyze_growth(f, cap, center, "custom", opts);
    CHECK(report.second_derivative.ok);
    CHECK(report.second_derivative.reference > 0.0);
  }
}

TEST_CASE("constant function gives a flat curve with zero curvature") {
  const auto h = stereographic_harmonic(0, Part::Re);
  const auto report = analyze_growth(h.value(), h.domain(), kSouth, h.provenance());
  for (double m : report.means) CHECK(m == 1.0);
  CHECK(report.monotone);
  CHECK(report.second_derivative.reference == 0.0);
  CHECK(report.second_derivative.estimate == 0.0);
  CHECK(report.second_derivative.ok);
}

TEST_CASE("non-subharmonic control is flagged") {
  const auto f = nonsubharmonic_control();
  CHECK(laplace_sphere(f * f).evaluate(control_center()) < 0);
  const auto report = analyze_growth(f, control_domain(), control_center(), "control:nonsubharmonic");
  CHECK_FALSE(report.monotone);
  CHECK(report.max_decrease > 1e-3);
  // The curvature oracle is independent of sign and still agrees.
  CHECK(report.second_derivative.ok);
  CHECK(report.second_derivative.reference < 0.0);
}

TEST_CASE("means are invariant under a rotation of function and center") {
  const auto h = stereographic_harmonic(2, Part::Re);
  const auto rot = sample_rotation();
  const auto moved = rotate(h.value(), rot);
  CHECK(laplace_sphere(moved).is_zero());
  const CapDomain cap = CapDomain::north_pole_excluded();
  const CapDomain moved_cap(3, rotate_point(rot, SpherePoint{Rational(0), Rational(0), Rational(1)}), cap.radius);
  const auto moved_center = rotate_point(rot, kSouth);
  std::vector<double> c;
  for (const auto& x : moved_center) c.push_back(x.get_d());
  const auto sq = h.value() * h.value();
  const auto moved_sq = moved * moved;
  for (double r : {0.25, 0.8, 1.2}) {
    const double a = spherical_mean(sq, cap, kSouthD, r, 256);
    const double b = spherical_mean(moved_sq, moved_cap, c, r, 256);
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
  }
  std::vector<std::vector<Rational>> bad = rot;
  bad[0][0] += 1;
  CHECK_THROWS_AS(rotate(h.value(), bad), std::invalid_argument);
}

TEST_CASE("analyze_growth validates its configuration") {
  const auto h = stereographic_harmonic(1, Part::Re);
  GrowthOptions opts;
  opts.grid = 1;
  CHECK_THROWS_AS(analyze_growth(h.value(), h.domain(), kSouth, "x", opts), GrowthError);
  opts = {};
  opts.rmax = 2.6;
  CHECK_THROWS_AS(analyze_growth(h.value(), h.domain(), kSouth, "x", opts), GrowthError);
  opts = {};
  opts.quad = 4;
  CHECK_THROWS_AS(analyze_growth(h.value(), h.domain(), kSouth, "x", opts), GrowthError);
}

TEST_CASE("csv layout") {
  const auto h = stereographic_harmonic(0, Part::Re);
  GrowthOptions opts;
  opts.grid = 3;
  opts.rmax = 0.3;
  const auto csv = growth_csv(analyze_growth(h.value(), h.domain(), kSouth, "stereo:k=0:re", opts));
  CHECK(csv == "r,mean\n0.099999999999999992,1\n0.19999999999999998,1\n0.29999999999999999,1\n");
}
