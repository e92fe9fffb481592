#include "sphcert/growth.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "sphcert/sphere_ops.hpp"

namespace sphcert {

namespace {

std::vector<double> to_doubles(const SpherePoint& p) {
  std::vector<double> out;
  for (const auto& x : p) out.push_back(x.get_d());
  return out;
}

std::vector<double> cross(const std::vector<double>& a, const std::vector<double>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

std::vector<double> geodesic_circle_point(const std::vector<double>& center, double r, double phi) {
  if (center.size() != 3) throw GrowthError("circle means are implemented on S^2 only");
  // Tangent frame: project the coordinate axis least aligned with the center.
  std::size_t axis = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(center[i]) < std::abs(center[axis])) axis = i;
  std::vector<double> u(3, 0.0);
  u[axis] = 1.0;
  const double proj = center[axis];
  double norm = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    u[i] -= proj * center[i];
    norm += u[i] * u[i];
  }
  norm = std::sqrt(norm);
  for (auto& x : u) x /= norm;
  const auto v = cross(center, u);
  const double c = std::cos(r), s = std::sin(r), cp = std::cos(phi), sp = std::sin(phi);
  std::vector<double> p(3);
  for (std::size_t i = 0; i < 3; ++i) p[i] = c * center[i] + s * (cp * u[i] + sp * v[i]);
  return p;
}

double spherical_mean(const SphereRationalFunction& g, const CapDomain& cap, const std::vector<double>& center,
                      double r, int n) {
  if (n < 8) throw GrowthError("quadrature order must be at least 8");
  if (g.ambient_dim() != 3 || cap.ambient_dim != 3) throw GrowthError("circle means are implemented on S^2 only");
  if (!(r >= 0.0)) throw GrowthError("radius must be nonnegative");
  if (cap.distance_from_center(center) + r >= cap.radius)
    throw GrowthError("circle of radius " + std::to_string(r) + " exits the cap of radius " +
                      std::to_string(cap.radius));
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double phi = 2.0 * std::numbers::pi * j / n;
    sum += g.evaluate(geodesic_circle_point(center, r, phi));
  }
  return sum / n;
}

GrowthReport analyze_growth(const SphereRationalFunction& h, const CapDomain& cap, const SpherePoint& center,
                            const std::string& family, const GrowthOptions& options) {
  if (options.grid < 3) throw GrowthError("radius grid needs at least 3 points");
  if (!(options.rmax > 0.0)) throw GrowthError("rmax must be positive");
  if (options.quad < 8) throw GrowthError("quadrature order must be at least 8");
  require_on_sphere(center);
  const auto c = to_doubles(center);
  if (cap.distance_from_center(c) + options.rmax >= cap.radius)
    throw GrowthError("circle of radius " + std::to_string(options.rmax) + " about the center exits the cap");

  GrowthReport report;
  report.family = family;
  report.center = center;
  report.cap_radius = cap.radius;
  report.quad_order = options.quad;
  const SphereRationalFunction square = h * h;
  report.mean_at_center = square.evaluate(c);
  for (int i = 1; i <= options.grid; ++i) {
    const double r = options.rmax * i / options.grid;
    report.radii.push_back(r);
    report.means.push_back(spherical_mean(square, cap, c, r, options.quad));
  }
  report.monotone = check_mean_monotonicity(report, options.monotonicity_tol);
  double prev = report.mean_at_center;
  for (double m : report.means) {
    report.max_decrease = std::max(report.max_decrease, prev - m);
    prev = m;
  }
  report.second_derivative = check_second_derivative_at_zero(h, center, report, options.second_derivative_tol);
  return report;
}

bool check_mean_monotonicity(const GrowthReport& report, double tol) {
  for (std::size_t i = 0; i + 1 < report.means.size(); ++i)
    if (report.means[i + 1] < report.means[i] - tol) return false;
  return true;
}

SecondDerivativeVerdict check_second_derivative_at_zero(const SphereRationalFunction& h, const SpherePoint& center,
                                                        const GrowthReport& report, double tol) {
  SecondDerivativeVerdict v;
  const Rational ref = laplace_sphere(h * h).evaluate(center) / 2;
  v.reference = ref.get_d();

  // q(s) = (M(r) - M(0)) / r^2 with s = r^2 is smooth in s and q(0) = M''(0)/2.
  const std::size_t n = std::min<std::size_t>(6, report.radii.size());
  std::vector<double> s(n), q(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = report.radii[i] * report.radii[i];
    q[i] = (report.means[i] - report.mean_at_center) / s[i];
  }
  // Neville's scheme evaluated at s = 0.
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = 0; i + level < n; ++i)
      q[i] = (s[i + level] * q[i] - s[i] * q[i + 1]) / (s[i + level] - s[i]);
  v.estimate = 2.0 * q[0];

  const double diff = std::abs(v.estimate - v.reference);
  v.error = v.reference == 0.0 ? diff : diff / std::abs(v.reference);
  v.ok = v.error <= tol;
  return v;
}

std::string growth_csv(const GrowthReport& report) {
  std::string out = "r,mean\n";
  char buf[64];
  for (std::size_t i = 0; i < report.radii.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", report.radii[i], report.means[i]);
    out += buf;
  }
  return out;
}

SphereRationalFunction nonsubharmonic_control() {
  const auto x3 = SpherePolynomial::coordinate(3, 3);
  return SphereRationalFunction(SpherePolynomial::constant(3, Rational(1)) - x3 * x3);
}

CapDomain control_domain(double radius) {
  return CapDomain(3, SpherePoint{Rational(-1), Rational(0), Rational(0)}, radius);
}

SpherePoint control_center() { return SpherePoint{Rational(1), Rational(0), Rational(0)}; }

}  // namespace sphcert
