#pragma once

// Circle means of |h|^2 on S^2 by the periodic trapezoid rule, with the
// monotonicity and small-radius checks that follow from lap_S |h|^2 >= 0.

#include "sphcert/harmonic_families.hpp"
#include "sphcert/rational_function.hpp"
#include "sphcert/sphere_points.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sphcert {

class GrowthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Point at geodesic distance r from `center` in direction angle phi.
std::vector<double> geodesic_circle_point(const std::vector<double>& center, double r, double phi);

/// (1/2pi) * integral over the geodesic circle of radius r about `center` of
/// g, by the n-point trapezoid rule. Throws GrowthError when n < 8 or the
/// circle leaves the cap.
double spherical_mean(const SphereRationalFunction& g, const CapDomain& cap, const std::vector<double>& center,
                      double r, int n);

struct GrowthOptions {
  double rmax = 1.2;
  int grid = 40;
  int quad = 256;
  double monotonicity_tol = 1e-10;
  double second_derivative_tol = 1e-6;
};

struct SecondDerivativeVerdict {
  double estimate = 0.0;   // extrapolated from the radius grid
  double reference = 0.0;  // lap_S(h^2)(center) / 2, evaluated exactly
  double error = 0.0;      // relative, or absolute when the reference is 0
  bool ok = false;
};

struct GrowthReport {
  std::string family;
  SpherePoint center;
  double cap_radius = 0.0;
  int quad_order = 0;
  double mean_at_center = 0.0;  // h(center)^2
  std::vector<double> radii;    // r_i = i * rmax / grid
  std::vector<double> means;    // M(r_i) for h^2
  bool monotone = false;
  double max_decrease = 0.0;
  SecondDerivativeVerdict second_derivative;
};

/// Means of h^2 on the radius grid, plus both verdicts.
GrowthReport analyze_growth(const SphereRationalFunction& h, const CapDomain& cap, const SpherePoint& center,
                            const std::string& family, const GrowthOptions& options = {});

/// M(r_{i+1}) >= M(r_i) - tol for every i.
bool check_mean_monotonicity(const GrowthReport& report, double tol = 1e-10);

/// Richardson extrapolation of (M(r) - M(0)) / r^2 in r^2 over the smallest
/// radii gives M''(0) / 2; compared with lap_S(h^2)(center) / 2.
SecondDerivativeVerdict check_second_derivative_at_zero(const SphereRationalFunction& h, const SpherePoint& center,
                                                        const GrowthReport& report, double tol = 1e-6);

/// Header "r,mean", then one row per grid radius, 17 significant digits.
std::string growth_csv(const GrowthReport& report);

/// Negative control: f = 1 - x3^2, whose square peaks along the equator, so
/// circle means of f^2 about (1, 0, 0) decrease.
SphereRationalFunction nonsubharmonic_control();
/// Cap about (1, 0, 0) excluding (-1, 0, 0), for the control.
CapDomain control_domain(double radius = 2.5);
SpherePoint control_center();

}  // namespace sphcert
