#pragma once

// Exactly representable harmonic functions: stereographic pullbacks of planar
// harmonic polynomials on S^2, and Euclidean harmonic polynomials.

#include "sphcert/polynomial.hpp"
#include "sphcert/rational_function.hpp"
#include "sphcert/sphere_points.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sphcert {

/// The open geodesic ball B(radius) about the antipode of `pole`. The pole
/// itself is where the family's denominators may vanish.
struct CapDomain {
  int ambient_dim = 3;
  SpherePoint pole;
  double radius = 2.5;

  CapDomain(int ambient_dim_, SpherePoint pole_, double radius_);
  /// Pole (0, 0, 1), cap about the south pole.
  static CapDomain north_pole_excluded(double radius = 2.5);

  /// Antipode of the pole, as doubles.
  std::vector<double> center() const;
  /// Geodesic distance from the cap center.
  double distance_from_center(const std::vector<double>& point) const;
  bool contains(const std::vector<double>& point) const { return distance_from_center(point) < radius; }
};

enum class Part { Re, Im };

class HarmonicityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HarmonicFunction {
 public:
  /// Verifies laplace_sphere(value) == 0; throws HarmonicityError otherwise.
  HarmonicFunction(SphereRationalFunction value, CapDomain domain, std::string provenance);

  const SphereRationalFunction& value() const { return value_; }
  const CapDomain& domain() const { return domain_; }
  /// Descriptor such as "stereo:k=3:re" or "custom".
  const std::string& provenance() const { return provenance_; }

 private:
  SphereRationalFunction value_;
  CapDomain domain_;
  std::string provenance_;
};

/// Re or Im of ((x1 + i x2) / (1 - x3))^k on S^2.
HarmonicFunction stereographic_harmonic(int k, Part part, double cap_radius = 2.5);

struct PlanarTerm {
  int k;
  Part part;
  Rational coeff;
};

HarmonicFunction planar_combination(const std::vector<PlanarTerm>& terms, double cap_radius = 2.5);

/// Parses "stereo:k=<k>:re|im". Throws std::invalid_argument.
HarmonicFunction parse_family(std::string_view descriptor, double cap_radius = 2.5);
std::string family_descriptor(int k, Part part);

/// Symbolic check that every denominator factor vanishes on S^2 only at the
/// pole (0, 0, 1): each base q satisfies q * (x3 + 1) = +-(x1^2 + x2^2).
bool denominator_vanishes_only_at_pole(const HarmonicFunction& h);

/// sum_i coeffs[i] * generate_harmonic_basis(m, d)[i]; harmonicity re-verified.
Polynomial euclidean_harmonic(int m, int d, const std::vector<Rational>& coeffs);

}  // namespace sphcert
