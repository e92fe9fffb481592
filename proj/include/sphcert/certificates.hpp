#pragma once

// Sum-of-squares certificates for iterated Laplacians of |h|^2.
//
// For harmonic h on a spherical cap,
//   lap_S^k (h^2) = 2^k * sum_w (X_w h)^2,
// where w runs over all ordered words of length k in the rotation fields
// X_ij. Each X_w h is again harmonic because the X_ij commute with lap_S. The
// Euclidean analogue replaces X_ij by the coordinate derivatives.

#include "sphcert/harmonic_families.hpp"
#include "sphcert/polynomial.hpp"
#include "sphcert/rational_function.hpp"
#include "sphcert/sphere_ops.hpp"
#include "sphcert/sphere_points.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sphcert {

SphereRationalFunction delta_power(const SphereRationalFunction& f, int k);

/// {X_w h} for every word of length k, in enumerate_words order.
std::vector<SphereRationalFunction> sos_certificate(const HarmonicFunction& h, int k, unsigned workers = 1);

struct CertificateSample {
  SpherePoint point;
  Rational value;
  bool nonnegative;
};

struct CertificateOptions {
  int sample_count = 200;
  std::uint64_t seed = 20240611;
  unsigned workers = 1;
};

struct CertificateReport {
  std::string family;
  int ambient_dim = 3;
  int k = 0;
  std::size_t term_count = 0;  // nonzero words; 0 for constant h
  bool trivial = false;         // k == 0 or constant h
  bool equality_verified = false;
  bool terms_harmonic = false;
  std::vector<CertificateSample> samples;
  std::uint64_t seed = 0;
  double cap_radius = 0.0;
  double wall_time_ms = 0.0;

  bool all_samples_nonnegative() const;
  /// Equality, harmonic terms, and every sample >= 0.
  bool passed() const;
};

/// Checks lap_S^k(h^2) == 2^k sum_w (X_w h)^2 exactly, that every term is
/// harmonic, and the exact sign of lap_S^k(h^2) at sampled cap points.
CertificateReport verify_certificate(const HarmonicFunction& h, int k, const CertificateOptions& options = {});

/// Throws std::domain_error at the excluded pole or outside the sphere.
CertificateSample sample_certificate_value(const SphereRationalFunction& value, const CapDomain& cap,
                                           const SpherePoint& point);

Polynomial euclid_delta_power(const Polynomial& p, int k);

struct EuclidCertificateReport {
  int ambient_dim = 0;
  int k = 0;
  std::size_t term_count = 0;
  bool equality_verified = false;
  Polynomial delta_power_value;
  std::size_t grid_points = 0;
  bool grid_nonnegative = false;

  explicit EuclidCertificateReport(int m) : ambient_dim(m), delta_power_value(m) {}
  bool passed() const { return equality_verified && grid_nonnegative; }
};

/// p must be harmonic (PreconditionError otherwise). Checks
/// lap_E^k(p^2) == 2^k sum over words in {d_1..d_m} of (d_w p)^2 and the sign
/// of lap_E^k(p^2) on the grid {-1, -1/2, 0, 1/2, 1}^m.
EuclidCertificateReport euclid_certificate(const Polynomial& p, int k);

}  // namespace sphcert
