#pragma once

// Exact rational points on spheres via inverse stereographic projection from
// the north pole: w in Q^(m-1) maps to (2w, |w|^2 - 1) / (|w|^2 + 1).
// w = 0 is the south pole (0, ..., 0, -1); |w| -> infinity approaches the
// north pole, and the geodesic distance from the south pole is 2 atan |w|.

#include "sphcert/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace sphcert {

using SpherePoint = std::vector<Rational>;

SpherePoint stereographic_point(const std::vector<Rational>& w);

/// Deterministic generator of exact sphere points. Plane parameters have
/// numerators in [-max_num, max_num] and denominators in [1, max_den]. When
/// max_distance is given, only points whose geodesic distance from the south
/// pole is strictly below it are produced.
class SpherePointSampler {
 public:
  SpherePointSampler(int ambient_dim, std::uint64_t seed, int max_num = 12, int max_den = 7);

  SpherePoint next();
  SpherePoint next_in_cap(double max_distance);

 private:
  Rational random_rational();

  int ambient_dim_;
  int max_num_;
  int max_den_;
  std::mt19937_64 rng_;
};

}  // namespace sphcert
