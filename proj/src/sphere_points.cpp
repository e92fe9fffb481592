#include "sphcert/sphere_points.hpp"

#include <cmath>
#include <stdexcept>

namespace sphcert {

SpherePoint stereographic_point(const std::vector<Rational>& w) {
  Rational norm2(0);
  for (const auto& x : w) norm2 += x * x;
  const Rational scale = Rational(1) / (norm2 + 1);
  SpherePoint p;
  p.reserve(w.size() + 1);
  for (const auto& x : w) p.push_back(2 * x * scale);
  p.push_back((norm2 - 1) * scale);
  return p;
}

SpherePointSampler::SpherePointSampler(int ambient_dim, std::uint64_t seed, int max_num, int max_den)
    : ambient_dim_(ambient_dim), max_num_(max_num), max_den_(max_den), rng_(seed) {
  if (ambient_dim < 2) throw std::invalid_argument("sphere points need ambient dimension >= 2");
  if (max_num < 1 || max_den < 1) throw std::invalid_argument("sampler ranges must be positive");
}

Rational SpherePointSampler::random_rational() {
  // Raw engine output keeps the sequence identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(2 * max_num_ + 1);
  const long num = static_cast<long>(rng_() % span) - max_num_;
  const long den = static_cast<long>(rng_() % static_cast<std::uint64_t>(max_den_)) + 1;
  return make_rational(num, den);
}

SpherePoint SpherePointSampler::next() {
  std::vector<Rational> w(ambient_dim_ - 1);
  for (auto& x : w) x = random_rational();
  return stereographic_point(w);
}

SpherePoint SpherePointSampler::next_in_cap(double max_distance) {
  if (!(max_distance > 0.0)) throw std::invalid_argument("cap radius must be positive");
  if (max_distance >= M_PI) return next();
  const double limit = std::tan(max_distance / 2.0);
  for (;;) {
    std::vector<Rational> w(ambient_dim_ - 1);
    Rational norm2(0);
    for (auto& x : w) {
      x = random_rational();
      norm2 += x * x;
    }
    if (std::sqrt(norm2.get_d()) < limit) return stereographic_point(w);
  }
}

}  // namespace sphcert
