#include "sphcert/harmonic_families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sphcert/sphere_ops.hpp"

namespace sphcert {

CapDomain::CapDomain(int ambient_dim_, SpherePoint pole_, double radius_)
    : ambient_dim(ambient_dim_), pole(std::move(pole_)), radius(radius_) {
  if (!(radius > 0.0 && radius < std::numbers::pi)) throw std::invalid_argument("cap radius must lie in (0, pi)");
  if (static_cast<int>(pole.size()) != ambient_dim) throw std::invalid_argument("pole has wrong dimension");
  require_on_sphere(pole);
}

CapDomain CapDomain::north_pole_excluded(double radius) {
  return CapDomain(3, SpherePoint{Rational(0), Rational(0), Rational(1)}, radius);
}

std::vector<double> CapDomain::center() const {
  std::vector<double> c;
  for (const auto& x : pole) c.push_back(-x.get_d());
  return c;
}

double CapDomain::distance_from_center(const std::vector<double>& point) const {
  const auto c = center();
  double d = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) d += c[i] * point[i];
  return std::acos(std::clamp(d, -1.0, 1.0));
}

HarmonicFunction::HarmonicFunction(SphereRationalFunction value, CapDomain domain, std::string provenance)
    : value_(std::move(value)), domain_(std::move(domain)), provenance_(std::move(provenance)) {
  if (value_.ambient_dim() != domain_.ambient_dim)
    throw std::invalid_argument("harmonic function and cap live in different dimensions");
  if (!laplace_sphere(value_).is_zero())
    throw HarmonicityError("laplace_sphere(h) != 0 for " + provenance_ + ": h = " + to_string(value_));
}

namespace {

SpherePolynomial planar_power_part(int k, Part part) {
  // (x1 + i x2)^k = sum_j C(k, j) x1^(k-j) (i x2)^j
  Polynomial p(3);
  Integer binom(1);
  for (int j = 0; j <= k; ++j) {
    if (j > 0) {
      binom *= (k - j + 1);
      binom /= j;
    }
    const bool imaginary = j % 2 == 1;
    if (imaginary != (part == Part::Im)) continue;
    const int sign = (j % 4 == 0 || j % 4 == 1) ? 1 : -1;
    Monomial mon;
    mon.set_exponent(1, k - j);
    mon.set_exponent(2, j);
    p.add_term(mon, Rational(binom) * sign);
  }
  return SpherePolynomial(p);
}

SpherePolynomial one_minus_x3() {
  return SpherePolynomial::constant(3, Rational(1)) - SpherePolynomial::coordinate(3, 3);
}

SphereRationalFunction stereographic_value(int k, Part part) {
  if (k < 0) throw std::invalid_argument("stereographic family needs k >= 0");
  return SphereRationalFunction(planar_power_part(k, part), one_minus_x3(), static_cast<unsigned>(k));
}

}  // namespace

std::string family_descriptor(int k, Part part) {
  return "stereo:k=" + std::to_string(k) + (part == Part::Re ? ":re" : ":im");
}

HarmonicFunction stereographic_harmonic(int k, Part part, double cap_radius) {
  return HarmonicFunction(stereographic_value(k, part), CapDomain::north_pole_excluded(cap_radius),
                          family_descriptor(k, part));
}

HarmonicFunction planar_combination(const std::vector<PlanarTerm>& terms, double cap_radius) {
  SphereRationalFunction acc(3);
  std::string name = "combo:";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    acc += stereographic_value(t.k, t.part) * t.coeff;
    if (i > 0) name += ',';
    name += to_string(t.coeff) + "*" + family_descriptor(t.k, t.part);
  }
  return HarmonicFunction(std::move(acc), CapDomain::north_pole_excluded(cap_radius), name);
}

HarmonicFunction parse_family(std::string_view descriptor, double cap_radius) {
  const std::string text(descriptor);
  constexpr std::string_view kPrefix = "stereo:k=";
  if (descriptor.substr(0, kPrefix.size()) != kPrefix)
    throw std::invalid_argument("unknown family: " + text);
  const auto rest = descriptor.substr(kPrefix.size());
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon > 3)
    throw std::invalid_argument("unknown family: " + text);
  int k = 0;
  for (char ch : rest.substr(0, colon)) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("unknown family: " + text);
    k = k * 10 + (ch - '0');
  }
  const auto part = rest.substr(colon + 1);
  if (part == "re") return stereographic_harmonic(k, Part::Re, cap_radius);
  if (part == "im") return stereographic_harmonic(k, Part::Im, cap_radius);
  throw std::invalid_argument("unknown family: " + text);
}

bool denominator_vanishes_only_at_pole(const HarmonicFunction& h) {
  if (h.value().ambient_dim() != 3) return false;
  const SpherePoint& pole = h.domain().pole;
  if (pole != SpherePoint{Rational(0), Rational(0), Rational(1)}) return false;
  const SpherePolynomial x1 = SpherePolynomial::coordinate(3, 1);
  const SpherePolynomial x2 = SpherePolynomial::coordinate(3, 2);
  const SpherePolynomial circle = x1 * x1 + x2 * x2;
  const SpherePolynomial cofactor = SpherePolynomial::coordinate(3, 3) + SpherePolynomial::constant(3, Rational(1));
  for (const auto& f : h.value().factors()) {
    // q (x3 + 1) = +-(x1^2 + x2^2) forces x1 = x2 = 0 where q = 0, and then
    // x3 = 1 because q(0, 0, -1) != 0.
    const SpherePolynomial prod = f.base * cofactor;
    if (prod != circle && prod != -circle) return false;
    const SpherePoint south{Rational(0), Rational(0), Rational(-1)};
    if (f.base.evaluate(south) == 0) return false;
  }
  return true;
}

Polynomial euclidean_harmonic(int m, int d, const std::vector<Rational>& coeffs) {
  const auto basis = generate_harmonic_basis(m, d);
  if (coeffs.size() != basis.size())
    throw std::invalid_argument("expected " + std::to_string(basis.size()) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  Polynomial p(m);
  for (std::size_t i = 0; i < basis.size(); ++i) p += basis[i] * coeffs[i];
  if (!laplace_euclid(p).is_zero()) throw HarmonicityError("euclidean_harmonic produced a non-harmonic polynomial");
  return p;
}

}  // namespace sphcert
