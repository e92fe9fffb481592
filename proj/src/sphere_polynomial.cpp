#include "sphcert/sphere_polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace sphcert {

Polynomial reduce_mod_sphere(const Polynomial& p) {
  const int m = p.num_vars();
  if (m < 2) throw std::invalid_argument("sphere ring needs ambient dimension >= 2");
  int max_last = 0;
  for (const auto& [mon, c] : p.terms()) max_last = std::max(max_last, mon.exponent(m));
  if (max_last <= 1) return p;

  // Bucket by exponent of x_m; rewrite x_m^e = x_m^(e-2) (1 - sum_{i<m} x_i^2)
  // from the top bucket down.
  std::vector<Polynomial> buckets(max_last + 1, Polynomial(m));
  for (const auto& [mon, c] : p.terms()) buckets[mon.exponent(m)].add_term(mon, c);
  for (int e = max_last; e >= 2; --e) {
    for (const auto& [mon, c] : buckets[e].terms()) {
      Monomial base = mon;
      base.set_exponent(m, e - 2);
      buckets[e - 2].add_term(base, c);
      for (int i = 1; i < m; ++i) {
        Monomial shifted = base;
        shifted.set_exponent(i, base.exponent(i) + 2);
        buckets[e - 2].add_term(shifted, -c);
      }
    }
  }
  buckets[0] += buckets[1];
  return std::move(buckets[0]);
}

SpherePolynomial::SpherePolynomial(int ambient_dim) : rep_(ambient_dim) {
  if (ambient_dim < 2) throw std::invalid_argument("sphere ring needs ambient dimension >= 2");
}

SpherePolynomial::SpherePolynomial(const Polynomial& p) : rep_(reduce_mod_sphere(p)) {}

SpherePolynomial SpherePolynomial::constant(int ambient_dim, const Rational& c) {
  return SpherePolynomial(Polynomial::constant(ambient_dim, c));
}

SpherePolynomial SpherePolynomial::coordinate(int ambient_dim, int var) {
  return SpherePolynomial(Polynomial::variable(ambient_dim, var));
}

SpherePolynomial& SpherePolynomial::operator+=(const SpherePolynomial& other) {
  rep_ += other.rep_;
  return *this;
}

SpherePolynomial& SpherePolynomial::operator-=(const SpherePolynomial& other) {
  rep_ -= other.rep_;
  return *this;
}

SpherePolynomial& SpherePolynomial::operator*=(const Rational& c) {
  rep_ *= c;
  return *this;
}

SpherePolynomial operator*(const SpherePolynomial& a, const SpherePolynomial& b) {
  return SpherePolynomial(reduce_mod_sphere(a.rep_ * b.rep_), SpherePolynomial::Normalized{});
}

SpherePolynomial SpherePolynomial::operator-() const {
  return SpherePolynomial(-rep_, Normalized{});
}

SpherePolynomial SpherePolynomial::pow(unsigned e) const {
  SpherePolynomial result = constant(ambient_dim(), Rational(1));
  SpherePolynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

void require_on_sphere(std::span<const Rational> point) {
  Rational norm(0);
  for (const auto& x : point) norm += x * x;
  if (norm != 1) throw std::domain_error("point is not on the unit sphere (|x|^2 = " + to_string(norm) + ")");
}

Rational SpherePolynomial::evaluate(std::span<const Rational> point) const {
  require_on_sphere(point);
  return rep_.evaluate(point);
}

}  // namespace sphcert
