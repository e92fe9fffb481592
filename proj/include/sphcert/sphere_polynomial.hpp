#pragma once

// Elements of the coordinate ring Q[x1..xm]/(x1^2 + ... + xm^2 - 1).
//
// The normal form eliminates x_m^2 via x_m^2 = 1 - (x1^2 + ... + x_{m-1}^2),
// so every stored term has x_m exponent at most one. Since the ideal is
// principal this representative is unique.

#include "sphcert/polynomial.hpp"

#include <span>
#include <string>

namespace sphcert {

/// Normal form of p modulo the sphere relation. Requires p.num_vars() >= 2.
Polynomial reduce_mod_sphere(const Polynomial& p);

class SpherePolynomial {
 public:
  explicit SpherePolynomial(int ambient_dim);
  /// Reduces p; the result is in normal form.
  explicit SpherePolynomial(const Polynomial& p);

  static SpherePolynomial constant(int ambient_dim, const Rational& c);
  static SpherePolynomial coordinate(int ambient_dim, int var);

  int ambient_dim() const { return rep_.num_vars(); }
  /// Normal-form representative.
  const Polynomial& representative() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  SpherePolynomial& operator+=(const SpherePolynomial& other);
  SpherePolynomial& operator-=(const SpherePolynomial& other);
  SpherePolynomial& operator*=(const Rational& c);
  friend SpherePolynomial operator+(SpherePolynomial a, const SpherePolynomial& b) { return a += b; }
  friend SpherePolynomial operator-(SpherePolynomial a, const SpherePolynomial& b) { return a -= b; }
  friend SpherePolynomial operator*(const SpherePolynomial& a, const SpherePolynomial& b);
  friend SpherePolynomial operator*(SpherePolynomial a, const Rational& c) { return a *= c; }
  friend SpherePolynomial operator*(const Rational& c, SpherePolynomial a) { return a *= c; }
  SpherePolynomial operator-() const;
  SpherePolynomial pow(unsigned e) const;

  bool operator==(const SpherePolynomial& other) const { return rep_ == other.rep_; }

  /// Exact evaluation; the point must satisfy sum x_i^2 = 1 exactly.
  Rational evaluate(std::span<const Rational> point) const;
  /// Floating-point evaluation of the representative (no sphere check).
  double evaluate(std::span<const double> point) const { return rep_.evaluate(point); }

 private:
  struct Normalized {};
  SpherePolynomial(Polynomial p, Normalized) : rep_(std::move(p)) {}

  Polynomial rep_;
};

/// Throws std::domain_error unless sum point_i^2 == 1.
void require_on_sphere(std::span<const Rational> point);

inline std::string to_string(const SpherePolynomial& p) { return to_string(p.representative()); }

}  // namespace sphcert
