#pragma once

// Fractions over the sphere ring.
//
// The denominator is kept factored as a product of powers of primitive
// "base" polynomials. Derivations then raise each exponent by at most one,
// instead of squaring the whole denominator as the plain quotient rule would.
// Fractions are never reduced by a multivariate gcd; equality is decided by
// cross-multiplication over a common factored denominator, which is valid
// because the sphere ring is an integral domain for m >= 2.

#include "sphcert/sphere_polynomial.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace sphcert {

class SphereRationalFunction {
 public:
  struct Factor {
    SpherePolynomial base;  // primitive, positive leading coefficient, nonconstant
    unsigned exponent;
    std::string key;  // canonical text of base; orders the factor list
  };

  explicit SphereRationalFunction(int ambient_dim);
  SphereRationalFunction(SpherePolynomial numerator);  // NOLINT: polynomials are fractions
  /// Throws std::domain_error when the denominator is zero in the quotient ring.
  SphereRationalFunction(SpherePolynomial numerator, const SpherePolynomial& denominator);
  SphereRationalFunction(SpherePolynomial numerator, const SpherePolynomial& base, unsigned exponent);

  static SphereRationalFunction constant(int ambient_dim, const Rational& c);
  static SphereRationalFunction coordinate(int ambient_dim, int var);

  int ambient_dim() const { return num_.ambient_dim(); }
  const SpherePolynomial& numerator() const { return num_; }
  const std::vector<Factor>& factors() const { return den_; }
  /// Expanded product of the denominator factors.
  SpherePolynomial denominator() const;
  bool is_zero() const { return num_.is_zero(); }

  SphereRationalFunction& operator+=(const SphereRationalFunction& other);
  SphereRationalFunction& operator-=(const SphereRationalFunction& other);
  SphereRationalFunction& operator*=(const Rational& c);
  friend SphereRationalFunction operator+(SphereRationalFunction a, const SphereRationalFunction& b) { return a += b; }
  friend SphereRationalFunction operator-(SphereRationalFunction a, const SphereRationalFunction& b) { return a -= b; }
  friend SphereRationalFunction operator*(const SphereRationalFunction& a, const SphereRationalFunction& b);
  friend SphereRationalFunction operator*(SphereRationalFunction a, const Rational& c) { return a *= c; }
  friend SphereRationalFunction operator*(const Rational& c, SphereRationalFunction a) { return a *= c; }
  SphereRationalFunction operator-() const;

  /// Cross-multiplication equality.
  bool operator==(const SphereRationalFunction& other) const;

  /// Exact value at a point with sum x_i^2 = 1. Throws std::domain_error when
  /// the point is off the sphere or a denominator factor vanishes there.
  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// Applies a derivation D of the sphere ring, given by its action on
  /// polynomials, using the quotient rule on the factored denominator.
  SphereRationalFunction derive(
      const std::function<SpherePolynomial(const SpherePolynomial&)>& d) const;

 private:
  void add_factor(const SpherePolynomial& base, unsigned exponent);
  void check_same_ring(const SphereRationalFunction& other) const;
  /// Rewrites both operands over the factor-wise maximum denominator.
  static std::pair<SpherePolynomial, SpherePolynomial> common_numerators(
      const SphereRationalFunction& a, const SphereRationalFunction& b,
      std::vector<Factor>& common);

  SpherePolynomial num_;
  std::vector<Factor> den_;
};

/// f(A^T x) for an orthogonal matrix A (rows of `a`), i.e. f moved by the
/// rotation x -> A x. Throws std::invalid_argument unless A^T A = I.
SphereRationalFunction rotate(const SphereRationalFunction& f, const std::vector<std::vector<Rational>>& a);

/// "(num)" or "(num) / ((base)^e*...)".
std::string to_string(const SphereRationalFunction& f);

}  // namespace sphcert
