#pragma once

// Rotation vector fields X_ij = x_i d_j - x_j d_i, the spherical Laplacian as
// the sum of their squares, and the Euclidean operators used to cross-check it.

#include "sphcert/polynomial.hpp"
#include "sphcert/rational_function.hpp"
#include "sphcert/sphere_polynomial.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sphcert {

/// X_ij with 1 <= i < j <= m. X_ji is expressed as -X_ij by the caller.
struct RotationField {
  int i;
  int j;

  RotationField(int i_, int j_);
  bool operator==(const RotationField&) const = default;
};

std::string to_string(const RotationField& x);

/// All X_ij, 1 <= i < j <= m, in lexicographic order of (i, j).
std::vector<RotationField> rotation_fields(int m);

Polynomial apply_rotation_field(const RotationField& x, const Polynomial& p);
SpherePolynomial apply_rotation_field(const RotationField& x, const SpherePolynomial& p);
SphereRationalFunction apply_rotation_field(const RotationField& x, const SphereRationalFunction& f);

/// A rational combination sum c_ij X_ij: a general tangential derivation of the
/// sphere ring, e.g. the image of a Lie algebra element.
class FieldCombination {
 public:
  explicit FieldCombination(int ambient_dim) : ambient_dim_(ambient_dim) {}
  FieldCombination(int ambient_dim, const RotationField& x, const Rational& c = Rational(1));

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<std::pair<RotationField, Rational>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FieldCombination& add(const RotationField& x, const Rational& c);
  FieldCombination& operator+=(const FieldCombination& other);
  FieldCombination operator*(const Rational& c) const;
  FieldCombination operator-() const { return *this * Rational(-1); }
  friend FieldCombination operator+(FieldCombination a, const FieldCombination& b) { return a += b; }
  friend FieldCombination operator-(FieldCombination a, const FieldCombination& b) { return a += -b; }

  bool operator==(const FieldCombination& other) const = default;

  SpherePolynomial apply(const SpherePolynomial& p) const;
  SphereRationalFunction apply(const SphereRationalFunction& f) const;

 private:
  int ambient_dim_;
  std::vector<std::pair<RotationField, Rational>> terms_;  // sorted by (i, j), nonzero
};

std::string to_string(const FieldCombination& v);

/// Composition of rotation fields; word[0] is applied first.
using OperatorWord = std::vector<RotationField>;

SphereRationalFunction apply_word(const OperatorWord& word, const SphereRationalFunction& f);

/// All words of the given length over rotation_fields(m), in lexicographic order.
std::vector<OperatorWord> enumerate_words(int m, int length);

/// Spherical Laplacian sum_{i<j} X_ij^2.
SphereRationalFunction laplace_sphere(const SphereRationalFunction& f);
SpherePolynomial laplace_sphere(const SpherePolynomial& p);
/// sum_{i<j} X_ij^2 on raw polynomials (no sphere reduction).
Polynomial rotation_sum_of_squares(const Polynomial& p);

Polynomial laplace_euclid(const Polynomial& p);
/// E = sum x_i d_i.
Polynomial euler_operator(const Polynomial& p);

/// sum_{i<j} X_ij^2 p == |x|^2 lap_E p - E(E p) - (m - 2) E p, exactly.
bool check_sum_of_squares_identity(const Polynomial& p);

/// Homogeneous monomials of degree d in m variables, leading-first.
std::vector<Monomial> homogeneous_monomials(int m, int d);

/// Exact basis of harmonic homogeneous polynomials of degree d.
std::vector<Polynomial> generate_harmonic_basis(int m, int d);

/// C(m+d-1, d) - C(m+d-3, d-2).
long harmonic_space_dimension(int m, int d);

/// X(lap_S f) == lap_S(X f).
bool check_commutation(const RotationField& x, const SphereRationalFunction& f);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// p must be harmonic and homogeneous of degree l (PreconditionError otherwise);
/// returns whether lap_S p = -l(l+m-2) p on the sphere.
bool check_spherical_eigenvalue(const Polynomial& p);

}  // namespace sphcert
