#pragma once

// Sparse multivariate polynomials over Q in a fixed number of variables.
//
// Variables are numbered x1..xm (1-based throughout the public API, matching
// the text format). Terms are kept in a map ordered by graded lexicographic
// order, leading term first, with no zero coefficients stored.

#include "sphcert/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sphcert {

inline constexpr int kMaxVariables = 8;

class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  int exponent(int var) const { return exps_[var - 1]; }
  void set_exponent(int var, int e);
  int degree() const;

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_;
};

/// Graded lexicographic order with the larger monomial first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit Polynomial(int num_vars);

  static Polynomial constant(int num_vars, const Rational& c);
  /// The coordinate function x_var.
  static Polynomial variable(int num_vars, int var);
  static Polynomial monomial(int num_vars, const Monomial& m, const Rational& c);

  int num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;

  /// Adds c * m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const {
    return num_vars_ == other.num_vars_ && terms_ == other.terms_;
  }

  Polynomial pow(unsigned e) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// Rational content: positive rational c with (1/c)*p having coprime integer coefficients.
  Rational content() const;

 private:
  void check_same_ring(const Polynomial& other) const;

  int num_vars_;
  TermMap terms_;
};

/// Formal partial derivative with respect to x_var.
Polynomial partial_derivative(const Polynomial& p, int var);

/// Substitutes x_i -> sum_j a[i-1][j-1] x_j.
Polynomial substitute_linear(const Polynomial& p,
                             const std::vector<std::vector<Rational>>& a);

/// Canonical text: terms leading-first as "c * x1^a1*x3^a3" joined by " + ".
/// Exponents are always written, zero exponents omitted; the zero polynomial is "0".
std::string to_string(const Polynomial& p);

/// Inverse of to_string. Throws std::invalid_argument on malformed input.
Polynomial parse_polynomial(std::string_view text, int num_vars);

}  // namespace sphcert
