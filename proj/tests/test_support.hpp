#pragma once

// Shared generators and independent numeric oracles for the test suites.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "sphcert/polynomial.hpp"
#include "sphcert/rational_function.hpp"
#include "sphcert/sphere_ops.hpp"

namespace sphcert::testing {

inline Rational small_rational(std::mt19937_64& rng, int max_num = 5, int max_den = 3) {
  const long num = static_cast<long>(rng() % (2 * max_num + 1)) - max_num;
  const long den = static_cast<long>(rng() % max_den) + 1;
  return make_rational(num, den);
}

inline Polynomial random_polynomial(int m, int max_degree, std::mt19937_64& rng, int num_terms = 6) {
  Polynomial p(m);
  for (int t = 0; t < num_terms; ++t) {
    Monomial mon;
    const int deg = static_cast<int>(rng() % (max_degree + 1));
    for (int d = 0; d < deg; ++d) {
      const int v = static_cast<int>(rng() % m) + 1;
      mon.set_exponent(v, mon.exponent(v) + 1);
    }
    p.add_term(mon, small_rational(rng));
  }
  return p;
}

inline Polynomial random_homogeneous(int m, int degree, std::mt19937_64& rng, int num_terms = 5) {
  Polynomial p(m);
  for (int t = 0; t < num_terms; ++t) {
    Monomial mon;
    for (int d = 0; d < degree; ++d) {
      const int v = static_cast<int>(rng() % m) + 1;
      mon.set_exponent(v, mon.exponent(v) + 1);
    }
    p.add_term(mon, small_rational(rng));
  }
  return p;
}

/// A denominator c + <a, x> with c > |a|_1, hence positive on the sphere.
inline SpherePolynomial safe_linear_denominator(int m, std::mt19937_64& rng) {
  Polynomial q(m);
  long l1 = 0;
  for (int v = 1; v <= m; ++v) {
    const long a = static_cast<long>(rng() % 5) - 2;
    l1 += std::labs(a);
    q += Polynomial::variable(m, v) * make_rational(a);
  }
  q += Polynomial::constant(m, make_rational(l1 + 1 + static_cast<long>(rng() % 3)));
  return SpherePolynomial(q);
}

inline SphereRationalFunction random_rational_function(int m, std::mt19937_64& rng, int max_degree = 3) {
  SpherePolynomial num(random_polynomial(m, max_degree, rng, 4));
  SphereRationalFunction f(num, safe_linear_denominator(m, rng), 1 + static_cast<unsigned>(rng() % 2));
  if (rng() % 2 == 0) f = f * SphereRationalFunction(SpherePolynomial::constant(m, Rational(1)),
                                                     safe_linear_denominator(m, rng), 1);
  return f;
}

inline std::vector<double> random_sphere_point(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> p(m);
  double n2 = 0;
  for (auto& x : p) {
    x = normal(rng);
    n2 += x * x;
  }
  for (auto& x : p) x /= std::sqrt(n2);
  return p;
}

/// d/dt f(R_ij(t) p) at t = 0, by a fourth-order central difference along the
/// exact rotation flow of X_ij = x_i d_j - x_j d_i (dx_j/dt = x_i, dx_i/dt = -x_j).
template <class F>
double flow_derivative(const F& f, const RotationField& x, const std::vector<double>& p, double h = 1e-3) {
  auto rotated = [&](double t) {
    std::vector<double> q = p;
    const double c = std::cos(t), s = std::sin(t);
    q[x.i - 1] = c * p[x.i - 1] - s * p[x.j - 1];
    q[x.j - 1] = s * p[x.i - 1] + c * p[x.j - 1];
    return f(q);
  };
  return (-rotated(2 * h) + 8 * rotated(h) - 8 * rotated(-h) + rotated(-2 * h)) / (12 * h);
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

}  // namespace sphcert::testing
