#include "sphcert/homogeneous.hpp"

#include <random>

#include "sphcert/sphere_points.hpp"

namespace sphcert {

Realization::Realization(std::size_t algebra_dim, int ambient_dim, std::vector<FieldCombination> images)
    : ambient_dim_(ambient_dim), images_(std::move(images)) {
  if (images_.size() != algebra_dim) throw std::invalid_argument("realization needs one image per basis vector");
  for (const auto& f : images_)
    if (f.ambient_dim() != ambient_dim) throw std::invalid_argument("realization images live on different spheres");
}

FieldCombination Realization::realize(const LieVector& u) const {
  if (u.size() != images_.size()) throw std::invalid_argument("vector does not belong to the realized algebra");
  FieldCombination out(ambient_dim_);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) out += images_[i] * u[i];
  return out;
}

FieldCombination realize_so_field(int m, int i, int j) {
  return FieldCombination(m, RotationField(i, j), Rational(-1));
}

Realization so_realization(int m) {
  std::vector<FieldCombination> images;
  for (const auto& x : rotation_fields(m)) images.push_back(realize_so_field(m, x.i, x.j));
  const std::size_t dim = images.size();
  return Realization(dim, m, std::move(images));
}

std::array<FieldCombination, 3> su2_fields() {
  FieldCombination vi(4), vj(4), vk(4);
  vi.add(RotationField(1, 2), Rational(1)).add(RotationField(3, 4), Rational(1));
  vj.add(RotationField(1, 3), Rational(1)).add(RotationField(2, 4), Rational(-1));
  vk.add(RotationField(1, 4), Rational(1)).add(RotationField(2, 3), Rational(1));
  return {vi, vj, vk};
}

Realization su2_realization() {
  const auto v = su2_fields();
  const Rational half = make_rational(1, 2);
  return Realization(3, 4, {v[0] * half, v[1] * half, v[2] * half});
}

BilinearForm su2_sphere_form() { return BilinearForm(Matrix::identity(3) * make_rational(1, 4)); }

ProjectedCasimir::ProjectedCasimir(const CasimirElement& omega, const Realization& realization) {
  for (const auto& [dual, basis] : omega.pairs)
    pairs_.emplace_back(realization.realize(dual), realization.realize(basis));
}

SphereRationalFunction ProjectedCasimir::apply(const SphereRationalFunction& f) const {
  SphereRationalFunction acc(f.ambient_dim());
  for (const auto& [dual, basis] : pairs_) acc += dual.apply(basis.apply(f));
  return acc;
}

std::vector<SphereRationalFunction> identity_test_suite(int m, int max_degree, int random_count,
                                                        std::uint64_t seed) {
  std::vector<SphereRationalFunction> suite;
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& p : generate_harmonic_basis(m, d)) suite.emplace_back(SpherePolynomial(p));

  std::mt19937_64 rng(seed);
  auto small = [&rng](long range) { return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range; };
  for (int n = 0; n < random_count; ++n) {
    Polynomial num(m);
    for (int t = 0; t < 4; ++t) {
      Monomial mon;
      const int deg = static_cast<int>(rng() % 4);
      for (int e = 0; e < deg; ++e) {
        const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(m)) + 1;
        mon.set_exponent(v, mon.exponent(v) + 1);
      }
      num.add_term(mon, make_rational(small(4), 1 + static_cast<long>(rng() % 3)));
    }
    // c + <a, x> with c > |a|_1 never vanishes on the sphere.
    Polynomial den(m);
    long l1 = 0;
    for (int v = 1; v <= m; ++v) {
      const long a = small(2);
      l1 += std::labs(a);
      den += Polynomial::variable(m, v) * make_rational(a);
    }
    den += Polynomial::constant(m, make_rational(l1 + 1));
    suite.emplace_back(SpherePolynomial(num), SpherePolynomial(den), 1 + static_cast<unsigned>(n % 2));
  }
  return suite;
}

Verdict check_antihomomorphism(const LieAlgebra& g, const Realization& r,
                               const std::vector<SphereRationalFunction>& functions) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const auto xi = r.realize(g.basis_vector(i)), xj = r.realize(g.basis_vector(j));
      const auto br = r.realize(g.bracket(g.basis_vector(i), g.basis_vector(j)));
      for (std::size_t n = 0; n < functions.size(); ++n) {
        const auto& f = functions[n];
        if (xi.apply(xj.apply(f)) - xj.apply(xi.apply(f)) != -br.apply(f))
          return Verdict::fail("[" + g.labels()[i] + "+, " + g.labels()[j] + "+] != -[" + g.labels()[i] + ", " +
                               g.labels()[j] + "]+ on test function " + std::to_string(n));
      }
    }
  return Verdict::pass();
}

Verdict check_casimir_equals_laplacian(const ProjectedCasimir& omega,
                                       const std::vector<SphereRationalFunction>& functions) {
  for (std::size_t n = 0; n < functions.size(); ++n)
    if (omega.apply(functions[n]) != laplace_sphere(functions[n]))
      return Verdict::fail("Omega+ f != lap_S f for test function " + std::to_string(n) + ": f = " +
                           to_string(functions[n]));
  return Verdict::pass();
}

std::optional<Rational> casimir_laplacian_factor(const ProjectedCasimir& omega,
                                                 const std::vector<SphereRationalFunction>& functions) {
  std::optional<Rational> factor;
  for (const auto& f : functions) {
    const auto lap = laplace_sphere(f);
    const auto cas = omega.apply(f);
    if (!factor) {
      if (lap.is_zero()) {
        if (!cas.is_zero()) return std::nullopt;
        continue;
      }
      // Read the ratio off at an exact point where lap f does not vanish.
      SpherePointSampler sampler(f.ambient_dim(), 1);
      for (int tries = 0; tries < 64 && !factor; ++tries) {
        const auto pt = sampler.next();
        try {
          const Rational l = lap.evaluate(pt);
          if (l != 0) factor = cas.evaluate(pt) / l;
        } catch (const std::domain_error&) {
        }
      }
      if (!factor) return std::nullopt;
    }
    if (cas != lap * *factor) return std::nullopt;
  }
  return factor;
}

Verdict check_same_operator(const ProjectedCasimir& a, const ProjectedCasimir& b,
                            const std::vector<SphereRationalFunction>& functions) {
  for (std::size_t n = 0; n < functions.size(); ++n)
    if (a.apply(functions[n]) != b.apply(functions[n]))
      return Verdict::fail("operators differ on test function " + std::to_string(n));
  return Verdict::pass();
}

Verdict check_casimir_commutation(const ProjectedCasimir& omega, const std::vector<FieldCombination>& fields,
                                  const std::vector<SphereRationalFunction>& functions) {
  for (const auto& x : fields)
    for (std::size_t n = 0; n < functions.size(); ++n) {
      const auto& f = functions[n];
      if (x.apply(omega.apply(f)) != omega.apply(x.apply(f)))
        return Verdict::fail("[" + to_string(x) + ", Omega+] != 0 on test function " + std::to_string(n));
    }
  return Verdict::pass();
}

Verdict verify_lap_eq_casimir(int m, const std::vector<SphereRationalFunction>& functions) {
  const LieAlgebra g = so_algebra(m);
  const ProjectedCasimir omega(casimir_element(default_form(g)), so_realization(m));
  return check_casimir_equals_laplacian(omega, functions);
}

CommutationResult verify_commutation_theorem(int m, const std::vector<SphereRationalFunction>& functions) {
  const LieAlgebra g = so_algebra(m);
  const BilinearForm b = default_form(g);
  const Realization r = so_realization(m);
  const ProjectedCasimir omega(casimir_element(b), r);
  const auto dec = orthogonal_decomposition(g, so_stabilizer_basis(m), b);
  std::vector<FieldCombination> m_fields, g_fields;
  for (const auto& v : dec.m_basis) m_fields.push_back(r.realize(v));
  for (std::size_t i = 0; i < g.dim(); ++i) g_fields.push_back(r.realize(g.basis_vector(i)));
  return {check_casimir_commutation(omega, m_fields, functions),
          check_casimir_commutation(omega, g_fields, functions)};
}

SphereRationalFunction su2_sum_of_squares(const SphereRationalFunction& f) {
  SphereRationalFunction acc(f.ambient_dim());
  for (const auto& v : su2_fields()) acc += v.apply(v.apply(f));
  return acc;
}

Verdict verify_su2_group_case(const std::vector<SphereRationalFunction>& functions) {
  for (std::size_t n = 0; n < functions.size(); ++n)
    if (su2_sum_of_squares(functions[n]) != laplace_sphere(functions[n]))
      return Verdict::fail("sum V_a^2 f != sum X_ij^2 f for test function " + std::to_string(n));
  return Verdict::pass();
}

std::vector<LieVector> random_basis(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    Matrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        a(i, j) = make_rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    if (determinant(a) == 0) continue;
    std::vector<LieVector> basis;
    for (std::size_t i = 0; i < dim; ++i) basis.push_back(a.row(i));
    return basis;
  }
}

}  // namespace sphcert
