#pragma once

// Lie algebra elements realized as vector fields on spheres, the projected
// Casimir operator Omega+ = sum_j (X_j^*)+ X_j+, and exact checks of
// Omega+ = lap_S and of its commutation with the realized fields.
//
// Sign convention: E_ij in so(m) generates the flow t -> exp(t E_ij) p, whose
// velocity field is x_j d_i - x_i d_j = -X_ij. Squared sums do not see it.

#include "sphcert/lie_algebra.hpp"
#include "sphcert/rational_function.hpp"
#include "sphcert/sphere_ops.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace sphcert {

/// Linear map from an algebra to derivations of the sphere ring, fixed by the
/// images of the basis vectors.
class Realization {
 public:
  Realization(std::size_t algebra_dim, int ambient_dim, std::vector<FieldCombination> images);

  int ambient_dim() const { return ambient_dim_; }
  std::size_t algebra_dim() const { return images_.size(); }
  FieldCombination realize(const LieVector& u) const;

 private:
  int ambient_dim_;
  std::vector<FieldCombination> images_;
};

/// E_ij -> -X_ij.
FieldCombination realize_so_field(int m, int i, int j);
/// The natural action of so(m) on S^(m-1).
Realization so_realization(int m);

/// V_i = X12 + X34, V_j = X13 - X24, V_k = X14 + X23 on S^3.
std::array<FieldCombination, 3> su2_fields();
/// su(2) acting on S^3 = SU(2): e_a -> V_a / 2, so [e_a+, e_b+] = -[e_a, e_b]+.
Realization su2_realization();
/// B = 1/4 I on su(2): the normalization under which Omega+ = lap_{S^3}.
BilinearForm su2_sphere_form();

class ProjectedCasimir {
 public:
  ProjectedCasimir(const CasimirElement& omega, const Realization& realization);

  const std::vector<std::pair<FieldCombination, FieldCombination>>& pairs() const { return pairs_; }
  SphereRationalFunction apply(const SphereRationalFunction& f) const;

 private:
  std::vector<std::pair<FieldCombination, FieldCombination>> pairs_;
};

/// Restrictions of the harmonic basis of every degree <= max_degree, followed
/// by `random_count` deterministic random rational functions.
std::vector<SphereRationalFunction> identity_test_suite(int m, int max_degree = 4, int random_count = 20,
                                                        std::uint64_t seed = 7);

/// realize([X, Y]) == -[realize(X), realize(Y)] on every function, all basis pairs.
Verdict check_antihomomorphism(const LieAlgebra& g, const Realization& r,
                               const std::vector<SphereRationalFunction>& functions);

/// Omega+ f == lap_S f for every f.
Verdict check_casimir_equals_laplacian(const ProjectedCasimir& omega,
                                       const std::vector<SphereRationalFunction>& functions);

/// The constant c with Omega+ f == c lap_S f on every f, if one exists.
std::optional<Rational> casimir_laplacian_factor(const ProjectedCasimir& omega,
                                                 const std::vector<SphereRationalFunction>& functions);

/// Two operators agree on every f.
Verdict check_same_operator(const ProjectedCasimir& a, const ProjectedCasimir& b,
                            const std::vector<SphereRationalFunction>& functions);

/// X+ Omega+ f == Omega+ X+ f for every field and every f.
Verdict check_casimir_commutation(const ProjectedCasimir& omega, const std::vector<FieldCombination>& fields,
                                  const std::vector<SphereRationalFunction>& functions);

/// Omega+ for so(m) under the default form equals lap_S on the suite.
Verdict verify_lap_eq_casimir(int m, const std::vector<SphereRationalFunction>& functions);

struct CommutationResult {
  Verdict m_part;    // X in m for so(m) / so(m-1)
  Verdict all_of_g;  // every basis element of so(m)
};
CommutationResult verify_commutation_theorem(int m, const std::vector<SphereRationalFunction>& functions);

/// sum_a V_a^2 == sum_{i<j<=4} X_ij^2 on every f.
Verdict verify_su2_group_case(const std::vector<SphereRationalFunction>& functions);
SphereRationalFunction su2_sum_of_squares(const SphereRationalFunction& f);

/// A random invertible change of basis of so(m) (deterministic in seed).
std::vector<LieVector> random_basis(std::size_t dim, std::uint64_t seed);

}  // namespace sphcert
