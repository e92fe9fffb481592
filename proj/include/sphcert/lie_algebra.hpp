#pragma once

// Finite-dimensional real Lie algebras given by exact structure constants,
// invariant bilinear forms on them, reductive decompositions g = k + m and
// Casimir elements.

#include "sphcert/matrix.hpp"
#include "sphcert/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphcert {

/// Coordinates of a Lie algebra element in the algebra's basis.
using LieVector = std::vector<Rational>;

/// Outcome of an exact identity check; `witness` names a failing instance.
struct Verdict {
  bool holds = true;
  std::string witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string w) { return {false, std::move(w)}; }
  explicit operator bool() const { return holds; }
};

class LieAlgebra {
 public:
  /// structure[i][j] holds the coordinates of [X_i, X_j].
  LieAlgebra(std::string name, std::vector<std::string> labels,
             std::vector<std::vector<LieVector>> structure);

  /// Structure constants from commutators of linearly independent matrices.
  static LieAlgebra from_matrices(std::string name, std::vector<std::string> labels,
                                  std::vector<Matrix> basis);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const LieVector& structure(std::size_t i, std::size_t j) const { return structure_[i][j]; }
  /// Matrix realization, when the algebra was built from one.
  const std::optional<std::vector<Matrix>>& matrices() const { return matrices_; }

  LieVector basis_vector(std::size_t i) const;
  LieVector zero() const { return LieVector(dim()); }
  LieVector bracket(const LieVector& u, const LieVector& v) const;
  /// Matrix of ad(u) acting on coordinate columns.
  Matrix ad(const LieVector& u) const;
  std::string describe(const LieVector& u) const;

 private:
  void check(const LieVector& u) const;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<LieVector>> structure_;
  std::optional<std::vector<Matrix>> matrices_;
};

/// so(m) with basis E_ij = e_i e_j^T - e_j e_i^T, i < j, in lexicographic order.
LieAlgebra so_algebra(int m);
/// Index of E_ij in the so(m) basis.
std::size_t so_index(int m, int i, int j);
/// su(2) as a real algebra: [e1, e2] = e3 and cyclic.
LieAlgebra su2_algebra();
LieAlgebra abelian_algebra(std::size_t d);

Verdict check_antisymmetry(const LieAlgebra& g);
Verdict check_jacobi(const LieAlgebra& g);

class BilinearForm {
 public:
  explicit BilinearForm(Matrix gram);
  const Matrix& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }
  Rational operator()(const LieVector& u, const LieVector& v) const;
  BilinearForm scaled(const Rational& c) const { return BilinearForm(gram_ * c); }

 private:
  Matrix gram_;
};

/// scale * tr(XY); needs a matrix realization.
BilinearForm trace_form(const LieAlgebra& g, const Rational& scale);
/// tr(ad X ad Y).
BilinearForm killing_form(const LieAlgebra& g);
/// -1/2 tr(XY) for matrix algebras (orthonormal E_ij on so(m)); the identity
/// Gram matrix otherwise.
BilinearForm default_form(const LieAlgebra& g);
/// default_form with B(X_1, X_2) = B(X_2, X_1) raised by 1/2: still symmetric
/// positive definite for the shipped algebras, but not ad-invariant.
BilinearForm perturbed_form(const LieAlgebra& g);

/// B([Z, X], Y) + B(X, [Z, Y]) == 0 for all basis triples.
Verdict check_ad_invariance(const LieAlgebra& g, const BilinearForm& b);
/// Symmetry plus positive leading principal minors.
Verdict check_positive_definite(const BilinearForm& b);

class NotSubalgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Verdict check_subalgebra(const LieAlgebra& g, const std::vector<LieVector>& basis);
bool in_span(const std::vector<LieVector>& basis, const LieVector& v);

struct ReductiveDecomposition {
  std::vector<LieVector> k_basis;
  std::vector<LieVector> m_basis;
};

/// m = k^perp with respect to b; throws NotSubalgebraError when k is not
/// closed under the bracket and std::invalid_argument when b is not positive definite.
ReductiveDecomposition orthogonal_decomposition(const LieAlgebra& g, const std::vector<LieVector>& k_basis,
                                                const BilinearForm& b);

/// B(k, m) = 0, [k, m] in m, dim k + dim m = dim g.
Verdict check_reductive(const LieAlgebra& g, const ReductiveDecomposition& dec, const BilinearForm& b);

/// B-orthogonal projection of v onto m.
LieVector project_m(const ReductiveDecomposition& dec, const BilinearForm& b, const LieVector& v);

/// B([Z, X]_m, Y) + B(X, [Z, Y]_m) == 0 for all m-basis triples.
Verdict check_natural_reductivity(const LieAlgebra& g, const ReductiveDecomposition& dec,
                                  const BilinearForm& b);

/// Basis of so(m-1) inside so(m): the E_ij with j < m (fixing e_m).
std::vector<LieVector> so_stabilizer_basis(int m);

/// Omega = sum_j X_j^* X_j with B(X_i^*, X_j) = delta_ij.
struct CasimirElement {
  std::vector<std::pair<LieVector, LieVector>> pairs;  // (dual, basis)
};

/// Uses the standard basis when `basis` is empty. Throws std::domain_error
/// when b is singular on the basis.
CasimirElement casimir_element(const BilinearForm& b, std::vector<LieVector> basis = {});
Verdict check_gram_consistency(const CasimirElement& omega, const BilinearForm& b);

}  // namespace sphcert
