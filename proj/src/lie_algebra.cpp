#include "sphcert/lie_algebra.hpp"

namespace sphcert {

namespace {

std::string rstr(const Rational& q) { return to_string(q); }

LieVector scaled_sum(const std::vector<LieVector>& vs, const std::vector<Rational>& coeffs, std::size_t dim) {
  LieVector out(dim);
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t i = 0; i < dim; ++i) out[i] += coeffs[a] * vs[a][i];
  return out;
}

bool is_zero_vector(const LieVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels,
                       std::vector<std::vector<LieVector>> structure)
    : name_(std::move(name)), labels_(std::move(labels)), structure_(std::move(structure)) {
  const std::size_t d = labels_.size();
  if (structure_.size() != d) throw std::invalid_argument("structure constants have wrong shape");
  for (const auto& row : structure_) {
    if (row.size() != d) throw std::invalid_argument("structure constants have wrong shape");
    for (const auto& v : row)
      if (v.size() != d) throw std::invalid_argument("structure constants have wrong shape");
  }
}

LieAlgebra LieAlgebra::from_matrices(std::string name, std::vector<std::string> labels,
                                     std::vector<Matrix> basis) {
  const std::size_t d = basis.size();
  if (labels.size() != d) throw std::invalid_argument("label count differs from basis size");
  if (d == 0) return LieAlgebra(std::move(name), {}, {});
  const std::size_t n = basis[0].rows();
  // Columns of a are the flattened basis matrices; coordinates solve the normal equations.
  Matrix a(n * n, d);
  for (std::size_t j = 0; j < d; ++j) {
    if (basis[j].rows() != n || basis[j].cols() != n) throw std::invalid_argument("basis matrices differ in size");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r * n + c, j) = basis[j](r, c);
  }
  const Matrix at = a.transpose();
  const Matrix normal_inv = inverse(at * a);  // throws for dependent matrices
  std::vector<std::vector<LieVector>> structure(d, std::vector<LieVector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix comm = basis[i] * basis[j] - basis[j] * basis[i];
      std::vector<Rational> flat(n * n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) flat[r * n + c] = comm(r, c);
      LieVector coords = normal_inv * (at * flat);
      if (a * coords != flat) throw std::invalid_argument("matrices are not closed under the commutator");
      structure[i][j] = std::move(coords);
    }
  LieAlgebra g(std::move(name), std::move(labels), std::move(structure));
  g.matrices_ = std::move(basis);
  return g;
}

void LieAlgebra::check(const LieVector& u) const {
  if (u.size() != dim())
    throw std::invalid_argument("vector of length " + std::to_string(u.size()) + " in algebra of dimension " +
                                std::to_string(dim()));
}

LieVector LieAlgebra::basis_vector(std::size_t i) const {
  LieVector v(dim());
  v.at(i) = 1;
  return v;
}

LieVector LieAlgebra::bracket(const LieVector& u, const LieVector& v) const {
  check(u);
  check(v);
  LieVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j] == 0) continue;
      const Rational c = u[i] * v[j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (structure_[i][j][k] != 0) out[k] += c * structure_[i][j][k];
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const LieVector& u) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const LieVector col = bracket(u, basis_vector(j));
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

std::string LieAlgebra::describe(const LieVector& u) const {
  check(u);
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += (u[i] == 1 ? std::string() : rstr(u[i]) + "*") + labels_[i];
  }
  return out.empty() ? "0" : out;
}

std::size_t so_index(int m, int i, int j) {
  if (i < 1 || j <= i || j > m) throw std::out_of_range("so(m) index out of range");
  std::size_t idx = 0;
  for (int a = 1; a < i; ++a) idx += static_cast<std::size_t>(m - a);
  return idx + static_cast<std::size_t>(j - i - 1);
}

LieAlgebra so_algebra(int m) {
  if (m < 2) throw std::invalid_argument("so(m) needs m >= 2");
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      Matrix e(m, m);
      e(i - 1, j - 1) = 1;
      e(j - 1, i - 1) = -1;
      basis.push_back(std::move(e));
      labels.push_back("E" + std::to_string(i) + std::to_string(j));
    }
  return LieAlgebra::from_matrices("so(" + std::to_string(m) + ")", std::move(labels), std::move(basis));
}

LieAlgebra su2_algebra() {
  std::vector<std::vector<LieVector>> c(3, std::vector<LieVector>(3, LieVector(3)));
  for (std::size_t a = 0; a < 3; ++a) {
    const std::size_t b = (a + 1) % 3, e = (a + 2) % 3;
    c[a][b][e] = 1;
    c[b][a][e] = -1;
  }
  return LieAlgebra("su(2)", {"e1", "e2", "e3"}, std::move(c));
}

LieAlgebra abelian_algebra(std::size_t d) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("a" + std::to_string(i + 1));
  return LieAlgebra("abelian(" + std::to_string(d) + ")", std::move(labels),
                    std::vector<std::vector<LieVector>>(d, std::vector<LieVector>(d, LieVector(d))));
}

Verdict check_antisymmetry(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      LieVector sum = g.structure(i, j);
      for (std::size_t k = 0; k < g.dim(); ++k) sum[k] += g.structure(j, i)[k];
      if (!is_zero_vector(sum))
        return Verdict::fail("[" + g.labels()[i] + ", " + g.labels()[j] + "] + [" + g.labels()[j] + ", " +
                             g.labels()[i] + "] = " + g.describe(sum));
    }
  return Verdict::pass();
}

Verdict check_jacobi(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto x = g.basis_vector(i), y = g.basis_vector(j), z = g.basis_vector(k);
        LieVector sum = g.bracket(x, g.bracket(y, z));
        const LieVector b = g.bracket(y, g.bracket(z, x));
        const LieVector c = g.bracket(z, g.bracket(x, y));
        for (std::size_t t = 0; t < d; ++t) sum[t] += b[t] + c[t];
        if (!is_zero_vector(sum))
          return Verdict::fail("Jacobi fails on (" + g.labels()[i] + ", " + g.labels()[j] + ", " + g.labels()[k] +
                               "): " + g.describe(sum));
      }
  return Verdict::pass();
}

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("bilinear form needs a square matrix");
}

Rational BilinearForm::operator()(const LieVector& u, const LieVector& v) const {
  return dot(u, gram_ * v);
}

BilinearForm trace_form(const LieAlgebra& g, const Rational& scale) {
  if (!g.matrices()) throw std::invalid_argument("trace form needs a matrix realization of " + g.name());
  const auto& mats = *g.matrices();
  Matrix gram(g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) gram(i, j) = scale * (mats[i] * mats[j]).trace();
  return BilinearForm(std::move(gram));
}

BilinearForm killing_form(const LieAlgebra& g) {
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < g.dim(); ++i) ads.push_back(g.ad(g.basis_vector(i)));
  Matrix gram(g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) gram(i, j) = (ads[i] * ads[j]).trace();
  return BilinearForm(std::move(gram));
}

BilinearForm default_form(const LieAlgebra& g) {
  if (g.matrices()) return trace_form(g, make_rational(-1, 2));
  return BilinearForm(Matrix::identity(g.dim()));
}

BilinearForm perturbed_form(const LieAlgebra& g) {
  if (g.dim() < 2) throw std::invalid_argument("perturbed form needs dimension >= 2");
  Matrix gram = default_form(g).gram();
  gram(0, 1) += make_rational(1, 2);
  gram(1, 0) += make_rational(1, 2);
  return BilinearForm(std::move(gram));
}

Verdict check_ad_invariance(const LieAlgebra& g, const BilinearForm& b) {
  if (b.dim() != g.dim()) throw std::invalid_argument("form and algebra dimensions differ");
  const std::size_t d = g.dim();
  for (std::size_t z = 0; z < d; ++z)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        const auto vz = g.basis_vector(z), vx = g.basis_vector(x), vy = g.basis_vector(y);
        const Rational defect = b(g.bracket(vz, vx), vy) + b(vx, g.bracket(vz, vy));
        if (defect != 0) {
          const auto& l = g.labels();
          return Verdict::fail("Z=" + l[z] + ", X=" + l[x] + ", Y=" + l[y] + ": B([Z,X],Y) + B(X,[Z,Y]) = " +
                               rstr(defect));
        }
      }
  return Verdict::pass();
}

Verdict check_positive_definite(const BilinearForm& b) {
  if (!b.gram().is_symmetric()) return Verdict::fail("form is not symmetric");
  const auto minors = leading_principal_minors(b.gram());
  for (std::size_t k = 0; k < minors.size(); ++k)
    if (minors[k] <= 0)
      return Verdict::fail("leading principal minor " + std::to_string(k + 1) + " = " + rstr(minors[k]));
  return Verdict::pass();
}

bool in_span(const std::vector<LieVector>& basis, const LieVector& v) {
  if (is_zero_vector(v)) return true;
  if (basis.empty()) return false;
  Matrix a(basis.size() + 1, v.size());
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) a(r, c) = basis[r][c];
  for (std::size_t c = 0; c < v.size(); ++c) a(basis.size(), c) = v[c];
  Matrix only_basis(basis.size(), v.size());
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) only_basis(r, c) = basis[r][c];
  return rank(a) == rank(only_basis);
}

Verdict check_subalgebra(const LieAlgebra& g, const std::vector<LieVector>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const LieVector br = g.bracket(basis[i], basis[j]);
      if (!in_span(basis, br))
        return Verdict::fail("[" + g.describe(basis[i]) + ", " + g.describe(basis[j]) + "] = " + g.describe(br) +
                             " leaves the span");
    }
  return Verdict::pass();
}

ReductiveDecomposition orthogonal_decomposition(const LieAlgebra& g, const std::vector<LieVector>& k_basis,
                                                const BilinearForm& b) {
  if (b.dim() != g.dim()) throw std::invalid_argument("form and algebra dimensions differ");
  if (const auto v = check_positive_definite(b); !v) throw std::invalid_argument("form is not positive definite: " + v.witness);
  if (const auto v = check_subalgebra(g, k_basis); !v) throw NotSubalgebraError(v.witness);
  // m = {v : B(k_i, v) = 0 for all i}
  Matrix constraints(k_basis.size(), g.dim());
  for (std::size_t r = 0; r < k_basis.size(); ++r) {
    const LieVector row = b.gram().transpose() * k_basis[r];
    for (std::size_t c = 0; c < g.dim(); ++c) constraints(r, c) = row[c];
  }
  ReductiveDecomposition dec;
  dec.k_basis = k_basis;
  dec.m_basis = kernel_basis(constraints);
  return dec;
}

Verdict check_reductive(const LieAlgebra& g, const ReductiveDecomposition& dec, const BilinearForm& b) {
  if (dec.k_basis.size() + dec.m_basis.size() != g.dim())
    return Verdict::fail("dim k + dim m = " + std::to_string(dec.k_basis.size() + dec.m_basis.size()) +
                         " != dim g = " + std::to_string(g.dim()));
  for (const auto& k : dec.k_basis)
    for (const auto& m : dec.m_basis) {
      if (b(k, m) != 0) return Verdict::fail("B(" + g.describe(k) + ", " + g.describe(m) + ") = " + rstr(b(k, m)));
      const LieVector br = g.bracket(k, m);
      if (!in_span(dec.m_basis, br))
        return Verdict::fail("[" + g.describe(k) + ", " + g.describe(m) + "] = " + g.describe(br) + " not in m");
    }
  return Verdict::pass();
}

LieVector project_m(const ReductiveDecomposition& dec, const BilinearForm& b, const LieVector& v) {
  const std::size_t n = dec.m_basis.size();
  if (n == 0) return LieVector(v.size());
  Matrix gram(n, n);
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = b(dec.m_basis[i], dec.m_basis[j]);
    rhs[i] = b(dec.m_basis[i], v);
  }
  return scaled_sum(dec.m_basis, solve(gram, rhs), v.size());
}

Verdict check_natural_reductivity(const LieAlgebra& g, const ReductiveDecomposition& dec,
                                  const BilinearForm& b) {
  const auto& mb = dec.m_basis;
  for (std::size_t z = 0; z < mb.size(); ++z)
    for (std::size_t x = 0; x < mb.size(); ++x)
      for (std::size_t y = 0; y < mb.size(); ++y) {
        const Rational defect = b(project_m(dec, b, g.bracket(mb[z], mb[x])), mb[y]) +
                                b(mb[x], project_m(dec, b, g.bracket(mb[z], mb[y])));
        if (defect != 0)
          return Verdict::fail("Z=" + g.describe(mb[z]) + ", X=" + g.describe(mb[x]) + ", Y=" + g.describe(mb[y]) +
                               ": B([Z,X]_m,Y) + B(X,[Z,Y]_m) = " + rstr(defect));
      }
  return Verdict::pass();
}

std::vector<LieVector> so_stabilizer_basis(int m) {
  const std::size_t d = static_cast<std::size_t>(m * (m - 1) / 2);
  std::vector<LieVector> basis;
  for (int i = 1; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      LieVector v(d);
      v[so_index(m, i, j)] = 1;
      basis.push_back(std::move(v));
    }
  return basis;
}

CasimirElement casimir_element(const BilinearForm& b, std::vector<LieVector> basis) {
  const std::size_t d = b.dim();
  if (basis.empty())
    for (std::size_t i = 0; i < d; ++i) {
      LieVector e(d);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  if (basis.size() != d) throw std::invalid_argument("Casimir element needs a full basis");
  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram(i, j) = b(basis[i], basis[j]);
  const Matrix inv = inverse(gram);  // std::domain_error when singular
  CasimirElement omega;
  for (std::size_t i = 0; i < d; ++i) omega.pairs.emplace_back(scaled_sum(basis, inv.row(i), d), basis[i]);
  return omega;
}

Verdict check_gram_consistency(const CasimirElement& omega, const BilinearForm& b) {
  for (std::size_t i = 0; i < omega.pairs.size(); ++i)
    for (std::size_t j = 0; j < omega.pairs.size(); ++j) {
      const Rational v = b(omega.pairs[i].first, omega.pairs[j].second);
      if (v != (i == j ? 1 : 0))
        return Verdict::fail("B(X_" + std::to_string(i + 1) + "^*, X_" + std::to_string(j + 1) + ") = " + rstr(v));
    }
  return Verdict::pass();
}

}  // namespace sphcert
