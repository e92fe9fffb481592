#include "sphcert/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sphcert {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> Matrix::col(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += other.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + other * Rational(-1); }

Matrix Matrix::operator*(const Rational& c) const {
  Matrix s = *this;
  for (auto& x : s.data_) x *= c;
  return s;
}

std::vector<Rational> Matrix::operator*(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Rational Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Rational t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

// Gauss-Jordan over Q on [a | b]; returns pivot columns of a. Row operations are
// applied to b as well.
std::vector<std::size_t> row_reduce(Matrix& a, Matrix* b) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      if (b)
        for (std::size_t j = 0; j < b->cols(); ++j) std::swap((*b)(p, j), (*b)(r, j));
    }
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    if (b)
      for (std::size_t j = 0; j < b->cols(); ++j) (*b)(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
      if (b)
        for (std::size_t j = 0; j < b->cols(); ++j) (*b)(i, j) -= f * (*b)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix m = a;
  Rational det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return row_reduce(m, nullptr).size();
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Matrix m = a;
  Matrix inv = Matrix::identity(a.rows());
  if (row_reduce(m, &inv).size() != a.rows()) throw std::domain_error("matrix is singular");
  return inv;
}

std::vector<Rational> solve(const Matrix& a, const std::vector<Rational>& b) {
  Matrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  Matrix m = a;
  if (a.rows() != a.cols() || b.size() != a.rows()) throw std::invalid_argument("solve shape mismatch");
  if (row_reduce(m, &rhs).size() != a.rows()) throw std::domain_error("matrix is singular");
  return rhs.col(0);
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  // Clear denominators row by row.
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l(1);
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }

  // Bareiss elimination to row echelon form.
  std::vector<std::size_t> pivots;
  Integer prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }

  // Back substitution: one kernel vector per free column.
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols);
    x[free] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t pc = pivots[k];
      Rational s(0);
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (m[k][j] != 0 && x[j] != 0) s += Rational(m[k][j]) * x[j];
      x[pc] = -s / Rational(m[k][pc]);
    }
    // Scale to coprime integers.
    Integer l(1), g(0);
    for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    for (auto& v : x) {
      v *= l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
    }
    for (auto& v : x) v /= g;
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Rational> leading_principal_minors(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("minors of non-square matrix");
  std::vector<Rational> minors;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    Matrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(i, j);
    minors.push_back(determinant(sub));
  }
  return minors;
}

bool is_positive_definite(const Matrix& a) {
  if (!a.is_symmetric()) return false;
  for (const auto& d : leading_principal_minors(a))
    if (d <= 0) return false;
  return true;
}

Rational dot(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("dot product length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace sphcert
