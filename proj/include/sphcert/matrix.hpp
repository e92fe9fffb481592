#pragma once

// Dense exact matrices over Q and the few elimination routines the engine
// needs: determinants, inverses, ranks and kernels.

#include "sphcert/rational.hpp"

#include <cstddef>
#include <vector>

namespace sphcert {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> col(std::size_t c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Rational& c) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;

  bool operator==(const Matrix& other) const = default;

  Rational trace() const;
  bool is_symmetric() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Throws std::domain_error when a is singular.
Matrix inverse(const Matrix& a);
/// Solves a x = b for square nonsingular a.
std::vector<Rational> solve(const Matrix& a, const std::vector<Rational>& b);

/// Basis of {x : a x = 0}. Rows are first scaled to integers, then reduced by
/// fraction-free (Bareiss) elimination. Each returned vector has coprime
/// integer entries and is indexed by a free column, in increasing order.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& a);

/// det of the top-left k x k blocks, k = 1..n.
std::vector<Rational> leading_principal_minors(const Matrix& a);
/// Sylvester's criterion; requires a symmetric.
bool is_positive_definite(const Matrix& a);

Rational dot(const std::vector<Rational>& u, const std::vector<Rational>& v);

}  // namespace sphcert
