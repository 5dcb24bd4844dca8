#pragma once

// Dense exact linear algebra over Q.

#include <cstddef>
#include <optional>
#include <vector>

#include "wittforge/ring.hpp"

namespace wittforge::linalg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Rational> row(std::size_t r) const;
  void append_row(const std::vector<Rational>& row);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix kronecker(const Matrix& a, const Matrix& b);
/// Stacks the rows of b under the rows of a.
Matrix vstack(const Matrix& a, const Matrix& b);

/// Reduced row echelon form; zero rows dropped. Pivot columns optionally reported.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
/// Basis (as rows) of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
/// Some x with m x = b, if one exists.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);

/// Subspaces of Q^n stored as canonical RREF row bases.
Matrix span(const Matrix& rows);
Matrix subspace_sum(const Matrix& a, const Matrix& b);
Matrix subspace_intersection(const Matrix& a, const Matrix& b);
bool subspace_contains(const Matrix& space, const Matrix& vectors);
/// Coordinates of each row of `vectors` in the row basis `basis` (must lie in its span).
Matrix coordinates_in(const Matrix& basis, const Matrix& vectors);

}  // namespace wittforge::linalg
