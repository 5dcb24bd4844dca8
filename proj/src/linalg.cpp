#include "wittforge/linalg.hpp"

#include <utility>

#include "wittforge/errors.hpp"

namespace wittforge::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Matrix::append_row(const std::vector<Rational>& row) {
  if (row.size() != cols_) throw ValidationError("row length does not match matrix width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix shapes do not compose");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw ValidationError("vstack width mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
  return out;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
  std::size_t lead = 0;
  std::vector<std::size_t> piv;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t r = lead;
    while (r < m.rows() && m(r, col) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(lead, j));
    const Rational p = m(lead, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(lead, j) /= p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(lead, j);
    }
    piv.push_back(col);
    ++lead;
  }
  Matrix out(0, m.cols());
  for (std::size_t i = 0; i < lead; ++i) out.append_row(m.row(i));
  if (pivots) *pivots = std::move(piv);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = col;
    while (r < n && m(r, col) == 0) ++r;
    if (r == n) return 0;
    if (r != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(r, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(0, 0);
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  Matrix r = rref(aug, &piv);
  if (r.rows() < n || piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

Matrix nullspace(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  Matrix out(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
    out.append_row(v);
  }
  return out;
}

std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw ValidationError("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  Matrix r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, m.cols());
  return x;
}

Matrix span(const Matrix& rows) { return rref(rows); }

Matrix subspace_sum(const Matrix& a, const Matrix& b) { return rref(vstack(a, b)); }

Matrix subspace_intersection(const Matrix& a, const Matrix& b) {
  // x = sum u_i a_i = sum v_j b_j  <=>  [a; -b]^T (u, v) = 0.
  if (a.rows() == 0 || b.rows() == 0) return Matrix(0, a.cols());
  Matrix neg_b = b;
  for (std::size_t i = 0; i < neg_b.rows(); ++i)
    for (std::size_t j = 0; j < neg_b.cols(); ++j) neg_b(i, j) = -neg_b(i, j);
  Matrix ker = nullspace(transpose(vstack(a, neg_b)));
  Matrix out(0, a.cols());
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    std::vector<Rational> v(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) v[j] += ker(k, i) * a(i, j);
    out.append_row(v);
  }
  return rref(out);
}

bool subspace_contains(const Matrix& space, const Matrix& vectors) {
  return rank(vstack(space, vectors)) == rank(space);
}

Matrix coordinates_in(const Matrix& basis, const Matrix& vectors) {
  Matrix bt = transpose(basis);
  Matrix out(0, basis.rows());
  for (std::size_t i = 0; i < vectors.rows(); ++i) {
    auto x = solve(bt, vectors.row(i));
    if (!x) throw ValidationError("vector does not lie in the given span");
    out.append_row(*x);
  }
  return out;
}

}  // namespace wittforge::linalg
