#include <doctest.h>

#include "wittforge/linalg.hpp"

using namespace wittforge;
using namespace wittforge::linalg;

namespace {
Matrix m(const std::vector<std::vector<Rational>>& rows) { return Matrix::from_rows(rows, rows.empty() ? 0 : rows[0].size()); }
}

TEST_CASE("rank and determinant") {
  const Matrix a = m({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(rank(a) == 2);
  CHECK(determinant(a) == 0);
  CHECK(determinant(m({{2, 1}, {1, 1}})) == 1);
  CHECK(nullspace(a).rows() == 1);
  CHECK(a * transpose(nullspace(a)) == Matrix(3, 1));
}

TEST_CASE("inverse") {
  const Matrix a = m({{2, 1}, {1, 1}});
  const auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(*inv * a == Matrix::identity(2));
  CHECK_FALSE(inverse(m({{1, 1}, {1, 1}})));
  CHECK(inverse(Matrix(0, 0))->rows() == 0);
}

TEST_CASE("solve") {
  const Matrix a = m({{1, 1}, {1, -1}});
  const auto x = solve(a, {Rational(3), Rational(1)});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve(m({{1, 1}, {1, 1}}), {Rational(1), Rational(2)}));
}

TEST_CASE("subspaces") {
  const Matrix x = m({{1, 0, 0}});
  const Matrix y = m({{0, 1, 0}});
  const Matrix xy = m({{1, 1, 0}});
  CHECK(subspace_sum(x, y).rows() == 2);
  CHECK(subspace_intersection(x, y).rows() == 0);
  CHECK(subspace_intersection(subspace_sum(x, y), xy) == span(xy));
  CHECK(subspace_contains(subspace_sum(x, y), xy));
  CHECK_FALSE(subspace_contains(x, y));
  const Matrix c = coordinates_in(subspace_sum(x, y), m({{2, 3, 0}}));
  CHECK(c == m({{2, 3}}));
}

TEST_CASE("kronecker") {
  const Matrix k = kronecker(m({{1, 2}}), m({{1}, {3}}));
  CHECK(k == m({{1, 2}, {3, 6}}));
}
